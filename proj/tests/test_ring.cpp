// Copyright 2026 The gcdgraph Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numeric>
#include <set>

#include "corpus.hpp"
#include "gcdgraph/ring.hpp"
#include "gcdgraph/ring_spec.hpp"

using namespace gcdgraph;

namespace {

// Units by definition: multiplication by a is a bijection of R.
bool unit_by_injectivity(const Ring& r, Index a) {
  std::vector<bool> hit(r.size(), false);
  for (Index b = 0; b < r.size(); ++b) {
    const Index c = r.mul_index(a, b);
    if (hit[c]) return false;
    hit[c] = true;
  }
  return true;
}

}  // namespace

TEST_CASE("Z/n arithmetic matches machine integers") {
  for (Coeff n : {2, 6, 12, 31, 64}) {
    const Ring r = Ring::integers_mod(n);
    CHECK(r.size() == static_cast<std::size_t>(n));
    CHECK(r.characteristic() == static_cast<std::uint64_t>(n));
    for (Coeff a = 0; a < n; ++a) {
      for (Coeff b = 0; b < n; ++b) {
        const Element ea = r.from_integer(a);
        const Element eb = r.from_integer(b);
        CHECK(r.add(ea, eb) == r.from_integer((a + b) % n));
        CHECK(r.mul(ea, eb) == r.from_integer(a * b % n));
        CHECK(r.sub(ea, eb) == r.from_integer(((a - b) % n + n) % n));
      }
    }
    CHECK(r.from_integer(-1) == r.from_integer(n - 1));
  }
}

TEST_CASE("element indices follow lexicographic coefficient order") {
  const Ring r = parse_ring_spec("F3[x]/(x^2) x Z/2");
  std::vector<std::vector<std::vector<Coeff>>> coeffs;
  for (Index i = 0; i < r.size(); ++i) coeffs.push_back(r.coefficients(r.element(i)));
  CHECK(std::is_sorted(coeffs.begin(), coeffs.end()));
  CHECK(to_string(r, r.one()) == "[[1,0],[1]]");
}

TEST_CASE("F4 has the expected multiplicative structure") {
  const Ring f4 = parse_ring_spec("F4");
  CHECK(f4.size() == 4);
  CHECK(f4.characteristic() == 2);
  CHECK(f4.units().size() == 3);
  const Element a = parse_element(f4, "a");
  // a^2 = a + 1 over F2, so a^3 = 1.
  CHECK(f4.mul(a, a) == f4.add(a, f4.one()));
  CHECK(f4.mul(f4.mul(a, a), a) == f4.one());
}

TEST_CASE("GR(4,2) is local with residue field F4") {
  const Ring r = parse_ring_spec("GR(4,2)");
  CHECK(r.size() == 16);
  CHECK(r.characteristic() == 4);
  const auto& lf = local_decomposition(r);
  REQUIRE(lf.size() == 1);
  CHECK(lf[0].residue_field_size == 4);
  CHECK(lf[0].maximal_ideal.size() == 4);
  CHECK(euler_phi(r) == 12);
  CHECK(moebius(r) == 0);
}

TEST_CASE("unit detection agrees with the injectivity definition") {
  for (const auto& spec : testing::corpus_rings(testing::small_corpus())) {
    const Ring r = parse_ring_spec(spec);
    for (Index a = 0; a < r.size(); ++a) {
      CHECK_MESSAGE(r.is_unit_index(a) == unit_by_injectivity(r, a), spec);
    }
  }
}

TEST_CASE("idempotents and local factors") {
  const Ring z30 = Ring::integers_mod(30);
  CHECK(idempotents(z30).size() == 8);
  CHECK(local_decomposition(z30).size() == 3);
  CHECK(moebius(z30) == -1);
  CHECK(euler_phi(z30) == 8);

  const Ring z12 = Ring::integers_mod(12);
  CHECK(local_decomposition(z12).size() == 2);
  CHECK(moebius(z12) == 0);

  const Ring fig = parse_ring_spec("F3[x]/(x^2) x Z/2");
  CHECK(euler_phi(fig) == 6);
  CHECK(moebius(fig) == 0);
  const Ring f9 = parse_ring_spec("F9");
  CHECK(moebius(f9) == -1);
  CHECK(moebius(parse_ring_spec("F4 x F9")) == 1);

  // Primitive idempotents are orthogonal and sum to 1.
  for (const auto& spec : testing::corpus_rings(testing::small_corpus())) {
    const Ring r = parse_ring_spec(spec);
    Element sum = r.zero();
    const auto& lf = local_decomposition(r);
    for (std::size_t i = 0; i < lf.size(); ++i) {
      sum = r.add(sum, lf[i].idempotent);
      for (std::size_t j = i + 1; j < lf.size(); ++j) {
        CHECK(r.mul(lf[i].idempotent, lf[j].idempotent) == r.zero());
      }
    }
    CHECK(sum == r.one());
  }
}

TEST_CASE("trivial ring") {
  const Ring z1 = Ring::integers_mod(1);
  CHECK(z1.size() == 1);
  CHECK(z1.one() == z1.zero());
  CHECK(euler_phi(z1) == 1);
  CHECK(moebius(z1) == 1);
  CHECK(local_decomposition(z1).empty());
}

TEST_CASE("ideals, annihilators and quotients") {
  const Ring r = Ring::integers_mod(12);
  const Ideal i4 = principal_ideal(r, r.from_integer(4));
  CHECK(i4.size() == 3);
  CHECK(i4.contains(r.from_integer(8)));
  CHECK_FALSE(i4.contains(r.from_integer(2)));
  const Ideal ann = annihilator(r, r.from_integer(4));
  CHECK(ann == principal_ideal(r, r.from_integer(3)));

  std::vector<Ideal> parts{principal_ideal(r, r.from_integer(4)), principal_ideal(r, r.from_integer(6))};
  CHECK(ideal_sum(r, parts) == principal_ideal(r, r.from_integer(2)));
  CHECK_THROWS_AS(ideal_sum(r, std::vector<Ideal>{}), ArgumentError);

  const QuotientRing q = quotient(r, i4);
  CHECK(q.ring().size() == 4);
  CHECK(q.ring().characteristic() == 4);
  for (Index a = 0; a < r.size(); ++a) {
    const Element x = r.element(a);
    CHECK(q.reduce(x).index() == a % 4);
    CHECK(q.reduce(q.lift(q.reduce(x))) == q.reduce(x));
  }
  CHECK(euler_phi(q) == 2);
  CHECK(moebius(q) == 0);

  const QuotientRing whole = quotient(r, principal_ideal(r, r.one()));
  CHECK(whole.ring().size() == 1);
}

TEST_CASE("quotient arithmetic is a ring homomorphism") {
  const Ring r = parse_ring_spec("F2[x]/(x^2)[y]/(y^2)");
  const QuotientRing q = quotient(r, principal_ideal(r, parse_element(r, "x*y")));
  CHECK(q.ring().size() == 8);
  for (Index a = 0; a < r.size(); ++a) {
    for (Index b = 0; b < r.size(); ++b) {
      const Element x = r.element(a);
      const Element y = r.element(b);
      CHECK(q.reduce(r.mul(x, y)) == q.ring().mul(q.reduce(x), q.reduce(y)));
      CHECK(q.reduce(r.add(x, y)) == q.ring().add(q.reduce(x), q.reduce(y)));
    }
  }
}

TEST_CASE("ideal validation") {
  const Ring r = Ring::integers_mod(6);
  CHECK_THROWS_AS(Ideal::from_elements(r, {r.from_integer(2)}, {r.zero(), r.from_integer(2)}),
                  StructuralError);
  const Ideal ok = Ideal::from_elements(r, {r.from_integer(3)}, {r.from_integer(3), r.zero()});
  CHECK(ok.size() == 2);
}

TEST_CASE("mixing rings is rejected") {
  const Ring a = Ring::integers_mod(6);
  const Ring b = Ring::integers_mod(6);
  CHECK_FALSE(a == b);
  CHECK_THROWS_AS(a.add(a.one(), b.one()), StructuralError);
  CHECK_THROWS_AS(principal_ideal(a, b.one()), StructuralError);
}

TEST_CASE("cardinality cap") {
  CHECK_THROWS_AS(parse_ring_spec("Z/4096 x Z/2"), ArgumentError);
  CHECK(parse_ring_spec("Z/64 x Z/64").size() == 4096);
  CHECK_THROWS_AS(parse_ring_spec("Z/10", 8), ArgumentError);
}

TEST_CASE("F2 reduction") {
  const Ring r = parse_ring_spec("Z/4 x Z/2 x Z/3");
  const F2Reduction red = f2_reduction(r);
  CHECK(red.r == 2);
  CHECK(red(r.one()) == 3);
  CHECK(red(r.zero()) == 0);
  const Ring f9 = parse_ring_spec("F9");
  CHECK(f2_reduction(f9).r == 0);
}
