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
#include "gcdgraph/ring_spec.hpp"
#include "gcdgraph/spectrum.hpp"

using namespace gcdgraph;

namespace {

GcdGraph make(const char* ring, const char* gens) {
  const Ring r = parse_ring_spec(ring);
  return GcdGraph(r, parse_element_list(r, gens));
}

}  // namespace

TEST_CASE("complete graphs") {
  const SpectrumReport k5 = full_spectrum(make("Z/5", "(1)"));
  CHECK(k5.multiset.size() == 2);
  CHECK(k5.multiset.at(4) == 1);
  CHECK(k5.multiset.at(-1) == 4);
  CHECK(k5.entries[0].lambda == 4);
}

TEST_CASE("edgeless graph") {
  const Ring r = Ring::integers_mod(7);
  const SpectrumReport s = full_spectrum(GcdGraph(r, {}));
  CHECK(s.multiset.size() == 1);
  CHECK(s.multiset.at(0) == 7);
}

TEST_CASE("unit orbits") {
  const Ring z6 = Ring::integers_mod(6);
  const auto orbits = unit_orbits(z6);
  REQUIRE(orbits.size() == 4);
  CHECK(orbits[1] == std::vector<Element>{z6.from_integer(1), z6.from_integer(5)});
  CHECK(orbits[2] == std::vector<Element>{z6.from_integer(2), z6.from_integer(4)});
  const SpectrumReport s = full_spectrum(GcdGraph(z6, {z6.one()}));
  std::set<BigInt> distinct;
  for (const auto& e : s.entries) distinct.insert(e.lambda);
  CHECK(s.orbits.size() == 4);
  CHECK(s.entries[1].orbit_size == 2);
}

TEST_CASE("trace identities and degree") {
  for (const auto& e : testing::full_corpus()) {
    const GcdGraph g = testing::load(e);
    const SpectrumReport s = full_spectrum(g);
    CHECK_MESSAGE(s.trace_ok(), e.ring);
    CHECK(s.trace_sq_ok());
    CHECK(s.entries[0].lambda == g.degree());
    std::size_t total = 0;
    for (const auto& [lambda, m] : s.multiset) total += m;
    CHECK(total == g.order());
  }
}

TEST_CASE("orbit shortcut agrees with element-wise evaluation") {
  for (const auto& e : testing::small_corpus()) {
    const GcdGraph g = testing::load(e);
    CHECK_MESSAGE(full_spectrum(g, true).values() == full_spectrum(g, false).values(), e.ring);
  }
}

TEST_CASE("classical spectrum over Z/n") {
  CHECK(classical_spectrum_zn(7, {1}) == std::vector<BigInt>{6, -1, -1, -1, -1, -1, -1});
  for (std::uint64_t n = 2; n <= 40; ++n) {
    std::vector<std::uint64_t> divisors;
    for (std::uint64_t d = 1; d < n; ++d) {
      if (n % d == 0 && (d == 1 || d % 3 == 0)) divisors.push_back(d);
    }
    const Ring r = Ring::integers_mod(static_cast<Coeff>(n));
    std::vector<Element> gens;
    for (auto d : divisors) gens.push_back(r.from_integer(static_cast<std::int64_t>(d)));
    const auto classical = classical_spectrum_zn(n, divisors);
    CHECK(full_spectrum(GcdGraph(r, gens)).values() == classical);
    BigInt degree = 0;
    for (auto d : divisors) degree += integer_phi(n / d);
    CHECK(classical[0] == degree);
  }
  CHECK_THROWS_AS(classical_spectrum_zn(12, {5}), ArgumentError);
  CHECK_THROWS_AS(classical_spectrum_zn(12, {12}), ArgumentError);
}

TEST_CASE("character sums reproduce each eigenvalue") {
  for (const auto& e : testing::small_corpus()) {
    const GcdGraph g = testing::load(e);
    const LinearFunctional psi = canonical_functional(g.ring());
    for (Index a = 0; a < g.order(); ++a) CHECK(character_eigen_check(g, psi, g.ring().element(a)));
  }
}
