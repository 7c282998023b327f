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

#include "gcdgraph/symmetric.hpp"

#include <numeric>

namespace gcdgraph {

LinearFunctional::LinearFunctional(Ring ring, std::uint64_t modulus,
                                   std::vector<std::uint32_t> values)
    : ring_(std::move(ring)), modulus_(modulus), values_(std::move(values)) {
  if (modulus_ < 1) throw ArgumentError("functional modulus must be positive");
  if (values_.size() != ring_.size()) throw ArgumentError("value table has wrong size");
  for (auto v : values_) {
    if (v >= modulus_) throw ArgumentError("functional value out of range");
  }
  if (values_[0] != 0) throw ArgumentError("a linear functional maps 0 to 0");
}

LinearFunctional canonical_functional(const Ring& ring) {
  if (!ring.is_tower_product()) {
    throw StructuralError("canonical functional needs a tower presentation");
  }
  const std::uint64_t n = ring.characteristic();
  std::vector<std::uint32_t> values(ring.size());
  const auto& towers = ring.factors();
  for (Index a = 0; a < ring.size(); ++a) {
    const auto c = ring.coefficients(ring.element(a));
    std::uint64_t v = 0;
    for (std::size_t f = 0; f < towers.size(); ++f) {
      const auto m = static_cast<std::uint64_t>(towers[f].modulus());
      v += (n / m) * static_cast<std::uint64_t>(c[f].back());
    }
    values[a] = static_cast<std::uint32_t>(v % n);
  }
  LinearFunctional psi(ring, n, std::move(values));
  if (!is_nondegenerate(psi)) throw InvariantError("canonical functional is degenerate");
  return psi;
}

bool is_additive(const LinearFunctional& psi) {
  const Ring& r = psi.ring();
  const std::uint64_t n = psi.modulus();
  for (Index a = 0; a < r.size(); ++a) {
    for (Index b = a; b < r.size(); ++b) {
      if ((psi.at(a) + psi.at(b)) % n != psi.at(r.add_index(a, b))) return false;
    }
  }
  return true;
}

bool is_nondegenerate(const LinearFunctional& psi) {
  const Ring& r = psi.ring();
  const Index one = r.one().index();
  for (Index a = 1; a < r.size(); ++a) {
    if (psi.at(a) != 0) continue;  // b = 1 witnesses
    bool witnessed = false;
    for (Index b = 0; b < r.size() && !witnessed; ++b) {
      if (b == one) continue;
      witnessed = psi.at(r.mul_index(b, a)) != 0;
    }
    if (!witnessed) return false;
  }
  return true;
}

InducedFunctional induced_functional(const LinearFunctional& psi, Element x) {
  const Ring& r = psi.ring();
  r.check(x);
  QuotientRing q = quotient(r, annihilator(r, x));
  std::vector<std::uint32_t> values(q.ring().size(), 0);
  std::vector<std::uint8_t> seen(q.ring().size(), 0);
  // Every ambient element, not just representatives, so that a lift that
  // disagrees with its coset is caught.
  for (Index a = 0; a < r.size(); ++a) {
    const Index cls = q.reduce(r.element(a)).index();
    const std::uint32_t v = psi.at(r.mul_index(a, x.index()));
    if (seen[cls] && values[cls] != v) {
      throw InvariantError("induced functional is not well defined on cosets");
    }
    seen[cls] = 1;
    values[cls] = v;
  }
  LinearFunctional induced(q.ring(), psi.modulus(), std::move(values));
  return InducedFunctional{std::move(q), std::move(induced)};
}

std::vector<LinearFunctional> enumerate_functionals(const Ring& ring, std::size_t cap) {
  if (ring.size() > cap) {
    throw ArgumentError("functional count " + std::to_string(ring.size()) + " exceeds cap " +
                        std::to_string(cap));
  }
  const std::uint64_t n = ring.characteristic();
  const std::size_t size = ring.size();

  // Greedy additive generating chain g_1, g_2, ... with span_i = span_{i-1} + <g_i>.
  std::vector<Index> gens;
  std::vector<std::uint64_t> orders;
  {
    std::vector<std::uint8_t> span(size, 0);
    span[0] = 1;
    for (Index a = 0; a < size; ++a) {
      if (span[a]) continue;
      gens.push_back(a);
      std::uint64_t ord = 1;
      for (Index m = a; m != 0; m = ring.add_index(m, a)) ++ord;
      orders.push_back(ord);
      std::vector<Index> cur;
      for (Index s = 0; s < size; ++s) {
        if (span[s]) cur.push_back(s);
      }
      for (Index s : cur) {
        for (Index m = ring.add_index(s, a); m != s; m = ring.add_index(m, a)) span[m] = 1;
      }
    }
  }

  constexpr std::int64_t kUnset = -1;
  std::vector<LinearFunctional> out;
  std::vector<std::int64_t> table(size, kUnset);
  table[0] = 0;

  // Depth-first over generator values; each level extends the partial
  // homomorphism to the next span and rejects inconsistent choices.
  auto extend = [&](auto&& self, std::size_t level) -> void {
    if (level == gens.size()) {
      std::vector<std::uint32_t> values(size);
      for (Index a = 0; a < size; ++a) values[a] = static_cast<std::uint32_t>(table[a]);
      out.emplace_back(ring, n, std::move(values));
      return;
    }
    const Index g = gens[level];
    const std::uint64_t step = n / std::gcd(orders[level], n);
    std::vector<Index> cur;
    for (Index s = 0; s < size; ++s) {
      if (table[s] != kUnset) cur.push_back(s);
    }
    for (std::uint64_t v = 0; v < n; v += step) {
      const auto saved = table;
      bool ok = true;
      for (Index s : cur) {
        std::uint64_t val = static_cast<std::uint64_t>(table[s]);
        for (Index m = ring.add_index(s, g); m != s && ok; m = ring.add_index(m, g)) {
          val = (val + v) % n;
          if (table[m] == kUnset) {
            table[m] = static_cast<std::int64_t>(val);
          } else {
            ok = table[m] == static_cast<std::int64_t>(val);
          }
        }
        if (!ok) break;
      }
      if (ok) self(self, level + 1);
      table = saved;
    }
  };
  extend(extend, 0);
  return out;
}

}  // namespace gcdgraph
