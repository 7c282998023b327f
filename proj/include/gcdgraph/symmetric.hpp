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

// Z/n-linear functionals R -> Z/n and the non-degeneracy test that makes R a
// symmetric Z/n-algebra.

#ifndef GCDGRAPH_SYMMETRIC_HPP
#define GCDGRAPH_SYMMETRIC_HPP

#include <cstdint>
#include <span>
#include <vector>

#include "gcdgraph/ring.hpp"

namespace gcdgraph {

/// A map R -> Z/n stored as a value table indexed by element index.
class LinearFunctional {
 public:
  LinearFunctional(Ring ring, std::uint64_t modulus, std::vector<std::uint32_t> values);

  const Ring& ring() const { return ring_; }
  std::uint64_t modulus() const { return modulus_; }
  std::span<const std::uint32_t> values() const { return values_; }

  std::uint32_t operator()(Element a) const {
    ring_.check(a);
    return values_[a.index()];
  }
  std::uint32_t at(Index a) const { return values_[a]; }

  friend bool operator==(const LinearFunctional& a, const LinearFunctional& b) {
    return a.ring_ == b.ring_ && a.modulus_ == b.modulus_ && a.values_ == b.values_;
  }

 private:
  Ring ring_;
  std::uint64_t modulus_;
  std::vector<std::uint32_t> values_;
};

/// Top-coefficient functional on each tower, scaled into Z/n by n/m and
/// summed over the factors (n = characteristic). Requires a tower product;
/// throws InvariantError if the result were degenerate.
LinearFunctional canonical_functional(const Ring& ring);

/// psi(a + b) = psi(a) + psi(b) for all a, b.
bool is_additive(const LinearFunctional& psi);

/// True iff no nonzero ideal lies in ker psi, i.e. every a != 0 has some b
/// with psi(b·a) != 0.
bool is_nondegenerate(const LinearFunctional& psi);

/// psi_x on R/Ann_R(x), psi_x(a + Ann) = psi(a·x).
struct InducedFunctional {
  QuotientRing quotient;
  LinearFunctional psi;
};

InducedFunctional induced_functional(const LinearFunctional& psi, Element x);

inline constexpr std::size_t kMaxFunctionalCount = 512;

/// Every additive map R -> Z/n (there are exactly |R| of them). Throws
/// ArgumentError when |R| exceeds `cap`.
std::vector<LinearFunctional> enumerate_functionals(const Ring& ring,
                                                    std::size_t cap = kMaxFunctionalCount);

}  // namespace gcdgraph

#endif  // GCDGRAPH_SYMMETRIC_HPP
