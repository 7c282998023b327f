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

// Generalized Ramanujan sums c(g, R) = sum over units a of zeta_n^psi(g·a).
//
// Two independent routes are provided: the exact character sum in Z[zeta_n]
// (needs a non-degenerate psi) and the closed form
//
//   c(g, R) = phi(R) / phi(R/Ann(g)) * mu(R/Ann(g)),
//
// which only needs the structure of R/Ann(g). The classical integer
// Ramanujan sum is included for cross-checks over Z/n.

#ifndef GCDGRAPH_RAMANUJAN_HPP
#define GCDGRAPH_RAMANUJAN_HPP

#include <cstdint>
#include <memory>
#include <mutex>
#include <vector>

#include "gcdgraph/cyclotomic.hpp"
#include "gcdgraph/ring.hpp"
#include "gcdgraph/symmetric.hpp"

namespace gcdgraph {

/// phi, mu and size of a quotient R/Ann_R(x).
struct QuotientInvariants {
  std::size_t size = 1;
  std::uint64_t phi = 1;
  int mu = 1;
};

/// Memoizes invariants of R/Ann_R(x) per element, sharing work between
/// elements with the same annihilator. Safe for concurrent use.
class AnnihilatorQuotients {
 public:
  explicit AnnihilatorQuotients(Ring ring);

  const Ring& ring() const { return ring_; }
  QuotientInvariants of(Element x) const;

 private:
  Ring ring_;
  mutable std::mutex mu_;
  mutable std::vector<std::int32_t> slot_;  // element index -> invariants id
  mutable std::vector<std::vector<Index>> keys_;
  mutable std::vector<QuotientInvariants> values_;
};

/// Exact character sum. Throws ArgumentError for a degenerate psi.
CycInt ramanujan_sum_direct(const LinearFunctional& psi, Element g);

BigInt ramanujan_sum_closed(const Ring& ring, Element g);
BigInt ramanujan_sum_closed(const AnnihilatorQuotients& cache, Element g);

/// Classical c_q(m) = mu(t) phi(q) / phi(t), t = q / gcd(q, m).
BigInt classical_ramanujan(std::int64_t m, std::uint64_t q);

std::uint64_t integer_phi(std::uint64_t n);
int integer_mu(std::uint64_t n);

/// Checks R/Ann_R(g·x) ~ R'/Ann_R'(g') for R' = R/Ann_R(x) (equal sizes and
/// invariants) and that the closed form of c(g', R') matches
/// phi(R/Ann(x)) / phi(R/Ann(gx)) * mu(R/Ann(gx)).
bool quotient_compatibility_check(const Ring& ring, Element g, Element x);

struct RamanujanRow {
  Element g;
  BigInt closed;
  /// Present when computed with a functional.
  std::optional<CycInt> direct;
};

/// c(g, R) for every g in canonical order; `psi` adds the direct sums.
std::vector<RamanujanRow> ramanujan_table(const Ring& ring, const LinearFunctional* psi = nullptr);

}  // namespace gcdgraph

#endif  // GCDGRAPH_RAMANUJAN_HPP
