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


// Integer spectrum of a gcd-graph. The eigenvalue at g is
//
//   lambda_g = sum_i phi(R/Ann(x_i)) / phi(R/Ann(g x_i)) * mu(R/Ann(g x_i)),
//
// constant on unit orbits, so by default one value is computed per orbit.

#ifndef GCDGRAPH_SPECTRUM_HPP
#define GCDGRAPH_SPECTRUM_HPP

#include <cstdint>
#include <map>
#include <vector>

#include "gcdgraph/cyclotomic.hpp"
#include "gcdgraph/graph.hpp"
#include "gcdgraph/ramanujan.hpp"
#include "gcdgraph/symmetric.hpp"

namespace gcdgraph {

BigInt eigenvalue(const GcdGraph& graph, Element g);
BigInt eigenvalue(const GcdGraph& graph, const AnnihilatorQuotients& cache, Element g);

/// Orbits of the unit group acting on R by multiplication. Each orbit is
/// sorted; orbits are ordered by their smallest element.
std::vector<std::vector<Element>> unit_orbits(const Ring& ring);

struct SpectrumEntry {
  Element g;
  BigInt lambda;
  std::size_t orbit_size = 0;
};

struct SpectrumReport {
  /// One entry per element, canonical order.
  std::vector<SpectrumEntry> entries;
  std::vector<std::vector<Element>> orbits;
  std::map<BigInt, std::size_t> multiset;
  std::size_t degree = 0;
  std::size_t order = 0;
  BigInt trace;
  BigInt trace_sq;

  bool trace_ok() const { return trace == 0; }
  bool trace_sq_ok() const { return trace_sq == BigInt(order) * degree; }
  /// Eigenvalues in canonical element order.
  std::vector<BigInt> values() const;
};

/// With `use_orbits` false every element is evaluated on its own.
SpectrumReport full_spectrum(const GcdGraph& graph, bool use_orbits = true);

/// lambda_m = sum_{d in D} c_{n/d}(m) for m = 0..n-1. Each d must be a
/// proper divisor of n.
std::vector<BigInt> classical_spectrum_zn(std::uint64_t n, const std::vector<std::uint64_t>& divisors);

/// sum over s in S of zeta_n^psi(g·s), reduced exactly, equals eigenvalue(G, g).
bool character_eigen_check(const GcdGraph& graph, const LinearFunctional& psi, Element g);

}  // namespace gcdgraph

#endif  // GCDGRAPH_SPECTRUM_HPP
