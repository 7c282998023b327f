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


#include "gcdgraph/spectrum.hpp"

#include <algorithm>

namespace gcdgraph {

BigInt eigenvalue(const GcdGraph& graph, const AnnihilatorQuotients& cache, Element g) {
  const Ring& ring = graph.ring();
  ring.check(g);
  BigInt lambda = 0;
  for (Element x : graph.divisors().generators()) {
    const QuotientInvariants outer = cache.of(x);
    const QuotientInvariants inner = cache.of(ring.mul(g, x));
    if (outer.phi % inner.phi != 0) throw InvariantError("eigenvalue: phi ratio is not integral");
    lambda += BigInt(outer.phi / inner.phi) * inner.mu;
  }
  return lambda;
}

BigInt eigenvalue(const GcdGraph& graph, Element g) {
  const AnnihilatorQuotients cache(graph.ring());
  return eigenvalue(graph, cache, g);
}

std::vector<std::vector<Element>> unit_orbits(const Ring& ring) {
  const auto units = ring.units();
  std::vector<bool> seen(ring.size(), false);
  std::vector<std::vector<Element>> orbits;
  for (Index a = 0; a < ring.size(); ++a) {
    if (seen[a]) continue;
    std::vector<Element> orbit;
    for (Element u : units) {
      const Index b = ring.mul_index(u.index(), a);
      if (!seen[b]) {
        seen[b] = true;
        orbit.push_back(ring.element(b));
      }
    }
    std::sort(orbit.begin(), orbit.end());
    orbits.push_back(std::move(orbit));
  }
  return orbits;
}

std::vector<BigInt> SpectrumReport::values() const {
  std::vector<BigInt> v;
  v.reserve(entries.size());
  for (const auto& e : entries) v.push_back(e.lambda);
  return v;
}

SpectrumReport full_spectrum(const GcdGraph& graph, bool use_orbits) {
  const Ring& ring = graph.ring();
  const AnnihilatorQuotients cache(ring);
  SpectrumReport rep;
  rep.order = ring.size();
  rep.degree = graph.degree();
  rep.orbits = unit_orbits(ring);
  rep.entries.resize(ring.size());
  for (const auto& orbit : rep.orbits) {
    BigInt shared;
    if (use_orbits) shared = eigenvalue(graph, cache, orbit.front());
    for (Element g : orbit) {
      rep.entries[g.index()] =
          SpectrumEntry{g, use_orbits ? shared : eigenvalue(graph, cache, g), orbit.size()};
    }
  }
  for (const auto& e : rep.entries) {
    ++rep.multiset[e.lambda];
    rep.trace += e.lambda;
    rep.trace_sq += e.lambda * e.lambda;
  }
  return rep;
}

std::vector<BigInt> classical_spectrum_zn(std::uint64_t n, const std::vector<std::uint64_t>& divisors) {
  if (n == 0) throw ArgumentError("classical_spectrum_zn needs n >= 1");
  for (auto d : divisors) {
    if (d == 0 || n % d != 0 || d == n) {
      throw ArgumentError(std::to_string(d) + " is not a proper divisor of " + std::to_string(n));
    }
  }
  std::vector<BigInt> out(n, 0);
  for (std::uint64_t m = 0; m < n; ++m) {
    for (auto d : divisors) out[m] += classical_ramanujan(static_cast<std::int64_t>(m), n / d);
  }
  return out;
}

bool character_eigen_check(const GcdGraph& graph, const LinearFunctional& psi, Element g) {
  const Ring& ring = graph.ring();
  if (!(psi.ring() == ring)) throw StructuralError("functional belongs to a different ring");
  ring.check(g);
  std::vector<std::uint64_t> counts(psi.modulus(), 0);
  for (Element s : graph.generating_set()) ++counts[psi.at(ring.mul_index(g.index(), s.index()))];
  const CycInt sum = CycInt::from_exponent_counts(psi.modulus(), counts);
  return sum == CycInt::integer(psi.modulus(), eigenvalue(graph, g));
}

}  // namespace gcdgraph
