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

#include "gcdgraph/ramanujan.hpp"

#include <algorithm>
#include <numeric>

namespace gcdgraph {

namespace {

QuotientInvariants compute_invariants(const Ring& ring, const Ideal& ann) {
  const QuotientRing q = quotient(ring, ann);
  return QuotientInvariants{q.ring().size(), euler_phi(q), moebius(q)};
}

std::vector<Index> annihilator_key(const Ring& ring, Element x) {
  std::vector<Index> key;
  for (Index a = 0; a < ring.size(); ++a) {
    if (ring.mul_index(a, x.index()) == 0) key.push_back(a);
  }
  return key;
}

BigInt closed_form(std::uint64_t phi_outer, const QuotientInvariants& inner) {
  if (phi_outer % inner.phi != 0) {
    throw InvariantError("unit group reduction is not surjective: phi ratio is not integral");
  }
  return BigInt(phi_outer / inner.phi) * inner.mu;
}

}  // namespace

AnnihilatorQuotients::AnnihilatorQuotients(Ring ring)
    : ring_(std::move(ring)), slot_(ring_.size(), -1) {}

QuotientInvariants AnnihilatorQuotients::of(Element x) const {
  ring_.check(x);
  {
    std::lock_guard lock(mu_);
    if (slot_[x.index()] >= 0) return values_[static_cast<std::size_t>(slot_[x.index()])];
  }
  auto key = annihilator_key(ring_, x);
  std::lock_guard lock(mu_);
  for (std::size_t i = 0; i < keys_.size(); ++i) {
    if (keys_[i] == key) {
      slot_[x.index()] = static_cast<std::int32_t>(i);
      return values_[i];
    }
  }
  const QuotientInvariants inv = compute_invariants(ring_, annihilator(ring_, x));
  keys_.push_back(std::move(key));
  values_.push_back(inv);
  slot_[x.index()] = static_cast<std::int32_t>(values_.size() - 1);
  return inv;
}

CycInt ramanujan_sum_direct(const LinearFunctional& psi, Element g) {
  const Ring& r = psi.ring();
  r.check(g);
  if (!is_nondegenerate(psi)) throw ArgumentError("ramanujan_sum_direct needs a non-degenerate functional");
  const std::uint64_t n = psi.modulus();
  std::vector<std::uint64_t> counts(n, 0);
  for (Index a = 0; a < r.size(); ++a) {
    if (r.is_unit_index(a)) ++counts[psi.at(r.mul_index(g.index(), a))];
  }
  return CycInt::from_exponent_counts(n, counts);
}

BigInt ramanujan_sum_closed(const AnnihilatorQuotients& cache, Element g) {
  return closed_form(euler_phi(cache.ring()), cache.of(g));
}

BigInt ramanujan_sum_closed(const Ring& ring, Element g) {
  ring.check(g);
  return closed_form(euler_phi(ring), compute_invariants(ring, annihilator(ring, g)));
}

std::uint64_t integer_phi(std::uint64_t n) {
  std::uint64_t r = n;
  for (std::uint64_t p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    while (n % p == 0) n /= p;
    r -= r / p;
  }
  if (n > 1) r -= r / n;
  return r;
}

int integer_mu(std::uint64_t n) {
  int sign = 1;
  for (std::uint64_t p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    n /= p;
    if (n % p == 0) return 0;
    sign = -sign;
  }
  if (n > 1) sign = -sign;
  return sign;
}

BigInt classical_ramanujan(std::int64_t m, std::uint64_t q) {
  if (q < 1) throw ArgumentError("classical_ramanujan needs q >= 1");
  const auto qm = static_cast<std::int64_t>(q);
  const auto mm = static_cast<std::uint64_t>(((m % qm) + qm) % qm);
  const std::uint64_t t = q / std::gcd(q, mm);
  return BigInt(integer_phi(q) / integer_phi(t)) * integer_mu(t);
}

bool quotient_compatibility_check(const Ring& ring, Element g, Element x) {
  ring.check(g);
  ring.check(x);
  const QuotientRing rx = quotient(ring, annihilator(ring, x));
  const Element gp = rx.reduce(g);
  const QuotientRing lhs = quotient(ring, annihilator(ring, ring.mul(g, x)));
  const QuotientRing rhs = quotient(rx.ring(), annihilator(rx.ring(), gp));
  if (lhs.ring().size() != rhs.ring().size()) return false;
  if (euler_phi(lhs) != euler_phi(rhs) || moebius(lhs) != moebius(rhs)) return false;
  // The kernel of R -> R'/Ann(g') must be exactly Ann_R(gx).
  for (Index a = 0; a < ring.size(); ++a) {
    const Element img = rhs.reduce(rx.reduce(ring.element(a)));
    const bool in_kernel = img.index() == 0;
    const bool in_ann = ring.mul_index(ring.mul_index(g.index(), x.index()), a) == 0;
    if (in_kernel != in_ann) return false;
  }
  const BigInt lemma = closed_form(euler_phi(rx), QuotientInvariants{lhs.ring().size(), euler_phi(lhs),
                                                                     moebius(lhs)});
  return ramanujan_sum_closed(rx.ring(), gp) == lemma;
}

std::vector<RamanujanRow> ramanujan_table(const Ring& ring, const LinearFunctional* psi) {
  if (psi != nullptr && !(psi->ring() == ring)) {
    throw StructuralError("functional belongs to a different ring");
  }
  if (psi != nullptr && !is_nondegenerate(*psi)) {
    throw ArgumentError("ramanujan_table needs a non-degenerate functional");
  }
  AnnihilatorQuotients cache(ring);
  std::vector<RamanujanRow> rows;
  rows.reserve(ring.size());
  for (Index a = 0; a < ring.size(); ++a) {
    const Element g = ring.element(a);
    RamanujanRow row{g, ramanujan_sum_closed(cache, g), std::nullopt};
    if (psi != nullptr) {
      std::vector<std::uint64_t> counts(psi->modulus(), 0);
      for (Index u = 0; u < ring.size(); ++u) {
        if (ring.is_unit_index(u)) ++counts[psi->at(ring.mul_index(a, u))];
      }
      row.direct = CycInt::from_exponent_counts(psi->modulus(), counts);
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace gcdgraph
