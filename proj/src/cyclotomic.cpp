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

#include "gcdgraph/cyclotomic.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>

#include "gcdgraph/ring.hpp"

namespace gcdgraph {

void poly_trim(IntPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

IntPoly poly_mul(const IntPoly& a, const IntPoly& b) {
  if (a.empty() || b.empty()) return {};
  IntPoly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  }
  poly_trim(r);
  return r;
}

namespace {

/// Long division by a monic polynomial; returns the quotient and leaves the
/// remainder in `a`.
IntPoly divide(IntPoly& a, const IntPoly& monic) {
  poly_trim(a);
  const std::size_t d = monic.size() - 1;
  if (a.size() <= d) return {};
  IntPoly q(a.size() - d, 0);
  for (std::size_t top = a.size(); top-- > d;) {
    const BigInt c = a[top];
    if (c == 0) continue;
    q[top - d] = c;
    for (std::size_t j = 0; j <= d; ++j) a[top - d + j] -= c * monic[j];
  }
  poly_trim(a);
  poly_trim(q);
  return q;
}

}  // namespace

IntPoly poly_rem(IntPoly a, const IntPoly& monic) {
  divide(a, monic);
  return a;
}

IntPoly poly_exact_div(IntPoly a, const IntPoly& monic) {
  IntPoly q = divide(a, monic);
  if (!a.empty()) throw InvariantError("polynomial division is not exact");
  return q;
}

std::string to_string(const IntPoly& p) {
  if (p.empty()) return "0";
  std::string s;
  for (std::size_t i = p.size(); i-- > 0;) {
    if (p[i] == 0) continue;
    BigInt c = p[i];
    if (!s.empty()) {
      s += c < 0 ? " - " : " + ";
      if (c < 0) c = -c;
    } else if (c < 0) {
      s += "-";
      c = -c;
    }
    if (c != 1 || i == 0) s += c.str();
    if (i > 0) s += (c != 1 ? "*x" : "x");
    if (i > 1) s += "^" + std::to_string(i);
  }
  return s;
}

const IntPoly& cyclotomic_poly(std::uint64_t n) {
  if (n == 0) throw ArgumentError("cyclotomic polynomial order must be positive");
  static std::mutex mu;
  static std::map<std::uint64_t, std::unique_ptr<IntPoly>> memo;
  {
    std::lock_guard lock(mu);
    if (auto it = memo.find(n); it != memo.end()) return *it->second;
  }
  // Phi_n = (x^n - 1) / prod_{d | n, d < n} Phi_d.
  IntPoly p(n + 1, 0);
  p[0] = -1;
  p[n] = 1;
  for (std::uint64_t d = 1; d < n; ++d) {
    if (n % d == 0) p = poly_exact_div(std::move(p), cyclotomic_poly(d));
  }
  std::lock_guard lock(mu);
  auto [it, inserted] = memo.emplace(n, std::make_unique<IntPoly>(std::move(p)));
  return *it->second;
}

// ---------------------------------------------------------------------------

CycInt::CycInt(std::uint64_t n) : n_(n) {
  if (n == 0) throw ArgumentError("root of unity order must be positive");
  coeffs_.assign(cyclotomic_poly(n).size() - 1, 0);
}

CycInt CycInt::integer(std::uint64_t n, const BigInt& k) {
  CycInt z(n);
  z.coeffs_[0] = k;
  return z;
}

CycInt CycInt::root_power(std::uint64_t n, std::uint64_t e) {
  CycInt z(n);
  IntPoly p(e % n + 1, 0);
  p.back() = 1;
  z.assign_reduced(std::move(p));
  return z;
}

CycInt CycInt::from_exponent_counts(std::uint64_t n, std::span<const std::uint64_t> counts) {
  if (counts.size() > n) throw ArgumentError("exponent histogram longer than the order");
  CycInt z(n);
  IntPoly p(counts.begin(), counts.end());
  z.assign_reduced(std::move(p));
  return z;
}

void CycInt::assign_reduced(IntPoly p) {
  p = poly_rem(std::move(p), cyclotomic_poly(n_));
  std::fill(coeffs_.begin(), coeffs_.end(), 0);
  for (std::size_t i = 0; i < p.size(); ++i) coeffs_[i] = p[i];
}

void CycInt::same_order(const CycInt& o) const {
  if (o.n_ != n_) throw StructuralError("cyclotomic integers of different orders");
}

bool CycInt::is_integer() const {
  for (std::size_t i = 1; i < coeffs_.size(); ++i) {
    if (coeffs_[i] != 0) return false;
  }
  return true;
}

std::optional<BigInt> CycInt::to_integer() const {
  if (!is_integer()) return std::nullopt;
  return coeffs_[0];
}

CycInt& CycInt::operator+=(const CycInt& o) {
  same_order(o);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  return *this;
}

CycInt& CycInt::operator-=(const CycInt& o) {
  same_order(o);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  return *this;
}

CycInt& CycInt::operator*=(const CycInt& o) {
  same_order(o);
  assign_reduced(poly_mul(coeffs_, o.coeffs_));
  return *this;
}

std::string to_string(const CycInt& z) {
  IntPoly p = z.coeffs();
  poly_trim(p);
  std::string s = to_string(p);
  // Render in terms of the root of unity rather than x.
  std::string out;
  for (char c : s) {
    if (c == 'x') {
      out += "z";
    } else {
      out += c;
    }
  }
  return out;
}

}  // namespace gcdgraph
