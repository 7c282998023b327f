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

// Exact arithmetic in Z[zeta_n] = Z[x]/(Phi_n).

#ifndef GCDGRAPH_CYCLOTOMIC_HPP
#define GCDGRAPH_CYCLOTOMIC_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace gcdgraph {

using BigInt = boost::multiprecision::cpp_int;
/// Integer polynomial, lowest degree first, no trailing zeros (zero = {}).
using IntPoly = std::vector<BigInt>;

/// Phi_n, memoized.
const IntPoly& cyclotomic_poly(std::uint64_t n);

IntPoly poly_mul(const IntPoly& a, const IntPoly& b);
/// Remainder modulo a monic polynomial.
IntPoly poly_rem(IntPoly a, const IntPoly& monic);
/// Exact quotient by a monic polynomial; throws if the division leaves a remainder.
IntPoly poly_exact_div(IntPoly a, const IntPoly& monic);
void poly_trim(IntPoly& a);
std::string to_string(const IntPoly& p);

/// An element of Z[zeta_n] stored as its remainder modulo Phi_n.
class CycInt {
 public:
  explicit CycInt(std::uint64_t n);

  static CycInt integer(std::uint64_t n, const BigInt& k);
  static CycInt root_power(std::uint64_t n, std::uint64_t e);
  /// Sum of zeta_n^e weighted by counts[e], e in [0, n).
  static CycInt from_exponent_counts(std::uint64_t n, std::span<const std::uint64_t> counts);

  std::uint64_t order() const { return n_; }
  /// Length deg(Phi_n); unused high coefficients are zero.
  const std::vector<BigInt>& coeffs() const { return coeffs_; }

  bool is_integer() const;
  std::optional<BigInt> to_integer() const;

  CycInt& operator+=(const CycInt& o);
  CycInt& operator-=(const CycInt& o);
  CycInt& operator*=(const CycInt& o);
  friend CycInt operator+(CycInt a, const CycInt& b) { return a += b; }
  friend CycInt operator-(CycInt a, const CycInt& b) { return a -= b; }
  friend CycInt operator*(CycInt a, const CycInt& b) { return a *= b; }
  friend bool operator==(const CycInt& a, const CycInt& b) {
    return a.n_ == b.n_ && a.coeffs_ == b.coeffs_;
  }

 private:
  void assign_reduced(IntPoly p);
  void same_order(const CycInt& o) const;

  std::uint64_t n_;
  std::vector<BigInt> coeffs_;
};

std::string to_string(const CycInt& z);

}  // namespace gcdgraph

#endif  // GCDGRAPH_CYCLOTOMIC_HPP
