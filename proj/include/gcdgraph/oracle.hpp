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


// Brute-force spectral oracle: dense adjacency matrices, exact integer
// characteristic polynomials and a Jacobi eigensolver.

#ifndef GCDGRAPH_ORACLE_HPP
#define GCDGRAPH_ORACLE_HPP

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Core>

#include "gcdgraph/cyclotomic.hpp"
#include "gcdgraph/graph.hpp"

namespace gcdgraph {

class NumericError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

using DenseMatrix = Eigen::Matrix<int, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

inline constexpr std::size_t kMaxAdjacencyOrder = 4096;
inline constexpr std::size_t kMaxExactOrder = 64;
inline constexpr int kJacobiMaxSweeps = 50;
inline constexpr double kJacobiTolerance = 1e-10;
inline constexpr double kFloatMatchTolerance = 1e-6;

/// Rows and columns follow canonical element order.
DenseMatrix adjacency_matrix(const GcdGraph& graph);

/// det(xI - A), low-degree coefficient first. Computed modulo enough primes
/// to pin every coefficient, then lifted by CRT.
IntPoly charpoly_exact(const DenseMatrix& a);

/// Eigenvalues of a symmetric matrix, ascending.
std::vector<double> eigs_float(const DenseMatrix& a);

/// prod (x - r).
IntPoly poly_from_roots(const std::vector<BigInt>& roots);

struct OracleReport {
  /// "exact-charpoly" or "float-jacobi".
  std::string method;
  bool pass = false;
  /// Largest coefficient difference (exact) or eigenvalue deviation (float).
  double max_deviation = 0.0;
  bool row_sums_ok = false;
  std::optional<IntPoly> charpoly;
};

/// Checks the predicted integer spectrum against the adjacency matrix.
OracleReport verify_spectrum(const GcdGraph& graph);
OracleReport verify_spectrum(const GcdGraph& graph, const std::vector<BigInt>& predicted);

}  // namespace gcdgraph

#endif  // GCDGRAPH_ORACLE_HPP
