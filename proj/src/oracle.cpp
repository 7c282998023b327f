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


#include "gcdgraph/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>

#include <Eigen/Dense>

#include "gcdgraph/spectrum.hpp"

namespace gcdgraph {

namespace {

using u64 = std::uint64_t;

u64 pow_mod(u64 b, u64 e, u64 p) {
  u64 r = 1;
  b %= p;
  for (; e; e >>= 1, b = b * b % p) {
    if (e & 1) r = r * b % p;
  }
  return r;
}

u64 inv_mod(u64 a, u64 p) { return pow_mod(a, p - 2, p); }

bool is_prime(u64 n) {
  if (n < 2) return false;
  for (u64 d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

// Characteristic polynomial over Z/p: similarity to upper Hessenberg form,
// then the standard three-term style recurrence on leading minors.
std::vector<u64> charpoly_mod(const DenseMatrix& a, u64 p) {
  const auto n = static_cast<std::size_t>(a.rows());
  std::vector<std::vector<u64>> h(n, std::vector<u64>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const long long v = a(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j));
      h[i][j] = static_cast<u64>(((v % static_cast<long long>(p)) + static_cast<long long>(p)) %
                                 static_cast<long long>(p));
    }
  }
  for (std::size_t j = 0; j + 2 < n; ++j) {
    std::size_t piv = j + 1;
    while (piv < n && h[piv][j] == 0) ++piv;
    if (piv == n) continue;
    if (piv != j + 1) {
      std::swap(h[piv], h[j + 1]);
      for (auto& row : h) std::swap(row[piv], row[j + 1]);
    }
    const u64 inv = inv_mod(h[j + 1][j], p);
    for (std::size_t k = j + 2; k < n; ++k) {
      if (h[k][j] == 0) continue;
      const u64 f = h[k][j] * inv % p;
      for (std::size_t c = 0; c < n; ++c) h[k][c] = (h[k][c] + (p - f) * h[j + 1][c]) % p;
      for (std::size_t r = 0; r < n; ++r) h[r][j + 1] = (h[r][j + 1] + f * h[r][k]) % p;
    }
  }
  // polys[m] = charpoly of the leading m x m block.
  std::vector<std::vector<u64>> polys(n + 1);
  polys[0] = {1};
  for (std::size_t m = 1; m <= n; ++m) {
    auto& cur = polys[m];
    cur.assign(m + 1, 0);
    const u64 d = h[m - 1][m - 1];
    const auto& prev = polys[m - 1];
    for (std::size_t k = 0; k < prev.size(); ++k) {
      cur[k + 1] = (cur[k + 1] + prev[k]) % p;
      cur[k] = (cur[k] + (p - d) * prev[k]) % p;
    }
    u64 prod = 1;
    for (std::size_t i = m - 1; i-- > 0;) {
      prod = prod * h[i + 1][i] % p;
      if (prod == 0) break;
      const u64 f = h[i][m - 1] * prod % p;
      const auto& q = polys[i];
      for (std::size_t k = 0; k < q.size(); ++k) cur[k] = (cur[k] + (p - f) * q[k]) % p;
    }
  }
  return polys[n];
}

BigInt binomial(std::size_t n, std::size_t k) {
  BigInt r = 1;
  for (std::size_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace

DenseMatrix adjacency_matrix(const GcdGraph& graph) {
  const std::size_t n = graph.order();
  if (n > kMaxAdjacencyOrder) {
    throw ArgumentError("adjacency_matrix: order " + std::to_string(n) + " exceeds " +
                        std::to_string(kMaxAdjacencyOrder));
  }
  const Ring& ring = graph.ring();
  DenseMatrix a = DenseMatrix::Zero(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
  for (Index x = 0; x < n; ++x) {
    for (Element s : graph.generating_set()) a(x, ring.add_index(x, s.index())) = 1;
  }
  return a;
}

IntPoly charpoly_exact(const DenseMatrix& a) {
  if (a.rows() != a.cols()) throw ArgumentError("charpoly_exact needs a square matrix");
  const auto n = static_cast<std::size_t>(a.rows());
  if (n > kMaxExactOrder) {
    throw ArgumentError("charpoly_exact: order " + std::to_string(n) + " exceeds " +
                        std::to_string(kMaxExactOrder));
  }
  // Every eigenvalue is bounded by the largest absolute row sum rho, so the
  // k-th coefficient is at most C(n, k) rho^k in absolute value.
  BigInt rho = 1;
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    rho = std::max(rho, BigInt(a.row(i).cwiseAbs().cast<long long>().sum()));
  }
  BigInt bound = 1;
  for (std::size_t k = 0; k <= n; ++k) bound = std::max(bound, binomial(n, k) * pow(rho, static_cast<unsigned>(k)));

  std::vector<BigInt> acc(n + 1, 0);
  BigInt modulus = 1;
  for (u64 p = 2147483647; modulus <= 2 * bound; p -= 2) {
    if (!is_prime(p)) continue;
    const auto r = charpoly_mod(a, p);
    // Garner step: acc += modulus * ((r - acc) / modulus mod p).
    const u64 minv = inv_mod(static_cast<u64>(modulus % p), p);
    for (std::size_t k = 0; k <= n; ++k) {
      const u64 cur = static_cast<u64>(((acc[k] % p) + p) % p);
      const u64 t = (r[k] + p - cur) % p * minv % p;
      acc[k] += modulus * t;
    }
    modulus *= p;
  }
  const BigInt half = modulus / 2;
  for (auto& c : acc) {
    if (c > half) c -= modulus;
  }
  poly_trim(acc);
  return acc;
}

std::vector<double> eigs_float(const DenseMatrix& a) {
  if (a.rows() != a.cols()) throw ArgumentError("eigs_float needs a square matrix");
  const Eigen::Index n = a.rows();
  if (static_cast<std::size_t>(n) > kMaxAdjacencyOrder) {
    throw ArgumentError("eigs_float: order exceeds " + std::to_string(kMaxAdjacencyOrder));
  }
  if ((a.transpose().array() != a.array()).any()) throw ArgumentError("eigs_float needs a symmetric matrix");
  Eigen::MatrixXd m = a.cast<double>();
  const double tol = kJacobiTolerance * static_cast<double>(std::max<Eigen::Index>(n, 1));

  auto off_norm = [&] {
    double s = 0.0;
    for (Eigen::Index j = 0; j < n; ++j) {
      for (Eigen::Index i = 0; i < n; ++i) {
        if (i != j) s += m(i, j) * m(i, j);
      }
    }
    return std::sqrt(s);
  };

  int sweep = 0;
  for (; off_norm() >= tol; ++sweep) {
    if (sweep == kJacobiMaxSweeps) {
      throw NumericError("Jacobi did not converge in " + std::to_string(kJacobiMaxSweeps) + " sweeps");
    }
    for (Eigen::Index p = 0; p + 1 < n; ++p) {
      for (Eigen::Index q = p + 1; q < n; ++q) {
        const double apq = m(p, q);
        if (apq == 0.0) continue;
        const double app = m(p, p);
        const double aqq = m(q, q);
        const double theta = (aqq - app) / (2.0 * apq);
        const double t = (theta >= 0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        // Columns are contiguous: rotate columns p and q, then mirror.
        double* cp = m.col(p).data();
        double* cq = m.col(q).data();
        for (Eigen::Index k = 0; k < n; ++k) {
          const double x = cp[k];
          const double y = cq[k];
          cp[k] = c * x - s * y;
          cq[k] = s * x + c * y;
        }
        for (Eigen::Index k = 0; k < n; ++k) {
          m(p, k) = cp[k];
          m(q, k) = cq[k];
        }
        m(p, p) = app - t * apq;
        m(q, q) = aqq + t * apq;
        m(p, q) = 0.0;
        m(q, p) = 0.0;
      }
    }
  }
  std::vector<double> ev(static_cast<std::size_t>(n));
  for (Eigen::Index i = 0; i < n; ++i) ev[static_cast<std::size_t>(i)] = m(i, i);
  std::sort(ev.begin(), ev.end());
  return ev;
}

IntPoly poly_from_roots(const std::vector<BigInt>& roots) {
  IntPoly p{1};
  for (const auto& r : roots) p = poly_mul(p, IntPoly{-r, 1});
  return p;
}

OracleReport verify_spectrum(const GcdGraph& graph) {
  return verify_spectrum(graph, full_spectrum(graph).values());
}

OracleReport verify_spectrum(const GcdGraph& graph, const std::vector<BigInt>& predicted) {
  if (predicted.size() != graph.order()) {
    throw ArgumentError("verify_spectrum: expected " + std::to_string(graph.order()) + " eigenvalues");
  }
  const DenseMatrix a = adjacency_matrix(graph);
  OracleReport rep;
  rep.row_sums_ok = (a.rowwise().sum().array() == static_cast<int>(graph.degree())).all();
  if (graph.order() <= kMaxExactOrder) {
    rep.method = "exact-charpoly";
    IntPoly cp = charpoly_exact(a);
    const IntPoly pred = poly_from_roots(predicted);
    BigInt worst = 0;
    for (std::size_t k = 0; k < std::max(cp.size(), pred.size()); ++k) {
      const BigInt x = k < cp.size() ? cp[k] : BigInt(0);
      const BigInt y = k < pred.size() ? pred[k] : BigInt(0);
      worst = std::max(worst, BigInt(abs(x - y)));
    }
    rep.max_deviation = worst.convert_to<double>();
    rep.pass = worst == 0 && rep.row_sums_ok;
    rep.charpoly = std::move(cp);
    return rep;
  }
  rep.method = "float-jacobi";
  const auto ev = eigs_float(a);
  std::vector<double> pred;
  pred.reserve(predicted.size());
  for (const auto& v : predicted) pred.push_back(v.convert_to<double>());
  std::sort(pred.begin(), pred.end());
  for (std::size_t i = 0; i < ev.size(); ++i) {
    rep.max_deviation = std::max(rep.max_deviation, std::abs(ev[i] - pred[i]));
  }
  rep.pass = rep.max_deviation < kFloatMatchTolerance && rep.row_sums_ok;
  return rep;
}

}  // namespace gcdgraph
