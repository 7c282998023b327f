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

// gcd-graphs G_R(D): Cayley graphs on R whose generating set S is the set of
// generators of the principal ideals in D. Adjacency is implicit,
// a ~ b iff a - b in S.

#ifndef GCDGRAPH_GRAPH_HPP
#define GCDGRAPH_GRAPH_HPP

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "gcdgraph/ring.hpp"

namespace gcdgraph {

/// A precondition of a theorem-level query does not hold.
class ContractError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Graph distance; an empty value is the infinite diameter of a
/// disconnected graph.
struct Diameter {
  std::optional<std::size_t> value;

  bool infinite() const { return !value.has_value(); }
  std::string str() const { return value ? std::to_string(*value) : "inf"; }
  friend bool operator==(const Diameter&, const Diameter&) = default;
};

/// Deduplicated list of distinct nonzero principal ideals Rx_1, ..., Rx_k.
class DivisorList {
 public:
  /// Rejects zero generators (naming the index) and drops generators whose
  /// ideal is already present, keeping the first.
  DivisorList(const Ring& ring, const std::vector<Element>& generators);

  const Ring& ring() const { return ring_; }
  const std::vector<Element>& generators() const { return generators_; }
  const std::vector<Ideal>& ideals() const { return ideals_; }
  std::size_t size() const { return generators_.size(); }

 private:
  Ring ring_;
  std::vector<Element> generators_;
  std::vector<Ideal> ideals_;
};

class GcdGraph {
 public:
  GcdGraph(const Ring& ring, const std::vector<Element>& generators);

  const Ring& ring() const { return divisors_.ring(); }
  const DivisorList& divisors() const { return divisors_; }
  /// S, sorted.
  const std::vector<Element>& generating_set() const { return gen_set_; }
  bool in_generating_set(Index a) const { return in_s_[a] != 0; }
  bool adjacent(Element a, Element b) const;
  std::size_t order() const { return ring().size(); }
  std::size_t degree() const { return gen_set_.size(); }

 private:
  DivisorList divisors_;
  std::vector<Element> gen_set_;
  std::vector<std::uint8_t> in_s_;
};

GcdGraph build_gcd_graph(const Ring& ring, const std::vector<Element>& generators);

/// S computed from the definition: all r with Rr equal to some ideal in D.
std::vector<Element> generating_set_by_scan(const DivisorList& divisors);

/// s = u·x_i with u a unit class of R/Ann(x_i).
struct GeneratorDecomposition {
  std::size_t index = 0;
  QuotientRing quotient;
  /// Element of quotient.ring().
  Element unit;
  /// Number of unit classes u of R/Ann(x_i) with s = u·x_i (always 1).
  std::size_t class_count = 0;
};

GeneratorDecomposition generating_set_decomposition(const GcdGraph& graph, Element s);

struct BfsResult {
  /// Distance from the start, or -1 when unreachable.
  std::vector<std::int32_t> distance;
  /// Number of vertices at each distance.
  std::vector<std::size_t> layer_sizes;
  std::size_t reached = 0;
};

BfsResult bfs(const GcdGraph& graph, Element start);
bool is_connected(const GcdGraph& graph);
std::size_t components(const GcdGraph& graph);
Diameter diameter(const GcdGraph& graph);

inline constexpr std::size_t kMaxCoverIdeals = 20;

/// Smallest t such that some t ideals of D sum to R. Throws ArgumentError
/// when |D| exceeds kMaxCoverIdeals.
std::optional<std::size_t> min_cover_t(const GcdGraph& graph);

/// Cayley graph on F_2^r with bit-vector generators.
class CubelikeGraph {
 public:
  CubelikeGraph(std::size_t dimension, std::vector<std::uint32_t> generators);

  std::size_t dimension() const { return dimension_; }
  const std::vector<std::uint32_t>& generators() const { return generators_; }
  std::size_t order() const { return std::size_t{1} << dimension_; }

  BfsResult bfs(std::uint32_t start) const;
  bool is_connected() const;
  std::size_t components() const;
  Diameter diameter() const;

 private:
  std::size_t dimension_;
  std::vector<std::uint32_t> generators_;
};

struct CubelikeReduction {
  F2Reduction map;
  CubelikeGraph graph;
};

CubelikeReduction cubelike_reduction(const GcdGraph& graph);

/// Connected iff the ideals of D sum to R and the cubelike reduction is
/// connected.
bool connectivity_predict(const GcdGraph& graph);

struct DiameterBounds {
  std::size_t lower = 0;
  std::size_t upper = 0;
  std::size_t t = 0;
  std::size_t cubelike_diameter = 0;
  /// Diameter of the unitary graph G_R, when connected.
  std::optional<std::size_t> unitary_diameter;
  /// 3|D|, reported only when G_R is connected.
  std::optional<std::size_t> coarse_upper;
};

/// Throws ContractError if the graph is predicted disconnected.
DiameterBounds diameter_bounds(const GcdGraph& graph);

/// Verifies that R -> R/I maps G_R(D) onto a graph morphism into
/// G_{R/I}(D') and that connectivity is inherited. Throws ArgumentError if
/// I is the whole ring.
bool quotient_morphism_check(const GcdGraph& graph, const Ideal& ideal);

std::optional<std::pair<Element, Element>> sum_of_two_units(const Ring& ring, Element a);

}  // namespace gcdgraph

#endif  // GCDGRAPH_GRAPH_HPP
