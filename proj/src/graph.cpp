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

#include "gcdgraph/graph.hpp"

#include <algorithm>
#include <deque>

namespace gcdgraph {

namespace {

// Orbit/scan cross-check at construction is quadratic; keep it to small rings.
constexpr std::size_t kScanCrossCheckLimit = 256;

Diameter diameter_from(const BfsResult& r, std::size_t order) {
  if (r.reached != order) return Diameter{};
  return Diameter{r.layer_sizes.size() - 1};
}

}  // namespace

DivisorList::DivisorList(const Ring& ring, const std::vector<Element>& generators) : ring_(ring) {
  for (std::size_t i = 0; i < generators.size(); ++i) {
    ring.check(generators[i]);
    if (generators[i].index() == 0) {
      throw ArgumentError("generator " + std::to_string(i) +
                          " is zero; divisor ideals must be nonzero");
    }
    Ideal I = principal_ideal(ring, generators[i]);
    if (std::find(ideals_.begin(), ideals_.end(), I) != ideals_.end()) continue;
    generators_.push_back(generators[i]);
    ideals_.push_back(std::move(I));
  }
}

GcdGraph::GcdGraph(const Ring& ring, const std::vector<Element>& generators)
    : divisors_(ring, generators), in_s_(ring.size(), 0) {
  const auto units = ring.units();
  for (Element x : divisors_.generators()) {
    for (Element u : units) in_s_[ring.mul_index(u.index(), x.index())] = 1;
  }
  for (Index a = 0; a < ring.size(); ++a) {
    if (in_s_[a]) gen_set_.push_back(ring.element(a));
  }
  if (ring.size() <= kScanCrossCheckLimit && generating_set_by_scan(divisors_) != gen_set_) {
    throw InvariantError("unit-orbit generating set differs from the ideal scan");
  }
}

bool GcdGraph::adjacent(Element a, Element b) const {
  return in_s_[ring().sub(a, b).index()] != 0;
}

GcdGraph build_gcd_graph(const Ring& ring, const std::vector<Element>& generators) {
  return GcdGraph(ring, generators);
}

std::vector<Element> generating_set_by_scan(const DivisorList& divisors) {
  const Ring& ring = divisors.ring();
  std::vector<Element> s;
  for (Index r = 1; r < ring.size(); ++r) {
    const Element x = ring.element(r);
    // Rr = I iff r in I and |Rr| = |I|; avoids building Rr for most r.
    for (const Ideal& I : divisors.ideals()) {
      if (!I.contains(x)) continue;
      if (principal_ideal(ring, x) == I) {
        s.push_back(x);
        break;
      }
    }
  }
  return s;
}

GeneratorDecomposition generating_set_decomposition(const GcdGraph& graph, Element s) {
  const Ring& ring = graph.ring();
  ring.check(s);
  if (!graph.in_generating_set(s.index())) {
    throw ArgumentError("element " + to_string(ring, s) + " is not in the generating set");
  }
  const Ideal Rs = principal_ideal(ring, s);
  const auto& ideals = graph.divisors().ideals();
  const auto it = std::find(ideals.begin(), ideals.end(), Rs);
  if (it == ideals.end()) throw InvariantError("generating set element generates no ideal of D");
  const auto i = static_cast<std::size_t>(it - ideals.begin());
  const Element x = graph.divisors().generators()[i];
  QuotientRing q = quotient(ring, annihilator(ring, x));
  std::optional<Element> found;
  std::size_t count = 0;
  for (Index u = 0; u < q.ring().size(); ++u) {
    if (!q.ring().is_unit_index(u)) continue;
    const Element lift = q.lift(q.ring().element(u));
    if (ring.mul(lift, x) == s) {
      if (!found) found = q.ring().element(u);
      ++count;
    }
  }
  if (!found) throw InvariantError("no unit class represents the generator");
  return GeneratorDecomposition{i, std::move(q), *found, count};
}

BfsResult bfs(const GcdGraph& graph, Element start) {
  const Ring& ring = graph.ring();
  ring.check(start);
  BfsResult r;
  r.distance.assign(ring.size(), -1);
  std::vector<Index> frontier{start.index()};
  r.distance[start.index()] = 0;
  r.reached = 1;
  r.layer_sizes.push_back(1);
  for (std::int32_t d = 1; !frontier.empty(); ++d) {
    std::vector<Index> next;
    for (Index v : frontier) {
      for (Element s : graph.generating_set()) {
        const Index w = ring.add_index(v, s.index());
        if (r.distance[w] < 0) {
          r.distance[w] = d;
          next.push_back(w);
        }
      }
    }
    if (!next.empty()) r.layer_sizes.push_back(next.size());
    r.reached += next.size();
    frontier = std::move(next);
  }
  return r;
}

bool is_connected(const GcdGraph& graph) {
  return bfs(graph, graph.ring().zero()).reached == graph.order();
}

std::size_t components(const GcdGraph& graph) {
  // Cayley graphs are vertex transitive: all components have equal size.
  return graph.order() / bfs(graph, graph.ring().zero()).reached;
}

Diameter diameter(const GcdGraph& graph) {
  return diameter_from(bfs(graph, graph.ring().zero()), graph.order());
}

std::optional<std::size_t> min_cover_t(const GcdGraph& graph) {
  const auto& ideals = graph.divisors().ideals();
  const std::size_t k = ideals.size();
  if (k > kMaxCoverIdeals) {
    throw ArgumentError("min_cover_t: |D| = " + std::to_string(k) + " exceeds the cap of " +
                        std::to_string(kMaxCoverIdeals));
  }
  const Ring& ring = graph.ring();
  if (ring.size() == 1) return 0;
  for (std::size_t t = 1; t <= k; ++t) {
    // Lexicographic t-subsets via a selection mask.
    std::vector<bool> pick(k, false);
    std::fill(pick.begin(), pick.begin() + static_cast<std::ptrdiff_t>(t), true);
    do {
      std::vector<Ideal> chosen;
      for (std::size_t i = 0; i < k; ++i) {
        if (pick[i]) chosen.push_back(ideals[i]);
      }
      if (ideal_sum(ring, chosen).is_whole_ring()) return t;
    } while (std::prev_permutation(pick.begin(), pick.end()));
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------

CubelikeGraph::CubelikeGraph(std::size_t dimension, std::vector<std::uint32_t> generators)
    : dimension_(dimension), generators_(std::move(generators)) {
  if (dimension_ > 24) throw ArgumentError("cubelike dimension too large");
  std::erase(generators_, 0u);
  std::sort(generators_.begin(), generators_.end());
  generators_.erase(std::unique(generators_.begin(), generators_.end()), generators_.end());
  for (auto g : generators_) {
    if (g >= order()) throw ArgumentError("cubelike generator out of range");
  }
}

BfsResult CubelikeGraph::bfs(std::uint32_t start) const {
  BfsResult r;
  r.distance.assign(order(), -1);
  std::vector<std::uint32_t> frontier{start};
  r.distance[start] = 0;
  r.reached = 1;
  r.layer_sizes.push_back(1);
  for (std::int32_t d = 1; !frontier.empty(); ++d) {
    std::vector<std::uint32_t> next;
    for (auto v : frontier) {
      for (auto g : generators_) {
        const std::uint32_t w = v ^ g;
        if (r.distance[w] < 0) {
          r.distance[w] = d;
          next.push_back(w);
        }
      }
    }
    if (!next.empty()) r.layer_sizes.push_back(next.size());
    r.reached += next.size();
    frontier = std::move(next);
  }
  return r;
}

bool CubelikeGraph::is_connected() const { return bfs(0).reached == order(); }
std::size_t CubelikeGraph::components() const { return order() / bfs(0).reached; }
Diameter CubelikeGraph::diameter() const { return diameter_from(bfs(0), order()); }

CubelikeReduction cubelike_reduction(const GcdGraph& graph) {
  F2Reduction map = f2_reduction(graph.ring());
  std::vector<std::uint32_t> gens;
  // The only unit of F_2^r is 1, so each image ideal contributes exactly its
  // generator.
  for (Element x : graph.divisors().generators()) gens.push_back(map(x));
  CubelikeGraph cube(map.r, std::move(gens));
  return CubelikeReduction{std::move(map), std::move(cube)};
}

bool connectivity_predict(const GcdGraph& graph) {
  const auto& ideals = graph.divisors().ideals();
  if (ideals.empty()) return graph.order() == 1;
  if (!ideal_sum(graph.ring(), ideals).is_whole_ring()) return false;
  return cubelike_reduction(graph).graph.is_connected();
}

DiameterBounds diameter_bounds(const GcdGraph& graph) {
  if (!connectivity_predict(graph)) {
    throw ContractError("diameter_bounds requires a connected gcd-graph");
  }
  DiameterBounds b;
  b.t = min_cover_t(graph).value_or(0);
  b.cubelike_diameter = *cubelike_reduction(graph).graph.diameter().value;
  b.lower = b.t;
  b.upper = 2 * b.t + b.cubelike_diameter;
  const Ring& ring = graph.ring();
  const GcdGraph unitary(ring, ring.size() > 1 ? std::vector<Element>{ring.one()}
                                               : std::vector<Element>{});
  const Diameter du = diameter(unitary);
  if (!du.infinite()) {
    b.unitary_diameter = du.value;
    b.coarse_upper = 3 * graph.divisors().size();
  }
  return b;
}

bool quotient_morphism_check(const GcdGraph& graph, const Ideal& ideal) {
  const Ring& ring = graph.ring();
  if (!(ideal.ring() == ring)) throw StructuralError("ideal belongs to a different ring");
  if (ideal.is_whole_ring()) throw ArgumentError("quotient_morphism_check needs a proper ideal");
  const QuotientRing q = quotient(ring, ideal);
  const Ring& rq = q.ring();

  std::vector<Element> images;
  for (Element x : graph.divisors().generators()) {
    const Element y = q.reduce(x);
    if (y.index() != 0) images.push_back(y);
  }
  const GcdGraph image_graph(rq, images);

  // Images of principal ideals are the principal ideals of the images.
  for (Element x : graph.divisors().generators()) {
    const Element y = q.reduce(x);
    std::vector<Element> img;
    const Ideal Rx = principal_ideal(ring, x);
    for (Element a : Rx.elements()) img.push_back(q.reduce(a));
    std::sort(img.begin(), img.end());
    img.erase(std::unique(img.begin(), img.end()), img.end());
    if (img != principal_ideal(rq, y).elements()) return false;
  }

  std::vector<Index> red(ring.size());
  for (Index a = 0; a < ring.size(); ++a) red[a] = q.reduce(ring.element(a)).index();
  for (Element s : graph.generating_set()) {
    const Index fs = red[s.index()];
    if (fs != 0 && !image_graph.in_generating_set(fs)) return false;
  }
  // Every edge maps to an edge or collapses to a vertex.
  for (Index a = 0; a < ring.size(); ++a) {
    for (Element s : graph.generating_set()) {
      const Index b = ring.add_index(a, s.index());
      const Index diff = rq.add_index(red[b], rq.neg_index(red[a]));
      if (diff != 0 && !image_graph.in_generating_set(diff)) return false;
    }
  }
  if (is_connected(graph) && !is_connected(image_graph)) return false;
  return true;
}

std::optional<std::pair<Element, Element>> sum_of_two_units(const Ring& ring, Element a) {
  ring.check(a);
  for (Element u : ring.units()) {
    const Element v = ring.sub(a, u);
    if (ring.is_unit(v)) return std::pair{u, v};
  }
  return std::nullopt;
}

}  // namespace gcdgraph
