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


#include "gcdgraph/report.hpp"

#include <sstream>

#include "gcdgraph/ring_spec.hpp"

namespace gcdgraph {

using nlohmann::ordered_json;

namespace {

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

ordered_json optional_size(const std::optional<std::size_t>& v) {
  return v ? ordered_json(*v) : ordered_json(nullptr);
}

ordered_json diameter_json(const Diameter& d) {
  return d.value ? ordered_json(*d.value) : ordered_json("inf");
}

std::string dot_quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

}  // namespace

ordered_json to_json(const BigInt& v) {
  if (v >= std::numeric_limits<std::int64_t>::min() && v <= std::numeric_limits<std::int64_t>::max()) {
    return v.convert_to<std::int64_t>();
  }
  return v.str();
}

ordered_json ring_info_json(const Ring& ring) {
  ordered_json j;
  j["ring"] = ring.name();
  j["cardinality"] = ring.size();
  j["characteristic"] = ring.characteristic();
  j["phi"] = euler_phi(ring);
  j["mu"] = moebius(ring);
  ordered_json ids = ordered_json::array();
  for (Element e : idempotents(ring)) ids.push_back(format_element(ring, e));
  j["idempotents"] = ids;
  ordered_json factors = ordered_json::array();
  for (const auto& f : local_decomposition(ring)) {
    ordered_json jf;
    jf["idempotent"] = format_element(ring, f.idempotent);
    jf["size"] = f.carrier.size();
    jf["maximal_ideal_size"] = f.maximal_ideal.size();
    jf["residue_field_size"] = f.residue_field_size;
    jf["field"] = f.is_field();
    jf["phi"] = euler_phi(f);
    factors.push_back(jf);
  }
  j["local_factors"] = factors;
  return j;
}

bool GraphSummary::consistent() const {
  if (connected != predicted_connected) return false;
  if (connected != !diameter.infinite()) return false;
  if (!connected) return true;
  if (!bounds || !t) return false;
  const std::size_t d = *diameter.value;
  if (d < bounds->lower || d > bounds->upper) return false;
  if (bounds->coarse_upper && d > *bounds->coarse_upper) return false;
  return true;
}

GraphSummary summarize(const GcdGraph& graph) {
  GraphSummary s;
  const BfsResult r = bfs(graph, graph.ring().zero());
  s.connected = r.reached == graph.order();
  s.components = graph.order() / r.reached;
  s.diameter = diameter(graph);
  s.predicted_connected = connectivity_predict(graph);
  if (graph.divisors().size() <= kMaxCoverIdeals) s.t = min_cover_t(graph);
  const CubelikeReduction cube = cubelike_reduction(graph);
  s.cubelike_dimension = cube.graph.dimension();
  s.cubelike_components = cube.graph.components();
  s.cubelike_diameter = cube.graph.diameter();
  if (s.predicted_connected && s.t) s.bounds = diameter_bounds(graph);
  return s;
}

ordered_json graph_json(const GcdGraph& graph, const GraphSummary& s) {
  const Ring& ring = graph.ring();
  ordered_json j;
  j["ring"] = ring.name();
  ordered_json d = ordered_json::array();
  for (Element x : graph.divisors().generators()) d.push_back(format_element(ring, x));
  j["D"] = d;
  ordered_json gs = ordered_json::array();
  for (Element x : graph.generating_set()) gs.push_back(format_element(ring, x));
  j["S"] = gs;
  j["order"] = graph.order();
  j["degree"] = graph.degree();
  j["connected"] = s.connected;
  j["predicted_connected"] = s.predicted_connected;
  j["components"] = s.components;
  j["diameter"] = diameter_json(s.diameter);
  j["t"] = optional_size(s.t);
  j["cubelike"] = {{"r", s.cubelike_dimension},
                   {"components", s.cubelike_components},
                   {"diameter", diameter_json(s.cubelike_diameter)}};
  if (s.bounds) {
    j["bounds"] = {{"lower", s.bounds->lower},
                   {"upper", s.bounds->upper},
                   {"unitary_diameter", optional_size(s.bounds->unitary_diameter)},
                   {"coarse_upper", optional_size(s.bounds->coarse_upper)}};
  } else {
    j["bounds"] = nullptr;
  }
  j["consistent"] = s.consistent();
  return j;
}

ordered_json spectrum_json(const GcdGraph& graph, const SpectrumReport& spec) {
  const Ring& ring = graph.ring();
  ordered_json j;
  j["ring"] = ring.name();
  ordered_json entries = ordered_json::array();
  for (const auto& e : spec.entries) {
    entries.push_back({{"g", format_element(ring, e.g)}, {"lambda", to_json(e.lambda)}, {"orbit_size", e.orbit_size}});
  }
  j["entries"] = entries;
  ordered_json ms = ordered_json::array();
  for (const auto& [lambda, mult] : spec.multiset) {
    ms.push_back({{"lambda", to_json(lambda)}, {"multiplicity", mult}});
  }
  j["multiset"] = ms;
  j["checks"] = {{"trace", spec.trace_ok()}, {"trace_sq", spec.trace_sq_ok()}};
  return j;
}

ordered_json oracle_json(const OracleReport& rep) {
  ordered_json j;
  j["method"] = rep.method;
  j["pass"] = rep.pass;
  j["max_deviation"] = rep.max_deviation;
  j["row_sums_ok"] = rep.row_sums_ok;
  if (rep.charpoly) {
    ordered_json c = ordered_json::array();
    for (const auto& v : *rep.charpoly) c.push_back(to_json(v));
    j["charpoly"] = c;
  }
  return j;
}

ordered_json ramanujan_json(const Ring& ring, const std::vector<RamanujanRow>& rows) {
  ordered_json j;
  j["ring"] = ring.name();
  ordered_json arr = ordered_json::array();
  bool agree = true;
  for (const auto& r : rows) {
    ordered_json e{{"g", format_element(ring, r.g)}, {"c", to_json(r.closed)}};
    if (r.direct) {
      const bool ok = r.direct->to_integer() == std::optional<BigInt>(r.closed);
      agree = agree && ok;
      e["direct"] = to_string(*r.direct);
      e["agree"] = ok;
    }
    arr.push_back(e);
  }
  j["table"] = arr;
  j["agree"] = agree;
  return j;
}

std::string graph_csv(const GcdGraph& graph) {
  const Ring& ring = graph.ring();
  std::ostringstream out;
  out << "source,target\n";
  for (Index a = 0; a < graph.order(); ++a) {
    for (Element s : graph.generating_set()) {
      const Index b = ring.add_index(a, s.index());
      if (a < b) {
        out << csv_field(format_element(ring, ring.element(a))) << ','
            << csv_field(format_element(ring, ring.element(b))) << '\n';
      }
    }
  }
  return out.str();
}

std::string spectrum_csv(const GcdGraph& graph, const SpectrumReport& spec) {
  std::ostringstream out;
  out << "g,lambda,orbit_size\n";
  for (const auto& e : spec.entries) {
    out << csv_field(format_element(graph.ring(), e.g)) << ',' << e.lambda.str() << ',' << e.orbit_size << '\n';
  }
  return out.str();
}

std::string ramanujan_csv(const Ring& ring, const std::vector<RamanujanRow>& rows) {
  std::ostringstream out;
  out << "g,c\n";
  for (const auto& r : rows) out << csv_field(format_element(ring, r.g)) << ',' << r.closed.str() << '\n';
  return out.str();
}

std::string to_dot(const GcdGraph& graph) {
  const Ring& ring = graph.ring();
  std::vector<std::string> names;
  names.reserve(graph.order());
  for (Index a = 0; a < graph.order(); ++a) names.push_back(dot_quote(format_element(ring, ring.element(a))));
  std::ostringstream out;
  out << "graph " << dot_quote(ring.name()) << " {\n";
  for (const auto& n : names) out << "  " << n << ";\n";
  for (Index a = 0; a < graph.order(); ++a) {
    for (Element s : graph.generating_set()) {
      const Index b = ring.add_index(a, s.index());
      if (a < b) out << "  " << names[a] << " -- " << names[b] << ";\n";
    }
  }
  out << "}\n";
  return out.str();
}

}  // namespace gcdgraph
