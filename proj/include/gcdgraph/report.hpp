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


// JSON, CSV and DOT serialization of library results. Elements are written
// in the ring-spec tuple syntax; all orderings are canonical so output is
// byte-stable.

#ifndef GCDGRAPH_REPORT_HPP
#define GCDGRAPH_REPORT_HPP

#include <string>

#include <json.hpp>

#include "gcdgraph/graph.hpp"
#include "gcdgraph/oracle.hpp"
#include "gcdgraph/ramanujan.hpp"
#include "gcdgraph/spectrum.hpp"

namespace gcdgraph {

/// Big integers go out as JSON numbers when they fit in 64 bits, strings
/// otherwise.
nlohmann::ordered_json to_json(const BigInt& v);

nlohmann::ordered_json ring_info_json(const Ring& ring);

struct GraphSummary {
  bool connected = false;
  bool predicted_connected = false;
  std::size_t components = 0;
  Diameter diameter;
  std::optional<std::size_t> t;
  std::size_t cubelike_dimension = 0;
  std::size_t cubelike_components = 0;
  Diameter cubelike_diameter;
  std::optional<DiameterBounds> bounds;

  /// Prediction matches BFS and, when connected, the bounds hold.
  bool consistent() const;
};

GraphSummary summarize(const GcdGraph& graph);

nlohmann::ordered_json graph_json(const GcdGraph& graph, const GraphSummary& summary);
nlohmann::ordered_json spectrum_json(const GcdGraph& graph, const SpectrumReport& spectrum);
nlohmann::ordered_json oracle_json(const OracleReport& report);
nlohmann::ordered_json ramanujan_json(const Ring& ring, const std::vector<RamanujanRow>& rows);

std::string graph_csv(const GcdGraph& graph);
std::string spectrum_csv(const GcdGraph& graph, const SpectrumReport& spectrum);
std::string ramanujan_csv(const Ring& ring, const std::vector<RamanujanRow>& rows);

std::string to_dot(const GcdGraph& graph);

}  // namespace gcdgraph

#endif  // GCDGRAPH_REPORT_HPP
