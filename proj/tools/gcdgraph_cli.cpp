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


// Command-line front end. Reports go to stdout, diagnostics to stderr.
// Exit codes: 0 success, 1 a check failed, 2 usage or parse error.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "gcdgraph/graph.hpp"
#include "gcdgraph/oracle.hpp"
#include "gcdgraph/ramanujan.hpp"
#include "gcdgraph/report.hpp"
#include "gcdgraph/ring_spec.hpp"
#include "gcdgraph/spectrum.hpp"
#include "gcdgraph/symmetric.hpp"

namespace {

using namespace gcdgraph;
using nlohmann::ordered_json;

constexpr int kOk = 0;
constexpr int kCheckFailed = 1;
constexpr int kUsage = 2;

struct Options {
  std::string format = "json";
  std::uint64_t seed = 1;
  std::size_t max_card = kDefaultMaxCardinality;
  std::string ring;
  std::string gens;
  std::string psi;
  std::string output;
  std::size_t samples = 3;
  std::optional<std::size_t> perturb;
};

int emit(const ordered_json& j, bool ok) {
  std::cout << j.dump(2) << '\n';
  return ok ? kOk : kCheckFailed;
}

GcdGraph load_graph(const Options& o) {
  const Ring ring = parse_ring_spec(o.ring, o.max_card);
  return GcdGraph(ring, parse_element_list(ring, o.gens));
}

int cmd_info(const Options& o) {
  const Ring ring = parse_ring_spec(o.ring, o.max_card);
  const ordered_json j = ring_info_json(ring);
  if (o.format == "csv") {
    std::cout << "field,value\n";
    for (const char* k : {"ring", "cardinality", "characteristic", "phi", "mu"}) {
      std::cout << k << ',' << (j[k].is_string() ? j[k].get<std::string>() : j[k].dump()) << '\n';
    }
    return kOk;
  }
  return emit(j, true);
}

int cmd_graph(const Options& o) {
  const GcdGraph g = load_graph(o);
  const GraphSummary s = summarize(g);
  if (o.format == "csv") {
    std::cout << graph_csv(g);
    return s.consistent() ? kOk : kCheckFailed;
  }
  return emit(graph_json(g, s), s.consistent());
}

int cmd_spectrum(const Options& o) {
  const GcdGraph g = load_graph(o);
  const SpectrumReport rep = full_spectrum(g);
  const bool ok = rep.trace_ok() && rep.trace_sq_ok();
  if (o.format == "csv") {
    std::cout << spectrum_csv(g, rep);
    return ok ? kOk : kCheckFailed;
  }
  return emit(spectrum_json(g, rep), ok);
}

int cmd_verify(const Options& o) {
  const GcdGraph g = load_graph(o);
  const Ring& ring = g.ring();
  const SpectrumReport spec = full_spectrum(g);
  auto predicted = spec.values();
  if (o.perturb) {
    if (*o.perturb >= predicted.size()) throw ArgumentError("--perturb index out of range");
    predicted[*o.perturb] += 1;
  }
  const OracleReport rep = verify_spectrum(g, predicted);
  ordered_json j = oracle_json(rep);
  j["ring"] = ring.name();
  j["checks"] = {{"trace", spec.trace_ok()}, {"trace_sq", spec.trace_sq_ok()}};
  bool ok = rep.pass && spec.trace_ok() && spec.trace_sq_ok();

  // Seeded sample of proper principal ideals Rx (x a non-unit) for the
  // quotient morphism check.
  std::vector<Element> non_units;
  for (Index a = 0; a < ring.size(); ++a) {
    if (!ring.is_unit_index(a)) non_units.push_back(ring.element(a));
  }
  std::mt19937_64 rng(o.seed);
  std::uniform_int_distribution<std::size_t> pick(0, non_units.size() - 1);
  ordered_json samples = ordered_json::array();
  for (std::size_t i = 0; i < o.samples && !non_units.empty(); ++i) {
    const Element x = non_units[pick(rng)];
    const Ideal I = principal_ideal(ring, x);
    const bool pass = quotient_morphism_check(g, I);
    ok = ok && pass;
    samples.push_back({{"ideal_generator", format_element(ring, x)}, {"ideal_size", I.size()}, {"pass", pass}});
  }
  j["quotient_checks"] = samples;
  j["all_pass"] = ok;
  if (o.format == "csv") {
    std::cout << "method,pass,max_deviation\n" << rep.method << ',' << (ok ? "true" : "false") << ','
              << rep.max_deviation << '\n';
    return ok ? kOk : kCheckFailed;
  }
  return emit(j, ok);
}

int cmd_ramanujan(const Options& o) {
  const Ring ring = parse_ring_spec(o.ring, o.max_card);
  std::optional<LinearFunctional> psi;
  if (!o.psi.empty()) {
    if (o.psi != "canonical") throw ArgumentError("unknown functional '" + o.psi + "'");
    psi = canonical_functional(ring);
  }
  const auto rows = ramanujan_table(ring, psi ? &*psi : nullptr);
  const ordered_json j = ramanujan_json(ring, rows);
  const bool ok = j["agree"].get<bool>();
  if (o.format == "csv") {
    std::cout << ramanujan_csv(ring, rows);
    return ok ? kOk : kCheckFailed;
  }
  return emit(j, ok);
}

int cmd_export_dot(const Options& o) {
  const GcdGraph g = load_graph(o);
  std::ofstream out(o.output);
  if (!out) {
    std::cerr << "error: cannot open " << o.output << " for writing\n";
    return kUsage;
  }
  out << to_dot(g);
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"gcd-graphs over finite commutative rings"};
  app.require_subcommand(1);
  app.fallthrough();
  Options o;
  app.add_option("--format", o.format, "Output format")->check(CLI::IsMember({"json", "csv"}));
  app.add_option("--seed", o.seed, "Seed for sampled checks");
  app.add_option("--max-card", o.max_card, "Largest ring cardinality accepted");

  auto* info = app.add_subcommand("info", "Ring structure: cardinality, local factors, phi, mu");
  info->add_option("ring", o.ring, "Ring spec")->required();

  auto graph_cmd = [&](const char* name, const char* help) {
    auto* c = app.add_subcommand(name, help);
    c->add_option("ring", o.ring, "Ring spec")->required();
    c->add_option("--gens", o.gens, "Divisor generators separated by ';'")->required();
    return c;
  };
  auto* graph = graph_cmd("graph", "Generating set, connectivity, diameter and bounds");
  auto* spectrum = graph_cmd("spectrum", "Integer spectrum by unit orbits");
  auto* verify = graph_cmd("verify", "Check the spectrum against the adjacency matrix");
  verify->add_option("--samples", o.samples, "Number of sampled quotient checks");
  verify->add_option("--perturb", o.perturb, "Add 1 to the predicted eigenvalue at this element index");
  auto* dot = graph_cmd("export-dot", "Write the graph in DOT format");
  dot->add_option("-o,--output", o.output, "Output file")->required();

  auto* ram = app.add_subcommand("ramanujan", "Table of generalized Ramanujan sums");
  ram->add_option("ring", o.ring, "Ring spec")->required();
  ram->add_option("--psi", o.psi, "Also evaluate the character sums with this functional")
      ->check(CLI::IsMember({"canonical"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (*info) return cmd_info(o);
    if (*graph) return cmd_graph(o);
    if (*spectrum) return cmd_spectrum(o);
    if (*verify) return cmd_verify(o);
    if (*ram) return cmd_ramanujan(o);
    if (*dot) return cmd_export_dot(o);
  } catch (const ParseError& e) {
    std::cerr << e.what() << '\n';
    return kUsage;
  } catch (const ArgumentError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const StructuralError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "check failed: " << e.what() << '\n';
    return kCheckFailed;
  }
  return kUsage;
}
