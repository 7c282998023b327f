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


#include "corpus.hpp"

#include <algorithm>

#include "gcdgraph/ring_spec.hpp"

namespace gcdgraph::testing {

namespace {

std::uint64_t smallest_prime_factor(std::uint64_t n) {
  for (std::uint64_t p = 2; p * p <= n; ++p) {
    if (n % p == 0) return p;
  }
  return n;
}

std::vector<CorpusEntry> build_small() {
  std::vector<CorpusEntry> c;
  for (std::uint64_t n = 4; n <= 30; ++n) {
    const std::string ring = "Z/" + std::to_string(n);
    const std::uint64_t p = smallest_prime_factor(n);
    if (p == n) {
      c.push_back({ring, "(1)"});
    } else if (n % 3 == 0) {
      // A single non-unit divisor: disconnected.
      c.push_back({ring, "(" + std::to_string(p) + ")"});
    } else {
      c.push_back({ring, "(1);(" + std::to_string(p) + ")"});
    }
  }
  const std::vector<CorpusEntry> extra = {
      {"F4", "(1)"},
      {"F8", "(1)"},
      {"F9", "(1)"},
      {"F9", "(a + 1)"},
      {"F3[x]/(x^2)", "(1);(x)"},
      {"F3[x]/(x^2)", "(x)"},
      {"GR(4,2)", "(1);(2)"},
      {"Z/4[y]/(y^2 + y + 1)", "(y)"},
      {"F2[x]/(x^2)[y]/(y^2)", "(1);(x);(x*y)"},
      {"F2[x]/(x^2)[y]/(y^2)", "(x + y)"},
      {"F3[x]/(x^2) x Z/2", "(1,1);(x,0)"},
      {"Z/12", "(1);(2);(3);(4);(6)"},
      {"Z/30", "(1);(6);(10);(15)"},
      {"Z/2 x F4", "(1,1);(0,a)"},
      // Two or more residue fields equal to F_2.
      {"Z/2 x Z/2", "(1,1)"},
      {"Z/2 x Z/2", "(1,0);(0,1)"},
      {"Z/4 x Z/2", "(1,1)"},
      {"Z/4 x Z/2", "(1,1);(1,0)"},
      {"F2[x]/(x^2) x Z/2", "(1,1);(x,1)"},
      {"F2[x]/(x^2) x Z/4", "(1,1);(0,1)"},
      {"Z/2 x Z/2 x Z/2", "(1,1,0);(0,1,1)"},
      {"Z/2 x Z/2 x Z/2", "(1,1,0);(0,1,1);(1,0,0)"},
      {"Z/4 x Z/4", "(1,1);(2,1)"},
      {"Z/2 x Z/4 x Z/2", "(1,1,1);(1,2,0)"},
      {"F2[x]/(x^2) x F2[x]/(x^2)", "(1,1);(x,1);(1,x)"},
      {"Z/2 x Z/2 x Z/2 x Z/2", "(1,1,1,1)"},
      {"Z/2 x Z/2 x Z/2 x Z/2", "(1,1,0,0);(0,1,1,0);(0,0,1,1);(1,0,0,0)"},
      {"Z/4 x Z/2 x Z/3", "(1,1,1);(0,1,0);(1,0,2)"},
      {"Z/2 x Z/2 x F4", "(1,1,a);(1,0,0)"},
  };
  c.insert(c.end(), extra.begin(), extra.end());
  return c;
}

std::vector<CorpusEntry> build_medium() {
  return {
      {"Z/2 x Z/2 x F3[x]/(x^2) x Z/2", "(1,1,1,1);(1,0,x,0);(0,1,0,1)"},
      {"F3[x]/(x^2) x Z/2 x Z/5", "(1,1,1);(x,0,1)"},
      {"GR(4,2) x Z/7", "(1,1);(2,0)"},
      {"F2[x]/(x^2)[y]/(y^2) x F9", "(1,1);(x,0);(y,a)"},
      {"Z/8 x Z/27", "(1,1);(2,3);(4,0)"},
      {"F4 x F4 x Z/4 x Z/4", "(1,1,1,1);(0,1,2,0)"},
      {"Z/2 x Z/2 x Z/2 x F3[x]/(x^2) x Z/5", "(1,1,0,1,1);(0,1,1,x,0);(1,0,1,0,0)"},
      {"F8 x Z/64", "(1,1);(0,2)"},
  };
}

}  // namespace

const std::vector<CorpusEntry>& small_corpus() {
  static const std::vector<CorpusEntry> c = build_small();
  return c;
}

const std::vector<CorpusEntry>& medium_corpus() {
  static const std::vector<CorpusEntry> c = build_medium();
  return c;
}

std::vector<CorpusEntry> full_corpus() {
  std::vector<CorpusEntry> c = small_corpus();
  const auto& m = medium_corpus();
  c.insert(c.end(), m.begin(), m.end());
  return c;
}

std::vector<std::string> corpus_rings(const std::vector<CorpusEntry>& entries) {
  std::vector<std::string> out;
  for (const auto& e : entries) {
    if (std::find(out.begin(), out.end(), e.ring) == out.end()) out.push_back(e.ring);
  }
  return out;
}

GcdGraph load(const CorpusEntry& e) {
  const Ring ring = parse_ring_spec(e.ring);
  return GcdGraph(ring, parse_element_list(ring, e.gens));
}

}  // namespace gcdgraph::testing
