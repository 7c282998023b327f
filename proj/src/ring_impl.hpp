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

#ifndef GCDGRAPH_SRC_RING_IMPL_HPP
#define GCDGRAPH_SRC_RING_IMPL_HPP

#include <mutex>
#include <span>
#include <string>
#include <vector>

#include "gcdgraph/ring.hpp"

namespace gcdgraph::detail {

struct Structure {
  std::vector<Element> idempotents;
  std::vector<LocalFactor> factors;
  std::vector<std::uint8_t> unit_mask;
};

Structure compute_structure(const Ring& ring);

struct RingImpl {
  RingImpl();
  virtual ~RingImpl();
  RingImpl(const RingImpl&) = delete;
  RingImpl& operator=(const RingImpl&) = delete;

  virtual Index add(Index a, Index b) const = 0;
  virtual Index neg(Index a) const = 0;
  virtual Index mul(Index a, Index b) const = 0;
  virtual std::vector<std::vector<Coeff>> coefficients(Index a) const = 0;
  virtual std::string name() const = 0;
  virtual const std::vector<Tower>* towers() const;

  const Structure& structure_data(const Ring& ring) const;

  std::uint32_t tag;
  std::size_t size = 1;
  Index one = 0;
  std::uint64_t characteristic = 1;

 private:
  mutable std::once_flag structure_once_;
  mutable Structure structure_;
};

std::string format_tower(const Tower& t);
std::string format_tower_element(const Tower& t, std::size_t depth, std::span<const Coeff> flat);

}  // namespace gcdgraph::detail

#endif  // GCDGRAPH_SRC_RING_IMPL_HPP
