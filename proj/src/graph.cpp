// Copyright 2026 The relaxlab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "relaxlab/graph.hpp"

#include <cstdio>
#include <stdexcept>
#include <utility>

#include "relaxlab/rng.hpp"

namespace relaxlab {
namespace {

constexpr std::uint64_t kFnvOffset = 1469598103934665603ull;
constexpr std::uint64_t kFnvPrime = 1099511628211ull;

std::uint64_t fnv_mix(std::uint64_t h, std::uint64_t v) {
  for (int i = 0; i < 8; ++i) {
    h ^= (v >> (8 * i)) & 0xffu;
    h *= kFnvPrime;
  }
  return h;
}

std::uint64_t pack_pair(int tail, int head) {
  return (static_cast<std::uint64_t>(static_cast<std::uint32_t>(tail)) << 32) |
         static_cast<std::uint64_t>(static_cast<std::uint32_t>(head));
}

}  // namespace

Digraph::Digraph(int vertex_count, std::vector<Edge> edges)
    : n_(vertex_count), edges_(std::move(edges)) {
  if (n_ < 0) throw std::invalid_argument("Digraph: negative vertex count");
  index_by_pair_.reserve(edges_.size());
  std::uint64_t h = kFnvOffset;
  h = fnv_mix(h, static_cast<std::uint64_t>(n_));
  h = fnv_mix(h, edges_.size());
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    const Edge& e = edges_[i];
    if (e.tail < 0 || e.tail >= n_ || e.head < 0 || e.head >= n_) {
      throw std::invalid_argument("Digraph: edge endpoint out of range");
    }
    if (e.tail == e.head) throw std::invalid_argument("Digraph: self-loop");
    if (!index_by_pair_.emplace(pack_pair(e.tail, e.head), static_cast<int>(i)).second) {
      throw std::invalid_argument("Digraph: duplicate edge");
    }
    h = fnv_mix(h, static_cast<std::uint64_t>(e.tail));
    h = fnv_mix(h, static_cast<std::uint64_t>(e.head));
  }
  fingerprint_ = h;

  // CSR out-edge index, preserving edge-index order within each bucket.
  out_offsets_.assign(static_cast<std::size_t>(n_) + 1, 0);
  for (const Edge& e : edges_) ++out_offsets_[static_cast<std::size_t>(e.tail) + 1];
  for (int v = 0; v < n_; ++v) out_offsets_[static_cast<std::size_t>(v) + 1] += out_offsets_[static_cast<std::size_t>(v)];
  out_edge_ids_.resize(edges_.size());
  std::vector<int> cursor(out_offsets_.begin(), out_offsets_.end() - 1);
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    out_edge_ids_[static_cast<std::size_t>(cursor[static_cast<std::size_t>(edges_[i].tail)]++)] =
        static_cast<int>(i);
  }
}

std::span<const int> Digraph::out_edges(int v) const {
  if (v < 0 || v >= n_) throw std::invalid_argument("Digraph: vertex out of range");
  const auto begin = static_cast<std::size_t>(out_offsets_[static_cast<std::size_t>(v)]);
  const auto end = static_cast<std::size_t>(out_offsets_[static_cast<std::size_t>(v) + 1]);
  return {out_edge_ids_.data() + begin, end - begin};
}

std::optional<int> Digraph::edge_index(int tail, int head) const {
  const auto it = index_by_pair_.find(pack_pair(tail, head));
  if (it == index_by_pair_.end()) return std::nullopt;
  return it->second;
}

std::string fingerprint_hex(std::uint64_t fingerprint) {
  char buf[19];
  std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(fingerprint));
  return buf;
}

Instance::Instance(Digraph g, int src, WeightAssignment w)
    : graph(std::move(g)), source(src), weights(std::move(w)) {
  if (source < 0 || source >= graph.vertex_count()) {
    throw std::invalid_argument("Instance: source out of range");
  }
  if (weights.size() != static_cast<std::size_t>(graph.edge_count())) {
    throw std::invalid_argument("Instance: weight count != edge count");
  }
}

Digraph complete_digraph(int n) {
  if (n < 1) throw std::invalid_argument("complete_digraph: n must be positive");
  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(n) * static_cast<std::size_t>(n - 1));
  for (int tail = 0; tail < n; ++tail) {
    for (int head = 0; head < n; ++head) {
      if (tail != head) edges.push_back(Edge{tail, head});
    }
  }
  return Digraph(n, std::move(edges));
}

WeightAssignment potential_weights(const Digraph& g, std::uint64_t seed,
                                   std::int64_t slack_max, std::int64_t potential_max) {
  if (slack_max < 0 || potential_max < 0) {
    throw std::invalid_argument("potential_weights: bounds must be non-negative");
  }
  auto rng = make_rng(seed);
  std::vector<std::int64_t> potential(static_cast<std::size_t>(g.vertex_count()));
  for (auto& p : potential) {
    p = static_cast<std::int64_t>(uniform_below(rng, static_cast<std::uint64_t>(potential_max) + 1));
  }
  WeightAssignment w;
  w.weights.reserve(static_cast<std::size_t>(g.edge_count()));
  for (const Edge& e : g.edges()) {
    const auto slack =
        static_cast<std::int64_t>(uniform_below(rng, static_cast<std::uint64_t>(slack_max) + 1));
    w.weights.push_back(slack + potential[static_cast<std::size_t>(e.tail)] -
                        potential[static_cast<std::size_t>(e.head)]);
  }
  return w;
}

}  // namespace relaxlab
