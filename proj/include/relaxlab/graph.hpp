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

#ifndef RELAXLAB_GRAPH_HPP_
#define RELAXLAB_GRAPH_HPP_

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "relaxlab/dist.hpp"

namespace relaxlab {

struct Edge {
  int tail = 0;
  int head = 0;
  friend bool operator==(const Edge&, const Edge&) = default;
};

// Simple directed graph. Edge indices are stable: edge i is the i-th entry
// of the construction list forever. No self-loops, no duplicate (tail, head)
// pairs, all endpoints in range; violations throw std::invalid_argument.
class Digraph {
 public:
  Digraph() = default;
  Digraph(int vertex_count, std::vector<Edge> edges);

  int vertex_count() const { return n_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  const std::vector<Edge>& edges() const { return edges_; }
  const Edge& edge(int index) const { return edges_.at(static_cast<std::size_t>(index)); }

  // Edge indices leaving v, in edge-index order.
  std::span<const int> out_edges(int v) const;

  std::optional<int> edge_index(int tail, int head) const;
  bool has_edge(int tail, int head) const { return edge_index(tail, head).has_value(); }

  // Hash of (n, m, edge list); used by schedules to fail fast on mismatch.
  std::uint64_t fingerprint() const { return fingerprint_; }

 private:
  int n_ = 0;
  std::vector<Edge> edges_;
  std::vector<int> out_offsets_;
  std::vector<int> out_edge_ids_;
  std::unordered_map<std::uint64_t, int> index_by_pair_;
  std::uint64_t fingerprint_ = 0;
};

std::string fingerprint_hex(std::uint64_t fingerprint);

// Signed integer weights, index-aligned with a digraph's edge list.
struct WeightAssignment {
  std::vector<std::int64_t> weights;

  std::size_t size() const { return weights.size(); }
};

// Weighted digraph with a designated source vertex. Construction checks the
// structural invariants; absence of reachable negative cycles is checked by
// the oracle where callers need it.
struct Instance {
  Digraph graph;
  int source = 0;
  WeightAssignment weights;

  Instance(Digraph g, int src, WeightAssignment w);

  std::int64_t weight(int edge_index) const {
    return weights.weights[static_cast<std::size_t>(edge_index)];
  }
};

// All n(n-1) ordered pairs, in lexicographic (tail, head) order.
Digraph complete_digraph(int n);

// Negative-cycle-free random weights: draws per-vertex potentials
// p(v) in [0, potential_max] and per-edge slacks r(e) in [0, slack_max],
// and sets weight(u->v) = r(u->v) + p(u) - p(v). Cycle weights telescope to
// the slack sum, which is non-negative, so negative edges are possible but
// negative cycles are not.
WeightAssignment potential_weights(const Digraph& g, std::uint64_t seed,
                                   std::int64_t slack_max, std::int64_t potential_max);

}  // namespace relaxlab

#endif  // RELAXLAB_GRAPH_HPP_
