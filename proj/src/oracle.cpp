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

#include "relaxlab/oracle.hpp"

#include <algorithm>
#include <sstream>

namespace relaxlab {
namespace {

std::string describe_cycle(const std::vector<int>& cycle) {
  std::ostringstream os;
  os << "negative cycle reachable from source:";
  for (int v : cycle) os << ' ' << v;
  return os.str();
}

// Walks predecessor edges from `start` until a vertex repeats, returning the
// cycle in forward (edge) direction.
std::vector<int> extract_cycle(const std::vector<int>& pred_edge, const Digraph& g, int start) {
  const int n = g.vertex_count();
  int x = start;
  for (int i = 0; i < n; ++i) x = g.edge(pred_edge[static_cast<std::size_t>(x)]).tail;
  std::vector<int> cycle;
  int y = x;
  do {
    cycle.push_back(y);
    y = g.edge(pred_edge[static_cast<std::size_t>(y)]).tail;
  } while (y != x);
  std::reverse(cycle.begin(), cycle.end());
  return cycle;
}

}  // namespace

NegativeCycleError::NegativeCycleError(std::vector<int> cycle)
    : std::runtime_error(describe_cycle(cycle)), cycle_(std::move(cycle)) {}

std::vector<ExtDist> oracle_distances(const Instance& instance) {
  const Digraph& g = instance.graph;
  const int n = g.vertex_count();
  const int m = g.edge_count();
  std::vector<ExtDist> dist(static_cast<std::size_t>(n), ExtDist::unreachable());
  std::vector<int> pred_edge(static_cast<std::size_t>(n), -1);
  dist[static_cast<std::size_t>(instance.source)] = ExtDist::finite(0);

  for (int round = 0; round < n - 1; ++round) {
    bool changed = false;
    for (int e = 0; e < m; ++e) {
      const Edge& edge = g.edge(e);
      const ExtDist candidate = dist[static_cast<std::size_t>(edge.tail)].plus(instance.weight(e));
      if (candidate < dist[static_cast<std::size_t>(edge.head)]) {
        dist[static_cast<std::size_t>(edge.head)] = candidate;
        pred_edge[static_cast<std::size_t>(edge.head)] = e;
        changed = true;
      }
    }
    if (!changed) break;
  }

  // One detection pass: any remaining improvement implies a reachable
  // negative cycle (unreachable tails cannot improve anything).
  for (int e = 0; e < m; ++e) {
    const Edge& edge = g.edge(e);
    const ExtDist candidate = dist[static_cast<std::size_t>(edge.tail)].plus(instance.weight(e));
    if (candidate < dist[static_cast<std::size_t>(edge.head)]) {
      dist[static_cast<std::size_t>(edge.head)] = candidate;
      pred_edge[static_cast<std::size_t>(edge.head)] = e;
      std::vector<int> cycle = extract_cycle(pred_edge, g, edge.head);
      // The extracted predecessor cycle must itself be negative.
      std::int64_t total = 0;
      for (std::size_t i = 0; i < cycle.size(); ++i) {
        const int tail = cycle[i];
        const int head = cycle[(i + 1) % cycle.size()];
        const auto idx = g.edge_index(tail, head);
        if (!idx) throw std::logic_error("oracle: witness cycle edge missing");
        total = checked_add(total, instance.weight(*idx));
      }
      if (total >= 0) throw std::logic_error("oracle: witness cycle not negative");
      throw NegativeCycleError(std::move(cycle));
    }
  }
  return dist;
}

}  // namespace relaxlab
