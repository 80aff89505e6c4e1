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

#ifndef RELAXLAB_ORACLE_HPP_
#define RELAXLAB_ORACLE_HPP_

#include <stdexcept>
#include <string>
#include <vector>

#include "relaxlab/graph.hpp"

namespace relaxlab {

// Thrown when a negative cycle is reachable from the source. The witness is
// a vertex sequence c0, c1, ..., ck-1 whose consecutive edges (cyclically)
// exist and have negative total weight.
class NegativeCycleError : public std::runtime_error {
 public:
  explicit NegativeCycleError(std::vector<int> cycle);
  const std::vector<int>& cycle() const { return cycle_; }

 private:
  std::vector<int> cycle_;
};

// Exact single-source shortest-path distances; the ground truth every
// schedule execution is measured against. Unreachable vertices map to
// UNREACHABLE. This reference implementation is allowed to be adaptive
// (early exit when a pass changes nothing); measured runs are not.
std::vector<ExtDist> oracle_distances(const Instance& instance);

}  // namespace relaxlab

#endif  // RELAXLAB_ORACLE_HPP_
