// Copyright 2026 The Rainbow Index Authors
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

#ifndef RAINBOW_RAMSEY_HPP_
#define RAINBOW_RAMSEY_HPP_

#include <cstdint>
#include <optional>
#include <vector>

#include "rainbow/graph.hpp"
#include "rainbow/trees.hpp"

namespace rainbow {

// Monochromatic complete bipartite subgraph: every pair (u, v) with u in
// side_u (class 0) and v in side_v (class 1) has color `color`.
struct Biclique {
  std::vector<VertexId> side_u;
  std::vector<VertexId> side_v;
  int color = 0;
};

// First monochromatic K_{size,size}, or nullopt. Colors are tried in
// ascending order; within a color, size-subsets of the smaller class are
// enumerated lexicographically and their common same-colored neighborhoods
// intersected. Throws std::invalid_argument for a host with more than two
// classes or size < 1.
std::optional<Biclique> find_mono_biclique(const MultipartiteGraph& graph,
                                           const Coloring& coloring, int size);

// A k-set with no rainbow tree, extracted from a monochromatic K_{k,k}.
struct BicliqueRefutation {
  Biclique biclique;
  TerminalSet terminals;  // 2 vertices of side_v, k - 2 of side_u
  std::int64_t trees_examined = 0;  // S-trees with at most k edges
  std::int64_t rainbow_trees = 0;
};

// Refutes a coloring with at most k colors on K_{m,n}: inside a
// monochromatic K_{k,k}, take two vertices on one side and k - 2 on the
// other. A rainbow tree has at most k edges, hence at most one vertex beyond
// S, so it must use two edges inside S, which share a color. This is
// re-checked by enumerating every S-tree with at most k edges.
//
// Returns nullopt when no monochromatic K_{k,k} exists. Throws
// std::invalid_argument for a non-bipartite host, k < 4, or a coloring that
// uses more than k colors.
std::optional<BicliqueRefutation> refute_by_biclique(
    const MultipartiteGraph& graph, const Coloring& coloring, int k);

}  // namespace rainbow

#endif  // RAINBOW_RAMSEY_HPP_
