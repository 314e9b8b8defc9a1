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

#ifndef RAINBOW_TREES_HPP_
#define RAINBOW_TREES_HPP_

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "rainbow/graph.hpp"

namespace rainbow {

// A set of k >= 2 distinct vertices of a host graph, kept sorted.
class TerminalSet {
 public:
  // Throws std::invalid_argument on duplicates or fewer than two vertices and
  // std::out_of_range when a vertex is not in `graph`.
  TerminalSet(const MultipartiteGraph& graph, std::vector<VertexId> vertices);

  int size() const { return static_cast<int>(vertices_.size()); }
  const std::vector<VertexId>& vertices() const { return vertices_; }
  // Flat indices, ascending.
  const std::vector<int>& flat() const { return flat_; }
  bool contains_flat(int flat) const;
  bool contains(VertexId v) const;
  int count_in_class(int cls) const;

  friend bool operator==(const TerminalSet& x, const TerminalSet& y) {
    return x.vertices_ == y.vertices_;
  }

 private:
  std::vector<VertexId> vertices_;
  std::vector<int> flat_;
};

std::string to_string(const TerminalSet& s);

// A tree of the host graph connecting `terminals`. Edges are canonical edge
// indices in ascending order. Well-formed trees (see stree_defect) have every
// leaf in the terminal set.
struct STree {
  TerminalSet terminals;
  std::vector<int> edges;
};

// Describes the first way `tree` fails to be an S-tree of `graph` with all
// leaves in S, or nullopt when it is one.
std::optional<std::string> stree_defect(const MultipartiteGraph& graph,
                                        const STree& tree);

// Flat indices of the vertices a tree touches, ascending.
std::vector<int> tree_vertices(const MultipartiteGraph& graph,
                               const STree& tree);
// Tree vertices outside the terminal set, ascending.
std::vector<int> steiner_vertices(const MultipartiteGraph& graph,
                                  const STree& tree);

// True iff no two edges of the tree share a color.
bool is_rainbow(const STree& tree, const Coloring& coloring);

// Candidate order: fewer edges first, then lexicographic on edge indices.
bool tree_order_less(const STree& x, const STree& y);

// Star joining `center` to every terminal. The center must lie outside S in a
// class that holds no terminal.
STree star_tree(const MultipartiteGraph& graph, VertexId center,
                const TerminalSet& s);

// Double star on the adjacent pair (u, v): u is joined to the terminals of
// v's class, v to every other terminal, plus the edge uv. The result has
// |S| + 1 edges. Requires u, v outside S in distinct classes, with S meeting
// v's class and S not contained in it.
STree double_star_tree(const MultipartiteGraph& graph, VertexId u, VertexId v,
                       const TerminalSet& s);

// Stars centered at every vertex of `center_class`, in offset order. The
// family is pairwise internally disjoint and has class_size(center_class)
// members.
std::vector<STree> star_family(const MultipartiteGraph& graph,
                               const TerminalSet& s, int center_class);

// Double stars on pairs (u_i, v_i): the i-th non-terminal of `u_class`
// paired with the i-th non-terminal of `v_class`, ascending offsets. Pairwise
// internally disjoint.
std::vector<STree> double_star_family(const MultipartiteGraph& graph,
                                      const TerminalSet& s, int u_class,
                                      int v_class);

// Visits every S-tree with at most `max_edges` edges whose leaves all lie in S,
// each exactly once. Trees are grouped by their Steiner vertex set (smaller
// sets first, lexicographic within a size). The visitor returns false to stop.
// A budget below |S| - 1 visits nothing.
void for_each_steiner_tree(const MultipartiteGraph& graph, const TerminalSet& s,
                           int max_edges,
                           const std::function<bool(const STree&)>& visit);

// All trees from for_each_steiner_tree, sorted by tree_order_less.
std::vector<STree> enumerate_steiner_trees(const MultipartiteGraph& graph,
                                           const TerminalSet& s, int max_edges);

}  // namespace rainbow

#endif  // RAINBOW_TREES_HPP_
