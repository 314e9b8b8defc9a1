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

#ifndef RAINBOW_GRAPH_HPP_
#define RAINBOW_GRAPH_HPP_

#include <compare>
#include <string>
#include <utility>
#include <vector>

namespace rainbow {

// A vertex is addressed by its class and its position inside the class, both
// 0-based. Ordering is lexicographic on (cls, offset), which is also the order
// of the flat vertex numbering used internally.
struct VertexId {
  int cls = 0;
  int offset = 0;

  friend auto operator<=>(const VertexId&, const VertexId&) = default;
};

// "cls:offset", the form used by certificates and CLI output.
std::string to_string(VertexId v);
VertexId parse_vertex(const std::string& text);

// Endpoints of an edge, smaller endpoint first. The endpoints always lie in
// distinct classes.
struct Edge {
  VertexId a;
  VertexId b;

  friend bool operator==(const Edge&, const Edge&) = default;
};

// Orders the endpoints. Throws std::invalid_argument when both lie in the same
// class.
Edge make_edge(VertexId x, VertexId y);

// Complete multipartite graph K_{n_1,...,n_r}. Immutable after construction.
//
// Canonical edge order: edges are sorted by (class of a, class of b,
// offset of a, offset of b) with class(a) < class(b). The index of an edge is
// its position in that order; every file format and report uses it.
class MultipartiteGraph {
 public:
  // Throws std::invalid_argument on fewer than two classes or an empty class.
  explicit MultipartiteGraph(std::vector<int> class_sizes);

  int num_classes() const { return static_cast<int>(sizes_.size()); }
  int class_size(int cls) const { return sizes_.at(cls); }
  const std::vector<int>& class_sizes() const { return sizes_; }
  int vertex_count() const { return vertex_count_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  bool is_bipartite() const { return num_classes() == 2; }

  bool contains(VertexId v) const;
  // Position of v in the flat (class, offset) order. Throws std::out_of_range
  // when v is not a vertex of the graph.
  int flat_index(VertexId v) const;
  VertexId vertex(int flat) const;
  int class_of_flat(int flat) const { return class_of_flat_[flat]; }

  const std::vector<Edge>& edges() const { return edges_; }
  const Edge& edge(int index) const { return edges_.at(index); }
  // Flat endpoints of edge `index`, smaller first.
  std::pair<int, int> endpoints(int index) const { return endpoints_[index]; }

  // Canonical index of the edge xy. Throws std::invalid_argument when x and y
  // share a class and std::out_of_range when either is not a vertex.
  int edge_index(VertexId x, VertexId y) const;
  int edge_index(const Edge& e) const { return edge_index(e.a, e.b); }
  // Hot-path lookup on flat indices; -1 when the pair is not an edge.
  int edge_between(int flat_x, int flat_y) const {
    return pair_to_edge_[static_cast<std::size_t>(flat_x) * vertex_count_ +
                         flat_y];
  }

  friend bool operator==(const MultipartiteGraph& x,
                         const MultipartiteGraph& y) {
    return x.sizes_ == y.sizes_;
  }

 private:
  std::vector<int> sizes_;
  std::vector<int> class_start_;
  std::vector<int> class_of_flat_;
  int vertex_count_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::pair<int, int>> endpoints_;
  std::vector<int> pair_to_edge_;
};

// Total assignment of colors {1..t} to the edges of a graph, indexed by
// canonical edge index.
class Coloring {
 public:
  // Throws std::invalid_argument unless colors >= 1, the assignment covers
  // every edge of `graph` and every entry lies in {1..colors}.
  Coloring(const MultipartiteGraph& graph, int colors,
           std::vector<int> assignment);

  // Every edge gets `color`; the palette is {1..colors}.
  static Coloring constant(const MultipartiteGraph& graph, int colors = 1,
                           int color = 1);

  int colors() const { return colors_; }
  int edge_count() const { return static_cast<int>(assignment_.size()); }
  int operator[](int edge_index) const { return assignment_[edge_index]; }
  const std::vector<int>& assignment() const { return assignment_; }
  int distinct_colors_used() const;

  friend bool operator==(const Coloring&, const Coloring&) = default;

 private:
  int colors_ = 1;
  std::vector<int> assignment_;
};

// Color of e under `coloring`; throws when e is not an edge of `graph` or the
// coloring was built for a different edge count.
int color_of(const MultipartiteGraph& graph, const Coloring& coloring,
             const Edge& e);

// Cyclic coloring ((offset_a + offset_b) mod t) + 1. On K_{n,n} with t = n
// every color class is a perfect matching.
Coloring latin_coloring(const MultipartiteGraph& graph, int colors);

}  // namespace rainbow

#endif  // RAINBOW_GRAPH_HPP_
