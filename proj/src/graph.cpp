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

#include "rainbow/graph.hpp"

#include <algorithm>
#include <charconv>
#include <stdexcept>

namespace rainbow {

std::string to_string(VertexId v) {
  return std::to_string(v.cls) + ":" + std::to_string(v.offset);
}

VertexId parse_vertex(const std::string& text) {
  const auto colon = text.find(':');
  if (colon == std::string::npos) {
    throw std::invalid_argument("vertex '" + text + "' is not class:offset");
  }
  VertexId v;
  const char* begin = text.data();
  const char* end = text.data() + text.size();
  auto [p1, e1] = std::from_chars(begin, begin + colon, v.cls);
  auto [p2, e2] = std::from_chars(begin + colon + 1, end, v.offset);
  if (e1 != std::errc() || p1 != begin + colon || e2 != std::errc() ||
      p2 != end || v.cls < 0 || v.offset < 0) {
    throw std::invalid_argument("vertex '" + text + "' is not class:offset");
  }
  return v;
}

Edge make_edge(VertexId x, VertexId y) {
  if (x.cls == y.cls) {
    throw std::invalid_argument("no edge between " + to_string(x) + " and " +
                                to_string(y) + ": same class");
  }
  return x < y ? Edge{x, y} : Edge{y, x};
}

MultipartiteGraph::MultipartiteGraph(std::vector<int> class_sizes)
    : sizes_(std::move(class_sizes)) {
  if (sizes_.size() < 2) {
    throw std::invalid_argument("a multipartite graph needs at least 2 classes");
  }
  for (int n : sizes_) {
    if (n < 1) throw std::invalid_argument("class sizes must be positive");
  }
  class_start_.reserve(sizes_.size());
  for (int c = 0; c < num_classes(); ++c) {
    class_start_.push_back(vertex_count_);
    vertex_count_ += sizes_[c];
    class_of_flat_.insert(class_of_flat_.end(), sizes_[c], c);
  }
  pair_to_edge_.assign(static_cast<std::size_t>(vertex_count_) * vertex_count_,
                       -1);
  for (int ci = 0; ci < num_classes(); ++ci) {
    for (int cj = ci + 1; cj < num_classes(); ++cj) {
      for (int oi = 0; oi < sizes_[ci]; ++oi) {
        for (int oj = 0; oj < sizes_[cj]; ++oj) {
          const int fa = class_start_[ci] + oi;
          const int fb = class_start_[cj] + oj;
          const int index = edge_count();
          edges_.push_back({{ci, oi}, {cj, oj}});
          endpoints_.emplace_back(fa, fb);
          pair_to_edge_[static_cast<std::size_t>(fa) * vertex_count_ + fb] =
              index;
          pair_to_edge_[static_cast<std::size_t>(fb) * vertex_count_ + fa] =
              index;
        }
      }
    }
  }
}

bool MultipartiteGraph::contains(VertexId v) const {
  return v.cls >= 0 && v.cls < num_classes() && v.offset >= 0 &&
         v.offset < sizes_[v.cls];
}

int MultipartiteGraph::flat_index(VertexId v) const {
  if (!contains(v)) {
    throw std::out_of_range("vertex " + to_string(v) + " is not in the graph");
  }
  return class_start_[v.cls] + v.offset;
}

VertexId MultipartiteGraph::vertex(int flat) const {
  if (flat < 0 || flat >= vertex_count_) {
    throw std::out_of_range("flat vertex index out of range");
  }
  const int c = class_of_flat_[flat];
  return {c, flat - class_start_[c]};
}

int MultipartiteGraph::edge_index(VertexId x, VertexId y) const {
  const Edge e = make_edge(x, y);
  return edge_between(flat_index(e.a), flat_index(e.b));
}

Coloring::Coloring(const MultipartiteGraph& graph, int colors,
                   std::vector<int> assignment)
    : colors_(colors), assignment_(std::move(assignment)) {
  if (colors_ < 1) throw std::invalid_argument("need at least one color");
  if (static_cast<int>(assignment_.size()) != graph.edge_count()) {
    throw std::invalid_argument(
        "coloring has " + std::to_string(assignment_.size()) +
        " entries, graph has " + std::to_string(graph.edge_count()) + " edges");
  }
  for (std::size_t i = 0; i < assignment_.size(); ++i) {
    if (assignment_[i] < 1 || assignment_[i] > colors_) {
      throw std::invalid_argument("edge " + std::to_string(i) + " has color " +
                                  std::to_string(assignment_[i]) +
                                  " outside 1.." + std::to_string(colors_));
    }
  }
}

Coloring Coloring::constant(const MultipartiteGraph& graph, int colors,
                            int color) {
  return Coloring(graph, colors, std::vector<int>(graph.edge_count(), color));
}

int Coloring::distinct_colors_used() const {
  std::vector<bool> seen(colors_ + 1, false);
  int count = 0;
  for (int c : assignment_) {
    if (!seen[c]) {
      seen[c] = true;
      ++count;
    }
  }
  return count;
}

int color_of(const MultipartiteGraph& graph, const Coloring& coloring,
             const Edge& e) {
  if (coloring.edge_count() != graph.edge_count()) {
    throw std::invalid_argument("coloring does not belong to this graph");
  }
  return coloring[graph.edge_index(e)];
}

Coloring latin_coloring(const MultipartiteGraph& graph, int colors) {
  std::vector<int> assignment;
  assignment.reserve(graph.edge_count());
  for (const Edge& e : graph.edges()) {
    assignment.push_back((e.a.offset + e.b.offset) % colors + 1);
  }
  return Coloring(graph, colors, std::move(assignment));
}

}  // namespace rainbow
