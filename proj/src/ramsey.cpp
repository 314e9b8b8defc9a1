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

#include "rainbow/ramsey.hpp"

#include <stdexcept>

#include <boost/dynamic_bitset.hpp>

namespace rainbow {
namespace {

class BicliqueSearch {
 public:
  BicliqueSearch(std::vector<boost::dynamic_bitset<>> rows, int size)
      : rows_(std::move(rows)), size_(size) {}

  // Lexicographically first `size` rows whose intersection keeps `size` bits.
  bool run() {
    boost::dynamic_bitset<> all(rows_.empty() ? 0 : rows_[0].size());
    all.set();
    return extend(0, all);
  }

  const std::vector<int>& rows() const { return picked_; }
  const boost::dynamic_bitset<>& common() const { return common_; }

 private:
  bool extend(int from, const boost::dynamic_bitset<>& common) {
    if (static_cast<int>(picked_.size()) == size_) {
      common_ = common;
      return true;
    }
    const int n = static_cast<int>(rows_.size());
    const int need = size_ - static_cast<int>(picked_.size());
    for (int i = from; i <= n - need; ++i) {
      boost::dynamic_bitset<> next = common & rows_[i];
      if (static_cast<int>(next.count()) < size_) continue;
      picked_.push_back(i);
      if (extend(i + 1, next)) return true;
      picked_.pop_back();
    }
    return false;
  }

  std::vector<boost::dynamic_bitset<>> rows_;
  int size_;
  std::vector<int> picked_;
  boost::dynamic_bitset<> common_;
};

}  // namespace

std::optional<Biclique> find_mono_biclique(const MultipartiteGraph& graph,
                                           const Coloring& coloring,
                                           int size) {
  if (!graph.is_bipartite()) {
    throw std::invalid_argument("biclique search needs a bipartite host");
  }
  if (size < 1) throw std::invalid_argument("biclique size must be >= 1");
  if (coloring.edge_count() != graph.edge_count()) {
    throw std::invalid_argument("coloring does not belong to this graph");
  }
  const int small = graph.class_size(1) < graph.class_size(0) ? 1 : 0;
  const int large = 1 - small;
  const int ns = graph.class_size(small);
  const int nl = graph.class_size(large);
  if (size > ns) return std::nullopt;

  for (int color = 1; color <= coloring.colors(); ++color) {
    std::vector<boost::dynamic_bitset<>> rows(ns, boost::dynamic_bitset<>(nl));
    for (int i = 0; i < ns; ++i) {
      for (int j = 0; j < nl; ++j) {
        if (coloring[graph.edge_index({small, i}, {large, j})] == color) {
          rows[i].set(j);
        }
      }
    }
    BicliqueSearch search(std::move(rows), size);
    if (!search.run()) continue;

    std::vector<VertexId> small_side;
    std::vector<VertexId> large_side;
    for (int i : search.rows()) small_side.push_back({small, i});
    const auto& common = search.common();
    for (auto j = common.find_first();
         j != common.npos && static_cast<int>(large_side.size()) < size;
         j = common.find_next(j)) {
      large_side.push_back({large, static_cast<int>(j)});
    }
    Biclique b;
    b.color = color;
    b.side_u = small == 0 ? small_side : large_side;
    b.side_v = small == 0 ? large_side : small_side;
    return b;
  }
  return std::nullopt;
}

std::optional<BicliqueRefutation> refute_by_biclique(
    const MultipartiteGraph& graph, const Coloring& coloring, int k) {
  if (!graph.is_bipartite()) {
    throw std::invalid_argument("refutation needs a bipartite host");
  }
  if (k < 4) {
    throw std::invalid_argument(
        "refutation needs k >= 4 (k - 2 >= 2 terminals on one side)");
  }
  if (coloring.distinct_colors_used() > k) {
    throw std::invalid_argument("coloring uses " +
                                std::to_string(coloring.distinct_colors_used()) +
                                " colors; the argument needs at most k = " +
                                std::to_string(k));
  }
  std::optional<Biclique> b = find_mono_biclique(graph, coloring, k);
  if (!b) return std::nullopt;

  std::vector<VertexId> s{b->side_v[0], b->side_v[1]};
  for (int i = 0; i < k - 2; ++i) s.push_back(b->side_u[i]);
  BicliqueRefutation proof{*b, TerminalSet(graph, s)};
  for_each_steiner_tree(graph, proof.terminals, k, [&](const STree& t) {
    ++proof.trees_examined;
    if (is_rainbow(t, coloring)) ++proof.rainbow_trees;
    return true;
  });
  if (proof.rainbow_trees != 0) {
    throw std::logic_error("refutation set " + to_string(proof.terminals) +
                           " has a rainbow tree");
  }
  return proof;
}

}  // namespace rainbow
