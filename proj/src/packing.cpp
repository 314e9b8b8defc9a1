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

#include "rainbow/packing.hpp"

#include <algorithm>
#include <stdexcept>

namespace rainbow {
namespace {

bool sorted_disjoint(const std::vector<int>& x, const std::vector<int>& y) {
  auto i = x.begin();
  auto j = y.begin();
  while (i != x.end() && j != y.end()) {
    if (*i == *j) return false;
    if (*i < *j) {
      ++i;
    } else {
      ++j;
    }
  }
  return true;
}

class BranchAndBound {
 public:
  BranchAndBound(const std::vector<boost::dynamic_bitset<>>& compatible,
                 int cap)
      : compatible_(compatible), cap_(cap) {}

  std::vector<int> run(const boost::dynamic_bitset<>& allowed) {
    if (cap_ <= 0) return {};
    greedy(allowed);
    if (static_cast<int>(best_.size()) < cap_) descend(allowed);
    return best_;
  }

 private:
  void greedy(boost::dynamic_bitset<> open) {
    for (auto i = open.find_first(); i != open.npos; i = open.find_next(i)) {
      best_.push_back(static_cast<int>(i));
      if (static_cast<int>(best_.size()) == cap_) return;
      open &= compatible_[i];
    }
  }

  // `open` holds candidates after the last chosen one that are compatible
  // with every chosen candidate.
  bool descend(const boost::dynamic_bitset<>& open) {
    if (chosen_.size() > best_.size()) {
      best_ = chosen_;
      if (static_cast<int>(best_.size()) == cap_) return false;
    }
    std::size_t remaining = open.count();
    for (auto i = open.find_first(); i != open.npos; i = open.find_next(i)) {
      if (chosen_.size() + remaining <= best_.size()) return true;
      const boost::dynamic_bitset<> next = open & compatible_[i];
      chosen_.push_back(static_cast<int>(i));
      const bool go_on = descend(next);
      chosen_.pop_back();
      if (!go_on) return false;
      --remaining;
    }
    return true;
  }

  const std::vector<boost::dynamic_bitset<>>& compatible_;
  const int cap_;
  std::vector<int> chosen_;
  std::vector<int> best_;
};

}  // namespace

bool internally_disjoint(const MultipartiteGraph& graph, const STree& t1,
                         const STree& t2) {
  if (!(t1.terminals == t2.terminals)) {
    throw std::invalid_argument("trees connect different terminal sets");
  }
  return sorted_disjoint(t1.edges, t2.edges) &&
         sorted_disjoint(steiner_vertices(graph, t1),
                         steiner_vertices(graph, t2));
}

PackingVerdict verify_packing(const MultipartiteGraph& graph,
                              const Coloring& coloring,
                              const Packing& packing) {
  if (coloring.edge_count() != graph.edge_count()) {
    throw std::invalid_argument("coloring does not belong to this graph");
  }
  for (std::size_t i = 0; i < packing.trees.size(); ++i) {
    const STree& tree = packing.trees[i];
    if (!(tree.terminals == packing.terminals)) {
      throw std::invalid_argument("tree " + std::to_string(i) +
                                  " has a different terminal set");
    }
    if (auto defect = stree_defect(graph, tree)) {
      throw std::invalid_argument("tree " + std::to_string(i) + ": " + *defect);
    }
  }
  for (std::size_t i = 0; i < packing.trees.size(); ++i) {
    if (!is_rainbow(packing.trees[i], coloring)) {
      return {false, "tree " + std::to_string(i) + " is not rainbow"};
    }
  }
  for (std::size_t i = 0; i < packing.trees.size(); ++i) {
    for (std::size_t j = i + 1; j < packing.trees.size(); ++j) {
      if (!internally_disjoint(graph, packing.trees[i], packing.trees[j])) {
        return {false, "trees " + std::to_string(i) + " and " +
                           std::to_string(j) + " are not internally disjoint"};
      }
    }
  }
  return {};
}

PackingSearch::PackingSearch(const MultipartiteGraph& graph,
                             std::vector<STree> candidates)
    : candidates_(std::move(candidates)) {
  std::sort(candidates_.begin(), candidates_.end(), tree_order_less);
  const std::size_t n = candidates_.size();
  std::vector<std::vector<int>> steiner;
  steiner.reserve(n);
  for (const STree& t : candidates_) {
    steiner.push_back(steiner_vertices(graph, t));
  }
  compatible_.assign(n, boost::dynamic_bitset<>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (sorted_disjoint(candidates_[i].edges, candidates_[j].edges) &&
          sorted_disjoint(steiner[i], steiner[j])) {
        compatible_[i].set(j);
      }
    }
  }
}

boost::dynamic_bitset<> PackingSearch::rainbow_mask(
    const Coloring& coloring) const {
  boost::dynamic_bitset<> mask(candidates_.size());
  for (std::size_t i = 0; i < candidates_.size(); ++i) {
    if (is_rainbow(candidates_[i], coloring)) mask.set(i);
  }
  return mask;
}

std::vector<int> PackingSearch::solve(const boost::dynamic_bitset<>& allowed,
                                      int cap) const {
  return BranchAndBound(compatible_, cap).run(allowed);
}

std::vector<int> PackingSearch::solve(int cap) const {
  boost::dynamic_bitset<> all(candidates_.size());
  all.set();
  return solve(all, cap);
}

PackingResult max_rainbow_packing(const MultipartiteGraph& graph,
                                  const Coloring& coloring,
                                  const TerminalSet& s, int cap) {
  if (coloring.edge_count() != graph.edge_count()) {
    throw std::invalid_argument("coloring does not belong to this graph");
  }
  const int budget = std::min(coloring.colors(), graph.vertex_count() - 1);
  std::vector<STree> rainbow;
  for_each_steiner_tree(graph, s, budget, [&](const STree& t) {
    if (is_rainbow(t, coloring)) rainbow.push_back(t);
    return true;
  });
  PackingSearch search(graph, std::move(rainbow));
  const std::vector<int> chosen = search.solve(cap);
  PackingResult result{static_cast<int>(chosen.size()), Packing{s, {}}};
  for (int i : chosen) result.packing.trees.push_back(search.candidates()[i]);
  return result;
}

std::optional<Packing> has_l_packing(const MultipartiteGraph& graph,
                                     const Coloring& coloring,
                                     const TerminalSet& s, int l) {
  if (l < 1) throw std::invalid_argument("l must be at least 1");
  PackingResult result = max_rainbow_packing(graph, coloring, s, l);
  if (result.count < l) return std::nullopt;
  return std::move(result.packing);
}

}  // namespace rainbow
