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

#ifndef RAINBOW_PACKING_HPP_
#define RAINBOW_PACKING_HPP_

#include <optional>
#include <string>
#include <vector>

#include <boost/dynamic_bitset.hpp>

#include "rainbow/graph.hpp"
#include "rainbow/trees.hpp"

namespace rainbow {

// A family of S-trees on one terminal set. A valid packing is pairwise
// internally disjoint and, for rainbow packings, every member is rainbow.
struct Packing {
  TerminalSet terminals;
  std::vector<STree> trees;
};

// Edge-disjoint and sharing no vertex outside S. Throws std::invalid_argument
// when the trees have different terminal sets.
bool internally_disjoint(const MultipartiteGraph& graph, const STree& t1,
                         const STree& t2);

struct PackingVerdict {
  bool ok = true;
  std::string violation;  // empty when ok

  explicit operator bool() const { return ok; }
};

// Checks that every tree is rainbow and all pairs are internally disjoint,
// reporting the first violation. Throws std::invalid_argument on a malformed
// certificate: a tree that is not an S-tree with leaves in S, or whose
// terminal set differs from the packing's.
PackingVerdict verify_packing(const MultipartiteGraph& graph,
                              const Coloring& coloring, const Packing& packing);

// Exact maximum packing over a fixed candidate set.
//
// Candidates are sorted by tree_order_less; a family is compared with another
// of the same size by the candidate indices it uses, ascending. solve()
// returns the least family of size min(cap, maximum) under that order, found
// by depth-first branch and bound seeded with the greedy family.
class PackingSearch {
 public:
  PackingSearch(const MultipartiteGraph& graph, std::vector<STree> candidates);

  const std::vector<STree>& candidates() const { return candidates_; }
  int size() const { return static_cast<int>(candidates_.size()); }

  // Mask of the candidates that are rainbow under `coloring`.
  boost::dynamic_bitset<> rainbow_mask(const Coloring& coloring) const;

  // Indices of the chosen candidates, ascending. Only candidates set in
  // `allowed` take part.
  std::vector<int> solve(const boost::dynamic_bitset<>& allowed, int cap) const;
  std::vector<int> solve(int cap) const;

 private:
  std::vector<STree> candidates_;
  // Bit j of compatible_[i] is set iff j > i and the two candidates are
  // internally disjoint.
  std::vector<boost::dynamic_bitset<>> compatible_;
};

struct PackingResult {
  int count = 0;
  Packing packing;
};

// min(cap, maximum number of internally disjoint rainbow S-trees) with a
// witness. Candidates are the rainbow S-trees with at most t edges, t being
// the palette size; no rainbow tree can be larger.
PackingResult max_rainbow_packing(const MultipartiteGraph& graph,
                                  const Coloring& coloring,
                                  const TerminalSet& s, int cap);

// A packing of exactly l trees when one exists. Throws std::invalid_argument
// for l < 1.
std::optional<Packing> has_l_packing(const MultipartiteGraph& graph,
                                     const Coloring& coloring,
                                     const TerminalSet& s, int l);

}  // namespace rainbow

#endif  // RAINBOW_PACKING_HPP_
