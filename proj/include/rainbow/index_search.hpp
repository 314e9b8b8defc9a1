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

#ifndef RAINBOW_INDEX_SEARCH_HPP_
#define RAINBOW_INDEX_SEARCH_HPP_

#include <cstdint>
#include <optional>
#include <vector>

#include "rainbow/bounds.hpp"
#include "rainbow/graph.hpp"
#include "rainbow/packing.hpp"
#include "rainbow/trees.hpp"

namespace rainbow {

// All k-subsets of the vertex set in lexicographic (flat) order.
std::vector<TerminalSet> all_terminal_sets(const MultipartiteGraph& graph,
                                           int k);

// Checks colorings against every k-set at once. The colorless candidate trees
// (at most `max_edges` edges) and their conflicts are computed once per
// k-set; each check then only filters by rainbowness and searches.
class ColoringVerifier {
 public:
  // Throws std::invalid_argument unless 1 <= k <= vertex count and l >= 1.
  ColoringVerifier(const MultipartiteGraph& graph, int k, int l,
                   int max_edges);

  // Lexicographically least k-set without l internally disjoint rainbow
  // trees, or nullopt when the coloring passes.
  std::optional<TerminalSet> first_failure(const Coloring& coloring) const;

  // Pass/fail only. `hint` remembers the index of the last failing k-set and
  // is tried first; pass the same variable across calls.
  bool passes(const Coloring& coloring, std::size_t* hint = nullptr) const;

  const std::vector<TerminalSet>& terminal_sets() const { return sets_; }

 private:
  bool set_passes(std::size_t i, const Coloring& coloring) const;

  MultipartiteGraph graph_;
  int l_;
  std::vector<TerminalSet> sets_;
  std::vector<PackingSearch> searches_;
};

struct ColoringVerdict {
  bool pass = true;
  std::optional<TerminalSet> failing_set;
};

// Every k-set must carry l internally disjoint rainbow trees. Throws
// std::invalid_argument for nonpositive k or l, or k above the vertex count.
ColoringVerdict verify_coloring(const MultipartiteGraph& graph,
                                const Coloring& coloring, int k, int l);

enum class RxStatus {
  kFound,       // value and witness set
  kInfeasible,  // some k-set lacks l internally disjoint trees at all
  kUnresolved,  // no witness with at most t_max colors
};

struct RxResult {
  RxStatus status = RxStatus::kUnresolved;
  std::optional<int> value;
  std::optional<Coloring> witness;
  std::optional<TerminalSet> failing_set;  // set for kInfeasible
  int lower_bound = 0;
  std::int64_t colorings_checked = 0;
};

// Least t <= t_max admitting a coloring under which every k-set has l
// internally disjoint rainbow trees.
//
// Colorings are enumerated as restricted growth strings using exactly t
// colors (color permutations collapse to one representative) and kept only
// when minimal under the graph automorphisms that permute equal-sized classes
// and offsets within classes. The scan starts at lower_bound_structural, so
// colorings with fewer colors never need a second look. The witness is the
// first passing representative in enumeration order, identical for any
// `jobs`.
//
// Throws std::invalid_argument unless 2 <= k <= vertex count, l >= 1 and
// t_max <= edge count.
RxResult rx_exact(const MultipartiteGraph& graph, int k, int l, int t_max,
                  int jobs = 1);

// C(r,2) * ceil(k/r)^2 / floor(k/r): the most internally disjoint S'-trees
// with k or k-1 edges when S' spreads evenly over all r classes. Throws
// std::invalid_argument for k < r or r < 2.
Rational packing_upper_bound(int k, int r);

// A lower bound on rx_{k,l} valid for every graph size:
//  * k - 1, since any tree on k terminals has k - 1 edges;
//  * k when some class holds k vertices (their trees need k edges);
//  * k + 1 when a bipartite host admits S = {x, y} | {z}, k = 3 and l >= 3
//    (every tree with at most three edges uses xz or yz);
//  * k + 1 when k >= r, an even spread of k vertices over the classes fits,
//    and l exceeds packing_upper_bound(k, r).
// Never below 1.
int lower_bound_structural(const MultipartiteGraph& graph, int k, int l);

// Maximum number of internally disjoint S'-trees with |S'| or |S'| - 1 edges,
// colors ignored. Throws std::invalid_argument when S' misses a class.
int max_small_tree_packing(const MultipartiteGraph& graph,
                           const TerminalSet& s_prime);

}  // namespace rainbow

#endif  // RAINBOW_INDEX_SEARCH_HPP_
