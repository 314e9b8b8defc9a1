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

#ifndef RAINBOW_MONTECARLO_HPP_
#define RAINBOW_MONTECARLO_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <variant>

#include "rainbow/graph.hpp"
#include "rainbow/trees.hpp"

namespace rainbow {

// SplitMix64 stream. Each trial gets its own stream derived from
// (master seed, trial index), so samples do not depend on scheduling.
class RandomStream {
 public:
  explicit RandomStream(std::uint64_t state) : state_(state) {}

  std::uint64_t next();
  // Uniform in [1, n], unbiased (rejection on the top partial block).
  int uniform(int n);

 private:
  std::uint64_t state_;
};

RandomStream trial_stream(std::uint64_t master_seed, std::uint64_t trial);

// Every edge colored independently and uniformly from {1..t}, in canonical
// edge order.
Coloring random_coloring(const MultipartiteGraph& graph, int t,
                         RandomStream& stream);

// How the terminal set of an experiment is chosen.
struct AllTerminalSets {};  // the event must hold for every k-set at once
enum class PlacementCase {
  kOneClass,  // k vertices of the first class that can hold them
  kTwoClass,  // ceil(k/2) in class 0, the rest in class 1
  kSpread,    // round-robin over the classes
};
using TerminalSelector =
    std::variant<TerminalSet, AllTerminalSets, PlacementCase>;

PlacementCase parse_placement(std::string_view tag);
std::string_view to_string(PlacementCase c);
TerminalSet place_terminals(const MultipartiteGraph& graph, PlacementCase c,
                            int k);

enum class McEvent {
  kRainbowTree,      // S has a rainbow S-tree (packing engine)
  kPacking,          // S has l internally disjoint rainbow S-trees
  kStarTail,         // at most l-1 rainbow stars in the star family
  kDoubleStarTail,   // at most l-1 rainbow members of the double-star family
  kTriangleDistinct, // the triangle on S is rainbow
  kTriangleTwo,      // the triangle on S uses exactly two colors
  kTriangleMono,     // the triangle on S is monochromatic
};

McEvent parse_event(std::string_view tag);
std::string_view to_string(McEvent e);

struct McConfig {
  std::uint64_t master_seed = 0;
  std::int64_t trials = 0;
  int colors = 1;
  int k = 3;
  int l = 1;
  TerminalSelector selector = PlacementCase::kOneClass;
  int jobs = 1;
};

struct McEstimate {
  std::int64_t successes = 0;
  std::int64_t trials = 0;
  std::uint64_t seed = 0;

  double estimate() const {
    return static_cast<double>(successes) / static_cast<double>(trials);
  }
  // sqrt(p(1-p)/trials) at the point estimate.
  double standard_error() const;
};

// Frequency of `event` over config.trials random colorings.
//
// Family events (star/double-star tails, triangle patterns) look only at the
// explicit family built on S; the star family is centered on the first class
// without terminals and the double-star family on the first two classes S
// meets. Full events run the packing engine. Throws std::invalid_argument for
// zero trials, an unconstructible family, or AllTerminalSets with a family
// event.
McEstimate estimate_event(const MultipartiteGraph& graph,
                          const McConfig& config, McEvent event);

struct SearchOutcome {
  std::optional<Coloring> witness;
  int attempts_used = 0;
  std::string explanation;
};

// Samples up to `attempts` random t-colorings and returns the first under
// which every k-set has l internally disjoint rainbow trees. Exhaustion is a
// normal outcome. When t is below lower_bound_structural nothing is sampled.
SearchOutcome search_good_coloring(const MultipartiteGraph& graph, int t,
                                   int k, int l, int attempts,
                                   std::uint64_t seed);

}  // namespace rainbow

#endif  // RAINBOW_MONTECARLO_HPP_
