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

#include "rainbow/montecarlo.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <thread>
#include <vector>

#include "rainbow/index_search.hpp"
#include "rainbow/packing.hpp"

namespace rainbow {
namespace {

std::uint64_t mix(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

// Resolved experiment: the terminal set and whatever the event needs.
struct Trial {
  const MultipartiteGraph& graph;
  McEvent event;
  int l;
  std::optional<TerminalSet> terminals;
  std::vector<STree> family;
  std::vector<int> triangle;  // edge indices
  std::optional<ColoringVerifier> all_sets;
  std::optional<PackingSearch> single;

  bool holds(const Coloring& c) const {
    switch (event) {
      case McEvent::kRainbowTree:
      case McEvent::kPacking: {
        const int need = event == McEvent::kRainbowTree ? 1 : l;
        if (all_sets) return all_sets->passes(c);
        const auto mask = single->rainbow_mask(c);
        return static_cast<int>(single->solve(mask, need).size()) >= need;
      }
      case McEvent::kStarTail:
      case McEvent::kDoubleStarTail: {
        const auto rainbow = std::count_if(
            family.begin(), family.end(),
            [&](const STree& t) { return is_rainbow(t, c); });
        return rainbow <= l - 1;
      }
      case McEvent::kTriangleDistinct:
      case McEvent::kTriangleTwo:
      case McEvent::kTriangleMono: {
        std::vector<int> colors{c[triangle[0]], c[triangle[1]], c[triangle[2]]};
        std::sort(colors.begin(), colors.end());
        const int distinct = static_cast<int>(
            std::unique(colors.begin(), colors.end()) - colors.begin());
        if (event == McEvent::kTriangleDistinct) return distinct == 3;
        if (event == McEvent::kTriangleTwo) return distinct == 2;
        return distinct == 1;
      }
    }
    return false;
  }
};

bool is_family_event(McEvent e) {
  return e != McEvent::kRainbowTree && e != McEvent::kPacking;
}

}  // namespace

std::uint64_t RandomStream::next() {
  state_ += 0x9e3779b97f4a7c15ULL;
  return mix(state_);
}

int RandomStream::uniform(int n) {
  const std::uint64_t range = static_cast<std::uint64_t>(n);
  const std::uint64_t limit =
      std::numeric_limits<std::uint64_t>::max() -
      std::numeric_limits<std::uint64_t>::max() % range;
  std::uint64_t x = next();
  while (x >= limit) x = next();
  return static_cast<int>(x % range) + 1;
}

RandomStream trial_stream(std::uint64_t master_seed, std::uint64_t trial) {
  return RandomStream(mix(master_seed ^ mix(trial + 0x632be59bd9b4e019ULL)));
}

Coloring random_coloring(const MultipartiteGraph& graph, int t,
                         RandomStream& stream) {
  if (t < 1) throw std::invalid_argument("need at least one color");
  std::vector<int> assignment(graph.edge_count());
  for (int& c : assignment) c = stream.uniform(t);
  return Coloring(graph, t, std::move(assignment));
}

PlacementCase parse_placement(std::string_view tag) {
  if (tag == "one-class") return PlacementCase::kOneClass;
  if (tag == "two-class") return PlacementCase::kTwoClass;
  if (tag == "spread") return PlacementCase::kSpread;
  throw std::invalid_argument("unknown placement '" + std::string(tag) + "'");
}

std::string_view to_string(PlacementCase c) {
  switch (c) {
    case PlacementCase::kOneClass:
      return "one-class";
    case PlacementCase::kTwoClass:
      return "two-class";
    case PlacementCase::kSpread:
      return "spread";
  }
  return "?";
}

TerminalSet place_terminals(const MultipartiteGraph& graph, PlacementCase c,
                            int k) {
  std::vector<VertexId> verts;
  switch (c) {
    case PlacementCase::kOneClass: {
      for (int cls = 0; cls < graph.num_classes(); ++cls) {
        if (graph.class_size(cls) >= k) {
          for (int o = 0; o < k; ++o) verts.push_back({cls, o});
          break;
        }
      }
      if (verts.empty()) {
        throw std::invalid_argument("no class holds " + std::to_string(k) +
                                    " vertices");
      }
      break;
    }
    case PlacementCase::kTwoClass: {
      const int a = (k + 1) / 2;
      if (graph.class_size(0) < a || graph.class_size(1) < k - a) {
        throw std::invalid_argument("classes 0 and 1 cannot hold the split");
      }
      for (int o = 0; o < a; ++o) verts.push_back({0, o});
      for (int o = 0; o < k - a; ++o) verts.push_back({1, o});
      break;
    }
    case PlacementCase::kSpread: {
      std::vector<int> used(graph.num_classes(), 0);
      int placed = 0;
      for (int round = 0; placed < k; ++round) {
        bool progress = false;
        for (int cls = 0; cls < graph.num_classes() && placed < k; ++cls) {
          if (used[cls] < graph.class_size(cls)) {
            verts.push_back({cls, used[cls]++});
            ++placed;
            progress = true;
          }
        }
        if (!progress) throw std::invalid_argument("k exceeds the vertex count");
      }
      break;
    }
  }
  return TerminalSet(graph, std::move(verts));
}

McEvent parse_event(std::string_view tag) {
  if (tag == "rainbow-tree") return McEvent::kRainbowTree;
  if (tag == "packing") return McEvent::kPacking;
  if (tag == "star-tail") return McEvent::kStarTail;
  if (tag == "double-star-tail") return McEvent::kDoubleStarTail;
  if (tag == "triangle-distinct") return McEvent::kTriangleDistinct;
  if (tag == "triangle-two") return McEvent::kTriangleTwo;
  if (tag == "triangle-mono") return McEvent::kTriangleMono;
  throw std::invalid_argument("unknown event '" + std::string(tag) + "'");
}

std::string_view to_string(McEvent e) {
  switch (e) {
    case McEvent::kRainbowTree:
      return "rainbow-tree";
    case McEvent::kPacking:
      return "packing";
    case McEvent::kStarTail:
      return "star-tail";
    case McEvent::kDoubleStarTail:
      return "double-star-tail";
    case McEvent::kTriangleDistinct:
      return "triangle-distinct";
    case McEvent::kTriangleTwo:
      return "triangle-two";
    case McEvent::kTriangleMono:
      return "triangle-mono";
  }
  return "?";
}

double McEstimate::standard_error() const {
  const double p = estimate();
  return std::sqrt(p * (1 - p) / static_cast<double>(trials));
}

McEstimate estimate_event(const MultipartiteGraph& graph,
                          const McConfig& config, McEvent event) {
  if (config.trials < 1) throw std::invalid_argument("trials must be >= 1");
  if (config.colors < 1) throw std::invalid_argument("need at least one color");

  Trial trial{graph, event, config.l, std::nullopt, {}, {}, std::nullopt,
              std::nullopt};
  const int budget = std::min(config.colors, graph.vertex_count() - 1);
  if (std::holds_alternative<AllTerminalSets>(config.selector)) {
    if (is_family_event(event)) {
      throw std::invalid_argument("family events need a single terminal set");
    }
    const int need = event == McEvent::kRainbowTree ? 1 : config.l;
    trial.all_sets.emplace(graph, config.k, need, budget);
  } else if (const auto* s = std::get_if<TerminalSet>(&config.selector)) {
    trial.terminals = *s;
  } else {
    trial.terminals = place_terminals(
        graph, std::get<PlacementCase>(config.selector), config.k);
  }

  if (trial.terminals) {
    const TerminalSet& s = *trial.terminals;
    switch (event) {
      case McEvent::kStarTail: {
        int center = -1;
        for (int c = 0; c < graph.num_classes() && center < 0; ++c) {
          if (s.count_in_class(c) == 0) center = c;
        }
        if (center < 0) {
          throw std::invalid_argument(
              "star family needs a class without terminals");
        }
        trial.family = star_family(graph, s, center);
        break;
      }
      case McEvent::kDoubleStarTail: {
        std::vector<int> hit;
        for (int c = 0; c < graph.num_classes(); ++c) {
          if (s.count_in_class(c) > 0) hit.push_back(c);
        }
        if (hit.size() < 2) {
          throw std::invalid_argument(
              "double-star family needs terminals in two classes");
        }
        trial.family = double_star_family(graph, s, hit[0], hit[1]);
        break;
      }
      case McEvent::kTriangleDistinct:
      case McEvent::kTriangleTwo:
      case McEvent::kTriangleMono: {
        const auto& v = s.vertices();
        if (v.size() != 3 || v[0].cls == v[1].cls || v[1].cls == v[2].cls ||
            v[0].cls == v[2].cls) {
          throw std::invalid_argument(
              "triangle events need three terminals in distinct classes");
        }
        trial.triangle = {graph.edge_index(v[0], v[1]),
                          graph.edge_index(v[1], v[2]),
                          graph.edge_index(v[0], v[2])};
        break;
      }
      case McEvent::kRainbowTree:
      case McEvent::kPacking:
        trial.single.emplace(graph, enumerate_steiner_trees(graph, s, budget));
        break;
    }
  }

  const int jobs = static_cast<int>(
      std::clamp<std::int64_t>(config.jobs, 1, config.trials));
  std::vector<std::int64_t> counts(jobs, 0);
  auto work = [&](int j) {
    for (std::int64_t i = j; i < config.trials; i += jobs) {
      RandomStream stream = trial_stream(config.master_seed,
                                         static_cast<std::uint64_t>(i));
      if (trial.holds(random_coloring(graph, config.colors, stream))) {
        ++counts[j];
      }
    }
  };
  if (jobs == 1) {
    work(0);
  } else {
    std::vector<std::thread> workers;
    for (int j = 0; j < jobs; ++j) workers.emplace_back(work, j);
    for (auto& w : workers) w.join();
  }

  McEstimate est;
  est.trials = config.trials;
  est.seed = config.master_seed;
  for (std::int64_t c : counts) est.successes += c;
  return est;
}

SearchOutcome search_good_coloring(const MultipartiteGraph& graph, int t,
                                   int k, int l, int attempts,
                                   std::uint64_t seed) {
  if (attempts < 1) throw std::invalid_argument("attempts must be >= 1");
  if (t < 1) throw std::invalid_argument("need at least one color");
  SearchOutcome out;
  const int floor = lower_bound_structural(graph, k, l);
  if (t < floor) {
    out.explanation = "exhausted: " + std::to_string(t) +
                      " colors is below the structural lower bound " +
                      std::to_string(floor);
    return out;
  }
  const ColoringVerifier verifier(graph, k, l,
                                  std::min(t, graph.vertex_count() - 1));
  std::size_t hint = 0;
  for (int i = 0; i < attempts; ++i) {
    RandomStream stream = trial_stream(seed, static_cast<std::uint64_t>(i));
    Coloring c = random_coloring(graph, t, stream);
    out.attempts_used = i + 1;
    if (verifier.passes(c, &hint)) {
      out.witness = std::move(c);
      out.explanation = "found after " + std::to_string(i + 1) + " attempts";
      return out;
    }
  }
  out.explanation =
      "exhausted: no passing coloring in " + std::to_string(attempts) +
      " attempts";
  return out;
}

}  // namespace rainbow
