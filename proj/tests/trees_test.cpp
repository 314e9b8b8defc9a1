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

#include "rainbow/trees.hpp"

#include <gtest/gtest.h>

#include <set>
#include <stdexcept>

#include "oracles.hpp"
#include "rainbow/montecarlo.hpp"
#include "rainbow/packing.hpp"

namespace rainbow {
namespace {

VertexId U(int i) { return {0, i}; }
VertexId V(int i) { return {1, i}; }

std::vector<int> edge_ids(const MultipartiteGraph& g,
                          std::vector<std::pair<VertexId, VertexId>> pairs) {
  std::vector<int> ids;
  for (auto [x, y] : pairs) ids.push_back(g.edge_index(x, y));
  std::sort(ids.begin(), ids.end());
  return ids;
}

TEST(IsRainbow, CountsDistinctColors) {
  const MultipartiteGraph g({3, 3});
  const TerminalSet s(g, {U(0), U(1), U(2)});
  const STree star = star_tree(g, V(0), s);
  std::vector<int> a(9, 1);
  a[star.edges[1]] = 2;
  a[star.edges[2]] = 3;
  EXPECT_TRUE(is_rainbow(star, Coloring(g, 3, a)));
  a[star.edges[2]] = 1;
  EXPECT_FALSE(is_rainbow(star, Coloring(g, 3, a)));
  const STree edge{TerminalSet(g, {U(0), V(0)}), {g.edge_index(U(0), V(0))}};
  EXPECT_TRUE(is_rainbow(edge, Coloring::constant(g)));
}

TEST(StarTree, CenterOutsideTerminalClasses) {
  const MultipartiteGraph g({3, 3});
  const TerminalSet s(g, {U(0), U(1), U(2)});
  const STree star = star_tree(g, V(0), s);
  EXPECT_EQ(star.edges, edge_ids(g, {{U(0), V(0)}, {U(1), V(0)}, {U(2), V(0)}}));
  EXPECT_FALSE(stree_defect(g, star));

  const MultipartiteGraph h({2, 2, 2});
  const TerminalSet s2(h, {VertexId{0, 0}, VertexId{1, 1}});
  EXPECT_EQ(star_tree(h, VertexId{2, 0}, s2).edges.size(), 2u);
  EXPECT_THROW(star_tree(h, VertexId{1, 0}, s2), std::invalid_argument);
  EXPECT_THROW(star_tree(h, VertexId{0, 0}, s2), std::invalid_argument);
}

TEST(DoubleStarTree, SplitTerminalSet) {
  const MultipartiteGraph g({4, 4});
  const TerminalSet s(g, {U(0), U(1), V(0)});
  const STree t2 = double_star_tree(g, U(2), V(2), s);
  EXPECT_EQ(t2.edges, edge_ids(g, {{U(2), V(2)}, {U(2), V(0)}, {V(2), U(0)}, {V(2), U(1)}}));
  EXPECT_EQ(t2.edges.size(), 4u);
  EXPECT_FALSE(stree_defect(g, t2));
  const STree t3 = double_star_tree(g, U(3), V(3), s);
  EXPECT_TRUE(internally_disjoint(g, t2, t3));
  EXPECT_THROW(double_star_tree(g, U(0), V(2), s), std::invalid_argument);
  EXPECT_THROW(double_star_tree(g, U(2), V(0), s), std::invalid_argument);
}

TEST(DoubleStarFamily, PairsUnusedOffsetsInOrder) {
  const MultipartiteGraph g({5, 4});
  const TerminalSet s(g, {U(1), U(3), V(0)});
  const std::vector<STree> fam = double_star_family(g, s, 0, 1);
  ASSERT_EQ(fam.size(), 3u);
  EXPECT_EQ(fam[0].edges, double_star_tree(g, U(0), V(1), s).edges);
  EXPECT_EQ(fam[1].edges, double_star_tree(g, U(2), V(2), s).edges);
  EXPECT_EQ(fam[2].edges, double_star_tree(g, U(4), V(3), s).edges);
  for (size_t i = 0; i < fam.size(); ++i) {
    for (size_t j = i + 1; j < fam.size(); ++j) {
      EXPECT_TRUE(internally_disjoint(g, fam[i], fam[j]));
    }
  }
}

TEST(StarFamily, PairwiseDisjointAndFullSize) {
  for (int n = 1; n <= 5; ++n) {
    const MultipartiteGraph g({3, n, 2});
    const TerminalSet s(g, {U(0), U(2), VertexId{2, 1}});
    const std::vector<STree> fam = star_family(g, s, 1);
    ASSERT_EQ(static_cast<int>(fam.size()), n);
    for (int i = 0; i < n; ++i) {
      EXPECT_FALSE(stree_defect(g, fam[i]));
      for (int j = i + 1; j < n; ++j) {
        EXPECT_TRUE(internally_disjoint(g, fam[i], fam[j]));
      }
    }
  }
}

TEST(EnumerateSteinerTrees, SmallExamples) {
  const MultipartiteGraph k22({2, 2});
  const auto single = enumerate_steiner_trees(k22, TerminalSet(k22, {U(0), V(0)}), 1);
  ASSERT_EQ(single.size(), 1u);
  EXPECT_EQ(single[0].edges, std::vector<int>{0});
  const TerminalSet all(k22, {U(0), U(1), V(0), V(1)});
  EXPECT_EQ(enumerate_steiner_trees(k22, all, 3).size(), 4u);
  EXPECT_EQ(oracle::s_trees(k22, all.vertices(), 3).size(), 4u);

  const MultipartiteGraph k33({3, 3});
  const TerminalSet s(k33, {U(0), U(1), U(2)});
  const auto trees = enumerate_steiner_trees(k33, s, 3);
  ASSERT_EQ(trees.size(), 3u);
  for (int i = 0; i < 3; ++i) EXPECT_EQ(trees[i].edges, star_tree(k33, V(i), s).edges);
}

std::set<std::vector<int>> as_set(const std::vector<STree>& ts) {
  std::set<std::vector<int>> out;
  for (const STree& t : ts) out.insert(t.edges);
  return out;
}

// Every class-size list with at most `max_vertices` vertices and >= 2 classes.
std::vector<std::vector<int>> small_graphs(int max_vertices) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  std::function<void(int, int)> rec = [&](int left, int max_part) {
    if (cur.size() >= 2) out.push_back(cur);
    for (int p = std::min(left, max_part); p >= 1; --p) {
      cur.push_back(p);
      rec(left - p, p);
      cur.pop_back();
    }
  };
  rec(max_vertices, max_vertices);
  return out;
}

TEST(EnumerateSteinerTrees, MatchesEdgeSubsetOracle) {
  // All graphs up to 6 vertices, every terminal set of size 2..4, every budget.
  for (const auto& sizes : small_graphs(6)) {
    const MultipartiteGraph g(sizes);
    if (g.edge_count() > 12) continue;
    for (int k = 2; k <= std::min(4, g.vertex_count()); ++k) {
      for (const auto& vs : oracle::k_sets(g, k)) {
        const TerminalSet s(g, vs);
        for (int budget = 1; budget < g.vertex_count(); ++budget) {
          const auto trees = enumerate_steiner_trees(g, s, budget);
          std::set<std::vector<int>> expected;
          for (auto& t : oracle::s_trees(g, vs, budget)) expected.insert(t);
          EXPECT_EQ(as_set(trees), expected);
          EXPECT_EQ(trees.size(), as_set(trees).size()) << "duplicates";
          for (const STree& t : trees) EXPECT_FALSE(stree_defect(g, t));
          for (size_t i = 1; i < trees.size(); ++i) {
            EXPECT_TRUE(tree_order_less(trees[i - 1], trees[i]));
          }
        }
      }
    }
  }
}

TEST(EnumerateSteinerTrees, BudgetTCapturesAllRainbowTrees) {
  // Under t colors a rainbow tree has at most t edges.
  const std::vector<std::vector<int>> hosts = {{3, 3}, {2, 2, 2}, {3, 2, 1}, {4, 5}, {3, 3, 3}};
  std::uint64_t seed = 0;
  for (const auto& sizes : hosts) {
    const MultipartiteGraph g(sizes);
    const auto sets = oracle::k_sets(g, 3);
    for (size_t i = 0; i < sets.size(); i += 7) {
      const TerminalSet s(g, sets[i]);
      const auto all = enumerate_steiner_trees(g, s, g.vertex_count() - 1);
      for (int t = 1; t <= 4; ++t) {
        RandomStream rs = trial_stream(seed++, 0);
        const Coloring c = random_coloring(g, t, rs);
        std::set<std::vector<int>> capped, unbounded;
        for (const STree& tr : enumerate_steiner_trees(g, s, t)) {
          if (is_rainbow(tr, c)) capped.insert(tr.edges);
        }
        for (const STree& tr : all) {
          if (is_rainbow(tr, c)) unbounded.insert(tr.edges);
        }
        EXPECT_EQ(capped, unbounded);
      }
    }
  }
}

TEST(SteinerVertices, OutsideTerminalSet) {
  const MultipartiteGraph g({4, 4});
  const TerminalSet s(g, {U(0), U(1), V(0)});
  const STree t = double_star_tree(g, U(2), V(2), s);
  const std::vector<int> st = steiner_vertices(g, t);
  EXPECT_EQ(st, (std::vector<int>{g.flat_index(U(2)), g.flat_index(V(2))}));
  EXPECT_EQ(tree_vertices(g, t).size(), 5u);
}

TEST(StreeDefect, FlagsMalformedTrees) {
  const MultipartiteGraph g({3, 3});
  const TerminalSet s(g, {U(0), U(1)});
  // Dangling Steiner leaf: path u0-v0-u1 plus v0-u2.
  const STree dangling{s, edge_ids(g, {{U(0), V(0)}, {U(1), V(0)}, {U(2), V(0)}})};
  EXPECT_TRUE(stree_defect(g, dangling));
  const STree disconnected{s, edge_ids(g, {{U(0), V(0)}, {U(1), V(1)}})};
  EXPECT_TRUE(stree_defect(g, disconnected));
  const STree cycle{s, edge_ids(g, {{U(0), V(0)}, {U(1), V(0)}, {U(0), V(1)}, {U(1), V(1)}})};
  EXPECT_TRUE(stree_defect(g, cycle));
  const STree good{s, edge_ids(g, {{U(0), V(0)}, {U(1), V(0)}})};
  EXPECT_FALSE(stree_defect(g, good));
  const STree unsorted{s, {good.edges[1], good.edges[0]}};
  EXPECT_TRUE(stree_defect(g, unsorted));
}

TEST(TerminalSet, Validation) {
  const MultipartiteGraph g({2, 2});
  EXPECT_THROW(TerminalSet(g, {U(0)}), std::invalid_argument);
  EXPECT_THROW(TerminalSet(g, {U(0), U(0)}), std::invalid_argument);
  EXPECT_THROW(TerminalSet(g, {U(0), U(2)}), std::out_of_range);
  const TerminalSet s(g, {V(1), U(0)});
  EXPECT_EQ(to_string(s), "{0:0, 1:1}");
  EXPECT_EQ(s.count_in_class(1), 1);
}

}  // namespace
}  // namespace rainbow
