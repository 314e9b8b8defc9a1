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

// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any
// criterion fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>

#include "oracles.hpp"
#include "rainbow/bounds.hpp"
#include "rainbow/certificate.hpp"
#include "rainbow/index_search.hpp"
#include "rainbow/montecarlo.hpp"
#include "rainbow/packing.hpp"
#include "rainbow/ramsey.hpp"

namespace {

using namespace rainbow;

struct Outcome {
  bool pass;
  std::string detail;
};

// 1. has_l_packing agrees with the edge-subset oracle on K_{3,3}, t = 3.
Outcome packing_oracle_equivalence() {
  const MultipartiteGraph g({3, 3});
  const auto sets = oracle::k_sets(g, 3);
  std::vector<std::vector<oracle::EdgeSet>> trees;
  for (const auto& s : sets) trees.push_back(oracle::s_trees(g, s, g.vertex_count() - 1));
  int checks = 0, mismatches = 0;
  for (int i = 0; i < 300; ++i) {
    RandomStream rs = trial_stream(20260101, i);
    const Coloring c = random_coloring(g, 3, rs);
    for (size_t j = 0; j < sets.size(); ++j) {
      std::vector<oracle::EdgeSet> rainbow;
      for (const auto& t : trees[j]) {
        if (oracle::rainbow(t, c)) rainbow.push_back(t);
      }
      const int best = oracle::max_family(g, rainbow, oracle::flat_terminals(g, sets[j]));
      const TerminalSet s(g, sets[j]);
      for (int l = 1; l <= 2; ++l) {
        const auto p = has_l_packing(g, c, s, l);
        const bool ok = p.has_value() == (best >= l) &&
                        (!p || (verify_packing(g, c, *p).ok &&
                                static_cast<int>(p->trees.size()) == l));
        mismatches += !ok;
        ++checks;
      }
    }
  }
  return {mismatches == 0, std::to_string(checks) + " decisions, " +
                               std::to_string(mismatches) + " mismatches"};
}

// 2. Small-tree packing bound is attained at (k, r) = (3, 3) and respected
// at (4, 3) on K_{3x2}.
Outcome small_tree_sharpness() {
  const MultipartiteGraph g({2, 2, 2});
  const TerminalSet one_per_class(g, {{0, 0}, {1, 0}, {2, 0}});
  const int m33 = max_small_tree_packing(g, one_per_class);
  const int o33 = oracle::max_colorless_packing(g, one_per_class.vertices(), 3);
  bool ok = m33 == 3 && o33 == 3 && packing_upper_bound(3, 3) == 3;
  int worst = 0;
  for (const auto& vs : oracle::k_sets(g, 4)) {
    const TerminalSet s(g, vs);
    if (s.count_in_class(0) == 0 || s.count_in_class(1) == 0 || s.count_in_class(2) == 0) continue;
    const int brute = oracle::max_colorless_packing(g, vs, 4);
    ok = ok && brute == max_small_tree_packing(g, s);
    worst = std::max(worst, brute);
  }
  ok = ok && worst <= 12 && packing_upper_bound(4, 3) == 12;
  return {ok, "k=3: " + std::to_string(m33) + " (bound 3), k=4: max " +
                  std::to_string(worst) + " (bound 12)"};
}

// 3. One-class bipartite failure equals the Binomial(n, 2/9) tail at 1.
Outcome one_class_identity() {
  for (long n = 2; n <= 50; ++n) {
    const auto r = bipartite_two_tree_failure(n, BipartiteCase::kOneClass);
    if (!r.exact || *r.exact != oracle::binomial_cdf(n, Rational(2, 9), 1)) {
      return {false, "differs at n=" + std::to_string(n)};
    }
  }
  return {true, "exact equality for n=2..50"};
}

// 4. The combined two-class failure stays below 2n(7/9)^{n-2}.
Outcome two_class_envelope() {
  for (long n = 2; n <= 200; ++n) {
    const Rational same = *bipartite_two_tree_failure(n, BipartiteCase::kTwoClassSame).exact;
    const Rational diff = *bipartite_two_tree_failure(n, BipartiteCase::kTwoClassDistinct).exact;
    const Rational combined = Rational(1, 3) * same + Rational(2, 3) * diff;
    if (combined > Rational(2 * n) * oracle::power(Rational(7, 9), n - 2)) {
      return {false, "violated at n=" + std::to_string(n)};
    }
  }
  return {true, "holds exactly for n=2..200"};
}

// 5. Triangle pattern frequencies and the tripartite spread evaluators.
Outcome triangle_weights() {
  const MultipartiteGraph tri({1, 1, 1});
  const std::pair<McEvent, Rational> expect[] = {{McEvent::kTriangleDistinct, Rational(2, 9)},
                                                 {McEvent::kTriangleTwo, Rational(2, 3)},
                                                 {McEvent::kTriangleMono, Rational(1, 9)}};
  bool ok = true;
  std::ostringstream detail;
  McConfig config{555, 100000, 3, 3, 1, PlacementCase::kSpread, 1};
  for (const auto& [event, p] : expect) {
    const McEstimate e = estimate_event(tri, config, event);
    const double pd = p.get_d();
    const double z = (e.estimate() - pd) / std::sqrt(pd * (1 - pd) / e.trials);
    ok = ok && std::abs(z) <= 4;
    char buf[80];
    std::snprintf(buf, sizeof(buf), "%s z=%+.2f ", std::string(to_string(event)).c_str(), z);
    detail << buf;
  }
  const TrianglePatternWeights w = triangle_pattern_weights(3);
  ok = ok && w.distinct == Rational(2, 9) && w.two == Rational(2, 3) && w.mono == Rational(1, 9);
  const long n = 10;
  const Rational tail = oracle::power(Rational(7, 9), 2 * n - 2);
  const Rational d = 3 * tail;
  const Rational t = Rational(2 * n + 1) * tail;
  const Rational m = Rational(3 * (3 * n * n + 1)) * tail;
  ok = ok && *tripartite_three_tree_failure(n, TripartiteCase::kSpreadDistinct).exact == d &&
       *tripartite_three_tree_failure(n, TripartiteCase::kSpreadTwo).exact == t &&
       *tripartite_three_tree_failure(n, TripartiteCase::kSpreadMono).exact == m &&
       *tripartite_three_tree_failure(n, TripartiteCase::kSpread).exact ==
           Rational(2, 9) * d + Rational(2, 3) * t + Rational(1, 9) * m;
  detail << "| n=10 subcases exact";
  return {ok, detail.str()};
}

// 6. Union-bound threshold for (k, l) = (3, 1).
Outcome union_threshold() {
  const long n = union_bound_threshold(3, 1);
  const bool library = *union_bound_success(n, 3, 1).exact > 0 &&
                       *union_bound_success(n - 1, 3, 1).exact <= 0;
  auto direct = [](long m) -> Rational {
    return 1 - Rational(8 * m * m * m) * oracle::power(Rational(29, 32), m - 3);
  };
  long scan = 4;
  while (direct(scan) <= 0) ++scan;
  const bool ok = library && scan == n && direct(n) > 0 && direct(n - 1) <= 0;
  return {ok, "N=" + std::to_string(n) + ", direct scan N=" + std::to_string(scan)};
}

// 7. A planted monochromatic K_{4,4} refutes a 4-coloring of K_{8,8}.
Outcome biclique_refutation() {
  const MultipartiteGraph g({8, 8});
  std::vector<int> a;
  for (const Edge& e : g.edges()) {
    a.push_back(e.a.offset < 4 && e.b.offset < 4 ? 1 : (e.a.offset + e.b.offset) % 3 + 2);
  }
  const Coloring c(g, 4, a);
  const auto proof = refute_by_biclique(g, c, 4);
  if (!proof) return {false, "no refutation returned"};
  const auto trees = oracle::s_trees(g, proof->terminals.vertices(), 4);
  int rainbow = 0;
  for (const auto& t : trees) rainbow += oracle::rainbow(t, c);
  const bool ok = rainbow == 0 && !trees.empty() && proof->rainbow_trees == 0;
  return {ok, "S=" + to_string(proof->terminals) + ", " + std::to_string(trees.size()) +
                  " trees with <= 4 edges, " + std::to_string(rainbow) + " rainbow"};
}

// 8. Exact rainbow index on tiny hosts.
Outcome tiny_rx() {
  const MultipartiteGraph tri({1, 1, 1});
  const RxResult a = rx_exact(tri, 3, 1, 3);
  const RxResult b = rx_exact(tri, 3, 2, 3);
  bool ok = a.status == RxStatus::kFound && a.value == 2 && oracle::rx(tri, 3, 1, 3) == 2 &&
            b.status == RxStatus::kInfeasible && !oracle::rx(tri, 3, 2, 3) &&
            oracle::structurally_infeasible(tri, 3, 2);
  const MultipartiteGraph k33({3, 3});
  const RxResult c = rx_exact(k33, 3, 3, 9);
  const int lb = lower_bound_structural(k33, 3, 3);
  std::string k33_text;
  if (c.status == RxStatus::kInfeasible) {
    ok = ok && oracle::max_colorless_packing(k33, c.failing_set->vertices(), 5) < 3;
    k33_text = "infeasible at " + to_string(*c.failing_set);
  } else if (c.status == RxStatus::kFound) {
    ok = ok && *c.value >= 4 && *c.value >= lb;
    k33_text = std::to_string(*c.value);
  } else {
    ok = false;
    k33_text = "unresolved";
  }
  ok = ok && lb >= 4;
  return {ok, "K_{1,1,1}: 2 / infeasible; K_{3,3} (3,3): " + k33_text +
                  " (structural lower bound " + std::to_string(lb) + ")"};
}

// 9. Randomized search on K_{12,12} is reproducible and any witness verifies.
Outcome constructive_pipeline() {
  const MultipartiteGraph g({12, 12});
  const std::uint64_t seed = 12;
  const SearchOutcome first = search_good_coloring(g, 3, 3, 2, 200, seed);
  const SearchOutcome second = search_good_coloring(g, 3, 3, 2, 200, seed);
  auto text = [&](const SearchOutcome& o) {
    return o.witness ? certificate_text({g, *o.witness, {}}) : "exhausted\n" + o.explanation;
  };
  bool ok = text(first) == text(second) && first.attempts_used == second.attempts_used;
  std::string detail;
  if (first.witness) {
    std::istringstream in(text(first));
    const Certificate back = parse_certificate(in);
    ok = ok && verify_coloring(back.graph, back.coloring, 3, 2).pass;
    detail = "witness after " + std::to_string(first.attempts_used) + " attempts, re-verified";
  } else {
    detail = "exhausted after " + std::to_string(first.attempts_used) + " attempts";
  }
  return {ok, detail + "; reproducible"};
}

}  // namespace

int main() {
  const std::pair<const char*, std::function<Outcome()>> criteria[] = {
      {"1 packing-oracle-equivalence", packing_oracle_equivalence},
      {"2 small-tree-bound-sharpness", small_tree_sharpness},
      {"3 one-class-binomial-identity", one_class_identity},
      {"4 two-class-envelope", two_class_envelope},
      {"5 triangle-pattern-weights", triangle_weights},
      {"6 union-bound-threshold", union_threshold},
      {"7 biclique-refutation", biclique_refutation},
      {"8 tiny-rainbow-index", tiny_rx},
      {"9 constructive-pipeline", constructive_pipeline},
  };
  int failures = 0;
  for (const auto& [name, check] : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = check();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("%s %-30s %s (%.1fs)\n", o.pass ? "PASS" : "FAIL", name, o.detail.c_str(), secs);
    failures += !o.pass;
  }
  std::printf("%d/9 criteria passed\n", 9 - failures);
  return failures == 0 ? 0 : 1;
}
