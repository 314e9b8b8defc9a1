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

#include "rainbow/index_search.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <thread>

namespace rainbow {
namespace {

// Above this many automorphisms the canonical-form filter keeps only class
// permutations, and above it again only color relabelling.
constexpr std::int64_t kMaxAutomorphisms = 50000;
constexpr std::size_t kBatch = 2048;

void require_k_l(const MultipartiteGraph& graph, int k, int l) {
  if (k < 1 || l < 1) throw std::invalid_argument("k and l must be positive");
  if (k > graph.vertex_count()) {
    throw std::invalid_argument("k exceeds the vertex count");
  }
}

std::int64_t factorial(int n) {
  std::int64_t f = 1;
  for (int i = 2; i <= n; ++i) {
    f *= i;
    if (f > kMaxAutomorphisms) return kMaxAutomorphisms + 1;
  }
  return f;
}

// All permutations of `items`, in lexicographic order of the result.
std::vector<std::vector<int>> permutations(std::vector<int> items) {
  std::sort(items.begin(), items.end());
  std::vector<std::vector<int>> out;
  do {
    out.push_back(items);
  } while (std::next_permutation(items.begin(), items.end()));
  return out;
}

// Edge permutations induced by the vertex automorphisms we use for symmetry
// reduction; entry [a][e] is the image of edge e.
std::vector<std::vector<int>> edge_automorphisms(const MultipartiteGraph& g) {
  const int r = g.num_classes();
  std::vector<std::vector<int>> groups;  // classes of equal size
  {
    std::vector<int> order(r);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int x, int y) {
      return g.class_size(x) < g.class_size(y);
    });
    for (int c : order) {
      if (groups.empty() ||
          g.class_size(groups.back().front()) != g.class_size(c)) {
        groups.push_back({});
      }
      groups.back().push_back(c);
    }
  }
  std::int64_t class_perms = 1;
  for (const auto& grp : groups) {
    class_perms *= factorial(static_cast<int>(grp.size()));
    class_perms = std::min(class_perms, kMaxAutomorphisms + 1);
  }
  std::int64_t offset_perms = 1;
  for (int c = 0; c < r; ++c) {
    offset_perms *= factorial(g.class_size(c));
    offset_perms = std::min(offset_perms, kMaxAutomorphisms + 1);
  }
  const bool use_classes = class_perms <= kMaxAutomorphisms;
  const bool use_offsets =
      use_classes && class_perms * offset_perms <= kMaxAutomorphisms;

  // Class maps: product over groups of all permutations within the group.
  std::vector<std::vector<int>> class_maps{std::vector<int>(r)};
  std::iota(class_maps[0].begin(), class_maps[0].end(), 0);
  if (use_classes) {
    for (const auto& grp : groups) {
      std::vector<std::vector<int>> next;
      for (const auto& base : class_maps) {
        for (const auto& perm : permutations(grp)) {
          std::vector<int> m = base;
          for (std::size_t i = 0; i < grp.size(); ++i) m[grp[i]] = perm[i];
          next.push_back(std::move(m));
        }
      }
      class_maps = std::move(next);
    }
  }
  // Offset maps: per class, every permutation of its offsets.
  std::vector<std::vector<std::vector<int>>> offset_maps{{}};
  for (int c = 0; c < r; ++c) {
    std::vector<int> ident(g.class_size(c));
    std::iota(ident.begin(), ident.end(), 0);
    const auto perms =
        use_offsets ? permutations(ident) : std::vector<std::vector<int>>{ident};
    std::vector<std::vector<std::vector<int>>> next;
    for (const auto& base : offset_maps) {
      for (const auto& perm : perms) {
        auto m = base;
        m.push_back(perm);
        next.push_back(std::move(m));
      }
    }
    offset_maps = std::move(next);
  }

  std::vector<std::vector<int>> result;
  for (const auto& cm : class_maps) {
    for (const auto& om : offset_maps) {
      std::vector<int> image(g.edge_count());
      for (int e = 0; e < g.edge_count(); ++e) {
        const Edge& edge = g.edge(e);
        const VertexId a{cm[edge.a.cls], om[edge.a.cls][edge.a.offset]};
        const VertexId b{cm[edge.b.cls], om[edge.b.cls][edge.b.offset]};
        image[e] = g.edge_index(a, b);
      }
      result.push_back(std::move(image));
    }
  }
  return result;
}

// Restricted growth strings of a given length using exactly `colors` values,
// visited in lexicographic order; the visitor returns false to stop.
class GrowthStrings {
 public:
  GrowthStrings(int length, int colors) : word_(length), colors_(colors) {}

  void visit(const std::function<bool(const std::vector<int>&)>& fn) {
    fn_ = &fn;
    if (static_cast<int>(word_.size()) >= colors_) place(0, 0);
  }

 private:
  bool place(int pos, int used) {
    const int length = static_cast<int>(word_.size());
    if (pos == length) return (*fn_)(word_);
    const int top = std::min(used + 1, colors_);
    for (int c = 1; c <= top; ++c) {
      const int now = std::max(used, c);
      if (length - pos - 1 < colors_ - now) continue;
      word_[pos] = c;
      if (!place(pos + 1, now)) return false;
    }
    return true;
  }

  std::vector<int> word_;
  int colors_;
  const std::function<bool(const std::vector<int>&)>* fn_ = nullptr;
};

// True when no automorphism maps `word` to a lexicographically smaller
// growth string.
bool is_canonical(const std::vector<int>& word,
                  const std::vector<std::vector<int>>& inverse_autos,
                  std::vector<int>& relabel) {
  const std::size_t n = word.size();
  for (const auto& inv : inverse_autos) {
    std::fill(relabel.begin(), relabel.end(), 0);
    int next = 0;
    for (std::size_t e = 0; e < n; ++e) {
      int& label = relabel[word[inv[e]]];
      if (label == 0) label = ++next;
      if (label < word[e]) return false;
      if (label > word[e]) break;
    }
  }
  return true;
}

}  // namespace

std::vector<TerminalSet> all_terminal_sets(const MultipartiteGraph& graph,
                                           int k) {
  std::vector<TerminalSet> sets;
  const int n = graph.vertex_count();
  if (k < 2 || k > n) return sets;
  std::vector<int> pick(k);
  std::iota(pick.begin(), pick.end(), 0);
  while (true) {
    std::vector<VertexId> verts;
    for (int p : pick) verts.push_back(graph.vertex(p));
    sets.emplace_back(graph, std::move(verts));
    int i = k - 1;
    while (i >= 0 && pick[i] == n - k + i) --i;
    if (i < 0) break;
    ++pick[i];
    for (int j = i + 1; j < k; ++j) pick[j] = pick[j - 1] + 1;
  }
  return sets;
}

ColoringVerifier::ColoringVerifier(const MultipartiteGraph& graph, int k,
                                   int l, int max_edges)
    : graph_(graph), l_(l) {
  require_k_l(graph, k, l);
  if (k < 2) throw std::invalid_argument("k must be at least 2");
  sets_ = all_terminal_sets(graph_, k);
  searches_.reserve(sets_.size());
  for (const TerminalSet& s : sets_) {
    searches_.emplace_back(graph_, enumerate_steiner_trees(graph_, s, max_edges));
  }
}

bool ColoringVerifier::set_passes(std::size_t i,
                                  const Coloring& coloring) const {
  const PackingSearch& search = searches_[i];
  if (search.size() < l_) return false;
  const auto mask = search.rainbow_mask(coloring);
  if (static_cast<int>(mask.count()) < l_) return false;
  return static_cast<int>(search.solve(mask, l_).size()) >= l_;
}

std::optional<TerminalSet> ColoringVerifier::first_failure(
    const Coloring& coloring) const {
  for (std::size_t i = 0; i < sets_.size(); ++i) {
    if (!set_passes(i, coloring)) return sets_[i];
  }
  return std::nullopt;
}

bool ColoringVerifier::passes(const Coloring& coloring,
                              std::size_t* hint) const {
  if (hint != nullptr && *hint < sets_.size() &&
      !set_passes(*hint, coloring)) {
    return false;
  }
  for (std::size_t i = 0; i < sets_.size(); ++i) {
    if (!set_passes(i, coloring)) {
      if (hint != nullptr) *hint = i;
      return false;
    }
  }
  return true;
}

ColoringVerdict verify_coloring(const MultipartiteGraph& graph,
                                const Coloring& coloring, int k, int l) {
  require_k_l(graph, k, l);
  if (coloring.edge_count() != graph.edge_count()) {
    throw std::invalid_argument("coloring does not belong to this graph");
  }
  if (k == 1) return {};  // a single vertex is its own (edgeless) tree
  const int budget = std::min(coloring.colors(), graph.vertex_count() - 1);
  ColoringVerifier verifier(graph, k, l, budget);
  ColoringVerdict verdict;
  verdict.failing_set = verifier.first_failure(coloring);
  verdict.pass = !verdict.failing_set.has_value();
  return verdict;
}

Rational packing_upper_bound(int k, int r) {
  if (r < 2) throw std::invalid_argument("need at least 2 classes");
  if (k < r) throw std::invalid_argument("bound needs k >= r");
  const int ceil = (k + r - 1) / r;
  const int floor = k / r;
  Rational bound(mpz_class(r * (r - 1) / 2 * ceil * ceil), mpz_class(floor));
  bound.canonicalize();
  return bound;
}

int lower_bound_structural(const MultipartiteGraph& graph, int k, int l) {
  const int r = graph.num_classes();
  std::vector<int> sizes = graph.class_sizes();
  std::sort(sizes.rbegin(), sizes.rend());
  int bound = std::max(1, k - 1);
  if (sizes.front() >= k) bound = std::max(bound, k);
  if (r == 2 && k == 3 && l >= 3 && sizes.front() >= 2) {
    bound = std::max(bound, k + 1);
  }
  if (k >= r) {
    const int q = k / r;
    const int rem = k % r;
    bool spread_fits = true;
    for (int i = 0; i < r; ++i) {
      if (sizes[i] < q + (i < rem ? 1 : 0)) spread_fits = false;
    }
    if (spread_fits && Rational(l) > packing_upper_bound(k, r)) {
      bound = std::max(bound, k + 1);
    }
  }
  return bound;
}

int max_small_tree_packing(const MultipartiteGraph& graph,
                           const TerminalSet& s_prime) {
  for (int c = 0; c < graph.num_classes(); ++c) {
    if (s_prime.count_in_class(c) == 0) {
      throw std::invalid_argument("terminal set misses class " +
                                  std::to_string(c));
    }
  }
  PackingSearch search(graph,
                       enumerate_steiner_trees(graph, s_prime, s_prime.size()));
  return static_cast<int>(search.solve(search.size()).size());
}

RxResult rx_exact(const MultipartiteGraph& graph, int k, int l, int t_max,
                  int jobs) {
  require_k_l(graph, k, l);
  if (k < 2) throw std::invalid_argument("k must be at least 2");
  if (t_max > graph.edge_count()) {
    throw std::invalid_argument("t_max exceeds the edge count");
  }
  jobs = std::max(jobs, 1);

  RxResult result;
  result.lower_bound = lower_bound_structural(graph, k, l);

  // With every edge a distinct color all trees are rainbow, so the colorless
  // packing number decides feasibility outright.
  for (const TerminalSet& s : all_terminal_sets(graph, k)) {
    PackingSearch search(
        graph, enumerate_steiner_trees(graph, s, graph.vertex_count() - 1));
    if (static_cast<int>(search.solve(l).size()) < l) {
      result.status = RxStatus::kInfeasible;
      result.failing_set = s;
      return result;
    }
  }

  const auto autos = edge_automorphisms(graph);
  std::vector<std::vector<int>> inverse(autos.size(),
                                        std::vector<int>(graph.edge_count()));
  for (std::size_t a = 0; a < autos.size(); ++a) {
    for (int e = 0; e < graph.edge_count(); ++e) inverse[a][autos[a][e]] = e;
  }

  for (int t = result.lower_bound; t <= t_max; ++t) {
    const ColoringVerifier verifier(
        graph, k, l, std::min(t, graph.vertex_count() - 1));
    std::vector<int> relabel(t + 1);
    std::vector<std::vector<int>> batch;
    std::optional<std::vector<int>> witness;
    std::size_t hint = 0;

    auto flush = [&]() {
      const std::size_t n = batch.size();
      std::size_t found = n;
      if (jobs == 1 || n < 2) {
        for (std::size_t i = 0; i < n && found == n; ++i) {
          if (verifier.passes(Coloring(graph, t, batch[i]), &hint)) found = i;
        }
      } else {
        std::atomic<std::size_t> best{n};
        std::vector<std::thread> workers;
        for (int j = 0; j < jobs; ++j) {
          workers.emplace_back([&, j]() {
            std::size_t local_hint = 0;
            for (std::size_t i = j; i < n && i < best.load(); i += jobs) {
              if (verifier.passes(Coloring(graph, t, batch[i]), &local_hint)) {
                std::size_t cur = best.load();
                while (i < cur && !best.compare_exchange_weak(cur, i)) {
                }
                break;
              }
            }
          });
        }
        for (auto& w : workers) w.join();
        found = best.load();
      }
      if (found < n) {
        witness = batch[found];
        result.colorings_checked += static_cast<std::int64_t>(found) + 1;
      } else {
        result.colorings_checked += static_cast<std::int64_t>(n);
      }
      batch.clear();
      return !witness.has_value();
    };

    GrowthStrings(graph.edge_count(), t)
        .visit([&](const std::vector<int>& word) {
          if (!is_canonical(word, inverse, relabel)) return true;
          batch.push_back(word);
          return batch.size() < kBatch || flush();
        });
    if (!witness && !batch.empty()) flush();
    if (witness) {
      result.status = RxStatus::kFound;
      result.value = t;
      result.witness = Coloring(graph, t, std::move(*witness));
      return result;
    }
  }
  result.status = RxStatus::kUnresolved;
  return result;
}

}  // namespace rainbow
