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

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace rainbow {
namespace {

// Union-find over a handful of local vertices. Copied on branch, so no undo.
struct Components {
  std::vector<int> parent;

  explicit Components(int n) : parent(n) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  bool unite(int x, int y) {
    x = find(x);
    y = find(y);
    if (x == y) return false;
    parent[y] = x;
    return true;
  }
};

struct LocalEdge {
  int index;  // canonical
  int x;      // local endpoints
  int y;
};

class SpanningTreeWalker {
 public:
  SpanningTreeWalker(std::vector<LocalEdge> edges, int vertex_count,
                     std::vector<bool> steiner,
                     const std::function<bool(const std::vector<int>&)>& emit)
      : edges_(std::move(edges)),
        n_(vertex_count),
        steiner_(std::move(steiner)),
        emit_(emit) {}

  // Returns false when the visitor asked to stop.
  bool run() {
    if (n_ == 1) return true;
    if (!spans(0, Components(n_), 0)) return true;
    return walk(0, Components(n_));
  }

 private:
  // Whether the chosen edges plus edges[from..] still connect everything.
  bool spans(std::size_t from, Components comps, int merged) const {
    for (std::size_t i = from; i < edges_.size(); ++i) {
      if (comps.unite(edges_[i].x, edges_[i].y)) ++merged;
    }
    return merged + static_cast<int>(chosen_.size()) == n_ - 1;
  }

  bool walk(std::size_t pos, Components comps) {
    if (static_cast<int>(chosen_.size()) == n_ - 1) return finish();
    if (pos == edges_.size()) return true;
    const int need = n_ - 1 - static_cast<int>(chosen_.size());
    if (static_cast<int>(edges_.size() - pos) < need) return true;

    const LocalEdge& e = edges_[pos];
    Components with = comps;
    if (with.unite(e.x, e.y)) {
      chosen_.push_back(pos);
      const bool go_on = walk(pos + 1, with);
      chosen_.pop_back();
      if (!go_on) return false;
    }
    if (spans(pos + 1, comps, 0)) return walk(pos + 1, comps);
    return true;
  }

  bool finish() {
    std::vector<int> degree(n_, 0);
    for (std::size_t c : chosen_) {
      ++degree[edges_[c].x];
      ++degree[edges_[c].y];
    }
    for (int v = 0; v < n_; ++v) {
      if (steiner_[v] && degree[v] < 2) return true;
    }
    std::vector<int> indices;
    indices.reserve(chosen_.size());
    for (std::size_t c : chosen_) indices.push_back(edges_[c].index);
    return emit_(indices);
  }

  std::vector<LocalEdge> edges_;
  int n_;
  std::vector<bool> steiner_;
  const std::function<bool(const std::vector<int>&)>& emit_;
  std::vector<std::size_t> chosen_;
};

void require_outside(const TerminalSet& s, VertexId v, const char* role) {
  if (s.contains(v)) {
    throw std::invalid_argument(std::string(role) + " " + to_string(v) +
                                " is a terminal");
  }
}

}  // namespace

TerminalSet::TerminalSet(const MultipartiteGraph& graph,
                         std::vector<VertexId> vertices)
    : vertices_(std::move(vertices)) {
  std::sort(vertices_.begin(), vertices_.end());
  if (std::adjacent_find(vertices_.begin(), vertices_.end()) !=
      vertices_.end()) {
    throw std::invalid_argument("terminal set has a repeated vertex");
  }
  if (vertices_.size() < 2) {
    throw std::invalid_argument("terminal set needs at least 2 vertices");
  }
  flat_.reserve(vertices_.size());
  for (VertexId v : vertices_) flat_.push_back(graph.flat_index(v));
}

bool TerminalSet::contains_flat(int flat) const {
  return std::binary_search(flat_.begin(), flat_.end(), flat);
}

bool TerminalSet::contains(VertexId v) const {
  return std::binary_search(vertices_.begin(), vertices_.end(), v);
}

int TerminalSet::count_in_class(int cls) const {
  return static_cast<int>(std::count_if(vertices_.begin(), vertices_.end(),
                                        [cls](VertexId v) { return v.cls == cls; }));
}

std::string to_string(const TerminalSet& s) {
  std::string out = "{";
  for (std::size_t i = 0; i < s.vertices().size(); ++i) {
    if (i > 0) out += ", ";
    out += to_string(s.vertices()[i]);
  }
  return out + "}";
}

std::optional<std::string> stree_defect(const MultipartiteGraph& graph,
                                        const STree& tree) {
  const auto& edges = tree.edges;
  if (edges.empty()) return "tree has no edges";
  for (std::size_t i = 0; i < edges.size(); ++i) {
    if (edges[i] < 0 || edges[i] >= graph.edge_count()) {
      return "edge index " + std::to_string(edges[i]) + " is not in the graph";
    }
    if (i > 0 && edges[i] <= edges[i - 1]) {
      return "edge indices are not strictly ascending";
    }
  }
  for (int t : tree.terminals.flat()) {
    if (t >= graph.vertex_count()) return "terminal outside the graph";
  }
  std::vector<int> verts = tree_vertices(graph, tree);
  if (verts.size() != edges.size() + 1) {
    return "edge set is not a tree (" + std::to_string(edges.size()) +
           " edges on " + std::to_string(verts.size()) + " vertices)";
  }
  auto local = [&](int flat) {
    return static_cast<int>(std::lower_bound(verts.begin(), verts.end(), flat) -
                            verts.begin());
  };
  Components comps(static_cast<int>(verts.size()));
  std::vector<int> degree(verts.size(), 0);
  for (int e : edges) {
    auto [a, b] = graph.endpoints(e);
    const int la = local(a);
    const int lb = local(b);
    ++degree[la];
    ++degree[lb];
    if (!comps.unite(la, lb)) return "edge set contains a cycle";
  }
  for (int t : tree.terminals.flat()) {
    if (!std::binary_search(verts.begin(), verts.end(), t)) {
      return "terminal " + to_string(graph.vertex(t)) + " is not on the tree";
    }
  }
  for (std::size_t i = 0; i < verts.size(); ++i) {
    if (degree[i] == 1 && !tree.terminals.contains_flat(verts[i])) {
      return "leaf " + to_string(graph.vertex(verts[i])) + " is not a terminal";
    }
  }
  return std::nullopt;
}

std::vector<int> tree_vertices(const MultipartiteGraph& graph,
                               const STree& tree) {
  std::vector<int> verts;
  verts.reserve(2 * tree.edges.size());
  for (int e : tree.edges) {
    auto [a, b] = graph.endpoints(e);
    verts.push_back(a);
    verts.push_back(b);
  }
  std::sort(verts.begin(), verts.end());
  verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
  return verts;
}

std::vector<int> steiner_vertices(const MultipartiteGraph& graph,
                                  const STree& tree) {
  std::vector<int> verts = tree_vertices(graph, tree);
  std::erase_if(verts, [&](int v) { return tree.terminals.contains_flat(v); });
  return verts;
}

bool is_rainbow(const STree& tree, const Coloring& coloring) {
  std::vector<int> colors;
  colors.reserve(tree.edges.size());
  for (int e : tree.edges) colors.push_back(coloring[e]);
  std::sort(colors.begin(), colors.end());
  return std::adjacent_find(colors.begin(), colors.end()) == colors.end();
}

bool tree_order_less(const STree& x, const STree& y) {
  if (x.edges.size() != y.edges.size()) {
    return x.edges.size() < y.edges.size();
  }
  return x.edges < y.edges;
}

STree star_tree(const MultipartiteGraph& graph, VertexId center,
                const TerminalSet& s) {
  require_outside(s, center, "center");
  if (s.count_in_class(center.cls) > 0) {
    throw std::invalid_argument("center " + to_string(center) +
                                " shares its class with a terminal");
  }
  STree tree{s, {}};
  for (VertexId t : s.vertices()) {
    tree.edges.push_back(graph.edge_index(center, t));
  }
  std::sort(tree.edges.begin(), tree.edges.end());
  return tree;
}

STree double_star_tree(const MultipartiteGraph& graph, VertexId u, VertexId v,
                       const TerminalSet& s) {
  require_outside(s, u, "pair vertex");
  require_outside(s, v, "pair vertex");
  if (u.cls == v.cls) {
    throw std::invalid_argument("pair " + to_string(u) + ", " + to_string(v) +
                                " is not adjacent");
  }
  const int in_v_class = s.count_in_class(v.cls);
  if (in_v_class == 0 || in_v_class == s.size()) {
    throw std::invalid_argument(
        "double star needs terminals both inside and outside class " +
        std::to_string(v.cls));
  }
  STree tree{s, {graph.edge_index(u, v)}};
  for (VertexId t : s.vertices()) {
    tree.edges.push_back(t.cls == v.cls ? graph.edge_index(u, t)
                                        : graph.edge_index(v, t));
  }
  std::sort(tree.edges.begin(), tree.edges.end());
  return tree;
}

std::vector<STree> star_family(const MultipartiteGraph& graph,
                               const TerminalSet& s, int center_class) {
  std::vector<STree> family;
  for (int o = 0; o < graph.class_size(center_class); ++o) {
    family.push_back(star_tree(graph, {center_class, o}, s));
  }
  return family;
}

std::vector<STree> double_star_family(const MultipartiteGraph& graph,
                                      const TerminalSet& s, int u_class,
                                      int v_class) {
  auto unused = [&](int cls) {
    std::vector<VertexId> out;
    for (int o = 0; o < graph.class_size(cls); ++o) {
      if (!s.contains({cls, o})) out.push_back({cls, o});
    }
    return out;
  };
  const std::vector<VertexId> us = unused(u_class);
  const std::vector<VertexId> vs = unused(v_class);
  std::vector<STree> family;
  for (std::size_t i = 0; i < std::min(us.size(), vs.size()); ++i) {
    family.push_back(double_star_tree(graph, us[i], vs[i], s));
  }
  return family;
}

void for_each_steiner_tree(const MultipartiteGraph& graph, const TerminalSet& s,
                           int max_edges,
                           const std::function<bool(const STree&)>& visit) {
  const int k = s.size();
  if (max_edges < k - 1) return;
  std::vector<int> others;
  for (int f = 0; f < graph.vertex_count(); ++f) {
    if (!s.contains_flat(f)) others.push_back(f);
  }
  const int max_steiner =
      std::min(static_cast<int>(others.size()), max_edges + 1 - k);

  bool stopped = false;
  const std::function<bool(const std::vector<int>&)> emit =
      [&](const std::vector<int>& edges) {
        if (!visit(STree{s, edges})) stopped = true;
        return !stopped;
      };

  std::vector<int> pick;
  for (int size = 0; size <= max_steiner && !stopped; ++size) {
    pick.resize(size);
    std::iota(pick.begin(), pick.end(), 0);
    while (!stopped) {
      std::vector<int> verts = s.flat();
      for (int p : pick) verts.push_back(others[p]);
      std::sort(verts.begin(), verts.end());
      const int n = static_cast<int>(verts.size());

      std::vector<LocalEdge> local;
      for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
          const int e = graph.edge_between(verts[i], verts[j]);
          if (e >= 0) local.push_back({e, i, j});
        }
      }
      std::sort(local.begin(), local.end(),
                [](const LocalEdge& x, const LocalEdge& y) {
                  return x.index < y.index;
                });
      std::vector<bool> steiner(n);
      for (int i = 0; i < n; ++i) steiner[i] = !s.contains_flat(verts[i]);

      SpanningTreeWalker walker(std::move(local), n, std::move(steiner), emit);
      if (!walker.run()) break;

      // Next combination of `size` indices out of others.size().
      int i = size - 1;
      const int m = static_cast<int>(others.size());
      while (i >= 0 && pick[i] == m - size + i) --i;
      if (i < 0) break;
      ++pick[i];
      for (int j = i + 1; j < size; ++j) pick[j] = pick[j - 1] + 1;
    }
  }
}

std::vector<STree> enumerate_steiner_trees(const MultipartiteGraph& graph,
                                           const TerminalSet& s,
                                           int max_edges) {
  std::vector<STree> trees;
  for_each_steiner_tree(graph, s, max_edges, [&](const STree& t) {
    trees.push_back(t);
    return true;
  });
  std::sort(trees.begin(), trees.end(), tree_order_less);
  return trees;
}

}  // namespace rainbow
