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

#include "rainbow/certificate.hpp"

#include <charconv>
#include <fstream>
#include <istream>
#include <optional>
#include <ostream>
#include <sstream>

namespace rainbow {
namespace {

std::vector<std::string> split(const std::string& line) {
  std::vector<std::string> tokens;
  std::size_t pos = 0;
  while (pos <= line.size()) {
    const std::size_t next = line.find(' ', pos);
    const std::size_t end = next == std::string::npos ? line.size() : next;
    tokens.push_back(line.substr(pos, end - pos));
    if (next == std::string::npos) break;
    pos = next + 1;
  }
  return tokens;
}

class LineReader {
 public:
  explicit LineReader(std::istream& in) : in_(in) {}

  std::optional<std::vector<std::string>> next() {
    std::string line;
    if (!std::getline(in_, line)) return std::nullopt;
    ++number_;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    auto tokens = split(line);
    for (const auto& t : tokens) {
      if (t.empty()) fail("empty token (stray or doubled space)");
    }
    return tokens;
  }

  std::vector<std::string> expect(const std::string& keyword) {
    auto tokens = next();
    if (!tokens) throw ParseError(number_ + 1, "missing '" + keyword + "' line");
    if ((*tokens)[0] != keyword) {
      fail("expected '" + keyword + "', found '" + (*tokens)[0] + "'");
    }
    return *tokens;
  }

  int integer(const std::string& token) const {
    int value = 0;
    auto [p, ec] =
        std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc() || p != token.data() + token.size()) {
      fail("'" + token + "' is not an integer");
    }
    return value;
  }

  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError(number_, what);
  }

 private:
  std::istream& in_;
  int number_ = 0;
};

}  // namespace

Certificate parse_certificate(std::istream& in) {
  LineReader reader(in);

  auto classes = reader.expect("classes");
  std::vector<int> sizes;
  for (std::size_t i = 1; i < classes.size(); ++i) {
    sizes.push_back(reader.integer(classes[i]));
  }
  std::optional<MultipartiteGraph> graph;
  try {
    graph.emplace(sizes);
  } catch (const std::invalid_argument& e) {
    reader.fail(e.what());
  }

  auto colors = reader.expect("colors");
  if (colors.size() != 2) reader.fail("'colors' takes exactly one value");
  const int t = reader.integer(colors[1]);

  auto edges = reader.expect("edges");
  if (static_cast<int>(edges.size()) != graph->edge_count() + 1) {
    reader.fail("expected " + std::to_string(graph->edge_count()) +
                " edge colors, found " + std::to_string(edges.size() - 1));
  }
  std::vector<int> assignment;
  assignment.reserve(graph->edge_count());
  for (std::size_t i = 1; i < edges.size(); ++i) {
    assignment.push_back(reader.integer(edges[i]));
  }
  std::optional<Coloring> coloring;
  try {
    coloring.emplace(*graph, t, std::move(assignment));
  } catch (const std::invalid_argument& e) {
    reader.fail(e.what());
  }

  Certificate cert{*graph, *coloring, {}};
  while (auto tokens = reader.next()) {
    const std::string& kind = (*tokens)[0];
    if (kind == "S") {
      if (tokens->size() < 2) reader.fail("'S' needs a size");
      const int k = reader.integer((*tokens)[1]);
      if (k < 0 || static_cast<int>(tokens->size()) != k + 2) {
        reader.fail("'S' announces " + (*tokens)[1] + " vertices, lists " +
                    std::to_string(tokens->size() - 2));
      }
      std::vector<VertexId> verts;
      try {
        for (int i = 0; i < k; ++i) verts.push_back(parse_vertex((*tokens)[i + 2]));
        cert.packings.push_back(Packing{TerminalSet(*graph, verts), {}});
      } catch (const std::exception& e) {
        reader.fail(e.what());
      }
    } else if (kind == "tree") {
      if (cert.packings.empty()) reader.fail("'tree' before any 'S' line");
      if (tokens->size() < 2) reader.fail("'tree' needs a size");
      const int m = reader.integer((*tokens)[1]);
      if (m < 1 || static_cast<int>(tokens->size()) != m + 2) {
        reader.fail("'tree' announces " + (*tokens)[1] + " edges, lists " +
                    std::to_string(tokens->size() - 2));
      }
      Packing& packing = cert.packings.back();
      STree tree{packing.terminals, {}};
      for (int i = 0; i < m; ++i) {
        const int e = reader.integer((*tokens)[i + 2]);
        if (e < 0 || e >= graph->edge_count()) {
          reader.fail("edge index " + std::to_string(e) + " out of range");
        }
        if (!tree.edges.empty() && e <= tree.edges.back()) {
          reader.fail("tree edge indices must be strictly ascending");
        }
        tree.edges.push_back(e);
      }
      packing.trees.push_back(std::move(tree));
    } else {
      reader.fail("unknown record '" + kind + "'");
    }
  }
  return cert;
}

Certificate read_certificate(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  return parse_certificate(in);
}

void write_certificate(std::ostream& out, const Certificate& cert) {
  out << "classes";
  for (int n : cert.graph.class_sizes()) out << ' ' << n;
  out << "\ncolors " << cert.coloring.colors() << "\nedges";
  for (int c : cert.coloring.assignment()) out << ' ' << c;
  out << '\n';
  for (const Packing& p : cert.packings) {
    out << "S " << p.terminals.size();
    for (VertexId v : p.terminals.vertices()) out << ' ' << to_string(v);
    out << '\n';
    for (const STree& t : p.trees) {
      out << "tree " << t.edges.size();
      for (int e : t.edges) out << ' ' << e;
      out << '\n';
    }
  }
}

std::string certificate_text(const Certificate& cert) {
  std::ostringstream out;
  write_certificate(out, cert);
  return out.str();
}

void save_certificate(const std::string& path, const Certificate& cert) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write '" + path + "'");
  write_certificate(out, cert);
  if (!out) throw std::runtime_error("error writing '" + path + "'");
}

}  // namespace rainbow
