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

#include <gtest/gtest.h>

#include <sstream>

namespace rainbow {
namespace {

Certificate parse(const std::string& text) {
  std::istringstream in(text);
  return parse_certificate(in);
}

TEST(Certificate, ParsesColoringAndPackings) {
  const Certificate c = parse(
      "classes 3 3\n"
      "colors 3\n"
      "edges 1 2 3 2 3 1 3 1 2\n"
      "S 3 0:0 0:1 0:2\n"
      "tree 3 0 3 6\n"
      "tree 3 1 4 7\n");
  EXPECT_EQ(c.graph, MultipartiteGraph({3, 3}));
  EXPECT_EQ(c.coloring, latin_coloring(c.graph, 3));
  ASSERT_EQ(c.packings.size(), 1u);
  EXPECT_EQ(c.packings[0].trees.size(), 2u);
  EXPECT_EQ(c.packings[0].trees[1].edges, (std::vector<int>{1, 4, 7}));
}

TEST(Certificate, TextRoundTrip) {
  const std::string text =
      "classes 1 1 1\n"
      "colors 2\n"
      "edges 1 2 2\n"
      "S 2 0:0 1:0\n"
      "tree 1 0\n"
      "tree 2 1 2\n"
      "S 3 0:0 1:0 2:0\n";
  EXPECT_EQ(certificate_text(parse(text)), text);
}

TEST(Certificate, StrictParsing) {
  const std::vector<std::pair<std::string, int>> bad = {
      {"", 1},
      {"classes 3\n", 1},
      {"classes 2 2\ncolours 2\n", 2},
      {"classes 2 2\ncolors 2\nedges 1 2 1\n", 3},
      {"classes 2 2\ncolors 2\nedges 1 2 1 3\n", 3},
      {"classes 2 2\ncolors 2\nedges 1 2 1 0\n", 3},
      {"classes 2 2\ncolors 2\nedges 1 2 1 2 1\n", 3},
      {"classes 2 2\ncolors 2\nedges 1  2 1 2\n", 3},
      {"classes 2 2\ncolors 2\nedges 1 2 1 2\ntree 1 0\n", 4},
      {"classes 2 2\ncolors 2\nedges 1 2 1 2\nS 2 0:0 1:0\ntree 2 1 0\n", 5},
      {"classes 2 2\ncolors 2\nedges 1 2 1 2\nS 2 0:0 1:0\ntree 1 4\n", 5},
      {"classes 2 2\ncolors 2\nedges 1 2 1 2\nS 3 0:0 1:0\n", 4},
      {"classes 2 2\ncolors 2\nedges 1 2 1 2\nS 2 0:0 0:0\n", 4},
      {"classes 2 2\ncolors 2\nedges 1 2 1 2\nnote hello\n", 4},
      {"classes 2 x\n", 1},
  };
  for (const auto& [text, line] : bad) {
    try {
      parse(text);
      ADD_FAILURE() << "accepted: " << text;
    } catch (const ParseError& e) {
      EXPECT_EQ(e.line(), line) << text << " -> " << e.what();
    }
  }
}

TEST(Certificate, MissingFileIsAnError) {
  EXPECT_THROW(read_certificate("/nonexistent/cert.txt"), std::runtime_error);
}

}  // namespace
}  // namespace rainbow
