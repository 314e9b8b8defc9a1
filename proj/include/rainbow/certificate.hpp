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

#ifndef RAINBOW_CERTIFICATE_HPP_
#define RAINBOW_CERTIFICATE_HPP_

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include "rainbow/graph.hpp"
#include "rainbow/packing.hpp"

namespace rainbow {

// Line-oriented certificate:
//
//   classes <n_1> ... <n_r>
//   colors <t>
//   edges <c_0> ... <c_{|E|-1}>        colors in canonical edge order
//   S <k> <class:offset> ...           optional, repeatable
//   tree <m> <edge_index> ...          ascending indices, after an S line
//
// Tokens are separated by single spaces, one record per line.
struct Certificate {
  MultipartiteGraph graph;
  Coloring coloring;
  std::vector<Packing> packings;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(int line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what),
        line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

Certificate parse_certificate(std::istream& in);
Certificate read_certificate(const std::string& path);

void write_certificate(std::ostream& out, const Certificate& cert);
std::string certificate_text(const Certificate& cert);
void save_certificate(const std::string& path, const Certificate& cert);

}  // namespace rainbow

#endif  // RAINBOW_CERTIFICATE_HPP_
