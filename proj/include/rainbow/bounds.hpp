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

#ifndef RAINBOW_BOUNDS_HPP_
#define RAINBOW_BOUNDS_HPP_

#include <optional>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace rainbow {

using Rational = mpq_class;

// Closed-form probability expressions and bounds for uniformly random
// edge colorings.
//
// Evaluation scheme: exact rationals for n <= kExactLimit, log-space doubles
// beyond. Each report says whether the number is a probability (lies in
// [0, 1]) or a bound that may leave that range, and what event it speaks
// about: "family" expressions count rainbow members of one explicit tree
// family, "union" expressions bound the failure of every terminal set.

inline constexpr long kExactLimit = 200;

enum class BoundKind { kProbability, kUpperBound, kLowerBound };

std::string_view to_string(BoundKind kind);

struct BoundReport {
  std::string case_tag;
  long n = 0;
  int k = 0;
  int l = 0;
  std::optional<Rational> exact;  // present for n <= kExactLimit
  double value = 0.0;
  BoundKind kind = BoundKind::kProbability;
  std::string scope;
};

// Probability that a k-edge star is rainbow when every edge takes one of t
// colors uniformly: t(t-1)...(t-k+1) / t^k, zero for k > t.
Rational star_rainbow_prob(int k, int t);

// Probability that a (k+1)-edge double star is rainbow under k+1 colors:
// (k+1)! / (k+1)^{k+1}.
Rational double_star_rainbow_prob(int k);

// --- (k+1)-coloring of K_{n,n}: union bound over all terminal sets ---------

// 2^k n^{k+l-1} (1 - p)^{n-k-l+1} with p = double_star_rainbow_prob(k); an
// upper bound on the probability that some k-set lacks l internally disjoint
// rainbow trees. Throws std::invalid_argument unless n > k + l - 1, k >= 3,
// l >= 1.
Rational union_bound_failure(long n, int k, int l);
// Natural log of the same quantity, evaluated in doubles.
double union_bound_failure_log(long n, int k, int l);

// 1 - union_bound_failure: a lower bound on the probability that a random
// (k+1)-coloring works for every k-set. Negative (vacuous) for small n.
BoundReport union_bound_success(long n, int k, int l);

// Least n with union_bound_success(n, k, l) > 0. Scans upward in doubles and
// settles the crossing with exact arithmetic.
long union_bound_threshold(int k, int l);

// --- 3-coloring of K_{n,n}, k = 3, two trees ------------------------------

enum class BipartiteCase {
  kOneClass,           // S in one class: star family tail Pr[X <= 1]
  kTwoClassSame,       // {x,y} | z, c(xz) = c(yz): conditional failure
  kTwoClassDistinct,   // {x,y} | z, c(xz) != c(yz): conditional failure
  kTwoClass,           // 1/3 * same + 2/3 * distinct
  kTwoClassEnvelope,   // 2n (7/9)^{n-2}, dominates kTwoClass
};

BipartiteCase parse_bipartite_case(std::string_view tag);
std::string_view to_string(BipartiteCase c);

// Throws std::invalid_argument for n < 2.
BoundReport bipartite_two_tree_failure(long n, BipartiteCase c);

// --- 3-coloring of K_{n,n,n}, k = 3, three trees --------------------------

enum class TripartiteCase {
  kOneClass,        // 4 n^2 (7/9)^{2n-2}
  kTwoClass,        // n^2 (7/9)^{n-2}
  kSpreadDistinct,  // triangle on S rainbow: 3 (7/9)^{2n-2}
  kSpreadTwo,       // triangle on S two-colored: (2n+1) (7/9)^{2n-2}
  kSpreadMono,      // triangle on S monochromatic: 3(3n^2+1) (7/9)^{2n-2}
  kSpread,          // pattern-weighted sum of the three above
};

TripartiteCase parse_tripartite_case(std::string_view tag);
std::string_view to_string(TripartiteCase c);

// Upper bounds on the failure probability. Throws for n < 2.
BoundReport tripartite_three_tree_failure(long n, TripartiteCase c);

// Probabilities that a triangle's three edges are rainbow, use exactly two
// colors, or are monochromatic under t uniform colors. At t = 3 these are
// 2/9, 2/3 and 1/9.
struct TrianglePatternWeights {
  Rational distinct;
  Rational two;
  Rational mono;
};
TrianglePatternWeights triangle_pattern_weights(int t);

// --- bipartite Ramsey numbers b_k(t) --------------------------------------

// Leading-order terms of the known asymptotic bounds on b_k(t) with the
// (1 + o(1)) factors dropped. These are estimates, not certified bounds.
struct RamseyEstimates {
  double lower = 0.0;  // (t / e) * k^{(t+1)/2}
  double upper = 0.0;  // k^{t+1} * log_k t
  bool certified = false;
};
RamseyEstimates bipartite_ramsey_estimates(int k, int t);

}  // namespace rainbow

#endif  // RAINBOW_BOUNDS_HPP_
