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

#include "rainbow/bounds.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace rainbow {
namespace {

Rational power(const Rational& base, unsigned long e) {
  mpz_class num;
  mpz_class den;
  mpz_pow_ui(num.get_mpz_t(), base.get_num_mpz_t(), e);
  mpz_pow_ui(den.get_mpz_t(), base.get_den_mpz_t(), e);
  Rational r(num, den);
  r.canonicalize();
  return r;
}

Rational integer(long v) { return Rational(mpz_class(v)); }

const Rational kSevenNinths(7, 9);
const Rational kFiveNinths(5, 9);

void require_exponent(long n, int k, int l) {
  if (k < 3) throw std::invalid_argument("k must be at least 3");
  if (l < 1) throw std::invalid_argument("l must be at least 1");
  if (n <= static_cast<long>(k) + l - 1) {
    throw std::invalid_argument("need n > k + l - 1 for a positive exponent");
  }
}

BoundReport make_report(std::string tag, long n, int k, int l, BoundKind kind,
                        std::string scope) {
  BoundReport r;
  r.case_tag = std::move(tag);
  r.n = n;
  r.k = k;
  r.l = l;
  r.kind = kind;
  r.scope = std::move(scope);
  return r;
}

void fill(BoundReport& r, const Rational& exact) {
  r.exact = exact;
  r.value = exact.get_d();
}

const double kLog79 = std::log(7.0 / 9.0);

}  // namespace

std::string_view to_string(BoundKind kind) {
  switch (kind) {
    case BoundKind::kProbability:
      return "probability";
    case BoundKind::kUpperBound:
      return "upper-bound";
    case BoundKind::kLowerBound:
      return "lower-bound";
  }
  return "?";
}

Rational star_rainbow_prob(int k, int t) {
  if (k < 1 || t < 1) throw std::invalid_argument("need k >= 1 and t >= 1");
  if (k > t) return Rational(0);
  mpz_class falling = 1;
  for (int i = 0; i < k; ++i) falling *= t - i;
  mpz_class total;
  mpz_ui_pow_ui(total.get_mpz_t(), t, k);
  Rational r(falling, total);
  r.canonicalize();
  return r;
}

Rational double_star_rainbow_prob(int k) {
  if (k < 2) throw std::invalid_argument("k must be at least 2");
  return star_rainbow_prob(k + 1, k + 1);
}

Rational union_bound_failure(long n, int k, int l) {
  require_exponent(n, k, l);
  const Rational miss = 1 - double_star_rainbow_prob(k);
  mpz_class front;
  mpz_ui_pow_ui(front.get_mpz_t(), n, k + l - 1);
  front <<= k;
  return Rational(front) * power(miss, n - k - l + 1);
}

double union_bound_failure_log(long n, int k, int l) {
  require_exponent(n, k, l);
  const double p = double_star_rainbow_prob(k).get_d();
  return k * std::numbers::ln2 + (k + l - 1) * std::log(static_cast<double>(n)) +
         static_cast<double>(n - k - l + 1) * std::log1p(-p);
}

BoundReport union_bound_success(long n, int k, int l) {
  BoundReport r = make_report("union-success", n, k, l, BoundKind::kLowerBound,
                              "union: all k-sets of K_{n,n}, k+1 colors");
  if (n <= kExactLimit) {
    fill(r, 1 - union_bound_failure(n, k, l));
  } else {
    r.value = -std::expm1(union_bound_failure_log(n, k, l));
  }
  return r;
}

long union_bound_threshold(int k, int l) {
  if (k < 3 || l < 1) throw std::invalid_argument("need k >= 3 and l >= 1");
  long n = static_cast<long>(k) + l;
  while (union_bound_failure_log(n, k, l) >= 0.0) ++n;
  // The log of the failure term is concave in n and the term exceeds 1 at
  // n = k + l, so the positive region is a suffix; settle its start exactly.
  auto positive = [&](long m) { return union_bound_failure(m, k, l) < 1; };
  while (!positive(n)) ++n;
  while (n - 1 > static_cast<long>(k) + l - 1 && positive(n - 1)) --n;
  return n;
}

BipartiteCase parse_bipartite_case(std::string_view tag) {
  if (tag == "one-class") return BipartiteCase::kOneClass;
  if (tag == "two-class-same") return BipartiteCase::kTwoClassSame;
  if (tag == "two-class-distinct") return BipartiteCase::kTwoClassDistinct;
  if (tag == "two-class") return BipartiteCase::kTwoClass;
  if (tag == "two-class-envelope") return BipartiteCase::kTwoClassEnvelope;
  throw std::invalid_argument("unknown bipartite case '" + std::string(tag) +
                              "'");
}

std::string_view to_string(BipartiteCase c) {
  switch (c) {
    case BipartiteCase::kOneClass:
      return "one-class";
    case BipartiteCase::kTwoClassSame:
      return "two-class-same";
    case BipartiteCase::kTwoClassDistinct:
      return "two-class-distinct";
    case BipartiteCase::kTwoClass:
      return "two-class";
    case BipartiteCase::kTwoClassEnvelope:
      return "two-class-envelope";
  }
  return "?";
}

BoundReport bipartite_two_tree_failure(long n, BipartiteCase c) {
  if (n < 2) throw std::invalid_argument("n must be at least 2");
  BoundReport r = make_report("bip-" + std::string(to_string(c)), n, 3, 2,
                              BoundKind::kProbability, "family");
  const double dn = static_cast<double>(n);
  // (2n+5)/9 (7/9)^{n-2} and 2 (7/9)^{n-1} - (5/9)^{n-1}, in both schemes.
  auto same_exact = [&]() -> Rational {
    return integer(2 * n + 5) / 9 * power(kSevenNinths, n - 2);
  };
  auto distinct_exact = [&]() -> Rational {
    return 2 * power(kSevenNinths, n - 1) - power(kFiveNinths, n - 1);
  };
  auto same_log = [&] { return std::log((2 * dn + 5) / 9) + (dn - 2) * kLog79; };
  auto distinct_log = [&] {
    return (dn - 1) * kLog79 +
           std::log(2.0 - std::exp((dn - 1) * std::log(5.0 / 7.0)));
  };
  const bool exact = n <= kExactLimit;

  switch (c) {
    case BipartiteCase::kOneClass:
      // n (2/9) (7/9)^{n-1} + (7/9)^n
      if (exact) {
        fill(r, integer(n) * Rational(2, 9) * power(kSevenNinths, n - 1) +
                    power(kSevenNinths, n));
      } else {
        r.value = std::exp((dn - 1) * kLog79 + std::log(dn * 2 / 9 + 7.0 / 9));
      }
      break;
    case BipartiteCase::kTwoClassSame:
      if (exact) {
        fill(r, same_exact());
      } else {
        r.value = std::exp(same_log());
      }
      break;
    case BipartiteCase::kTwoClassDistinct:
      if (exact) {
        fill(r, distinct_exact());
      } else {
        r.value = std::exp(distinct_log());
      }
      break;
    case BipartiteCase::kTwoClass:
      if (exact) {
        fill(r, Rational(1, 3) * same_exact() + Rational(2, 3) * distinct_exact());
      } else {
        r.value = std::exp(same_log()) / 3 + 2 * std::exp(distinct_log()) / 3;
      }
      break;
    case BipartiteCase::kTwoClassEnvelope:
      r.kind = BoundKind::kUpperBound;
      r.scope = "envelope";
      if (exact) {
        fill(r, integer(2 * n) * power(kSevenNinths, n - 2));
      } else {
        r.value = std::exp(std::log(2 * dn) + (dn - 2) * kLog79);
      }
      break;
  }
  return r;
}

TripartiteCase parse_tripartite_case(std::string_view tag) {
  if (tag == "one-class") return TripartiteCase::kOneClass;
  if (tag == "two-class") return TripartiteCase::kTwoClass;
  if (tag == "spread-distinct") return TripartiteCase::kSpreadDistinct;
  if (tag == "spread-two") return TripartiteCase::kSpreadTwo;
  if (tag == "spread-mono") return TripartiteCase::kSpreadMono;
  if (tag == "spread") return TripartiteCase::kSpread;
  throw std::invalid_argument("unknown tripartite case '" + std::string(tag) +
                              "'");
}

std::string_view to_string(TripartiteCase c) {
  switch (c) {
    case TripartiteCase::kOneClass:
      return "one-class";
    case TripartiteCase::kTwoClass:
      return "two-class";
    case TripartiteCase::kSpreadDistinct:
      return "spread-distinct";
    case TripartiteCase::kSpreadTwo:
      return "spread-two";
    case TripartiteCase::kSpreadMono:
      return "spread-mono";
    case TripartiteCase::kSpread:
      return "spread";
  }
  return "?";
}

BoundReport tripartite_three_tree_failure(long n, TripartiteCase c) {
  if (n < 2) throw std::invalid_argument("n must be at least 2");
  BoundReport r = make_report("tri-" + std::string(to_string(c)), n, 3, 3,
                              BoundKind::kUpperBound, "family");
  const double dn = static_cast<double>(n);
  // Every case but kTwoClass is coefficient * (7/9)^{2n-2}.
  Rational coefficient;
  double coefficient_d = 0;
  const TrianglePatternWeights w = triangle_pattern_weights(3);
  switch (c) {
    case TripartiteCase::kOneClass:
      coefficient = integer(4 * n * n);
      break;
    case TripartiteCase::kTwoClass:
      if (n <= kExactLimit) {
        fill(r, integer(n * n) * power(kSevenNinths, n - 2));
      } else {
        r.value = std::exp(2 * std::log(dn) + (dn - 2) * kLog79);
      }
      return r;
    case TripartiteCase::kSpreadDistinct:
      coefficient = 3;
      break;
    case TripartiteCase::kSpreadTwo:
      coefficient = integer(2 * n + 1);
      break;
    case TripartiteCase::kSpreadMono:
      coefficient = integer(3 * (3 * n * n + 1));
      break;
    case TripartiteCase::kSpread:
      coefficient = w.distinct * 3 + w.two * integer(2 * n + 1) +
                    w.mono * integer(3 * (3 * n * n + 1));
      break;
  }
  coefficient_d = coefficient.get_d();
  if (n <= kExactLimit) {
    fill(r, coefficient * power(kSevenNinths, 2 * n - 2));
  } else {
    r.value = std::exp(std::log(coefficient_d) + (2 * dn - 2) * kLog79);
  }
  return r;
}

TrianglePatternWeights triangle_pattern_weights(int t) {
  if (t < 1) throw std::invalid_argument("t must be at least 1");
  const Rational cube = Rational(mpz_class(t) * t * t);
  TrianglePatternWeights w;
  w.distinct = Rational(mpz_class(t) * (t - 1) * (t - 2)) / cube;
  w.mono = Rational(mpz_class(t)) / cube;
  w.two = 1 - w.distinct - w.mono;
  return w;
}

RamseyEstimates bipartite_ramsey_estimates(int k, int t) {
  if (k < 2 || t < 2) throw std::invalid_argument("need k >= 2 and t >= 2");
  RamseyEstimates e;
  e.lower = t / std::numbers::e * std::pow(std::sqrt(static_cast<double>(k)), t + 1);
  e.upper = std::pow(static_cast<double>(k), t + 1) * std::log(t) / std::log(k);
  return e;
}

}  // namespace rainbow
