/*
 * Copyright 2026 The Schwarzmap Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "schwarzmap/puiseux.hpp"
#include "schwarzmap/rational.hpp"

namespace schwarzmap {

struct BadLowerParameter : std::runtime_error {
  explicit BadLowerParameter(const std::string& what) : std::runtime_error(what) {}
};

struct DivisionMidSum : std::runtime_error {
  explicit DivisionMidSum(const std::string& what) : std::runtime_error(what) {}
};

struct NonTerminating : std::runtime_error {
  explicit NonTerminating(const std::string& what) : std::runtime_error(what) {}
};

struct DegenerateKummerPair : std::runtime_error {
  explicit DegenerateKummerPair(const std::string& what) : std::runtime_error(what) {}
};

// Parameters of the Gauss series F(a,b,c;x). The lower parameter c must not
// be zero or a negative integer.
struct HGParams {
  Rational a;
  Rational b;
  Rational c;

  void validate() const {
    if (is_nonpositive_integer(c)) {
      throw BadLowerParameter("F(a,b,c;x): lower parameter c = " + to_string(c) +
                              " is a nonpositive integer");
    }
  }
};

// F(a,b,c;x) = sum (a,n)(b,n)/((c,n)(1,n)) x^n through x^x_order, base 1.
inline PuiseuxSeries gauss_series(const HGParams& p, Order x_order) {
  p.validate();
  std::vector<Rational> cs;
  cs.reserve(static_cast<std::size_t>(x_order) + 1);
  Rational term(1);
  cs.push_back(term);
  for (Order n = 0; n < x_order; ++n) {
    const Rational k(static_cast<long>(n));
    term *= (p.a + k) * (p.b + k);
    term /= (p.c + k) * (k + 1);
    cs.push_back(term);
  }
  return PuiseuxSeries::from_parts(1, 0, std::move(cs), x_order);
}

struct KummerPair {
  PuiseuxSeries u;
  PuiseuxSeries v;
};

// Local solution pair at the origin:
//   u = F(a,b,c;x),  v = x^(1-c) F(a-c+1, b-c+1, 2-c; x).
// Both are returned on the base carrying x^(1-c). An integer 1-c collapses
// the pair (the second solution picks up a logarithm), which is out of
// bounds here.
inline KummerPair kummer_pair(const HGParams& p, Order x_order) {
  const Rational mu0 = 1 - p.c;
  if (is_integer(mu0)) {
    throw DegenerateKummerPair("kummer_pair: 1-c = " + to_string(mu0) +
                               " is an integer; the pair is degenerate");
  }
  const long base = static_cast<long>(mu0.get_den().get_si());
  HGParams second{p.a - p.c + 1, p.b - p.c + 1, 2 - p.c};
  second.validate();
  PuiseuxSeries u = gauss_series(p, x_order).rebased(base);
  const long long lead = to_long(mu0 * base);
  PuiseuxSeries v =
      PuiseuxSeries::monomial(Rational(1), lead, base) * gauss_series(second, x_order).rebased(base);
  return {std::move(u), std::move(v)};
}

// Terminating generalized hypergeometric sum at unity. At least one upper
// parameter must be a nonpositive integer; the sum runs to the smallest
// such termination index, and a lower parameter reaching a nonpositive
// integer strictly before that index is a mid-sum division by zero.
struct TerminatingPFQ {
  std::vector<Rational> upper;
  std::vector<Rational> lower;
};

inline Rational pfq_at_one(const TerminatingPFQ& f) {
  long stop = -1;
  for (const auto& a : f.upper) {
    if (is_integer(a) && sgn(a) <= 0) {
      const long n = -to_long(a);
      if (stop < 0 || n < stop) stop = n;
    }
  }
  if (stop < 0) {
    throw NonTerminating("pfq_at_one: no nonpositive-integer upper parameter");
  }
  for (const auto& b : f.lower) {
    if (is_integer(b) && sgn(b) <= 0 && -to_long(b) < stop) {
      throw DivisionMidSum("pfq_at_one: lower parameter " + to_string(b) +
                           " vanishes before termination index " + std::to_string(stop));
    }
  }
  Rational sum(0);
  Rational term(1);
  for (long k = 0; k <= stop; ++k) {
    sum += term;
    if (k == stop) break;
    const Rational kk(k);
    for (const auto& a : f.upper) term *= (a + kk);
    for (const auto& b : f.lower) term /= (b + kk);
    term /= (kk + 1);
  }
  return sum;
}

}  // namespace schwarzmap
