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

#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "schwarzmap/hypergeometric.hpp"
#include "schwarzmap/puiseux.hpp"
#include "schwarzmap/rational.hpp"

namespace schwarzmap {

struct InternalInconsistency : std::logic_error {
  explicit InternalInconsistency(const std::string& what) : std::logic_error(what) {}
};

struct DegreeMismatch : std::runtime_error {
  explicit DegreeMismatch(const std::string& what) : std::runtime_error(what) {}
};

// Parameters of the two-factor product
//   f_{s,t}(x) = F(a/2-s, (a+1)/2-t, a+1; x) F(-a/2-s, (1-a)/2-t, 1-a; x)
// with a = alpha. alpha must not be an integer; s and t are half-integers
// with integer sum, and s+t+1 is a natural number.
struct ProductParams {
  Rational alpha;
  Rational s;
  Rational t;

  void validate() const {
    if (is_integer(alpha)) {
      throw std::invalid_argument("alpha = " + to_string(alpha) + " must not be an integer");
    }
    if (!is_integer(2 * s) || !is_integer(2 * t)) {
      throw std::invalid_argument("s and t must be half-integers");
    }
    if (!is_integer(s + t)) {
      throw std::invalid_argument("s + t must be an integer");
    }
    if (!is_natural(s + t + 1)) {
      throw std::invalid_argument("s + t + 1 must be a natural number");
    }
  }

  HGParams first_factor() const { return {alpha / 2 - s, (alpha + 1) / 2 - t, alpha + 1}; }
  HGParams second_factor() const {
    return {-alpha / 2 - s, (1 - alpha) / 2 - t, 1 - alpha};
  }
};

// Product of two Gauss series with the n-th coefficient evaluated as a
// terminating 4F3 at unity:
//   F(a,b,c;x) F(d,e,f;x)
//     = sum_n 4F3(a, b, 1-n-f, -n; c, 1-n-d, 1-n-e; 1) (d,n)(e,n)/((f,n)(1,n)) x^n.
inline PuiseuxSeries product_series_coeffwise(const Rational& a, const Rational& b,
                                              const Rational& c, const Rational& d,
                                              const Rational& e, const Rational& f,
                                              Order x_order) {
  HGParams{a, b, c}.validate();
  HGParams{d, e, f}.validate();
  std::vector<Rational> cs;
  cs.reserve(static_cast<std::size_t>(x_order) + 1);
  Rational outer(1);  // (d,n)(e,n) / ((f,n)(1,n))
  for (Order n = 0; n <= x_order; ++n) {
    const Rational nn(static_cast<long>(n));
    TerminatingPFQ pfq{{a, b, 1 - nn - f, -nn}, {c, 1 - nn - d, 1 - nn - e}};
    cs.push_back(pfq_at_one(pfq) * outer);
    outer *= (d + nn) * (e + nn);
    outer /= (f + nn) * (nn + 1);
  }
  return PuiseuxSeries::from_parts(1, 0, std::move(cs), x_order);
}

// Coefficients d_0..d_order of f_{s,t}, computed both as a plain Cauchy
// product and through the terminating-4F3 coefficient formula; disagreement
// between the two routes is an implementation fault, not data.
inline std::vector<Rational> f_st(const ProductParams& p, long order) {
  p.validate();
  const HGParams f1 = p.first_factor();
  const HGParams f2 = p.second_factor();
  const PuiseuxSeries direct = gauss_series(f1, order) * gauss_series(f2, order);

  // 4F3 route, the same reduction with (a,b,c) the first factor and
  // (d,e,f) the second.
  const PuiseuxSeries coeffwise =
      product_series_coeffwise(f1.a, f1.b, f1.c, f2.a, f2.b, f2.c, order);

  std::vector<Rational> out;
  out.reserve(static_cast<std::size_t>(order) + 1);
  for (long n = 0; n <= order; ++n) {
    const Rational via_product = direct.coefficient_t(n);
    const Rational via_sum = coeffwise.coefficient_t(n);
    if (via_product != via_sum) {
      throw InternalInconsistency(
          "f_st: Cauchy product and coefficient-sum routes disagree at x^" +
          std::to_string(n) + ": " + to_string(via_product) + " vs " + to_string(via_sum));
    }
    out.push_back(via_product);
  }
  return out;
}

// Expected polynomial degree of f_{s,t}: 2s when s-t+1 is natural, 2t-1
// when t-s is. Exactly one branch applies for admissible parameters.
inline long expected_degree(const ProductParams& p) {
  p.validate();
  if (is_natural(p.s - p.t + 1)) return to_long(2 * p.s);
  if (is_natural(p.t - p.s)) return to_long(2 * p.t) - 1;
  throw std::invalid_argument("neither s-t+1 nor t-s is a natural number");
}

// Computes f_{s,t} out to expected degree + margin, checks the tail is
// exactly zero and the top coefficient is not, and returns the degree.
inline long degree_check(const ProductParams& p, long margin) {
  const long expected = expected_degree(p);
  const long order = expected + margin;
  const std::vector<Rational> d = f_st(p, order);
  long observed = -1;
  for (long n = 0; n <= order; ++n) {
    if (d[static_cast<std::size_t>(n)] != 0) observed = n;
  }
  if (observed != expected) {
    std::ostringstream msg;
    msg << "degree_check(alpha=" << to_string(p.alpha) << ", s=" << to_string(p.s)
        << ", t=" << to_string(p.t) << "): expected degree " << expected << ", observed "
        << observed << "; coefficients:";
    for (long n = 0; n <= order; ++n) {
      msg << " d" << n << "=" << to_string(d[static_cast<std::size_t>(n)]);
    }
    throw DegreeMismatch(msg.str());
  }
  return observed;
}

// Third-order operator annihilating f_{s,t} (symmetric tensor square of the
// two hypergeometric operators), applied to w:
//   x^2(1-x)^2 w''' + (3/2)x(1-x){2+(2s+2t-3)x} w''
//   + {(1-a^2) + (a^2-4st+6s+4t-4)x + (2s^2+2t^2+8st-7s-5t+3)x^2} w'
//   - {a^2 s+a^2 t+2st-s + (4s^2 t+4s t^2-4st-2s^2+s)x} w.
inline PuiseuxSeries ode_residual(const ProductParams& p, const std::vector<Rational>& w) {
  p.validate();
  if (w.size() < 4) throw std::invalid_argument("ode_residual: need order >= 3");
  const Rational a2 = p.alpha * p.alpha;
  const Rational s = p.s, t = p.t;
  const PuiseuxSeries ws =
      PuiseuxSeries::from_parts(1, 0, w, static_cast<Order>(w.size()) - 1);
  const PuiseuxSeries w1 = ws.derivative_x();
  const PuiseuxSeries w2 = w1.derivative_x();
  const PuiseuxSeries w3 = w2.derivative_x();

  const PuiseuxSeries c3 = PuiseuxSeries::from_x_polynomial(
      {Rational(0), Rational(0), Rational(1), Rational(-2), Rational(1)});
  const PuiseuxSeries c2 = PuiseuxSeries::from_x_polynomial(
      {Rational(0), Rational(3), rational(3, 2) * (2 * s + 2 * t - 5),
       rational(-3, 2) * (2 * s + 2 * t - 3)});
  const PuiseuxSeries c1 = PuiseuxSeries::from_x_polynomial(
      {1 - a2, a2 - 4 * s * t + 6 * s + 4 * t - 4,
       2 * s * s + 2 * t * t + 8 * s * t - 7 * s - 5 * t + 3});
  const PuiseuxSeries c0 = PuiseuxSeries::from_x_polynomial(
      {-(a2 * s + a2 * t + 2 * s * t - s),
       -(4 * s * s * t + 4 * s * t * t - 4 * s * t - 2 * s * s + s)});

  return c3 * w3 + c2 * w2 + c1 * w1 + c0 * ws;
}

struct RecurrenceOutcome {
  bool ok = true;
  long first_bad_n = -1;
  std::string what;
};

// Three-term contiguous relation among the coefficients of f_{s,t},
// equivalent to the third-order equation above:
//   2(n+1){a^2-(n+1)^2} d_{n+1}
//   + {4n^3 - 3(2s+2t-1)n^2 - (2a^2-8st+6s+2t-1)n + 2(a^2 s+a^2 t+2st-s)} d_n
//   - (n-2s-1)(n-2t)(2n-2s-2t-1) d_{n-1} = 0,
// plus the n = 2s+1 and n = 2t instances in ratio form,
//   d_{2s+2} = (s-t+1)/(2s+2) d_{2s+1},  d_{2t+1} = (t-s)/(2t+1) d_{2t}.
inline RecurrenceOutcome recurrence_check(const ProductParams& p,
                                          const std::vector<Rational>& d) {
  p.validate();
  const Rational a2 = p.alpha * p.alpha;
  const Rational s = p.s, t = p.t;
  const long order = static_cast<long>(d.size()) - 1;
  auto coeff = [&](long i) {
    return i < 0 ? Rational(0) : d[static_cast<std::size_t>(i)];
  };

  for (long n = 0; n + 1 <= order; ++n) {
    const Rational nn(n);
    const Rational lead = 2 * (nn + 1) * (a2 - (nn + 1) * (nn + 1));
    const Rational mid = 4 * nn * nn * nn - 3 * (2 * s + 2 * t - 1) * nn * nn -
                         (2 * a2 - 8 * s * t + 6 * s + 2 * t - 1) * nn +
                         2 * (a2 * s + a2 * t + 2 * s * t - s);
    const Rational trail = (nn - 2 * s - 1) * (nn - 2 * t) * (2 * nn - 2 * s - 2 * t - 1);
    const Rational residual = lead * coeff(n + 1) + mid * coeff(n) - trail * coeff(n - 1);
    if (residual != 0) {
      return {false, n, "three-term relation fails at n = " + std::to_string(n)};
    }
  }

  if (is_integer(2 * s + 1) && sgn(s) >= 0) {
    const long n2s1 = to_long(2 * s + 1);
    if (n2s1 < order) {
      const Rational lhs = coeff(n2s1 + 1);
      const Rational rhs = (s - t + 1) / (2 * s + 2) * coeff(n2s1);
      if (lhs != rhs) {
        return {false, n2s1, "d_{2s+2} specialization fails"};
      }
    }
  }
  if (is_integer(2 * t) && sgn(t) >= 0) {
    const long n2t = to_long(2 * t);
    if (n2t < order) {
      const Rational lhs = coeff(n2t + 1);
      const Rational rhs = (t - s) / (2 * t + 1) * coeff(n2t);
      if (lhs != rhs) {
        return {false, n2t, "d_{2t+1} specialization fails"};
      }
    }
  }
  return {};
}

// g(alpha) = 3F2(alpha/2-i+j+1, alpha-2i+2, 1-i-j;
//                alpha/2-i-j+2, alpha-i+j+2; 1),
// terminating through the upper entry 1-i-j; identically zero exactly when
// i and j are both naturals. All of its poles sit at integers, so a
// non-integral alpha is always admissible.
inline Rational lemma35_g(const Rational& alpha, long i, long j) {
  if (is_integer(alpha)) {
    throw std::invalid_argument("lemma35_g: alpha must not be an integer");
  }
  if (i + j < 1) {
    throw std::invalid_argument("lemma35_g: need i + j >= 1 for termination");
  }
  const Rational ii(i), jj(j);
  TerminatingPFQ pfq{{alpha / 2 - ii + jj + 1, alpha - 2 * ii + 2, 1 - ii - jj},
                     {alpha / 2 - ii - jj + 2, alpha - ii + jj + 2}};
  return pfq_at_one(pfq);
}

enum class Lemma36Variant { kI, kII };

// Variant i: 3F2((alpha+1)/2-t, alpha-2s-1, -2s-1; (alpha-1)/2+t-2s, alpha+1; 1),
// zero exactly when s+t+1 and s-t+1 are naturals.
// Variant ii: 3F2(alpha/2-s, alpha-2t, -2t; alpha/2+s-2t+1, alpha+1; 1),
// zero exactly when s+t+1 and t-s are naturals.
inline Rational lemma36_value(const Rational& alpha, const Rational& s, const Rational& t,
                              Lemma36Variant variant) {
  if (is_integer(alpha)) {
    throw std::invalid_argument("lemma36_value: alpha must not be an integer");
  }
  const Rational terminator =
      variant == Lemma36Variant::kI ? Rational(-2 * s - 1) : Rational(-2 * t);
  if (!is_nonpositive_integer(terminator)) {
    throw NonTerminating("lemma36_value: designated upper parameter " + to_string(terminator) +
                         " is not a nonpositive integer");
  }
  TerminatingPFQ pfq =
      variant == Lemma36Variant::kI
          ? TerminatingPFQ{{(alpha + 1) / 2 - t, alpha - 2 * s - 1, -2 * s - 1},
                           {(alpha - 1) / 2 + t - 2 * s, alpha + 1}}
          : TerminatingPFQ{{alpha / 2 - s, alpha - 2 * t, -2 * t},
                           {alpha / 2 + s - 2 * t + 1, alpha + 1}};
  return pfq_at_one(pfq);
}

// Coefficient d_{2s+1} of f_{s,t} in closed form: the 4F3 collapses to the
// variant-i 3F2 once n = 2s+1 cancels one upper against one lower.
inline Rational degree_drop_coefficient(const ProductParams& p) {
  p.validate();
  if (!is_integer(2 * p.s + 1) || sgn(2 * p.s + 1) <= 0) {
    throw std::invalid_argument("degree_drop_coefficient: 2s+1 must be a natural number");
  }
  const long n = to_long(2 * p.s + 1);
  const Rational head = lemma36_value(p.alpha, p.s, p.t, Lemma36Variant::kI);
  const Rational tail = pochhammer(-p.alpha / 2 - p.s, n) *
                        pochhammer(-(p.alpha - 1) / 2 - p.t, n) /
                        (pochhammer(1 - p.alpha, n) * factorial(n));
  return head * tail;
}

}  // namespace schwarzmap
