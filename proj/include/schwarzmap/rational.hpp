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

#include <gmpxx.h>

#include <numeric>
#include <stdexcept>
#include <string>

namespace schwarzmap {

// Exact rational scalar. GMP's canonical mpq representation (lowest terms,
// positive denominator) is exactly the invariant we need, so the library
// works directly on mpq_class values.
using Rational = mpq_class;

inline Rational rational(long num, long den = 1) {
  if (den == 0) throw std::invalid_argument("rational: zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

// Accepts "p" or "p/q" with optional sign, e.g. "-11/432".
inline Rational parse_rational(const std::string& text) {
  const auto slash = text.find('/');
  try {
    if (slash == std::string::npos) {
      return Rational(mpz_class(text));
    }
    mpz_class num(text.substr(0, slash));
    mpz_class den(text.substr(slash + 1));
    if (den == 0) throw std::invalid_argument("zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
  } catch (const std::invalid_argument&) {
    throw std::invalid_argument("parse_rational: bad rational literal '" + text + "'");
  }
}

inline std::string to_string(const Rational& q) { return q.get_str(); }

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

inline bool fits_long(const Rational& q) {
  return is_integer(q) && q.get_num().fits_slong_p();
}

inline long to_long(const Rational& q) {
  if (!fits_long(q)) {
    throw std::invalid_argument("to_long: " + to_string(q) + " is not a small integer");
  }
  return q.get_num().get_si();
}

inline bool is_nonpositive_integer(const Rational& q) {
  return is_integer(q) && sgn(q) <= 0;
}

// The naturals are {1, 2, 3, ...} throughout.
inline bool is_natural(const Rational& q) { return is_integer(q) && sgn(q) > 0; }

// Rising factorial (a)(a+1)...(a+n-1); empty product for n = 0.
inline Rational pochhammer(const Rational& a, long n) {
  if (n < 0) throw std::invalid_argument("pochhammer: negative length");
  Rational result(1);
  Rational factor = a;
  for (long k = 0; k < n; ++k) {
    result *= factor;
    factor += 1;
  }
  return result;
}

// (a,n) = 0 iff 1-a and a+n are both naturals, i.e. a is an integer with
// a <= 0 < a + n.
inline bool pochhammer_is_zero(const Rational& a, long n) {
  return is_natural(1 - a) && is_natural(a + n);
}

inline Rational factorial(long n) { return pochhammer(Rational(1), n); }

// Integer binomial coefficient; zero outside 0 <= k <= n.
inline Rational binomial(long n, long k) {
  if (k < 0 || k > n) return Rational(0);
  if (k > n - k) k = n - k;
  Rational result(1);
  for (long i = 0; i < k; ++i) {
    result *= Rational(n - i);
    result /= Rational(i + 1);
  }
  return result;
}

// base^exp with exp of either sign; base must be nonzero for exp < 0.
inline Rational pow_rational(const Rational& base, long exp) {
  if (exp == 0) return Rational(1);
  if (base == 0 && exp < 0) {
    throw std::invalid_argument("pow_rational: zero base with negative exponent");
  }
  const unsigned long e = static_cast<unsigned long>(exp < 0 ? -exp : exp);
  mpz_class num, den;
  mpz_pow_ui(num.get_mpz_t(), base.get_num().get_mpz_t(), e);
  mpz_pow_ui(den.get_mpz_t(), base.get_den().get_mpz_t(), e);
  Rational q = exp > 0 ? Rational(num, den) : Rational(den, num);
  q.canonicalize();
  return q;
}

inline long lcm_long(long a, long b) { return std::lcm(a, b); }

}  // namespace schwarzmap
