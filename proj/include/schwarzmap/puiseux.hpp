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

#include <algorithm>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "schwarzmap/rational.hpp"

namespace schwarzmap {

// Truncation bound in t-exponent units. Exact objects (monomials and
// polynomials) carry kOrderUnbounded: every coefficient is known.
using Order = long long;
inline constexpr Order kOrderUnbounded = 1LL << 50;

inline bool order_is_unbounded(Order t) { return t >= kOrderUnbounded / 2; }

inline Order order_shift(Order t, long long by) {
  return order_is_unbounded(t) ? kOrderUnbounded : t + by;
}

inline Order order_min(Order a, Order b) { return std::min(a, b); }

struct RebaseOverflow : std::runtime_error {
  explicit RebaseOverflow(const std::string& what) : std::runtime_error(what) {}
};

struct NonUnitSeries : std::runtime_error {
  explicit NonUnitSeries(const std::string& what) : std::runtime_error(what) {}
};

// Largest admissible common base. Catalog data needs single digits; anything
// bigger signals malformed inputs.
inline constexpr long kMaxBase = 4096;

// Truncated Laurent-Puiseux series in t = x^(1/base) over the rationals.
// coeffs_[i] holds the coefficient of t^(offset_+i). Exponents above the
// stored range up to order_ are exactly zero; nothing is claimed past
// order_. Finitely many negative exponents are allowed. Values are
// immutable once built; arithmetic returns fresh series whose order is the
// knowledge actually supported by the operands (the plain min rule for
// unit-offset operands).
class PuiseuxSeries {
 public:
  PuiseuxSeries() : base_(1), offset_(0), order_(kOrderUnbounded) {}

  static PuiseuxSeries zero(long base = 1, Order order = kOrderUnbounded) {
    PuiseuxSeries s;
    s.base_ = base;
    s.order_ = order;
    return s;
  }

  static PuiseuxSeries constant(const Rational& c) {
    return monomial(c, 0, 1);
  }

  static PuiseuxSeries monomial(const Rational& c, long long t_exp, long base,
                                Order order = kOrderUnbounded) {
    check_base(base);
    PuiseuxSeries s;
    s.base_ = base;
    s.order_ = order;
    if (c != 0 && t_exp <= order) {
      s.offset_ = t_exp;
      s.coeffs_.push_back(c);
    }
    return s;
  }

  // Polynomial in x: cs[k] is the coefficient of x^k.
  static PuiseuxSeries from_x_polynomial(const std::vector<Rational>& cs) {
    PuiseuxSeries s;
    s.base_ = 1;
    s.offset_ = 0;
    s.coeffs_ = cs;
    s.order_ = kOrderUnbounded;
    s.normalize();
    return s;
  }

  static PuiseuxSeries from_parts(long base, long long offset,
                                  std::vector<Rational> cs, Order order) {
    check_base(base);
    PuiseuxSeries s;
    s.base_ = base;
    s.offset_ = offset;
    s.coeffs_ = std::move(cs);
    s.order_ = order;
    s.normalize();
    return s;
  }

  long base() const { return base_; }
  Order order() const { return order_; }
  bool is_zero() const { return coeffs_.empty(); }

  long long leading_t_exponent() const {
    require(!is_zero(), "leading exponent of the zero series");
    return offset_;
  }

  Rational leading_x_exponent() const {
    return rational(leading_t_exponent(), base_);
  }

  const Rational& leading_coefficient() const {
    require(!is_zero(), "leading coefficient of the zero series");
    return coeffs_.front();
  }

  // Coefficient of t^t_exp; asking beyond order_ is a logic error.
  Rational coefficient_t(long long t_exp) const {
    require(t_exp <= order_, "coefficient requested beyond truncation order");
    if (is_zero() || t_exp < offset_ ||
        t_exp >= offset_ + static_cast<long long>(coeffs_.size())) {
      return Rational(0);
    }
    return coeffs_[static_cast<std::size_t>(t_exp - offset_)];
  }

  Rational coefficient_x(const Rational& x_exp) const {
    const Rational t = x_exp * base_;
    if (!is_integer(t)) return Rational(0);
    return coefficient_t(to_long(t));
  }

  PuiseuxSeries rebased(long new_base) const {
    check_base(new_base);
    if (new_base == base_) return *this;
    require(new_base % base_ == 0, "rebase target must be a multiple of the base");
    const long long f = new_base / base_;
    PuiseuxSeries s;
    s.base_ = new_base;
    s.offset_ = offset_ * f;
    s.order_ = order_is_unbounded(order_) ? kOrderUnbounded : (order_ + 1) * f - 1;
    if (!coeffs_.empty()) {
      s.coeffs_.assign(static_cast<std::size_t>((coeffs_.size() - 1) * f + 1), Rational(0));
      for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        s.coeffs_[i * static_cast<std::size_t>(f)] = coeffs_[i];
      }
    }
    s.normalize();
    return s;
  }

  PuiseuxSeries truncated(Order new_order) const {
    PuiseuxSeries s = *this;
    s.order_ = order_min(s.order_, new_order);
    s.normalize();
    return s;
  }

  // Multiplication by t^dt.
  PuiseuxSeries shifted_t(long long dt) const {
    PuiseuxSeries s = *this;
    s.offset_ += dt;
    s.order_ = order_shift(s.order_, dt);
    if (s.is_zero()) s.offset_ = 0;
    return s;
  }

  PuiseuxSeries scaled(const Rational& c) const {
    if (c == 0) return zero(base_, order_);
    PuiseuxSeries s = *this;
    for (auto& q : s.coeffs_) q *= c;
    return s;
  }

  // Strips the leading monomial, leaving a unit series.
  PuiseuxSeries unit_part() const {
    require(!is_zero(), "unit part of the zero series");
    return shifted_t(-offset_);
  }

  PuiseuxSeries derivative_x() const {
    PuiseuxSeries s;
    s.base_ = base_;
    s.order_ = order_shift(order_, -base_);
    if (!coeffs_.empty()) {
      s.offset_ = offset_ - base_;
      s.coeffs_.reserve(coeffs_.size());
      for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        const long long e = offset_ + static_cast<long long>(i);
        s.coeffs_.push_back(coeffs_[i] * rational(e, base_));
      }
    }
    s.normalize();
    return s;
  }

  friend PuiseuxSeries operator-(const PuiseuxSeries& a) { return a.scaled(Rational(-1)); }

  friend PuiseuxSeries operator+(const PuiseuxSeries& a, const PuiseuxSeries& b) {
    auto [x, y] = aligned(a, b);
    const Order t = order_min(x.order_, y.order_);
    if (x.is_zero() && y.is_zero()) return zero(x.base_, t);
    if (x.is_zero()) return y.truncated(t);
    if (y.is_zero()) return x.truncated(t);
    const long long lo = std::min(x.offset_, y.offset_);
    long long hi = std::max(x.top(), y.top());
    if (!order_is_unbounded(t)) hi = std::min(hi, t);
    PuiseuxSeries s;
    s.base_ = x.base_;
    s.order_ = t;
    if (hi >= lo) {
      s.offset_ = lo;
      s.coeffs_.assign(static_cast<std::size_t>(hi - lo + 1), Rational(0));
      for (long long e = lo; e <= hi; ++e) {
        s.coeffs_[static_cast<std::size_t>(e - lo)] = x.stored(e) + y.stored(e);
      }
    }
    s.normalize();
    return s;
  }

  friend PuiseuxSeries operator-(const PuiseuxSeries& a, const PuiseuxSeries& b) {
    return a + (-b);
  }

  friend PuiseuxSeries operator*(const PuiseuxSeries& a, const PuiseuxSeries& b) {
    auto [x, y] = aligned(a, b);
    // Product of Laurent series: the coefficient of t^e is exact only while
    // both factors supply every contributing term, which bounds the result
    // at min(Tx + off_y, Ty + off_x). For unit offsets this is the min rule.
    const Order t = order_min(order_shift(x.order_, y.lead_or_zero()),
                              order_shift(y.order_, x.lead_or_zero()));
    if (x.is_zero() || y.is_zero()) return zero(x.base_, t);
    const long long lo = x.offset_ + y.offset_;
    long long hi = x.top() + y.top();
    if (!order_is_unbounded(t)) hi = std::min(hi, t);
    PuiseuxSeries s;
    s.base_ = x.base_;
    s.order_ = t;
    if (hi >= lo) {
      s.offset_ = lo;
      s.coeffs_.assign(static_cast<std::size_t>(hi - lo + 1), Rational(0));
      for (std::size_t i = 0; i < x.coeffs_.size(); ++i) {
        if (x.coeffs_[i] == 0) continue;
        const long long ex = x.offset_ + static_cast<long long>(i);
        const long long jlo = std::max<long long>(y.offset_, lo - ex);
        const long long jhi = std::min<long long>(y.top(), hi - ex);
        for (long long ey = jlo; ey <= jhi; ++ey) {
          const Rational& cy = y.coeffs_[static_cast<std::size_t>(ey - y.offset_)];
          if (cy == 0) continue;
          s.coeffs_[static_cast<std::size_t>(ex + ey - lo)] += x.coeffs_[i] * cy;
        }
      }
    }
    s.normalize();
    return s;
  }

  PuiseuxSeries& operator+=(const PuiseuxSeries& rhs) { return *this = *this + rhs; }
  PuiseuxSeries& operator-=(const PuiseuxSeries& rhs) { return *this = *this - rhs; }
  PuiseuxSeries& operator*=(const PuiseuxSeries& rhs) { return *this = *this * rhs; }

  // Reciprocal of a unit series (nonzero constant term at t^0). An exact
  // multi-term polynomial has no storable reciprocal; truncate it first.
  PuiseuxSeries inverse() const {
    if (is_zero() || offset_ != 0) {
      throw NonUnitSeries("series_inverse: constant term is zero");
    }
    if (order_is_unbounded(order_)) {
      if (coeffs_.size() == 1) {
        return monomial(Rational(1) / coeffs_[0], 0, base_);
      }
      throw std::invalid_argument(
          "inverse of an exact polynomial is an infinite series; truncate first");
    }
    const std::size_t len = static_cast<std::size_t>(order_) + 1;
    std::vector<Rational> inv(len, Rational(0));
    const Rational lead = Rational(1) / coeffs_[0];
    inv[0] = lead;
    for (std::size_t k = 1; k < len; ++k) {
      Rational acc(0);
      const std::size_t imax = std::min(k, coeffs_.size() - 1);
      for (std::size_t i = 1; i <= imax; ++i) {
        if (coeffs_[i] == 0) continue;
        acc += coeffs_[i] * inv[k - i];
      }
      inv[k] = -acc * lead;
    }
    return from_parts(base_, 0, std::move(inv), order_);
  }

  // Integer power; negative exponents go through the unit-part reciprocal
  // and therefore require a monomial-times-unit series.
  PuiseuxSeries pow(long long k) const {
    if (k == 0) return monomial(Rational(1), 0, base_);
    if (k > 0) {
      PuiseuxSeries acc = monomial(Rational(1), 0, base_);
      PuiseuxSeries sq = *this;
      long long e = k;
      while (e > 0) {
        if (e & 1) acc = acc * sq;
        e >>= 1;
        if (e > 0) sq = sq * sq;
      }
      return acc;
    }
    if (is_zero()) throw NonUnitSeries("negative power of the zero series");
    const long long lead = offset_;
    return unit_part().inverse().pow(-k).shifted_t(lead * k);
  }

  // Equal on every exponent both sides can speak for.
  friend bool operator==(const PuiseuxSeries& a, const PuiseuxSeries& b) {
    auto [x, y] = aligned(a, b);
    const Order t = order_min(x.order_, y.order_);
    if (x.is_zero() && y.is_zero()) return true;
    long long lo = x.is_zero() ? y.offset_ : (y.is_zero() ? x.offset_ : std::min(x.offset_, y.offset_));
    long long hi = std::max(x.top_or(lo - 1), y.top_or(lo - 1));
    if (!order_is_unbounded(t)) hi = std::min(hi, t);
    for (long long e = lo; e <= hi; ++e) {
      if (x.stored(e) != y.stored(e)) return false;
    }
    return true;
  }

  struct Difference {
    Rational x_exponent;
    Rational lhs;
    Rational rhs;
  };

  // First disagreement at x-exponent <= through_x, scanning upward from the
  // leading terms. Both operands must be exact through through_x.
  static std::optional<Difference> first_difference(const PuiseuxSeries& a,
                                                    const PuiseuxSeries& b,
                                                    const Rational& through_x) {
    auto [x, y] = aligned(a, b);
    const Rational t_exact = through_x * x.base_;
    long long limit = to_long_floor(t_exact);
    require(x.order_ >= limit && y.order_ >= limit,
            "first_difference: operands not exact through the requested order");
    if (x.is_zero() && y.is_zero()) return std::nullopt;
    long long lo = x.is_zero() ? y.offset_ : (y.is_zero() ? x.offset_ : std::min(x.offset_, y.offset_));
    for (long long e = lo; e <= limit; ++e) {
      const Rational cx = x.stored(e);
      const Rational cy = y.stored(e);
      if (cx != cy) {
        return Difference{rational(e, x.base_), cx, cy};
      }
    }
    return std::nullopt;
  }

  bool equals_through_x(const PuiseuxSeries& rhs, const Rational& through_x) const {
    return !first_difference(*this, rhs, through_x).has_value();
  }

  bool is_zero_through_x(const Rational& through_x) const {
    return equals_through_x(zero(base_), through_x);
  }

  std::string str(std::size_t max_terms = 8) const {
    if (is_zero()) return order_is_unbounded(order_) ? "0" : "0 + O(" + big_o() + ")";
    std::ostringstream out;
    std::size_t shown = 0;
    bool first = true;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
      const Rational& c = coeffs_[i];
      if (c == 0) continue;
      if (shown == max_terms) {
        out << " + ...";
        break;
      }
      const long long e = offset_ + static_cast<long long>(i);
      if (first) {
        if (sgn(c) < 0) out << "-";
      } else {
        out << (sgn(c) < 0 ? " - " : " + ");
      }
      const Rational mag = abs(c);
      const bool unit_exp = (e == 0);
      if (mag != 1 || unit_exp) out << to_string(mag);
      if (!unit_exp) {
        if (mag != 1) out << "*";
        out << exponent_str(e);
      }
      first = false;
      ++shown;
    }
    if (!order_is_unbounded(order_)) out << " + O(" << big_o() << ")";
    return out.str();
  }

 private:
  static void check_base(long base) {
    if (base < 1) throw std::invalid_argument("series base must be positive");
    if (base > kMaxBase) {
      throw RebaseOverflow("common base " + std::to_string(base) + " exceeds limit");
    }
  }

  static void require(bool ok, const char* what) {
    if (!ok) throw std::logic_error(what);
  }

  static long long to_long_floor(const Rational& q) {
    mpz_class f;
    mpz_fdiv_q(f.get_mpz_t(), q.get_num().get_mpz_t(), q.get_den().get_mpz_t());
    if (!f.fits_slong_p()) throw std::invalid_argument("exponent out of range");
    return f.get_si();
  }

  long long top() const {
    return offset_ + static_cast<long long>(coeffs_.size()) - 1;
  }
  long long top_or(long long fallback) const { return is_zero() ? fallback : top(); }
  long long lead_or_zero() const { return is_zero() ? 0 : offset_; }

  Rational stored(long long e) const {
    if (is_zero() || e < offset_ || e > top()) return Rational(0);
    return coeffs_[static_cast<std::size_t>(e - offset_)];
  }

  static std::pair<PuiseuxSeries, PuiseuxSeries> aligned(const PuiseuxSeries& a,
                                                         const PuiseuxSeries& b) {
    const long common = lcm_long(a.base_, b.base_);
    check_base(common);
    return {a.rebased(common), b.rebased(common)};
  }

  std::string exponent_str(long long e) const {
    if (base_ == 1) return e == 1 ? "x" : "x^" + std::to_string(e);
    if (e % base_ == 0) {
      const long long r = e / base_;
      return r == 1 ? "x" : "x^" + std::to_string(r);
    }
    return "x^(" + std::to_string(e) + "/" + std::to_string(base_) + ")";
  }

  std::string big_o() const {
    const long long e = order_ + 1;
    if (base_ == 1 || e % base_ == 0) return "x^" + std::to_string(e / base_);
    return "x^(" + std::to_string(e) + "/" + std::to_string(base_) + ")";
  }

  void normalize() {
    if (!order_is_unbounded(order_) && !coeffs_.empty() && top() > order_) {
      const long long keep = order_ - offset_ + 1;
      if (keep <= 0) {
        coeffs_.clear();
      } else {
        coeffs_.resize(static_cast<std::size_t>(keep));
      }
    }
    std::size_t lead = 0;
    while (lead < coeffs_.size() && coeffs_[lead] == 0) ++lead;
    if (lead == coeffs_.size()) {
      coeffs_.clear();
      offset_ = 0;
      return;
    }
    if (lead > 0) {
      coeffs_.erase(coeffs_.begin(), coeffs_.begin() + static_cast<std::ptrdiff_t>(lead));
      offset_ += static_cast<long long>(lead);
    }
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
  }

  long base_;
  long long offset_;
  Order order_;
  std::vector<Rational> coeffs_;
};

// Expansion of (1-x)^e through x^order: the coefficient of x^n is
// (-e,n)/n!, built by the term ratio (n-e)/(n+1).
inline PuiseuxSeries binomial_series(const Rational& e, Order x_order) {
  std::vector<Rational> cs;
  cs.reserve(static_cast<std::size_t>(x_order) + 1);
  Rational term(1);
  cs.push_back(term);
  for (Order n = 0; n < x_order; ++n) {
    term *= (Rational(static_cast<long>(n)) - e);
    term /= Rational(static_cast<long>(n) + 1);
    cs.push_back(term);
  }
  return PuiseuxSeries::from_parts(1, 0, std::move(cs), x_order);
}

}  // namespace schwarzmap
