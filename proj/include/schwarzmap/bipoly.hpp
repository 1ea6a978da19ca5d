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

#include <initializer_list>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "schwarzmap/puiseux.hpp"
#include "schwarzmap/rational.hpp"

namespace schwarzmap {

// Homogeneous polynomial sum_k c_k u^(d-k) v^k; coefficient index k is the
// v-exponent. Homogeneity is structural: only the degree and the d+1
// coefficients are stored.
class HomogeneousBivariatePoly {
 public:
  explicit HomogeneousBivariatePoly(long degree = 0)
      : degree_(degree), coeffs_(static_cast<std::size_t>(degree) + 1, Rational(0)) {
    if (degree < 0) throw std::invalid_argument("negative degree");
  }

  static HomogeneousBivariatePoly from_coefficients(std::vector<Rational> cs) {
    if (cs.empty()) throw std::invalid_argument("empty coefficient list");
    HomogeneousBivariatePoly p(static_cast<long>(cs.size()) - 1);
    p.coeffs_ = std::move(cs);
    return p;
  }

  // Terms given as (v-exponent, coefficient literal); repeated exponents
  // accumulate, mirroring how printed tables occasionally list a monomial
  // twice.
  static HomogeneousBivariatePoly from_terms(
      long degree, std::initializer_list<std::pair<long, const char*>> terms) {
    HomogeneousBivariatePoly p(degree);
    for (const auto& [v_exp, literal] : terms) {
      if (v_exp < 0 || v_exp > degree) throw std::invalid_argument("term exponent out of range");
      p.coeffs_[static_cast<std::size_t>(v_exp)] += parse_rational(literal);
    }
    return p;
  }

  long degree() const { return degree_; }
  const std::vector<Rational>& coefficients() const { return coeffs_; }
  const Rational& coefficient(long v_exp) const {
    return coeffs_.at(static_cast<std::size_t>(v_exp));
  }

  HomogeneousBivariatePoly with_coefficient(long v_exp, const Rational& c) const {
    HomogeneousBivariatePoly p = *this;
    p.coeffs_.at(static_cast<std::size_t>(v_exp)) = c;
    return p;
  }

  bool is_zero() const {
    for (const auto& c : coeffs_) {
      if (c != 0) return false;
    }
    return true;
  }

  // P(v, u): reverses the coefficient list.
  HomogeneousBivariatePoly swapped_arguments() const {
    HomogeneousBivariatePoly p(degree_);
    for (long k = 0; k <= degree_; ++k) {
      p.coeffs_[static_cast<std::size_t>(k)] = coeffs_[static_cast<std::size_t>(degree_ - k)];
    }
    return p;
  }

  friend HomogeneousBivariatePoly operator+(const HomogeneousBivariatePoly& a,
                                            const HomogeneousBivariatePoly& b) {
    if (a.degree_ != b.degree_) throw std::invalid_argument("degree mismatch in sum");
    HomogeneousBivariatePoly p(a.degree_);
    for (std::size_t k = 0; k < p.coeffs_.size(); ++k) p.coeffs_[k] = a.coeffs_[k] + b.coeffs_[k];
    return p;
  }

  friend HomogeneousBivariatePoly operator-(const HomogeneousBivariatePoly& a,
                                            const HomogeneousBivariatePoly& b) {
    if (a.degree_ != b.degree_) throw std::invalid_argument("degree mismatch in difference");
    HomogeneousBivariatePoly p(a.degree_);
    for (std::size_t k = 0; k < p.coeffs_.size(); ++k) p.coeffs_[k] = a.coeffs_[k] - b.coeffs_[k];
    return p;
  }

  friend HomogeneousBivariatePoly operator*(const HomogeneousBivariatePoly& a,
                                            const HomogeneousBivariatePoly& b) {
    HomogeneousBivariatePoly p(a.degree_ + b.degree_);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
      if (a.coeffs_[i] == 0) continue;
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
        if (b.coeffs_[j] == 0) continue;
        p.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
      }
    }
    return p;
  }

  HomogeneousBivariatePoly pow(long k) const {
    if (k < 0) throw std::invalid_argument("negative polynomial power");
    HomogeneousBivariatePoly acc(0);
    acc.coeffs_[0] = 1;
    HomogeneousBivariatePoly sq = *this;
    while (k > 0) {
      if (k & 1) acc = acc * sq;
      k >>= 1;
      if (k > 0) sq = sq * sq;
    }
    return acc;
  }

  friend bool operator==(const HomogeneousBivariatePoly& a,
                         const HomogeneousBivariatePoly& b) {
    return a.degree_ == b.degree_ && a.coeffs_ == b.coeffs_;
  }

  PuiseuxSeries eval(const PuiseuxSeries& u, const PuiseuxSeries& v) const {
    return eval_with_powers(powers(u, degree_), powers(v, degree_));
  }

  PuiseuxSeries eval_with_powers(const std::vector<PuiseuxSeries>& u_pows,
                                 const std::vector<PuiseuxSeries>& v_pows) const {
    PuiseuxSeries acc;
    bool started = false;
    for (long k = 0; k <= degree_; ++k) {
      const Rational& c = coeffs_[static_cast<std::size_t>(k)];
      if (c == 0) continue;
      PuiseuxSeries term =
          (u_pows[static_cast<std::size_t>(degree_ - k)] * v_pows[static_cast<std::size_t>(k)])
              .scaled(c);
      acc = started ? acc + term : std::move(term);
      started = true;
    }
    if (!started) return PuiseuxSeries::zero();
    return acc;
  }

  // [s^0, s^1, ..., s^max_exp]
  static std::vector<PuiseuxSeries> powers(const PuiseuxSeries& s, long max_exp) {
    std::vector<PuiseuxSeries> table;
    table.reserve(static_cast<std::size_t>(max_exp) + 1);
    table.push_back(PuiseuxSeries::monomial(Rational(1), 0, s.base()));
    for (long k = 1; k <= max_exp; ++k) table.push_back(table.back() * s);
    return table;
  }

  std::string str(const char* u = "u", const char* v = "v") const {
    std::ostringstream out;
    bool first = true;
    for (long k = 0; k <= degree_; ++k) {
      const Rational& c = coeffs_[static_cast<std::size_t>(k)];
      if (c == 0) continue;
      if (first) {
        if (sgn(c) < 0) out << "-";
      } else {
        out << (sgn(c) < 0 ? " - " : " + ");
      }
      const Rational mag = abs(c);
      const long ue = degree_ - k;
      if (mag != 1 || (ue == 0 && k == 0)) out << to_string(mag);
      if (ue > 0) out << u << (ue > 1 ? "^" + std::to_string(ue) : "");
      if (k > 0) out << v << (k > 1 ? "^" + std::to_string(k) : "");
      first = false;
    }
    if (first) out << "0";
    return out.str();
  }

 private:
  long degree_;
  std::vector<Rational> coeffs_;
};

}  // namespace schwarzmap
