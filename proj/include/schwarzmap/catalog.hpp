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

#include <array>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "schwarzmap/bipoly.hpp"
#include "schwarzmap/hypergeometric.hpp"
#include "schwarzmap/linsolve.hpp"
#include "schwarzmap/puiseux.hpp"
#include "schwarzmap/rational.hpp"

namespace schwarzmap {

struct NonIntegerExponent : std::runtime_error {
  explicit NonIntegerExponent(const std::string& what) : std::runtime_error(what) {}
};

// Sign pattern of (mu_0, mu_1, mu_inf) = (1-c, c-a-b, a-b):
//   i (+++), ii (+--), iii (-+-), iv (--+),
// with the sign of mu_inf read up to the harmless a<->b exchange.
enum class SignCase { kI = 1, kII = 2, kIII = 3, kIV = 4 };

inline const char* sign_case_name(SignCase c) {
  switch (c) {
    case SignCase::kI: return "i";
    case SignCase::kII: return "ii";
    case SignCase::kIII: return "iii";
    case SignCase::kIV: return "iv";
  }
  return "?";
}

// One target function f = x^e0 (1-x)^e1 * factor(x). The polynomial factor
// is 1 except in the fractional-exponent catalog section.
struct FjSpec {
  Rational x_exponent;
  Rational one_minus_x_exponent;
  std::vector<Rational> factor{Rational(1)};

  bool trivial_factor() const {
    if (factor.empty()) return false;
    if (factor[0] != 1) return false;
    for (std::size_t i = 1; i < factor.size(); ++i) {
      if (factor[i] != 0) return false;
    }
    return true;
  }

  friend bool operator==(const FjSpec& a, const FjSpec& b) {
    if (a.x_exponent != b.x_exponent || a.one_minus_x_exponent != b.one_minus_x_exponent) {
      return false;
    }
    const std::size_t n = std::max(a.factor.size(), b.factor.size());
    for (std::size_t i = 0; i < n; ++i) {
      const Rational ca = i < a.factor.size() ? a.factor[i] : Rational(0);
      const Rational cb = i < b.factor.size() ? b.factor[i] : Rational(0);
      if (ca != cb) return false;
    }
    return true;
  }

  std::string str() const;
};

// One parameter row of a catalog case. sign_case is consistent with the
// stored params; where a printed header contradicted its own row (it
// happens once), the params are reconstructed from the sign pattern and the
// original header is kept in printed_params.
struct CaseRow {
  HGParams params;
  SignCase sign_case;
  bool swapped;  // identities read P_j(v, u)
  std::array<FjSpec, 3> table_fj;
  std::optional<HGParams> printed_params;
};

struct PolyhedralCase {
  std::string label;
  int dihedral_n = 0;  // 0 unless a D-family case
  std::array<Rational, 3> k_triple;
  long group_order = 0;  // N; 0 for the fractional-k section
  HomogeneousBivariatePoly p0, p1, pinf;
  std::vector<CaseRow> rows;

  bool integer_triple() const { return group_order > 0; }

  const HomogeneousBivariatePoly& poly(int j) const {
    switch (j) {
      case 0: return p0;
      case 1: return p1;
      case 2: return pinf;
    }
    throw std::out_of_range("poly index");
  }

  long max_degree() const {
    return std::max({p0.degree(), p1.degree(), pinf.degree()});
  }

  std::string display_name() const {
    return dihedral_n > 0 ? label + "(n=" + std::to_string(dihedral_n) + ")" : label;
  }
};

inline std::string FjSpec::str() const {
  std::ostringstream out;
  bool leading = true;
  if (x_exponent != 0) {
    out << "x^(" << to_string(x_exponent) << ")";
    leading = false;
  }
  if (one_minus_x_exponent != 0) {
    if (!leading) out << " ";
    out << "(1-x)^(" << to_string(one_minus_x_exponent) << ")";
    leading = false;
  }
  if (!trivial_factor()) {
    if (!leading) out << " ";
    out << "(" << PuiseuxSeries::from_x_polynomial(factor).str() << ")";
    leading = false;
  }
  if (leading) out << "1";
  return out.str();
}

namespace catalog_detail {

inline Rational R(const char* s) { return parse_rational(s); }

inline FjSpec fj(const Rational& e0, const Rational& e1,
                 std::vector<Rational> factor = {Rational(1)}) {
  return FjSpec{e0, e1, std::move(factor)};
}

inline CaseRow row(const Rational& a, const Rational& b, const Rational& c, SignCase sc,
                   bool swapped, FjSpec f0, FjSpec f1, FjSpec finf) {
  return CaseRow{HGParams{a, b, c}, sc, swapped, {std::move(f0), std::move(f1), std::move(finf)},
                 std::nullopt};
}

inline std::vector<Rational> one_minus_2x() { return {Rational(1), Rational(-2)}; }
inline std::vector<Rational> one_plus_x() { return {Rational(1), Rational(1)}; }
inline std::vector<Rational> one_minus_half_x() { return {Rational(1), rational(-1, 2)}; }

inline void check_dihedral_n(int n) {
  if (n < 2) throw std::invalid_argument("dihedral family needs n >= 2");
}

// D1 = [2,2,n]. The printed P0 and P1 carry the imaginary unit; since
// i*(v/(i n))^(2k+1) = (-1)^k (v/n)^(2k+1) and (v/(i n))^(2k) =
// (-1)^k (v/n)^(2k), both live over Q.
inline PolyhedralCase make_d1(int n) {
  check_dihedral_n(n);
  PolyhedralCase cs;
  cs.label = "D1";
  cs.dihedral_n = n;
  cs.k_triple = {Rational(2), Rational(2), Rational(n)};
  cs.group_order = 2 * n;
  HomogeneousBivariatePoly p0(n), p1(n);
  Rational sign(1);
  for (long k = 0; 2 * k + 1 <= n; ++k) {
    p0 = p0.with_coefficient(2 * k + 1, sign * binomial(n, 2 * k + 1) / pow_rational(Rational(n), 2 * k + 1));
    sign = -sign;
  }
  sign = 1;
  for (long k = 0; 2 * k <= n; ++k) {
    p1 = p1.with_coefficient(2 * k, sign * binomial(n, 2 * k) / pow_rational(Rational(n), 2 * k));
    sign = -sign;
  }
  cs.p0 = p0;
  cs.p1 = p1;
  cs.pinf = HomogeneousBivariatePoly::from_coefficients(
      {Rational(1), Rational(0), Rational(1) / Rational(n * n)});
  const Rational half = rational(1, 2), th = rational(3, 2);
  const Rational n2(2 * n);
  cs.rows = {
      row(rational(1, 2 * n), rational(-1, 2 * n), half, SignCase::kI, false,
          fj(half, 0), fj(0, half), fj(0, 0)),
      row(Rational(n - 1) / n2, Rational(n + 1) / n2, half, SignCase::kII, false,
          fj(half, rational(-n, 2)), fj(0, Rational(1 - n) / 2), fj(0, -1)),
      row(Rational(n - 1) / n2, Rational(n + 1) / n2, th, SignCase::kIII, true,
          fj(Rational(1 - n) / 2, 0), fj(rational(-n, 2), half), fj(-1, 0)),
      row(Rational(2 * n - 1) / n2, Rational(2 * n + 1) / n2, th, SignCase::kIV, true,
          fj(Rational(1 - n) / 2, rational(-n, 2)), fj(rational(-n, 2), Rational(1 - n) / 2),
          fj(-1, -1)),
  };
  return cs;
}

inline PolyhedralCase make_d2(int n) {
  check_dihedral_n(n);
  PolyhedralCase cs;
  cs.label = "D2";
  cs.dihedral_n = n;
  cs.k_triple = {Rational(2), Rational(n), Rational(2)};
  cs.group_order = 2 * n;
  HomogeneousBivariatePoly p0(n), pinf(n);
  for (long k = 0; 2 * k + 1 <= n; ++k) {
    p0 = p0.with_coefficient(2 * k + 1, binomial(n, 2 * k + 1) / pow_rational(Rational(n), 2 * k + 1));
  }
  for (long k = 0; 2 * k <= n; ++k) {
    pinf = pinf.with_coefficient(2 * k, binomial(n, 2 * k) / pow_rational(Rational(n), 2 * k));
  }
  cs.p0 = p0;
  cs.p1 = HomogeneousBivariatePoly::from_coefficients(
      {Rational(1), Rational(0), Rational(-1) / Rational(n * n)});
  cs.pinf = pinf;
  const Rational half = rational(1, 2), th = rational(3, 2);
  const Rational n2(2 * n);
  cs.rows = {
      row(Rational(n - 1) / n2, rational(-1, 2 * n), half, SignCase::kI, false,
          fj(half, 0), fj(0, rational(1, n)), fj(0, 0)),
      row(rational(1, 2 * n), Rational(n + 1) / n2, half, SignCase::kII, false,
          fj(half, -1), fj(0, rational(-1, n)), fj(0, -1)),
      row(Rational(n - 1) / n2, Rational(2 * n - 1) / n2, th, SignCase::kIII, true,
          fj(Rational(1 - n) / 2, 0), fj(-1, rational(1, n)), fj(rational(-n, 2), 0)),
      row(Rational(2 * n + 1) / n2, Rational(n + 1) / n2, th, SignCase::kIV, true,
          fj(Rational(1 - n) / 2, -1), fj(-1, rational(-1, n)), fj(rational(-n, 2), -1)),
  };
  return cs;
}

inline PolyhedralCase make_d3(int n) {
  check_dihedral_n(n);
  PolyhedralCase cs;
  cs.label = "D3";
  cs.dihedral_n = n;
  cs.k_triple = {Rational(n), Rational(2), Rational(2)};
  cs.group_order = 2 * n;
  cs.p0 = HomogeneousBivariatePoly::from_coefficients({Rational(0), Rational(1), Rational(0)});
  HomogeneousBivariatePoly p1(n), pinf(n);
  p1 = p1.with_coefficient(0, Rational(1)).with_coefficient(n, rational(-1, 4));
  pinf = pinf.with_coefficient(0, Rational(1)).with_coefficient(n, rational(1, 4));
  cs.p1 = p1;
  cs.pinf = pinf;
  const Rational n2(2 * n);
  const Rational cm = Rational(n - 1) / Rational(n), cp = Rational(n + 1) / Rational(n);
  cs.rows = {
      row(Rational(n - 1) / n2, rational(-1, 2 * n), cm, SignCase::kI, false,
          fj(rational(1, n), 0), fj(0, rational(1, 2)), fj(0, 0)),
      row(Rational(n - 1) / n2, Rational(2 * n - 1) / n2, cm, SignCase::kII, false,
          fj(rational(1, n), -1), fj(0, Rational(1 - n) / 2), fj(0, rational(-n, 2))),
      row(rational(1, 2 * n), Rational(n + 1) / n2, cp, SignCase::kIII, true,
          fj(rational(-1, n), 0), fj(-1, rational(1, 2)), fj(-1, 0)),
      row(Rational(2 * n + 1) / n2, Rational(n + 1) / n2, cp, SignCase::kIV, true,
          fj(rational(-1, n), -1), fj(-1, Rational(1 - n) / 2), fj(-1, rational(-n, 2))),
  };
  return cs;
}

inline PolyhedralCase make_t1() {
  PolyhedralCase cs;
  cs.label = "T1";
  cs.k_triple = {Rational(2), Rational(3), Rational(3)};
  cs.group_order = 12;
  cs.p0 = HomogeneousBivariatePoly::from_terms(6, {{1, "1"}, {5, "1/432"}});
  cs.p1 = HomogeneousBivariatePoly::from_terms(4, {{0, "1"}, {2, "-1/6"}, {4, "-1/432"}});
  cs.pinf = HomogeneousBivariatePoly::from_terms(4, {{0, "1"}, {2, "1/6"}, {4, "-1/432"}});
  cs.rows = {
      row(R("1/4"), R("-1/12"), R("1/2"), SignCase::kI, false,
          fj(R("1/2"), 0), fj(0, R("1/3")), fj(0, 0)),
      row(R("1/4"), R("7/12"), R("1/2"), SignCase::kII, false,
          fj(R("1/2"), -2), fj(0, -1), fj(0, R("-4/3"))),
      row(R("5/12"), R("3/4"), R("3/2"), SignCase::kIII, true,
          fj(R("-5/2"), 0), fj(-2, R("1/3")), fj(-2, 0)),
      row(R("13/12"), R("3/4"), R("3/2"), SignCase::kIV, true,
          fj(R("-5/2"), -2), fj(-2, -1), fj(-2, R("-4/3"))),
  };
  return cs;
}

inline PolyhedralCase make_t2() {
  PolyhedralCase cs;
  cs.label = "T2";
  cs.k_triple = {Rational(3), Rational(2), Rational(3)};
  cs.group_order = 12;
  cs.p0 = HomogeneousBivariatePoly::from_terms(4, {{1, "1"}, {4, "-1/64"}});
  cs.p1 = HomogeneousBivariatePoly::from_terms(6, {{0, "1"}, {3, "-5/16"}, {6, "-1/512"}});
  cs.pinf = HomogeneousBivariatePoly::from_terms(4, {{0, "1"}, {3, "1/8"}});
  cs.rows = {
      row(R("1/4"), R("-1/12"), R("2/3"), SignCase::kI, false,
          fj(R("1/3"), 0), fj(0, R("1/2")), fj(0, 0)),
      row(R("5/12"), R("3/4"), R("2/3"), SignCase::kII, false,
          fj(R("1/3"), -2), fj(0, R("-5/2")), fj(0, -2)),
      row(R("1/4"), R("7/12"), R("4/3"), SignCase::kIII, true,
          fj(-1, 0), fj(-2, R("1/2")), fj(R("-4/3"), 0)),
      row(R("13/12"), R("3/4"), R("4/3"), SignCase::kIV, true,
          fj(-1, -2), fj(-2, R("-5/2")), fj(R("-4/3"), -2)),
  };
  return cs;
}

inline PolyhedralCase make_t3() {
  PolyhedralCase cs;
  cs.label = "T3";
  cs.k_triple = {Rational(3), Rational(3), Rational(2)};
  cs.group_order = 12;
  cs.p0 = HomogeneousBivariatePoly::from_terms(4, {{1, "1"}, {4, "1/64"}});
  cs.p1 = HomogeneousBivariatePoly::from_terms(4, {{0, "1"}, {3, "-1/8"}});
  cs.pinf = HomogeneousBivariatePoly::from_terms(6, {{0, "1"}, {3, "5/16"}, {6, "-1/512"}});
  cs.rows = {
      row(R("5/12"), R("-1/12"), R("2/3"), SignCase::kI, false,
          fj(R("1/3"), 0), fj(0, R("1/3")), fj(0, 0)),
      row(R("1/4"), R("3/4"), R("2/3"), SignCase::kII, false,
          fj(R("1/3"), R("-4/3")), fj(0, -1), fj(0, -2)),
      row(R("1/4"), R("3/4"), R("4/3"), SignCase::kIII, true,
          fj(-1, 0), fj(R("-4/3"), R("1/3")), fj(-2, 0)),
      row(R("13/12"), R("7/12"), R("4/3"), SignCase::kIV, true,
          fj(-1, R("-4/3")), fj(R("-4/3"), -1), fj(-2, -2)),
  };
  return cs;
}

inline PolyhedralCase make_o1() {
  PolyhedralCase cs;
  cs.label = "O1";
  cs.k_triple = {Rational(2), Rational(3), Rational(4)};
  cs.group_order = 24;
  cs.p0 = HomogeneousBivariatePoly::from_terms(
      12, {{1, "1"}, {3, "-11/432"}, {5, "11/3456"}, {7, "11/165888"},
           {9, "-11/47775744"}, {11, "1/254803968"}});
  cs.p1 = HomogeneousBivariatePoly::from_terms(
      8, {{0, "1"}, {2, "-7/36"}, {4, "-7/3456"}, {6, "-7/82944"}, {8, "1/5308416"}});
  cs.pinf = HomogeneousBivariatePoly::from_terms(
      6, {{0, "1"}, {2, "5/48"}, {4, "-5/2304"}, {6, "-1/110592"}});
  cs.rows = {
      row(R("5/24"), R("-1/24"), R("1/2"), SignCase::kI, false,
          fj(R("1/2"), 0), fj(0, R("1/3")), fj(0, 0)),
      row(R("7/24"), R("13/24"), R("1/2"), SignCase::kII, false,
          fj(R("1/2"), -4), fj(0, R("-7/3")), fj(0, -2)),
      row(R("11/24"), R("17/24"), R("3/2"), SignCase::kIII, true,
          fj(R("-11/2"), 0), fj(-4, R("1/3")), fj(-3, 0)),
      row(R("25/24"), R("19/24"), R("3/2"), SignCase::kIV, true,
          fj(R("-11/2"), -4), fj(-4, R("-7/3")), fj(-3, -2)),
  };
  return cs;
}

inline PolyhedralCase make_o2() {
  PolyhedralCase cs;
  cs.label = "O2";
  cs.k_triple = {Rational(2), Rational(4), Rational(3)};
  cs.group_order = 24;
  cs.p0 = HomogeneousBivariatePoly::from_terms(
      12, {{1, "1"}, {3, "11/432"}, {5, "11/3456"}, {7, "-11/165888"},
           {9, "-11/47775744"}, {11, "-1/254803968"}});
  cs.p1 = HomogeneousBivariatePoly::from_terms(
      6, {{0, "1"}, {2, "-5/48"}, {4, "-5/2304"}, {6, "1/110592"}});
  cs.pinf = HomogeneousBivariatePoly::from_terms(
      8, {{0, "1"}, {2, "7/36"}, {4, "-7/3456"}, {6, "7/82944"}, {8, "1/5308416"}});
  cs.rows = {
      row(R("7/24"), R("-1/24"), R("1/2"), SignCase::kI, false,
          fj(R("1/2"), 0), fj(0, R("1/4")), fj(0, 0)),
      row(R("5/24"), R("13/24"), R("1/2"), SignCase::kII, false,
          fj(R("1/2"), -3), fj(0, R("-5/4")), fj(0, -2)),
      row(R("11/24"), R("19/24"), R("3/2"), SignCase::kIII, true,
          fj(R("-11/2"), 0), fj(-3, R("1/4")), fj(-4, 0)),
      // The printed (1-x) exponent of the last entry is -4.
      row(R("25/24"), R("17/24"), R("3/2"), SignCase::kIV, true,
          fj(R("-11/2"), -3), fj(-3, R("-5/4")), fj(-4, -4)),
  };
  return cs;
}

inline PolyhedralCase make_o3() {
  PolyhedralCase cs;
  cs.label = "O3";
  cs.k_triple = {Rational(3), Rational(2), Rational(4)};
  cs.group_order = 24;
  cs.p0 = HomogeneousBivariatePoly::from_terms(8, {{1, "1"}, {4, "-7/256"}, {7, "-1/8192"}});
  cs.p1 = HomogeneousBivariatePoly::from_terms(
      12, {{0, "1"}, {3, "-11/32"}, {9, "-11/262144"}, {12, "-1/67108864"}});
  cs.pinf = HomogeneousBivariatePoly::from_terms(6, {{0, "1"}, {3, "5/64"}, {6, "-1/8192"}});
  cs.rows = {
      row(R("5/24"), R("-1/24"), R("2/3"), SignCase::kI, false,
          fj(R("1/3"), 0), fj(0, R("1/2")), fj(0, 0)),
      row(R("11/24"), R("17/24"), R("2/3"), SignCase::kII, false,
          fj(R("1/3"), -4), fj(0, R("-11/2")), fj(0, -3)),
      row(R("7/24"), R("13/24"), R("4/3"), SignCase::kIII, true,
          fj(R("-7/3"), 0), fj(-4, R("1/2")), fj(-2, 0)),
      row(R("25/24"), R("19/24"), R("4/3"), SignCase::kIV, true,
          fj(R("-7/3"), -4), fj(-4, R("-11/2")), fj(-2, -3)),
  };
  return cs;
}

inline PolyhedralCase make_o4() {
  PolyhedralCase cs;
  cs.label = "O4";
  cs.k_triple = {Rational(3), Rational(4), Rational(2)};
  cs.group_order = 24;
  cs.p0 = HomogeneousBivariatePoly::from_terms(8, {{1, "1"}, {4, "7/256"}, {7, "-1/8192"}});
  cs.p1 = HomogeneousBivariatePoly::from_terms(6, {{0, "1"}, {3, "-5/64"}, {6, "-1/8192"}});
  cs.pinf = HomogeneousBivariatePoly::from_terms(
      12, {{0, "1"}, {3, "11/32"}, {9, "11/262144"}, {12, "-1/67108864"}});
  cs.rows = {
      row(R("11/24"), R("-1/24"), R("2/3"), SignCase::kI, false,
          fj(R("1/3"), 0), fj(0, R("1/4")), fj(0, 0)),
      row(R("5/24"), R("17/24"), R("2/3"), SignCase::kII, false,
          fj(R("1/3"), -2), fj(0, R("-5/4")), fj(0, -3)),
      row(R("7/24"), R("19/24"), R("4/3"), SignCase::kIII, true,
          fj(R("-7/3"), 0), fj(-2, R("1/4")), fj(-4, 0)),
      row(R("25/24"), R("13/24"), R("4/3"), SignCase::kIV, true,
          fj(R("-7/3"), -2), fj(-2, R("-5/4")), fj(-4, -3)),
  };
  return cs;
}

inline PolyhedralCase make_o5() {
  PolyhedralCase cs;
  cs.label = "O5";
  cs.k_triple = {Rational(4), Rational(2), Rational(3)};
  cs.group_order = 24;
  cs.p0 = HomogeneousBivariatePoly::from_terms(6, {{1, "1"}, {5, "-1/108"}});
  cs.p1 = HomogeneousBivariatePoly::from_terms(
      12, {{0, "1"}, {4, "-11/36"}, {8, "-11/3888"}, {12, "1/1259712"}});
  cs.pinf = HomogeneousBivariatePoly::from_terms(8, {{0, "1"}, {4, "7/54"}, {8, "1/11664"}});
  cs.rows = {
      row(R("7/24"), R("-1/24"), R("3/4"), SignCase::kI, false,
          fj(R("1/4"), 0), fj(0, R("1/2")), fj(0, 0)),
      // The printed x exponent of the first entry is 1/2.
      row(R("11/24"), R("19/24"), R("3/4"), SignCase::kII, false,
          fj(R("1/2"), -3), fj(0, R("-11/2")), fj(0, -4)),
      row(R("5/24"), R("13/24"), R("5/4"), SignCase::kIII, true,
          fj(R("-5/4"), 0), fj(-3, R("1/2")), fj(-2, 0)),
      row(R("25/24"), R("17/24"), R("5/4"), SignCase::kIV, true,
          fj(R("-5/4"), -3), fj(-3, R("-11/2")), fj(-2, -4)),
  };
  return cs;
}

inline PolyhedralCase make_o6() {
  PolyhedralCase cs;
  cs.label = "O6";
  cs.k_triple = {Rational(4), Rational(3), Rational(2)};
  cs.group_order = 24;
  cs.p0 = HomogeneousBivariatePoly::from_terms(6, {{1, "1"}, {5, "1/108"}});
  cs.p1 = HomogeneousBivariatePoly::from_terms(8, {{0, "1"}, {4, "-7/54"}, {8, "1/11664"}});
  cs.pinf = HomogeneousBivariatePoly::from_terms(
      12, {{0, "1"}, {4, "11/36"}, {8, "-11/3888"}, {12, "-1/1259712"}});
  cs.rows = {
      row(R("11/24"), R("-1/24"), R("3/4"), SignCase::kI, false,
          fj(R("1/4"), 0), fj(0, R("1/3")), fj(0, 0)),
      row(R("7/24"), R("19/24"), R("3/4"), SignCase::kII, false,
          fj(R("1/4"), -2), fj(0, R("-7/3")), fj(0, -4)),
      row(R("5/24"), R("17/24"), R("5/4"), SignCase::kIII, true,
          fj(R("-5/4"), 0), fj(-2, R("1/3")), fj(-3, 0)),
      row(R("25/24"), R("13/24"), R("5/4"), SignCase::kIV, true,
          fj(R("-5/4"), -2), fj(-2, R("-7/3")), fj(-3, -4)),
  };
  return cs;
}

inline PolyhedralCase make_i1() {
  PolyhedralCase cs;
  cs.label = "I1";
  cs.k_triple = {Rational(2), Rational(3), Rational(5)};
  cs.group_order = 60;
  // P0 as printed: the u^17 v^13 monomial appears twice (the second time
  // written v^13 u^17) and u^15 v^15 is absent. The duplicate terms are
  // accumulated; repairs are the verifier's job.
  cs.p0 = HomogeneousBivariatePoly::from_terms(
      30, {{1, "1"},
           {3, "-29/675"},
           {5, "1769/450000"},
           {7, "29/337500"},
           {9, "667/540000000"},
           {11, "-667/72900000000"},
           {13, "12673/29160000000000"},
           {13, "-12673/524880000000000000"},
           {19, "667/23619600000000000000"},
           {21, "-667/3149280000000000000000"},
           {23, "-29/35429400000000000000000"},
           {25, "-1769/850305600000000000000000000"},
           {27, "29/22958251200000000000000000000"},
           {29, "-1/612220032000000000000000000000"}});
  cs.p1 = HomogeneousBivariatePoly::from_terms(
      20, {{0, "1"},
           {2, "-19/90"},
           {4, "-19/18000"},
           {6, "-19/135000"},
           {8, "-247/162000000"},
           {10, "247/14580000000"},
           {12, "-247/2916000000000"},
           {14, "-19/43740000000000"},
           {16, "-19/104976000000000000"},
           {18, "-19/9447840000000000000"},
           {20, "1/1889568000000000000000"}});
  cs.pinf = HomogeneousBivariatePoly::from_terms(
      12, {{0, "1"},
           {2, "11/150"},
           {4, "-11/6000"},
           {6, "-11/1350000"},
           {8, "-11/108000000"},
           {10, "11/48600000000"},
           {12, "1/5832000000000"}});
  cs.rows = {
      row(R("11/60"), R("-1/60"), R("1/2"), SignCase::kI, false,
          fj(R("1/2"), 0), fj(0, R("1/3")), fj(0, 0)),
      row(R("19/60"), R("31/60"), R("1/2"), SignCase::kII, false,
          fj(R("1/2"), -10), fj(0, R("-19/3")), fj(0, -4)),
      row(R("29/60"), R("41/60"), R("3/2"), SignCase::kIII, true,
          fj(R("-29/2"), 0), fj(-10, R("1/3")), fj(-6, 0)),
      row(R("61/60"), R("49/60"), R("3/2"), SignCase::kIV, true,
          fj(R("-29/2"), -10), fj(-10, R("-19/3")), fj(-6, -4)),
  };
  return cs;
}

inline PolyhedralCase make_i6() {
  PolyhedralCase cs;
  cs.label = "I6";
  cs.k_triple = {Rational(5), Rational(3), Rational(2)};
  cs.group_order = 60;
  cs.p0 = HomogeneousBivariatePoly::from_terms(
      12, {{1, "1"}, {6, "11/1728"}, {11, "-1/2985984"}});
  cs.p1 = HomogeneousBivariatePoly::from_terms(
      20, {{0, "1"}, {5, "-19/144"}, {10, "247/1492992"}, {15, "19/429981696"},
           {20, "1/8916100448256"}});
  cs.pinf = HomogeneousBivariatePoly::from_terms(
      30, {{0, "1"}, {5, "29/96"}, {10, "-3335/995328"}, {20, "-3335/2972033482752"},
           {25, "-29/855945643032576"}, {30, "1/26623333280885243904"}});
  cs.rows = {
      row(R("29/60"), R("-1/60"), R("4/5"), SignCase::kI, false,
          fj(R("1/5"), 0), fj(0, R("1/3")), fj(0, 0)),
      row(R("19/60"), R("49/60"), R("4/5"), SignCase::kII, false,
          fj(R("1/5"), -4), fj(0, R("-19/3")), fj(0, -10)),
      row(R("11/60"), R("41/60"), R("6/5"), SignCase::kIII, true,
          fj(R("-11/5"), 0), fj(-4, R("1/3")), fj(-6, 0)),
      row(R("61/60"), R("31/60"), R("6/5"), SignCase::kIV, true,
          fj(R("-11/5"), -4), fj(-4, R("-19/3")), fj(-6, -10)),
  };
  return cs;
}

inline PolyhedralCase make_t4() {
  PolyhedralCase cs;
  cs.label = "T4";
  cs.k_triple = {Rational(3), Rational(3), rational(3, 2)};
  cs.p0 = HomogeneousBivariatePoly::from_terms(4, {{1, "1"}, {4, "-1/16"}});
  cs.p1 = HomogeneousBivariatePoly::from_terms(6, {{0, "1"}, {3, "-5/4"}, {6, "-1/32"}});
  cs.pinf = HomogeneousBivariatePoly::from_terms(4, {{0, "1"}, {3, "1/2"}});
  cs.rows = {
      row(R("1/2"), R("-1/6"), R("2/3"), SignCase::kI, false,
          fj(R("1/3"), R("1/3")), fj(0, 0, one_minus_2x()), fj(0, 0)),
      row(R("1/6"), R("5/6"), R("2/3"), SignCase::kII, false,
          fj(R("1/3"), -1), fj(0, -2, one_minus_2x()), fj(0, R("-4/3"))),
      row(R("1/6"), R("5/6"), R("4/3"), SignCase::kIII, true,
          fj(-1, R("1/3")), fj(-2, 0, one_minus_2x()), fj(R("-4/3"), 0)),
      row(R("7/6"), R("1/2"), R("4/3"), SignCase::kIV, true,
          fj(-1, -1), fj(-2, -2, one_minus_2x()), fj(R("-4/3"), R("-4/3"))),
  };
  return cs;
}

inline PolyhedralCase make_t5() {
  PolyhedralCase cs;
  cs.label = "T5";
  cs.k_triple = {Rational(3), rational(3, 2), Rational(3)};
  cs.p0 = HomogeneousBivariatePoly::from_terms(4, {{1, "1"}, {4, "1/16"}});
  cs.p1 = HomogeneousBivariatePoly::from_terms(4, {{0, "1"}, {3, "-1/2"}});
  cs.pinf = HomogeneousBivariatePoly::from_terms(6, {{0, "1"}, {3, "5/4"}, {6, "-1/32"}});
  cs.rows = {
      row(R("1/6"), R("-1/6"), R("2/3"), SignCase::kI, false,
          fj(R("1/3"), 0), fj(0, R("2/3")), fj(0, 0, one_plus_x())),
      row(R("1/2"), R("5/6"), R("2/3"), SignCase::kII, false,
          fj(R("1/3"), R("-8/3")), fj(0, -2), fj(0, -4, one_plus_x())),
      row(R("1/6"), R("1/2"), R("4/3"), SignCase::kIII, true,
          fj(-1, 0), fj(R("-4/3"), R("2/3")), fj(-2, 0, one_plus_x())),
      row(R("7/6"), R("5/6"), R("4/3"), SignCase::kIV, true,
          fj(-1, R("-8/3")), fj(R("-4/3"), -2), fj(-2, -4, one_plus_x())),
  };
  // The printed header of the third row repeats the fourth row's (a,b,c),
  // which has the wrong mu signs for its own data. The parameters here are
  // rebuilt from sign pattern iii and the k-triple.
  cs.rows[2].printed_params = HGParams{R("7/6"), R("5/6"), R("4/3")};
  return cs;
}

inline PolyhedralCase make_t6() {
  PolyhedralCase cs;
  cs.label = "T6";
  cs.k_triple = {rational(3, 2), Rational(3), Rational(3)};
  cs.p0 = HomogeneousBivariatePoly::from_terms(4, {{1, "1"}, {4, "1/256"}});
  cs.p1 = HomogeneousBivariatePoly::from_terms(4, {{0, "1"}, {3, "-1/32"}});
  cs.pinf = HomogeneousBivariatePoly::from_terms(6, {{0, "1"}, {3, "5/64"}, {6, "-1/8192"}});
  cs.rows = {
      row(R("1/6"), R("-1/6"), R("1/3"), SignCase::kI, false,
          fj(R("2/3"), 0), fj(0, R("1/3")), fj(0, 0, one_minus_half_x())),
      row(R("1/6"), R("1/2"), R("1/3"), SignCase::kII, false,
          fj(R("2/3"), R("-4/3")), fj(0, -1), fj(0, -2, one_minus_half_x())),
      row(R("1/2"), R("5/6"), R("5/3"), SignCase::kIII, true,
          fj(-2, 0), fj(R("-8/3"), R("1/3")), fj(-4, 0, one_minus_half_x())),
      row(R("7/6"), R("5/6"), R("5/3"), SignCase::kIV, true,
          fj(-2, R("-4/3")), fj(R("-8/3"), -1), fj(-4, -2, one_minus_half_x())),
  };
  return cs;
}

inline PolyhedralCase make_o7() {
  PolyhedralCase cs;
  cs.label = "O7";
  cs.k_triple = {Rational(4), Rational(4), rational(3, 2)};
  cs.p0 = HomogeneousBivariatePoly::from_terms(6, {{1, "1"}, {5, "-1/27"}});
  cs.p1 = HomogeneousBivariatePoly::from_terms(
      12, {{0, "1"}, {4, "-11/9"}, {8, "-11/243"}, {12, "1/19683"}});
  cs.pinf = HomogeneousBivariatePoly::from_terms(8, {{0, "1"}, {4, "14/27"}, {8, "1/729"}});
  cs.rows = {
      row(R("7/12"), R("-1/12"), R("3/4"), SignCase::kI, false,
          fj(R("1/4"), R("1/4")), fj(0, 0, one_minus_2x()), fj(0, 0)),
      row(R("1/6"), R("5/6"), R("3/4"), SignCase::kII, false,
          fj(R("1/4"), R("-5/4")), fj(0, -3, one_minus_2x()), fj(0, -2)),
      row(R("1/6"), R("5/6"), R("5/4"), SignCase::kIII, true,
          fj(R("-5/4"), R("1/4")), fj(-3, 0, one_minus_2x()), fj(-2, 0)),
      // The last entry is printed with a (1 - x/2) factor.
      row(R("13/12"), R("5/12"), R("5/4"), SignCase::kIV, true,
          fj(R("-5/4"), R("-5/4")), fj(-3, -3, one_minus_2x()),
          fj(-2, -2, one_minus_half_x())),
  };
  return cs;
}

inline PolyhedralCase make_o8() {
  PolyhedralCase cs;
  cs.label = "O8";
  cs.k_triple = {Rational(4), rational(3, 2), Rational(4)};
  cs.p0 = HomogeneousBivariatePoly::from_terms(6, {{1, "1"}, {5, "1/27"}});
  cs.p1 = HomogeneousBivariatePoly::from_terms(
      12, {{0, "1"}, {4, "11/9"}, {8, "-11/243"}, {12, "-1/19683"}});
  cs.pinf = HomogeneousBivariatePoly::from_terms(8, {{0, "1"}, {4, "-14/27"}, {8, "1/729"}});
  cs.rows = {
      row(R("1/6"), R("-1/12"), R("3/4"), SignCase::kI, false,
          fj(R("1/4"), 0), fj(0, R("2/3")), fj(0, 0, one_plus_x())),
      row(R("7/12"), R("5/6"), R("3/4"), SignCase::kII, false,
          fj(R("1/4"), -4), fj(0, R("-14/3")), fj(0, -8, one_plus_x())),
      row(R("1/6"), R("5/12"), R("5/4"), SignCase::kIII, true,
          fj(R("-5/4"), 0), fj(-2, R("2/3")), fj(-3, 0, one_plus_x())),
      row(R("13/12"), R("5/6"), R("5/4"), SignCase::kIV, true,
          fj(R("-5/4"), -4), fj(-2, R("-14/3")), fj(-3, -8, one_plus_x())),
  };
  return cs;
}

inline PolyhedralCase make_o9() {
  PolyhedralCase cs;
  cs.label = "O9";
  cs.k_triple = {rational(3, 2), Rational(4), Rational(4)};
  cs.p0 = HomogeneousBivariatePoly::from_terms(
      8, {{1, "1"}, {4, "7/1024"}, {7, "-1/131072"}});
  cs.p1 = HomogeneousBivariatePoly::from_terms(
      6, {{0, "1"}, {3, "-5/256"}, {6, "-1/131072"}});
  cs.pinf = HomogeneousBivariatePoly::from_terms(
      12, {{0, "1"}, {3, "11/128"}, {9, "11/16777216"}, {12, "-1/17179869184"}});
  cs.rows = {
      row(R("1/6"), R("-1/12"), R("1/3"), SignCase::kI, false,
          fj(R("2/3"), 0), fj(0, R("1/4")), fj(0, 0, one_minus_half_x())),
      row(R("1/6"), R("5/12"), R("1/3"), SignCase::kII, false,
          fj(R("2/3"), -2), fj(0, R("-5/4")), fj(0, -3, one_minus_half_x())),
      row(R("7/12"), R("5/6"), R("5/3"), SignCase::kIII, true,
          fj(R("-14/3"), 0), fj(-4, R("1/4")), fj(-8, 0, one_minus_half_x())),
      row(R("13/12"), R("5/6"), R("5/3"), SignCase::kIV, true,
          fj(R("-14/3"), -2), fj(-4, R("-5/4")), fj(-8, -3, one_minus_half_x())),
  };
  return cs;
}

inline PolyhedralCase make_i7() {
  PolyhedralCase cs;
  cs.label = "I7";
  cs.k_triple = {Rational(3), Rational(3), rational(5, 2)};
  cs.p0 = HomogeneousBivariatePoly::from_terms(
      20, {{1, "1"},
           {4, "-57/400"},
           {7, "-57/25000"},
           {10, "-247/2500000"},
           {13, "57/312500000"},
           {16, "-57/62500000000"},
           {19, "-1/1953125000000"}});
  cs.p1 = HomogeneousBivariatePoly::from_terms(
      30, {{0, "1"},
           {3, "-29/20"},
           {6, "783/20000"},
           {9, "-2001/500000"},
           {12, "-38019/250000000"},
           {18, "-38019/3125000000000"},
           {21, "2001/78125000000000"},
           {24, "783/39062500000000000"},
           {27, "29/488281250000000000"},
           {30, "1/305175781250000000000"}});
  cs.pinf = HomogeneousBivariatePoly::from_terms(
      12, {{0, "1"}, {3, "11/50"}, {6, "-3/12500"}, {9, "-11/625000"}, {12, "1/156250000"}});
  cs.rows = {
      row(R("11/30"), R("-1/30"), R("2/3"), SignCase::kI, false,
          fj(R("1/3"), R("1/3")), fj(0, 0, one_minus_2x()), fj(0, 0)),
      row(R("7/10"), R("3/10"), R("2/3"), SignCase::kII, false,
          fj(R("1/3"), R("-19/3")), fj(0, -10, one_minus_2x()), fj(0, -4)),
      row(R("7/10"), R("3/10"), R("4/3"), SignCase::kIII, true,
          fj(R("-19/3"), R("1/3")), fj(-10, 0, one_minus_2x()), fj(-4, 0)),
      row(R("31/30"), R("19/30"), R("4/3"), SignCase::kIV, true,
          fj(R("-19/3"), R("-19/3")), fj(-10, -10, one_minus_2x()), fj(-4, -4)),
  };
  return cs;
}

inline PolyhedralCase make_i8() {
  PolyhedralCase cs;
  cs.label = "I8";
  cs.k_triple = {Rational(5), Rational(5), rational(3, 2)};
  cs.p0 = HomogeneousBivariatePoly::from_terms(
      12, {{1, "1"}, {6, "-11/432"}, {11, "-1/186624"}});
  cs.p1 = HomogeneousBivariatePoly::from_terms(
      30, {{0, "1"},
           {5, "-29/24"},
           {10, "-3335/62208"},
           {20, "-3335/11609505792"},
           {25, "29/835884417024"},
           {30, "1/649983722678624"}});
  cs.pinf = HomogeneousBivariatePoly::from_terms(
      20, {{0, "1"}, {5, "19/36"}, {10, "247/93312"}, {15, "-19/6718464"},
           {20, "1/3482851767"}});
  cs.rows = {
      row(R("19/30"), R("-1/30"), R("4/5"), SignCase::kI, false,
          fj(R("1/5"), R("1/5")), fj(0, 0, one_minus_2x()), fj(0, 0)),
      row(R("1/6"), R("5/6"), R("4/5"), SignCase::kII, false,
          fj(R("1/5"), R("-11/5")), fj(0, -6, one_minus_2x()), fj(0, -4)),
      row(R("1/6"), R("5/6"), R("6/5"), SignCase::kIII, true,
          fj(R("-11/5"), R("1/5")), fj(-6, 0, one_minus_2x()), fj(-4, 0)),
      row(R("31/30"), R("11/30"), R("6/5"), SignCase::kIV, true,
          fj(R("-11/5"), R("-11/5")), fj(-6, -6, one_minus_2x()), fj(-4, -4)),
  };
  return cs;
}

}  // namespace catalog_detail

inline std::vector<std::string> case_labels() {
  return {"D1", "D2", "D3", "T1", "T2", "T3", "O1", "O2", "O3", "O4",
          "O5", "O6", "I1", "I6", "T4", "T5", "T6", "O7", "O8", "O9",
          "I7", "I8"};
}

inline bool is_dihedral_label(const std::string& label) {
  return label == "D1" || label == "D2" || label == "D3";
}

inline PolyhedralCase make_case(const std::string& label, int dihedral_n = 0) {
  using namespace catalog_detail;
  if (label == "D1") return make_d1(dihedral_n);
  if (label == "D2") return make_d2(dihedral_n);
  if (label == "D3") return make_d3(dihedral_n);
  if (label == "T1") return make_t1();
  if (label == "T2") return make_t2();
  if (label == "T3") return make_t3();
  if (label == "O1") return make_o1();
  if (label == "O2") return make_o2();
  if (label == "O3") return make_o3();
  if (label == "O4") return make_o4();
  if (label == "O5") return make_o5();
  if (label == "O6") return make_o6();
  if (label == "I1") return make_i1();
  if (label == "I6") return make_i6();
  if (label == "T4") return make_t4();
  if (label == "T5") return make_t5();
  if (label == "T6") return make_t6();
  if (label == "O7") return make_o7();
  if (label == "O8") return make_o8();
  if (label == "O9") return make_o9();
  if (label == "I7") return make_i7();
  if (label == "I8") return make_i8();
  throw std::invalid_argument("unknown case label '" + label + "'");
}

// Full transcription; the dihedral families are instantiated at n.
inline std::vector<PolyhedralCase> catalog(int dihedral_n) {
  std::vector<PolyhedralCase> cs;
  for (const auto& label : case_labels()) {
    cs.push_back(make_case(label, is_dihedral_label(label) ? dihedral_n : 0));
  }
  return cs;
}

// P0^k0 + P1^k1 - Pinf^kinf as a bivariate polynomial identity. Only the
// integer-triple section has a polynomial syzygy.
inline bool syzygy_check(const PolyhedralCase& cs) {
  for (const auto& k : cs.k_triple) {
    if (!is_natural(k)) {
      throw NonIntegerExponent("syzygy_check: " + cs.label + " has fractional k-triple entry " +
                               to_string(k));
    }
  }
  const HomogeneousBivariatePoly lhs = cs.p0.pow(to_long(cs.k_triple[0])) +
                                       cs.p1.pow(to_long(cs.k_triple[1])) -
                                       cs.pinf.pow(to_long(cs.k_triple[2]));
  return lhs.is_zero();
}

enum class FitStatus { kFitted, kInconsistent, kUnderdetermined };

struct FitResult {
  FitStatus status;
  HomogeneousBivariatePoly poly{0};
};

// Solves sum_k c_k u^(d-k) v^k = target through the shared truncation by
// exact elimination, one equation per representable t-exponent.
inline FitResult fit_invariant(long degree, const PuiseuxSeries& target,
                               const PuiseuxSeries& u, const PuiseuxSeries& v) {
  const long base = lcm_long(lcm_long(u.base(), v.base()), target.base());
  const PuiseuxSeries uu = u.rebased(base);
  const PuiseuxSeries vv = v.rebased(base);
  const PuiseuxSeries tt = target.rebased(base);

  const auto u_pows = HomogeneousBivariatePoly::powers(uu, degree);
  const auto v_pows = HomogeneousBivariatePoly::powers(vv, degree);
  std::vector<PuiseuxSeries> monomials;
  monomials.reserve(static_cast<std::size_t>(degree) + 1);
  Order top = tt.order();
  long long lo = tt.is_zero() ? 0 : tt.leading_t_exponent();
  for (long k = 0; k <= degree; ++k) {
    PuiseuxSeries m = u_pows[static_cast<std::size_t>(degree - k)] *
                      v_pows[static_cast<std::size_t>(k)];
    top = order_min(top, m.order());
    if (!m.is_zero()) lo = std::min(lo, m.leading_t_exponent());
    monomials.push_back(std::move(m));
  }
  if (order_is_unbounded(top)) {
    throw std::invalid_argument("fit_invariant: all inputs exact; nothing constrains the fit");
  }
  if (top < lo) return {FitStatus::kUnderdetermined, HomogeneousBivariatePoly(degree)};

  LinearSystem sys;
  const std::size_t rows = static_cast<std::size_t>(top - lo + 1);
  sys.matrix.reserve(rows);
  sys.rhs.reserve(rows);
  for (long long e = lo; e <= top; ++e) {
    std::vector<Rational> eq;
    eq.reserve(static_cast<std::size_t>(degree) + 1);
    for (long k = 0; k <= degree; ++k) {
      eq.push_back(monomials[static_cast<std::size_t>(k)].coefficient_t(e));
    }
    sys.matrix.push_back(std::move(eq));
    sys.rhs.push_back(tt.coefficient_t(e));
  }
  SolveResult res = solve_exact(std::move(sys));
  switch (res.status) {
    case SolveStatus::kUnique:
      return {FitStatus::kFitted, HomogeneousBivariatePoly::from_coefficients(res.solution)};
    case SolveStatus::kInconsistent:
      return {FitStatus::kInconsistent, HomogeneousBivariatePoly(degree)};
    case SolveStatus::kUnderdetermined:
      return {FitStatus::kUnderdetermined, HomogeneousBivariatePoly(degree)};
  }
  throw std::logic_error("unreachable");
}

}  // namespace schwarzmap
