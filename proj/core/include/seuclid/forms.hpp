// Copyright 2026 The seuclid Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "seuclid/minima.hpp"

namespace seuclid {

// f(x, y) = a x^2 + b x y + c y^2.
struct BinaryQuadraticForm {
  Integer a, b, c;

  Integer discriminant() const { return b * b - 4 * a * c; }
  Integer content() const;
  bool is_primitive() const { return content() == 1; }
  Rational operator()(const Rational& x, const Rational& y) const { return a * x * x + b * x * y + c * y * y; }
  friend bool operator==(const BinaryQuadraticForm&, const BinaryQuadraticForm&) = default;
};

std::string to_string(const BinaryQuadraticForm& f);

bool is_fundamental_discriminant(const Integer& d);

// f(x, y) = N(x alpha_1 + y alpha_2) / N(a) for a Z-basis of an integral ideal
// of a quadratic field.
BinaryQuadraticForm form_from_ideal(const FractionalIdeal& a, const std::array<FieldElement, 2>& basis);

std::pair<Integer, bool> form_disc_primitive(const BinaryQuadraticForm& f);

using RationalPoint = std::array<Rational, 2>;

// m_f(P) = min over Q in Z^2 of |f(P - Q)|.
Rational m_form(const BinaryQuadraticForm& f, const RationalPoint& p);

// Same value through the ideal dictionary: K = Q(sqrt(disc)), ideal Z a + Z theta.
// Requires a fundamental discriminant after removing the content.
Rational m_form_via_ideal(const BinaryQuadraticForm& f, const RationalPoint& p);

// min |f(P - Q)| over Q with |Q_i - P_i| <= radius; an upper bound on m_f.
Rational m_form_box(const BinaryQuadraticForm& f, const RationalPoint& p, long radius);

struct ConsistencyRow {
  RationalPoint p;
  Rational ideal_value;
  Rational box_value;
  bool agree = false;
};

struct BsdReport {
  Rational lower;  // max of m_f over the grid
  RationalPoint candidate;
  Integer denom_bound;
  std::vector<ConsistencyRow> rows;
};

// Explores the rational grid of denominators <= denom_bound for the largest m_f
// and cross-checks the ideal route against bounded direct enumeration on
// `sample_count` pseudo-random points.
BsdReport bsd_check(const BinaryQuadraticForm& f, const Integer& denom_bound, std::size_t sample_count,
                    std::uint64_t seed = 1);

}  // namespace seuclid
