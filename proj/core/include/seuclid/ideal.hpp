// Copyright 2026 The seuclid Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <utility>
#include <vector>

#include "seuclid/field.hpp"

namespace seuclid {

// Fractional ideal (1/d) * H where the columns of the n x n integer matrix H
// (column HNF, upper triangular, positive pivots, entries right of a pivot
// reduced into [0, pivot)) give coordinates w.r.t. the integral basis.
// Canonical: gcd(content(H), d) = 1, so equal ideals compare equal.
class FractionalIdeal {
 public:
  FractionalIdeal() = default;

  // O-module generated by gens.
  static FractionalIdeal from_gens(const NumberField& k, const std::vector<FieldElement>& gens);
  // Z-lattice spanned by gens, which the caller asserts is an O-module.
  static FractionalIdeal from_lattice_gens(const NumberField& k, const std::vector<FieldElement>& gens);
  static FractionalIdeal principal(const NumberField& k, const FieldElement& x) { return from_gens(k, {x}); }
  static FractionalIdeal unit(const NumberField& k);

  const NumberField& field() const { return field_; }
  const IntMatrix& hnf() const { return hnf_; }
  const Integer& denominator() const { return den_; }
  int degree() const { return field_.degree(); }

  FieldElement basis(std::size_t j) const;
  std::vector<FieldElement> basis() const;
  // Coordinates of x w.r.t. basis(); integral iff x lies in the ideal.
  std::vector<Rational> coordinates(const FieldElement& x) const;
  bool contains(const FieldElement& x) const;
  bool is_integral() const { return den_ == 1; }
  bool is_unit_ideal() const;

  // det(H) / d^n
  Rational norm() const;

  FractionalIdeal operator*(const FractionalIdeal& o) const;
  FractionalIdeal operator+(const FractionalIdeal& o) const;
  FractionalIdeal scaled(const Rational& q) const;
  FractionalIdeal times(const FieldElement& x) const;
  FractionalIdeal pow(long e) const;
  FractionalIdeal intersect(const FractionalIdeal& o) const;

  // Quadratic fields use conj(I)/N(I); other degrees the trace-dual route.
  FractionalIdeal inverse() const;
  FractionalIdeal inverse_via_trace_dual() const;
  FractionalIdeal inverse_via_conjugate() const;
  FractionalIdeal conjugate() const;

  // {x : Tr(x I) subset Z}
  FractionalIdeal trace_dual() const;

  friend bool operator==(const FractionalIdeal& a, const FractionalIdeal& b) {
    return a.hnf_ == b.hnf_ && a.den_ == b.den_;
  }

 private:
  FractionalIdeal(NumberField k, IntMatrix h, Integer d);
  static FractionalIdeal from_columns(const NumberField& k, const std::vector<std::vector<Rational>>& cols);

  NumberField field_;
  IntMatrix hnf_;
  Integer den_ = 1;
};

// Inverse different D^{-1}, the trace dual of O.
FractionalIdeal inverse_different(const NumberField& k);

// Writes x = i + j with i in I and j in J; throws InvalidArgument when x is
// not in I + J.
std::pair<FieldElement, FieldElement> split_sum(const FieldElement& x, const FractionalIdeal& i,
                                                const FractionalIdeal& j);

}  // namespace seuclid
