// Copyright 2026 The seuclid Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <complex>
#include <memory>
#include <vector>

#include "seuclid/interval.hpp"
#include "seuclid/matrix.hpp"
#include "seuclid/numeric.hpp"
#include "seuclid/polynomial.hpp"

namespace seuclid {

// An element of K given by exact rational coordinates with respect to the
// integral basis of its field. Addition and scaling are coordinate-wise and
// need no field; products go through NumberField::mul.
struct FieldElement {
  std::vector<Rational> coords;

  FieldElement() = default;
  explicit FieldElement(std::vector<Rational> c) : coords(std::move(c)) {}

  std::size_t size() const { return coords.size(); }
  bool is_zero() const;
  bool is_integral() const;  // all coordinates in Z, i.e. the element lies in O
  Integer denominator() const;  // least d > 0 with d * x in O

  friend FieldElement operator+(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator-(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator-(const FieldElement& a);
  friend FieldElement operator*(const Rational& s, const FieldElement& a);
  friend bool operator==(const FieldElement& a, const FieldElement& b) { return a.coords == b.coords; }
  friend bool operator<(const FieldElement& a, const FieldElement& b) { return a.coords < b.coords; }
};

std::string to_string(const FieldElement& x);

// Certified enclosures of the archimedean embeddings of an element: one
// interval per real embedding and one rectangle per complex embedding (the
// representative with positive imaginary part).
struct EmbeddingBox {
  std::vector<Interval> real;
  std::vector<ComplexInterval> complex;
  Rational precision;

  Rational max_width() const;
  bool contains(const EmbeddingBox& other) const;
};

struct Signature {
  int r1 = 0;
  int r2 = 0;
  friend bool operator==(const Signature&, const Signature&) = default;
};

class NumberField {
 public:
  // Monic integer polynomial, coefficients lowest degree first.
  static NumberField make(const ZPoly& coeffs);

  int degree() const;
  Signature signature() const;
  const Integer& discriminant() const;
  const Integer& index() const;  // [O : Z[theta]]
  const ZPoly& polynomial() const;
  // Column j holds omega_j in power-basis coordinates; omega_0 = 1.
  const RatMatrix& integral_basis() const;
  const IntMatrix& trace_form() const;  // Tr(omega_i omega_j)
  int archimedean_places() const { return signature().r1 + signature().r2; }

  FieldElement zero() const;
  FieldElement one() const;
  FieldElement from_rational(const Rational& q) const;
  FieldElement from_power_basis(const std::vector<Rational>& c) const;
  std::vector<Rational> to_power_basis(const FieldElement& x) const;
  FieldElement theta() const;

  FieldElement mul(const FieldElement& a, const FieldElement& b) const;
  FieldElement inv(const FieldElement& a) const;
  FieldElement div(const FieldElement& a, const FieldElement& b) const { return mul(a, inv(b)); }
  FieldElement pow(const FieldElement& a, long e) const;
  // Column j = coordinates of a * omega_j.
  RatMatrix mult_matrix(const FieldElement& a) const;
  Rational norm(const FieldElement& a) const;
  Rational trace(const FieldElement& a) const;
  QPoly char_poly(const FieldElement& a) const;
  // Nontrivial automorphism; degree 2 only.
  FieldElement conjugate(const FieldElement& a) const;
  // Coordinates of omega_i * omega_j.
  const std::vector<Integer>& table(std::size_t i, std::size_t j) const;

  // Certified embeddings, every width <= precision. Boxes for a smaller
  // precision are nested inside boxes for a larger one.
  EmbeddingBox embed(const FieldElement& x, const Rational& precision) const;
  // Floating-point embeddings: r1 real values followed by the r2 complex
  // embeddings with positive imaginary part.
  std::vector<std::complex<double>> embed_double(const FieldElement& x) const;
  // Real Minkowski coordinates: real embeddings, then (Re, Im) pairs.
  std::vector<double> minkowski_double(const FieldElement& x) const;

  friend bool operator==(const NumberField& a, const NumberField& b) { return a.data_ == b.data_; }

 private:
  struct Data;
  std::shared_ptr<const Data> data_;
};

// make_field as a free function mirroring the command-line vocabulary.
inline NumberField make_field(const ZPoly& coeffs) { return NumberField::make(coeffs); }

}  // namespace seuclid
