// Copyright 2026 The seuclid Authors
// SPDX-License-Identifier: Apache-2.0

#include "seuclid/ideal.hpp"

namespace seuclid {

FractionalIdeal::FractionalIdeal(NumberField k, IntMatrix h, Integer d)
    : field_(std::move(k)), hnf_(std::move(h)), den_(std::move(d)) {}

FractionalIdeal FractionalIdeal::from_columns(const NumberField& k,
                                              const std::vector<std::vector<Rational>>& cols) {
  const std::size_t n = k.degree();
  Integer den = 1;
  bool nonzero = false;
  for (const auto& c : cols)
    for (const auto& q : c) {
      den = lcm(den, q.get_den());
      if (q != 0) nonzero = true;
    }
  if (!nonzero) throw Error(Errc::ZeroIdeal, "all generators are zero");
  IntMatrix m(n, cols.size());
  for (std::size_t j = 0; j < cols.size(); ++j)
    for (std::size_t i = 0; i < n; ++i) m(i, j) = Rational(cols[j][i] * den).get_num();
  IntMatrix h = hnf_basis(m);
  Integer g = den;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) g = gcd(g, h(i, j));
  if (g != 1) {
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) h(i, j) /= g;
    den /= g;
  }
  return FractionalIdeal(k, std::move(h), std::move(den));
}

FractionalIdeal FractionalIdeal::from_gens(const NumberField& k, const std::vector<FieldElement>& gens) {
  std::vector<std::vector<Rational>> cols;
  const int n = k.degree();
  for (const auto& g : gens) {
    if (g.is_zero()) continue;
    RatMatrix m = k.mult_matrix(g);
    for (int j = 0; j < n; ++j) cols.push_back(m.column(j));
  }
  if (cols.empty()) throw Error(Errc::ZeroIdeal, "all generators are zero");
  return from_columns(k, cols);
}

FractionalIdeal FractionalIdeal::from_lattice_gens(const NumberField& k, const std::vector<FieldElement>& gens) {
  std::vector<std::vector<Rational>> cols;
  for (const auto& g : gens) cols.push_back(g.coords);
  return from_columns(k, cols);
}

FractionalIdeal FractionalIdeal::unit(const NumberField& k) {
  return FractionalIdeal(k, IntMatrix::identity(k.degree()), Integer(1));
}

FieldElement FractionalIdeal::basis(std::size_t j) const {
  std::vector<Rational> c(hnf_.rows());
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = make_rational(hnf_(i, j), den_);
  return FieldElement(std::move(c));
}

std::vector<FieldElement> FractionalIdeal::basis() const {
  std::vector<FieldElement> out;
  for (std::size_t j = 0; j < hnf_.cols(); ++j) out.push_back(basis(j));
  return out;
}

std::vector<Rational> FractionalIdeal::coordinates(const FieldElement& x) const {
  // Back substitution in the upper triangular H: H y = d x.
  const std::size_t n = hnf_.rows();
  std::vector<Rational> rhs(n), y(n);
  for (std::size_t i = 0; i < n; ++i) rhs[i] = x.coords[i] * Rational(den_);
  for (std::size_t i = n; i-- > 0;) {
    Rational s = rhs[i];
    for (std::size_t j = i + 1; j < n; ++j) s -= Rational(hnf_(i, j)) * y[j];
    y[i] = s / Rational(hnf_(i, i));
  }
  return y;
}

bool FractionalIdeal::contains(const FieldElement& x) const {
  for (const auto& c : coordinates(x))
    if (c.get_den() != 1) return false;
  return true;
}

bool FractionalIdeal::is_unit_ideal() const { return den_ == 1 && hnf_ == IntMatrix::identity(hnf_.rows()); }

Rational FractionalIdeal::norm() const {
  Integer det = 1;
  for (std::size_t i = 0; i < hnf_.rows(); ++i) det *= hnf_(i, i);
  return make_rational(det, pow_z(den_, hnf_.rows()));
}

FractionalIdeal FractionalIdeal::operator*(const FractionalIdeal& o) const {
  std::vector<FieldElement> gens;
  auto a = basis(), b = o.basis();
  for (const auto& x : a)
    for (const auto& y : b) gens.push_back(field_.mul(x, y));
  return from_lattice_gens(field_, gens);
}

FractionalIdeal FractionalIdeal::operator+(const FractionalIdeal& o) const {
  auto gens = basis();
  for (const auto& y : o.basis()) gens.push_back(y);
  return from_lattice_gens(field_, gens);
}

FractionalIdeal FractionalIdeal::scaled(const Rational& q) const {
  if (q == 0) throw Error(Errc::ZeroIdeal, "scaling by zero");
  std::vector<FieldElement> gens;
  for (const auto& x : basis()) gens.push_back(abs_q(q) * x);
  return from_lattice_gens(field_, gens);
}

FractionalIdeal FractionalIdeal::times(const FieldElement& x) const {
  if (x.is_zero()) throw Error(Errc::ZeroIdeal, "multiplying by zero");
  std::vector<FieldElement> gens;
  for (const auto& b : basis()) gens.push_back(field_.mul(x, b));
  return from_lattice_gens(field_, gens);
}

FractionalIdeal FractionalIdeal::pow(long e) const {
  FractionalIdeal base = e < 0 ? inverse() : *this;
  unsigned long k = static_cast<unsigned long>(e < 0 ? -e : e);
  FractionalIdeal r = unit(field_);
  while (k) {
    if (k & 1) r = r * base;
    k >>= 1;
    if (k) base = base * base;
  }
  return r;
}

FractionalIdeal FractionalIdeal::trace_dual() const {
  // Dual basis C with C^T T B = I, i.e. C = ((T B)^{-1})^T.
  const std::size_t n = hnf_.rows();
  RatMatrix b(n, n);
  for (std::size_t j = 0; j < n; ++j) b.set_column(j, basis(j).coords);
  RatMatrix tb = to_rational(field_.trace_form()) * b;
  RatMatrix c = seuclid::inverse(tb)->transpose();
  std::vector<std::vector<Rational>> cols;
  for (std::size_t j = 0; j < n; ++j) cols.push_back(c.column(j));
  return from_columns(field_, cols);
}

FractionalIdeal FractionalIdeal::intersect(const FractionalIdeal& o) const {
  return (trace_dual() + o.trace_dual()).trace_dual();
}

FractionalIdeal FractionalIdeal::conjugate() const {
  std::vector<FieldElement> gens;
  for (const auto& x : basis()) gens.push_back(field_.conjugate(x));
  return from_lattice_gens(field_, gens);
}

FractionalIdeal FractionalIdeal::inverse_via_conjugate() const { return conjugate().scaled(1 / norm()); }

FractionalIdeal FractionalIdeal::inverse_via_trace_dual() const {
  return (*this * inverse_different(field_)).trace_dual();
}

FractionalIdeal FractionalIdeal::inverse() const {
  if (field_.degree() == 2) return inverse_via_conjugate();
  return inverse_via_trace_dual();
}

FractionalIdeal inverse_different(const NumberField& k) { return FractionalIdeal::unit(k).trace_dual(); }

std::pair<FieldElement, FieldElement> split_sum(const FieldElement& x, const FractionalIdeal& i,
                                                const FractionalIdeal& j) {
  const std::size_t n = i.degree();
  const Integer l = lcm(i.denominator(), j.denominator());
  // Key rows: the 2n generators of I + J scaled by l; below them an identity
  // block records how each HNF column combines the generators.
  IntMatrix m(3 * n, 2 * n);
  for (std::size_t c = 0; c < n; ++c)
    for (std::size_t r = 0; r < n; ++r) {
      m(r, c) = i.hnf()(r, c) * (l / i.denominator());
      m(r, n + c) = j.hnf()(r, c) * (l / j.denominator());
    }
  for (std::size_t c = 0; c < 2 * n; ++c) m(n + c, c) = 1;
  IntMatrix h = column_hnf_augmented(m, n);
  std::vector<Integer> y(n);
  for (std::size_t r = n; r-- > 0;) {
    Rational s = x.coords[r] * Rational(l);
    if (s.get_den() != 1) throw Error(Errc::InvalidArgument, "element not in I + J");
    Integer acc = s.get_num();
    for (std::size_t c = r + 1; c < n; ++c) acc -= h(r, n + c) * y[c];
    if (acc % h(r, n + r) != 0) throw Error(Errc::InvalidArgument, "element not in I + J");
    y[r] = acc / h(r, n + r);
  }
  // Coefficients on the original generators.
  FieldElement xi{std::vector<Rational>(n)};
  for (std::size_t g = 0; g < n; ++g) {
    Integer coef = 0;
    for (std::size_t c = 0; c < n; ++c) coef += h(n + g, n + c) * y[c];
    if (coef != 0) xi = xi + Rational(coef) * i.basis(g);
  }
  return {xi, x - xi};
}

}  // namespace seuclid
