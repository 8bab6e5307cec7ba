// Copyright 2026 The seuclid Authors
// SPDX-License-Identifier: Apache-2.0

#include "seuclid/forms.hpp"

#include <cmath>
#include <memory>
#include <random>

namespace seuclid {

Integer BinaryQuadraticForm::content() const { return gcd(gcd(a, b), c); }

std::string to_string(const BinaryQuadraticForm& f) {
  return "[" + f.a.get_str() + ", " + f.b.get_str() + ", " + f.c.get_str() + "]";
}

bool is_fundamental_discriminant(const Integer& d) {
  if (d == 0 || d == 1) return false;
  auto squarefree = [](const Integer& m) {
    for (const auto& [p, e] : factor_integer(abs(m)))
      if (e > 1) return false;
    return true;
  };
  Integer r4 = d % 4;
  if (r4 < 0) r4 += 4;
  if (r4 == 1) return squarefree(d);
  if (r4 != 0) return false;
  Integer m = d / 4;
  Integer r = m % 4;
  if (r < 0) r += 4;
  return (r == 2 || r == 3) && squarefree(m);
}

BinaryQuadraticForm form_from_ideal(const FractionalIdeal& a, const std::array<FieldElement, 2>& basis) {
  const NumberField& k = a.field();
  if (k.degree() != 2) throw Error(Errc::NotQuadratic, "field has degree " + std::to_string(k.degree()));
  if (!is_fundamental_discriminant(k.discriminant())) throw Error(Errc::NonFundamental, "field discriminant");
  if (!a.is_integral()) throw Error(Errc::NotABasis, "ideal is not integral");
  for (const auto& x : basis)
    if (x.size() != 2 || !a.contains(x)) throw Error(Errc::NotABasis, "basis element outside the ideal");
  auto c0 = a.coordinates(basis[0]);
  auto c1 = a.coordinates(basis[1]);
  Rational det = c0[0] * c1[1] - c0[1] * c1[0];
  if (abs_q(det) != 1) throw Error(Errc::NotABasis, "basis does not span the ideal");
  const Rational n = a.norm();
  const Rational fa = k.norm(basis[0]) / n;
  const Rational fb = k.trace(k.mul(basis[0], k.conjugate(basis[1]))) / n;
  const Rational fc = k.norm(basis[1]) / n;
  if (fa.get_den() != 1 || fb.get_den() != 1 || fc.get_den() != 1)
    throw Error(Errc::NotABasis, "non-integral form coefficients");
  BinaryQuadraticForm f{fa.get_num(), fb.get_num(), fc.get_num()};
  if (f.discriminant() != k.discriminant()) throw Error(Errc::NonFundamental, "form discriminant differs from the field");
  return f;
}

std::pair<Integer, bool> form_disc_primitive(const BinaryQuadraticForm& f) {
  return {f.discriminant(), f.is_primitive()};
}

namespace {

// Exact minimum of a definite form: enumerate the ellipse g(P - Q) <= B.
Rational m_definite(const BinaryQuadraticForm& f, const RationalPoint& p) {
  const int sign = f.a > 0 ? 1 : -1;
  const Integer a = sign * f.a, b = sign * f.b;
  const Integer disc = -f.discriminant();  // > 0
  auto g = [&](const Rational& u, const Rational& v) -> Rational { return sign * f(u, v); };
  Integer q1 = floor_q(p[0] + Rational(1, 2)), q2 = floor_q(p[1] + Rational(1, 2));
  Rational best = g(p[0] - q1, p[1] - q2);
  // 4 a g = (2 a u + b v)^2 + disc v^2.
  const double vmax = std::sqrt(4 * a.get_d() * best.get_d() / disc.get_d()) + 1;
  const Integer lo2 = floor_q(p[1] - Rational(vmax)), hi2 = ceil_q(p[1] + Rational(vmax));
  for (Integer y = lo2; y <= hi2; ++y) {
    const Rational v = p[1] - y;
    const Rational rest = 4 * a * best - disc * v * v;
    if (rest < 0) continue;
    const double r = std::sqrt(rest.get_d()) + 1;
    // u in [(-b v - r) / 2a, (-b v + r) / 2a]
    const Rational centre = -b * v / (2 * a);
    const Rational half(r / (2 * a.get_d()));
    const Integer lo1 = floor_q(p[0] - centre - half), hi1 = ceil_q(p[0] - centre + half);
    for (Integer x = lo1; x <= hi1; ++x) {
      Rational val = g(p[0] - x, v);
      if (val < best) best = val;
    }
  }
  return best;
}

class IdealRoute {
 public:
  explicit IdealRoute(const BinaryQuadraticForm& f) {
    const Integer disc = f.discriminant();
    if (disc == 0) throw Error(Errc::DegenerateForm, "zero discriminant");
    g_ = f.content();
    a_ = f.a / g_;
    const Integer b = f.b / g_, c = f.c / g_;
    if (!is_fundamental_discriminant(disc / (g_ * g_)))
      throw Error(disc > 0 ? Errc::NonFundamentalIndefinite : Errc::NonFundamental,
                  "discriminant " + Integer(disc / (g_ * g_)).get_str() + " is not fundamental");
    k_ = std::make_unique<NumberField>(make_field({a_ * c, -b, 1}));
    theta_ = k_->theta();
    auto ideal = FractionalIdeal::from_lattice_gens(*k_, {k_->from_rational(Rational(a_)), theta_});
    d_ = std::make_unique<FundamentalDomain>(configure_s(*k_, {}), ideal);
  }

  Rational operator()(const RationalPoint& p) const {
    FieldElement xi = k_->from_rational(p[0] * a_) + p[1] * theta_;
    return g_ * m_exact(*d_, xi).value;
  }

 private:
  Integer g_, a_;
  std::unique_ptr<NumberField> k_;
  FieldElement theta_;
  std::unique_ptr<FundamentalDomain> d_;
};

}  // namespace

Rational m_form(const BinaryQuadraticForm& f, const RationalPoint& p) {
  const Integer disc = f.discriminant();
  if (disc == 0) throw Error(Errc::DegenerateForm, "zero discriminant");
  if (p[0].get_den() == 1 && p[1].get_den() == 1) return 0;
  if (disc < 0) return m_definite(f, p);
  return m_form_via_ideal(f, p);
}

Rational m_form_via_ideal(const BinaryQuadraticForm& f, const RationalPoint& p) { return IdealRoute(f)(p); }

Rational m_form_box(const BinaryQuadraticForm& f, const RationalPoint& p, long radius) {
  if (f.discriminant() == 0) throw Error(Errc::DegenerateForm, "zero discriminant");
  Rational best = -1;
  const Integer x0 = floor_q(p[0]), y0 = floor_q(p[1]);
  for (Integer x = x0 - radius; x <= x0 + radius + 1; ++x)
    for (Integer y = y0 - radius; y <= y0 + radius + 1; ++y) {
      Rational v = abs_q(f(p[0] - x, p[1] - y));
      if (best < 0 || v < best) best = v;
    }
  return best;
}

BsdReport bsd_check(const BinaryQuadraticForm& f, const Integer& denom_bound, std::size_t sample_count,
                    std::uint64_t seed) {
  const Integer disc = f.discriminant();
  if (disc <= 0 || is_perfect_square(disc)) throw Error(Errc::InvalidArgument, "form must be indefinite and anisotropic");
  if (!f.is_primitive()) throw Error(Errc::InvalidArgument, "form must be primitive");
  if (!is_fundamental_discriminant(disc)) throw Error(Errc::NonFundamentalIndefinite, "discriminant not fundamental");
  if (denom_bound < 1) throw Error(Errc::InvalidArgument, "denominator bound must be positive");
  IdealRoute route(f);
  BsdReport rep;
  rep.denom_bound = denom_bound;
  rep.lower = 0;
  rep.candidate = {Rational(0), Rational(0)};
  for (Integer m = 2; m <= denom_bound; ++m)
    for (Integer i = 0; i < m; ++i)
      for (Integer j = 0; j < m; ++j) {
        if (gcd(gcd(i, j), m) != 1) continue;
        RationalPoint p{make_rational(i, m), make_rational(j, m)};
        Rational v = route(p);
        if (v > rep.lower) {
          rep.lower = v;
          rep.candidate = p;
        }
      }
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> den(1, 12);
  for (std::size_t s = 0; s < sample_count; ++s) {
    long q = den(rng);
    std::uniform_int_distribution<long> num(-2 * q, 2 * q);
    RationalPoint p{make_rational(num(rng), q), make_rational(num(rng), q)};
    ConsistencyRow row;
    row.p = p;
    row.ideal_value = route(p);
    row.box_value = m_form_box(f, p, 8);
    row.agree = row.ideal_value == row.box_value;
    rep.rows.push_back(row);
  }
  return rep;
}

}  // namespace seuclid
