// Copyright 2026 The seuclid Authors
// SPDX-License-Identifier: Apache-2.0

#include "seuclid/torus.hpp"

#include <deque>
#include <set>

namespace seuclid {

FundamentalDomain::FundamentalDomain(SConfig s, const FractionalIdeal& a)
    : s_(std::move(s)), b_(strip_s_primes(s_, a)) {}

bool FundamentalDomain::contains(const FieldElement& x) const {
  for (const auto& c : b_.coordinates(x))
    if (c < 0 || c >= 1) return false;
  if (x.is_zero()) return true;
  for (const auto& v : s_.places)
    if (v.is_finite() && valuation(field(), x, v) < 0) return false;
  return true;
}

bool FundamentalDomain::in_ideal(const FieldElement& gamma) const {
  if (gamma.is_zero()) return true;
  FractionalIdeal lattice = b_;
  for (const auto& v : s_.places) {
    if (!v.is_finite()) continue;
    long w = valuation(field(), gamma, v);
    if (w < 0) lattice = lattice * v.ideal.pow(w);
  }
  return lattice.contains(gamma);
}

std::pair<FieldElement, FieldElement> FundamentalDomain::reduce(const FieldElement& xi) const {
  const auto& k = field();
  FieldElement eta = xi;
  if (!xi.is_zero() && !xi.is_integral()) {
    // Move the S-polar part of xi into a first.
    FractionalIdeal allowed = b_;
    bool polar = false;
    for (const auto& v : s_.places) {
      if (!v.is_finite()) continue;
      long w = valuation(k, xi, v);
      if (w < 0) {
        allowed = allowed * v.ideal.pow(w);
        polar = true;
      }
    }
    if (polar) {
      FractionalIdeal rest = strip_s_primes(s_, FractionalIdeal::from_gens(k, {k.one(), xi}));
      eta = split_sum(xi, allowed, rest).second;
    }
  }
  auto y = b_.coordinates(eta);
  FieldElement shift = k.zero();
  for (std::size_t i = 0; i < y.size(); ++i) {
    Integer f = floor_q(y[i]);
    if (f != 0) shift = shift + Rational(f) * b_.basis(i);
  }
  FieldElement rho = eta - shift;
  return {rho, xi - rho};
}

std::vector<FieldElement> FundamentalDomain::torsion_reps(const Integer& m) const {
  if (m < 1) throw Error(Errc::InvalidArgument, "m must be positive");
  const int n = field().degree();
  std::set<FieldElement> seen;
  std::vector<FieldElement> out;
  std::vector<Integer> idx(n, 0);
  const auto basis = b_.basis();
  for (;;) {
    FieldElement x = field().zero();
    for (int i = 0; i < n; ++i)
      if (idx[i] != 0) x = x + make_rational(idx[i], m) * basis[i];
    FieldElement r = reduce(x).first;
    if (seen.insert(r).second) out.push_back(r);
    int i = n - 1;
    while (i >= 0 && idx[i] == m - 1) idx[i--] = 0;
    if (i < 0) break;
    ++idx[i];
  }
  return out;
}

std::vector<FundamentalDomain::OrbitPoint> FundamentalDomain::orbit(const FieldElement& xi) const {
  const auto& k = field();
  std::vector<FieldElement> gens = s_.unit_gens;
  gens.push_back(s_.torsion_gen);
  std::map<FieldElement, FieldElement> found;
  std::vector<OrbitPoint> out;
  std::deque<FieldElement> queue;
  FieldElement start = reduce(xi).first;
  found.emplace(start, k.one());
  out.push_back({start, k.one()});
  queue.push_back(start);
  while (!queue.empty()) {
    FieldElement x = queue.front();
    queue.pop_front();
    const FieldElement ux = found.at(x);
    for (const auto& g : gens) {
      FieldElement y = reduce(k.mul(g, x)).first;
      if (found.count(y)) continue;
      FieldElement uy = k.mul(g, ux);
      found.emplace(y, uy);
      out.push_back({y, uy});
      queue.push_back(y);
    }
  }
  return out;
}

Rational polar_part(const Rational& x, const Integer& p) {
  const Integer den = x.get_den();
  long e = valuation_p(den, p);
  if (e == 0) return 0;
  const Integer pk = pow_z(p, e);
  const Integer rest = den / pk;
  // x = a / (p^e rest); polar part = (a rest^{-1} mod p^e) / p^e.
  Integer inv, a;
  mpz_invert(inv.get_mpz_t(), rest.get_mpz_t(), pk.get_mpz_t());
  a = x.get_num() * inv;
  mpz_fdiv_r(a.get_mpz_t(), a.get_mpz_t(), pk.get_mpz_t());
  return make_rational(a, pk);
}

Rational local_trace_polar(const NumberField& k, const FieldElement& x, const Place& v) {
  if (x.is_zero()) return 0;
  const auto above = places_above(k, v.p);
  long n = 0;
  for (const auto& w : above) n = std::max(n, -valuation(k, x, w));
  if (n == 0) return 0;
  if (above.size() == 1) return polar_part(k.trace(x), v.p);
  // Idempotent e = 1 mod P_v^n, 0 mod P_w^n for the other w above p.
  FractionalIdeal others = FractionalIdeal::unit(k);
  for (const auto& w : above)
    if (!(w == v)) others = others * w.ideal.pow(n);
  FieldElement e = split_sum(k.one(), v.ideal.pow(n), others).second;
  return polar_part(k.trace(k.mul(e, x)), v.p);
}

QmodZ char_pair(const SConfig& s, const FieldElement& alpha, const FieldElement& xi) {
  const auto& k = s.field;
  FieldElement x = k.mul(alpha, xi);
  Rational phase = k.trace(x);
  for (const auto& v : s.places)
    if (v.is_finite()) phase -= local_trace_polar(k, x, v);
  return QmodZ(phase);
}

FractionalIdeal s_trace_dual(const SConfig& s, const FractionalIdeal& a) {
  FractionalIdeal b = strip_s_primes(s, a);
  return strip_s_primes(s, b.inverse() * inverse_different(s.field));
}

AdelePoint AdelePoint::from_element(const SConfig& s, const FieldElement& x, const Rational& precision, int k) {
  AdelePoint p;
  EmbeddingBox box = s.field.embed(x, precision);
  p.real = box.real;
  p.complex = box.complex;
  for (const auto& v : s.places)
    if (v.is_finite()) p.finite.emplace_back(x, k);
  p.exact = x;
  return p;
}

}  // namespace seuclid
