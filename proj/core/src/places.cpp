// Copyright 2026 The seuclid Authors
// SPDX-License-Identifier: Apache-2.0

#include "seuclid/places.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

#include "seuclid/lattice.hpp"

namespace seuclid {

std::string Place::label() const {
  switch (kind) {
    case PlaceKind::Real:
      return "real" + std::to_string(index);
    case PlaceKind::Complex:
      return "complex" + std::to_string(index);
    case PlaceKind::Finite:
      return "p" + p.get_str() + "." + std::to_string(index);
  }
  return "?";
}

std::vector<Place> archimedean_places(const NumberField& k) {
  std::vector<Place> out;
  const auto sig = k.signature();
  for (int i = 0; i < sig.r1 + sig.r2; ++i) {
    Place v;
    v.kind = i < sig.r1 ? PlaceKind::Real : PlaceKind::Complex;
    v.index = i;
    out.push_back(v);
  }
  return out;
}

std::vector<Place> places_above(const NumberField& k, const Integer& p) {
  if (p < 2 || !is_probable_prime(p)) throw Error(Errc::NotPrime, p.get_str() + " is not prime");
  if (k.index() % p == 0)
    throw Error(Errc::IndexDivisor, p.get_str() + " divides the index [O : Z[theta]]");
  std::vector<Place> out;
  const Integer half = p / 2;
  for (const auto& mf : poly::factor_mod_p(k.polynomial(), p)) {
    std::vector<Rational> c;
    for (Integer a : mf.factor) {
      if (a > half) a -= p;
      c.emplace_back(a);
    }
    Place v;
    v.kind = PlaceKind::Finite;
    v.p = p;
    v.e = mf.multiplicity;
    v.f = static_cast<int>(mf.factor.size()) - 1;
    v.gen = k.zero();
    for (std::size_t i = c.size(); i-- > 0;) v.gen = k.mul(v.gen, k.theta()) + k.from_rational(c[i]);
    if (v.gen.is_zero()) v.gen = k.from_rational(Rational(p));
    v.ideal = FractionalIdeal::from_gens(k, {k.from_rational(Rational(p)), v.gen});
    if (v.ideal.norm() != Rational(v.residue_norm()))
      throw Error(Errc::InvalidArgument, "prime ideal above " + p.get_str() + " has unexpected norm");
    for (const auto& b : v.ideal.inverse().basis())
      if (!b.is_integral()) {
        v.inv_elt = b;
        break;
      }
    out.push_back(v);
  }
  std::sort(out.begin(), out.end(), [](const Place& a, const Place& b) { return a.gen < b.gen; });
  for (std::size_t i = 0; i < out.size(); ++i) out[i].index = static_cast<int>(i);
  return out;
}

long valuation(const NumberField& k, const FieldElement& x, const Place& v) {
  if (x.is_zero()) throw Error(Errc::ZeroElement, "valuation of zero");
  if (!v.is_finite()) throw Error(Errc::InvalidArgument, "valuation needs a finite place");
  const Integer d = x.denominator();
  FieldElement a = Rational(d) * x;
  // Pull out rational powers of p first; each contributes e.
  long base = 0;
  for (;;) {
    bool divisible = true;
    for (const auto& c : a.coords)
      if (c.get_num() % v.p != 0) {
        divisible = false;
        break;
      }
    if (!divisible) break;
    a = Rational(1, v.p) * a;
    base += v.e;
  }
  long extra = 0;
  for (;;) {
    FieldElement next = k.mul(a, v.inv_elt);
    if (!next.is_integral()) break;
    a = next;
    ++extra;
  }
  return base + extra - v.e * valuation_p(d, v.p);
}

long valuation(const FractionalIdeal& a, const Place& v) {
  long best = 0;
  bool first = true;
  for (const auto& b : a.basis()) {
    if (b.is_zero()) continue;
    long w = valuation(a.field(), b, v);
    if (first || w < best) best = w;
    first = false;
  }
  return best;
}

// ---- SConfig ------------------------------------------------------------------

std::vector<Place> SConfig::finite_places() const {
  std::vector<Place> out;
  for (const auto& v : places)
    if (v.is_finite()) out.push_back(v);
  return out;
}

std::size_t SConfig::archimedean_count() const {
  return static_cast<std::size_t>(std::count_if(places.begin(), places.end(),
                                                [](const Place& v) { return v.is_archimedean(); }));
}

bool SConfig::contains_prime(const Integer& p) const {
  return std::any_of(places.begin(), places.end(), [&](const Place& v) { return v.is_finite() && v.p == p; });
}

SConfig make_sconfig(const NumberField& k, const std::vector<Place>& finite) {
  SConfig s;
  s.field = k;
  s.places = archimedean_places(k);
  for (const auto& v : finite) {
    if (!v.is_finite()) throw Error(Errc::InvalidArgument, "expected a finite place");
    if (std::find(s.places.begin(), s.places.end(), v) != s.places.end())
      throw Error(Errc::InvalidArgument, "duplicate place " + v.label());
    s.places.push_back(v);
  }
  s.torsion_gen = k.from_rational(-1);
  return s;
}

Rational s_norm(const SConfig& s, const FieldElement& x) {
  if (x.is_zero()) return 0;
  Rational r = abs_q(s.field.norm(x));
  for (const auto& v : s.places)
    if (v.is_finite()) r *= pow_q(Rational(v.residue_norm()), -valuation(s.field, x, v));
  return r;
}

FractionalIdeal strip_s_primes(const SConfig& s, const FractionalIdeal& a) {
  FractionalIdeal out = a;
  for (const auto& v : s.places) {
    if (!v.is_finite()) continue;
    long w = valuation(a, v);
    if (w != 0) out = out * v.ideal.pow(-w);
  }
  return out;
}

Rational s_norm(const SConfig& s, const FractionalIdeal& a) { return strip_s_primes(s, a).norm(); }

bool is_s_integral(const SConfig& s, const FieldElement& x) {
  if (x.is_integral()) return true;
  const auto& k = s.field;
  FractionalIdeal a = FractionalIdeal::from_gens(k, {k.one(), x});
  return strip_s_primes(s, a).is_unit_ideal();
}

bool is_s_unit(const SConfig& s, const FieldElement& u) {
  if (u.is_zero()) return false;
  return strip_s_primes(s, FractionalIdeal::principal(s.field, u)).is_unit_ideal();
}

// ---- logs and rank --------------------------------------------------------

namespace {

Interval abs_interval(const EmbeddingBox& box, const Place& v, const NumberField& k) {
  const int r1 = k.signature().r1;
  if (v.kind == PlaceKind::Real) {
    const Interval& iv = box.real[v.index];
    return {iv.mig(), iv.mag()};
  }
  return box.complex[v.index - r1].norm2();
}

Interval det_interval(const std::vector<std::vector<Interval>>& m) {
  const std::size_t n = m.size();
  if (n == 0) return Interval(Rational(1));
  if (n == 1) return m[0][0];
  Interval acc(Rational(0));
  for (std::size_t c = 0; c < n; ++c) {
    std::vector<std::vector<Interval>> minor;
    for (std::size_t r = 1; r < n; ++r) {
      std::vector<Interval> row;
      for (std::size_t j = 0; j < n; ++j)
        if (j != c) row.push_back(m[r][j]);
      minor.push_back(row);
    }
    Interval term = m[0][c] * det_interval(minor);
    acc = (c % 2 == 0) ? acc + term : acc - term;
  }
  return acc;
}

}  // namespace

bool archimedean_abs_below(const NumberField& k, const FieldElement& x, const Place& v, const Rational& below) {
  for (unsigned bits = 8; bits <= 512; bits *= 2) {
    auto box = k.embed(x, make_rational(1, pow_z(2, bits)));
    Interval a = abs_interval(box, v, k);
    if (a.hi < below) return true;
    if (a.lo >= below) return false;
  }
  return false;
}

std::vector<Interval> log_vector(const SConfig& s, const FieldElement& u, unsigned bits) {
  const auto& k = s.field;
  std::vector<Interval> out;
  Rational prec = make_rational(1, pow_z(2, bits));
  EmbeddingBox box = k.embed(u, prec);
  for (const auto& v : s.places) {
    if (v.is_finite()) {
      long w = valuation(k, u, v);
      Rational np(v.residue_norm());
      Interval l = log_interval(Interval(np), bits);
      out.push_back(Rational(-w) * l);
      continue;
    }
    Interval a = abs_interval(box, v, k);
    while (a.lo <= 0) {
      prec /= 1024;
      if (prec < make_rational(1, pow_z(2, 4096))) throw Error(Errc::RankUndetermined, "embedding too close to 0");
      box = k.embed(u, prec);
      a = abs_interval(box, v, k);
    }
    out.push_back(log_interval(a, bits));
  }
  return out;
}

std::vector<double> log_vector_double(const SConfig& s, const FieldElement& u) {
  const auto& k = s.field;
  auto emb = k.embed_double(u);
  std::vector<double> out;
  for (const auto& v : s.places) {
    if (v.is_finite()) {
      out.push_back(-static_cast<double>(valuation(k, u, v)) * std::log(v.residue_norm().get_d()));
    } else if (v.kind == PlaceKind::Real) {
      out.push_back(std::log(std::abs(emb[v.index].real())));
    } else {
      out.push_back(2.0 * std::log(std::abs(emb[v.index])));
    }
  }
  return out;
}

SConfig verify_s_unit_basis(SConfig s, const std::vector<FieldElement>& gens) {
  for (const auto& u : gens)
    if (!is_s_unit(s, u)) throw Error(Errc::NotAnSUnit, to_string(u) + " has nonzero valuation outside S");
  const std::size_t need = s.size() - 1;
  if (gens.size() < need)
    throw Error(Errc::RankDeficient, "need " + std::to_string(need) + " generators, got " + std::to_string(gens.size()));
  if (need == 0) {
    s.unit_gens = gens;
    s.verified = true;
    return s;
  }
  // Try subsets of size #S - 1 (the generators themselves when counts agree).
  std::vector<std::size_t> pick(need);
  const Rational negligible = Rational(1) / pow_z(2, 64);
  bool all_negligible = true;
  for (unsigned bits = 32; bits <= 1024; bits *= 2) {
    all_negligible = true;
    std::vector<std::vector<Interval>> logs;
    for (const auto& u : gens) logs.push_back(log_vector(s, u, bits));
    std::function<bool(std::size_t, std::size_t)> choose = [&](std::size_t pos, std::size_t from) -> bool {
      if (pos == need) {
        for (std::size_t drop = 0; drop < s.size(); ++drop) {
          std::vector<std::vector<Interval>> m;
          for (std::size_t r : pick) {
            std::vector<Interval> row;
            for (std::size_t c = 0; c < s.size(); ++c)
              if (c != drop) row.push_back(logs[r][c]);
            m.push_back(row);
          }
          Interval d = det_interval(m);
          if (d.lo > 0 || d.hi < 0) return true;
          if (abs_q(d.lo) > negligible || abs_q(d.hi) > negligible) all_negligible = false;
        }
        return false;
      }
      for (std::size_t i = from; i < gens.size(); ++i) {
        pick[pos] = i;
        if (choose(pos + 1, i + 1)) return true;
      }
      return false;
    };
    if (choose(0, 0)) {
      s.unit_gens = gens;
      s.verified = true;
      return s;
    }
  }
  // Every minor vanishes to within 2^-64: the generators are dependent.
  if (all_negligible)
    throw Error(Errc::RankDeficient, "generators span log rank below " + std::to_string(need));
  throw Error(Errc::RankUndetermined, "could not certify log rank " + std::to_string(need));
}

// ---- builtin units ----------------------------------------------------------

namespace {

// Minkowski basis scaled so |B y|^2 = T2 of the lattice point.
lattice::Basis t2_basis(const NumberField& k, const std::vector<FieldElement>& basis) {
  const int r1 = k.signature().r1;
  lattice::Basis out;
  for (const auto& b : basis) {
    auto m = k.minkowski_double(b);
    lattice::Vec col(m.size());
    for (std::size_t i = 0; i < m.size(); ++i)
      col[i] = static_cast<long double>(m[i]) * (static_cast<int>(i) < r1 ? 1.0L : std::sqrt(2.0L));
    out.push_back(col);
  }
  return out;
}

FieldElement combine(const std::vector<FieldElement>& basis, const lattice::IntVec& y) {
  FieldElement x{std::vector<Rational>(basis[0].size())};
  for (std::size_t j = 0; j < basis.size(); ++j)
    if (y[j] != 0) x = x + Rational(y[j]) * basis[j];
  return x;
}

// A generator of the integral ideal a if one exists with T2 <= bound.
std::optional<FieldElement> principal_generator(const FractionalIdeal& a, long double t2_bound) {
  const auto& k = a.field();
  const Rational target = a.norm();
  auto basis = a.basis();
  std::optional<FieldElement> found;
  lattice::enumerate(t2_basis(k, basis), lattice::Vec(basis.size(), 0), t2_bound, [&](const lattice::IntVec& y) {
    if (std::all_of(y.begin(), y.end(), [](long v) { return v == 0; })) return true;
    FieldElement x = combine(basis, y);
    if (abs_q(k.norm(x)) == target) {
      found = x;
      return false;
    }
    return true;
  });
  return found;
}

}  // namespace

std::pair<FieldElement, int> torsion_subgroup(const NumberField& k) {
  if (k.signature().r1 > 0) return {k.from_rational(-1), 2};
  const int n = k.degree();
  std::vector<FieldElement> basis;
  for (int j = 0; j < n; ++j) {
    std::vector<Rational> c(n);
    c[j] = 1;
    basis.emplace_back(c);
  }
  FieldElement best = k.from_rational(-1);
  int best_order = 2;
  lattice::enumerate(t2_basis(k, basis), lattice::Vec(n, 0), n, [&](const lattice::IntVec& y) {
    FieldElement x = combine(basis, y);
    if (x.is_zero()) return true;
    FieldElement p = x;
    for (int e = 1; e <= 12; ++e) {
      if (p == k.one()) {
        if (e > best_order) {
          best = x;
          best_order = e;
        }
        break;
      }
      p = k.mul(p, x);
    }
    return true;
  });
  return {best, best_order};
}

FieldElement fundamental_unit_real_quadratic(const NumberField& k) {
  if (k.degree() != 2 || k.signature().r1 != 2) throw Error(Errc::NotQuadratic, "needs a real quadratic field");
  std::vector<Rational> wc{0, 1};
  const FieldElement w(wc);  // omega, the second integral basis element
  const Integer t = k.trace(w).get_num();
  const Integer nn = k.norm(w).get_num();
  const Integer d = t * t - 4 * nn;
  const Integer sd = isqrt(d);
  auto unit_norm = [&](const Integer& h, const Integer& q) {
    Integer v = h * h - t * h * q + nn * q * q;
    return v == 1 || v == -1;
  };
  auto size = [&](const FieldElement& x) {
    auto e = k.embed_double(x);
    return std::max(std::abs(e[0].real()), std::abs(e[1].real()));
  };
  std::vector<FieldElement> found;
  auto consider = [&](const Integer& h, const Integer& q) {
    if (q != 0 && unit_norm(h, q)) found.push_back(FieldElement({Rational(h), Rational(-q)}));
  };
  // Tiny denominators by brute force (covers the small discriminants where
  // Legendre's criterion does not apply).
  const double r1 = (t.get_d() + std::sqrt(d.get_d())) / 2, r2 = (t.get_d() - std::sqrt(d.get_d())) / 2;
  for (long q = 1; q <= 3; ++q)
    for (double r : {r1, r2})
      for (long h = static_cast<long>(std::floor(q * r)) - 2; h <= static_cast<long>(std::ceil(q * r)) + 2; ++h)
        consider(Integer(h), Integer(q));
  // Continued fraction of (t + sqrt d) / 2 via (P + sqrt d) / Q.
  Integer P = t, Q = 2;
  Integer h_prev = 0, h_cur = 1, q_prev = 1, q_cur = 0;
  for (int it = 0; it < 100000 && found.size() < 2; ++it) {
    Integer num = P + sd;
    if (Q < 0) num += 1;
    Integer a;
    mpz_fdiv_q(a.get_mpz_t(), num.get_mpz_t(), Q.get_mpz_t());
    Integer h_next = a * h_cur + h_prev, q_next = a * q_cur + q_prev;
    h_prev = h_cur;
    h_cur = h_next;
    q_prev = q_cur;
    q_cur = q_next;
    consider(h_cur, q_cur);
    P = a * Q - P;
    Q = (d - P * P) / Q;
  }
  if (found.empty()) throw Error(Errc::SearchExhausted, "no unit found in continued fraction");
  std::sort(found.begin(), found.end(), [&](const auto& a, const auto& b) { return size(a) < size(b); });
  return found.front();
}

std::vector<FieldElement> builtin_s_units(const SConfig& s) {
  const auto& k = s.field;
  std::vector<FieldElement> gens;
  if (k.degree() == 1) {
    for (const auto& v : s.places)
      if (v.is_finite()) gens.push_back(k.from_rational(Rational(v.p)));
    return gens;
  }
  if (k.degree() != 2) throw Error(Errc::UnitsRequired, "unit generators must be supplied for degree > 2");
  long double t2_scale = 2;
  if (k.signature().r1 == 2) {
    FieldElement eps = fundamental_unit_real_quadratic(k);
    gens.push_back(eps);
    auto e = k.embed_double(eps);
    long double big = std::max(std::abs(e[0].real()), std::abs(e[1].real()));
    t2_scale = (big + 1 / big) * (big + 1 / big);
  }
  for (const auto& v : s.places) {
    if (!v.is_finite()) continue;
    std::optional<FieldElement> g;
    for (long kk = 1; kk <= 12 && !g; ++kk) {
      FractionalIdeal a = v.ideal.pow(kk);
      g = principal_generator(a, t2_scale * a.norm().get_d() * 1.0001L + 1);
    }
    if (!g) throw Error(Errc::UnitsRequired, "no principal power of " + v.label() + " found");
    gens.push_back(*g);
  }
  return gens;
}

SConfig configure_s(const NumberField& k, const std::vector<Place>& finite,
                    const std::optional<std::vector<FieldElement>>& gens) {
  SConfig s = make_sconfig(k, finite);
  auto [tg, to] = torsion_subgroup(k);
  s.torsion_gen = tg;
  s.torsion_order = to;
  return verify_s_unit_basis(s, gens ? *gens : builtin_s_units(s));
}

// ---- shrinking unit ---------------------------------------------------------

FieldElement shrinking_unit(const SConfig& s, std::size_t w) {
  if (s.size() < 2) throw Error(Errc::InvalidArgument, "#S must be at least 2");
  if (!s.verified) throw Error(Errc::UnverifiedUnits, "unit basis not verified");
  if (w >= s.size()) throw Error(Errc::InvalidArgument, "place index out of range");
  const auto& k = s.field;
  const std::size_t r = s.unit_gens.size();
  std::vector<std::vector<double>> logs;
  std::vector<std::vector<long>> vals;
  for (const auto& u : s.unit_gens) {
    logs.push_back(log_vector_double(s, u));
    std::vector<long> vv;
    for (const auto& v : s.places) vv.push_back(v.is_finite() ? valuation(k, u, v) : 0);
    vals.push_back(vv);
  }
  auto build = [&](const std::vector<long>& ex) {
    FieldElement x = k.one();
    for (std::size_t i = 0; i < r; ++i)
      if (ex[i] != 0) x = k.mul(x, k.pow(s.unit_gens[i], ex[i]));
    return x;
  };
  auto acceptable = [&](const std::vector<long>& ex) {
    for (std::size_t c = 0; c < s.size(); ++c) {
      if (c == w) continue;
      if (s.places[c].is_finite()) {
        long v = 0;
        for (std::size_t i = 0; i < r; ++i) v += ex[i] * vals[i][c];
        if (v <= 0) return false;
      } else {
        double l = 0;
        for (std::size_t i = 0; i < r; ++i) l += ex[i] * logs[i][c];
        if (l > 1e-6) return false;
      }
    }
    FieldElement x = build(ex);
    for (std::size_t c = 0; c < s.size(); ++c)
      if (c != w && s.places[c].is_archimedean() && !archimedean_abs_below(k, x, s.places[c], 1)) return false;
    return true;
  };
  // Shells of increasing max-norm, lexicographic inside a shell.
  for (long radius = 1; radius <= 40; ++radius) {
    std::vector<long> ex(r, -radius);
    for (;;) {
      long mx = 0;
      for (long e : ex) mx = std::max(mx, std::labs(e));
      if (mx == radius && acceptable(ex)) return build(ex);
      // odometer step
      std::size_t i = r;
      while (i > 0 && ex[i - 1] == radius) --i;
      if (i == 0) break;
      ++ex[i - 1];
      for (std::size_t j = i; j < r; ++j) ex[j] = -radius;
    }
  }
  throw Error(Errc::SearchExhausted, "no shrinking unit within exponent radius 40");
}

}  // namespace seuclid
