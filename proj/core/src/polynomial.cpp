// Copyright 2026 The seuclid Authors
// SPDX-License-Identifier: Apache-2.0

#include "seuclid/polynomial.hpp"

#include <algorithm>

#include "seuclid/matrix.hpp"

namespace seuclid::poly {

int degree(const QPoly& f) {
  for (std::size_t i = f.size(); i-- > 0;)
    if (f[i] != 0) return static_cast<int>(i);
  return -1;
}

QPoly trim(QPoly f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
  return f;
}

QPoly to_q(const ZPoly& f) {
  QPoly q(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) q[i] = Rational(f[i]);
  return trim(q);
}

QPoly derivative(const QPoly& f) {
  if (f.size() <= 1) return {};
  QPoly d(f.size() - 1);
  for (std::size_t i = 1; i < f.size(); ++i) d[i - 1] = f[i] * Rational(static_cast<long>(i));
  return trim(d);
}

QPoly add(const QPoly& a, const QPoly& b) {
  QPoly r(std::max(a.size(), b.size()));
  for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] += b[i];
  return trim(r);
}

QPoly sub(const QPoly& a, const QPoly& b) {
  QPoly r(std::max(a.size(), b.size()));
  for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
  return trim(r);
}

QPoly mul(const QPoly& a, const QPoly& b) {
  if (a.empty() || b.empty()) return {};
  QPoly r(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  return trim(r);
}

std::pair<QPoly, QPoly> divmod(const QPoly& a, const QPoly& b) {
  QPoly rem = trim(a);
  const int db = degree(b);
  if (db < 0) throw Error(Errc::InvalidArgument, "polynomial division by zero");
  QPoly quo;
  while (degree(rem) >= db) {
    int shift = degree(rem) - db;
    Rational c = rem[degree(rem)] / b[db];
    if (quo.size() < static_cast<std::size_t>(shift + 1)) quo.resize(shift + 1);
    quo[shift] = c;
    for (int i = 0; i <= db; ++i) rem[i + shift] -= c * b[i];
    rem = trim(rem);
  }
  return {trim(quo), rem};
}

Rational eval(const QPoly& f, const Rational& x) {
  Rational r = 0;
  for (std::size_t i = f.size(); i-- > 0;) r = r * x + f[i];
  return r;
}

Rational resultant(const QPoly& f, const QPoly& g) {
  const int m = degree(f), n = degree(g);
  if (m < 0 || n < 0) return 0;
  if (m == 0 && n == 0) return 1;
  const std::size_t sz = static_cast<std::size_t>(m + n);
  RatMatrix s(sz, sz);
  for (int r = 0; r < n; ++r)
    for (int i = 0; i <= m; ++i) s(r, r + i) = f[m - i];
  for (int r = 0; r < m; ++r)
    for (int i = 0; i <= n; ++i) s(n + r, r + i) = g[n - i];
  return determinant(s);
}

Rational discriminant(const QPoly& f) {
  const int n = degree(f);
  if (n < 1) throw Error(Errc::InvalidArgument, "discriminant of constant");
  if (n == 1) return 1;
  Rational r = resultant(f, derivative(f)) / f[n];
  long k = static_cast<long>(n) * (n - 1) / 2;
  return (k % 2) ? Rational(-r) : r;
}

namespace {

int sign_changes(const std::vector<QPoly>& seq, const Rational* x, int inf_sign) {
  int changes = 0, last = 0;
  for (const auto& p : seq) {
    int d = degree(p);
    if (d < 0) continue;
    int s;
    if (x) {
      Rational v = eval(p, *x);
      s = v > 0 ? 1 : (v < 0 ? -1 : 0);
    } else {
      s = (p[d] > 0 ? 1 : -1) * ((d % 2 && inf_sign < 0) ? -1 : 1);
    }
    if (s == 0) continue;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}

}  // namespace

int count_real_roots(const QPoly& f) {
  std::vector<QPoly> seq{trim(f), derivative(f)};
  while (degree(seq.back()) > 0) {
    auto [q, r] = divmod(seq[seq.size() - 2], seq.back());
    if (degree(r) < 0) break;
    QPoly neg(r.size());
    for (std::size_t i = 0; i < r.size(); ++i) neg[i] = -r[i];
    seq.push_back(neg);
  }
  return sign_changes(seq, nullptr, -1) - sign_changes(seq, nullptr, 1);
}

namespace {

std::vector<Integer> divisors(Integer n) {
  if (n < 0) n = -n;
  std::vector<Integer> ds{1};
  for (auto& [p, e] : factor_integer(n)) {
    std::size_t sz = ds.size();
    Integer pk = 1;
    for (unsigned k = 1; k <= e; ++k) {
      pk *= p;
      for (std::size_t i = 0; i < sz; ++i) ds.push_back(ds[i] * pk);
    }
  }
  return ds;
}

}  // namespace

bool has_small_factor(const ZPoly& f) {
  const QPoly fq = to_q(f);
  const int n = degree(fq);
  if (n <= 1) return false;
  if (f[0] == 0) return true;
  // Rational roots of a monic integer polynomial are integer divisors of f(0).
  for (const auto& d : divisors(f[0]))
    for (int s : {1, -1})
      if (eval(fq, Rational(d * s)) == 0) return true;
  if (n < 4) return false;
  // (x^2 + a x + b)(x^2 + c x + d) with b d = f0.
  const Integer &a0 = f[0], &a1 = f[1], &a2 = f[2], &a3 = f[3];
  for (const auto& dv : divisors(a0))
    for (int s : {1, -1}) {
      Integer b = dv * s;
      Integer d = a0 / b;
      // a + c = a3, a c = a2 - b - d
      Integer prod = a2 - b - d;
      Integer disc = a3 * a3 - 4 * prod;
      Integer root;
      if (!is_perfect_square(disc, &root)) continue;
      for (int t : {1, -1}) {
        Integer twice_a = a3 + t * root;
        if (!mpz_even_p(twice_a.get_mpz_t())) continue;
        Integer a = twice_a / 2, c = a3 - a;
        if (a * d + b * c == a1) return true;
      }
    }
  return false;
}

// ---- arithmetic in F_p[x] -------------------------------------------------

namespace {

struct Fp {
  Integer p;

  Integer red(const Integer& x) const {
    Integer r;
    mpz_fdiv_r(r.get_mpz_t(), x.get_mpz_t(), p.get_mpz_t());
    return r;
  }
  Integer inv(const Integer& x) const {
    Integer r;
    if (mpz_invert(r.get_mpz_t(), x.get_mpz_t(), p.get_mpz_t()) == 0)
      throw Error(Errc::InvalidArgument, "non-invertible residue");
    return r;
  }
  ZPoly norm(ZPoly f) const {
    for (auto& c : f) c = red(c);
    while (!f.empty() && f.back() == 0) f.pop_back();
    return f;
  }
  int deg(const ZPoly& f) const { return static_cast<int>(f.size()) - 1; }
  ZPoly monic(ZPoly f) const {
    f = norm(f);
    if (f.empty()) return f;
    Integer li = inv(f.back());
    for (auto& c : f) c = red(c * li);
    return f;
  }
  ZPoly sub(const ZPoly& a, const ZPoly& b) const {
    ZPoly r(std::max(a.size(), b.size()));
    for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
    for (std::size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
    return norm(r);
  }
  ZPoly mul(const ZPoly& a, const ZPoly& b) const {
    if (a.empty() || b.empty()) return {};
    ZPoly r(a.size() + b.size() - 1);
    for (std::size_t i = 0; i < a.size(); ++i)
      for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    return norm(r);
  }
  std::pair<ZPoly, ZPoly> divmod(const ZPoly& a, const ZPoly& b) const {
    ZPoly rem = norm(a);
    ZPoly bb = norm(b);
    if (bb.empty()) throw Error(Errc::InvalidArgument, "division by zero polynomial");
    Integer li = inv(bb.back());
    ZPoly quo;
    while (deg(rem) >= deg(bb)) {
      int shift = deg(rem) - deg(bb);
      Integer c = red(rem.back() * li);
      if (quo.size() < static_cast<std::size_t>(shift + 1)) quo.resize(shift + 1);
      quo[shift] = c;
      for (int i = 0; i <= deg(bb); ++i) rem[i + shift] -= c * bb[i];
      rem = norm(rem);
    }
    return {norm(quo), rem};
  }
  ZPoly mod(const ZPoly& a, const ZPoly& b) const { return divmod(a, b).second; }
  ZPoly gcd(ZPoly a, ZPoly b) const {
    a = norm(a);
    b = norm(b);
    while (!b.empty()) {
      ZPoly r = mod(a, b);
      a = std::move(b);
      b = std::move(r);
    }
    return monic(a);
  }
  ZPoly derivative(const ZPoly& f) const {
    if (f.size() <= 1) return {};
    ZPoly d(f.size() - 1);
    for (std::size_t i = 1; i < f.size(); ++i) d[i - 1] = f[i] * static_cast<unsigned long>(i);
    return norm(d);
  }
  ZPoly powmod(ZPoly base, Integer e, const ZPoly& m) const {
    ZPoly result{1};
    result = mod(result, m);
    base = mod(base, m);
    while (e > 0) {
      if (mpz_odd_p(e.get_mpz_t())) result = mod(mul(result, base), m);
      base = mod(mul(base, base), m);
      e /= 2;
    }
    return result;
  }
};

bool has_root(const Fp& F, const ZPoly& g) {
  for (Integer x = 0; x < F.p; ++x) {
    Integer v = 0;
    for (std::size_t i = g.size(); i-- > 0;) v = F.red(v * x + g[i]);
    if (v == 0) return true;
  }
  return false;
}

// Brute force for tiny primes: strip all monic irreducible factors of degree
// 1 and 2; what remains (degree 0, 3 or 4) is irreducible.
std::vector<ModFactor> factor_small_prime(const Fp& F, ZPoly f) {
  std::vector<ModFactor> out;
  auto strip = [&](const ZPoly& g) {
    int mult = 0;
    for (;;) {
      auto [q, r] = F.divmod(f, g);
      if (!r.empty()) break;
      f = q;
      ++mult;
    }
    if (mult) out.push_back({g, mult});
  };
  for (Integer a = 0; a < F.p; ++a) strip(ZPoly{a, 1});
  for (Integer b = 0; b < F.p; ++b)
    for (Integer a = 0; a < F.p; ++a) {
      ZPoly g{b, a, 1};
      if (!has_root(F, g)) strip(g);
    }
  if (F.deg(f) > 0) out.push_back({F.monic(f), 1});
  return out;
}

void equal_degree_split(const Fp& F, const ZPoly& g, int d, std::vector<ZPoly>& out) {
  if (F.deg(g) == d) {
    out.push_back(F.monic(g));
    return;
  }
  Integer e = (pow_z(F.p, d) - 1) / 2;
  for (Integer a = 0;; ++a) {
    ZPoly h = F.powmod(ZPoly{a, 1}, e, g);
    h = F.sub(h, ZPoly{1});
    ZPoly c = F.gcd(g, h);
    if (F.deg(c) > 0 && F.deg(c) < F.deg(g)) {
      equal_degree_split(F, c, d, out);
      equal_degree_split(F, F.divmod(g, c).first, d, out);
      return;
    }
  }
}

std::vector<ZPoly> distinct_factors_squarefree(const Fp& F, ZPoly a) {
  std::vector<ZPoly> out;
  for (int d = 1; d <= 2 && F.deg(a) >= 2 * d; ++d) {
    ZPoly xp = F.powmod(ZPoly{0, 1}, pow_z(F.p, d), a);
    ZPoly g = F.gcd(a, F.sub(xp, ZPoly{0, 1}));
    if (F.deg(g) > 0) {
      equal_degree_split(F, g, d, out);
      a = F.divmod(a, g).first;
    }
  }
  if (F.deg(a) > 0) out.push_back(F.monic(a));
  return out;
}

}  // namespace

std::vector<ModFactor> factor_mod_p(const ZPoly& f, const Integer& p) {
  Fp F{p};
  ZPoly fm = F.monic(f);
  std::vector<ModFactor> out;
  if (p < 5) {
    out = factor_small_prime(F, fm);
  } else {
    // Yun's square-free decomposition; valid because deg f < p.
    ZPoly b = fm;
    ZPoly c = F.gcd(b, F.derivative(b));
    ZPoly w = F.divmod(b, c).first;
    int i = 1;
    auto emit = [&](const ZPoly& z, int mult) {
      if (F.deg(z) <= 0) return;
      for (auto& g : distinct_factors_squarefree(F, z)) out.push_back({g, mult});
    };
    while (F.deg(c) > 0) {
      ZPoly y = F.gcd(w, c);
      emit(F.divmod(w, y).first, i);
      ++i;
      w = y;
      c = F.divmod(c, y).first;
    }
    emit(w, i);
  }
  std::sort(out.begin(), out.end(), [](const ModFactor& x, const ModFactor& y) {
    if (x.factor.size() != y.factor.size()) return x.factor.size() < y.factor.size();
    return std::lexicographical_compare(x.factor.begin(), x.factor.end(), y.factor.begin(),
                                        y.factor.end());
  });
  return out;
}

}  // namespace seuclid::poly
