// Copyright 2026 The seuclid Authors
// SPDX-License-Identifier: Apache-2.0

#include "seuclid/field.hpp"

#include <algorithm>
#include <cmath>
#include <mutex>
#include <set>

namespace seuclid {

// ---- FieldElement ---------------------------------------------------------

bool FieldElement::is_zero() const {
  return std::all_of(coords.begin(), coords.end(), [](const Rational& c) { return c == 0; });
}

bool FieldElement::is_integral() const {
  return std::all_of(coords.begin(), coords.end(), [](const Rational& c) { return c.get_den() == 1; });
}

Integer FieldElement::denominator() const {
  Integer d = 1;
  for (const auto& c : coords) d = lcm(d, c.get_den());
  return d;
}

FieldElement operator+(const FieldElement& a, const FieldElement& b) {
  FieldElement r = a;
  for (std::size_t i = 0; i < r.coords.size(); ++i) r.coords[i] += b.coords[i];
  return r;
}

FieldElement operator-(const FieldElement& a, const FieldElement& b) {
  FieldElement r = a;
  for (std::size_t i = 0; i < r.coords.size(); ++i) r.coords[i] -= b.coords[i];
  return r;
}

FieldElement operator-(const FieldElement& a) {
  FieldElement r = a;
  for (auto& c : r.coords) c = -c;
  return r;
}

FieldElement operator*(const Rational& s, const FieldElement& a) {
  FieldElement r = a;
  for (auto& c : r.coords) c *= s;
  return r;
}

std::string to_string(const FieldElement& x) {
  std::string s = "[";
  for (std::size_t i = 0; i < x.coords.size(); ++i) {
    if (i) s += ", ";
    s += to_string(x.coords[i]);
  }
  return s + "]";
}

Rational EmbeddingBox::max_width() const {
  Rational w = 0;
  for (const auto& iv : real) w = std::max(w, iv.width());
  for (const auto& c : complex) w = std::max({w, c.re.width(), c.im.width()});
  return w;
}

bool EmbeddingBox::contains(const EmbeddingBox& o) const {
  if (real.size() != o.real.size() || complex.size() != o.complex.size()) return false;
  for (std::size_t i = 0; i < real.size(); ++i)
    if (!real[i].contains(o.real[i])) return false;
  for (std::size_t i = 0; i < complex.size(); ++i)
    if (!complex[i].re.contains(o.complex[i].re) || !complex[i].im.contains(o.complex[i].im))
      return false;
  return true;
}

// ---- internals ------------------------------------------------------------

namespace {

struct CQ {
  Rational re, im;
};

CQ cmul(const CQ& a, const CQ& b) { return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re}; }

CQ ceval(const QPoly& f, const CQ& z) {
  CQ r{0, 0};
  for (std::size_t i = f.size(); i-- > 0;) {
    r = cmul(r, z);
    r.re += f[i];
  }
  return r;
}

// Product of power-basis vectors modulo the monic polynomial f.
std::vector<Rational> power_mul(const std::vector<Rational>& a, const std::vector<Rational>& b,
                                const ZPoly& f) {
  const std::size_t n = f.size() - 1;
  std::vector<Rational> prod(2 * n - 1);
  for (std::size_t i = 0; i < n; ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < n; ++j) prod[i + j] += a[i] * b[j];
  }
  for (std::size_t k = prod.size(); k-- > n;) {
    if (prod[k] == 0) continue;
    Rational c = prod[k];
    prod[k] = 0;
    for (std::size_t i = 0; i < n; ++i) prod[k - n + i] -= c * Rational(f[i]);
  }
  prod.resize(n);
  return prod;
}

RatMatrix power_mult_matrix(const std::vector<Rational>& a, const ZPoly& f) {
  const std::size_t n = f.size() - 1;
  RatMatrix m(n, n);
  std::vector<Rational> e(n);
  for (std::size_t k = 0; k < n; ++k) {
    std::fill(e.begin(), e.end(), Rational(0));
    e[k] = 1;
    m.set_column(k, power_mul(a, e, f));
  }
  return m;
}

// Faddeev-LeVerrier; returns the monic characteristic polynomial.
QPoly char_poly_of(const RatMatrix& a) {
  const std::size_t n = a.rows();
  QPoly c(n + 1);
  c[n] = 1;
  RatMatrix m(n, n);
  for (std::size_t k = 1; k <= n; ++k) {
    RatMatrix am = a * m;
    for (std::size_t i = 0; i < n; ++i) am(i, i) += c[n - k + 1];
    m = am;
    RatMatrix t = a * m;
    Rational tr = 0;
    for (std::size_t i = 0; i < n; ++i) tr += t(i, i);
    c[n - k] = -tr / Rational(static_cast<long>(k));
  }
  return c;
}

bool is_algebraic_integer(const std::vector<Rational>& x, const ZPoly& f) {
  for (const auto& c : char_poly_of(power_mult_matrix(x, f)))
    if (c.get_den() != 1) return false;
  return true;
}

Rational power_trace(const std::vector<Rational>& x, const ZPoly& f) {
  RatMatrix m = power_mult_matrix(x, f);
  Rational t = 0;
  for (std::size_t i = 0; i < m.rows(); ++i) t += m(i, i);
  return t;
}

// A full-rank lattice in Q^n stored as the HNF of its integer scaling.
struct QLattice {
  IntMatrix hnf;
  Integer den;

  std::vector<Rational> column(std::size_t j) const {
    std::vector<Rational> v(hnf.rows());
    for (std::size_t i = 0; i < hnf.rows(); ++i) v[i] = make_rational(hnf(i, j), den);
    return v;
  }
};

QLattice lattice_of(const std::vector<std::vector<Rational>>& gens, std::size_t n) {
  Integer den = 1;
  for (const auto& g : gens)
    for (const auto& c : g) den = lcm(den, c.get_den());
  IntMatrix m(n, gens.size());
  for (std::size_t j = 0; j < gens.size(); ++j)
    for (std::size_t i = 0; i < n; ++i) m(i, j) = Rational(gens[j][i] * den).get_num();
  return {hnf_basis(m), den};
}

// Nullspace of an integer matrix modulo p, as a list of basis vectors.
std::vector<std::vector<Integer>> kernel_mod_p(const IntMatrix& t, const Integer& p) {
  const std::size_t n = t.rows();
  IntMatrix a = t;
  auto red = [&](Integer x) {
    Integer r;
    mpz_fdiv_r(r.get_mpz_t(), x.get_mpz_t(), p.get_mpz_t());
    return r;
  };
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a(i, j) = red(a(i, j));
  std::vector<int> pivot_col;
  std::size_t row = 0;
  for (std::size_t c = 0; c < n && row < n; ++c) {
    std::size_t piv = row;
    while (piv < n && a(piv, c) == 0) ++piv;
    if (piv == n) continue;
    for (std::size_t j = 0; j < n; ++j) std::swap(a(piv, j), a(row, j));
    Integer inv;
    mpz_invert(inv.get_mpz_t(), a(row, c).get_mpz_t(), p.get_mpz_t());
    for (std::size_t j = 0; j < n; ++j) a(row, j) = red(a(row, j) * inv);
    for (std::size_t r = 0; r < n; ++r) {
      if (r == row || a(r, c) == 0) continue;
      Integer fct = a(r, c);
      for (std::size_t j = 0; j < n; ++j) a(r, j) = red(a(r, j) - fct * a(row, j));
    }
    pivot_col.push_back(static_cast<int>(c));
    ++row;
  }
  std::vector<std::vector<Integer>> basis;
  std::set<int> pivots(pivot_col.begin(), pivot_col.end());
  for (std::size_t free = 0; free < n; ++free) {
    if (pivots.count(static_cast<int>(free))) continue;
    std::vector<Integer> v(n);
    v[free] = 1;
    for (std::size_t r = 0; r < pivot_col.size(); ++r) v[pivot_col[r]] = red(-a(r, free));
    basis.push_back(v);
  }
  return basis;
}

QLattice ring_closure(std::vector<std::vector<Rational>> gens, const ZPoly& f, std::size_t n) {
  QLattice lat = lattice_of(gens, n);
  for (;;) {
    std::vector<std::vector<Rational>> g2;
    for (std::size_t j = 0; j < n; ++j) g2.push_back(lat.column(j));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i; j < n; ++j) g2.push_back(power_mul(lat.column(i), lat.column(j), f));
    QLattice next = lattice_of(g2, n);
    if (next.hnf == lat.hnf && next.den == lat.den) return lat;
    lat = next;
  }
}

// Enlarges Z[theta] to the maximal order by searching, for each prime p with
// p^2 | disc(f), the elements (sum c_i b_i)/p with c in the kernel of the
// trace form mod p (a necessary condition for integrality).
QLattice maximal_order(const ZPoly& f, const Integer& disc_f) {
  const std::size_t n = f.size() - 1;
  std::vector<std::vector<Rational>> gens;
  for (std::size_t j = 0; j < n; ++j) {
    std::vector<Rational> e(n);
    e[j] = 1;
    gens.push_back(e);
  }
  QLattice lat = lattice_of(gens, n);
  if (n == 1) return lat;
  for (const auto& [p, e] : factor_integer(disc_f)) {
    if (e < 2) continue;
    for (bool grew = true; grew;) {
      grew = false;
      IntMatrix t(n, n);
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
          t(i, j) = power_trace(power_mul(lat.column(i), lat.column(j), f), f).get_num();
      auto ker = kernel_mod_p(t, p);
      if (ker.empty()) break;
      Integer total = pow_z(p, ker.size());
      if (total > Integer(1) << 22)
        throw Error(Errc::UnsupportedDegree, "integral basis search space too large at p=" + p.get_str());
      for (Integer idx = 1; idx < total && !grew; ++idx) {
        std::vector<Rational> x(n);
        Integer rest = idx;
        for (const auto& kv : ker) {
          Integer digit;
          mpz_fdiv_qr(rest.get_mpz_t(), digit.get_mpz_t(), rest.get_mpz_t(), p.get_mpz_t());
          if (digit == 0) continue;
          for (std::size_t j = 0; j < n; ++j) {
            if (kv[j] == 0) continue;
            auto col = lat.column(j);
            for (std::size_t i = 0; i < n; ++i) x[i] += Rational(digit * kv[j]) * col[i];
          }
        }
        for (auto& c : x) c /= Rational(p);
        if (!is_algebraic_integer(x, f)) continue;
        std::vector<std::vector<Rational>> g;
        for (std::size_t j = 0; j < n; ++j) g.push_back(lat.column(j));
        g.push_back(x);
        lat = ring_closure(g, f, n);
        grew = true;
      }
    }
  }
  return lat;
}

std::vector<std::complex<long double>> approximate_roots(const ZPoly& f) {
  const std::size_t n = f.size() - 1;
  using C = std::complex<long double>;
  long double bound = 1;
  for (std::size_t i = 0; i < n; ++i) bound = std::max(bound, 1 + std::fabs(static_cast<long double>(f[i].get_d())));
  std::vector<C> z(n);
  C seed(0.4L, 0.9L);
  C cur(1, 0);
  for (std::size_t k = 0; k < n; ++k) {
    cur *= seed;
    z[k] = cur * bound;
  }
  auto fe = [&](C x) {
    C r(0, 0);
    for (std::size_t i = f.size(); i-- > 0;) r = r * x + C(static_cast<long double>(f[i].get_d()), 0);
    return r;
  };
  for (int it = 0; it < 2000; ++it) {
    long double delta = 0;
    for (std::size_t i = 0; i < n; ++i) {
      C den(1, 0);
      for (std::size_t j = 0; j < n; ++j)
        if (j != i) den *= (z[i] - z[j]);
      C step = fe(z[i]) / den;
      z[i] -= step;
      delta = std::max(delta, std::abs(step));
    }
    if (delta < 1e-30L) break;
  }
  return z;
}

Rational round_dyadic(const Rational& x, unsigned bits) {
  Integer scale = pow_z(2, bits);
  Rational s = x * Rational(scale);
  Integer r = floor_q(s + Rational(1, 2));
  return make_rational(r, scale);
}

}  // namespace

// ---- NumberField::Data ----------------------------------------------------

struct NumberField::Data {
  ZPoly poly;
  QPoly qpoly;
  QPoly qderiv;
  int n = 0;
  Signature sig;
  RatMatrix basis;
  RatMatrix basis_inv;
  std::vector<std::vector<std::vector<Integer>>> table;  // table[i][j] = coords(omega_i omega_j)
  IntMatrix trace_form;
  Integer disc;
  Integer index;

  // Root isolation, refined lazily. Order: r1 real roots ascending, then the
  // r2 roots with positive imaginary part ordered by real part.
  struct RootState {
    std::vector<CQ> centers;
    std::vector<Rational> radii;
    std::vector<ComplexInterval> boxes;
  };
  mutable std::mutex root_mutex;
  mutable std::vector<RootState> levels;
  std::vector<std::complex<long double>> approx;

  const RootState& level(std::size_t k) const;
  RootState refine(const RootState* prev, std::size_t k) const;
};

NumberField::Data::RootState NumberField::Data::refine(const RootState* prev, std::size_t k) const {
  const unsigned bits = 48 + 40 * static_cast<unsigned>(k);
  RootState st;
  const std::size_t m = approx.size();
  if (prev) {
    st.centers = prev->centers;
  } else {
    for (const auto& z : approx) st.centers.push_back({from_double(static_cast<double>(z.real())),
                                                       from_double(static_cast<double>(z.imag()))});
  }
  st.radii.assign(m, 0);
  const Rational target = make_rational(1, pow_z(2, bits));
  for (std::size_t i = 0; i < m; ++i) {
    const bool is_real = static_cast<int>(i) < sig.r1;
    CQ z = st.centers[i];
    if (is_real) z.im = 0;
    for (int iter = 0; iter < 200; ++iter) {
      z.re = round_dyadic(z.re, bits + 8);
      z.im = is_real ? Rational(0) : round_dyadic(z.im, bits + 8);
      CQ fz = ceval(qpoly, z);
      if (fz.re == 0 && fz.im == 0) {
        st.radii[i] = 0;
        break;
      }
      CQ dz = ceval(qderiv, z);
      Rational d2 = dz.re * dz.re + dz.im * dz.im;
      Rational f2 = fz.re * fz.re + fz.im * fz.im;
      // A disc of radius n |f(z)/f'(z)| about z contains a root.
      Rational r2 = Rational(n * n) * f2 / d2;
      Rational r = sqrt_upper(r2, bits + 16);
      st.radii[i] = r;
      if (r <= target) break;
      // Newton step
      CQ q{(fz.re * dz.re + fz.im * dz.im) / d2, (fz.im * dz.re - fz.re * dz.im) / d2};
      z.re -= q.re;
      z.im -= q.im;
    }
    st.centers[i] = z;
  }
  // Disjointness (including conjugates) certifies one root per disc.
  auto disjoint = [&](const CQ& a, const Rational& ra, const CQ& b, const Rational& rb) {
    Rational dre = a.re - b.re, dim = a.im - b.im;
    Rational s = ra + rb;
    return dre * dre + dim * dim > s * s;
  };
  for (std::size_t i = 0; i < m; ++i) {
    if (static_cast<int>(i) >= sig.r1 && !(st.centers[i].im > st.radii[i]))
      throw Error(Errc::PrecisionUnreachable, "complex root disc meets the real axis");
    for (std::size_t j = i + 1; j < m; ++j) {
      if (!disjoint(st.centers[i], st.radii[i], st.centers[j], st.radii[j]))
        throw Error(Errc::PrecisionUnreachable, "root discs not separated");
      if (static_cast<int>(j) >= sig.r1) {
        CQ cj{st.centers[j].re, -st.centers[j].im};
        if (!disjoint(st.centers[i], st.radii[i], cj, st.radii[j]))
          throw Error(Errc::PrecisionUnreachable, "root discs not separated");
      }
    }
  }
  for (std::size_t i = 0; i < m; ++i) {
    const CQ& z = st.centers[i];
    const Rational& r = st.radii[i];
    ComplexInterval box{Interval(z.re - r, z.re + r),
                        static_cast<int>(i) < sig.r1 ? Interval(Rational(0)) : Interval(z.im - r, z.im + r)};
    if (prev) {
      box.re = intersect(box.re, prev->boxes[i].re);
      box.im = intersect(box.im, prev->boxes[i].im);
    }
    st.boxes.push_back(box);
  }
  return st;
}

const NumberField::Data::RootState& NumberField::Data::level(std::size_t k) const {
  std::lock_guard<std::mutex> lock(root_mutex);
  while (levels.size() <= k) {
    const RootState* prev = levels.empty() ? nullptr : &levels.back();
    RootState next = refine(prev, levels.size());
    levels.push_back(std::move(next));
  }
  return levels[k];
}

// ---- construction -----------------------------------------------------------

NumberField NumberField::make(const ZPoly& coeffs_in) {
  ZPoly coeffs = coeffs_in;
  while (!coeffs.empty() && coeffs.back() == 0) coeffs.pop_back();
  if (coeffs.size() < 2) throw Error(Errc::InvalidArgument, "polynomial must have degree >= 1");
  if (coeffs.back() != 1) throw Error(Errc::NonMonic, "leading coefficient must be 1");
  const int n = static_cast<int>(coeffs.size()) - 1;
  if (n > 4) throw Error(Errc::UnsupportedDegree, "irreducibility certified only up to degree 4");
  if (poly::has_small_factor(coeffs)) throw Error(Errc::ReduciblePolynomial, "polynomial has a factor over Q");

  auto d = std::make_shared<Data>();
  d->poly = coeffs;
  d->qpoly = poly::to_q(coeffs);
  d->qderiv = poly::derivative(d->qpoly);
  d->n = n;
  d->sig.r1 = poly::count_real_roots(d->qpoly);
  d->sig.r2 = (n - d->sig.r1) / 2;

  const Integer disc_f = poly::discriminant(d->qpoly).get_num();
  QLattice o = maximal_order(coeffs, disc_f);
  d->basis = RatMatrix(n, n);
  for (int j = 0; j < n; ++j) d->basis.set_column(j, o.column(j));
  d->basis_inv = *inverse(d->basis);
  Rational det_b = determinant(d->basis);
  d->index = Rational(1 / abs_q(det_b)).get_num();

  d->table.assign(n, std::vector<std::vector<Integer>>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      auto prod = power_mul(d->basis.column(i), d->basis.column(j), coeffs);
      auto c = d->basis_inv * prod;
      std::vector<Integer> zc(n);
      for (int k = 0; k < n; ++k) {
        if (c[k].get_den() != 1) throw Error(Errc::InvalidArgument, "integral basis is not a ring");
        zc[k] = c[k].get_num();
      }
      d->table[i][j] = zc;
    }
  d->trace_form = IntMatrix(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      d->trace_form(i, j) = power_trace(power_mul(d->basis.column(i), d->basis.column(j), coeffs), coeffs).get_num();
  d->disc = determinant(d->trace_form);

  // Floating approximations, classified with the certified real-root count.
  auto approx = approximate_roots(coeffs);
  std::sort(approx.begin(), approx.end(), [](auto a, auto b) { return std::fabs(a.imag()) < std::fabs(b.imag()); });
  std::vector<std::complex<long double>> reals(approx.begin(), approx.begin() + d->sig.r1);
  std::vector<std::complex<long double>> cplx;
  for (std::size_t i = d->sig.r1; i < approx.size(); ++i)
    if (approx[i].imag() > 0) cplx.push_back(approx[i]);
  for (auto& r : reals) r = {r.real(), 0};
  std::sort(reals.begin(), reals.end(), [](auto a, auto b) { return a.real() < b.real(); });
  std::sort(cplx.begin(), cplx.end(), [](auto a, auto b) { return a.real() < b.real(); });
  if (static_cast<int>(cplx.size()) != d->sig.r2)
    throw Error(Errc::PrecisionUnreachable, "root approximation failed to separate conjugate pairs");
  d->approx = reals;
  d->approx.insert(d->approx.end(), cplx.begin(), cplx.end());

  NumberField k;
  k.data_ = d;
  // Certify the isolation now so that later failures cannot surface mid-run,
  // and tighten the floating approximations.
  const auto& lvl = d->level(1);
  for (std::size_t i = 0; i < d->approx.size(); ++i)
    d->approx[i] = {static_cast<long double>(lvl.centers[i].re.get_d()),
                    static_cast<long double>(lvl.centers[i].im.get_d())};
  return k;
}

// ---- accessors and arithmetic ---------------------------------------------

int NumberField::degree() const { return data_->n; }
Signature NumberField::signature() const { return data_->sig; }
const Integer& NumberField::discriminant() const { return data_->disc; }
const Integer& NumberField::index() const { return data_->index; }
const ZPoly& NumberField::polynomial() const { return data_->poly; }
const RatMatrix& NumberField::integral_basis() const { return data_->basis; }
const IntMatrix& NumberField::trace_form() const { return data_->trace_form; }

FieldElement NumberField::zero() const { return FieldElement(std::vector<Rational>(data_->n)); }

FieldElement NumberField::one() const { return from_rational(1); }

FieldElement NumberField::from_rational(const Rational& q) const {
  FieldElement x = zero();
  x.coords[0] = q;
  return x;
}

FieldElement NumberField::from_power_basis(const std::vector<Rational>& c) const {
  std::vector<Rational> full(data_->n);
  for (std::size_t i = 0; i < c.size() && i < full.size(); ++i) full[i] = c[i];
  return FieldElement(data_->basis_inv * full);
}

std::vector<Rational> NumberField::to_power_basis(const FieldElement& x) const { return data_->basis * x.coords; }

FieldElement NumberField::theta() const {
  std::vector<Rational> c(data_->n);
  if (data_->n == 1) {
    c[0] = Rational(-data_->poly[0]);
    return FieldElement(c);
  }
  c[1] = 1;
  return from_power_basis(c);
}

const std::vector<Integer>& NumberField::table(std::size_t i, std::size_t j) const { return data_->table[i][j]; }

FieldElement NumberField::mul(const FieldElement& a, const FieldElement& b) const {
  const int n = data_->n;
  std::vector<Rational> r(n);
  for (int i = 0; i < n; ++i) {
    if (a.coords[i] == 0) continue;
    for (int j = 0; j < n; ++j) {
      if (b.coords[j] == 0) continue;
      Rational ab = a.coords[i] * b.coords[j];
      const auto& t = data_->table[i][j];
      for (int k = 0; k < n; ++k)
        if (t[k] != 0) r[k] += ab * Rational(t[k]);
    }
  }
  return FieldElement(std::move(r));
}

RatMatrix NumberField::mult_matrix(const FieldElement& a) const {
  const int n = data_->n;
  RatMatrix m(n, n);
  for (int j = 0; j < n; ++j)
    for (int i = 0; i < n; ++i) {
      if (a.coords[i] == 0) continue;
      const auto& t = data_->table[i][j];
      for (int k = 0; k < n; ++k) m(k, j) += a.coords[i] * Rational(t[k]);
    }
  return m;
}

FieldElement NumberField::inv(const FieldElement& a) const {
  if (a.is_zero()) throw Error(Errc::ZeroElement, "inverse of zero");
  auto sol = solve(mult_matrix(a), one().coords);
  return FieldElement(*sol);
}

FieldElement NumberField::pow(const FieldElement& a, long e) const {
  FieldElement base = e < 0 ? inv(a) : a;
  unsigned long k = static_cast<unsigned long>(e < 0 ? -e : e);
  FieldElement r = one();
  while (k) {
    if (k & 1) r = mul(r, base);
    k >>= 1;
    if (k) base = mul(base, base);
  }
  return r;
}

Rational NumberField::norm(const FieldElement& a) const { return determinant(mult_matrix(a)); }

Rational NumberField::trace(const FieldElement& a) const {
  Rational t = 0;
  for (int i = 0; i < data_->n; ++i)
    if (a.coords[i] != 0) {
      Rational ti = 0;
      for (int j = 0; j < data_->n; ++j) ti += Rational(data_->table[i][j][j]);
      t += a.coords[i] * ti;
    }
  return t;
}

QPoly NumberField::char_poly(const FieldElement& a) const { return char_poly_of(mult_matrix(a)); }

FieldElement NumberField::conjugate(const FieldElement& a) const {
  if (data_->n != 2) throw Error(Errc::NotQuadratic, "conjugate requires a quadratic field");
  auto c = to_power_basis(a);
  // theta -> -a1 - theta for x^2 + a1 x + a0
  Rational a1(data_->poly[1]);
  return from_power_basis({c[0] - a1 * c[1], -c[1]});
}

// ---- embeddings ----------------------------------------------------------

EmbeddingBox NumberField::embed(const FieldElement& x, const Rational& precision) const {
  if (precision <= 0) throw Error(Errc::InvalidArgument, "precision must be positive");
  const auto c = to_power_basis(x);
  const auto& sig = data_->sig;
  for (std::size_t k = 0; k < 24; ++k) {
    const auto& lvl = data_->level(k);
    EmbeddingBox box;
    box.precision = precision;
    for (int i = 0; i < sig.r1 + sig.r2; ++i) {
      ComplexInterval acc;
      for (std::size_t j = c.size(); j-- > 0;) {
        acc = acc * lvl.boxes[i];
        acc.re = acc.re + Interval(c[j]);
      }
      if (i < sig.r1)
        box.real.push_back(acc.re);
      else
        box.complex.push_back(acc);
    }
    if (box.max_width() <= precision) return box;
  }
  throw Error(Errc::PrecisionUnreachable, "refinement budget exhausted");
}

std::vector<std::complex<double>> NumberField::embed_double(const FieldElement& x) const {
  const auto c = to_power_basis(x);
  std::vector<std::complex<double>> out;
  for (const auto& root : data_->approx) {
    std::complex<long double> acc(0, 0);
    for (std::size_t j = c.size(); j-- > 0;) acc = acc * root + std::complex<long double>(c[j].get_d(), 0);
    out.emplace_back(static_cast<double>(acc.real()), static_cast<double>(acc.imag()));
  }
  return out;
}

std::vector<double> NumberField::minkowski_double(const FieldElement& x) const {
  auto e = embed_double(x);
  std::vector<double> out;
  for (int i = 0; i < data_->sig.r1; ++i) out.push_back(e[i].real());
  for (int i = data_->sig.r1; i < data_->sig.r1 + data_->sig.r2; ++i) {
    out.push_back(e[i].real());
    out.push_back(e[i].imag());
  }
  return out;
}

}  // namespace seuclid
