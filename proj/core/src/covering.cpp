// Copyright 2026 The seuclid Authors
// SPDX-License-Identifier: Apache-2.0

#include "seuclid/covering.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <complex>
#include <map>
#include <mutex>
#include <queue>
#include <thread>

#include "seuclid/lattice.hpp"

namespace seuclid {

namespace {

constexpr unsigned kEmbedBits = 96;
constexpr unsigned kBoundBits = 48;
constexpr std::size_t kRoundSize = 64;
constexpr std::size_t kKeep = 4;
constexpr std::size_t kExact = 2;
constexpr int kMinProfile = -2;

using CVec = std::vector<std::complex<double>>;

struct FinitePlace {
  Place v;
  Rational np;
  FieldElement pi;                    // v(pi) = 1
  std::vector<FieldElement> residues;  // representatives of O / P, 0 first
};

// Shared read-mostly data for bound evaluation; caches are mutex guarded.
class Context {
 public:
  explicit Context(const FundamentalDomain& d) : d_(d), k_(d.field()) {
    basis_ = d.ideal().basis();
    const Rational prec = make_rational(1, pow_z(2, kEmbedBits));
    for (const auto& b : basis_) {
      basis_box_.push_back(k_.embed(b, prec));
      basis_emb_.push_back(k_.embed_double(b));
    }
    r1_ = k_.signature().r1;
    narch_ = r1_ + k_.signature().r2;
    nb_ = d.ideal_norm();
    for (const auto& v : d.s().places) {
      if (!v.is_finite()) continue;
      FinitePlace fp;
      fp.v = v;
      fp.np = Rational(v.residue_norm());
      for (const auto& c : {v.gen, k_.from_rational(Rational(v.p)), v.gen + k_.from_rational(Rational(v.p))})
        if (!c.is_zero() && valuation(k_, c, v) == 1) {
          fp.pi = c;
          break;
        }
      fp.residues = residue_reps(v);
      fin_.push_back(fp);
    }
  }

  const FundamentalDomain& domain() const { return d_; }
  const NumberField& field() const { return k_; }
  const std::vector<FieldElement>& basis() const { return basis_; }
  const std::vector<FinitePlace>& fin() const { return fin_; }
  int narch() const { return narch_; }
  int r1() const { return r1_; }

  const EmbeddingBox& gamma_box(const FieldElement& g) const {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = gamma_boxes_.find(g);
    if (it != gamma_boxes_.end()) return it->second;
    return gamma_boxes_.emplace(g, k_.embed(g, make_rational(1, pow_z(2, kEmbedBits)))).first->second;
  }

  const FractionalIdeal& prime_power(std::size_t f, int j) const {
    std::lock_guard<std::mutex> lock(mu_);
    auto key = std::make_pair(f, j);
    auto it = powers_.find(key);
    if (it != powers_.end()) return it->second;
    return powers_.emplace(key, fin_[f].v.ideal.pow(j)).first->second;
  }

  // Finite factor |x - gamma|_v over the class x = r mod P^k.
  Rational finite_factor(std::size_t f, const FiniteClass& c, const FieldElement& gamma) const {
    const FinitePlace& fp = fin_[f];
    FieldElement diff = c.r - gamma;
    long w = diff.is_zero() ? c.k : valuation(k_, diff, fp.v);
    return pow_q(fp.np, -std::min<long>(w, c.k));
  }

  // Canonical certified bound.
  Rational bound(const CoverBox& box, const FieldElement& gamma) const {
    const EmbeddingBox& gb = gamma_box(gamma);
    Rational prod = 1;
    for (int a = 0; a < narch_; ++a) {
      if (a < r1_) {
        Interval acc = -gb.real[a];
        for (std::size_t i = 0; i < basis_.size(); ++i) acc = acc + box.y[i] * basis_box_[i].real[a];
        prod *= acc.mag();
      } else {
        const auto& g = gb.complex[a - r1_];
        ComplexInterval acc(-g.re, -g.im);
        for (std::size_t i = 0; i < basis_.size(); ++i) {
          const auto& e = basis_box_[i].complex[a - r1_];
          acc = acc + ComplexInterval(box.y[i] * e.re, box.y[i] * e.im);
        }
        prod *= acc.norm2().hi;
      }
      if (prod == 0) break;
    }
    for (std::size_t f = 0; f < fin_.size(); ++f) prod *= finite_factor(f, box.fin[f], gamma);
    return round_up_dyadic(prod / nb_, kBoundBits);
  }

  // Floating estimate of the arch part for a shift with embedding eg.
  double arch_estimate(const std::vector<double>& mid, const std::vector<double>& half, const CVec& eg) const {
    double prod = 1;
    for (int a = 0; a < narch_; ++a) {
      std::complex<double> c = -eg[a];
      double rad = 0;
      for (std::size_t i = 0; i < basis_.size(); ++i) {
        c += mid[i] * basis_emb_[i][a];
        rad += half[i] * std::abs(basis_emb_[i][a]);
      }
      double s = std::abs(c) + rad;
      prod *= a < r1_ ? s : s * s;
    }
    return prod;
  }

  const CVec& basis_emb(std::size_t i) const { return basis_emb_[i]; }

  struct Profile {
    std::vector<FieldElement> lattice;  // LLL-reduced basis of b * prod P^j
    std::vector<CVec> lattice_emb;
    std::vector<std::vector<long double>> inv;  // Minkowski -> lattice coordinates
    std::vector<FieldElement> idem;             // per finite place; zero if j <= 0
  };

  const Profile& profile(const std::vector<int>& j) const {
    {
      std::lock_guard<std::mutex> lock(mu_);
      auto it = profiles_.find(j);
      if (it != profiles_.end()) return it->second;
    }
    Profile p = build_profile(j);
    std::lock_guard<std::mutex> lock(mu_);
    return profiles_.emplace(j, std::move(p)).first->second;
  }

  std::vector<double> minkowski(const CVec& e) const {
    std::vector<double> m;
    for (int a = 0; a < narch_; ++a) {
      if (a < r1_) {
        m.push_back(e[a].real());
      } else {
        m.push_back(e[a].real());
        m.push_back(e[a].imag());
      }
    }
    return m;
  }

 private:
  std::vector<FieldElement> residue_reps(const Place& v) const {
    const int n = k_.degree();
    const long p = v.p.get_si();
    std::vector<FieldElement> reps;
    std::vector<long> c(n, 0);
    const std::size_t want = v.residue_norm().get_ui();
    for (;;) {
      std::vector<Rational> q(c.begin(), c.end());
      FieldElement x(q);
      bool fresh = std::none_of(reps.begin(), reps.end(), [&](const FieldElement& y) { return v.ideal.contains(x - y); });
      if (fresh) reps.push_back(x);
      if (reps.size() == want) break;
      int i = n - 1;
      while (i >= 0 && c[i] == p - 1) c[i--] = 0;
      if (i < 0) break;
      ++c[i];
    }
    return reps;
  }

  Profile build_profile(const std::vector<int>& j) const {
    Profile p;
    FractionalIdeal lat = d_.ideal();
    for (std::size_t f = 0; f < fin_.size(); ++f)
      if (j[f] != 0) lat = lat * prime_power(f, j[f]);
    auto hb = lat.basis();
    lattice::Basis mb;
    for (const auto& b : hb) {
      auto m = minkowski(k_.embed_double(b));
      mb.emplace_back(m.begin(), m.end());
    }
    auto u = lattice::lll(mb);
    const std::size_t n = hb.size();
    for (std::size_t c = 0; c < n; ++c) {
      FieldElement x = k_.zero();
      for (std::size_t t = 0; t < n; ++t)
        if (u[c][t] != 0) x = x + Rational(u[c][t]) * hb[t];
      p.lattice.push_back(x);
      p.lattice_emb.push_back(k_.embed_double(x));
    }
    // Inverse of the reduced Minkowski basis.
    std::vector<std::vector<long double>> a(n, std::vector<long double>(2 * n, 0));
    for (std::size_t c = 0; c < n; ++c) {
      auto m = minkowski(p.lattice_emb[c]);
      for (std::size_t r = 0; r < n; ++r) a[r][c] = m[r];
      a[c][n + c] = 1;
    }
    for (std::size_t c = 0; c < n; ++c) {
      std::size_t piv = c;
      for (std::size_t r = c + 1; r < n; ++r)
        if (std::fabs(a[r][c]) > std::fabs(a[piv][c])) piv = r;
      std::swap(a[c], a[piv]);
      for (std::size_t r = 0; r < n; ++r) {
        if (r == c) continue;
        long double f = a[r][c] / a[c][c];
        for (std::size_t t = 0; t < 2 * n; ++t) a[r][t] -= f * a[c][t];
      }
    }
    p.inv.assign(n, std::vector<long double>(n));
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c) p.inv[r][c] = a[r][n + c] / a[r][r];
    // CRT idempotents inside b.
    for (std::size_t f = 0; f < fin_.size(); ++f) {
      if (j[f] <= 0) {
        p.idem.push_back(k_.zero());
        continue;
      }
      FractionalIdeal others = d_.ideal();
      for (std::size_t g = 0; g < fin_.size(); ++g)
        if (g != f && j[g] > 0) others = others * prime_power(g, j[g]);
      p.idem.push_back(split_sum(k_.one(), prime_power(f, j[f]), others).second);
    }
    return p;
  }

  const FundamentalDomain& d_;
  NumberField k_;
  std::vector<FieldElement> basis_;
  std::vector<EmbeddingBox> basis_box_;
  std::vector<CVec> basis_emb_;
  std::vector<FinitePlace> fin_;
  int r1_ = 0, narch_ = 0;
  Rational nb_;
  mutable std::mutex mu_;
  mutable std::map<FieldElement, EmbeddingBox> gamma_boxes_;
  mutable std::map<std::pair<std::size_t, int>, FractionalIdeal> powers_;
  mutable std::map<std::vector<int>, Profile> profiles_;
};

struct Evaluation {
  Rational bound;
  FieldElement gamma;
  std::vector<FieldElement> keep;
  std::size_t screened = 0;
};

struct Screened {
  double est;
  FieldElement gamma;
};

Evaluation evaluate(const Context& ctx, const CoverBox& box, const std::vector<FieldElement>& inherited) {
  const auto& k = ctx.field();
  const std::size_t n = ctx.basis().size();
  const std::size_t nf = ctx.fin().size();
  std::vector<double> mid(n), half(n);
  for (std::size_t i = 0; i < n; ++i) {
    mid[i] = box.y[i].mid().get_d();
    half[i] = box.y[i].width().get_d() / 2;
  }
  std::vector<Screened> pool;
  Evaluation ev;
  auto fin_estimate = [&](const FieldElement& g) {
    double f = 1;
    for (std::size_t i = 0; i < nf; ++i) f *= ctx.finite_factor(i, box.fin[i], g).get_d();
    return f;
  };
  for (const auto& g : inherited) {
    pool.push_back({ctx.arch_estimate(mid, half, k.embed_double(g)) * fin_estimate(g), g});
    ++ev.screened;
  }

  // Fresh shifts: for each valuation profile j, Babai rounding of the box
  // centre in the coset of b * prod P^j that matches the residue classes.
  CVec centre(ctx.narch(), 0);
  for (std::size_t i = 0; i < n; ++i)
    for (int a = 0; a < ctx.narch(); ++a) centre[a] += mid[i] * ctx.basis_emb(i)[a];
  std::vector<std::vector<int>> choices(nf);
  for (std::size_t f = 0; f < nf; ++f) {
    const int kf = box.fin[f].k;
    for (int j = kMinProfile; j <= std::min(0, kf); ++j) choices[f].push_back(j);
    for (int j = std::max(1, kf - 2); j <= kf; ++j) choices[f].push_back(j);
  }
  std::vector<std::size_t> idx(nf, 0);
  struct Fresh {
    double est;
    const Context::Profile* prof;
    FieldElement base;
    std::vector<long> coef;
  };
  std::vector<Fresh> fresh;
  for (;;) {
    std::vector<int> j(nf);
    double fin_scale = 1;
    for (std::size_t f = 0; f < nf; ++f) {
      j[f] = choices[f][idx[f]];
      fin_scale *= std::pow(ctx.fin()[f].np.get_d(), -std::min(j[f], box.fin[f].k));
    }
    const auto& prof = ctx.profile(j);
    FieldElement base = k.zero();
    for (std::size_t f = 0; f < nf; ++f)
      if (j[f] > 0) base = base + k.mul(box.fin[f].r, prof.idem[f]);
    CVec be = base.is_zero() ? CVec(ctx.narch(), 0) : k.embed_double(base);
    CVec diff(ctx.narch());
    for (int a = 0; a < ctx.narch(); ++a) diff[a] = centre[a] - be[a];
    auto md = ctx.minkowski(diff);
    std::vector<long> round(n);
    for (std::size_t r = 0; r < n; ++r) {
      long double s = 0;
      for (std::size_t c = 0; c < n; ++c) s += prof.inv[r][c] * md[c];
      round[r] = std::lround(static_cast<double>(s));
    }
    std::vector<long> off(n, -1);
    for (;;) {
      CVec eg = be;
      std::vector<long> coef(n);
      for (std::size_t r = 0; r < n; ++r) {
        coef[r] = round[r] + off[r];
        for (int a = 0; a < ctx.narch(); ++a) eg[a] += static_cast<double>(coef[r]) * prof.lattice_emb[r][a];
      }
      fresh.push_back({ctx.arch_estimate(mid, half, eg) * fin_scale, &prof, base, coef});
      ++ev.screened;
      std::size_t r = n;
      while (r > 0 && off[r - 1] == 1) off[--r] = -1;
      if (r == 0) break;
      ++off[r - 1];
    }
    std::size_t f = nf;
    while (f > 0 && idx[f - 1] + 1 == choices[f - 1].size()) idx[--f] = 0;
    if (f == 0) break;
    ++idx[f - 1];
  }
  std::stable_sort(fresh.begin(), fresh.end(), [](const Fresh& a, const Fresh& b) { return a.est < b.est; });
  for (std::size_t i = 0; i < fresh.size() && i < kKeep; ++i) {
    FieldElement g = fresh[i].base;
    for (std::size_t r = 0; r < n; ++r)
      if (fresh[i].coef[r] != 0) g = g + Rational(fresh[i].coef[r]) * fresh[i].prof->lattice[r];
    pool.push_back({fresh[i].est, g});
  }
  std::stable_sort(pool.begin(), pool.end(), [](const Screened& a, const Screened& b) { return a.est < b.est; });
  // Deduplicate, keep the best few, certify the best exactly.
  std::vector<FieldElement> keep;
  for (const auto& s : pool) {
    if (std::find(keep.begin(), keep.end(), s.gamma) != keep.end()) continue;
    keep.push_back(s.gamma);
    if (keep.size() == kKeep) break;
  }
  bool have = false;
  for (std::size_t i = 0; i < keep.size() && i < kExact; ++i) {
    Rational b = ctx.bound(box, keep[i]);
    if (!have || b < ev.bound) {
      ev.bound = b;
      ev.gamma = keep[i];
      have = true;
    }
  }
  ev.keep = std::move(keep);
  return ev;
}

FieldElement reduce_class(const Context& ctx, std::size_t f, int k, const FieldElement& r) {
  const FractionalIdeal& pk = ctx.prime_power(f, k);
  auto y = pk.coordinates(r);
  FieldElement out = r;
  for (std::size_t i = 0; i < y.size(); ++i) {
    Integer fl = floor_q(y[i]);
    if (fl != 0) out = out - Rational(fl) * pk.basis(i);
  }
  return out;
}

std::vector<CoverBox> arch_split(const CoverBox& box) {
  std::size_t axis = 0;
  for (std::size_t i = 1; i < box.y.size(); ++i)
    if (box.y[i].width() > box.y[axis].width()) axis = i;
  CoverBox lo = box, hi = box;
  const Rational m = box.y[axis].mid();
  lo.y[axis].hi = m;
  hi.y[axis].lo = m;
  return {lo, hi};
}

std::vector<CoverBox> finite_split(const Context& ctx, const CoverBox& box, std::size_t f) {
  const auto& fp = ctx.fin()[f];
  const auto& k = ctx.field();
  const FiniteClass& c = box.fin[f];
  FieldElement pik = k.pow(fp.pi, c.k);
  std::vector<CoverBox> out;
  for (const auto& s : fp.residues) {
    CoverBox child = box;
    child.fin[f].k = c.k + 1;
    child.fin[f].r = reduce_class(ctx, f, c.k + 1, c.r + k.mul(pik, s));
    out.push_back(child);
  }
  return out;
}

struct Item {
  CoverBox box;
  Evaluation ev;
  std::size_t serial = 0;
  std::size_t depth = 0;
};

struct Worse {
  bool operator()(const Item& a, const Item& b) const {
    if (a.ev.bound != b.ev.bound) return a.ev.bound < b.ev.bound;
    return a.serial > b.serial;
  }
};

struct Children {
  std::vector<CoverBox> boxes;
  std::vector<Evaluation> evals;
  std::size_t screened = 0;
};

Children expand(const Context& ctx, const Item& item) {
  Children best;
  Rational best_max = -1;
  auto consider = [&](std::vector<CoverBox> boxes) {
    Children ch;
    Rational mx = 0;
    for (auto& b : boxes) {
      ch.evals.push_back(evaluate(ctx, b, item.ev.keep));
      ch.screened += ch.evals.back().screened;
      mx = std::max(mx, ch.evals.back().bound);
    }
    ch.boxes = std::move(boxes);
    if (best_max < 0 || mx < best_max) {
      best_max = mx;
      best = std::move(ch);
    }
  };
  consider(arch_split(item.box));
  for (std::size_t f = 0; f < ctx.fin().size(); ++f) consider(finite_split(ctx, item.box, f));
  return best;
}

bool box_less(const CoverBox& a, const CoverBox& b) {
  for (std::size_t i = 0; i < a.y.size(); ++i) {
    if (a.y[i].lo != b.y[i].lo) return a.y[i].lo < b.y[i].lo;
    if (a.y[i].hi != b.y[i].hi) return a.y[i].hi < b.y[i].hi;
  }
  for (std::size_t f = 0; f < a.fin.size(); ++f) {
    if (a.fin[f].k != b.fin[f].k) return a.fin[f].k < b.fin[f].k;
    if (!(a.fin[f].r == b.fin[f].r)) return a.fin[f].r < b.fin[f].r;
  }
  return false;
}

}  // namespace

// ---- public helpers ---------------------------------------------------------

CoverBox root_box(const FundamentalDomain& d) {
  CoverBox box;
  for (int i = 0; i < d.field().degree(); ++i) box.y.emplace_back(Rational(0), Rational(1));
  for (const auto& v : d.s().places)
    if (v.is_finite()) box.fin.push_back({0, d.field().zero()});
  return box;
}

Rational box_bound(const FundamentalDomain& d, const CoverBox& box, const FieldElement& gamma) {
  Context ctx(d);
  return ctx.bound(box, gamma);
}

Rational m_upper_adele(const FundamentalDomain& d, const CoverBox& box, const std::vector<FieldElement>& candidates) {
  if (candidates.empty()) throw Error(Errc::NoCandidates, "no candidate shifts");
  Context ctx(d);
  Rational best = -1;
  for (const auto& g : candidates) {
    Rational b = ctx.bound(box, g);
    if (best < 0 || b < best) best = b;
  }
  return best;
}

Rational m_upper_adele(const FundamentalDomain& d, const AdelePoint& point, const std::vector<FieldElement>& candidates) {
  if (candidates.empty()) throw Error(Errc::NoCandidates, "no candidate shifts");
  if (point.exact) return m_upper_point(d, *point.exact, candidates);
  const auto& k = d.field();
  const int r1 = k.signature().r1;
  Rational best = -1;
  for (const auto& g : candidates) {
    EmbeddingBox gb = k.embed(g, make_rational(1, pow_z(2, kEmbedBits)));
    Rational prod = 1;
    for (std::size_t a = 0; a < point.real.size(); ++a) prod *= (point.real[a] - gb.real[a]).mag();
    for (std::size_t a = 0; a < point.complex.size(); ++a) prod *= (point.complex[a] - gb.complex[a]).norm2().hi;
    std::size_t f = 0;
    for (const auto& v : d.s().places) {
      if (!v.is_finite()) continue;
      const auto& [x, kk] = point.finite[f++];
      FieldElement diff = x - g;
      long w = diff.is_zero() ? kk : std::min<long>(kk, valuation(k, diff, v));
      prod *= pow_q(Rational(v.residue_norm()), -w);
    }
    (void)r1;
    Rational b = prod / d.ideal_norm();
    if (best < 0 || b < best) best = b;
  }
  return best;
}

bool box_contains(const FundamentalDomain& d, const CoverBox& box, const FieldElement& x) {
  auto y = d.ideal().coordinates(x);
  for (std::size_t i = 0; i < y.size(); ++i)
    if (y[i] < box.y[i].lo || y[i] >= box.y[i].hi) return false;
  std::size_t f = 0;
  for (const auto& v : d.s().places) {
    if (!v.is_finite()) continue;
    const FiniteClass& c = box.fin[f++];
    FieldElement diff = x - c.r;
    if (!diff.is_zero() && valuation(d.field(), diff, v) < c.k) return false;
  }
  return true;
}

// ---- search -------------------------------------------------------------------

struct CoverSearch::Impl {
  Impl(const FundamentalDomain& d, const Rational& t, unsigned w) : ctx(d), t(t), workers(std::max(1u, w)) {
    Item root;
    root.box = root_box(d);
    root.ev = evaluate(ctx, root.box, {});
    stats.candidates_screened += root.ev.screened;
    accept(std::move(root));
  }

  void accept(Item item) {
    if (item.ev.bound < t) {
      certified.push_back({item.box, item.ev.gamma, item.ev.bound});
      ++stats.certified;
    } else {
      item.serial = next_serial++;
      queue.push(std::move(item));
    }
  }

  Context ctx;
  Rational t;
  unsigned workers;
  std::priority_queue<Item, std::vector<Item>, Worse> queue;
  std::vector<CertifiedBox> certified;
  CoveringStats stats;
  std::size_t next_serial = 0;
};

CoverSearch::CoverSearch(const FundamentalDomain& d, const Rational& t, unsigned workers)
    : impl_(std::make_unique<Impl>(d, t, workers)) {
  if (t <= 0) throw Error(Errc::InvalidArgument, "threshold must be positive");
}

CoverSearch::~CoverSearch() = default;

bool CoverSearch::complete() const { return impl_->queue.empty(); }

bool CoverSearch::step(std::size_t budget) {
  auto& im = *impl_;
  std::size_t done = 0;
  while (!im.queue.empty() && done < budget) {
    const std::size_t take = std::min({kRoundSize, budget - done, im.queue.size()});
    std::vector<Item> round;
    for (std::size_t i = 0; i < take; ++i) {
      round.push_back(im.queue.top());
      im.queue.pop();
    }
    std::vector<Children> results(round.size());
    if (im.workers == 1 || round.size() == 1) {
      for (std::size_t i = 0; i < round.size(); ++i) results[i] = expand(im.ctx, round[i]);
    } else {
      std::atomic<std::size_t> next{0};
      std::vector<std::thread> pool;
      std::mutex err_mu;
      std::exception_ptr err;
      for (unsigned w = 0; w < std::min<std::size_t>(im.workers, round.size()); ++w)
        pool.emplace_back([&] {
          for (std::size_t i; (i = next++) < round.size();) {
            try {
              results[i] = expand(im.ctx, round[i]);
            } catch (...) {
              std::lock_guard<std::mutex> lock(err_mu);
              if (!err) err = std::current_exception();
            }
          }
        });
      for (auto& th : pool) th.join();
      if (err) std::rethrow_exception(err);
    }
    for (std::size_t i = 0; i < round.size(); ++i) {
      ++im.stats.processed;
      im.stats.candidates_screened += results[i].screened;
      for (std::size_t c = 0; c < results[i].boxes.size(); ++c) {
        Item child;
        child.box = std::move(results[i].boxes[c]);
        child.ev = std::move(results[i].evals[c]);
        child.depth = round[i].depth + 1;
        im.stats.max_depth = std::max(im.stats.max_depth, child.depth);
        im.accept(std::move(child));
      }
    }
    done += take;
  }
  return im.queue.empty();
}

CoveringResult CoverSearch::result() const {
  CoveringResult r;
  r.complete = complete();
  r.stats = impl_->stats;
  r.certificate.t = impl_->t;
  r.certificate.boxes = impl_->certified;
  std::sort(r.certificate.boxes.begin(), r.certificate.boxes.end(),
            [](const CertifiedBox& a, const CertifiedBox& b) { return box_less(a.box, b.box); });
  auto q = impl_->queue;
  while (!q.empty()) {
    const Item& it = q.top();
    r.unresolved.push_back({it.box, it.ev.gamma, it.ev.bound});
    q.pop();
  }
  return r;
}

CoveringResult covering_verify(const FundamentalDomain& d, const Rational& t, std::size_t budget, unsigned workers) {
  CoverSearch search(d, t, workers);
  search.step(budget);
  return search.result();
}

// ---- replay -------------------------------------------------------------------

namespace {

class Replayer {
 public:
  Replayer(const FundamentalDomain& d, const CoveringCertificate& cert) : d_(d), cert_(cert), ctx_(d) {
    for (const auto& v : d.s().places)
      if (v.is_finite()) places_.push_back(v);
    const Rational prec = make_rational(1, pow_z(2, 128));
    for (const auto& b : d.ideal().basis()) basis_box_.push_back(d.field().embed(b, prec));
  }

  ReplayReport run() {
    ReplayReport rep;
    rep.boxes = cert_.boxes.size();
    const std::size_t n = d_.field().degree();
    for (std::size_t i = 0; i < cert_.boxes.size(); ++i) {
      const auto& cb = cert_.boxes[i];
      if (cb.box.y.size() != n || cb.box.fin.size() != places_.size()) return fail(rep, i, "malformed box");
      for (const auto& iv : cb.box.y)
        if (!(iv.lo < iv.hi)) return fail(rep, i, "empty interval");
      for (const auto& c : cb.box.fin)
        if (c.k < 0 || c.r.size() != n || !c.r.is_integral()) return fail(rep, i, "malformed residue class");
      if (cb.gamma.size() != n || !d_.in_ideal(cb.gamma)) return fail(rep, i, "shift not in the ideal");
      if (!(cb.bound < cert_.t)) return fail(rep, i, "bound not below t");
      if (ctx_.bound(cb.box, cb.gamma) != cb.bound) return fail(rep, i, "bound does not match recomputation");
      if (vertex_bound(cb.box, cb.gamma) > cb.bound) return fail(rep, i, "vertex bound exceeds stored bound");
    }
    std::vector<std::size_t> all(cert_.boxes.size());
    for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
    CoverBox root = root_box(d_);
    if (!tiles(root, all)) {
      rep.reason = "boxes do not tile the fundamental domain";
      return rep;
    }
    rep.ok = true;
    rep.reason = "ok";
    return rep;
  }

 private:
  ReplayReport fail(ReplayReport& rep, std::size_t i, const std::string& why) {
    rep.ok = false;
    rep.reason = "box " + std::to_string(i) + ": " + why;
    return rep;
  }

  bool same_class(std::size_t f, const FieldElement& a, const FieldElement& b, int k) const {
    if (k == 0) return true;
    FieldElement diff = a - b;
    return diff.is_zero() || valuation(d_.field(), diff, places_[f]) >= k;
  }

  // sup |L| of an affine function over a box is attained at a vertex.
  Rational vertex_bound(const CoverBox& box, const FieldElement& gamma) const {
    const auto& k = d_.field();
    const int r1 = k.signature().r1, narch = r1 + k.signature().r2;
    const std::size_t n = box.y.size();
    EmbeddingBox gb = k.embed(gamma, make_rational(1, pow_z(2, 128)));
    Rational prod = 1;
    for (int a = 0; a < narch; ++a) {
      Rational worst = 0;
      for (std::size_t mask = 0; mask < (std::size_t(1) << n); ++mask) {
        ComplexInterval acc = a < r1 ? ComplexInterval(-gb.real[a], Interval(Rational(0)))
                                     : ComplexInterval(-gb.complex[a - r1].re, -gb.complex[a - r1].im);
        for (std::size_t i = 0; i < n; ++i) {
          const Rational& y = (mask >> i) & 1 ? box.y[i].hi : box.y[i].lo;
          if (a < r1) {
            acc.re = acc.re + y * basis_box_[i].real[a];
          } else {
            acc.re = acc.re + y * basis_box_[i].complex[a - r1].re;
            acc.im = acc.im + y * basis_box_[i].complex[a - r1].im;
          }
        }
        Rational v = a < r1 ? acc.re.mag() : acc.norm2().hi;
        worst = std::max(worst, v);
      }
      prod *= worst;
    }
    for (std::size_t f = 0; f < places_.size(); ++f) {
      const FiniteClass& c = box.fin[f];
      FieldElement diff = c.r - gamma;
      long w = c.k;
      if (!diff.is_zero()) w = std::min<long>(w, valuation(k, diff, places_[f]));
      prod *= pow_q(Rational(places_[f].residue_norm()), -w);
    }
    return prod / d_.ideal_norm();
  }

  bool equals_region(const CoverBox& region, const CoverBox& box) const {
    for (std::size_t i = 0; i < region.y.size(); ++i)
      if (!(region.y[i] == box.y[i])) return false;
    for (std::size_t f = 0; f < places_.size(); ++f) {
      if (region.fin[f].k != box.fin[f].k) return false;
      if (!same_class(f, region.fin[f].r, box.fin[f].r, region.fin[f].k)) return false;
    }
    return true;
  }

  // Guillotine reconstruction: the boxes tile `region` iff it is one of them
  // or some midpoint / residue split is compatible with all of them and every
  // part is tiled.
  bool tiles(const CoverBox& region, const std::vector<std::size_t>& ids) const {
    if (ids.empty()) return false;
    if (ids.size() == 1) return equals_region(region, cert_.boxes[ids[0]].box);
    for (std::size_t i = 0; i < region.y.size(); ++i) {
      const Rational m = region.y[i].mid();
      std::vector<std::size_t> lo, hi;
      bool ok = true;
      for (auto id : ids) {
        const Interval& iv = cert_.boxes[id].box.y[i];
        if (iv.lo >= region.y[i].lo && iv.hi <= m) {
          lo.push_back(id);
        } else if (iv.lo >= m && iv.hi <= region.y[i].hi) {
          hi.push_back(id);
        } else {
          ok = false;
          break;
        }
      }
      if (!ok || lo.empty() || hi.empty()) continue;
      CoverBox a = region, b = region;
      a.y[i].hi = m;
      b.y[i].lo = m;
      return tiles(a, lo) && tiles(b, hi);
    }
    for (std::size_t f = 0; f < places_.size(); ++f) {
      const int k = region.fin[f].k;
      bool ok = true;
      for (auto id : ids) {
        const FiniteClass& c = cert_.boxes[id].box.fin[f];
        if (c.k <= k || !same_class(f, c.r, region.fin[f].r, k)) {
          ok = false;
          break;
        }
      }
      if (!ok) continue;
      std::vector<std::vector<std::size_t>> groups;
      std::vector<FieldElement> reps;
      for (auto id : ids) {
        const FieldElement& r = cert_.boxes[id].box.fin[f].r;
        std::size_t g = 0;
        while (g < reps.size() && !same_class(f, reps[g], r, k + 1)) ++g;
        if (g == reps.size()) {
          reps.push_back(r);
          groups.emplace_back();
        }
        groups[g].push_back(id);
      }
      if (groups.size() != places_[f].residue_norm()) return false;
      for (std::size_t g = 0; g < groups.size(); ++g) {
        CoverBox child = region;
        child.fin[f] = {k + 1, reps[g]};
        if (!tiles(child, groups[g])) return false;
      }
      return true;
    }
    return false;
  }

  const FundamentalDomain& d_;
  const CoveringCertificate& cert_;
  Context ctx_;
  std::vector<Place> places_;
  std::vector<EmbeddingBox> basis_box_;
};

}  // namespace

ReplayReport verify_certificate(const FundamentalDomain& d, const CoveringCertificate& cert) {
  if (!(cert.t > 0)) return {false, "threshold must be positive", cert.boxes.size()};
  try {
    return Replayer(d, cert).run();
  } catch (const Error& e) {
    return {false, std::string("replay error: ") + e.what(), cert.boxes.size()};
  }
}

}  // namespace seuclid
