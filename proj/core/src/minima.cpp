// Copyright 2026 The seuclid Authors
// SPDX-License-Identifier: Apache-2.0

#include "seuclid/minima.hpp"

#include <cmath>

#include "seuclid/lattice.hpp"

namespace seuclid {

namespace {

// Log vectors of an independent subset of the unit generators.
std::vector<std::vector<double>> independent_logs(const SConfig& s) {
  std::vector<std::vector<double>> chosen, ortho;
  for (const auto& u : s.unit_gens) {
    auto l = log_vector_double(s, u);
    auto r = l;
    for (const auto& q : ortho) {
      double dq = 0, qq = 0;
      for (std::size_t i = 0; i < r.size(); ++i) {
        dq += r[i] * q[i];
        qq += q[i] * q[i];
      }
      for (std::size_t i = 0; i < r.size(); ++i) r[i] -= dq / qq * q[i];
    }
    double nr = 0, nl = 0;
    for (std::size_t i = 0; i < r.size(); ++i) {
      nr += r[i] * r[i];
      nl += l[i] * l[i];
    }
    if (nr > 1e-12 * std::max(1.0, nl)) {
      chosen.push_back(l);
      ortho.push_back(r);
    }
    if (chosen.size() + 1 == s.size()) break;
  }
  return chosen;
}

lattice::Vec weighted(const NumberField& k, const FieldElement& x, const std::vector<long double>& w) {
  auto m = k.minkowski_double(x);
  const int r1 = k.signature().r1;
  lattice::Vec out(m.size());
  for (std::size_t i = 0; i < m.size(); ++i) {
    std::size_t place = static_cast<int>(i) < r1 ? i : r1 + (i - r1) / 2;
    out[i] = static_cast<long double>(m[i]) * w[place];
  }
  return out;
}

}  // namespace

Rational m_upper_point(const FundamentalDomain& d, const FieldElement& x, const std::vector<FieldElement>& candidates) {
  if (candidates.empty()) throw Error(Errc::NoCandidates, "no candidate shifts");
  Rational best = -1;
  for (const auto& g : candidates) {
    Rational v = s_norm(d.s(), x - g);
    if (best < 0 || v < best) best = v;
  }
  return best / d.ideal_norm();
}

MinimumValue m_exact(const FundamentalDomain& d, const FieldElement& xi) { return m_exact(d, xi, d.orbit(xi)); }

MinimumValue m_exact(const FundamentalDomain& d, const FieldElement& xi,
                     const std::vector<FundamentalDomain::OrbitPoint>& orbit) {
  const SConfig& s = d.s();
  if (!s.verified) throw Error(Errc::UnverifiedUnits, "unit basis not verified");
  const auto& k = s.field;
  MinimumValue out;
  out.orbit_size = orbit.size();

  // The orbit representatives themselves give the first upper bound.
  Rational best = -1;
  std::size_t best_idx = 0;
  FieldElement best_eta;
  for (std::size_t i = 0; i < orbit.size(); ++i) {
    Rational v = s_norm(s, orbit[i].point);
    if (best < 0 || v < best) {
      best = v;
      best_idx = i;
      best_eta = orbit[i].point;
    }
  }
  auto finish = [&] {
    out.value = best / d.ideal_norm();
    out.shift = xi - k.mul(k.inv(orbit[best_idx].unit), best_eta);
    return out;
  };
  if (best == 0) return finish();

  // Every eta in xi' + a with N_S(eta) <= best has a unit translate whose log
  // vector lies in log(best)/s + the fundamental parallelepiped of the unit
  // log lattice, hence |eta|_v <= B_v.
  const std::size_t ns = s.size();
  std::vector<double> r(ns, 0.0);
  for (const auto& l : independent_logs(s))
    for (std::size_t v = 0; v < ns; ++v) r[v] += std::max(0.0, l[v]);
  const long double logc = std::log(static_cast<long double>(best.get_d()));
  std::vector<long double> bound(ns);
  out.search_box.resize(ns);
  for (std::size_t v = 0; v < ns; ++v) {
    bound[v] = std::exp(logc / ns + r[v]) * (1 + 1e-9L);
    out.search_box[v] = static_cast<double>(bound[v]);
  }

  // Finite places become lattice conditions v(eta) >= k_v.
  FractionalIdeal lam = d.ideal();
  FractionalIdeal positive = FractionalIdeal::unit(k);
  std::vector<long double> weight;
  std::size_t arch = 0;
  for (std::size_t v = 0; v < ns; ++v) {
    const Place& p = s.places[v];
    if (p.is_finite()) {
      long double np = static_cast<long double>(p.residue_norm().get_d());
      long kv = static_cast<long>(std::ceil(-std::log(bound[v]) / std::log(np) - 1e-9L));
      if (kv != 0) lam = lam * p.ideal.pow(kv);
      if (kv > 0) positive = positive * p.ideal.pow(kv);
    } else {
      ++arch;
      weight.push_back(p.kind == PlaceKind::Real ? 1 / bound[v] : 1 / std::sqrt(bound[v]));
    }
  }
  const auto lam_basis = lam.basis();
  lattice::Basis basis;
  for (const auto& b : lam_basis) basis.push_back(weighted(k, b, weight));

  for (std::size_t oi = 0; oi < orbit.size(); ++oi) {
    const FieldElement& rho = orbit[oi].point;
    FractionalIdeal rest = strip_s_primes(s, FractionalIdeal::from_gens(k, {k.one(), rho}));
    FieldElement eta0 = rho.is_zero() ? rho : split_sum(rho, d.ideal(), positive * rest).second;
    auto w0 = weighted(k, eta0, weight);
    for (auto& c : w0) c = -c;
    lattice::enumerate(basis, w0, static_cast<long double>(arch), [&](const lattice::IntVec& y) {
      ++out.lattice_points;
      FieldElement eta = eta0;
      for (std::size_t j = 0; j < y.size(); ++j)
        if (y[j] != 0) eta = eta + Rational(y[j]) * lam_basis[j];
      if (eta.is_zero()) return true;
      Rational v = s_norm(s, eta);
      if (v < best) {
        best = v;
        best_idx = oi;
        best_eta = eta;
      }
      return true;
    });
  }
  return finish();
}

SearchResult LowerSearch::next_level() {
  ++level_;
  SearchResult level_best;
  bool have = false;
  for (const auto& rep : d_.torsion_reps(level_)) {
    if (seen_.count(rep)) continue;
    auto orb = d_.orbit(rep);
    for (const auto& p : orb) seen_.insert(p.point);
    MinimumValue m = m_exact(d_, rep, orb);
    level_best.orbits++;
    level_best.points += orb.size();
    if (!have || m.value > level_best.m.value) {
      level_best.xi = rep;
      level_best.m = m;
      have = true;
    }
  }
  level_best.denominator = level_;
  best_.orbits += level_best.orbits;
  best_.points += level_best.points;
  if (have && (!have_best_ || level_best.m.value > best_.m.value)) {
    best_.xi = level_best.xi;
    best_.m = level_best.m;
    best_.denominator = level_;
    have_best_ = true;
  }
  if (!have) level_best.m.value = -1;  // every point already seen
  return level_best;
}

SearchResult search_lower(const FundamentalDomain& d, const Integer& denom_bound) {
  if (denom_bound < 1) throw Error(Errc::InvalidArgument, "denominator bound must be positive");
  LowerSearch search(d);
  while (search.level() < denom_bound) search.next_level();
  return search.best();
}

}  // namespace seuclid
