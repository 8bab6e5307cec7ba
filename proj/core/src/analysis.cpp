// Copyright 2026 The seuclid Authors
// SPDX-License-Identifier: Apache-2.0

#include "seuclid/analysis.hpp"

namespace seuclid {

namespace {

constexpr int kGapSteps = 4;             // start at gap * 2^kGapSteps
constexpr std::size_t kDecideChunk = 256;
constexpr std::size_t kLocalizeBudget = 2000;

bool localizes(const FundamentalDomain& d, const CoveringResult& r, const FieldElement& witness) {
  const auto orbit = d.orbit(witness);
  for (const auto& box : r.unresolved)
    for (const auto& p : orbit)
      if (box_contains(d, box.box, p.point)) return true;
  return false;
}

}  // namespace

MReport compute_M(const FundamentalDomain& d, const Rational& gap, const Integer& denom_bound, std::size_t budget,
                  unsigned workers) {
  if (gap <= 0) throw Error(Errc::InvalidArgument, "gap must be positive");
  if (denom_bound < 1) throw Error(Errc::InvalidArgument, "denominator bound must be positive");
  MReport rep;
  LowerSearch search(d);
  auto refresh = [&] {
    rep.lower = search.best().m.value;
    rep.witness = search.best().xi;
    rep.witness_value = search.best().m;
    rep.denominators = search.level();
  };
  while (search.level() < denom_bound) search.next_level();
  refresh();

  std::size_t left = budget;
  bool all_ok = true;
  Rational g = gap * Rational(1 << kGapSteps);
  while (g >= gap) {
    const Rational t = rep.lower + g;
    rep.tested.push_back(t);
    CoverSearch cs(d, t, workers);
    cs.step(left);
    auto r = cs.result();
    rep.boxes += r.stats.processed;
    left -= std::min(left, r.stats.processed);
    if (r.complete) {
      if (!rep.upper || t < *rep.upper) {
        rep.upper = t;
        rep.certificate = r.certificate;
      }
      g /= 2;
      continue;
    }
    all_ok = false;
    if (left == 0) {
      rep.budget_exhausted = true;
      break;
    }
    // The covering may have failed because the lower bound is too small:
    // deepen the rational search before retrying at the same gap.
    const Rational before = rep.lower;
    const Integer target = search.level() * 2;
    while (search.level() < target) search.next_level();
    refresh();
    if (rep.lower == before) break;
  }
  if (rep.upper && *rep.upper - rep.lower <= gap && all_ok && left > 0) {
    CoverSearch cs(d, rep.lower, workers);
    std::size_t probe = std::min(left, kLocalizeBudget);
    cs.step(probe);
    auto r = cs.result();
    rep.boxes += r.stats.processed;
    rep.exact = !r.complete && localizes(d, r, rep.witness);
  }
  return rep;
}

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::Euclidean:
      return "euclidean";
    case Verdict::NotEuclidean:
      return "not_euclidean";
    case Verdict::Undecided:
      return "undecided";
  }
  return "undecided";
}

EuclideanVerdict decide_norm_euclidean(const FundamentalDomain& d, std::size_t budget, unsigned workers) {
  if (!d.s().verified) throw Error(Errc::UnverifiedUnits, "unit basis not verified");
  EuclideanVerdict out;
  out.budget = budget;
  CoverSearch cover(d, Rational(1), workers);
  LowerSearch search(d);
  std::size_t spent = 0;
  for (;;) {
    if (cover.complete()) {
      auto r = cover.result();
      out.verdict = Verdict::Euclidean;
      out.certificate = r.certificate;
      out.covering = r.stats;
      break;
    }
    SearchResult level = search.next_level();
    out.denominators = search.level();
    out.orbits += level.orbits;
    if (level.m.value >= 1) {
      out.verdict = Verdict::NotEuclidean;
      out.witness = level.xi;
      out.witness_value = level.m;
      out.covering = cover.result().stats;
      break;
    }
    if (spent >= budget) {
      out.covering = cover.result().stats;
      break;
    }
    const std::size_t chunk = std::min(kDecideChunk, budget - spent);
    cover.step(chunk);
    spent += chunk;
  }
  return out;
}

bool verify_witness(const FundamentalDomain& d, const FieldElement& witness, const Rational& claimed) {
  MinimumValue m = m_exact(d, witness);
  return m.value == claimed && m.value >= 1;
}

}  // namespace seuclid
