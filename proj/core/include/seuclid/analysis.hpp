// Copyright 2026 The seuclid Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <optional>

#include "seuclid/covering.hpp"

namespace seuclid {

// Two-sided bounds on the inhomogeneous minimum of an ideal class.
struct MReport {
  Rational lower;          // m_exact(witness)
  FieldElement witness;
  MinimumValue witness_value;
  std::optional<Rational> upper;  // least t with a covering certificate
  std::optional<CoveringCertificate> certificate;
  bool exact = false;
  bool budget_exhausted = false;
  Integer denominators = 0;  // search depth reached
  std::size_t boxes = 0;     // covering effort
  std::vector<Rational> tested;  // thresholds tried, in order
};

// Searches rational points up to denom_bound for the lower bound, then proves
// coverings at t = lower + g for g shrinking geometrically to `gap`.
MReport compute_M(const FundamentalDomain& d, const Rational& gap, const Integer& denom_bound, std::size_t budget,
                  unsigned workers = 1);

enum class Verdict { Euclidean, NotEuclidean, Undecided };

const char* to_string(Verdict v);

struct EuclideanVerdict {
  Verdict verdict = Verdict::Undecided;
  std::optional<CoveringCertificate> certificate;  // Euclidean
  FieldElement witness;                            // NotEuclidean
  MinimumValue witness_value;
  CoveringStats covering;
  Integer denominators = 0;
  std::size_t orbits = 0;
  std::size_t budget = 0;
};

// Interleaves a covering search at t = 1 with a rational witness search for
// m >= 1. Budget bounds the number of boxes processed.
EuclideanVerdict decide_norm_euclidean(const FundamentalDomain& d, std::size_t budget, unsigned workers = 1);

// Recomputes m_exact of a claimed witness; true iff it is at least 1.
bool verify_witness(const FundamentalDomain& d, const FieldElement& witness, const Rational& claimed);

}  // namespace seuclid
