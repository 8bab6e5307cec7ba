// Copyright 2026 The seuclid Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <memory>
#include <string>
#include <vector>

#include "seuclid/minima.hpp"

namespace seuclid {

// x = r mod P^k inside O_v.
struct FiniteClass {
  int k = 0;
  FieldElement r;
};

// A cell of F x prod O_v: half-open dyadic intervals of b-coordinates and one
// residue class per finite place of S (in S order).
struct CoverBox {
  std::vector<Interval> y;
  std::vector<FiniteClass> fin;
};

struct CertifiedBox {
  CoverBox box;
  FieldElement gamma;
  Rational bound;  // >= sup over the box of N_S(x - gamma) / N_S(a)
};

struct CoveringCertificate {
  Rational t;
  std::vector<CertifiedBox> boxes;
};

struct CoveringStats {
  std::size_t processed = 0;
  std::size_t certified = 0;
  std::size_t max_depth = 0;
  std::size_t candidates_screened = 0;
};

struct CoveringResult {
  bool complete = false;
  CoveringCertificate certificate;       // certified boxes (a full tiling when complete)
  std::vector<CertifiedBox> unresolved;  // surviving boxes with their best bound
  CoveringStats stats;
};

// Whole fundamental domain as a single box.
CoverBox root_box(const FundamentalDomain& d);

// Certified bound for one shift; the canonical value stored in certificates.
Rational box_bound(const FundamentalDomain& d, const CoverBox& box, const FieldElement& gamma);
// min over candidates of box_bound.
Rational m_upper_adele(const FundamentalDomain& d, const CoverBox& box, const std::vector<FieldElement>& candidates);
// Region given by an adele point with certified components; exact when tagged.
Rational m_upper_adele(const FundamentalDomain& d, const AdelePoint& point, const std::vector<FieldElement>& candidates);

bool box_contains(const FundamentalDomain& d, const CoverBox& box, const FieldElement& x);

// Resumable branch and bound proving K_S = a + V_t, i.e. every point of the
// domain has a shift gamma with N_S(x - gamma) / N_S(a) < t. Boxes are
// processed worst-first in fixed-size rounds; results do not depend on the
// worker count.
class CoverSearch {
 public:
  CoverSearch(const FundamentalDomain& d, const Rational& t, unsigned workers = 1);
  ~CoverSearch();
  CoverSearch(const CoverSearch&) = delete;
  CoverSearch& operator=(const CoverSearch&) = delete;

  // Processes up to `budget` boxes; returns true once the covering is complete.
  bool step(std::size_t budget);
  bool complete() const;
  CoveringResult result() const;

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

CoveringResult covering_verify(const FundamentalDomain& d, const Rational& t, std::size_t budget,
                               unsigned workers = 1);

struct ReplayReport {
  bool ok = false;
  std::string reason;
  std::size_t boxes = 0;
};

// Independent replay: combinatorial tiling check, gamma in a, canonical bound
// recomputation, a vertex-based soundness bound, and bound < t.
ReplayReport verify_certificate(const FundamentalDomain& d, const CoveringCertificate& cert);

}  // namespace seuclid
