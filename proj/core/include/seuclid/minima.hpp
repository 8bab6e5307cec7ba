// Copyright 2026 The seuclid Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <set>
#include <vector>

#include "seuclid/torus.hpp"

namespace seuclid {

// m(xi) = min over gamma in a of N_S(xi - gamma) / N_S(a).
struct MinimumValue {
  Rational value;
  FieldElement shift;  // gamma in a attaining the value
  // Enumeration region: |eta|_v <= search_box[v] for every v in S, around
  // each orbit representative.
  std::vector<double> search_box;
  std::size_t orbit_size = 0;
  std::size_t lattice_points = 0;
};

MinimumValue m_exact(const FundamentalDomain& d, const FieldElement& xi);

// Same, reusing a precomputed orbit of xi.
MinimumValue m_exact(const FundamentalDomain& d, const FieldElement& xi,
                     const std::vector<FundamentalDomain::OrbitPoint>& orbit);

// Exact value min over the given shifts of N_S(x - gamma) / N_S(a).
Rational m_upper_point(const FundamentalDomain& d, const FieldElement& x, const std::vector<FieldElement>& candidates);

struct SearchResult {
  FieldElement xi;
  MinimumValue m;
  std::size_t orbits = 0;
  std::size_t points = 0;
  Integer denominator = 1;
};

// Maximises m_exact over reduced representatives of (1/m) a / a, m <= bound,
// one representative per unit orbit.
SearchResult search_lower(const FundamentalDomain& d, const Integer& denom_bound);

// Incremental version: levels m = 1, 2, ... evaluated on demand.
class LowerSearch {
 public:
  explicit LowerSearch(const FundamentalDomain& d) : d_(d) {}
  // Evaluates the next denominator level; returns the best point of that level.
  SearchResult next_level();
  const SearchResult& best() const { return best_; }
  const Integer& level() const { return level_; }

 private:
  const FundamentalDomain& d_;
  Integer level_ = 0;
  std::set<FieldElement> seen_;
  SearchResult best_;
  bool have_best_ = false;
};

}  // namespace seuclid
