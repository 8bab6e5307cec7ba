// Copyright 2026 The seuclid Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <functional>
#include <vector>

namespace seuclid::lattice {

using Vec = std::vector<long double>;
// Square basis matrix given by columns.
using Basis = std::vector<Vec>;
using IntVec = std::vector<long>;

// LLL (delta = 0.99) on the columns; returns the unimodular transform U with
// reduced = basis * U, stored by columns.
std::vector<IntVec> lll(Basis& basis);

// Calls visit(x) for every integer vector x with |B x - target|^2 <= radius2.
// Enumeration stops early when visit returns false. The radius is inflated by
// a relative 1e-9 (plus 1e-12 absolute) so that floating error cannot drop
// boundary points; callers filter candidates exactly.
void enumerate(const Basis& basis, const Vec& target, long double radius2,
               const std::function<bool(const IntVec&)>& visit);

}  // namespace seuclid::lattice
