// Copyright 2026 The seuclid Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <utility>
#include <vector>

#include "seuclid/numeric.hpp"

namespace seuclid {

// Coefficient vectors are stored lowest degree first; the zero polynomial is
// the empty vector.
using ZPoly = std::vector<Integer>;
using QPoly = std::vector<Rational>;

namespace poly {

int degree(const QPoly& f);
QPoly trim(QPoly f);
QPoly to_q(const ZPoly& f);
QPoly derivative(const QPoly& f);
QPoly add(const QPoly& a, const QPoly& b);
QPoly sub(const QPoly& a, const QPoly& b);
QPoly mul(const QPoly& a, const QPoly& b);
std::pair<QPoly, QPoly> divmod(const QPoly& a, const QPoly& b);
Rational eval(const QPoly& f, const Rational& x);

// Resultant via the Sylvester determinant.
Rational resultant(const QPoly& f, const QPoly& g);
// disc(f) = (-1)^(n(n-1)/2) res(f, f') / lc(f)
Rational discriminant(const QPoly& f);

// Number of distinct real roots (Sturm sequence).
int count_real_roots(const QPoly& f);

// True iff the monic integer polynomial of degree <= 4 has a rational root
// or (degree 4) a factor of degree 2 over Z.
bool has_small_factor(const ZPoly& f);

// Factorisation of a monic integer polynomial modulo a prime p: monic
// irreducible factors with multiplicities, sorted by (degree, coefficients).
struct ModFactor {
  ZPoly factor;  // coefficients in [0, p)
  int multiplicity;
};
std::vector<ModFactor> factor_mod_p(const ZPoly& f, const Integer& p);

}  // namespace poly
}  // namespace seuclid
