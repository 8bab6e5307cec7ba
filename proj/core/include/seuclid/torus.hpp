// Copyright 2026 The seuclid Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "seuclid/places.hpp"

namespace seuclid {

// Rational modulo 1, kept in [0, 1).
struct QmodZ {
  Rational value;

  QmodZ() = default;
  explicit QmodZ(const Rational& x) : value(frac_q(x)) {}
  friend QmodZ operator+(const QmodZ& a, const QmodZ& b) { return QmodZ(a.value + b.value); }
  friend QmodZ operator-(const QmodZ& a) { return QmodZ(-a.value); }
  friend bool operator==(const QmodZ& a, const QmodZ& b) { return a.value == b.value; }
};

// Fundamental domain F x prod O_v for the torus K_S / a, where the O_S-ideal
// a is stored through b = its O-part with every S-prime factor removed (so
// a = b O_S and N_S(a) = N(b)). F is the half-open parallelepiped spanned by
// the HNF basis of b.
class FundamentalDomain {
 public:
  FundamentalDomain(SConfig s, const FractionalIdeal& a);

  const SConfig& s() const { return s_; }
  const NumberField& field() const { return s_.field; }
  const FractionalIdeal& ideal() const { return b_; }
  Rational ideal_norm() const { return b_.norm(); }

  // v(x) >= 0 at every finite place of S and b-coordinates in [0, 1).
  bool contains(const FieldElement& x) const;
  // gamma in a, i.e. v_P(gamma) >= v_P(b) at every prime outside S.
  bool in_ideal(const FieldElement& gamma) const;

  // Unique rho in the domain with xi - rho in a; returns (rho, xi - rho).
  std::pair<FieldElement, FieldElement> reduce(const FieldElement& xi) const;

  // Reduced representatives of (1/m) a modulo a.
  std::vector<FieldElement> torsion_reps(const Integer& m) const;

  // Distinct reduced points u * xi, each with a unit mapping xi there.
  struct OrbitPoint {
    FieldElement point;
    FieldElement unit;
  };
  std::vector<OrbitPoint> orbit(const FieldElement& xi) const;

 private:
  SConfig s_;
  FractionalIdeal b_;
};

// Phase in Q/Z of the character attached to alpha evaluated at xi:
// Tr(alpha xi) minus the polar parts of the local traces at the finite
// places of S.
QmodZ char_pair(const SConfig& s, const FieldElement& alpha, const FieldElement& xi);

// Polar part of a rational at p, as a rational in [0, 1) with p-power
// denominator.
Rational polar_part(const Rational& x, const Integer& p);

// Local trace Tr_{K_v/Q_p}(x) known modulo Z_p, returned as its polar part.
Rational local_trace_polar(const NumberField& k, const FieldElement& x, const Place& v);

// a^perp = a^{-1} D^{-1} with S-prime factors removed.
FractionalIdeal s_trace_dual(const SConfig& s, const FractionalIdeal& a);

// A point of K_S: interval components at archimedean places and residue data
// (x mod P^k) at finite places of S.
struct AdelePoint {
  std::vector<Interval> real;
  std::vector<ComplexInterval> complex;
  std::vector<std::pair<FieldElement, int>> finite;  // (approximant, precision exponent)
  std::optional<FieldElement> exact;

  static AdelePoint from_element(const SConfig& s, const FieldElement& x, const Rational& precision, int k);
};

}  // namespace seuclid
