// Copyright 2026 The seuclid Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "seuclid/ideal.hpp"

namespace seuclid {

enum class PlaceKind { Real, Complex, Finite };

struct Place {
  PlaceKind kind = PlaceKind::Real;
  // Archimedean: index into the embedding order of NumberField::embed
  // (reals first, then complex). Finite: position in places_above(p).
  int index = 0;

  // Finite places only.
  Integer p;
  int e = 0;
  int f = 0;
  FieldElement gen;       // P = (p, gen)
  FractionalIdeal ideal;  // P itself
  FieldElement inv_elt;   // v_P(inv_elt) = -1, v_Q(inv_elt) >= 0 elsewhere

  bool is_finite() const { return kind == PlaceKind::Finite; }
  bool is_archimedean() const { return !is_finite(); }
  Integer residue_norm() const { return pow_z(p, static_cast<unsigned long>(f)); }  // Np
  std::string label() const;

  friend bool operator==(const Place& a, const Place& b) {
    return a.kind == b.kind && a.index == b.index && a.p == b.p;
  }
};

std::vector<Place> archimedean_places(const NumberField& k);
// Primes above p via factorisation of the defining polynomial mod p, ordered
// by generator coordinates. Requires p prime and coprime to the index.
std::vector<Place> places_above(const NumberField& k, const Integer& p);

// Exact v_P(x); x nonzero.
long valuation(const NumberField& k, const FieldElement& x, const Place& v);
// v_P of a nonzero fractional ideal.
long valuation(const FractionalIdeal& a, const Place& v);

// S = archimedean places plus the listed finite ones, with an S-unit group
// given by generators modulo torsion.
struct SConfig {
  NumberField field;
  std::vector<Place> places;  // archimedean first, then finite
  std::vector<FieldElement> unit_gens;
  FieldElement torsion_gen;
  int torsion_order = 2;
  bool verified = false;

  std::size_t size() const { return places.size(); }
  std::vector<Place> finite_places() const;
  std::size_t archimedean_count() const;
  bool contains_prime(const Integer& p) const;
};

SConfig make_sconfig(const NumberField& k, const std::vector<Place>& finite);

// prod_{v in S} |x|_v with |.| normalised so the product formula holds.
Rational s_norm(const SConfig& s, const FieldElement& x);
// N_S of an O_S-ideal given by its O-part: the norm with S-primes removed.
Rational s_norm(const SConfig& s, const FractionalIdeal& a);
// Removes every S-prime factor of an ideal.
FractionalIdeal strip_s_primes(const SConfig& s, const FractionalIdeal& a);
// True iff v(x) >= 0 at every finite place outside S.
bool is_s_integral(const SConfig& s, const FieldElement& x);
bool is_s_unit(const SConfig& s, const FieldElement& u);

// Certified log vector entries (log |u|_v for v in S, complex places use the
// squared modulus). Precision in bits of the interval logs.
std::vector<Interval> log_vector(const SConfig& s, const FieldElement& u, unsigned bits);
std::vector<double> log_vector_double(const SConfig& s, const FieldElement& u);

// Checks S-unit membership and certifies log rank #S - 1.
SConfig verify_s_unit_basis(SConfig s, const std::vector<FieldElement>& gens);

// Unit generators for Q and quadratic fields; UnitsRequired otherwise.
std::vector<FieldElement> builtin_s_units(const SConfig& s);
// Torsion generator and its order.
std::pair<FieldElement, int> torsion_subgroup(const NumberField& k);
// Fundamental unit of a real quadratic field (continued fractions).
FieldElement fundamental_unit_real_quadratic(const NumberField& k);

// Ready-to-use verified configuration: builtin units unless gens are given.
SConfig configure_s(const NumberField& k, const std::vector<Place>& finite,
                    const std::optional<std::vector<FieldElement>>& gens = std::nullopt);

// epsilon in U_S with |epsilon|_v < 1 for all v in S other than w.
FieldElement shrinking_unit(const SConfig& s, std::size_t w);

// Certified upper bound of |x|_v at an archimedean place (squared modulus
// for complex places), refining until below `below` or out of budget.
bool archimedean_abs_below(const NumberField& k, const FieldElement& x, const Place& v, const Rational& below);

}  // namespace seuclid
