// Copyright 2026 The seuclid Authors
// SPDX-License-Identifier: Apache-2.0

// Shared fixtures and independent oracles for the test binaries.

#pragma once

#include <random>
#include <set>
#include <vector>

#include "seuclid/analysis.hpp"
#include "seuclid/forms.hpp"

namespace seuclid::testing {

inline NumberField field_q() { return make_field({-1, 1}); }
inline NumberField field_qi() { return make_field({1, 0, 1}); }
inline NumberField field_q2() { return make_field({-2, 0, 1}); }
inline NumberField field_q5() { return make_field({5, 0, 1}); }  // Q(sqrt -5)

inline std::vector<Place> primes_over(const NumberField& k, std::initializer_list<long> ps) {
  std::vector<Place> out;
  for (long p : ps) {
    auto above = places_above(k, p);
    out.insert(out.end(), above.begin(), above.end());
  }
  return out;
}

inline FieldElement elt(std::initializer_list<Rational> c) { return FieldElement(std::vector<Rational>(c)); }

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}
  long range(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(gen_); }
  Rational rational(long num, long den) { return make_rational(range(-num, num), range(1, den)); }
  FieldElement element(int n, long num = 20, long den = 12) {
    std::vector<Rational> c;
    for (int i = 0; i < n; ++i) c.push_back(rational(num, den));
    return FieldElement(c);
  }
  FieldElement nonzero(int n, long num = 20, long den = 12) {
    for (;;) {
      auto x = element(n, num, den);
      if (!x.is_zero()) return x;
    }
  }
  FieldElement integral(int n, long bound) {
    std::vector<Rational> c;
    for (int i = 0; i < n; ++i) c.push_back(Rational(range(-bound, bound)));
    return FieldElement(c);
  }
  // Rational in [0, 1) whose denominator avoids the given primes.
  Rational unit_interval(long den, const std::vector<long>& avoid) {
    for (;;) {
      long q = range(1, den);
      bool ok = true;
      for (long p : avoid) ok = ok && q % p != 0;
      if (ok) return make_rational(range(0, q - 1), q);
    }
  }
  std::mt19937_64& engine() { return gen_; }

 private:
  std::mt19937_64 gen_;
};

// |x| times the product over S-primes of |x|_p: the S-free part of a rational.
inline Rational s_free_part(Rational x, const std::vector<long>& primes) {
  x = abs_q(x);
  Integer num = x.get_num(), den = x.get_den();
  for (long p : primes) {
    while (num != 0 && num % p == 0) num /= p;
    while (den % p == 0) den /= p;
  }
  return make_rational(num, den);
}

// Closed form of min over gamma in Z[1/S] of the S-free part of r - gamma:
// writing r = a / (b s) with s an S-number and b prime to S, the reachable
// S-free numerators are the o >= 1 with o = +-a t (mod b) for t in the
// subgroup generated by the S-primes.
inline Rational m_rational_oracle(const Rational& r, const std::vector<long>& primes) {
  Integer b = r.get_den();
  for (long p : primes)
    while (b % p == 0) b /= p;
  if (b == 1) return 0;
  Integer a = r.get_num() * (r.get_den() / b);
  a %= b;
  if (a < 0) a += b;
  std::set<Integer> group{Integer(1)};
  std::vector<Integer> frontier{Integer(1)};
  while (!frontier.empty()) {
    Integer t = frontier.back();
    frontier.pop_back();
    for (long p : primes) {
      Integer u = (t * p) % b;
      if (group.insert(u).second) frontier.push_back(u);
    }
  }
  Integer best = b;
  for (const auto& t : group)
    for (int sign : {1, -1}) {
      Integer o = (sign * a * t) % b;
      if (o < 0) o += b;
      if (o != 0 && o < best) best = o;
    }
  return make_rational(best, b);
}

// A point of the fundamental domain with denominators prime to S.
inline FieldElement domain_sample(const FundamentalDomain& d, Rng& rng, const std::vector<long>& avoid, long den = 40) {
  FieldElement x = d.field().zero();
  const auto basis = d.ideal().basis();
  for (const auto& b : basis) x = x + rng.unit_interval(den, avoid) * b;
  return x;
}

inline std::vector<long> s_primes(const SConfig& s) {
  std::vector<long> out;
  for (const auto& v : s.places)
    if (v.is_finite() && std::find(out.begin(), out.end(), v.p.get_si()) == out.end()) out.push_back(v.p.get_si());
  return out;
}

}  // namespace seuclid::testing
