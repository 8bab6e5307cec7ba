// Copyright 2026 The seuclid Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace seuclid {

using Integer = mpz_class;
using Rational = mpq_class;

enum class Errc {
  NonMonic,
  ReduciblePolynomial,
  UnsupportedDegree,
  PrecisionUnreachable,
  ZeroIdeal,
  ZeroElement,
  NotPrime,
  IndexDivisor,
  NotAnSUnit,
  RankDeficient,
  RankUndetermined,
  UnitsRequired,
  SearchExhausted,
  UnverifiedUnits,
  NoCandidates,
  NotQuadratic,
  NotABasis,
  NonFundamental,
  DegenerateForm,
  NonFundamentalIndefinite,
  InvalidArgument,
  ParseError,
  ValidationError,
  IoError,
};

std::string_view errc_name(Errc code);

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what),
        code_(code) {}
  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

// Rationals are always kept canonical (lowest terms, positive denominator).
inline Rational make_rational(const Integer& num, const Integer& den) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

Integer floor_q(const Rational& x);
Integer ceil_q(const Rational& x);
Rational abs_q(const Rational& x);
Rational frac_q(const Rational& x);  // x - floor(x), in [0, 1)

Integer gcd(const Integer& a, const Integer& b);
Integer lcm(const Integer& a, const Integer& b);
Integer pow_z(const Integer& base, unsigned long exp);
Rational pow_q(const Rational& base, long exp);

// Largest k with p^k | n (n != 0).
long valuation_p(Integer n, const Integer& p);
long valuation_p(const Rational& x, const Integer& p);

bool is_probable_prime(const Integer& n);
bool is_perfect_square(const Integer& n, Integer* root = nullptr);
Integer isqrt(const Integer& n);

// Prime factorisation by trial division (desk-scale inputs).
std::vector<std::pair<Integer, unsigned>> factor_integer(Integer n);

// "p/q" with q >= 1 always present.
std::string to_string(const Rational& x);
// Accepts "p", "p/q", "-p/q".
Rational parse_rational(std::string_view text);

double to_double(const Rational& x);
// Exact conversion of a finite double.
Rational from_double(double x);
// Rounds x outward onto the dyadic grid 2^-bits.
Rational round_down_dyadic(const Rational& x, unsigned bits);
Rational round_up_dyadic(const Rational& x, unsigned bits);

}  // namespace seuclid
