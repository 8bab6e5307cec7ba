// Copyright 2026 The seuclid Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <algorithm>

#include "seuclid/numeric.hpp"

namespace seuclid {

// Closed interval with exact rational endpoints. All operations round
// outward only in the sense of set inclusion: results contain every value
// obtainable from points of the operands.
struct Interval {
  Rational lo;
  Rational hi;

  Interval() = default;
  explicit Interval(const Rational& x) : lo(x), hi(x) {}
  Interval(const Rational& l, const Rational& h) : lo(l), hi(h) {}

  Rational width() const { return hi - lo; }
  Rational mid() const { return (lo + hi) / 2; }
  bool contains(const Rational& x) const { return lo <= x && x <= hi; }
  bool contains(const Interval& o) const { return lo <= o.lo && o.hi <= hi; }
  bool is_point() const { return lo == hi; }
  // max |x| over the interval
  Rational mag() const { return std::max(abs_q(lo), abs_q(hi)); }
  // min |x| over the interval
  Rational mig() const {
    if (lo <= 0 && hi >= 0) return 0;
    return std::min(abs_q(lo), abs_q(hi));
  }

  friend Interval operator+(const Interval& a, const Interval& b) { return {a.lo + b.lo, a.hi + b.hi}; }
  friend Interval operator-(const Interval& a, const Interval& b) { return {a.lo - b.hi, a.hi - b.lo}; }
  friend Interval operator-(const Interval& a) { return {-a.hi, -a.lo}; }
  friend Interval operator*(const Interval& a, const Interval& b);
  friend Interval operator*(const Rational& s, const Interval& a) {
    return s >= 0 ? Interval{s * a.lo, s * a.hi} : Interval{s * a.hi, s * a.lo};
  }
  friend bool operator==(const Interval& a, const Interval& b) { return a.lo == b.lo && a.hi == b.hi; }
};

Interval square(const Interval& a);
Interval intersect(const Interval& a, const Interval& b);
Interval hull(const Interval& a, const Interval& b);

// Rectangular complex interval.
struct ComplexInterval {
  Interval re;
  Interval im;

  ComplexInterval() : re(Rational(0)), im(Rational(0)) {}
  ComplexInterval(const Interval& r, const Interval& i) : re(r), im(i) {}

  friend ComplexInterval operator+(const ComplexInterval& a, const ComplexInterval& b) {
    return {a.re + b.re, a.im + b.im};
  }
  friend ComplexInterval operator-(const ComplexInterval& a, const ComplexInterval& b) {
    return {a.re - b.re, a.im - b.im};
  }
  friend ComplexInterval operator*(const ComplexInterval& a, const ComplexInterval& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  friend ComplexInterval operator*(const Rational& s, const ComplexInterval& a) {
    return {s * a.re, s * a.im};
  }
  // enclosure of |z|^2
  Interval norm2() const { return square(re) + square(im); }
};

// Directed-rounding elementary functions (MPFR, `bits` of working precision).
// Each returns a rational bound on the named side of the true value.
Rational log_lower(const Rational& x, unsigned bits);
Rational log_upper(const Rational& x, unsigned bits);
Rational exp_upper(const Rational& x, unsigned bits);
Rational sqrt_lower(const Rational& x, unsigned bits);
Rational sqrt_upper(const Rational& x, unsigned bits);
// Certified enclosure of log over a positive interval.
Interval log_interval(const Interval& x, unsigned bits);

}  // namespace seuclid
