// Copyright 2026 The seuclid Authors
// SPDX-License-Identifier: Apache-2.0

#include "seuclid/interval.hpp"

#include <mpfr.h>

#include <array>

namespace seuclid {

Interval operator*(const Interval& a, const Interval& b) {
  if (a.is_point() && b.is_point()) return Interval(a.lo * b.lo);
  std::array<Rational, 4> p = {a.lo * b.lo, a.lo * b.hi, a.hi * b.lo, a.hi * b.hi};
  auto [mn, mx] = std::minmax_element(p.begin(), p.end());
  return {*mn, *mx};
}

Interval square(const Interval& a) {
  Rational l2 = a.lo * a.lo, h2 = a.hi * a.hi;
  if (a.lo >= 0) return {l2, h2};
  if (a.hi <= 0) return {h2, l2};
  return {Rational(0), std::max(l2, h2)};
}

Interval intersect(const Interval& a, const Interval& b) {
  return {std::max(a.lo, b.lo), std::min(a.hi, b.hi)};
}

Interval hull(const Interval& a, const Interval& b) {
  return {std::min(a.lo, b.lo), std::max(a.hi, b.hi)};
}

namespace {

class Mpfr {
 public:
  explicit Mpfr(unsigned bits) { mpfr_init2(v_, bits); }
  ~Mpfr() { mpfr_clear(v_); }
  Mpfr(const Mpfr&) = delete;
  Mpfr& operator=(const Mpfr&) = delete;
  mpfr_ptr get() { return v_; }

  Rational to_rational() const {
    Rational r;
    mpfr_get_q(r.get_mpq_t(), v_);
    return r;
  }

 private:
  mpfr_t v_;
};

template <class Fn>
Rational apply(const Rational& x, unsigned bits, mpfr_rnd_t rnd, Fn fn) {
  Mpfr in(bits + 64), out(bits);
  // Round the argument in the direction that keeps the final bound valid
  // for monotone increasing functions.
  mpfr_set_q(in.get(), x.get_mpq_t(), rnd);
  fn(out.get(), in.get(), rnd);
  return out.to_rational();
}

}  // namespace

Rational log_lower(const Rational& x, unsigned bits) {
  if (x <= 0) throw Error(Errc::InvalidArgument, "log of non-positive value");
  return apply(x, bits, MPFR_RNDD, [](mpfr_ptr o, mpfr_ptr i, mpfr_rnd_t r) { mpfr_log(o, i, r); });
}

Rational log_upper(const Rational& x, unsigned bits) {
  if (x <= 0) throw Error(Errc::InvalidArgument, "log of non-positive value");
  return apply(x, bits, MPFR_RNDU, [](mpfr_ptr o, mpfr_ptr i, mpfr_rnd_t r) { mpfr_log(o, i, r); });
}

Rational exp_upper(const Rational& x, unsigned bits) {
  return apply(x, bits, MPFR_RNDU, [](mpfr_ptr o, mpfr_ptr i, mpfr_rnd_t r) { mpfr_exp(o, i, r); });
}

Rational sqrt_lower(const Rational& x, unsigned bits) {
  if (x < 0) throw Error(Errc::InvalidArgument, "sqrt of negative value");
  return apply(x, bits, MPFR_RNDD, [](mpfr_ptr o, mpfr_ptr i, mpfr_rnd_t r) { mpfr_sqrt(o, i, r); });
}

Rational sqrt_upper(const Rational& x, unsigned bits) {
  if (x < 0) throw Error(Errc::InvalidArgument, "sqrt of negative value");
  return apply(x, bits, MPFR_RNDU, [](mpfr_ptr o, mpfr_ptr i, mpfr_rnd_t r) { mpfr_sqrt(o, i, r); });
}

Interval log_interval(const Interval& x, unsigned bits) {
  return {log_lower(x.lo, bits), log_upper(x.hi, bits)};
}

}  // namespace seuclid
