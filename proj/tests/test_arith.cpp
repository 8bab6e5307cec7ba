// Copyright 2026 The seuclid Authors
// SPDX-License-Identifier: Apache-2.0

#include <gtest/gtest.h>

#include <cmath>

#include "seuclid/interval.hpp"
#include "seuclid/matrix.hpp"
#include "seuclid/polynomial.hpp"
#include "support.hpp"

namespace seuclid {
namespace {

TEST(Numeric, FloorCeilFrac) {
  EXPECT_EQ(floor_q(Rational(-7, 2)), -4);
  EXPECT_EQ(ceil_q(Rational(-7, 2)), -3);
  EXPECT_EQ(frac_q(Rational(-1, 5)), Rational(4, 5));
  EXPECT_EQ(floor_q(Rational(6)), 6);
}

TEST(Numeric, RationalStringsRoundTrip) {
  testing::Rng rng(1);
  for (int i = 0; i < 200; ++i) {
    Rational q = rng.rational(1000, 97);
    EXPECT_EQ(parse_rational(to_string(q)), q);
  }
  EXPECT_EQ(to_string(Rational(2)), "2/1");
  EXPECT_EQ(parse_rational("-6/4"), Rational(-3, 2));
  EXPECT_EQ(parse_rational("7"), Rational(7));
  EXPECT_THROW(parse_rational("1/0"), Error);
  EXPECT_THROW(parse_rational("0.5"), Error);
  EXPECT_THROW(parse_rational(""), Error);
}

TEST(Numeric, ValuationAndFactor) {
  EXPECT_EQ(valuation_p(Integer(48), 2), 4);
  EXPECT_EQ(valuation_p(Rational(9, 40), Integer(2)), -3);
  auto f = factor_integer(Integer(360));
  ASSERT_EQ(f.size(), 3u);
  EXPECT_EQ(f[0], (std::pair<Integer, unsigned>{2, 3}));
  EXPECT_EQ(f[2], (std::pair<Integer, unsigned>{5, 1}));
  Integer prod = 1;
  for (const auto& [p, e] : factor_integer(Integer(1234567890))) prod *= pow_z(p, e);
  EXPECT_EQ(prod, 1234567890);
}

TEST(Numeric, DyadicRoundingBrackets) {
  testing::Rng rng(2);
  for (int i = 0; i < 100; ++i) {
    Rational q = rng.rational(100000, 999);
    Rational lo = round_down_dyadic(q, 20), hi = round_up_dyadic(q, 20);
    EXPECT_LE(lo, q);
    EXPECT_GE(hi, q);
    EXPECT_LE(hi - lo, Rational(1, 1 << 20));
    const Integer d = lo.get_den();
    EXPECT_EQ(Integer(d & (d - 1)), 0);
  }
}

TEST(Matrix, DeterminantAndInverse) {
  RatMatrix m(3, 3);
  int v[3][3] = {{2, 1, 0}, {1, 3, 1}, {0, 1, 4}};
  for (int r = 0; r < 3; ++r)
    for (int c = 0; c < 3; ++c) m(r, c) = v[r][c];
  EXPECT_EQ(determinant(m), 18);  // 2(12-1) - 1(4-0)
  auto inv = inverse(m);
  ASSERT_TRUE(inv);
  RatMatrix id = m * *inv;
  for (int r = 0; r < 3; ++r)
    for (int c = 0; c < 3; ++c) EXPECT_EQ(id(r, c), r == c ? 1 : 0);
  EXPECT_EQ(rank(m), 3u);
}

TEST(Matrix, HnfIsCanonical) {
  IntMatrix a(2, 3);
  int v[2][3] = {{4, 6, 2}, {2, 0, 4}};
  for (int r = 0; r < 2; ++r)
    for (int c = 0; c < 3; ++c) a(r, c) = v[r][c];
  IntMatrix b(2, 3);
  int w[2][3] = {{2, 4, 6}, {4, 2, 0}};
  for (int r = 0; r < 2; ++r)
    for (int c = 0; c < 3; ++c) b(r, c) = w[r][c];
  IntMatrix ha = hnf_basis(a), hb = hnf_basis(b);
  EXPECT_EQ(ha, hb);
  // The lattice has index |det| = 12 in Z^2: 2Z x 2Z with gluing.
  EXPECT_EQ(abs(determinant(ha)), 12);
}

TEST(Polynomial, DiscriminantMatchesClosedForm) {
  // x^2 + b x + c: b^2 - 4c
  for (int b = -4; b <= 4; ++b)
    for (int c = -4; c <= 4; ++c) EXPECT_EQ(poly::discriminant(QPoly{c, b, 1}), b * b - 4 * c);
  // x^3 + p x + q: -4p^3 - 27q^2
  for (int p = -3; p <= 3; ++p)
    for (int q = -3; q <= 3; ++q) EXPECT_EQ(poly::discriminant(QPoly{q, p, 0, 1}), -4 * p * p * p - 27 * q * q);
}

TEST(Polynomial, RealRootsAndFactorModP) {
  EXPECT_EQ(poly::count_real_roots(QPoly{-2, 0, 1}), 2);
  EXPECT_EQ(poly::count_real_roots(QPoly{1, 0, 1}), 0);
  EXPECT_EQ(poly::count_real_roots(QPoly{-2, 0, 0, 1}), 1);
  auto f5 = poly::factor_mod_p(ZPoly{1, 0, 1}, 5);
  EXPECT_EQ(f5.size(), 2u);
  auto f3 = poly::factor_mod_p(ZPoly{1, 0, 1}, 3);
  ASSERT_EQ(f3.size(), 1u);
  EXPECT_EQ(poly::degree(poly::to_q(f3[0].factor)), 2);
  auto f2 = poly::factor_mod_p(ZPoly{1, 0, 1}, 2);
  ASSERT_EQ(f2.size(), 1u);
  EXPECT_EQ(f2[0].multiplicity, 2);
}

TEST(Polynomial, DivmodReconstructs) {
  testing::Rng rng(3);
  for (int i = 0; i < 50; ++i) {
    QPoly a, b;
    for (int j = 0; j < 5; ++j) a.push_back(rng.rational(10, 4));
    for (int j = 0; j < 3; ++j) b.push_back(rng.rational(10, 4));
    b.push_back(1);
    auto [q, r] = poly::divmod(a, b);
    EXPECT_EQ(poly::trim(poly::add(poly::mul(q, b), r)), poly::trim(a));
    EXPECT_LT(poly::degree(r), 3);
  }
}

TEST(Interval, ArithmeticEncloses) {
  testing::Rng rng(4);
  for (int i = 0; i < 200; ++i) {
    Rational a = rng.rational(50, 9), b = rng.rational(50, 9), w = make_rational(rng.range(0, 5), 7);
    Interval x(a, a + w), y(b, b + w);
    Rational px = a + w / 3, py = b + w / 2;
    EXPECT_TRUE((x + y).contains(Interval(px + py)));
    EXPECT_TRUE((x - y).contains(Interval(px - py)));
    EXPECT_TRUE((x * y).contains(Interval(px * py)));
    EXPECT_TRUE(square(x).contains(Interval(px * px)));
  }
}

TEST(Interval, DirectedTranscendentals) {
  for (int k = 1; k < 40; ++k) {
    Rational x = make_rational(k, 7);
    double lx = std::log(x.get_d());
    EXPECT_LE(log_lower(x, 64).get_d(), lx + 1e-15);
    EXPECT_GE(log_upper(x, 64).get_d(), lx - 1e-15);
    EXPECT_LT(log_upper(x, 64) - log_lower(x, 64), Rational(1, 1 << 30));
    EXPECT_LE(sqrt_lower(x, 64) * sqrt_lower(x, 64), x);
    EXPECT_GE(sqrt_upper(x, 64) * sqrt_upper(x, 64), x);
    EXPECT_GE(exp_upper(x, 64).get_d(), std::exp(x.get_d()) * (1 - 1e-15));
  }
}

}  // namespace
}  // namespace seuclid
