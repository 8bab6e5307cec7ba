// Copyright 2026 The seuclid Authors
// SPDX-License-Identifier: Apache-2.0

#include <gtest/gtest.h>

#include <cmath>

#include "support.hpp"

namespace seuclid {
namespace {

using testing::elt;
using testing::Rng;

TEST(Ideal, Examples) {
  auto qi = testing::field_qi();
  auto p = FractionalIdeal::from_gens(qi, {qi.from_rational(2), elt({1, 1})});
  EXPECT_EQ(p.norm(), 2);
  EXPECT_EQ(FractionalIdeal::principal(qi, elt({1, 1})), p);
  EXPECT_EQ(FractionalIdeal::principal(qi, qi.from_rational(3)).norm(), 9);
  EXPECT_TRUE(FractionalIdeal::unit(qi).is_unit_ideal());
  EXPECT_EQ(FractionalIdeal::unit(qi).norm(), 1);
  EXPECT_EQ(FractionalIdeal::principal(qi, elt({1, 1})).inverse(),
            FractionalIdeal::principal(qi, elt({Rational(1, 2), Rational(-1, 2)})));
  auto q = testing::field_q();
  auto half = FractionalIdeal::principal(q, q.from_rational(Rational(1, 2)));
  EXPECT_EQ(half.denominator(), 2);
  EXPECT_EQ(FractionalIdeal::principal(q, q.from_rational(2)).inverse(), half);
}

TEST(Ideal, GeneratorOrderIndependent) {
  Rng rng(21);
  auto k = testing::field_q5();
  for (int i = 0; i < 30; ++i) {
    auto a = rng.nonzero(2), b = rng.nonzero(2), c = rng.nonzero(2);
    EXPECT_EQ(FractionalIdeal::from_gens(k, {a, b, c}), FractionalIdeal::from_gens(k, {c, a, b}));
  }
}

TEST(Ideal, NormMultiplicativeAndInverse) {
  Rng rng(22);
  for (const auto& k : {testing::field_qi(), testing::field_q2(), testing::field_q5(), make_field({-1, -1, 0, 1})}) {
    for (int i = 0; i < 50; ++i) {
      auto x = rng.nonzero(k.degree(), 9, 4), y = rng.nonzero(k.degree(), 9, 4);
      auto ix = FractionalIdeal::principal(k, x), iy = FractionalIdeal::principal(k, y);
      EXPECT_EQ((ix * iy).norm(), ix.norm() * iy.norm());
      EXPECT_EQ(ix.norm(), abs_q(k.norm(x)));
      auto a = FractionalIdeal::from_gens(k, {x, y});
      EXPECT_TRUE((a * a.inverse()).is_unit_ideal());
      EXPECT_EQ(a.inverse_via_trace_dual(), a.inverse());
      for (const auto& b : a.basis()) EXPECT_TRUE(a.contains(b));
      // O-module: closed under multiplication by the integral basis.
      for (int j = 0; j < k.degree(); ++j) {
        std::vector<Rational> e(k.degree(), 0);
        e[j] = 1;
        for (const auto& b : a.basis()) EXPECT_TRUE(a.contains(k.mul(FieldElement(e), b)));
      }
    }
  }
}

TEST(Ideal, SplitSum) {
  auto qi = testing::field_qi();
  auto p5 = places_above(qi, 5);
  ASSERT_EQ(p5.size(), 2u);
  auto [i, j] = split_sum(qi.one(), p5[0].ideal.pow(2), p5[1].ideal.pow(3));
  EXPECT_EQ(i + j, qi.one());
  EXPECT_TRUE(p5[0].ideal.pow(2).contains(i));
  EXPECT_TRUE(p5[1].ideal.pow(3).contains(j));
}

TEST(Places, Decomposition) {
  auto qi = testing::field_qi();
  auto p5 = places_above(qi, 5);
  ASSERT_EQ(p5.size(), 2u);
  for (const auto& v : p5) {
    EXPECT_EQ(v.e, 1);
    EXPECT_EQ(v.f, 1);
    EXPECT_EQ(v.ideal.norm(), 5);
    EXPECT_EQ(abs(v.gen.coords[1]), 1);
    EXPECT_EQ(abs(v.gen.coords[0]), 2);
  }
  auto p3 = places_above(qi, 3);
  ASSERT_EQ(p3.size(), 1u);
  EXPECT_EQ(p3[0].f, 2);
  auto q = testing::field_q();
  auto p7 = places_above(q, 7);
  ASSERT_EQ(p7.size(), 1u);
  EXPECT_EQ(p7[0].e * p7[0].f, 1);
}

TEST(Places, PartitionOfDegree) {
  for (const ZPoly& f : {ZPoly{1, 0, 1}, ZPoly{5, 0, 1}, ZPoly{-2, 0, 1}, ZPoly{-1, -1, 0, 1}}) {
    auto k = make_field(f);
    for (long p : {2, 3, 5, 7, 11, 13, 23}) {
      if (k.index() % p == 0) continue;
      int sum = 0;
      Integer prod = 1;
      for (const auto& v : places_above(k, p)) {
        sum += v.e * v.f;
        prod *= pow_z(v.ideal.norm().get_num(), v.e);
      }
      EXPECT_EQ(sum, k.degree()) << p;
      EXPECT_EQ(prod, pow_z(p, k.degree()));
    }
  }
}

TEST(Places, Valuations) {
  auto qi = testing::field_qi();
  auto p2 = places_above(qi, 2)[0];
  EXPECT_EQ(valuation(qi, qi.from_rational(2), p2), 2);
  EXPECT_EQ(valuation(qi, qi.one(), p2), 0);
  auto q = testing::field_q();
  EXPECT_EQ(valuation(q, q.from_rational(Rational(1, 5)), places_above(q, 5)[0]), -1);
  // Valuations are additive.
  Rng rng(23);
  auto p5 = places_above(qi, 5);
  for (int i = 0; i < 50; ++i) {
    auto x = rng.nonzero(2), y = rng.nonzero(2);
    for (const auto& v : p5) EXPECT_EQ(valuation(qi, qi.mul(x, y), v), valuation(qi, x, v) + valuation(qi, y, v));
  }
}

TEST(SArith, SNormExamples) {
  auto q = testing::field_q();
  auto s = make_sconfig(q, testing::primes_over(q, {2, 3}));
  EXPECT_EQ(s_norm(s, q.from_rational(6)), 1);
  EXPECT_EQ(s_norm(s, q.one()), 1);
  EXPECT_EQ(s_norm(s, q.from_rational(Rational(1, 5))), Rational(1, 5));
  EXPECT_EQ(s_norm(s, q.from_rational(Rational(-40, 9))), 5);
}

TEST(SArith, UnitBasisVerification) {
  auto q = testing::field_q();
  auto s = verify_s_unit_basis(make_sconfig(q, testing::primes_over(q, {2, 3})), {q.from_rational(2), q.from_rational(3)});
  EXPECT_TRUE(s.verified);
  EXPECT_EQ(s.unit_gens.size(), 2u);
  auto q2 = testing::field_q2();
  auto s2 = verify_s_unit_basis(make_sconfig(q2, {}), {elt({1, 1})});
  EXPECT_TRUE(s2.verified);
  try {
    verify_s_unit_basis(make_sconfig(q2, {}), {q2.from_rational(2)});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::NotAnSUnit);
  }
  try {
    verify_s_unit_basis(make_sconfig(q, testing::primes_over(q, {2, 3})), {q.from_rational(2), q.from_rational(4)});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::RankDeficient);
  }
}

TEST(SArith, UnitsHaveSNormOne) {
  struct Case {
    NumberField k;
    std::vector<long> primes;
  };
  std::vector<Case> cases{{testing::field_q(), {2, 3, 5}},
                          {testing::field_qi(), {5}},
                          {testing::field_q2(), {7}},
                          {testing::field_q5(), {2, 3}},
                          {make_field({-94, 0, 1}), {}}};
  for (const auto& c : cases) {
    std::vector<Place> fin;
    for (long p : c.primes)
      for (const auto& v : places_above(c.k, p)) fin.push_back(v);
    auto s = configure_s(c.k, fin);
    EXPECT_TRUE(s.verified);
    EXPECT_EQ(s.unit_gens.size() + 1, s.size());
    for (const auto& u : s.unit_gens) {
      EXPECT_TRUE(is_s_unit(s, u));
      EXPECT_EQ(s_norm(s, u), 1);
      // Product formula, checked with enclosures since conjugates can cancel badly in double.
      Interval sum(Rational(0));
      for (const auto& l : log_vector(s, u, 128)) sum = sum + l;
      EXPECT_TRUE(sum.contains(Interval(Rational(0))));
      EXPECT_LT(sum.width(), Rational(1, 1 << 20));
    }
  }
}

// Oracle: the fundamental unit solves Pell's equation and is minimal among
// small solutions found by brute force.
TEST(SArith, FundamentalUnitRealQuadratic) {
  for (long d : {2, 3, 6, 7, 11, 14, 19, 94}) {
    auto k = make_field({-d, 0, 1});
    auto u = fundamental_unit_real_quadratic(k);
    Rational n = k.norm(u);
    EXPECT_TRUE(n == 1 || n == -1) << d;
    auto pb = k.to_power_basis(u);
    double size = std::abs(pb[0].get_d()) + std::abs(pb[1].get_d()) * std::sqrt(static_cast<double>(d));
    for (long y = 1; y < 60; ++y)
      for (long sgn : {1, -1}) {
        long double x2 = static_cast<long double>(d) * y * y + sgn;
        long x = std::lround(std::sqrt(x2));
        if (static_cast<long double>(x) * x == x2 && x > 0) {
          EXPECT_LE(size, x + y * std::sqrt(static_cast<double>(d)) + 1e-6) << d;
        }
      }
  }
  auto k94 = make_field({-94, 0, 1});
  auto u = fundamental_unit_real_quadratic(k94);
  auto pb = k94.to_power_basis(u);
  EXPECT_EQ(abs_q(pb[0]), 2143295);
  EXPECT_EQ(abs_q(pb[1]), 221064);
}

TEST(SArith, ShrinkingUnits) {
  auto q = testing::field_q();
  auto s = configure_s(q, testing::primes_over(q, {2, 3}));
  EXPECT_EQ(shrinking_unit(s, 0), q.from_rational(6));
  EXPECT_EQ(shrinking_unit(s, 1), q.from_rational(Rational(3, 4)));
  EXPECT_EQ(shrinking_unit(s, 2), q.from_rational(Rational(2, 3)));
  auto qi = testing::field_qi();
  auto si = configure_s(qi, testing::primes_over(qi, {5}));
  for (std::size_t w = 0; w < si.size(); ++w) {
    auto e = shrinking_unit(si, w);
    auto logs = log_vector(si, e, 64);
    for (std::size_t v = 0; v < si.size(); ++v)
      if (v != w) EXPECT_LT(logs[v].hi, 0);
  }
}

TEST(SArith, Torsion) {
  EXPECT_EQ(torsion_subgroup(testing::field_qi()).second, 4);
  EXPECT_EQ(torsion_subgroup(make_field({1, 1, 1})).second, 6);
  EXPECT_EQ(torsion_subgroup(testing::field_q2()).second, 2);
  EXPECT_EQ(torsion_subgroup(testing::field_q5()).second, 2);
}

TEST(SArith, StripAndIdealSNorm) {
  auto qi = testing::field_qi();
  auto s = make_sconfig(qi, testing::primes_over(qi, {2}));
  auto a = FractionalIdeal::principal(qi, qi.from_rational(6));
  EXPECT_EQ(strip_s_primes(s, a), FractionalIdeal::principal(qi, qi.from_rational(3)));
  EXPECT_EQ(s_norm(s, a), 9);
}

}  // namespace
}  // namespace seuclid
