// Copyright 2026 The seuclid Authors
// SPDX-License-Identifier: Apache-2.0

#include <gtest/gtest.h>

#include "support.hpp"

namespace seuclid {
namespace {

using testing::elt;

FieldElement rat(const Rational& r) { return FieldElement(std::vector<Rational>{r}); }

FundamentalDomain domain(const NumberField& k, std::initializer_list<long> primes, std::vector<FieldElement> gens = {}) {
  if (gens.empty()) gens.push_back(k.one());
  return FundamentalDomain(configure_s(k, testing::primes_over(k, primes)), FractionalIdeal::from_gens(k, gens));
}

FieldElement q5_point(const FundamentalDomain& d) {
  const auto& k = d.field();
  return k.one() + Rational(2, 5) * k.theta();
}

void expect_consistent(const FundamentalDomain& d, const MReport& r) {
  EXPECT_EQ(m_exact(d, r.witness).value, r.lower);
  EXPECT_EQ(r.witness_value.value, r.lower);
  if (r.upper) {
    EXPECT_LE(r.lower, *r.upper);
    ASSERT_TRUE(r.certificate);
    EXPECT_EQ(r.certificate->t, *r.upper);
    EXPECT_TRUE(verify_certificate(d, *r.certificate).ok);
  }
}

TEST(ComputeM, Integers) {
  auto q = testing::field_q();
  auto d = domain(q, {});
  auto r = compute_M(d, Rational(1, 100), 20, 100000);
  EXPECT_EQ(r.lower, Rational(1, 2));
  EXPECT_EQ(r.witness, rat(Rational(1, 2)));
  ASSERT_TRUE(r.upper);
  EXPECT_LE(*r.upper, Rational(51, 100));
  expect_consistent(d, r);
}

TEST(ComputeM, GaussianIntegers) {
  auto qi = testing::field_qi();
  auto d = domain(qi, {});
  auto r = compute_M(d, Rational(1, 100), 20, 100000);
  EXPECT_EQ(r.lower, Rational(1, 2));
  EXPECT_EQ(r.witness, elt({Rational(1, 2), Rational(1, 2)}));
  ASSERT_TRUE(r.upper);
  EXPECT_LE(*r.upper, Rational(51, 100));
  expect_consistent(d, r);
}

TEST(ComputeM, ThresholdsDecrease) {
  auto d = domain(testing::field_q5(), {}, {testing::field_q5().from_rational(2), testing::field_q5().one() + testing::field_q5().theta()});
  auto r = compute_M(d, Rational(1, 10), 12, 200000);
  // Lattice spanned by 2 and 1 + sqrt-5: the deep hole 1 + (2/5) sqrt-5 is the
  // circumcenter of (0, 2, 1 + sqrt-5), squared radius 9/5, over N(a) = 2.
  EXPECT_EQ(r.lower, Rational(9, 10));
  EXPECT_EQ(r.witness_value.value, m_exact(d, q5_point(d)).value);
  expect_consistent(d, r);
  for (std::size_t i = 1; i < r.tested.size(); ++i) EXPECT_LT(r.tested[i], r.tested[i - 1]);
}

TEST(Decide, Examples) {
  auto q = testing::field_q();
  auto d6 = domain(q, {2, 3});
  auto v6 = decide_norm_euclidean(d6, 200000);
  EXPECT_EQ(v6.verdict, Verdict::Euclidean);
  ASSERT_TRUE(v6.certificate);
  EXPECT_EQ(v6.certificate->t, 1);
  EXPECT_TRUE(verify_certificate(d6, *v6.certificate).ok);

  auto q5 = testing::field_q5();
  auto d5 = domain(q5, {});
  auto v5 = decide_norm_euclidean(d5, 200000);
  EXPECT_EQ(v5.verdict, Verdict::NotEuclidean);
  EXPECT_EQ(v5.witness, elt({Rational(1, 2), Rational(1, 2)}));
  EXPECT_EQ(v5.witness_value.value, Rational(3, 2));
  EXPECT_TRUE(verify_witness(d5, v5.witness, v5.witness_value.value));
  EXPECT_FALSE(verify_witness(d5, v5.witness, Rational(1)));

  auto dp = domain(q5, {}, {q5.from_rational(2), q5.one() + q5.theta()});
  auto vp = decide_norm_euclidean(dp, 200000);
  EXPECT_EQ(vp.verdict, Verdict::Euclidean);
  ASSERT_TRUE(vp.certificate);
  EXPECT_TRUE(verify_certificate(dp, *vp.certificate).ok);
}

TEST(Decide, BudgetExhaustionIsUndecided) {
  auto d = domain(testing::field_q5(), {});
  auto v = decide_norm_euclidean(d, 0);
  EXPECT_EQ(v.verdict, Verdict::Undecided);
  EXPECT_STREQ(to_string(Verdict::Undecided), "undecided");
  EXPECT_STREQ(to_string(Verdict::Euclidean), "euclidean");
  EXPECT_STREQ(to_string(Verdict::NotEuclidean), "not_euclidean");
}

// Imaginary quadratic rings of integers, with the verdict cross-checked
// against the side of 1 on which the computed bounds fall.
TEST(Decide, AgreesWithBounds) {
  struct Case {
    ZPoly f;
    Verdict expected;
  };
  std::vector<Case> cases{{{1, 1, 1}, Verdict::Euclidean},  // -3
                          {{2, 0, 1}, Verdict::Euclidean},  // -8
                          {{2, 1, 1}, Verdict::Euclidean},  // -7
                          {{3, 1, 1}, Verdict::Euclidean},  // -11
                          {{5, 1, 1}, Verdict::NotEuclidean},  // -19
                          {{6, 0, 1}, Verdict::NotEuclidean}};  // -24
  for (const auto& c : cases) {
    auto k = make_field(c.f);
    auto d = domain(k, {});
    auto v = decide_norm_euclidean(d, 200000);
    EXPECT_EQ(v.verdict, c.expected) << k.discriminant();
    auto r = compute_M(d, Rational(1, 20), 12, 200000);
    expect_consistent(d, r);
    if (r.lower >= 1) EXPECT_EQ(v.verdict, Verdict::NotEuclidean);
    if (r.upper && *r.upper < 1) EXPECT_EQ(v.verdict, Verdict::Euclidean);
    if (v.verdict == Verdict::NotEuclidean) EXPECT_TRUE(verify_witness(d, v.witness, v.witness_value.value));
  }
}

}  // namespace
}  // namespace seuclid
