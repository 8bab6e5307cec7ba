// Copyright 2026 The seuclid Authors
// SPDX-License-Identifier: Apache-2.0

#include <gtest/gtest.h>

#include <numeric>

#include "support.hpp"

namespace seuclid {
namespace {

using testing::elt;
using testing::Rng;

FieldElement rat(const Rational& r) { return FieldElement(std::vector<Rational>{r}); }

FundamentalDomain rational_domain(std::initializer_list<long> primes) {
  auto q = testing::field_q();
  return FundamentalDomain(configure_s(q, testing::primes_over(q, primes)), FractionalIdeal::unit(q));
}

void expect_replays(const FundamentalDomain& d, const FieldElement& xi, const MinimumValue& m) {
  EXPECT_TRUE(d.in_ideal(m.shift));
  EXPECT_EQ(s_norm(d.s(), xi - m.shift) / d.ideal_norm(), m.value) << to_string(xi);
}

TEST(MExact, Examples) {
  auto dz = rational_domain({});
  auto m = m_exact(dz, rat(Rational(1, 2)));
  EXPECT_EQ(m.value, Rational(1, 2));
  expect_replays(dz, rat(Rational(1, 2)), m);

  auto qi = testing::field_qi();
  FundamentalDomain di(configure_s(qi, {}), FractionalIdeal::unit(qi));
  auto xi = elt({Rational(1, 2), Rational(1, 2)});
  auto mi = m_exact(di, xi);
  EXPECT_EQ(mi.value, Rational(1, 2));
  expect_replays(di, xi, mi);

  auto d2 = rational_domain({2});
  EXPECT_EQ(m_exact(d2, rat(Rational(1, 3))).value, Rational(1, 3));
  auto d6 = rational_domain({2, 3});
  auto m5 = m_exact(d6, rat(Rational(1, 5)));
  EXPECT_EQ(m5.value, Rational(1, 5));
  expect_replays(d6, rat(Rational(1, 5)), m5);
  EXPECT_EQ(m_exact(d6, rat(Rational(7, 3))).value, 0);
}

// Oracle: with only finitely many units, the minimum over a definite lattice
// is attained at a nearby lattice point; brute force a generous window.
Rational brute_imag_quadratic(long d, const Rational& x, const Rational& y) {
  Rational best = -1;
  for (long a = -3; a <= 3; ++a)
    for (long b = -3; b <= 3; ++b) {
      Rational u = x - (floor_q(x) + a), v = y - (floor_q(y) + b);
      Rational n = u * u + d * v * v;
      if (best < 0 || n < best) best = n;
    }
  return best;
}

TEST(MExact, ImaginaryQuadraticBruteForce) {
  Rng rng(41);
  for (long dd : {1, 2, 5}) {
    auto k = make_field({dd, 0, 1});
    FundamentalDomain d(configure_s(k, {}), FractionalIdeal::unit(k));
    for (int i = 0; i < 60; ++i) {
      auto xi = rng.element(2, 30, 11);
      auto pb = k.to_power_basis(xi);
      auto m = m_exact(d, xi);
      EXPECT_EQ(m.value, brute_imag_quadratic(dd, pb[0], pb[1])) << dd << " " << to_string(xi);
      expect_replays(d, xi, m);
    }
  }
}

TEST(MExact, RationalOracle) {
  Rng rng(42);
  for (auto primes : {std::vector<long>{2}, std::vector<long>{3, 5}, std::vector<long>{2, 3, 7}}) {
    auto q = testing::field_q();
    std::vector<Place> fin;
    for (long p : primes) fin.push_back(places_above(q, p)[0]);
    FundamentalDomain d(configure_s(q, fin), FractionalIdeal::unit(q));
    for (int i = 0; i < 100; ++i) {
      Rational r = rng.rational(300, 90);
      EXPECT_EQ(m_exact(d, rat(r)).value, testing::m_rational_oracle(r, primes)) << to_string(r);
    }
  }
}

TEST(MExact, Discreteness) {
  Rng rng(43);
  struct Case {
    NumberField k;
    std::vector<long> primes;
  };
  std::vector<Case> cases{{testing::field_q(), {2, 3}}, {testing::field_qi(), {5}}, {testing::field_q2(), {}},
                          {testing::field_q2(), {7}}};
  for (const auto& c : cases) {
    std::vector<Place> fin;
    for (long p : c.primes)
      for (const auto& v : places_above(c.k, p)) fin.push_back(v);
    FundamentalDomain ds(configure_s(c.k, fin), FractionalIdeal::unit(c.k));
    for (int i = 0; i < 40; ++i) {
      auto xi = rng.element(c.k.degree(), 20, 15);
      Integer den = 1;
      for (const auto& x : xi.coords) den = lcm(den, x.get_den());
      auto m = m_exact(ds, xi);
      Rational scaled = m.value * ds.ideal_norm() * s_norm(ds.s(), c.k.from_rational(Rational(den)));
      EXPECT_EQ(scaled.get_den(), 1) << to_string(xi);
      expect_replays(ds, xi, m);
    }
  }
}

TEST(MExact, OrbitConstant) {
  auto qi = testing::field_qi();
  FundamentalDomain d(configure_s(qi, testing::primes_over(qi, {5})), FractionalIdeal::unit(qi));
  Rng rng(44);
  for (int i = 0; i < 8; ++i) {
    auto xi = rng.element(2, 10, 7);
    auto orb = d.orbit(d.reduce(xi).first);
    const Rational m0 = m_exact(d, xi).value;
    for (const auto& p : orb) EXPECT_EQ(m_exact(d, p.point).value, m0);
    EXPECT_EQ(m_exact(d, xi, orb).value, m0);
  }
}

TEST(MUpperPoint, Examples) {
  auto dz = rational_domain({});
  EXPECT_EQ(m_upper_point(dz, rat(Rational(1, 2)), {rat(0), rat(1)}), Rational(1, 2));
  EXPECT_EQ(m_upper_point(dz, rat(0), {rat(0)}), 0);
  EXPECT_EQ(m_upper_point(dz, rat(Rational(1, 3)), {rat(1)}), Rational(2, 3));
  Rng rng(45);
  for (int i = 0; i < 50; ++i) {
    Rational r = rng.rational(50, 20);
    auto xi = rat(r);
    auto m = m_exact(dz, xi);
    EXPECT_GE(m_upper_point(dz, xi, {rat(floor_q(r)), rat(ceil_q(r))}), m.value);
    EXPECT_EQ(m_upper_point(dz, xi, {m.shift}), m.value);
  }
}

TEST(SearchLower, Examples) {
  auto dz = rational_domain({});
  auto r = search_lower(dz, 4);
  EXPECT_EQ(r.m.value, Rational(1, 2));
  EXPECT_EQ(r.xi, rat(Rational(1, 2)));

  auto qi = testing::field_qi();
  FundamentalDomain di(configure_s(qi, {}), FractionalIdeal::unit(qi));
  auto ri = search_lower(di, 2);
  EXPECT_EQ(ri.m.value, Rational(1, 2));
  EXPECT_EQ(ri.xi, elt({Rational(1, 2), Rational(1, 2)}));

  auto d6 = rational_domain({2, 3});
  auto r6 = search_lower(d6, 5);
  EXPECT_EQ(r6.m.value, Rational(1, 5));
  EXPECT_EQ(m_exact(d6, r6.xi).value, r6.m.value);
  std::set<FieldElement> orbit;
  for (const auto& p : d6.orbit(rat(Rational(1, 5)))) orbit.insert(p.point);
  EXPECT_TRUE(orbit.count(r6.xi));
}

TEST(SearchLower, MonotoneInBound) {
  auto q5 = testing::field_q5();
  FundamentalDomain d(configure_s(q5, {}), FractionalIdeal::unit(q5));
  Rational prev = -1;
  for (long b = 1; b <= 6; ++b) {
    auto r = search_lower(d, b);
    EXPECT_GE(r.m.value, prev);
    EXPECT_EQ(m_exact(d, r.xi).value, r.m.value);
    prev = r.m.value;
  }
  EXPECT_GE(prev, Rational(3, 2));
}

TEST(SearchLower, IncrementalMatchesBatch) {
  auto d = rational_domain({2, 3});
  LowerSearch ls(d);
  for (int i = 0; i < 12; ++i) ls.next_level();
  EXPECT_EQ(ls.best().m.value, search_lower(d, ls.level()).m.value);
}

}  // namespace
}  // namespace seuclid
