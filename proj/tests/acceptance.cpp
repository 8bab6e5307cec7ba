// Copyright 2026 The seuclid Authors
// SPDX-License-Identifier: Apache-2.0

// End-to-end acceptance suite: one PASS/FAIL line per criterion.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>

#include "cli.hpp"
#include "support.hpp"

using namespace seuclid;
using namespace seuclid::testing;

namespace {

struct Check {
  bool ok = true;
  std::string detail;

  void expect(bool cond, const std::string& what) {
    if (!cond && ok) {
      ok = false;
      detail = what;
    }
  }
};

// Product formula over all places dividing the norm: |N(x)| * prod Np^{-v} = 1.
Rational product_of_absolute_values(const NumberField& k, const FieldElement& x) {
  const Rational n = k.norm(x);
  Rational prod = abs_q(n);
  std::set<Integer> primes;
  for (const auto& [p, e] : factor_integer(n.get_num())) primes.insert(p);
  for (const auto& [p, e] : factor_integer(n.get_den())) primes.insert(p);
  for (const auto& p : primes)
    for (const auto& v : places_above(k, p)) prod *= pow_q(Rational(v.residue_norm()), -valuation(k, x, v));
  return prod;
}

// N_S(x) as the reciprocal product of |x|_v over places outside S.
Rational s_norm_from_outside(const SConfig& s, const FieldElement& x) {
  const auto& k = s.field;
  const Rational n = k.norm(x);
  std::set<Integer> primes;
  for (const auto& [p, e] : factor_integer(n.get_num())) primes.insert(p);
  for (const auto& [p, e] : factor_integer(n.get_den())) primes.insert(p);
  Rational out = 1;
  for (const auto& p : primes)
    for (const auto& v : places_above(k, p)) {
      bool in_s = false;
      for (const auto& w : s.places) in_s = in_s || (w.is_finite() && w == v);
      if (!in_s) out *= pow_q(Rational(v.residue_norm()), valuation(k, x, v));
    }
  return out;
}

Check criterion1() {
  Check c;
  Rng rng(101);
  for (const auto& k : {field_q(), field_qi(), field_q2(), field_q5()}) {
    for (auto primes : {std::vector<long>{}, std::vector<long>{2}, std::vector<long>{2, 3}}) {
      std::vector<Place> fin;
      for (long p : primes)
        for (const auto& v : places_above(k, p)) fin.push_back(v);
      SConfig s = make_sconfig(k, fin);
      for (int i = 0; i < 100; ++i) {
        FieldElement x = rng.nonzero(k.degree()), y = rng.nonzero(k.degree());
        c.expect(product_of_absolute_values(k, x) == 1, "product formula fails for " + to_string(x));
        c.expect(s_norm(s, k.mul(x, y)) == s_norm(s, x) * s_norm(s, y), "N_S not multiplicative");
        c.expect(s_norm(s, x) == s_norm_from_outside(s, x), "N_S differs from the outside product");
      }
    }
  }
  c.detail = c.ok ? "1200 elements over 4 fields x 3 choices of S" : c.detail;
  return c;
}

Check criterion2() {
  Check c;
  Rng rng(202);
  const NumberField q = field_q();
  std::size_t n = 0;
  for (auto primes : {std::vector<long>{}, std::vector<long>{2}, std::vector<long>{2, 3}}) {
    std::vector<Place> fin;
    for (long p : primes) fin.push_back(places_above(q, p)[0]);
    SConfig s = configure_s(q, fin);
    FundamentalDomain d(s, FractionalIdeal::unit(q));
    for (int i = 0; i < 500; ++i) {
      Rational r = rng.rational(200, 60);
      FieldElement x = q.from_rational(r);
      c.expect(s_norm(s, x) == (r == 0 ? Rational(0) : s_free_part(r, primes)), "N_S differs from S-free part");
      MinimumValue m = m_exact(d, x);
      c.expect(m.value == m_rational_oracle(r, primes), "m_exact(" + to_string(r) + ") = " + to_string(m.value));
      ++n;
    }
  }
  if (c.ok) c.detail = std::to_string(n) + " rationals, S = {inf}, {inf,2}, {inf,2,3}";
  return c;
}

FieldElement random_unit(const SConfig& s, Rng& rng) {
  const auto& k = s.field;
  FieldElement u = k.pow(s.torsion_gen, rng.range(0, s.torsion_order - 1));
  for (const auto& g : s.unit_gens) u = k.mul(u, k.pow(g, rng.range(-2, 2)));
  return u;
}

Check criterion3() {
  Check c;
  Rng rng(303);
  struct Case {
    NumberField k;
    std::vector<long> primes;
  };
  std::vector<Case> cases{{field_q(), {2, 3}}, {field_qi(), {}}, {field_qi(), {5}}, {field_q2(), {}}, {field_q5(), {}}};
  for (const auto& cs : cases) {
    const auto& k = cs.k;
    std::vector<Place> fin;
    for (long p : cs.primes)
      for (const auto& v : places_above(k, p)) fin.push_back(v);
    SConfig s = configure_s(k, fin);
    FundamentalDomain d(s, FractionalIdeal::unit(k));
    for (int i = 0; i < 100; ++i) {
      FieldElement xi = rng.element(k.degree(), 12, 6);
      FieldElement u = random_unit(s, rng);
      Rational a = m_exact(d, xi).value, b = m_exact(d, k.mul(u, xi)).value;
      c.expect(a == b, "unit invariance fails at " + to_string(xi));
      // a = gamma b
      FieldElement gamma = rng.nonzero(k.degree(), 6, 3);
      FractionalIdeal bi = FractionalIdeal::principal(k, k.inv(gamma));
      FundamentalDomain db(s, bi);
      Rational lhs = m_exact(d, xi).value;
      Rational rhs = m_exact(db, k.mul(xi, k.inv(gamma))).value;
      c.expect(lhs == rhs, "class invariance fails at " + to_string(xi) + " gamma " + to_string(gamma));
      // and for a non-principal class in Q(sqrt -5)
      if (k.discriminant() == -20) {
        FractionalIdeal p2 = FractionalIdeal::from_gens(k, {k.from_rational(2), k.one() + k.theta()});
        FundamentalDomain da(s, p2), dg(s, FractionalIdeal::principal(k, k.inv(gamma)) * p2);
        c.expect(m_exact(da, xi).value == m_exact(dg, k.mul(xi, k.inv(gamma))).value, "class invariance fails on (2, 1+r)");
      }
    }
  }
  if (c.ok) c.detail = "100 cases each: Z[1/6], Z[i], Z[i][1/5], Z[sqrt2], Z[sqrt-5] (+ class of (2,1+sqrt-5))";
  return c;
}

Check criterion4() {
  Check c;
  std::string detail;
  auto run = [&](const std::string& name, const std::string& config, const char* expect, double& secs) {
    auto t0 = std::chrono::steady_clock::now();
    cli::RunConfig cfg = cli::parse_config(config);
    cfg.params.budget = 200000;
    auto out = cli::run_command(cfg, "decide");
    secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    cli::Json doc = cli::finalize(out.doc, cli::Json::object());
    const std::string verdict = doc["result"]["verdict"];
    c.expect(verdict == expect, name + ": verdict " + verdict);
    auto replay = cli::run_command(cfg, "verify-cert", &doc);
    c.expect(replay.exit_code == cli::kOk && replay.doc["result"]["ok"] == true, name + ": evidence does not replay");
    c.expect(secs < 300, name + ": took too long");
    return doc;
  };
  double s1, s2, s3, s4;
  run("Z[1/6]", R"({"field":{"poly":[-1,1]},"S":{"primes":[2,3]},"ideal":{"gens":[[1]]}})", "euclidean", s1);
  run("Z[i]", R"({"field":{"poly":[1,0,1]},"S":{"primes":[]},"ideal":{"gens":[[1,0]]}})", "euclidean", s2);
  auto doc = run("Z[sqrt-5]", R"({"field":{"poly":[5,0,1]},"ideal":{"gens":[[1,0]]}})", "not_euclidean", s3);
  c.expect(doc["result"]["witness"] == cli::Json::array({"1/2", "1/2"}), "witness is not (1+sqrt-5)/2");
  c.expect(doc["result"]["witness_m"]["value"] == "3/2", "witness value is not 3/2");
  run("(2,1+sqrt-5)", R"({"field":{"poly":[5,0,1]},"ideal":{"gens":[[2,0],[1,1]]}})", "euclidean", s4);
  char buf[160];
  std::snprintf(buf, sizeof buf, "verdicts and replays ok (%.2fs, %.2fs, %.2fs, %.2fs)", s1, s2, s3, s4);
  if (c.ok) c.detail = buf;
  return c;
}

Check criterion5() {
  Check c;
  const NumberField q = field_q();
  FundamentalDomain d(configure_s(q, primes_over(q, {2, 3})), FractionalIdeal::unit(q));
  const Rational gap(1, 100);
  MReport r = compute_M(d, gap, 20, 500000, 1);
  c.expect(r.lower == Rational(1, 5), "lower = " + to_string(r.lower));
  c.expect(r.witness == q.from_rational(Rational(1, 5)), "witness = " + to_string(r.witness));
  c.expect(m_exact(d, r.witness).value == r.lower, "witness does not replay");
  c.expect(r.upper && *r.upper == Rational(21, 100), "no certificate at t = 21/100");
  c.expect(r.certificate && verify_certificate(d, *r.certificate).ok, "certificate does not replay");
  c.expect(r.upper && *r.upper - r.lower <= gap && r.lower <= *r.upper, "bounds do not bracket within the gap");
  if (c.ok)
    c.detail = "lower 1/5 (witness 1/5), upper 21/100, " + std::to_string(r.certificate->boxes.size()) + " boxes" +
               (r.exact ? ", exact flag set" : "");
  return c;
}

Check criterion6() {
  Check c;
  Rng rng(606);
  struct Case {
    std::string name;
    NumberField k;
    std::vector<long> primes;
    std::vector<FieldElement> gens;
    Rational t;
  };
  const NumberField q = field_q(), qi = field_qi(), q5 = field_q5();
  std::vector<Case> cases{
      {"Z, t=3/5", q, {}, {q.one()}, Rational(3, 5)},
      {"Z[i], t=1", qi, {}, {qi.one()}, Rational(1)},
      {"Z[1/6], t=21/100", q, {2, 3}, {q.one()}, Rational(21, 100)},
      {"Z[i][1/5], t=1", qi, {5}, {qi.one()}, Rational(1)},
      {"(2,1+sqrt-5), t=1", q5, {}, {q5.from_rational(2), q5.one() + q5.theta()}, Rational(1)},
  };
  std::size_t total = 0;
  for (const auto& cs : cases) {
    std::vector<Place> fin;
    for (long p : cs.primes)
      for (const auto& v : places_above(cs.k, p)) fin.push_back(v);
    FundamentalDomain d(configure_s(cs.k, fin), FractionalIdeal::from_gens(cs.k, cs.gens));
    auto res = covering_verify(d, cs.t, 200000);
    c.expect(res.complete, cs.name + ": covering incomplete");
    if (!res.complete) continue;
    const auto& cert = res.certificate;
    c.expect(verify_certificate(d, cert).ok, cs.name + ": replay fails");
    auto looser = cert;
    looser.t = cs.t + Rational(1, 7);
    c.expect(verify_certificate(d, looser).ok, cs.name + ": fails at larger t");
    for (int i = 0; i < 1000; ++i) {
      FieldElement x = domain_sample(d, rng, cs.primes);
      int hits = 0;
      for (const auto& b : cert.boxes) {
        if (!box_contains(d, b.box, x)) continue;
        ++hits;
        Rational v = s_norm(d.s(), x - b.gamma) / d.ideal_norm();
        c.expect(v <= b.bound && v < cs.t, cs.name + ": sample " + to_string(x) + " violates its box bound");
      }
      c.expect(hits == 1, cs.name + ": sample " + to_string(x) + " lies in " + std::to_string(hits) + " boxes");
      ++total;
    }
    // Single-field mutations.
    auto tamper = cert;
    tamper.boxes[0].bound -= Rational(1, 1 << 20);
    c.expect(!verify_certificate(d, tamper).ok, cs.name + ": lowered bound accepted");
    tamper = cert;
    tamper.boxes.back().bound = cs.t;
    c.expect(!verify_certificate(d, tamper).ok, cs.name + ": bound at t accepted");
    tamper = cert;
    tamper.boxes[0].gamma.coords[0] += 1;
    c.expect(!verify_certificate(d, tamper).ok, cs.name + ": moved gamma accepted");
    tamper = cert;
    tamper.boxes[0].box.y[0].hi += Rational(1, 1024);
    c.expect(!verify_certificate(d, tamper).ok, cs.name + ": moved box edge accepted");
    tamper = cert;
    tamper.boxes.pop_back();
    c.expect(!verify_certificate(d, tamper).ok, cs.name + ": missing box accepted");
    tamper = cert;
    tamper.t = cert.boxes[0].bound;
    c.expect(!verify_certificate(d, tamper).ok || cert.boxes.size() == 0, cs.name + ": t below a bound accepted");
  }
  if (c.ok) c.detail = std::to_string(cases.size()) + " certificates, " + std::to_string(total) + " samples, tampering rejected";
  return c;
}

Check criterion7() {
  Check c;
  const NumberField q = field_q();
  FundamentalDomain d(configure_s(q, primes_over(q, {2, 3})), FractionalIdeal::unit(q));
  auto o5 = d.orbit(q.from_rational(Rational(1, 5)));
  auto o7 = d.orbit(q.from_rational(Rational(1, 7)));
  c.expect(o5.size() == 4, "orbit of 1/5 has size " + std::to_string(o5.size()));
  c.expect(o7.size() == 6, "orbit of 1/7 has size " + std::to_string(o7.size()));
  for (const auto* orb : {&o5, &o7}) {
    const Rational m0 = m_exact(d, orb->front().point).value;
    for (const auto& p : *orb) {
      c.expect(m_exact(d, p.point).value == m0, "orbit values differ at " + to_string(p.point));
      c.expect(d.reduce(q.mul(p.unit, orb->front().point)).first == p.point, "orbit unit does not map the base point");
    }
  }
  if (c.ok) c.detail = "sizes 4 and 6, constant m on each orbit";
  return c;
}

Check criterion8() {
  Check c;
  Rng rng(808);
  for (const auto& k : {field_qi(), field_q2()}) {
    SConfig s = configure_s(k, {});
    const FractionalIdeal dinv = inverse_different(k);
    for (int i = 0; i < 20; ++i) {
      std::vector<FieldElement> gens{rng.nonzero(2, 9, 4), rng.nonzero(2, 9, 4)};
      FractionalIdeal a = FractionalIdeal::from_gens(k, gens);
      FractionalIdeal dual = s_trace_dual(s, a);
      c.expect(a * dual == dinv, "a * dual != D^-1");
      for (const auto& x : dual.basis())
        for (const auto& y : a.basis())
          c.expect(char_pair(s, x, y).value == 0, "character does not vanish on dual x a");
    }
  }
  if (c.ok) c.detail = "20 ideals each in Q(i), Q(sqrt2)";
  return c;
}

Check criterion9() {
  Check c;
  Rng rng(909);
  struct Case {
    NumberField k;
    std::vector<FieldElement> gens;
    Integer disc;
  };
  const NumberField q2 = field_q2(), qi = field_qi(), q5 = field_q5();
  std::vector<Case> cases{{q2, {q2.one()}, 8},
                          {qi, {qi.one()}, -4},
                          {q5, {q5.from_rational(2), q5.one() + q5.theta()}, -20}};
  for (const auto& cs : cases) {
    const auto& k = cs.k;
    FractionalIdeal a = FractionalIdeal::from_gens(k, cs.gens);
    auto basis = a.basis();
    BinaryQuadraticForm f = form_from_ideal(a, {basis[0], basis[1]});
    c.expect(f.discriminant() == cs.disc, "discriminant " + f.discriminant().get_str());
    FundamentalDomain d(configure_s(k, {}), a);
    for (int i = 0; i < 100; ++i) {
      Integer x = rng.range(-50, 50), y = rng.range(-50, 50);
      FieldElement v = Rational(x) * basis[0] + Rational(y) * basis[1];
      c.expect(f(x, y) * a.norm() == k.norm(v), "norm identity fails");
      RationalPoint p{rng.rational(30, 9), rng.rational(30, 9)};
      Rational lhs = m_form(f, p);
      Rational rhs = m_exact(d, p[0] * basis[0] + p[1] * basis[1]).value;
      c.expect(lhs == rhs, "minima differ at (" + to_string(p[0]) + ", " + to_string(p[1]) + ")");
    }
  }
  c.expect(m_form({1, 0, -2}, {Rational(1, 2), Rational(0)}) == Rational(1, 4), "m_f(x^2 - 2y^2, (1/2, 0)) != 1/4");
  if (c.ok) c.detail = "discriminants 8, -4, -20; 100 points each; m(x^2-2y^2,(1/2,0)) = 1/4";
  return c;
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* name;
    double limit;
    std::function<Check()> run;
  };
  const std::vector<Criterion> criteria{
      {1, "product formula and N_S multiplicativity", 10, criterion1},
      {2, "m_exact vs S-free-part oracle over Q", 30, criterion2},
      {3, "unit and ideal-class invariance", 60, criterion3},
      {4, "decision outcomes with replayed evidence", 1200, criterion4},
      {5, "compute_M on Z[1/6]", 600, criterion5},
      {6, "covering monotonicity, soundness, tamper rejection", 120, criterion6},
      {7, "orbit structure under {inf,2,3}", 10, criterion7},
      {8, "duality layer", 30, criterion8},
      {9, "forms dictionary", 60, criterion9},
  };
  int failed = 0;
  for (const auto& cr : criteria) {
    auto t0 = std::chrono::steady_clock::now();
    Check c;
    try {
      c = cr.run();
    } catch (const std::exception& e) {
      c.ok = false;
      c.detail = std::string("exception: ") + e.what();
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (c.ok && secs > cr.limit) {
      c.ok = false;
      c.detail = "time limit exceeded";
    }
    std::printf("%s [%d] %s (%.2fs / %.0fs): %s\n", c.ok ? "PASS" : "FAIL", cr.id, cr.name, secs, cr.limit,
                c.detail.c_str());
    std::fflush(stdout);
    failed += !c.ok;
  }
  return failed == 0 ? 0 : 1;
}
