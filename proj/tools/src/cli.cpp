// Copyright 2026 The seuclid Authors
// SPDX-License-Identifier: Apache-2.0

#include "cli.hpp"

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <set>

namespace seuclid::cli {

namespace {

[[noreturn]] void invalid(const std::string& path, const std::string& what) {
  throw Error(Errc::ValidationError, path + ": " + what);
}

[[noreturn]] void malformed(const std::string& path, const std::string& what) {
  throw Error(Errc::ParseError, path + ": " + what);
}

Integer integer_from_json(const Json& j, const std::string& path) {
  if (j.is_number_integer()) return Integer(std::to_string(j.get<long long>()));
  if (j.is_string()) {
    Rational q = parse_rational(j.get<std::string>());
    if (q.get_den() != 1) malformed(path, "expected an integer");
    return q.get_num();
  }
  malformed(path, "expected an integer");
}

Rational rational_from_json(const Json& j, const std::string& path) {
  if (j.is_number_integer()) return Rational(integer_from_json(j, path));
  if (j.is_string()) {
    try {
      return parse_rational(j.get<std::string>());
    } catch (const Error& e) {
      malformed(path, e.what());
    }
  }
  malformed(path, "expected a rational as \"p/q\" or an integer");
}

std::string rat(const Rational& q) { return to_string(q); }

Json rational_list(const std::vector<Rational>& v) {
  Json out = Json::array();
  for (const auto& q : v) out.push_back(rat(q));
  return out;
}

const Json& require(const Json& obj, const std::string& key, const std::string& path) {
  if (!obj.is_object()) malformed(path, "expected an object");
  auto it = obj.find(key);
  if (it == obj.end()) malformed(path + "." + key, "missing");
  return *it;
}

Json place_json(const Place& v) {
  Json j;
  j["label"] = v.label();
  if (v.is_finite()) {
    j["p"] = v.p.get_str();
    j["e"] = v.e;
    j["f"] = v.f;
    j["index"] = v.index;
    j["generator"] = element_to_json(v.gen);
  } else {
    j["kind"] = v.kind == PlaceKind::Real ? "real" : "complex";
  }
  return j;
}

Json ideal_json(const FractionalIdeal& a) {
  Json j;
  Json basis = Json::array();
  for (const auto& b : a.basis()) basis.push_back(element_to_json(b));
  j["basis"] = basis;
  j["norm"] = rat(a.norm());
  return j;
}

Json minimum_json(const MinimumValue& m) {
  Json j;
  j["value"] = rat(m.value);
  j["shift"] = element_to_json(m.shift);
  j["orbit_size"] = m.orbit_size;
  j["lattice_points"] = m.lattice_points;
  return j;
}

Json stats_json(const CoveringStats& s) {
  Json j;
  j["processed"] = s.processed;
  j["certified"] = s.certified;
  j["max_depth"] = s.max_depth;
  j["candidates_screened"] = s.candidates_screened;
  return j;
}

const FundamentalDomain& domain(const RunConfig& cfg) { return *cfg.domain; }

const FieldElement& need_xi(const RunConfig& cfg) {
  if (!cfg.xi) invalid("xi", "this command needs an element");
  return *cfg.xi;
}

Json box_json(const CertifiedBox& b, const FundamentalDomain& d) {
  Json j;
  Json y = Json::array();
  for (const auto& iv : b.box.y) y.push_back({rat(iv.lo), rat(iv.hi)});
  j["box"] = y;
  Json classes = Json::array();
  std::size_t f = 0;
  for (const auto& v : d.s().places) {
    if (!v.is_finite()) continue;
    const auto& c = b.box.fin[f++];
    Json cj;
    cj["p"] = v.p.get_str();
    cj["place"] = v.index;
    cj["center"] = element_to_json(c.r);
    cj["k"] = c.k;
    classes.push_back(cj);
  }
  j["classes"] = classes;
  j["gamma"] = element_to_json(b.gamma);
  j["bound"] = rat(b.bound);
  return j;
}

}  // namespace

Json element_to_json(const FieldElement& x) { return rational_list(x.coords); }

FieldElement element_from_json(const Json& j, int degree, const std::string& path) {
  if (!j.is_array()) malformed(path, "expected a coordinate list");
  if (static_cast<int>(j.size()) != degree)
    invalid(path, "expected " + std::to_string(degree) + " coordinates, got " + std::to_string(j.size()));
  std::vector<Rational> c;
  for (std::size_t i = 0; i < j.size(); ++i) c.push_back(rational_from_json(j[i], path + "[" + std::to_string(i) + "]"));
  return FieldElement(std::move(c));
}

Json RunConfig::echo() const {
  Json j;
  Json poly_j = Json::array();
  for (const auto& c : poly) poly_j.push_back(c.get_str());
  j["field"]["poly"] = poly_j;
  Json pr = Json::array();
  for (const auto& p : primes) {
    if (p.places) {
      pr.push_back({{"p", p.p.get_str()}, {"places", *p.places}});
    } else {
      pr.push_back(p.p.get_str());
    }
  }
  j["S"]["primes"] = pr;
  Json gens = Json::array();
  for (const auto& g : ideal_gens) gens.push_back(element_to_json(g));
  j["ideal"]["gens"] = gens;
  if (unit_gens) {
    Json u = Json::array();
    for (const auto& g : *unit_gens) u.push_back(element_to_json(g));
    j["units"]["gens"] = u;
  }
  if (xi) j["xi"] = element_to_json(*xi);
  if (form) j["form"] = {{"a", form->a.get_str()}, {"b", form->b.get_str()}, {"c", form->c.get_str()}};
  if (point) j["point"] = {rat((*point)[0]), rat((*point)[1])};
  Json pa;
  if (params.t) pa["t"] = rat(*params.t);
  pa["gap"] = rat(params.gap);
  pa["denom_bound"] = params.denom_bound.get_str();
  pa["budget"] = params.budget;
  pa["workers"] = params.workers;
  j["params"] = pa;
  return j;
}

RunConfig parse_config(const std::string& text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw Error(Errc::ParseError, std::string("byte ") + std::to_string(e.byte) + ": " + e.what());
  }
  if (!j.is_object()) malformed("$", "expected an object");
  RunConfig cfg;

  const Json& poly = require(require(j, "field", "$"), "poly", "field");
  if (!poly.is_array() || poly.empty()) malformed("field.poly", "expected a coefficient list");
  for (std::size_t i = 0; i < poly.size(); ++i)
    cfg.poly.push_back(integer_from_json(poly[i], "field.poly[" + std::to_string(i) + "]"));
  try {
    cfg.field = std::make_shared<NumberField>(make_field(cfg.poly));
  } catch (const Error& e) {
    invalid("field.poly", e.what());
  }
  const NumberField& k = *cfg.field;
  const int n = k.degree();

  std::vector<Place> finite;
  if (j.contains("S")) {
    const Json& primes = require(j["S"], "primes", "S");
    if (!primes.is_array()) malformed("S.primes", "expected a list");
    std::set<Integer> seen;
    for (std::size_t i = 0; i < primes.size(); ++i) {
      const std::string path = "S.primes[" + std::to_string(i) + "]";
      PrimeSpec ps;
      if (primes[i].is_object()) {
        ps.p = integer_from_json(require(primes[i], "p", path), path + ".p");
        if (primes[i].contains("places")) {
          const Json& idx = primes[i]["places"];
          if (!idx.is_array()) malformed(path + ".places", "expected a list of indices");
          ps.places.emplace();
          for (const auto& x : idx) {
            if (!x.is_number_integer()) malformed(path + ".places", "expected integer indices");
            ps.places->push_back(x.get<int>());
          }
        }
      } else {
        ps.p = integer_from_json(primes[i], path);
      }
      if (ps.p < 2 || !is_probable_prime(ps.p)) invalid(path, ps.p.get_str() + " is not prime");
      if (!seen.insert(ps.p).second) invalid(path, "duplicate prime " + ps.p.get_str());
      auto above = places_above(k, ps.p);
      if (ps.places) {
        std::set<int> chosen;
        for (int idx : *ps.places) {
          if (idx < 0 || idx >= static_cast<int>(above.size()))
            invalid(path + ".places", "index " + std::to_string(idx) + " out of range (" +
                                          std::to_string(above.size()) + " places)");
          if (!chosen.insert(idx).second) invalid(path + ".places", "duplicate index");
          finite.push_back(above[idx]);
        }
      } else {
        finite.insert(finite.end(), above.begin(), above.end());
      }
      cfg.primes.push_back(ps);
    }
  }

  if (j.contains("units")) {
    const Json& gens = require(j["units"], "gens", "units");
    if (!gens.is_array()) malformed("units.gens", "expected a list");
    cfg.unit_gens.emplace();
    for (std::size_t i = 0; i < gens.size(); ++i)
      cfg.unit_gens->push_back(element_from_json(gens[i], n, "units.gens[" + std::to_string(i) + "]"));
  }

  const Json& igens = require(require(j, "ideal", "$"), "gens", "ideal");
  if (!igens.is_array() || igens.empty()) malformed("ideal.gens", "expected a non-empty list");
  for (std::size_t i = 0; i < igens.size(); ++i)
    cfg.ideal_gens.push_back(element_from_json(igens[i], n, "ideal.gens[" + std::to_string(i) + "]"));
  try {
    cfg.ideal = std::make_shared<FractionalIdeal>(FractionalIdeal::from_gens(k, cfg.ideal_gens));
  } catch (const Error& e) {
    invalid("ideal.gens", e.what());
  }

  SConfig s;
  try {
    s = configure_s(k, finite, cfg.unit_gens);
  } catch (const Error& e) {
    invalid(cfg.unit_gens ? "units.gens" : "S", e.what());
  }
  cfg.domain = std::make_shared<FundamentalDomain>(std::move(s), *cfg.ideal);

  if (j.contains("xi")) cfg.xi = element_from_json(j["xi"], n, "xi");
  if (j.contains("form")) {
    const Json& f = j["form"];
    cfg.form = BinaryQuadraticForm{integer_from_json(require(f, "a", "form"), "form.a"),
                                   integer_from_json(require(f, "b", "form"), "form.b"),
                                   integer_from_json(require(f, "c", "form"), "form.c")};
  }
  if (j.contains("point")) {
    const Json& p = j["point"];
    if (!p.is_array() || p.size() != 2) malformed("point", "expected two rationals");
    cfg.point = RationalPoint{rational_from_json(p[0], "point[0]"), rational_from_json(p[1], "point[1]")};
  }
  if (j.contains("params")) {
    const Json& pa = j["params"];
    if (!pa.is_object()) malformed("params", "expected an object");
    if (pa.contains("t")) cfg.params.t = rational_from_json(pa["t"], "params.t");
    if (pa.contains("gap")) cfg.params.gap = rational_from_json(pa["gap"], "params.gap");
    if (pa.contains("denom_bound")) cfg.params.denom_bound = integer_from_json(pa["denom_bound"], "params.denom_bound");
    if (pa.contains("budget")) {
      if (!pa["budget"].is_number_unsigned()) malformed("params.budget", "expected a non-negative integer");
      cfg.params.budget = pa["budget"].get<std::size_t>();
    }
    if (pa.contains("workers")) {
      if (!pa["workers"].is_number_unsigned()) malformed("params.workers", "expected a positive integer");
      cfg.params.workers = pa["workers"].get<unsigned>();
    }
  }
  if (cfg.params.gap <= 0) invalid("params.gap", "must be positive");
  if (cfg.params.denom_bound < 1) invalid("params.denom_bound", "must be positive");
  if (cfg.params.workers < 1) invalid("params.workers", "must be positive");
  if (cfg.params.t && *cfg.params.t <= 0) invalid("params.t", "must be positive");
  return cfg;
}

Json certificate_to_json(const FundamentalDomain& d, const CoveringCertificate& cert) {
  Json j;
  j["t"] = rat(cert.t);
  Json boxes = Json::array();
  for (const auto& b : cert.boxes) boxes.push_back(box_json(b, d));
  j["boxes"] = boxes;
  return j;
}

CoveringCertificate certificate_from_json(const FundamentalDomain& d, const Json& j) {
  const int n = d.field().degree();
  CoveringCertificate cert;
  cert.t = rational_from_json(require(j, "t", "certificate"), "certificate.t");
  const Json& boxes = require(j, "boxes", "certificate");
  if (!boxes.is_array()) malformed("certificate.boxes", "expected a list");
  std::vector<const Place*> fin;
  for (const auto& v : d.s().places)
    if (v.is_finite()) fin.push_back(&v);
  for (std::size_t i = 0; i < boxes.size(); ++i) {
    const std::string path = "certificate.boxes[" + std::to_string(i) + "]";
    const Json& bj = boxes[i];
    CertifiedBox cb;
    const Json& y = require(bj, "box", path);
    if (!y.is_array()) malformed(path + ".box", "expected intervals");
    for (std::size_t a = 0; a < y.size(); ++a) {
      const std::string ip = path + ".box[" + std::to_string(a) + "]";
      if (!y[a].is_array() || y[a].size() != 2) malformed(ip, "expected [lo, hi]");
      cb.box.y.emplace_back(rational_from_json(y[a][0], ip + "[0]"), rational_from_json(y[a][1], ip + "[1]"));
    }
    const Json& classes = require(bj, "classes", path);
    if (!classes.is_array() || classes.size() != fin.size()) malformed(path + ".classes", "wrong number of classes");
    for (std::size_t f = 0; f < classes.size(); ++f) {
      const std::string cp = path + ".classes[" + std::to_string(f) + "]";
      const Json& c = classes[f];
      if (integer_from_json(require(c, "p", cp), cp + ".p") != fin[f]->p) invalid(cp + ".p", "prime does not match S");
      const Json& pl = require(c, "place", cp);
      if (!pl.is_number_integer() || pl.get<int>() != fin[f]->index) invalid(cp + ".place", "place does not match S");
      const Json& k = require(c, "k", cp);
      if (!k.is_number_integer()) malformed(cp + ".k", "expected an integer");
      cb.box.fin.push_back({k.get<int>(), element_from_json(require(c, "center", cp), n, cp + ".center")});
    }
    cb.gamma = element_from_json(require(bj, "gamma", path), n, path + ".gamma");
    cb.bound = rational_from_json(require(bj, "bound", path), path + ".bound");
    cert.boxes.push_back(std::move(cb));
  }
  return cert;
}

std::string serialize(const Json& doc) { return doc.dump(2) + "\n"; }

std::string digest(const Json& doc) {
  Json body = doc;
  body.erase("timing");
  body.erase("digest");
  const std::string text = body.dump();
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : text) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

Json finalize(Json doc, const Json& timing) {
  doc["format_version"] = kFormatVersion;
  doc["digest"] = digest(doc);
  doc["timing"] = timing;
  return doc;
}

void emit_report(const Json& doc, const std::string& path) {
  const std::string text = serialize(doc);
  if (path.empty() || path == "-") {
    std::cout << text;
    std::cout.flush();
    if (!std::cout) throw Error(Errc::IoError, "cannot write to standard output");
    return;
  }
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(Errc::IoError, "cannot open " + path);
  out << text;
  out.close();
  if (!out) throw Error(Errc::IoError, "cannot write " + path);
}

namespace {

Json cmd_info(const RunConfig& cfg) {
  const auto& d = domain(cfg);
  const auto& k = d.field();
  const auto& s = d.s();
  Json r;
  r["degree"] = k.degree();
  r["signature"] = {k.signature().r1, k.signature().r2};
  r["discriminant"] = k.discriminant().get_str();
  r["index"] = k.index().get_str();
  Json ib = Json::array();
  for (int i = 0; i < k.degree(); ++i) {
    std::vector<Rational> e(k.degree(), 0);
    e[i] = 1;
    ib.push_back(rational_list(k.to_power_basis(FieldElement(e))));
  }
  r["integral_basis"] = ib;
  Json places = Json::array();
  for (const auto& v : s.places) places.push_back(place_json(v));
  r["places"] = places;
  Json units = Json::array();
  for (const auto& u : s.unit_gens) units.push_back(element_to_json(u));
  r["unit_gens"] = units;
  r["units_verified"] = s.verified;
  r["torsion_gen"] = element_to_json(s.torsion_gen);
  r["torsion_order"] = s.torsion_order;
  r["ideal"] = ideal_json(*cfg.ideal);
  r["stripped_ideal"] = ideal_json(d.ideal());
  r["ideal_s_norm"] = rat(s_norm(s, *cfg.ideal));
  return r;
}

Json cmd_snorm(const RunConfig& cfg) {
  const auto& d = domain(cfg);
  const FieldElement& x = need_xi(cfg);
  if (x.is_zero()) invalid("xi", "must be nonzero");
  Json r;
  r["s_norm"] = rat(s_norm(d.s(), x));
  r["norm"] = rat(d.field().norm(x));
  Json vals = Json::object();
  for (const auto& v : d.s().places)
    if (v.is_finite()) vals[v.label()] = valuation(d.field(), x, v);
  r["valuations"] = vals;
  return r;
}

Json cmd_m(const RunConfig& cfg) {
  const auto& d = domain(cfg);
  const FieldElement& x = need_xi(cfg);
  Json r = minimum_json(m_exact(d, x));
  r["xi"] = element_to_json(x);
  r["reduced"] = element_to_json(d.reduce(x).first);
  return r;
}

Json cmd_search(const RunConfig& cfg) {
  const auto& d = domain(cfg);
  auto sr = search_lower(d, cfg.params.denom_bound);
  Json r;
  r["xi"] = element_to_json(sr.xi);
  r["m"] = minimum_json(sr.m);
  r["orbits"] = sr.orbits;
  r["points"] = sr.points;
  r["denominator"] = sr.denominator.get_str();
  r["denom_bound"] = cfg.params.denom_bound.get_str();
  return r;
}

Outcome cmd_cover(const RunConfig& cfg) {
  const auto& d = domain(cfg);
  if (!cfg.params.t) invalid("params.t", "cover needs a threshold (--t)");
  auto res = covering_verify(d, *cfg.params.t, cfg.params.budget, cfg.params.workers);
  Outcome o;
  Json& r = o.doc["result"];
  r["complete"] = res.complete;
  r["t"] = rat(*cfg.params.t);
  r["stats"] = stats_json(res.stats);
  if (res.complete) {
    r["certificate"] = certificate_to_json(d, res.certificate);
  } else {
    r["unresolved_count"] = res.unresolved.size();
    Json worst = Json::array();
    for (std::size_t i = 0; i < res.unresolved.size() && i < 16; ++i) worst.push_back(box_json(res.unresolved[i], d));
    r["unresolved"] = worst;
    o.exit_code = kUndecided;
  }
  return o;
}

Outcome cmd_M(const RunConfig& cfg) {
  const auto& d = domain(cfg);
  auto rep = compute_M(d, cfg.params.gap, cfg.params.denom_bound, cfg.params.budget, cfg.params.workers);
  Outcome o;
  Json& r = o.doc["result"];
  r["lower"] = rat(rep.lower);
  r["witness"] = element_to_json(rep.witness);
  r["witness_m"] = minimum_json(rep.witness_value);
  r["upper"] = rep.upper ? Json(rat(*rep.upper)) : Json(nullptr);
  if (rep.certificate) r["certificate"] = certificate_to_json(d, *rep.certificate);
  r["exact"] = rep.exact;
  r["budget_exhausted"] = rep.budget_exhausted;
  r["denominators"] = rep.denominators.get_str();
  r["boxes"] = rep.boxes;
  r["tested"] = rational_list(rep.tested);
  r["gap"] = rat(cfg.params.gap);
  if (rep.budget_exhausted && !rep.upper) o.exit_code = kUndecided;
  return o;
}

Outcome cmd_decide(const RunConfig& cfg) {
  const auto& d = domain(cfg);
  auto v = decide_norm_euclidean(d, cfg.params.budget, cfg.params.workers);
  Outcome o;
  Json& r = o.doc["result"];
  r["verdict"] = to_string(v.verdict);
  r["covering"] = stats_json(v.covering);
  r["denominators"] = v.denominators.get_str();
  r["orbits"] = v.orbits;
  r["budget"] = v.budget;
  if (v.verdict == Verdict::Euclidean) r["certificate"] = certificate_to_json(d, *v.certificate);
  if (v.verdict == Verdict::NotEuclidean) {
    r["witness"] = element_to_json(v.witness);
    r["witness_m"] = minimum_json(v.witness_value);
  }
  if (v.verdict == Verdict::Undecided) o.exit_code = kUndecided;
  return o;
}

Json cmd_form(const RunConfig& cfg) {
  Json r;
  const auto& k = *cfg.field;
  std::optional<BinaryQuadraticForm> form = cfg.form;
  if (k.degree() == 2 && cfg.ideal->is_integral()) {
    auto b = cfg.ideal->basis();
    try {
      auto f = form_from_ideal(*cfg.ideal, {b[0], b[1]});
      r["ideal_form"] = {{"a", f.a.get_str()}, {"b", f.b.get_str()}, {"c", f.c.get_str()}};
      if (!form) form = f;
    } catch (const Error& e) {
      r["ideal_form_error"] = e.what();
    }
  }
  if (form) {
    const auto& f = *form;
    auto [disc, prim] = form_disc_primitive(f);
    r["form"] = {{"a", f.a.get_str()}, {"b", f.b.get_str()}, {"c", f.c.get_str()}};
    r["discriminant"] = disc.get_str();
    r["primitive"] = prim;
    if (cfg.point) {
      r["point"] = {rat((*cfg.point)[0]), rat((*cfg.point)[1])};
      r["m_form"] = rat(m_form(f, *cfg.point));
    }
  }
  if (!r.contains("form") && !r.contains("ideal_form")) invalid("form", "no form given and the ideal does not define one");
  return r;
}

Json cmd_orbit(const RunConfig& cfg) {
  const auto& d = domain(cfg);
  Json pts = Json::array();
  for (const auto& p : d.orbit(need_xi(cfg))) pts.push_back({{"point", element_to_json(p.point)}, {"unit", element_to_json(p.unit)}});
  Json r;
  r["size"] = pts.size();
  r["points"] = pts;
  return r;
}

Json cmd_dual(const RunConfig& cfg) {
  const auto& d = domain(cfg);
  FractionalIdeal dual = s_trace_dual(d.s(), *cfg.ideal);
  Json r;
  r["dual"] = ideal_json(dual);
  FractionalIdeal prod = strip_s_primes(d.s(), d.ideal() * dual);
  r["product_is_inverse_different"] = prod == strip_s_primes(d.s(), inverse_different(d.field()));
  return r;
}

Outcome cmd_verify(const RunConfig& cfg, const Json* cert) {
  if (!cert) invalid("cert", "verify-cert needs a certificate document (--cert)");
  const auto& d = domain(cfg);
  const Json& body = cert->contains("result") ? (*cert)["result"] : *cert;
  Outcome o;
  Json& r = o.doc["result"];
  bool ok = false;
  std::string reason;
  if (cert->contains("digest") && (*cert)["digest"] != digest(*cert)) {
    reason = "digest mismatch";
  } else if (body.contains("certificate") || body.contains("boxes")) {
    const Json& cj = body.contains("certificate") ? body["certificate"] : body;
    auto c = certificate_from_json(d, cj);
    auto rep = verify_certificate(d, c);
    ok = rep.ok;
    reason = rep.reason;
    r["kind"] = "covering";
    r["boxes"] = rep.boxes;
    r["t"] = rat(c.t);
  } else if (body.contains("witness") && body.contains("witness_m")) {
    FieldElement w = element_from_json(body["witness"], d.field().degree(), "witness");
    Rational claimed = rational_from_json(require(body["witness_m"], "value", "witness_m"), "witness_m.value");
    ok = verify_witness(d, w, claimed);
    reason = ok ? "ok" : "witness value does not replay or is below 1";
    r["kind"] = "witness";
  } else {
    reason = "document carries no certificate or witness";
  }
  r["ok"] = ok;
  r["reason"] = reason;
  if (!ok) o.exit_code = kReplayFailure;
  return o;
}

}  // namespace

Outcome run_command(const RunConfig& cfg, const std::string& command, const Json* cert) {
  Outcome o;
  if (command == "cover") {
    o = cmd_cover(cfg);
  } else if (command == "M") {
    o = cmd_M(cfg);
  } else if (command == "decide") {
    o = cmd_decide(cfg);
  } else if (command == "verify-cert") {
    o = cmd_verify(cfg, cert);
  } else if (command == "info") {
    o.doc["result"] = cmd_info(cfg);
  } else if (command == "snorm") {
    o.doc["result"] = cmd_snorm(cfg);
  } else if (command == "m") {
    o.doc["result"] = cmd_m(cfg);
  } else if (command == "search") {
    o.doc["result"] = cmd_search(cfg);
  } else if (command == "form") {
    o.doc["result"] = cmd_form(cfg);
  } else if (command == "orbit") {
    o.doc["result"] = cmd_orbit(cfg);
  } else if (command == "dual") {
    o.doc["result"] = cmd_dual(cfg);
  } else {
    throw Error(Errc::InvalidArgument, "unknown command " + command);
  }
  o.doc["command"] = command;
  o.doc["config"] = cfg.echo();
  return o;
}

}  // namespace seuclid::cli
