// Copyright 2026 The seuclid Authors
// SPDX-License-Identifier: Apache-2.0

#include "seuclid/numeric.hpp"

#include <cmath>

namespace seuclid {

std::string_view errc_name(Errc code) {
  switch (code) {
    case Errc::NonMonic: return "NonMonic";
    case Errc::ReduciblePolynomial: return "ReduciblePolynomial";
    case Errc::UnsupportedDegree: return "UnsupportedDegree";
    case Errc::PrecisionUnreachable: return "PrecisionUnreachable";
    case Errc::ZeroIdeal: return "ZeroIdeal";
    case Errc::ZeroElement: return "ZeroElement";
    case Errc::NotPrime: return "NotPrime";
    case Errc::IndexDivisor: return "IndexDivisor";
    case Errc::NotAnSUnit: return "NotAnSUnit";
    case Errc::RankDeficient: return "RankDeficient";
    case Errc::RankUndetermined: return "RankUndetermined";
    case Errc::UnitsRequired: return "UnitsRequired";
    case Errc::SearchExhausted: return "SearchExhausted";
    case Errc::UnverifiedUnits: return "UnverifiedUnits";
    case Errc::NoCandidates: return "NoCandidates";
    case Errc::NotQuadratic: return "NotQuadratic";
    case Errc::NotABasis: return "NotABasis";
    case Errc::NonFundamental: return "NonFundamental";
    case Errc::DegenerateForm: return "DegenerateForm";
    case Errc::NonFundamentalIndefinite: return "NonFundamentalIndefinite";
    case Errc::InvalidArgument: return "InvalidArgument";
    case Errc::ParseError: return "ParseError";
    case Errc::ValidationError: return "ValidationError";
    case Errc::IoError: return "IoError";
  }
  return "Unknown";
}

Integer floor_q(const Rational& x) {
  Integer r;
  mpz_fdiv_q(r.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
  return r;
}

Integer ceil_q(const Rational& x) {
  Integer r;
  mpz_cdiv_q(r.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
  return r;
}

Rational abs_q(const Rational& x) { return x < 0 ? Rational(-x) : x; }

Rational frac_q(const Rational& x) { return x - Rational(floor_q(x)); }

Integer gcd(const Integer& a, const Integer& b) {
  Integer g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

Integer lcm(const Integer& a, const Integer& b) {
  Integer l;
  mpz_lcm(l.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return l;
}

Integer pow_z(const Integer& base, unsigned long exp) {
  Integer r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exp);
  return r;
}

Rational pow_q(const Rational& base, long exp) {
  if (exp == 0) return Rational(1);
  unsigned long e = static_cast<unsigned long>(exp < 0 ? -exp : exp);
  Integer num = pow_z(base.get_num(), e);
  Integer den = pow_z(base.get_den(), e);
  if (exp < 0) {
    if (num == 0) throw Error(Errc::ZeroElement, "negative power of zero");
    return make_rational(den, num);
  }
  return make_rational(num, den);
}

long valuation_p(Integer n, const Integer& p) {
  if (n == 0) throw Error(Errc::ZeroElement, "valuation of zero");
  long v = 0;
  while (mpz_divisible_p(n.get_mpz_t(), p.get_mpz_t())) {
    n /= p;
    ++v;
  }
  return v;
}

long valuation_p(const Rational& x, const Integer& p) {
  return valuation_p(x.get_num(), p) - valuation_p(x.get_den(), p);
}

bool is_probable_prime(const Integer& n) {
  if (n < 2) return false;
  return mpz_probab_prime_p(n.get_mpz_t(), 30) > 0;
}

Integer isqrt(const Integer& n) {
  Integer r;
  mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
  return r;
}

bool is_perfect_square(const Integer& n, Integer* root) {
  if (n < 0) return false;
  if (mpz_perfect_square_p(n.get_mpz_t()) == 0) return false;
  if (root) *root = isqrt(n);
  return true;
}

std::vector<std::pair<Integer, unsigned>> factor_integer(Integer n) {
  std::vector<std::pair<Integer, unsigned>> out;
  if (n < 0) n = -n;
  if (n == 0) throw Error(Errc::InvalidArgument, "factor_integer(0)");
  for (Integer p = 2; p * p <= n; p += (p == 2 ? 1 : 2)) {
    unsigned e = 0;
    while (mpz_divisible_p(n.get_mpz_t(), p.get_mpz_t())) {
      n /= p;
      ++e;
    }
    if (e) out.emplace_back(p, e);
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

std::string to_string(const Rational& x) {
  return x.get_num().get_str() + "/" + x.get_den().get_str();
}

Rational parse_rational(std::string_view text) {
  std::string s(text);
  if (s.empty()) throw Error(Errc::ParseError, "empty rational");
  auto valid_int = [](const std::string& t) {
    if (t.empty()) return false;
    std::size_t i = (t[0] == '-' || t[0] == '+') ? 1 : 0;
    if (i == t.size()) return false;
    for (; i < t.size(); ++i)
      if (t[i] < '0' || t[i] > '9') return false;
    return true;
  };
  auto strip_plus = [](std::string t) {
    if (!t.empty() && t[0] == '+') t.erase(0, 1);
    return t;
  };
  auto slash = s.find('/');
  if (slash == std::string::npos) {
    if (!valid_int(s)) throw Error(Errc::ParseError, "bad rational '" + s + "'");
    return Rational(Integer(strip_plus(s)));
  }
  std::string a = s.substr(0, slash), b = s.substr(slash + 1);
  if (!valid_int(a) || !valid_int(b) || b[0] == '-' || b[0] == '+')
    throw Error(Errc::ParseError, "bad rational '" + s + "'");
  Integer den(b);
  if (den == 0) throw Error(Errc::ParseError, "zero denominator in '" + s + "'");
  return make_rational(Integer(strip_plus(a)), den);
}

double to_double(const Rational& x) { return x.get_d(); }

Rational from_double(double x) {
  Rational r;
  mpq_set_d(r.get_mpq_t(), x);
  return r;
}

Rational round_down_dyadic(const Rational& x, unsigned bits) {
  Integer scale = pow_z(2, bits);
  return make_rational(floor_q(x * Rational(scale)), scale);
}

Rational round_up_dyadic(const Rational& x, unsigned bits) {
  Integer scale = pow_z(2, bits);
  return make_rational(ceil_q(x * Rational(scale)), scale);
}

}  // namespace seuclid
