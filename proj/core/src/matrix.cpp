// Copyright 2026 The seuclid Authors
// SPDX-License-Identifier: Apache-2.0

#include "seuclid/matrix.hpp"

#include <utility>

namespace seuclid {

RatMatrix to_rational(const IntMatrix& m) {
  RatMatrix r(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) r(i, j) = Rational(m(i, j));
  return r;
}

Rational determinant(RatMatrix m) {
  assert(m.rows() == m.cols());
  const std::size_t n = m.rows();
  Rational det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    while (piv < n && m(piv, c) == 0) ++piv;
    if (piv == n) return 0;
    if (piv != c) {
      for (std::size_t j = 0; j < n; ++j) std::swap(m(piv, j), m(c, j));
      det = -det;
    }
    det *= m(c, c);
    for (std::size_t r = c + 1; r < n; ++r) {
      if (m(r, c) == 0) continue;
      Rational f = m(r, c) / m(c, c);
      for (std::size_t j = c; j < n; ++j) m(r, j) -= f * m(c, j);
    }
  }
  return det;
}

Integer determinant(const IntMatrix& m) {
  Rational d = determinant(to_rational(m));
  return d.get_num();
}

std::size_t rank(RatMatrix m) {
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t piv = r;
    while (piv < m.rows() && m(piv, c) == 0) ++piv;
    if (piv == m.rows()) continue;
    for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(piv, j), m(r, j));
    for (std::size_t i = r + 1; i < m.rows(); ++i) {
      if (m(i, c) == 0) continue;
      Rational f = m(i, c) / m(r, c);
      for (std::size_t j = c; j < m.cols(); ++j) m(i, j) -= f * m(r, j);
    }
    ++r;
  }
  return r;
}

std::optional<RatMatrix> inverse(const RatMatrix& m) {
  assert(m.rows() == m.cols());
  const std::size_t n = m.rows();
  RatMatrix a = m;
  RatMatrix inv = RatMatrix::identity(n);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    while (piv < n && a(piv, c) == 0) ++piv;
    if (piv == n) return std::nullopt;
    if (piv != c)
      for (std::size_t j = 0; j < n; ++j) {
        std::swap(a(piv, j), a(c, j));
        std::swap(inv(piv, j), inv(c, j));
      }
    Rational p = a(c, c);
    for (std::size_t j = 0; j < n; ++j) {
      a(c, j) /= p;
      inv(c, j) /= p;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == c || a(r, c) == 0) continue;
      Rational f = a(r, c);
      for (std::size_t j = 0; j < n; ++j) {
        a(r, j) -= f * a(c, j);
        inv(r, j) -= f * inv(c, j);
      }
    }
  }
  return inv;
}

std::optional<std::vector<Rational>> solve(const RatMatrix& m, const std::vector<Rational>& rhs) {
  auto inv = inverse(m);
  if (!inv) return std::nullopt;
  return (*inv) * rhs;
}

namespace {

void column_combine(IntMatrix& m, std::size_t p, std::size_t c, const Integer& s, const Integer& t,
                    const Integer& u, const Integer& v) {
  // (col_p, col_c) <- (s*col_p + t*col_c, u*col_p + v*col_c)
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Integer x = m(r, p), y = m(r, c);
    m(r, p) = s * x + t * y;
    m(r, c) = u * x + v * y;
  }
}

}  // namespace

IntMatrix column_hnf_augmented(IntMatrix m, std::size_t key_rows) {
  const std::size_t cols = m.cols();
  if (cols < key_rows) throw Error(Errc::InvalidArgument, "hnf: fewer columns than rows");
  for (std::size_t ii = key_rows; ii-- > 0;) {
    const std::size_t p = cols - key_rows + ii;
    for (std::size_t c = 0; c < p; ++c) {
      if (m(ii, c) == 0) continue;
      Integer a = m(ii, p), b = m(ii, c);
      Integer g, s, t;
      mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
      Integer bg = b / g, ag = a / g;
      column_combine(m, p, c, s, t, Integer(-bg), ag);
    }
    if (m(ii, p) == 0) throw Error(Errc::InvalidArgument, "hnf: lattice not of full rank");
    if (m(ii, p) < 0)
      for (std::size_t r = 0; r < m.rows(); ++r) m(r, p) = -m(r, p);
    const Integer& piv = m(ii, p);
    for (std::size_t q = p + 1; q < cols; ++q) {
      Integer f;
      mpz_fdiv_q(f.get_mpz_t(), m(ii, q).get_mpz_t(), piv.get_mpz_t());
      if (f == 0) continue;
      for (std::size_t r = 0; r < m.rows(); ++r) m(r, q) -= f * m(r, p);
    }
  }
  return m;
}

IntMatrix hnf_basis(const IntMatrix& m) {
  const std::size_t n = m.rows();
  IntMatrix h = column_hnf_augmented(m, n);
  IntMatrix out(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) out(i, j) = h(i, h.cols() - n + j);
  return out;
}

}  // namespace seuclid
