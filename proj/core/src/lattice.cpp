// Copyright 2026 The seuclid Authors
// SPDX-License-Identifier: Apache-2.0

#include "seuclid/lattice.hpp"

#include <cmath>
#include <stdexcept>

namespace seuclid::lattice {

namespace {

long double dot(const Vec& a, const Vec& b) {
  long double s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

// Solves B c = t by Gaussian elimination with partial pivoting.
Vec solve(const Basis& cols, const Vec& t) {
  const std::size_t n = cols.size();
  std::vector<Vec> a(n, Vec(n + 1));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) a[i][j] = cols[j][i];
    a[i][n] = t[i];
  }
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    for (std::size_t r = c + 1; r < n; ++r)
      if (std::fabs(a[r][c]) > std::fabs(a[piv][c])) piv = r;
    std::swap(a[piv], a[c]);
    if (a[c][c] == 0) throw std::runtime_error("singular lattice basis");
    for (std::size_t r = 0; r < n; ++r) {
      if (r == c) continue;
      long double f = a[r][c] / a[c][c];
      for (std::size_t j = c; j <= n; ++j) a[r][j] -= f * a[c][j];
    }
  }
  Vec x(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = a[i][n] / a[i][i];
  return x;
}

}  // namespace

std::vector<IntVec> lll(Basis& b) {
  const std::size_t n = b.size();
  std::vector<IntVec> u(n, IntVec(n, 0));
  for (std::size_t i = 0; i < n; ++i) u[i][i] = 1;
  if (n <= 1) return u;
  const long double delta = 0.99L;
  std::vector<Vec> bstar(n);
  std::vector<Vec> mu(n, Vec(n, 0));
  Vec norms(n);
  auto gso = [&] {
    for (std::size_t i = 0; i < n; ++i) {
      bstar[i] = b[i];
      for (std::size_t j = 0; j < i; ++j) {
        mu[i][j] = dot(b[i], bstar[j]) / norms[j];
        for (std::size_t k = 0; k < bstar[i].size(); ++k) bstar[i][k] -= mu[i][j] * bstar[j][k];
      }
      norms[i] = dot(bstar[i], bstar[i]);
    }
  };
  gso();
  std::size_t k = 1;
  int guard = 0;
  while (k < n && ++guard < 100000) {
    for (std::size_t j = k; j-- > 0;) {
      long double q = std::nearbyint(mu[k][j]);
      if (q == 0) continue;
      for (std::size_t t = 0; t < b[k].size(); ++t) b[k][t] -= q * b[j][t];
      for (std::size_t t = 0; t < n; ++t) u[k][t] -= static_cast<long>(q) * u[j][t];
      gso();
    }
    if (norms[k] >= (delta - mu[k][k - 1] * mu[k][k - 1]) * norms[k - 1]) {
      ++k;
    } else {
      std::swap(b[k], b[k - 1]);
      std::swap(u[k], u[k - 1]);
      gso();
      k = std::max<std::size_t>(k - 1, 1);
    }
  }
  return u;
}

void enumerate(const Basis& basis_in, const Vec& target, long double radius2,
               const std::function<bool(const IntVec&)>& visit) {
  const std::size_t n = basis_in.size();
  if (n == 0) {
    visit({});
    return;
  }
  Basis b = basis_in;
  auto u = lll(b);
  Vec c = solve(b, target);

  // Cholesky of the Gram matrix: q[i][i] = r_ii^2, q[i][j] = r_ij / r_ii.
  std::vector<Vec> g(n, Vec(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) g[i][j] = dot(b[i], b[j]);
  std::vector<Vec> q(n, Vec(n, 0));
  for (std::size_t i = 0; i < n; ++i) {
    long double s = g[i][i];
    for (std::size_t k = 0; k < i; ++k) s -= q[k][i] * q[k][i] * q[k][k];
    q[i][i] = s;
    for (std::size_t j = i + 1; j < n; ++j) {
      long double t = g[i][j];
      for (std::size_t k = 0; k < i; ++k) t -= q[k][i] * q[k][j] * q[k][k];
      q[i][j] = t / s;
    }
  }
  const long double bound = radius2 * (1 + 1e-9L) + 1e-12L;

  IntVec y(n), x(n);
  bool stop = false;
  std::function<void(std::size_t, long double)> rec = [&](std::size_t level, long double rest) {
    const std::size_t i = level;
    long double centre = c[i];
    for (std::size_t j = i + 1; j < n; ++j) centre -= q[i][j] * (static_cast<long double>(y[j]) - c[j]);
    long double span = std::sqrt(std::max<long double>(rest, 0) / q[i][i]);
    long lo = static_cast<long>(std::ceil(centre - span - 1e-12L));
    long hi = static_cast<long>(std::floor(centre + span + 1e-12L));
    for (long v = lo; v <= hi && !stop; ++v) {
      y[i] = v;
      long double d = static_cast<long double>(v) - centre;
      long double used = q[i][i] * d * d;
      if (used > rest) continue;
      if (i == 0) {
        for (std::size_t r = 0; r < n; ++r) {
          long s = 0;
          for (std::size_t t = 0; t < n; ++t) s += u[t][r] * y[t];
          x[r] = s;
        }
        if (!visit(x)) stop = true;
      } else {
        rec(i - 1, rest - used);
      }
    }
  };
  rec(n - 1, bound);
}

}  // namespace seuclid::lattice
