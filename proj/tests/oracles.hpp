#pragma once

// Reference computations used only by the tests. Nothing here calls the
// library's eigensolver or entropy routines.

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <functional>
#include <vector>

#include "tsallis/linalg.hpp"

namespace oracle {

using LComplex = std::complex<long double>;

/// Characteristic polynomial coefficients c[0..n] (c[n] = 1) of det(x I - A)
/// by the Faddeev-LeVerrier recursion in extended precision.
inline std::vector<LComplex> characteristic_polynomial(const tsallis::SquareMatrix& a) {
  const std::size_t n = a.dim();
  std::vector<LComplex> am(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) am[i * n + j] = LComplex(a(i, j).real(), a(i, j).imag());

  std::vector<LComplex> c(n + 1);
  c[n] = 1;
  std::vector<LComplex> m(n * n, 0);  // M_0 = 0
  for (std::size_t k = 1; k <= n; ++k) {
    // M_k = A M_{k-1} + c_{n-k+1} I
    std::vector<LComplex> next(n * n, 0);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t l = 0; l < n; ++l)
        for (std::size_t j = 0; j < n; ++j) next[i * n + j] += am[i * n + l] * m[l * n + j];
    for (std::size_t i = 0; i < n; ++i) next[i * n + i] += c[n - k + 1];
    m = std::move(next);
    LComplex trace = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t l = 0; l < n; ++l) trace += am[i * n + l] * m[l * n + i];
    c[n - k] = -trace / static_cast<long double>(k);
  }
  return c;
}

/// Roots of the monic polynomial sum c[k] x^k. Coefficients below snap are
/// treated as exact zeros so repeated roots at the origin are deflated rather
/// than smeared; the rest are found with Durand-Kerner iteration.
inline std::vector<double> real_polynomial_roots(std::vector<LComplex> c, long double snap = 1e-15L) {
  for (LComplex& z : c)
    if (std::abs(z) < snap) z = 0;
  std::vector<double> roots;
  while (c.size() > 1 && c.front() == LComplex(0)) {
    roots.push_back(0.0);
    c.erase(c.begin());
  }
  const std::size_t degree = c.size() - 1;
  if (degree > 0) {
    std::vector<LComplex> z(degree);
    const LComplex seed(0.4L, 0.9L);
    LComplex power = 1;
    for (std::size_t i = 0; i < degree; ++i) {
      z[i] = power;
      power *= seed;
    }
    auto eval = [&c](LComplex x) {
      LComplex v = 0;
      for (std::size_t k = c.size(); k-- > 0;) v = v * x + c[k];
      return v;
    };
    for (int iteration = 0; iteration < 2000; ++iteration) {
      long double shift = 0;
      for (std::size_t i = 0; i < degree; ++i) {
        LComplex denom = 1;
        for (std::size_t j = 0; j < degree; ++j)
          if (j != i) denom *= z[i] - z[j];
        const LComplex step = eval(z[i]) / denom;
        z[i] -= step;
        shift = std::max(shift, std::abs(step));
      }
      if (shift < 1e-18L) break;
    }
    for (const LComplex& r : z) roots.push_back(static_cast<double>(r.real()));
  }
  std::sort(roots.begin(), roots.end(), std::greater<>());
  return roots;
}

/// Tsallis entropy evaluated straight from its definition on a probability list.
inline double tsallis_direct(const std::vector<double>& probs, double q) {
  if (q == 1.0) {
    double s = 0.0;
    for (double p : probs)
      if (p > 0.0) s -= p * std::log(p);
    return s;
  }
  double sum = 0.0;
  for (double p : probs)
    if (p > 0.0) sum += std::pow(p, q);
  return (1.0 - sum) / (q - 1.0);
}

/// Eigenvalues of the family's 2x2 block [[p, c], [c, 1-p]] found by bisection on
/// its characteristic polynomial, independent of the closed-form eta+-.
inline std::vector<double> family_block_eigenvalues(double p, double gamma) {
  const double c = std::sqrt(gamma) * std::sqrt(p * (1.0 - p));
  auto charpoly = [&](long double x) {
    return (static_cast<long double>(p) - x) * (static_cast<long double>(1.0 - p) - x) -
           static_cast<long double>(c) * c;
  };
  // Roots straddle the midpoint 1/2 (the polynomial is <= 0 there).
  auto bisect = [&](long double lo, long double hi) {
    long double flo = charpoly(lo);
    for (int i = 0; i < 200; ++i) {
      const long double mid = 0.5L * (lo + hi);
      const long double fmid = charpoly(mid);
      if ((fmid <= 0) == (flo <= 0)) {
        lo = mid;
        flo = fmid;
      } else {
        hi = mid;
      }
    }
    return static_cast<double>(0.5L * (lo + hi));
  };
  return {bisect(1.5L, 0.5L), bisect(-0.5L, 0.5L)};
}

}  // namespace oracle
