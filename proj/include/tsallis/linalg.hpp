#pragma once

// Dense complex matrices for small bipartite systems: Kronecker products,
// partial traces over a qubit pair, and a cyclic Jacobi Hermitian eigensolver.

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <random>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "tsallis/errors.hpp"

namespace tsallis {

using Complex = std::complex<double>;

inline constexpr double kHermitianTolerance = 1e-12;
inline constexpr double kTraceTolerance = 1e-12;
// Eigenvalues in [-kNegativeEigenvalueTolerance, 0) are roundoff; below that the
// operator is rejected.
inline constexpr double kNegativeEigenvalueTolerance = 1e-10;
// Eigenvalues at or below this are indistinguishable from an exact zero after
// a Jacobi solve. Shared with the q = 0 support count.
inline constexpr double kZeroEigenvalueFloor = 1e-12;
inline constexpr double kJacobiOffDiagonalTolerance = 1e-13;
inline constexpr int kJacobiMaxSweeps = 100;

/// Row-major dense complex square matrix.
class SquareMatrix {
 public:
  explicit SquareMatrix(std::size_t dim) : dim_(dim), entries_(dim * dim) {
    if (dim == 0) throw DimensionError("SquareMatrix: dimension must be positive");
  }

  SquareMatrix(std::size_t dim, std::vector<Complex> entries) : dim_(dim), entries_(std::move(entries)) {
    if (dim == 0) throw DimensionError("SquareMatrix: dimension must be positive");
    if (entries_.size() != dim * dim) {
      throw DimensionError("SquareMatrix: expected " + std::to_string(dim * dim) + " entries, got " +
                           std::to_string(entries_.size()));
    }
    for (const Complex& z : entries_) {
      if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
        throw InvariantError("SquareMatrix: non-finite entry");
      }
    }
  }

  static SquareMatrix identity(std::size_t dim) {
    SquareMatrix m(dim);
    for (std::size_t i = 0; i < dim; ++i) m(i, i) = 1.0;
    return m;
  }

  static SquareMatrix diagonal(std::span<const double> values) {
    SquareMatrix m(values.size());
    for (std::size_t i = 0; i < values.size(); ++i) m(i, i) = values[i];
    return m;
  }

  static SquareMatrix diagonal(std::initializer_list<double> values) {
    return diagonal(std::span<const double>(values.begin(), values.size()));
  }

  std::size_t dim() const noexcept { return dim_; }

  Complex& operator()(std::size_t row, std::size_t col) noexcept { return entries_[row * dim_ + col]; }
  const Complex& operator()(std::size_t row, std::size_t col) const noexcept { return entries_[row * dim_ + col]; }

  std::span<const Complex> entries() const noexcept { return entries_; }

  Complex trace() const noexcept {
    Complex sum = 0.0;
    for (std::size_t i = 0; i < dim_; ++i) sum += (*this)(i, i);
    return sum;
  }

  SquareMatrix adjoint() const {
    SquareMatrix out(dim_);
    for (std::size_t i = 0; i < dim_; ++i)
      for (std::size_t j = 0; j < dim_; ++j) out(i, j) = std::conj((*this)(j, i));
    return out;
  }

  friend SquareMatrix operator*(const SquareMatrix& a, const SquareMatrix& b) {
    if (a.dim_ != b.dim_) throw DimensionError("SquareMatrix product: dimension mismatch");
    SquareMatrix out(a.dim_);
    for (std::size_t i = 0; i < a.dim_; ++i)
      for (std::size_t k = 0; k < a.dim_; ++k) {
        const Complex aik = a(i, k);
        for (std::size_t j = 0; j < a.dim_; ++j) out(i, j) += aik * b(k, j);
      }
    return out;
  }

  friend bool operator==(const SquareMatrix&, const SquareMatrix&) = default;

 private:
  std::size_t dim_;
  std::vector<Complex> entries_;
};

/// Largest entrywise |a - b|; dimensions must agree.
inline double max_abs_difference(const SquareMatrix& a, const SquareMatrix& b) {
  if (a.dim() != b.dim()) throw DimensionError("max_abs_difference: dimension mismatch");
  double worst = 0.0;
  for (std::size_t k = 0; k < a.entries().size(); ++k) worst = std::max(worst, std::abs(a.entries()[k] - b.entries()[k]));
  return worst;
}

/// max |M[i][j] - conj(M[j][i])|
inline double hermitian_deviation(const SquareMatrix& m) {
  double worst = 0.0;
  for (std::size_t i = 0; i < m.dim(); ++i)
    for (std::size_t j = i; j < m.dim(); ++j) worst = std::max(worst, std::abs(m(i, j) - std::conj(m(j, i))));
  return worst;
}

/// Real eigenvalues held in descending order.
class Spectrum {
 public:
  Spectrum() = default;

  explicit Spectrum(std::vector<double> values) : values_(std::move(values)) {
    for (double v : values_) {
      if (!std::isfinite(v)) throw InvalidSpectrumError("Spectrum: non-finite eigenvalue");
    }
    std::sort(values_.begin(), values_.end(), std::greater<>());
  }

  Spectrum(std::initializer_list<double> values) : Spectrum(std::vector<double>(values)) {}

  std::span<const double> eigenvalues() const noexcept { return values_; }
  std::size_t dim() const noexcept { return values_.size(); }
  double operator[](std::size_t i) const noexcept { return values_[i]; }

  double sum() const noexcept {
    double total = 0.0;
    for (double v : values_) total += v;
    return total;
  }

  /// Snaps roundoff-level eigenvalues to exact zero. Anything below
  /// -kNegativeEigenvalueTolerance is a genuinely invalid state.
  Spectrum clamped() const {
    std::vector<double> out = values_;
    for (double& v : out) {
      if (v < -kNegativeEigenvalueTolerance) {
        throw InvariantError("Spectrum: eigenvalue " + std::to_string(v) + " below -1e-10");
      }
      if (v <= kZeroEigenvalueFloor) v = 0.0;
    }
    return Spectrum(std::move(out));
  }

  friend bool operator==(const Spectrum&, const Spectrum&) = default;

 private:
  std::vector<double> values_;
};

/// Eigenvalues of a 2x2 Hermitian matrix from the quadratic formula.
inline Spectrum closed_form_eigenvalues_2x2(const SquareMatrix& m) {
  if (m.dim() != 2) throw DimensionError("closed_form_eigenvalues_2x2: matrix must be 2x2");
  const double a = m(0, 0).real();
  const double d = m(1, 1).real();
  const double mean = 0.5 * (a + d);
  const double radius = std::hypot(0.5 * (a - d), std::abs(m(0, 1)));
  return Spectrum({mean + radius, mean - radius});
}

/// Cyclic Jacobi eigenvalues of a Hermitian matrix. Each rotation is a complex
/// Givens rotation J with A <- J^H A J that zeroes A(p,q); sweeps continue until
/// the largest off-diagonal magnitude is at most kJacobiOffDiagonalTolerance.
inline Spectrum jacobi_eigenvalues(const SquareMatrix& m) {
  const std::size_t n = m.dim();
  SquareMatrix a = m;
  for (std::size_t i = 0; i < n; ++i) a(i, i) = a(i, i).real();

  auto max_off_diagonal = [&a, n] {
    double worst = 0.0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) worst = std::max(worst, std::abs(a(i, j)));
    return worst;
  };

  bool converged = false;
  for (int sweep = 0; sweep <= kJacobiMaxSweeps; ++sweep) {
    if (max_off_diagonal() <= kJacobiOffDiagonalTolerance) {
      converged = true;
      break;
    }
    if (sweep == kJacobiMaxSweeps) break;
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const Complex apq = a(p, q);
        const double magnitude = std::abs(apq);
        if (magnitude == 0.0) continue;
        const Complex phase = apq / magnitude;

        const double theta = (a(q, q).real() - a(p, p).real()) / (2.0 * magnitude);
        const double t = (theta >= 0.0 ? 1.0 : -1.0) / (std::abs(theta) + std::hypot(theta, 1.0));
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double s = t * c;

        // J = diag(1, e^{-i phi}) * [[c, s], [-s, c]] restricted to (p, q).
        const Complex jpp = c;
        const Complex jpq = s;
        const Complex jqp = -s * std::conj(phase);
        const Complex jqq = c * std::conj(phase);

        for (std::size_t k = 0; k < n; ++k) {
          const Complex akp = a(k, p);
          const Complex akq = a(k, q);
          a(k, p) = akp * jpp + akq * jqp;
          a(k, q) = akp * jpq + akq * jqq;
        }
        for (std::size_t k = 0; k < n; ++k) {
          const Complex apk = a(p, k);
          const Complex aqk = a(q, k);
          a(p, k) = std::conj(jpp) * apk + std::conj(jqp) * aqk;
          a(q, k) = std::conj(jpq) * apk + std::conj(jqq) * aqk;
        }
        a(p, q) = 0.0;
        a(q, p) = 0.0;
        a(p, p) = a(p, p).real();
        a(q, q) = a(q, q).real();
      }
    }
  }
  if (!converged) throw NumericError("jacobi_eigenvalues: no convergence within 100 sweeps");

  std::vector<double> values(n);
  for (std::size_t i = 0; i < n; ++i) values[i] = a(i, i).real();
  return Spectrum(std::move(values));
}

/// Eigenvalues of a Hermitian matrix, descending. 2x2 inputs take the
/// closed-form path; larger ones go through Jacobi.
inline Spectrum hermitian_eigenvalues(const SquareMatrix& m) {
  const double deviation = hermitian_deviation(m);
  if (deviation > kHermitianTolerance) {
    throw InvariantError("hermitian_eigenvalues: matrix is not Hermitian (deviation " + std::to_string(deviation) +
                         ")");
  }
  if (m.dim() == 1) return Spectrum({m(0, 0).real()});
  if (m.dim() == 2) return closed_form_eigenvalues_2x2(m);
  return jacobi_eigenvalues(m);
}

/// Hermitian, unit-trace, positive-semidefinite matrix. The clamped spectrum
/// is computed once at construction.
class DensityOperator {
 public:
  explicit DensityOperator(SquareMatrix matrix) : matrix_(std::move(matrix)) {
    const Complex tr = matrix_.trace();
    if (std::abs(tr - 1.0) > kTraceTolerance) {
      throw InvariantError("DensityOperator: trace " + std::to_string(tr.real()) + " is not 1");
    }
    // hermitian_eigenvalues rejects non-Hermitian input, clamped() rejects
    // eigenvalues below -1e-10.
    spectrum_ = hermitian_eigenvalues(matrix_).clamped();
  }

  const SquareMatrix& matrix() const noexcept { return matrix_; }
  std::size_t dim() const noexcept { return matrix_.dim(); }
  const Spectrum& spectrum() const noexcept { return spectrum_; }

 private:
  SquareMatrix matrix_;
  Spectrum spectrum_;
};

/// Kronecker product: (a (x) b)(i*db + k, j*db + l) = a(i,j) b(k,l).
inline SquareMatrix tensor_product(const SquareMatrix& a, const SquareMatrix& b) {
  const std::size_t da = a.dim();
  const std::size_t db = b.dim();
  SquareMatrix out(da * db);
  for (std::size_t i = 0; i < da; ++i)
    for (std::size_t j = 0; j < da; ++j) {
      const Complex aij = a(i, j);
      for (std::size_t k = 0; k < db; ++k)
        for (std::size_t l = 0; l < db; ++l) out(i * db + k, j * db + l) = aij * b(k, l);
    }
  return out;
}

inline DensityOperator tensor_product(const DensityOperator& a, const DensityOperator& b) {
  return DensityOperator(tensor_product(a.matrix(), b.matrix()));
}

/// |v><v|
inline SquareMatrix outer_product(std::span<const Complex> v) {
  SquareMatrix out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i)
    for (std::size_t j = 0; j < v.size(); ++j) out(i, j) = v[i] * std::conj(v[j]);
  return out;
}

enum class Subsystem { A, B };

/// Reduced state of a qubit pair. Basis index is 2*i_A + i_B, so A is the
/// leading tensor factor.
inline DensityOperator partial_trace(const DensityOperator& rho_ab, Subsystem keep) {
  if (rho_ab.dim() != 4) {
    throw DimensionError("partial_trace: expected a 4x4 two-qubit operator, got dimension " +
                         std::to_string(rho_ab.dim()));
  }
  const SquareMatrix& m = rho_ab.matrix();
  SquareMatrix reduced(2);
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j)
      for (std::size_t traced = 0; traced < 2; ++traced) {
        reduced(i, j) += keep == Subsystem::A ? m(2 * i + traced, 2 * j + traced) : m(2 * traced + i, 2 * traced + j);
      }
  return DensityOperator(std::move(reduced));
}

/// G G^H / Tr(G G^H) with G a dim x rank matrix of seeded standard-normal
/// complex entries.
inline DensityOperator random_density_operator(std::size_t dim, std::size_t rank, std::uint64_t seed) {
  if (dim == 0) throw ParameterError("random_density_operator: dim must be positive");
  if (rank < 1 || rank > dim) {
    throw ParameterError("random_density_operator: rank " + std::to_string(rank) + " outside [1, " +
                         std::to_string(dim) + "]");
  }
  std::mt19937_64 engine(seed);
  std::normal_distribution<double> normal(0.0, 1.0);
  std::vector<Complex> g(dim * rank);
  for (Complex& z : g) {
    const double re = normal(engine);
    const double im = normal(engine);
    z = Complex(re, im);
  }
  SquareMatrix m(dim);
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = 0; j < dim; ++j) {
      Complex sum = 0.0;
      for (std::size_t k = 0; k < rank; ++k) sum += g[i * rank + k] * std::conj(g[j * rank + k]);
      m(i, j) = sum;
    }
  double trace = 0.0;
  for (std::size_t i = 0; i < dim; ++i) trace += m(i, i).real();
  for (std::size_t i = 0; i < dim; ++i) {
    for (std::size_t j = 0; j < dim; ++j) m(i, j) /= trace;
    m(i, i) = m(i, i).real();
  }
  return DensityOperator(std::move(m));
}

}  // namespace tsallis
