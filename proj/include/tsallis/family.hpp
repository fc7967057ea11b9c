#pragma once

// Two-qubit family with population weight p and coherence gamma:
//
//   rho_AB = p |0_A 1_B><0_A 1_B| + (1-p) |1_A 0_B><1_A 0_B|
//          + sqrt(gamma) sqrt(p(1-p)) (|0_A 1_B><1_A 0_B| + h.c.)
//
// gamma = 1 is the pure state sqrt(p)|0_A 1_B> + sqrt(1-p)|1_A 0_B>,
// gamma = 0 the classical mixture.

#include <algorithm>
#include <array>
#include <cmath>
#include <string>
#include <utility>

#include "tsallis/errors.hpp"
#include "tsallis/linalg.hpp"

namespace tsallis {

namespace detail {

inline void require_unit_interval(double value, const char* name) {
  if (!(value >= 0.0 && value <= 1.0)) {
    throw ParameterError(std::string(name) + " must lie in [0, 1], got " + std::to_string(value));
  }
}

}  // namespace detail

class QubitPairParams {
 public:
  QubitPairParams(double p, double gamma) : p_(p), gamma_(gamma) {
    detail::require_unit_interval(p, "p");
    detail::require_unit_interval(gamma, "gamma");
  }

  double p() const noexcept { return p_; }
  double gamma() const noexcept { return gamma_; }

 private:
  double p_;
  double gamma_;
};

// Basis positions of |0_A 1_B> and |1_A 0_B> under index = 2*i_A + i_B.
inline constexpr std::size_t kIndex01 = 1;
inline constexpr std::size_t kIndex10 = 2;

struct PureStateVector {
  std::array<Complex, 4> amplitudes{};

  double norm() const {
    double sum = 0.0;
    for (const Complex& a : amplitudes) sum += std::norm(a);
    return std::sqrt(sum);
  }
};

inline PureStateVector build_pure_state(double p) {
  detail::require_unit_interval(p, "p");
  PureStateVector psi;
  psi.amplitudes[kIndex01] = std::sqrt(p);
  psi.amplitudes[kIndex10] = std::sqrt(1.0 - p);
  return psi;
}

inline DensityOperator build_joint_state(const QubitPairParams& params) {
  const double p = params.p();
  const double coherence = std::sqrt(params.gamma()) * std::sqrt(p * (1.0 - p));
  SquareMatrix m(4);
  m(kIndex01, kIndex01) = p;
  m(kIndex10, kIndex10) = 1.0 - p;
  m(kIndex01, kIndex10) = coherence;
  m(kIndex10, kIndex01) = coherence;
  return DensityOperator(std::move(m));
}

/// {eta+, eta-, 0, 0} with eta+- = (1 +- sqrt(1 - 4p(1-p)(1-gamma))) / 2, the
/// eigenvalues of the populated 2x2 block.
inline Spectrum closed_form_joint_spectrum(const QubitPairParams& params) {
  const double p = params.p();
  const double radicand = 1.0 - 4.0 * p * (1.0 - p) * (1.0 - params.gamma());
  const double root = std::sqrt(std::max(radicand, 0.0));
  return Spectrum({0.5 * (1.0 + root), 0.5 * (1.0 - root), 0.0, 0.0});
}

/// rho_A = diag(p, 1-p), rho_B = diag(1-p, p); gamma does not enter.
inline std::pair<DensityOperator, DensityOperator> reduced_states(double p) {
  detail::require_unit_interval(p, "p");
  return {DensityOperator(SquareMatrix::diagonal({p, 1.0 - p})),
          DensityOperator(SquareMatrix::diagonal({1.0 - p, p}))};
}

}  // namespace tsallis
