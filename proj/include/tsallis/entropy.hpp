#pragma once

#include <cmath>
#include <cstddef>
#include <string>
#include <vector>

#include "tsallis/errors.hpp"
#include "tsallis/linalg.hpp"

namespace tsallis {

/// Tsallis entropic index, q >= 0.
class EntropicIndex {
 public:
  explicit EntropicIndex(double q) : q_(q) {
    if (!std::isfinite(q)) throw ParameterError("EntropicIndex: q must be finite");
    if (q < 0.0) throw ParameterError("EntropicIndex: q must be >= 0, got " + std::to_string(q));
  }

  double value() const noexcept { return q_; }

 private:
  double q_;
};

// Half-width of the window around q = 1 where the von Neumann formula is used
// in place of (1 - sum lambda^q) / (q - 1).
inline constexpr double kVonNeumannBranchWidth = 1e-6;
inline constexpr double kSpectrumSumTolerance = 1e-8;

namespace detail {

inline std::vector<double> probabilities(const Spectrum& s) {
  if (s.dim() == 0) throw InvalidSpectrumError("empty spectrum");
  if (std::abs(s.sum() - 1.0) > kSpectrumSumTolerance) {
    throw InvalidSpectrumError("spectrum sums to " + std::to_string(s.sum()) + ", expected 1");
  }
  std::vector<double> out(s.eigenvalues().begin(), s.eigenvalues().end());
  for (double& v : out) {
    if (v < -kNegativeEigenvalueTolerance) {
      throw InvalidSpectrumError("spectrum has eigenvalue " + std::to_string(v) + " below -1e-10");
    }
    if (v <= kZeroEigenvalueFloor) v = 0.0;
  }
  // Rescale by the (roundoff-level) excess so a lone surviving eigenvalue is exactly 1.
  double total = 0.0;
  for (double v : out) total += v;
  for (double& v : out) v /= total;
  return out;
}

}  // namespace detail

/// Number of eigenvalues strictly greater than eps.
inline std::size_t support_count(const Spectrum& s, double eps = kZeroEigenvalueFloor) {
  std::size_t count = 0;
  for (double v : s.eigenvalues())
    if (v > eps) ++count;
  return count;
}

/// -sum lambda ln lambda, with 0 ln 0 = 0.
inline double von_neumann_entropy(const Spectrum& s) {
  double entropy = 0.0;
  for (double p : detail::probabilities(s))
    if (p > 0.0) entropy -= p * std::log(p);
  return entropy;
}

/// (1 - sum lambda^q) / (q - 1). Near q = 1 this delegates to the von Neumann
/// entropy; at q = 0 it is the q -> 0 limit, support size minus one.
inline double tsallis_entropy(const Spectrum& s, EntropicIndex index) {
  const double q = index.value();
  const std::vector<double> probs = detail::probabilities(s);
  if (std::abs(q - 1.0) < kVonNeumannBranchWidth) return von_neumann_entropy(s);
  if (q == 0.0) {
    std::size_t support = 0;
    for (double p : probs)
      if (p > kZeroEigenvalueFloor) ++support;
    return static_cast<double>(support) - 1.0;
  }
  double power_sum = 0.0;
  for (double p : probs)
    if (p > 0.0) power_sum += std::pow(p, q);
  return (1.0 - power_sum) / (q - 1.0);
}

}  // namespace tsallis
