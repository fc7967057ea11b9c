#pragma once

// Seeded invariant checks across all modules, shared by `tsallis-mi verify`
// and the test suites.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <cstdio>
#include <random>
#include <string>
#include <vector>

#include "tsallis/entropy.hpp"
#include "tsallis/errors.hpp"
#include "tsallis/family.hpp"
#include "tsallis/linalg.hpp"
#include "tsallis/measures.hpp"

namespace tsallis {

struct CheckResult {
  std::string name;
  bool passed;
  std::size_t cases;
  double max_violation;
  double tolerance;
};

struct VerifyReport {
  std::vector<CheckResult> checks;

  bool all_passed() const {
    return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
  }
};

/// SplitMix64 step; derives independent per-trial seeds from one master seed.
inline std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t stream) {
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (stream + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

/// Hermitian matrix with standard-normal entries, (G + G^H) / 2.
inline SquareMatrix random_hermitian(std::size_t dim, std::uint64_t seed) {
  std::mt19937_64 engine(seed);
  std::normal_distribution<double> normal(0.0, 1.0);
  SquareMatrix g(dim);
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = 0; j < dim; ++j) {
      const double re = normal(engine);
      const double im = normal(engine);
      g(i, j) = Complex(re, im);
    }
  SquareMatrix h(dim);
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = 0; j < dim; ++j) h(i, j) = 0.5 * (g(i, j) + std::conj(g(j, i)));
  return h;
}

/// Grids shared by the closed-form, positivity and q = 1 checks.
inline std::vector<double> unit_grid_tenths() {
  std::vector<double> out;
  for (int i = 0; i <= 10; ++i) out.push_back(i / 10.0);
  return out;
}

inline std::vector<double> q_grid_tenths(int max_tenths) {
  std::vector<double> out;
  for (int i = 0; i <= max_tenths; ++i) out.push_back(i / 10.0);
  return out;
}

inline const std::vector<double>& gamma_grid() {
  static const std::vector<double> grid{0.0, 0.25, 0.5, 0.75, 0.999, 1.0};
  return grid;
}

namespace detail {

class CheckAccumulator {
 public:
  CheckAccumulator(std::string name, double tolerance) : name_(std::move(name)), tolerance_(tolerance) {}

  // Records |deviation| against the tolerance.
  void observe(double deviation) {
    ++cases_;
    const double v = std::abs(deviation);
    if (std::isnan(v) || v > tolerance_) passed_ = false;
    if (!(v <= max_)) max_ = v;
  }

  // Records a one-sided margin that must stay >= -tolerance.
  void observe_margin(double margin) { observe(margin >= 0.0 ? 0.0 : margin); }

  CheckResult result() const { return {name_, passed_, cases_, max_, tolerance_}; }

 private:
  std::string name_;
  double tolerance_;
  std::size_t cases_ = 0;
  double max_ = 0.0;
  bool passed_ = true;
};

inline std::size_t rank_for_trial(std::size_t trial, std::size_t dim) { return 1 + trial % dim; }

}  // namespace detail

inline CheckResult check_partial_trace_preservation(std::uint64_t seed, std::size_t trials) {
  detail::CheckAccumulator acc("partial_trace_preserves_trace", 1e-12);
  for (std::size_t t = 0; t < trials; ++t) {
    const DensityOperator rho = random_density_operator(4, detail::rank_for_trial(t, 4), mix_seed(seed, t));
    const Complex total = rho.matrix().trace();
    acc.observe(std::abs(partial_trace(rho, Subsystem::A).matrix().trace() - total));
    acc.observe(std::abs(partial_trace(rho, Subsystem::B).matrix().trace() - total));
  }
  return acc.result();
}

inline CheckResult check_partial_trace_of_products(std::uint64_t seed, std::size_t trials) {
  detail::CheckAccumulator acc("partial_trace_of_product_state", 1e-12);
  for (std::size_t t = 0; t < trials; ++t) {
    const DensityOperator a = random_density_operator(2, detail::rank_for_trial(t, 2), mix_seed(seed, 2 * t));
    const DensityOperator b = random_density_operator(2, detail::rank_for_trial(t + 1, 2), mix_seed(seed, 2 * t + 1));
    const DensityOperator ab = tensor_product(a, b);
    acc.observe(max_abs_difference(partial_trace(ab, Subsystem::A).matrix(), a.matrix()));
    acc.observe(max_abs_difference(partial_trace(ab, Subsystem::B).matrix(), b.matrix()));
  }
  return acc.result();
}

inline CheckResult check_eigenvalue_sum(std::uint64_t seed, std::size_t trials) {
  detail::CheckAccumulator acc("eigenvalue_sum_equals_trace", 1e-10);
  for (std::size_t t = 0; t < trials; ++t) {
    const SquareMatrix h = random_hermitian(2 + t % 3, mix_seed(seed, t));
    acc.observe(hermitian_eigenvalues(h).sum() - h.trace().real());
  }
  return acc.result();
}

inline CheckResult check_density_eigenvalue_range(std::uint64_t seed, std::size_t trials) {
  detail::CheckAccumulator acc("density_eigenvalues_in_unit_interval", 1e-10);
  for (std::size_t t = 0; t < trials; ++t) {
    const DensityOperator rho = random_density_operator(4, detail::rank_for_trial(t, 4), mix_seed(seed, t));
    const Spectrum raw = hermitian_eigenvalues(rho.matrix());
    for (double v : raw.eigenvalues()) {
      acc.observe_margin(v);
      acc.observe_margin(1.0 - v);
    }
  }
  return acc.result();
}

inline CheckResult check_two_by_two_fast_path(std::uint64_t seed, std::size_t trials) {
  detail::CheckAccumulator acc("closed_form_2x2_matches_jacobi", 1e-13);
  for (std::size_t t = 0; t < trials; ++t) {
    const DensityOperator rho = random_density_operator(2, detail::rank_for_trial(t, 2), mix_seed(seed, t));
    const Spectrum fast = closed_form_eigenvalues_2x2(rho.matrix());
    const Spectrum jacobi = jacobi_eigenvalues(rho.matrix());
    for (std::size_t i = 0; i < 2; ++i) acc.observe(fast[i] - jacobi[i]);
  }
  return acc.result();
}

/// Closed forms against the eigensolver path on q = 0, 0.1, ..., 2 x p = 0, 0.1, ..., 1 x six gamma values.
inline CheckResult check_closed_form_agreement() {
  detail::CheckAccumulator acc("closed_form_matches_numeric", 1e-10);
  for (double p : unit_grid_tenths())
    for (double gamma : gamma_grid()) {
      const QubitPairParams params(p, gamma);
      const BipartiteSpectra numeric = bipartite_spectra(build_joint_state(params));
      for (double q : q_grid_tenths(20)) {
        const EntropicIndex index(q);
        const MutualInfoRecord n = mutual_information(numeric, index);
        acc.observe(closed_form_iq(params, index) - n.i_q);
        acc.observe(closed_form_iq_prime(params, index) - n.i_q_prime);
      }
    }
  return acc.result();
}

inline CheckResult check_family_positivity() {
  detail::CheckAccumulator acc("family_iq_nonnegative", 1e-12);
  for (double p : unit_grid_tenths())
    for (double gamma : gamma_grid()) {
      const BipartiteSpectra spectra = bipartite_spectra(build_joint_state(QubitPairParams(p, gamma)));
      for (double q : q_grid_tenths(50)) acc.observe_margin(mutual_information(spectra, EntropicIndex(q)).i_q);
    }
  return acc.result();
}

inline CheckResult check_q1_coincidence() {
  detail::CheckAccumulator acc("iq_equals_iq_prime_at_q1", 1e-9);
  for (double p : unit_grid_tenths())
    for (double gamma : gamma_grid()) {
      const MutualInfoRecord r = mutual_information(build_joint_state(QubitPairParams(p, gamma)), EntropicIndex(1.0));
      acc.observe(r.i_q - r.i_q_prime);
    }
  return acc.result();
}

inline CheckResult check_araki_lieb(std::uint64_t seed, std::size_t trials) {
  detail::CheckAccumulator acc("araki_lieb_at_q1", kArakiLiebSlack);
  for (std::size_t t = 0; t < trials; ++t) {
    const DensityOperator rho = random_density_operator(4, detail::rank_for_trial(t, 4), mix_seed(seed, t));
    const ArakiLiebReport report = araki_lieb_holds(rho);
    acc.observe_margin(report.lower_margin);
    acc.observe_margin(report.upper_margin);
  }
  return acc.result();
}

inline CheckResult check_product_nullity(std::uint64_t seed, std::size_t trials) {
  detail::CheckAccumulator acc("iq_prime_vanishes_on_products", 1e-10);
  for (std::size_t t = 0; t < trials; ++t) {
    const DensityOperator a = random_density_operator(2, detail::rank_for_trial(t, 2), mix_seed(seed, 2 * t));
    const DensityOperator b = random_density_operator(2, 2, mix_seed(seed, 2 * t + 1));
    const BipartiteSpectra spectra = bipartite_spectra(tensor_product(a, b));
    for (double q : {0.5, 1.5, 2.0}) acc.observe(mutual_information(spectra, EntropicIndex(q)).i_q_prime);
  }
  return acc.result();
}

inline CheckResult check_pseudo_additivity(std::uint64_t seed, std::size_t trials) {
  detail::CheckAccumulator acc("tsallis_pseudo_additivity", 1e-10);
  for (std::size_t t = 0; t < trials; ++t) {
    const DensityOperator a = random_density_operator(2, 2, mix_seed(seed, 2 * t));
    const DensityOperator b = random_density_operator(2, 2, mix_seed(seed, 2 * t + 1));
    const Spectrum joint = tensor_product(a, b).spectrum();
    for (double q : {0.5, 1.0, 1.5, 2.0}) {
      const EntropicIndex index(q);
      const double sa = tsallis_entropy(a.spectrum(), index);
      const double sb = tsallis_entropy(b.spectrum(), index);
      acc.observe(tsallis_entropy(joint, index) - (sa + sb + (1.0 - q) * sa * sb));
    }
  }
  return acc.result();
}

/// Runs every check. trials must be at least 1.
inline VerifyReport run_verification(std::uint64_t seed, std::size_t trials) {
  if (trials < 1) throw ParameterError("verify: trials must be at least 1");
  VerifyReport report;
  report.checks.push_back(check_partial_trace_preservation(mix_seed(seed, 100), trials));
  report.checks.push_back(check_partial_trace_of_products(mix_seed(seed, 101), trials));
  report.checks.push_back(check_eigenvalue_sum(mix_seed(seed, 102), trials));
  report.checks.push_back(check_density_eigenvalue_range(mix_seed(seed, 103), trials));
  report.checks.push_back(check_two_by_two_fast_path(mix_seed(seed, 104), trials));
  report.checks.push_back(check_closed_form_agreement());
  report.checks.push_back(check_family_positivity());
  report.checks.push_back(check_q1_coincidence());
  report.checks.push_back(check_araki_lieb(mix_seed(seed, 105), trials));
  report.checks.push_back(check_product_nullity(mix_seed(seed, 106), trials));
  report.checks.push_back(check_pseudo_additivity(mix_seed(seed, 107), trials));
  return report;
}

/// One machine-readable line, e.g.
/// "check=araki_lieb_at_q1 status=PASS cases=2000 max_violation=0.000e+00 tolerance=1.0e-09"
inline std::string format_check(const CheckResult& c) {
  char numbers[96];
  std::snprintf(numbers, sizeof numbers, " cases=%zu max_violation=%.3e tolerance=%.1e", c.cases, c.max_violation,
                c.tolerance);
  return "check=" + c.name + " status=" + (c.passed ? "PASS" : "FAIL") + numbers;
}

}  // namespace tsallis
