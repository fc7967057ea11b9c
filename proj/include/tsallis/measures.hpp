#pragma once

// Tsallis generalizations of the quantum mutual information:
//
//   I_q  = S_q(A) + S_q(B) - S_q(AB)
//   I'_q = I_q + (1 - q) S_q(A) S_q(B)
//
// I'_q vanishes on product states because S_q is pseudo-additive there.

#include <cmath>
#include <string>

#include "tsallis/entropy.hpp"
#include "tsallis/errors.hpp"
#include "tsallis/family.hpp"
#include "tsallis/linalg.hpp"
#include "tsallis/search.hpp"

namespace tsallis {

struct MutualInfoRecord {
  double q;
  double s_qa;
  double s_qb;
  double s_qab;
  double i_q;
  double i_q_prime;
};

enum class Measure { IQ, IQPrime, Both };

inline MutualInfoRecord make_record(double q, double s_qa, double s_qb, double s_qab) {
  const double i_q = s_qa + s_qb - s_qab;
  return {q, s_qa, s_qb, s_qab, i_q, i_q + (1.0 - q) * s_qa * s_qb};
}

/// Spectra of the two marginals and the joint state. Everything downstream is
/// a function of these three, so a q sweep needs only one set.
struct BipartiteSpectra {
  Spectrum a;
  Spectrum b;
  Spectrum ab;
};

inline BipartiteSpectra bipartite_spectra(const DensityOperator& rho_ab) {
  return {partial_trace(rho_ab, Subsystem::A).spectrum(), partial_trace(rho_ab, Subsystem::B).spectrum(),
          rho_ab.spectrum()};
}

/// Spectra of the family from the closed forms: {p, 1-p} for both marginals
/// and {eta+, eta-, 0, 0} for the joint state.
inline BipartiteSpectra closed_form_spectra(const QubitPairParams& params) {
  const double p = params.p();
  return {Spectrum({p, 1.0 - p}), Spectrum({1.0 - p, p}), closed_form_joint_spectrum(params)};
}

inline MutualInfoRecord mutual_information(const BipartiteSpectra& spectra, EntropicIndex q) {
  return make_record(q.value(), tsallis_entropy(spectra.a, q), tsallis_entropy(spectra.b, q),
                     tsallis_entropy(spectra.ab, q));
}

/// Numeric path: partial traces, Jacobi spectra, Tsallis entropies.
inline MutualInfoRecord mutual_information(const DensityOperator& rho_ab, EntropicIndex q) {
  return mutual_information(bipartite_spectra(rho_ab), q);
}

inline MutualInfoRecord closed_form_record(const QubitPairParams& params, EntropicIndex q) {
  return mutual_information(closed_form_spectra(params), q);
}

inline double closed_form_iq(const QubitPairParams& params, EntropicIndex q) {
  return closed_form_record(params, q).i_q;
}

inline double closed_form_iq_prime(const QubitPairParams& params, EntropicIndex q) {
  return closed_form_record(params, q).i_q_prime;
}

inline double select_measure(const MutualInfoRecord& record, Measure measure) {
  switch (measure) {
    case Measure::IQ:
      return record.i_q;
    case Measure::IQPrime:
      return record.i_q_prime;
    case Measure::Both:
      break;
  }
  throw ParameterError("select_measure: a single measure (IQ or IQPRIME) is required");
}

inline constexpr double kArakiLiebSlack = 1e-9;

struct ArakiLiebReport {
  bool holds;
  double lower_margin;  // S_AB - |S_A - S_B|
  double upper_margin;  // S_A + S_B - S_AB
  double s_a;
  double s_b;
  double s_ab;
};

/// |S_A - S_B| <= S_AB <= S_A + S_B for von Neumann entropies.
inline ArakiLiebReport araki_lieb_holds(const DensityOperator& rho_ab) {
  const BipartiteSpectra spectra = bipartite_spectra(rho_ab);
  const double s_a = von_neumann_entropy(spectra.a);
  const double s_b = von_neumann_entropy(spectra.b);
  const double s_ab = von_neumann_entropy(spectra.ab);
  const double lower = s_ab - std::abs(s_a - s_b);
  const double upper = s_a + s_b - s_ab;
  return {lower >= -kArakiLiebSlack && upper >= -kArakiLiebSlack, lower, upper, s_a, s_b, s_ab};
}

inline constexpr double kPeakGridStep = 1e-2;
inline constexpr double kPeakTolerance = 1e-6;

/// Maximum over q in [q_lo, q_hi] of I_q or I'_q for the family state.
inline ScalarMaximum find_iq_peak(const QubitPairParams& params, double q_lo, double q_hi, Measure measure) {
  if (!std::isfinite(q_lo) || !std::isfinite(q_hi) || q_lo < 0.0 || !(q_lo < q_hi)) {
    throw ParameterError("find_iq_peak: need 0 <= q_lo < q_hi, got [" + std::to_string(q_lo) + ", " +
                         std::to_string(q_hi) + "]");
  }
  if (measure == Measure::Both) throw ParameterError("find_iq_peak: choose IQ or IQPRIME");
  const BipartiteSpectra spectra = closed_form_spectra(params);
  auto objective = [&](double q) { return select_measure(mutual_information(spectra, EntropicIndex(q)), measure); };
  return maximize_on_interval(objective, q_lo, q_hi, kPeakGridStep, kPeakTolerance);
}

}  // namespace tsallis
