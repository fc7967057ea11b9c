// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <functional>
#include <numbers>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "tsallis/tsallis.hpp"

namespace {

using tsallis::EntropicIndex;
using tsallis::Measure;
using tsallis::QubitPairParams;

constexpr double kTwoLn2 = 2.0 * std::numbers::ln2;

struct Outcome {
  bool passed;
  std::string detail;
};

std::string fmt(const char* pattern, double a, double b = 0.0, double c = 0.0) {
  char buffer[256];
  std::snprintf(buffer, sizeof buffer, pattern, a, b, c);
  return buffer;
}

tsallis::MutualInfoRecord numeric(double p, double gamma, double q) {
  return mutual_information(tsallis::build_joint_state(QubitPairParams(p, gamma)), EntropicIndex(q));
}

std::vector<double> tenths(int from, int to) {
  std::vector<double> out;
  for (int i = from; i <= to; ++i) out.push_back(i / 10.0);
  return out;
}

const std::vector<double> kGammaGrid{0.0, 0.25, 0.5, 0.75, 0.999, 1.0};

Outcome von_neumann_recovery() {
  double worst = 0.0;
  for (double p : tenths(1, 9))
    for (double gamma : {0.0, 0.5, 1.0}) {
      const double at_one = numeric(p, gamma, 1.0).i_q;
      worst = std::max({worst, std::abs(numeric(p, gamma, 1.0 + 1e-4).i_q - at_one),
                        std::abs(numeric(p, gamma, 1.0 - 1e-4).i_q - at_one)});
    }
  const double bell = numeric(0.5, 1.0, 1.0).i_q;
  const double bell_error = std::abs(bell - kTwoLn2);
  return {worst <= 1e-3 && bell_error <= 1e-9,
          fmt("max |I_{1+-1e-4} - I_1| = %.3e (tol 1e-3); |I_1(0.5,1) - 2 ln 2| = %.3e (tol 1e-9)", worst, bell_error)};
}

Outcome q0_maximum() {
  const double value = numeric(0.5, 1.0, 0.0).i_q;
  return {value == 2.0, fmt("I_0(p=0.5, gamma=1) = %.17g (expected exactly 2)", value)};
}

Outcome peak_location() {
  const auto peak = find_iq_peak(QubitPairParams(0.5, 0.999), 0.01, 2.0, Measure::IQ);
  return {peak.argmax >= 0.25 && peak.argmax <= 0.40,
          fmt("q_star = %.6f, I_q = %.6f (accept [0.25, 0.40])", peak.argmax, peak.value)};
}

Outcome monotone_decay() {
  double previous = INFINITY;
  double smallest_drop = INFINITY;
  bool strictly = true;
  for (double q : tenths(1, 20)) {
    const double v = numeric(0.5, 1.0, q).i_q;
    if (!(v < previous)) strictly = false;
    if (std::isfinite(previous)) smallest_drop = std::min(smallest_drop, previous - v);
    previous = v;
  }
  return {strictly, fmt("smallest successive drop on q = 0.1..2.0: %.3e", smallest_drop)};
}

Outcome sensitivity_near_product() {
  const double at_one = numeric(0.999, 1.0, 1.0).i_q;
  const double at_tenth = numeric(0.999, 1.0, 0.1).i_q;
  // Direct evaluation of the definition: marginals {0.999, 0.001}, joint {1, 0}.
  const double oracle_one = 2 * oracle::tsallis_direct({0.999, 0.001}, 1.0) - oracle::tsallis_direct({1.0, 0.0}, 1.0);
  const double oracle_tenth = 2 * oracle::tsallis_direct({0.999, 0.001}, 0.1) - oracle::tsallis_direct({1.0, 0.0}, 0.1);
  const double oracle_gap = std::max(std::abs(at_one - oracle_one), std::abs(at_tenth - oracle_tenth));
  return {at_one <= 0.02 && at_tenth >= 1.0 && oracle_gap <= 1e-12,
          fmt("I_1 = %.6f (<= 0.02), I_0.1 = %.6f (>= 1.0), oracle gap %.1e", at_one, at_tenth, oracle_gap)};
}

Outcome closed_form_equivalence() {
  double worst = 0.0;
  for (double p : tenths(0, 10))
    for (double gamma : kGammaGrid) {
      const QubitPairParams params(p, gamma);
      const auto spectra = tsallis::bipartite_spectra(tsallis::build_joint_state(params));
      for (double q : tenths(0, 20)) {
        const auto n = mutual_information(spectra, EntropicIndex(q));
        worst = std::max({worst, std::abs(closed_form_iq(params, EntropicIndex(q)) - n.i_q),
                          std::abs(closed_form_iq_prime(params, EntropicIndex(q)) - n.i_q_prime)});
      }
    }
  return {worst <= 1e-10, fmt("max deviation over 21 x 11 x 6 grid = %.3e (tol 1e-10)", worst)};
}

Outcome positivity() {
  double lowest = INFINITY;
  for (double p : tenths(0, 10))
    for (double gamma : kGammaGrid) {
      const auto spectra = tsallis::bipartite_spectra(tsallis::build_joint_state(QubitPairParams(p, gamma)));
      for (double q : tenths(0, 50)) lowest = std::min(lowest, mutual_information(spectra, EntropicIndex(q)).i_q);
    }
  return {lowest >= -1e-12, fmt("min I_q over q in [0,5] grid = %.3e (>= -1e-12)", lowest)};
}

Outcome araki_lieb() {
  double worst = INFINITY;
  int failures = 0;
  for (std::uint64_t t = 0; t < 1000; ++t) {
    const auto rho = tsallis::random_density_operator(4, 1 + t % 4, tsallis::mix_seed(20240601, t));
    const auto report = araki_lieb_holds(rho);
    if (!report.holds) ++failures;
    worst = std::min({worst, report.lower_margin, report.upper_margin});
  }
  return {failures == 0 && worst >= -1e-9,
          fmt("1000 states, ranks 1-4: failures = %.0f, min margin = %.3e (>= -1e-9)", failures, worst)};
}

Outcome crossed_term_identity() {
  double row_worst = 0.0;
  for (double p : {0.0, 0.3, 0.5, 0.999})
    for (double gamma : {0.0, 0.5, 0.999, 1.0}) {
      tsallis::SweepSpec spec;
      spec.p = p;
      spec.gamma = gamma;
      spec.q_max = 5.0;
      spec.q_steps = 501;
      for (const auto& r : run_sweep(spec))
        row_worst = std::max(row_worst, std::abs(r.i_q_prime - (r.i_q + (1 - r.q) * r.s_qa * r.s_qb)));
    }
  double product_worst = 0.0;
  for (std::uint64_t t = 0; t < 100; ++t) {
    const auto a = tsallis::random_density_operator(2, 1 + t % 2, tsallis::mix_seed(7, 2 * t));
    const auto b = tsallis::random_density_operator(2, 2, tsallis::mix_seed(7, 2 * t + 1));
    const auto spectra = tsallis::bipartite_spectra(tensor_product(a, b));
    for (double q : {0.0, 0.5, 1.0, 1.5, 2.0, 3.0})
      product_worst = std::max(product_worst, std::abs(mutual_information(spectra, EntropicIndex(q)).i_q_prime));
  }
  return {row_worst <= 1e-12 && product_worst <= 1e-10,
          fmt("sweep rows max |I'_q - I_q - (1-q)S_A S_B| = %.3e (tol 1e-12); products max |I'_q| = %.3e (tol 1e-10)",
              row_worst, product_worst)};
}

Outcome printed_sign_discrepancy() {
  const double p = 0.5;
  const double gamma = 0.0;
  const double printed_root = std::sqrt(1 + 4 * p * (1 - p) * (1 - gamma));
  const double printed_plus = 0.5 * (1 + printed_root);
  const double printed_minus = 0.5 * (1 - printed_root);
  const bool printed_invalid = printed_plus > 1.0 || printed_minus < 0.0;

  const auto implemented = closed_form_joint_spectrum(QubitPairParams(p, gamma));
  const auto eigensolver = tsallis::build_joint_state(QubitPairParams(p, gamma)).spectrum();
  const tsallis::Spectrum expected({0.5, 0.5, 0.0, 0.0});
  double worst = 0.0;
  for (std::size_t i = 0; i < 4; ++i) {
    worst = std::max({worst, std::abs(implemented[i] - eigensolver[i]), std::abs(implemented[i] - expected[i])});
  }
  return {printed_invalid && worst <= 1e-12,
          fmt("printed-sign eta = {%.6f, %.6f} (outside [0,1]); implemented vs numeric max dev = %.1e", printed_plus,
              printed_minus, worst)};
}

Outcome alternative_measure_shape() {
  const auto fig3 = tsallis::figure_table(3);
  // columns: q, gamma=1, gamma=0.999, gamma=0, reference
  std::size_t best = 0;
  for (std::size_t i = 1; i < fig3.rows.size(); ++i)
    if (fig3.rows[i][2] > fig3.rows[best][2]) best = i;
  const double q_star = fig3.rows[best][0];
  const bool interior = q_star > 0.0 && q_star < 1.0 && best > 0 && best + 1 < fig3.rows.size() &&
                        fig3.rows[best][2] > fig3.rows[best - 1][2] && fig3.rows[best][2] > fig3.rows[best + 1][2];

  bool decreasing = true;
  double previous = INFINITY;
  for (const auto& row : fig3.rows) {
    if (row[0] < 0.1 - 1e-12) continue;
    if (!(row[1] < previous)) decreasing = false;
    previous = row[1];
  }
  return {interior && decreasing,
          fmt("I'_q(gamma=0.999) peak at q = %.3f (interior of (0,1)); I'_q(gamma=1) decreasing on [0.1,2]: %.0f",
              q_star, decreasing ? 1.0 : 0.0)};
}

}  // namespace

int main() {
  struct Criterion {
    const char* id;
    const char* name;
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria{
      {"AC1", "von Neumann recovery", von_neumann_recovery},
      {"AC2", "q=0 maximum", q0_maximum},
      {"AC3", "peak location", peak_location},
      {"AC4", "monotone decay", monotone_decay},
      {"AC5", "sensitivity near product state", sensitivity_near_product},
      {"AC6", "closed-form/numeric equivalence", closed_form_equivalence},
      {"AC7", "positivity", positivity},
      {"AC8", "Araki-Lieb at q=1", araki_lieb},
      {"AC9", "crossed-term identity", crossed_term_identity},
      {"AC10", "eta sign discrepancy", printed_sign_discrepancy},
      {"AC11", "qualitative I'_q agreement", alternative_measure_shape},
  };

  const auto start = std::chrono::steady_clock::now();
  int failed = 0;
  for (const Criterion& c : criteria) {
    Outcome outcome{false, ""};
    try {
      outcome = c.run();
    } catch (const std::exception& e) {
      outcome = {false, std::string("exception: ") + e.what()};
    }
    if (!outcome.passed) ++failed;
    std::printf("[%s] %-5s %-32s %s\n", outcome.passed ? "PASS" : "FAIL", c.id, c.name, outcome.detail.c_str());
  }
  const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  const bool fast_enough = seconds < 60.0;
  if (!fast_enough) ++failed;
  std::printf("[%s] %-5s %-32s %.3f s (limit 60 s)\n", fast_enough ? "PASS" : "FAIL", "TIME", "total runtime", seconds);
  std::printf("%d of %zu criteria failed\n", failed, criteria.size() + 1);
  return failed == 0 ? 0 : 1;
}
