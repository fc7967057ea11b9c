#pragma once

// q sweeps over the family state and the fixed-format CSV they are written as.
//
// CSV layout: header "q,p,gamma,S_qA,S_qB,S_qAB,I_q,I_q_prime", one row per q in
// ascending order, every value printed as %.12g, '\n' line endings.

#include <cmath>
#include <cstddef>
#include <cstdio>
#include <numbers>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "tsallis/entropy.hpp"
#include "tsallis/errors.hpp"
#include "tsallis/family.hpp"
#include "tsallis/measures.hpp"

namespace tsallis {

inline constexpr std::string_view kSweepCsvHeader = "q,p,gamma,S_qA,S_qB,S_qAB,I_q,I_q_prime";

struct SweepSpec {
  double q_min = 0.0;
  double q_max = 2.0;
  std::size_t q_steps = 201;
  double p = 0.5;
  double gamma = 1.0;
  Measure measure = Measure::Both;
  std::string output_path = "-";  // "-" is standard output
};

struct SweepRecord {
  double q;
  double p;
  double gamma;
  double s_qa;
  double s_qb;
  double s_qab;
  double i_q;
  double i_q_prime;
};

inline void validate(const SweepSpec& spec) {
  if (!std::isfinite(spec.q_min) || !std::isfinite(spec.q_max) || spec.q_min < 0.0 || !(spec.q_min < spec.q_max)) {
    throw ParameterError("sweep: need 0 <= q-min < q-max");
  }
  if (spec.q_steps < 2) throw ParameterError("sweep: steps must be at least 2");
  detail::require_unit_interval(spec.p, "p");
  detail::require_unit_interval(spec.gamma, "gamma");
}

/// q_steps points from q_min to q_max inclusive, evenly spaced.
inline std::vector<double> q_grid(double q_min, double q_max, std::size_t q_steps) {
  std::vector<double> qs(q_steps);
  const double span = q_max - q_min;
  const double last = static_cast<double>(q_steps - 1);
  for (std::size_t i = 0; i < q_steps; ++i) qs[i] = q_min + span * static_cast<double>(i) / last;
  qs.back() = q_max;
  return qs;
}

inline std::vector<SweepRecord> run_sweep(const SweepSpec& spec) {
  validate(spec);
  const QubitPairParams params(spec.p, spec.gamma);
  const BipartiteSpectra spectra = bipartite_spectra(build_joint_state(params));
  std::vector<SweepRecord> rows;
  rows.reserve(spec.q_steps);
  for (double q : q_grid(spec.q_min, spec.q_max, spec.q_steps)) {
    const MutualInfoRecord r = mutual_information(spectra, EntropicIndex(q));
    rows.push_back({q, spec.p, spec.gamma, r.s_qa, r.s_qb, r.s_qab, r.i_q, r.i_q_prime});
  }
  return rows;
}

/// %.12g, with negative zero printed as 0.
inline std::string format_value(double v) {
  if (v == 0.0) v = 0.0;
  char buffer[32];
  std::snprintf(buffer, sizeof buffer, "%.12g", v);
  return buffer;
}

inline void write_csv_row(std::ostream& out, std::span<const double> values) {
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i != 0) out << ',';
    out << format_value(values[i]);
  }
  out << '\n';
}

inline void write_sweep_csv(std::ostream& out, const std::vector<SweepRecord>& rows) {
  out << kSweepCsvHeader << '\n';
  for (const SweepRecord& r : rows) {
    const double values[] = {r.q, r.p, r.gamma, r.s_qa, r.s_qb, r.s_qab, r.i_q, r.i_q_prime};
    write_csv_row(out, values);
  }
}

// --- figure data ------------------------------------------------------------

inline constexpr std::size_t kFigurePoints = 401;
inline constexpr double kFigureQMax = 2.0;

struct FigureTable {
  std::vector<std::string> columns;     // first column is q
  std::vector<std::vector<double>> rows;
};

/// Series for the four published plots on q in [0, 2]:
///   1: I_q,  p = 0.5, gamma in {1, 0.999, 0}, plus the 2 ln 2 reference line
///   2: I_q,  gamma = 1, p in {0.5, 0.999}
///   3: I'_q, as 1
///   4: I'_q, as 2
inline FigureTable figure_table(int figure_id) {
  if (figure_id < 1 || figure_id > 4) {
    throw ParameterError("figure: id must be 1, 2, 3 or 4, got " + std::to_string(figure_id));
  }
  const bool prime = figure_id >= 3;
  const bool gamma_series = figure_id == 1 || figure_id == 3;
  const Measure measure = prime ? Measure::IQPrime : Measure::IQ;
  const std::string prefix = prime ? "I_q_prime_" : "I_q_";

  struct Series {
    std::string label;
    QubitPairParams params;
  };
  std::vector<Series> series;
  if (gamma_series) {
    series.push_back({prefix + "gamma_1", QubitPairParams(0.5, 1.0)});
    series.push_back({prefix + "gamma_0.999", QubitPairParams(0.5, 0.999)});
    series.push_back({prefix + "gamma_0", QubitPairParams(0.5, 0.0)});
  } else {
    series.push_back({prefix + "p_0.5", QubitPairParams(0.5, 1.0)});
    series.push_back({prefix + "p_0.999", QubitPairParams(0.999, 1.0)});
  }

  FigureTable table;
  table.columns.push_back("q");
  std::vector<BipartiteSpectra> spectra;
  for (const Series& s : series) {
    table.columns.push_back(s.label);
    spectra.push_back(bipartite_spectra(build_joint_state(s.params)));
  }
  if (gamma_series) table.columns.push_back("I_vN_pure_2ln2");

  for (double q : q_grid(0.0, kFigureQMax, kFigurePoints)) {
    std::vector<double> row{q};
    for (const BipartiteSpectra& s : spectra) row.push_back(select_measure(mutual_information(s, EntropicIndex(q)), measure));
    if (gamma_series) row.push_back(2.0 * std::numbers::ln2);
    table.rows.push_back(std::move(row));
  }
  return table;
}

inline void write_figure_csv(std::ostream& out, const FigureTable& table) {
  for (std::size_t i = 0; i < table.columns.size(); ++i) {
    if (i != 0) out << ',';
    out << table.columns[i];
  }
  out << '\n';
  for (const std::vector<double>& row : table.rows) write_csv_row(out, row);
}

}  // namespace tsallis
