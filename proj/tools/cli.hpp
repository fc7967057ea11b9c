#pragma once

// tsallis-mi command line:
//
//   sweep  --q-min --q-max --steps --p --gamma --measure --out
//   figure --id
//   peak   --p --gamma --q-lo --q-hi --measure
//   verify --seed --trials
//
// Exit status: 0 success, 1 runtime or numeric failure, 2 usage error.

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <map>
#include <ostream>
#include <string>

#include <CLI11.hpp>

#include "tsallis/tsallis.hpp"

namespace tsallis::cli {

inline constexpr int kExitSuccess = 0;
inline constexpr int kExitRuntime = 1;
inline constexpr int kExitUsage = 2;

inline const std::map<std::string, Measure>& measure_names() {
  static const std::map<std::string, Measure> names{
      {"IQ", Measure::IQ}, {"IQPRIME", Measure::IQPrime}, {"BOTH", Measure::Both}};
  return names;
}

namespace detail {

template <typename Write>
void emit(const std::string& path, std::ostream& out, Write&& write) {
  if (path == "-") {
    write(out);
    out.flush();
    return;
  }
  std::ofstream file(path, std::ios::binary | std::ios::trunc);
  if (!file) throw IoError("cannot open output file '" + path + "'");
  write(file);
  file.flush();
  if (!file) throw IoError("failed writing output file '" + path + "'");
}

inline std::string six_digits(double v) {
  char buffer[32];
  std::snprintf(buffer, sizeof buffer, "%.6g", v);
  return buffer;
}

}  // namespace detail

inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Tsallis generalized quantum mutual information for two-qubit states"};
  app.name("tsallis-mi");
  app.require_subcommand(1);

  SweepSpec sweep;
  auto* sweep_cmd = app.add_subcommand("sweep", "Evaluate entropies and I_q, I'_q over a q grid; CSV output");
  sweep_cmd->add_option("--q-min", sweep.q_min, "Smallest q")->capture_default_str();
  sweep_cmd->add_option("--q-max", sweep.q_max, "Largest q")->capture_default_str();
  sweep_cmd->add_option("--steps", sweep.q_steps, "Number of q points, endpoints included")->capture_default_str();
  sweep_cmd->add_option("--p", sweep.p, "Population weight p in [0,1]")->capture_default_str();
  sweep_cmd->add_option("--gamma", sweep.gamma, "Coherence gamma in [0,1]")->capture_default_str();
  sweep_cmd->add_option("--measure", sweep.measure, "IQ, IQPRIME or BOTH")
      ->transform(CLI::CheckedTransformer(measure_names(), CLI::ignore_case));
  sweep_cmd->add_option("--out", sweep.output_path, "Output file, '-' for stdout")->capture_default_str();

  int figure_id = 0;
  auto* figure_cmd = app.add_subcommand("figure", "Emit the data series of figure 1, 2, 3 or 4 as CSV");
  figure_cmd->add_option("--id", figure_id, "Figure number")->required();

  double peak_p = 0.5;
  double peak_gamma = 0.999;
  double q_lo = 0.01;
  double q_hi = 2.0;
  Measure peak_measure = Measure::IQ;
  auto* peak_cmd = app.add_subcommand("peak", "Locate the maximum of I_q or I'_q over [q-lo, q-hi]");
  peak_cmd->add_option("--p", peak_p)->capture_default_str();
  peak_cmd->add_option("--gamma", peak_gamma)->capture_default_str();
  peak_cmd->add_option("--q-lo", q_lo)->capture_default_str();
  peak_cmd->add_option("--q-hi", q_hi)->capture_default_str();
  peak_cmd->add_option("--measure", peak_measure, "IQ or IQPRIME")
      ->transform(CLI::CheckedTransformer(measure_names(), CLI::ignore_case));

  std::uint64_t seed = 42;
  std::size_t trials = 1000;
  auto* verify_cmd = app.add_subcommand("verify", "Run the seeded invariant checks; nonzero exit on any failure");
  verify_cmd->add_option("--seed", seed)->capture_default_str();
  verify_cmd->add_option("--trials", trials, "Random states per Monte Carlo check")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitUsage;
  }

  try {
    if (*sweep_cmd) {
      validate(sweep);
      const auto rows = run_sweep(sweep);
      detail::emit(sweep.output_path, out, [&](std::ostream& s) { write_sweep_csv(s, rows); });
      if (sweep.measure != Measure::Both) {
        // Grid maximum of the selected measure, reported on stderr so the CSV stays clean.
        const bool prime = sweep.measure == Measure::IQPrime;
        const SweepRecord* best = &rows.front();
        for (const SweepRecord& r : rows)
          if ((prime ? r.i_q_prime : r.i_q) > (prime ? best->i_q_prime : best->i_q)) best = &r;
        err << (prime ? "max I_q_prime=" : "max I_q=") << detail::six_digits(prime ? best->i_q_prime : best->i_q)
            << " at q=" << detail::six_digits(best->q) << '\n';
      }
    } else if (*figure_cmd) {
      const FigureTable table = figure_table(figure_id);
      write_figure_csv(out, table);
    } else if (*peak_cmd) {
      const ScalarMaximum peak = find_iq_peak(QubitPairParams(peak_p, peak_gamma), q_lo, q_hi, peak_measure);
      out << "q_star=" << detail::six_digits(peak.argmax) << " value=" << detail::six_digits(peak.value) << '\n';
    } else if (*verify_cmd) {
      const VerifyReport report = run_verification(seed, trials);
      std::size_t failed = 0;
      for (const CheckResult& c : report.checks) {
        out << format_check(c) << '\n';
        if (!c.passed) {
          ++failed;
          err << "tsallis-mi: invariant check failed: " << c.name << '\n';
        }
      }
      out << "summary status=" << (failed == 0 ? "PASS" : "FAIL") << " checks=" << report.checks.size()
          << " failed=" << failed << '\n';
      return failed == 0 ? kExitSuccess : kExitRuntime;
    }
  } catch (const ParameterError& e) {
    err << "tsallis-mi: usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const Error& e) {
    err << "tsallis-mi: error: " << e.what() << '\n';
    return kExitRuntime;
  }
  return kExitSuccess;
}

}  // namespace tsallis::cli
