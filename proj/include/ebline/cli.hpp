#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "ebline/decomposition.hpp"
#include "ebline/errors.hpp"
#include "ebline/exact.hpp"
#include "ebline/parallel.hpp"
#include "ebline/report.hpp"
#include "ebline/simulate.hpp"
#include "ebline/spec_file.hpp"

namespace ebline {

/// Exit codes shared by all subcommands: 0 success, 1 input error,
/// 2 partial numerical failure (some case flagged, run completed).
enum ExitCode : int { kOk = 0, kInputError = 1, kPartialFailure = 2 };

struct CliOptions {
  std::string spec_path;
  std::string format = "csv";  // csv | json
  std::optional<double> epsilon;
  std::optional<std::uint64_t> seed;
  std::optional<int> replications;
  std::optional<std::int64_t> horizon;
  bool with_exact = false;
  std::uint64_t exact_cap = 200000;
};

namespace detail {

inline std::vector<CaseSpec> load_cases(const CliOptions& opts, std::ostream& diag, int* code) {
  try {
    std::vector<CaseSpec> cases = load_spec_file(opts.spec_path);
    for (CaseSpec& cs : cases) {
      if (opts.epsilon) cs.epsilon = *opts.epsilon;
      if (opts.seed) cs.sim.base_seed = *opts.seed;
      if (opts.replications) cs.sim.replications = *opts.replications;
      if (opts.horizon) cs.sim.horizon = *opts.horizon;
      cs.sim.validate();
    }
    if (opts.format == "csv" && !cases.empty()) {
      // the csv column layout is fixed per machine count
      for (const CaseSpec& cs : cases)
        if (cs.production.size() != cases.front().production.size())
          throw SpecParseError("csv output requires a uniform machine count across cases");
    }
    *code = kOk;
    return cases;
  } catch (const Error& e) {
    diag << "error: " << e.what() << "\n";
    *code = kInputError;
    return {};
  }
}

inline double elapsed_s(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

inline int emit(const CliOptions& opts, std::ostream& out, const std::vector<ReportRow>& rows,
                int n_machines, bool with_hw, int n_overflow, bool any_failed) {
  out << (opts.format == "json" ? json_report(rows)
                                : csv_report(rows, n_machines, with_hw, n_overflow));
  return any_failed ? kPartialFailure : kOk;
}

}  // namespace detail

/// Decomposition over every case of a spec file. Cases needing more solves
/// than the cap are flagged and the run continues with exit code 2.
inline int cmd_decompose(const CliOptions& opts, std::ostream& out, std::ostream& diag) {
  int code = kOk;
  std::vector<CaseSpec> cases = detail::load_cases(opts, diag, &code);
  if (code != kOk) return code;
  for (const CaseSpec& cs : cases) {
    if (cs.policy != Policy::EB) {
      diag << "error: " << cs.name << ": decomposition requires EB policy\n";
      return kInputError;
    }
  }

  const int n_machines = cases.empty() ? 2 : static_cast<int>(cases.front().production.size());
  std::vector<ReportRow> rows(cases.size());
  parallel_for(static_cast<int>(cases.size()), [&](int i) {
    const CaseSpec& cs = cases[i];
    ReportRow& row = rows[i];
    row.label = cs.name;
    const auto t0 = std::chrono::steady_clock::now();
    try {
      DecompositionOptions dopts;
      dopts.eps = cs.epsilon;
      PerformanceReport rep = decompose(cs.line(), dopts);
      row.stage_wip = rep.stage_wip;
      row.throughput = rep.throughput;
      row.overflow = rep.overflow;
      row.iterations = rep.outer_iterations;
    } catch (const NoConvergence& e) {
      row.error = e.what();
      row.converged = false;
    }
    row.cpu_s = detail::elapsed_s(t0);
  });
  bool any_failed = false;
  for (const ReportRow& row : rows) {
    if (row.error.empty()) continue;
    diag << "warning: " << row.label << ": " << row.error << "\n";
    any_failed = true;
  }
  return detail::emit(opts, out, rows, n_machines, false, n_machines - 2, any_failed);
}

/// Replicated simulation (EB or IB, per the case's policy) with 95% CIs.
inline int cmd_simulate(const CliOptions& opts, std::ostream& out, std::ostream& diag) {
  int code = kOk;
  std::vector<CaseSpec> cases = detail::load_cases(opts, diag, &code);
  if (code != kOk) return code;

  const int n_machines = cases.empty() ? 2 : static_cast<int>(cases.front().production.size());
  std::vector<ReportRow> rows(cases.size());
  // replications already fan out across threads; keep cases sequential
  for (std::size_t i = 0; i < cases.size(); ++i) {
    const CaseSpec& cs = cases[i];
    ReportRow& row = rows[i];
    row.label = cs.name;
    const auto t0 = std::chrono::steady_clock::now();
    SimReport rep = simulate(cs.line(), cs.sim);
    row.throughput = rep.throughput.mean;
    row.throughput_hw = rep.throughput.half_width_95;
    for (const SimEstimate& e : rep.stage_wip) {
      row.stage_wip.push_back(e.mean);
      row.stage_wip_hw.push_back(e.half_width_95);
    }
    for (const SimEstimate& e : rep.overflow) {
      row.overflow.push_back(e.mean);
      row.overflow_hw.push_back(e.half_width_95);
    }
    row.iterations = cs.sim.replications;
    row.cpu_s = detail::elapsed_s(t0);
  }
  return detail::emit(opts, out, rows, n_machines, true, n_machines - 2, false);
}

/// Exact full-chain analysis; cases above the state cap are flagged.
inline int cmd_exact(const CliOptions& opts, std::ostream& out, std::ostream& diag) {
  int code = kOk;
  std::vector<CaseSpec> cases = detail::load_cases(opts, diag, &code);
  if (code != kOk) return code;

  const int n_machines = cases.empty() ? 2 : static_cast<int>(cases.front().production.size());
  std::vector<ReportRow> rows(cases.size());
  parallel_for(static_cast<int>(cases.size()), [&](int i) {
    const CaseSpec& cs = cases[i];
    ReportRow& row = rows[i];
    row.label = cs.name;
    const auto t0 = std::chrono::steady_clock::now();
    try {
      PerformanceReport rep = exact_evaluate(cs.line(), opts.exact_cap);
      row.stage_wip = rep.stage_wip;
      row.throughput = rep.throughput;
      row.overflow = rep.overflow;
    } catch (const Error& e) {
      row.error = e.what();
      row.converged = false;
    }
    row.cpu_s = detail::elapsed_s(t0);
  });
  bool any_failed = false;
  for (const ReportRow& row : rows) {
    if (row.error.empty()) continue;
    diag << "warning: " << row.label << ": " << row.error << "\n";
    any_failed = true;
  }
  return detail::emit(opts, out, rows, n_machines, false, n_machines - 2, any_failed);
}

/// Decomposition vs simulated EB vs simulated IB, optionally vs exact.
inline int cmd_compare(const CliOptions& opts, std::ostream& out, std::ostream& diag) {
  int code = kOk;
  std::vector<CaseSpec> cases = detail::load_cases(opts, diag, &code);
  if (code != kOk) return code;

  std::vector<CompareRow> rows(cases.size());
  bool any_failed = false;
  for (std::size_t i = 0; i < cases.size(); ++i) {
    const CaseSpec& cs = cases[i];
    CompareRow& row = rows[i];
    row.label = cs.name;
    try {
      DecompositionOptions dopts;
      dopts.eps = cs.epsilon;
      LineSpec eb_line(cs.production, cs.buffers, Policy::EB);
      LineSpec ib_line(cs.production, cs.buffers, Policy::IB);
      row.nu_decomp = decompose(eb_line, dopts).throughput;
      row.nu_sim_eb = simulate(eb_line, cs.sim).throughput.mean;
      row.nu_sim_ib = simulate(ib_line, cs.sim).throughput.mean;
      row.pct_diff_eb = 100.0 * (row.nu_decomp - row.nu_sim_eb) / row.nu_sim_eb;
      if (opts.with_exact) row.nu_exact = exact_evaluate(eb_line, opts.exact_cap).throughput;
    } catch (const Error& e) {
      row.error = e.what();
      any_failed = true;
      diag << "warning: " << row.label << ": " << e.what() << "\n";
    }
  }
  out << (opts.format == "json" ? json_compare(rows) : csv_compare(rows, opts.with_exact));
  return any_failed ? kPartialFailure : kOk;
}

}  // namespace ebline
