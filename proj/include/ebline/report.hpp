#pragma once

#include <cstdio>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

namespace ebline {

/// One output row of a batch evaluation. Half-width vectors are filled only
/// for simulation rows. A non-empty `error` marks a case that failed
/// numerically; its numeric columns are rendered empty.
struct ReportRow {
  std::string label;
  std::vector<double> stage_wip;
  std::vector<double> stage_wip_hw;
  double throughput = 0.0;
  std::optional<double> throughput_hw;
  std::vector<double> overflow;
  std::vector<double> overflow_hw;
  double cpu_s = 0.0;
  long iterations = 0;
  bool converged = true;
  std::string error;
};

/// Side-by-side policy comparison for one case. Percent differences are
/// 100 (decomposition - simulation) / simulation.
struct CompareRow {
  std::string label;
  double nu_decomp = 0.0;
  double nu_sim_eb = 0.0;
  double nu_sim_ib = 0.0;
  double pct_diff_eb = 0.0;
  std::optional<double> nu_exact;
  std::string error;
};

namespace detail {

inline std::string fixed5(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.5f", v);
  return buf;
}

}  // namespace detail

/// CSV with a fixed column layout per N: case, y_1..y_{N-1}, nu,
/// theta_1..theta_{N-2}, cpu_s, with a half-width column after each estimate
/// when `with_hw` is set. 5 decimal places, LF line endings.
inline std::string csv_report(const std::vector<ReportRow>& rows, int n_machines, bool with_hw,
                              int n_overflow) {
  std::string out = "case";
  for (int n = 1; n <= n_machines - 1; ++n) {
    out += ",y" + std::to_string(n);
    if (with_hw) out += ",y" + std::to_string(n) + "_hw";
  }
  out += ",nu";
  if (with_hw) out += ",nu_hw";
  for (int m = 1; m <= n_overflow; ++m) {
    out += ",theta" + std::to_string(m);
    if (with_hw) out += ",theta" + std::to_string(m) + "_hw";
  }
  out += ",cpu_s\n";

  for (const ReportRow& row : rows) {
    out += row.label;
    auto cell = [&](double v) { out += "," + detail::fixed5(v); };
    auto blank = [&](int count) {
      for (int i = 0; i < count; ++i) out += ",";
    };
    if (!row.error.empty()) {
      blank((n_machines - 1 + 1 + n_overflow) * (with_hw ? 2 : 1));
      out += "," + detail::fixed5(row.cpu_s) + "\n";
      continue;
    }
    for (int n = 0; n < n_machines - 1; ++n) {
      cell(row.stage_wip[n]);
      if (with_hw) cell(row.stage_wip_hw[n]);
    }
    cell(row.throughput);
    if (with_hw) cell(row.throughput_hw.value_or(0.0));
    for (int m = 0; m < n_overflow; ++m) {
      cell(m < static_cast<int>(row.overflow.size()) ? row.overflow[m] : 0.0);
      if (with_hw)
        cell(m < static_cast<int>(row.overflow_hw.size()) ? row.overflow_hw[m] : 0.0);
    }
    cell(row.cpu_s);
    out += "\n";
  }
  return out;
}

/// JSON report: full-precision values plus convergence metadata.
inline std::string json_report(const std::vector<ReportRow>& rows) {
  nlohmann::json doc = nlohmann::json::array();
  for (const ReportRow& row : rows) {
    nlohmann::json j;
    j["case"] = row.label;
    if (row.error.empty()) {
      j["stage_wip"] = row.stage_wip;
      if (!row.stage_wip_hw.empty()) j["stage_wip_hw"] = row.stage_wip_hw;
      j["throughput"] = row.throughput;
      if (row.throughput_hw) j["throughput_hw"] = *row.throughput_hw;
      j["overflow"] = row.overflow;
      if (!row.overflow_hw.empty()) j["overflow_hw"] = row.overflow_hw;
    } else {
      j["error"] = row.error;
    }
    j["cpu_s"] = row.cpu_s;
    j["iterations"] = row.iterations;
    j["converged"] = row.converged;
    doc.push_back(std::move(j));
  }
  return doc.dump(2) + "\n";
}

inline std::string csv_compare(const std::vector<CompareRow>& rows, bool with_exact) {
  std::string out = "case,nu_decomp,nu_sim_eb,nu_sim_ib,pct_diff_eb";
  if (with_exact) out += ",nu_exact";
  out += "\n";
  for (const CompareRow& row : rows) {
    out += row.label;
    if (!row.error.empty()) {
      out += std::string(with_exact ? 5 : 4, ',') + "\n";
      continue;
    }
    out += "," + detail::fixed5(row.nu_decomp) + "," + detail::fixed5(row.nu_sim_eb) + "," +
           detail::fixed5(row.nu_sim_ib) + "," + detail::fixed5(row.pct_diff_eb);
    if (with_exact) out += "," + (row.nu_exact ? detail::fixed5(*row.nu_exact) : std::string());
    out += "\n";
  }
  return out;
}

inline std::string json_compare(const std::vector<CompareRow>& rows) {
  nlohmann::json doc = nlohmann::json::array();
  for (const CompareRow& row : rows) {
    nlohmann::json j;
    j["case"] = row.label;
    if (row.error.empty()) {
      j["nu_decomp"] = row.nu_decomp;
      j["nu_sim_eb"] = row.nu_sim_eb;
      j["nu_sim_ib"] = row.nu_sim_ib;
      j["pct_diff_eb"] = row.pct_diff_eb;
      if (row.nu_exact) j["nu_exact"] = *row.nu_exact;
    } else {
      j["error"] = row.error;
    }
    doc.push_back(std::move(j));
  }
  return doc.dump(2) + "\n";
}

}  // namespace ebline
