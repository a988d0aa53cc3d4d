#pragma once

#include <algorithm>
#include <chrono>
#include <cmath>
#include <string>
#include <vector>

#include "ebline/errors.hpp"
#include "ebline/line.hpp"
#include "ebline/subsystem.hpp"

namespace ebline {

/// Line-level performance estimates. Indices are 0-based views of the
/// 1-based quantities: stage_wip[n-1] = ybar_n, echelon_wip[n-1] = xbar_n,
/// overflow[n-1] = theta_n (theta of the last buffer is identically zero and
/// not reported).
struct PerformanceReport {
  double throughput = 0.0;
  std::vector<double> stage_wip;    // N-1 entries
  std::vector<double> echelon_wip;  // N-1 entries
  std::vector<double> overflow;     // N-2 entries
  long outer_iterations = 0;        // subsystem solves performed
  double wall_time_s = 0.0;
};

struct DecompositionOptions {
  double eps = 1e-4;        // outer fixed-point tolerance
  double inner_eps = -1.0;  // Gauss-Seidel tolerance; < 0 means "same as eps"
  long max_solves = 100000;
  long max_sweeps = 1000000;

  double effective_inner_eps() const { return inner_eps > 0.0 ? inner_eps : eps; }
};

/// Mutable state of the fixed-point iteration. Vectors are stored in slots
/// indexed by machine number (slot 0 unused) so the code reads like the
/// coupling equations: subsystem n consumes arrival[n-1] and downstream[n+1].
struct DecompositionState {
  std::vector<std::vector<double>> arrival;     // arrival[m] = r_m, m = 1..N-2
  std::vector<std::vector<double>> downstream;  // downstream[m] = q_m, m = 2..N
  std::vector<TriangularDistribution> warm;     // warm[n] for n = 2..N-1
  std::vector<double> echelon_wip;              // echelon_wip[n] = latest xbar_n, n = 2..N-1
  std::vector<double> overflow;                 // overflow[m] = latest theta_m, m = 1..N-2
  std::vector<bool> boundary_converged;         // [n]: lambda_n ~ r_n held at the last visit
  long solves = 0;
  long total_sweeps = 0;
  double worst_residual = 0.0;  // worst outer boundary residual seen on the last pass
  bool converged = false;
};

namespace detail {

inline std::vector<double> constant_arrival(double value, int cap) {
  std::vector<double> r(cap + 1, value);
  r[cap] = 0.0;
  return r;
}

inline std::vector<double> constant_rate(double value, int cap) {
  std::vector<double> q(cap + 1, value);
  q[0] = 0.0;
  return q;
}

inline SubsystemParams subsystem_params(const LineSpec& spec, int n,
                                        const DecompositionState& state) {
  const int ku = spec.echelon_cap(n - 1);
  const int kd = spec.echelon_cap(n);
  SubsystemParams params;
  params.k_up = ku;
  params.k_down = kd;
  params.arrival = state.arrival[n - 1];
  params.production = constant_rate(spec.production_prob(n), ku);
  params.downstream = state.downstream[n + 1];
  return params;
}

}  // namespace detail

/// Initial arrival and downstream-rate vectors: the smallest production
/// probability among all machines upstream (resp. downstream) of the boundary,
/// plus marginal-product warm starts for every subsystem chain.
inline DecompositionState initialize(const LineSpec& spec) {
  if (spec.policy() != Policy::EB)
    throw ValidationError("decomposition requires EB policy");
  const int n_machines = spec.machines();
  const auto& p = spec.production_probs();

  DecompositionState state;
  state.arrival.resize(n_machines);
  state.downstream.resize(n_machines + 1);
  state.warm.resize(n_machines);
  state.echelon_wip.assign(n_machines, 0.0);
  state.overflow.assign(n_machines, 0.0);
  state.boundary_converged.assign(n_machines, false);

  // min of p_1..p_m and of p_m..p_N, 1-based
  std::vector<double> min_up(n_machines + 1), min_down(n_machines + 2);
  min_up[0] = 1.0;
  for (int m = 1; m <= n_machines; ++m) min_up[m] = std::min(min_up[m - 1], p[m - 1]);
  min_down[n_machines + 1] = 1.0;
  for (int m = n_machines; m >= 1; --m) min_down[m] = std::min(min_down[m + 1], p[m - 1]);

  for (int m = 1; m <= n_machines - 2; ++m)
    state.arrival[m] = detail::constant_arrival(min_up[m], spec.echelon_cap(m));
  for (int m = 2; m <= n_machines - 1; ++m)
    state.downstream[m] = detail::constant_rate(min_down[m], spec.echelon_cap(m - 1));
  // the last subsystem's downstream machine is the real machine M_N
  state.downstream[n_machines] =
      detail::constant_rate(p[n_machines - 1], spec.echelon_cap(n_machines - 1));

  for (int n = 2; n <= n_machines - 1; ++n) {
    SubsystemParams init = detail::subsystem_params(spec, n, state);
    // downstream[n+1] already holds q_{n+1}^init; arrival[n-1] holds r_{n-1}^init
    state.warm[n] = init_marginal_product(init);
  }
  return state;
}

/// The backwards-and-forwards sweep over subsystems n = N-1 .. 2. The last
/// subsystem always hands its conditional throughput downstream; an interior
/// subsystem propagates downward only once its internal arrival probability
/// agrees with the external one, otherwise it updates the arrival vector and
/// sends control back up.
inline void run_fixed_point(const LineSpec& spec, DecompositionState& state,
                            const DecompositionOptions& opts = {}) {
  const int n_machines = spec.machines();
  const double eps = opts.eps;
  if (!(eps > 0.0)) throw ValidationError("eps must be positive");
  const double inner_eps = opts.effective_inner_eps();

  auto solve_one = [&](int n) -> SubsystemMeasures {
    SubsystemParams params = detail::subsystem_params(spec, n, state);
    SolveStats stats;
    const TriangularDistribution* warm =
        state.warm[n].size() > 0 ? &state.warm[n] : nullptr;
    TriangularDistribution dist =
        solve_stationary(params, warm, inner_eps, &stats, opts.max_sweeps);
    state.warm[n] = dist;
    ++state.solves;
    state.total_sweeps += stats.sweeps;
    SubsystemMeasures m = measure_subsystem(params, dist, stats);
    state.echelon_wip[n] = m.avg_echelon_wip;
    state.overflow[n - 1] = m.overflow;
    return m;
  };

  int n = n_machines - 1;
  while (n >= 2) {
    if (state.solves >= opts.max_solves)
      throw NoConvergence("fixed point exceeded subsystem-solve cap", state.solves,
                          state.worst_residual);
    SubsystemMeasures m = solve_one(n);
    if (n == n_machines - 1) {
      state.downstream[n] = m.cond_throughput;
      state.downstream[n][0] = 0.0;
      --n;
      continue;
    }
    // boundary test: lambda_n against r_n over x = 0..K_n - 1
    const int kd = spec.echelon_cap(n);
    double gap = 0.0;
    for (int x = 0; x < kd; ++x) {
      double rel = std::abs(m.lambda[x] - state.arrival[n][x]) /
                   std::max(state.arrival[n][x], 1e-12);
      gap = std::max(gap, rel);
    }
    state.worst_residual = gap;
    state.boundary_converged[n] = gap < eps;
    if (gap < eps) {
      state.downstream[n] = m.cond_throughput;
      state.downstream[n][0] = 0.0;
      --n;
    } else {
      state.arrival[n] = m.lambda;
      ++n;
    }
  }
  state.converged = true;
}

/// Final pass: solve the first subsystem against the converged q_2 and put
/// the line-level measures together. Stage WIPs are echelon differences.
inline PerformanceReport assemble_report(const LineSpec& spec, const DecompositionState& state) {
  const int n_machines = spec.machines();
  BirthDeathResult first =
      solve_first_subsystem(spec.production_prob(1), state.downstream[2], spec.echelon_cap(1));

  PerformanceReport report;
  report.throughput = first.throughput;
  report.outer_iterations = state.solves;
  report.echelon_wip.resize(n_machines - 1);
  report.echelon_wip[0] = first.avg_wip;
  for (int n = 2; n <= n_machines - 1; ++n) report.echelon_wip[n - 1] = state.echelon_wip[n];
  report.stage_wip.resize(n_machines - 1);
  for (int n = 1; n <= n_machines - 2; ++n) {
    report.stage_wip[n - 1] = report.echelon_wip[n - 1] - report.echelon_wip[n];
    if (report.stage_wip[n - 1] < -1e-6)
      throw NegativeStageWip("stage WIP " + std::to_string(n) + " came out negative");
  }
  report.stage_wip[n_machines - 2] = report.echelon_wip[n_machines - 2];
  report.overflow.resize(n_machines - 2);
  for (int m = 1; m <= n_machines - 2; ++m) report.overflow[m - 1] = state.overflow[m];
  return report;
}

/// Initialize, iterate, assemble; wall time measured per run.
inline PerformanceReport decompose(const LineSpec& spec, const DecompositionOptions& opts = {}) {
  const auto t0 = std::chrono::steady_clock::now();
  DecompositionState state = initialize(spec);
  run_fixed_point(spec, state, opts);
  PerformanceReport report = assemble_report(spec, state);
  report.wall_time_s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return report;
}

}  // namespace ebline
