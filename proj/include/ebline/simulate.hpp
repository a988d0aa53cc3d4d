#pragma once

#include <cmath>
#include <cstdint>
#include <span>
#include <vector>

#include <boost/math/distributions/students_t.hpp>

#include "ebline/errors.hpp"
#include "ebline/line.hpp"
#include "ebline/parallel.hpp"
#include "ebline/rng.hpp"

namespace ebline {

struct SimConfig {
  int replications = 30;
  std::int64_t horizon = 500000;
  std::uint64_t base_seed = 1;
  std::int64_t warmup = 0;

  void validate() const {
    if (replications < 1) throw ValidationError("replications must be >= 1");
    if (horizon < 1) throw ValidationError("horizon must be >= 1");
    if (warmup < 0) throw ValidationError("warmup must be >= 0");
  }
};

/// Sample mean with a 95% half-width (Student-t, n-1 degrees of freedom)
/// across replications.
struct SimEstimate {
  double mean = 0.0;
  double half_width_95 = 0.0;
  int n = 0;
};

inline SimEstimate estimate_from_samples(std::span<const double> samples) {
  SimEstimate e;
  e.n = static_cast<int>(samples.size());
  for (double s : samples) e.mean += s;
  e.mean /= e.n;
  if (e.n < 2) return e;
  double ss = 0.0;
  for (double s : samples) ss += (s - e.mean) * (s - e.mean);
  const double sd = std::sqrt(ss / (e.n - 1));
  const double t = boost::math::quantile(boost::math::students_t(e.n - 1), 0.975);
  e.half_width_95 = t * sd / std::sqrt(static_cast<double>(e.n));
  return e;
}

struct SimReport {
  SimEstimate throughput;
  std::vector<SimEstimate> stage_wip;  // N-1 entries
  std::vector<SimEstimate> overflow;   // N-2 entries under EB, empty under IB
  Policy policy = Policy::EB;
};

// --- one-period transition kernels ------------------------------------------
//
// Machines are bits 0..N-1 of the masks. Eligibility is evaluated on the
// start-of-period state; draws for ineligible machines are simply masked off,
// so simulators for different policies consume identical randomness.

/// Eligibility under EB: M_1 unless its echelon is full; interior M_n needs a
/// part upstream and room in its echelon; M_N needs a part upstream.
inline std::uint32_t eligible_eb(std::span<const int> y, std::span<const int> k) {
  const int stages = static_cast<int>(y.size());
  std::uint32_t elig = 0;
  int x = 0;  // echelon level, built back-to-front
  for (int n = stages - 1; n >= 0; --n) {
    if (y[n] < 0) throw InfeasibleState("negative stage WIP");
    x += y[n];
    if (x > k[n]) throw InfeasibleState("echelon WIP exceeds its capacity");
    if (n == 0) {
      if (x < k[0]) elig |= 1u;
    } else if (y[n - 1] >= 1 && x < k[n]) {
      elig |= 1u << n;
    }
  }
  if (y[stages - 1] >= 1) elig |= 1u << stages;  // bit N-1: machine M_N
  return elig;
}

/// Eligibility under IB: installation WIP w_n is capped at 1 + C_n.
inline std::uint32_t eligible_ib(std::span<const int> w, std::span<const int> c) {
  const int stages = static_cast<int>(w.size());
  std::uint32_t elig = 0;
  for (int n = 0; n < stages; ++n) {
    if (w[n] < 0 || w[n] > 1 + c[n]) throw InfeasibleState("installation WIP out of range");
    if ((n == 0 || w[n - 1] >= 1) && w[n] < 1 + c[n]) elig |= 1u << n;
  }
  if (w[stages - 1] >= 1) elig |= 1u << stages;
  return elig;
}

/// Eligibility under a bare CONWIP cap: only M_1 is ever blocked.
inline std::uint32_t eligible_conwip(std::span<const int> y, int wip_cap) {
  const int stages = static_cast<int>(y.size());
  std::uint32_t elig = 0;
  int total = 0;
  for (int n = 0; n < stages; ++n) {
    if (y[n] < 0) throw InfeasibleState("negative stage WIP");
    total += y[n];
  }
  if (total > wip_cap) throw InfeasibleState("total WIP exceeds the cap");
  if (total < wip_cap) elig |= 1u;
  for (int n = 1; n < stages; ++n)
    if (y[n - 1] >= 1) elig |= 1u << n;
  if (y[stages - 1] >= 1) elig |= 1u << stages;
  return elig;
}

/// Apply one period's production outcomes to a stage-WIP vector:
/// y_n += produced_n - produced_{n+1}.
inline void apply_production(std::span<int> y, std::uint32_t produced) {
  const int stages = static_cast<int>(y.size());
  for (int n = 0; n < stages; ++n)
    y[n] += static_cast<int>((produced >> n) & 1u) - static_cast<int>((produced >> (n + 1)) & 1u);
}

struct EbStepResult {
  std::uint32_t produced = 0;  // bit n: machine n+1 produced
  std::uint32_t overflow = 0;  // bit m: buffer m+1 overflowed (m = 0..N-3)
};

/// One EB period, simultaneous-update semantics. An overflow at buffer m is
/// a part produced by M_m while M_{m+1} idles and the stage already holds
/// more than C_m parts, so the new part must be stored remotely.
inline EbStepResult step_eb(std::span<int> y, std::uint32_t draws, std::span<const int> k) {
  EbStepResult res;
  res.produced = draws & eligible_eb(y, k);
  const int stages = static_cast<int>(y.size());
  for (int m = 0; m + 1 < stages; ++m) {
    const bool fed = (res.produced >> m) & 1u;
    const bool drained = (res.produced >> (m + 1)) & 1u;
    if (fed && !drained && y[m] >= k[m] - k[m + 1] + 1) res.overflow |= 1u << m;
  }
  apply_production(y, res.produced);
  return res;
}

/// One IB period.
inline std::uint32_t step_ib(std::span<int> w, std::uint32_t draws, std::span<const int> c) {
  const std::uint32_t produced = draws & eligible_ib(w, c);
  apply_production(w, produced);
  return produced;
}

/// One period of a bare CONWIP loop with a single WIP cap.
inline std::uint32_t step_conwip(std::span<int> y, std::uint32_t draws, int wip_cap) {
  const std::uint32_t produced = draws & eligible_conwip(y, wip_cap);
  apply_production(y, produced);
  return produced;
}

namespace detail {

struct ReplicationSums {
  std::vector<double> stage_wip;
  std::vector<double> overflow;
  double throughput = 0.0;
};

template <typename Eligible>
ReplicationSums run_replication(const LineSpec& spec, const SimConfig& config,
                                std::uint64_t replication, Eligible&& eligible,
                                bool track_overflow) {
  const int n_machines = spec.machines();
  const int stages = n_machines - 1;
  const auto& p = spec.production_probs();
  const auto k = spec.echelon_caps();

  CounterRng rng(config.base_seed, replication);
  std::vector<int> y(stages, 0);
  std::vector<std::int64_t> wip_sum(stages, 0);
  std::vector<std::int64_t> overflow_count(stages > 1 ? stages - 1 : 0, 0);
  std::int64_t produced_last = 0;

  const std::int64_t end = config.warmup + config.horizon;
  for (std::int64_t t = 0; t < end; ++t) {
    std::uint32_t draws = 0;
    for (int m = 0; m < n_machines; ++m)
      if (rng.uniform(static_cast<std::uint64_t>(t), m) < p[m]) draws |= 1u << m;
    const std::uint32_t produced = draws & eligible(y);
    std::uint32_t overflow = 0;
    if (track_overflow) {
      for (int m = 0; m + 1 < stages; ++m) {
        const bool fed = (produced >> m) & 1u;
        const bool drained = (produced >> (m + 1)) & 1u;
        if (fed && !drained && y[m] >= k[m] - k[m + 1] + 1) overflow |= 1u << m;
      }
    }
    apply_production(y, produced);
    if (t >= config.warmup) {
      for (int n = 0; n < stages; ++n) wip_sum[n] += y[n];
      for (std::size_t m = 0; m < overflow_count.size(); ++m)
        overflow_count[m] += (overflow >> m) & 1u;
      produced_last += (produced >> (n_machines - 1)) & 1u;
    }
  }

  ReplicationSums sums;
  const double horizon = static_cast<double>(config.horizon);
  sums.throughput = static_cast<double>(produced_last) / horizon;
  sums.stage_wip.resize(stages);
  for (int n = 0; n < stages; ++n)
    sums.stage_wip[n] = static_cast<double>(wip_sum[n]) / horizon;
  sums.overflow.resize(overflow_count.size());
  for (std::size_t m = 0; m < overflow_count.size(); ++m)
    sums.overflow[m] = static_cast<double>(overflow_count[m]) / horizon;
  return sums;
}

}  // namespace detail

/// Replicated time-driven simulation from the empty state. Per-replication
/// seeds derive from (base_seed, replication); replications run concurrently
/// and are merged by index, so the report does not depend on scheduling.
inline SimReport simulate(const LineSpec& spec, const SimConfig& config) {
  config.validate();
  const int stages = spec.machines() - 1;
  const auto k = spec.echelon_caps();
  const auto c = spec.buffer_caps();
  const bool eb = spec.policy() == Policy::EB;

  std::vector<detail::ReplicationSums> reps(config.replications);
  parallel_for(config.replications, [&](int r) {
    if (eb) {
      reps[r] = detail::run_replication(
          spec, config, r, [&](std::span<const int> y) { return eligible_eb(y, k); }, true);
    } else {
      reps[r] = detail::run_replication(
          spec, config, r, [&](std::span<const int> w) { return eligible_ib(w, c); }, false);
    }
  });

  SimReport report;
  report.policy = spec.policy();
  std::vector<double> samples(config.replications);
  auto collect = [&](auto&& get) {
    for (int r = 0; r < config.replications; ++r) samples[r] = get(reps[r]);
    return estimate_from_samples(samples);
  };
  report.throughput = collect([](const auto& s) { return s.throughput; });
  report.stage_wip.resize(stages);
  for (int n = 0; n < stages; ++n)
    report.stage_wip[n] = collect([&](const auto& s) { return s.stage_wip[n]; });
  if (eb && stages > 1) {
    report.overflow.resize(stages - 1);
    for (int m = 0; m + 1 < stages; ++m)
      report.overflow[m] = collect([&](const auto& s) { return s.overflow[m]; });
  }
  return report;
}

}  // namespace ebline
