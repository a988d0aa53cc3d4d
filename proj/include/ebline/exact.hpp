#pragma once

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <unordered_map>
#include <utility>
#include <vector>

#include <Eigen/Sparse>
#include <Eigen/SparseLU>

#include "ebline/decomposition.hpp"  // PerformanceReport
#include "ebline/errors.hpp"
#include "ebline/line.hpp"
#include "ebline/simulate.hpp"  // eligibility + production kernels

namespace ebline {

/// Dense indexing of the feasible states of the full line chain.
/// Under EB the stored vectors are echelon WIPs (x_1..x_{N-1}),
/// x_{n+1} <= x_n <= K_n; under IB they are installation WIPs (w_1..w_{N-1}),
/// 0 <= w_n <= 1 + C_n.
class StateIndex {
 public:
  std::size_t size() const { return states_.size(); }
  const std::vector<int>& state(int idx) const { return states_[idx]; }

  int index_of(std::span<const int> state) const {
    auto it = lookup_.find(pack(state));
    if (it == lookup_.end()) throw InfeasibleState("state not in the feasible set");
    return it->second;
  }

  void add(std::vector<int> state) {
    lookup_.emplace(pack(state), static_cast<int>(states_.size()));
    states_.push_back(std::move(state));
  }

  void set_radix(std::vector<std::uint64_t> radix) { radix_ = std::move(radix); }

 private:
  std::uint64_t pack(std::span<const int> state) const {
    std::uint64_t key = 0;
    for (std::size_t n = 0; n < state.size(); ++n)
      key += static_cast<std::uint64_t>(state[n]) * radix_[n];
    return key;
  }

  std::vector<std::vector<int>> states_;
  std::vector<std::uint64_t> radix_;
  std::unordered_map<std::uint64_t, int> lookup_;
};

/// Sparse row-stochastic transition matrix over a StateIndex.
struct TransitionMatrix {
  int n = 0;
  std::vector<std::vector<std::pair<int, double>>> rows;  // (column, probability)
};

namespace detail {

inline std::vector<std::uint64_t> mixed_radix(std::span<const int> caps) {
  std::vector<std::uint64_t> radix(caps.size());
  std::uint64_t r = 1;
  for (std::size_t n = 0; n < caps.size(); ++n) {
    radix[n] = r;
    r = checked_mul(r, static_cast<std::uint64_t>(caps[n]) + 1);
  }
  return radix;
}

inline void enumerate_eb_states(std::span<const int> k, StateIndex& index) {
  std::vector<int> x(k.size());
  // x_n descends left to right; position 0 is x_1
  auto rec = [&](auto&& self, std::size_t n, int upper) -> void {
    if (n == k.size()) {
      index.add(x);
      return;
    }
    const int hi = std::min(upper, k[n]);
    for (int v = 0; v <= hi; ++v) {
      x[n] = v;
      self(self, n + 1, v);
    }
  };
  rec(rec, 0, k.empty() ? 0 : k[0]);
}

inline void enumerate_box_states(std::span<const int> caps, StateIndex& index) {
  std::vector<int> w(caps.size(), 0);
  auto rec = [&](auto&& self, std::size_t n) -> void {
    if (n == caps.size()) {
      index.add(w);
      return;
    }
    for (int v = 0; v <= caps[n]; ++v) {
      w[n] = v;
      self(self, n + 1);
    }
  };
  rec(rec, 0);
}

inline std::vector<int> echelon_to_stage(std::span<const int> x) {
  std::vector<int> y(x.size());
  for (std::size_t n = 0; n < x.size(); ++n)
    y[n] = x[n] - (n + 1 < x.size() ? x[n + 1] : 0);
  return y;
}

inline std::vector<int> stage_to_echelon(std::span<const int> y) {
  std::vector<int> x(y.size());
  int acc = 0;
  for (int n = static_cast<int>(y.size()) - 1; n >= 0; --n) {
    acc += y[n];
    x[n] = acc;
  }
  return x;
}

}  // namespace detail

/// Build the full line chain. Transition probabilities are products of
/// draw/no-draw probabilities over the machines eligible at the start of the
/// period, aggregated over outcome vectors that land in the same successor --
/// the same law the simulator steps sample from.
inline std::pair<StateIndex, TransitionMatrix> build_chain(const LineSpec& spec,
                                                           std::uint64_t cap = 200000) {
  const int n_machines = spec.machines();
  const auto& p = spec.production_probs();
  const auto k = spec.echelon_caps();
  const auto c = spec.buffer_caps();
  const bool eb = spec.policy() == Policy::EB;

  StateIndex index;
  if (eb) {
    const std::uint64_t count = state_count_eb(k);
    if (count > cap) throw TooLarge("EB chain has " + std::to_string(count) + " states, cap is " +
                                    std::to_string(cap));
    index.set_radix(detail::mixed_radix(k));
    detail::enumerate_eb_states(k, index);
  } else {
    std::vector<int> caps(c.size());
    std::uint64_t count = 1;
    for (std::size_t n = 0; n < c.size(); ++n) {
      caps[n] = 1 + c[n];
      count = detail::checked_mul(count, static_cast<std::uint64_t>(caps[n]) + 1);
    }
    if (count > cap) throw TooLarge("IB chain has " + std::to_string(count) + " states, cap is " +
                                    std::to_string(cap));
    index.set_radix(detail::mixed_radix(caps));
    detail::enumerate_box_states(caps, index);
  }

  TransitionMatrix matrix;
  matrix.n = static_cast<int>(index.size());
  matrix.rows.resize(matrix.n);

  std::vector<int> scratch;
  for (int s = 0; s < matrix.n; ++s) {
    const std::vector<int>& state = index.state(s);
    std::vector<int> y = eb ? detail::echelon_to_stage(state) : state;
    const std::uint32_t elig = eb ? eligible_eb(y, k) : eligible_ib(y, c);

    // walk all submasks of the eligible set, including the empty one
    std::unordered_map<int, double> row;
    std::uint32_t sub = elig;
    for (;;) {
      double prob = 1.0;
      for (int m = 0; m < n_machines; ++m) {
        if (!((elig >> m) & 1u)) continue;
        prob *= ((sub >> m) & 1u) ? p[m] : 1.0 - p[m];
      }
      if (prob > 0.0) {
        scratch = y;
        apply_production(scratch, sub);
        const int target = eb ? index.index_of(detail::stage_to_echelon(scratch))
                              : index.index_of(scratch);
        row[target] += prob;
      }
      if (sub == 0) break;
      sub = (sub - 1) & elig;
    }
    auto& out = matrix.rows[s];
    out.assign(row.begin(), row.end());
    std::sort(out.begin(), out.end());
  }
  return {std::move(index), std::move(matrix)};
}

/// Stationary probabilities of a row-stochastic matrix: direct sparse solve of
/// the balance equations with a normalization row, power-iteration fallback.
/// The result satisfies pi T = pi with residual <= 1e-12.
inline std::vector<double> stationary(const TransitionMatrix& matrix) {
  const int n = matrix.n;
  if (n <= 0) throw ValidationError("empty transition matrix");
  if (n == 1) return {1.0};

  auto residual_of = [&](const std::vector<double>& pi) {
    std::vector<double> out(n, 0.0);
    for (int s = 0; s < n; ++s)
      for (const auto& [t, pr] : matrix.rows[s]) out[t] += pi[s] * pr;
    double res = 0.0;
    for (int s = 0; s < n; ++s) res = std::max(res, std::abs(out[s] - pi[s]));
    return res;
  };

  std::vector<double> pi;
  {
    // rows of A: balance equations (T^t - I), last row replaced by sum = 1
    std::vector<Eigen::Triplet<double>> trip;
    for (int s = 0; s < n; ++s) {
      for (const auto& [t, pr] : matrix.rows[s])
        if (t != n - 1) trip.emplace_back(t, s, pr);
      if (s != n - 1) trip.emplace_back(s, s, -1.0);
    }
    for (int s = 0; s < n; ++s) trip.emplace_back(n - 1, s, 1.0);
    Eigen::SparseMatrix<double> a(n, n);
    a.setFromTriplets(trip.begin(), trip.end());
    a.makeCompressed();
    Eigen::SparseLU<Eigen::SparseMatrix<double>> lu;
    lu.analyzePattern(a);
    lu.factorize(a);
    if (lu.info() == Eigen::Success) {
      Eigen::VectorXd b = Eigen::VectorXd::Zero(n);
      b[n - 1] = 1.0;
      Eigen::VectorXd x = lu.solve(b);
      if (lu.info() == Eigen::Success) {
        pi.assign(x.data(), x.data() + n);
        double sum = 0.0;
        bool ok = true;
        for (double& v : pi) {
          if (!std::isfinite(v)) ok = false;
          if (v < 0.0 && v > -1e-9) v = 0.0;  // tolerate tiny negative round-off
          if (v < 0.0) ok = false;
          sum += v;
        }
        if (!ok || sum <= 0.0 || residual_of(pi) > 1e-12) pi.clear();
        if (!pi.empty())
          for (double& v : pi) v /= sum;
        if (!pi.empty() && residual_of(pi) > 1e-12) pi.clear();
      }
    }
  }

  if (pi.empty()) {
    // damped power iteration; the averaging handles periodic chains
    pi.assign(n, 1.0 / n);
    std::vector<double> next(n);
    for (long it = 0; it < 1000000; ++it) {
      std::fill(next.begin(), next.end(), 0.0);
      for (int s = 0; s < n; ++s)
        for (const auto& [t, pr] : matrix.rows[s]) next[t] += pi[s] * pr;
      double sum = 0.0;
      for (int s = 0; s < n; ++s) {
        next[s] = 0.5 * (next[s] + pi[s]);
        sum += next[s];
      }
      for (int s = 0; s < n; ++s) next[s] /= sum;
      pi.swap(next);
      if (it % 16 == 15 && residual_of(pi) <= 1e-12) break;
    }
    if (residual_of(pi) > 1e-12)
      throw SingularSystem("stationary solve failed; chain is likely reducible");
  }
  return pi;
}

/// Exact line-level measures computed on the full chain: throughput is the
/// stationary probability that the last machine produces, WIPs are state
/// averages, overflow probabilities are the same arrival-while-congested
/// events the approximate measures integrate per subsystem.
inline PerformanceReport exact_measures(const LineSpec& spec, const StateIndex& index,
                                        std::span<const double> pi) {
  const int n_machines = spec.machines();
  const int stages = n_machines - 1;
  const auto& p = spec.production_probs();
  const auto k = spec.echelon_caps();
  const auto c = spec.buffer_caps();
  const bool eb = spec.policy() == Policy::EB;

  PerformanceReport report;
  report.stage_wip.assign(stages, 0.0);
  report.echelon_wip.assign(stages, 0.0);
  report.overflow.assign(eb ? std::max(0, stages - 1) : 0, 0.0);

  for (std::size_t s = 0; s < index.size(); ++s) {
    const double weight = pi[s];
    const std::vector<int>& state = index.state(s);
    const std::vector<int> y = eb ? detail::echelon_to_stage(state) : state;
    const std::uint32_t elig = eb ? eligible_eb(y, k) : eligible_ib(y, c);

    if ((elig >> (n_machines - 1)) & 1u) report.throughput += weight * p[n_machines - 1];
    const std::vector<int> x = eb ? state : detail::stage_to_echelon(y);
    for (int n = 0; n < stages; ++n) {
      report.stage_wip[n] += weight * y[n];
      report.echelon_wip[n] += weight * x[n];
    }
    if (eb) {
      for (int m = 0; m + 1 < stages; ++m) {
        if (y[m] < k[m] - k[m + 1] + 1) continue;
        const double feeds = ((elig >> m) & 1u) ? p[m] : 0.0;
        const double drains = ((elig >> (m + 1)) & 1u) ? p[m + 1] : 0.0;
        report.overflow[m] += weight * feeds * (1.0 - drains);
      }
    }
  }
  return report;
}

/// Convenience: build, solve, measure.
inline PerformanceReport exact_evaluate(const LineSpec& spec, std::uint64_t cap = 200000) {
  const auto t0 = std::chrono::steady_clock::now();
  auto [index, matrix] = build_chain(spec, cap);
  const std::vector<double> pi = stationary(matrix);
  PerformanceReport report = exact_measures(spec, index, pi);
  report.wall_time_s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return report;
}

}  // namespace ebline
