#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "ebline/errors.hpp"

namespace ebline {

/// One two-machine subsystem of the decomposition. The chain state is
/// (y, x): y parts in the upstream queue plus upstream machine, x parts in the
/// downstream ensemble. Feasible states form the triangle
/// { (y, x) : 0 <= x <= k_down, 0 <= y <= k_up - x }.
///
/// Per period, three independent events may occur:
///   arrival     with probability arrival[y + x]      (y += 1)
///   production  with probability production[y],      (y -= 1, x += 1)
///               suppressed while x == k_down (upstream machine blocked)
///   departure   with probability downstream[x]       (x -= 1)
/// Boundary conventions: arrival[k_up] = production[0] = downstream[0] = 0.
struct SubsystemParams {
  int k_up = 0;                     // upstream echelon capacity K_{n-1}
  int k_down = 0;                   // downstream echelon capacity K_n
  std::vector<double> arrival;      // r(x), x = 0..k_up
  std::vector<double> production;   // p(y), y = 0..k_up
  std::vector<double> downstream;   // q(x), x = 0..k_down

  void validate() const {
    if (k_down < 1 || k_up < k_down)
      throw ValidationError("subsystem requires 1 <= k_down <= k_up");
    if (arrival.size() != static_cast<std::size_t>(k_up) + 1 ||
        production.size() != static_cast<std::size_t>(k_up) + 1 ||
        downstream.size() != static_cast<std::size_t>(k_down) + 1)
      throw ValidationError("subsystem vector lengths do not match capacities");
    auto in_unit = [](const std::vector<double>& v) {
      return std::all_of(v.begin(), v.end(), [](double x) { return x >= 0.0 && x <= 1.0; });
    };
    if (!in_unit(arrival) || !in_unit(production) || !in_unit(downstream))
      throw ValidationError("subsystem probabilities must lie in [0, 1]");
    if (arrival[k_up] != 0.0 || production[0] != 0.0 || downstream[0] != 0.0)
      throw ValidationError("boundary convention violated: r(k_up) = p(0) = q(0) = 0 required");
  }
};

/// Probabilities over the triangular state space of a subsystem chain,
/// stored row-major by x (then y ascending).
class TriangularDistribution {
 public:
  TriangularDistribution() = default;

  TriangularDistribution(int k_up, int k_down) : k_up_(k_up), k_down_(k_down) {
    offset_.resize(k_down + 2);
    offset_[0] = 0;
    for (int x = 0; x <= k_down; ++x) offset_[x + 1] = offset_[x] + (k_up - x + 1);
    probs_.assign(offset_.back(), 0.0);
  }

  static TriangularDistribution uniform(int k_up, int k_down) {
    TriangularDistribution d(k_up, k_down);
    std::fill(d.probs_.begin(), d.probs_.end(), 1.0 / static_cast<double>(d.size()));
    return d;
  }

  int k_up() const { return k_up_; }
  int k_down() const { return k_down_; }
  std::size_t size() const { return probs_.size(); }

  double& at(int y, int x) { return probs_[offset_[x] + y]; }
  double at(int y, int x) const { return probs_[offset_[x] + y]; }

  /// Width of row x: y ranges over 0..k_up - x.
  int row_width(int x) const { return k_up_ - x + 1; }

  double sum() const {
    double s = 0.0;
    for (double p : probs_) s += p;
    return s;
  }

  void normalize() {
    double s = sum();
    if (s <= 0.0) throw ValidationError("cannot normalize zero distribution");
    for (double& p : probs_) p /= s;
  }

  std::vector<double>& raw() { return probs_; }
  const std::vector<double>& raw() const { return probs_; }

 private:
  int k_up_ = 0;
  int k_down_ = 0;
  std::vector<double> probs_;
  std::vector<int> offset_;
};

struct SolveStats {
  long sweeps = 0;
  double residual = 0.0;
};

/// Stationary distribution of the subsystem chain by Gauss-Seidel on the
/// balance equations. Sweep order is lexicographic (x ascending, y ascending)
/// and the distribution is renormalized after every full sweep; the
/// convergence check compares post-normalization values with a 1e-12
/// denominator floor. Deterministic given (params, warm_start, eps).
inline TriangularDistribution solve_stationary(const SubsystemParams& params,
                                               const TriangularDistribution* warm_start,
                                               double eps,
                                               SolveStats* stats = nullptr,
                                               long max_sweeps = 1000000) {
  params.validate();
  if (!(eps > 0.0)) throw ValidationError("eps must be positive");
  const int ku = params.k_up;
  const int kd = params.k_down;
  const double* r = params.arrival.data();
  const double* p = params.production.data();
  const double* q = params.downstream.data();

  TriangularDistribution dist = (warm_start && warm_start->k_up() == ku && warm_start->k_down() == kd)
                                    ? *warm_start
                                    : TriangularDistribution::uniform(ku, kd);

  // production probability as seen by the chain: blocked while x == k_down
  auto peff = [&](int y, int x) { return x < kd ? p[y] : 0.0; };
  auto in_triangle = [&](int y, int x) { return x >= 0 && x <= kd && y >= 0 && y <= ku - x; };

  std::vector<double> prev(dist.size());
  long sweep = 0;
  double delta = 0.0;
  for (;;) {
    std::copy(dist.raw().begin(), dist.raw().end(), prev.begin());
    for (int x = 0; x <= kd; ++x) {
      for (int y = 0; y <= ku - x; ++y) {
        const int t = y + x;  // subsystem content of the target state
        const double self = (1.0 - r[t]) * (1.0 - peff(y, x)) * (1.0 - q[x]) +
                            r[t] * peff(y, x) * q[x];
        const double out = 1.0 - self;
        if (out <= 1e-14) continue;  // absorbing state; normalization resolves it
        double in = 0.0;
        // arrival only, from (y-1, x)
        if (in_triangle(y - 1, x))
          in += dist.at(y - 1, x) * r[t - 1] * (1.0 - peff(y - 1, x)) * (1.0 - q[x]);
        // production only, from (y+1, x-1)
        if (in_triangle(y + 1, x - 1))
          in += dist.at(y + 1, x - 1) * (1.0 - r[t]) * p[y + 1] * (1.0 - q[x - 1]);
        // departure only, from (y, x+1)
        if (in_triangle(y, x + 1))
          in += dist.at(y, x + 1) * (1.0 - r[t + 1]) * (1.0 - peff(y, x + 1)) * q[x + 1];
        // arrival + production, from (y, x-1)
        if (in_triangle(y, x - 1))
          in += dist.at(y, x - 1) * r[t - 1] * p[y] * (1.0 - q[x - 1]);
        // arrival + departure, from (y-1, x+1)
        if (in_triangle(y - 1, x + 1))
          in += dist.at(y - 1, x + 1) * r[t] * (1.0 - peff(y - 1, x + 1)) * q[x + 1];
        // production + departure, from (y+1, x)
        if (in_triangle(y + 1, x) && x < kd)
          in += dist.at(y + 1, x) * (1.0 - r[t + 1]) * p[y + 1] * q[x];
        dist.at(y, x) = in / out;
      }
    }
    dist.normalize();
    ++sweep;
    delta = 0.0;
    const auto& cur = dist.raw();
    for (std::size_t k = 0; k < cur.size(); ++k) {
      double d = std::abs(cur[k] - prev[k]) / std::max(prev[k], 1e-12);
      delta = std::max(delta, d);
    }
    if (delta < eps) break;
    if (sweep >= max_sweeps)
      throw NoConvergence("subsystem Gauss-Seidel exceeded sweep cap", sweep, delta);
  }
  if (stats) {
    stats->sweeps = sweep;
    stats->residual = delta;
  }
  return dist;
}

/// Internal state-dependent arrival probability to the downstream ensemble:
/// lambda(x) = sum_y P(y,x) p(y) / sum_y P(y,x) for x < k_down, 0 at k_down.
/// States with zero marginal mass are reported as 0 and flagged in
/// `degenerate` when provided.
inline std::vector<double> internal_arrival_probability(const SubsystemParams& params,
                                                        const TriangularDistribution& dist,
                                                        std::vector<int>* degenerate = nullptr) {
  std::vector<double> lambda(params.k_down + 1, 0.0);
  for (int x = 0; x < params.k_down; ++x) {
    double num = 0.0, den = 0.0;
    for (int y = 0; y <= params.k_up - x; ++y) {
      num += dist.at(y, x) * params.production[y];
      den += dist.at(y, x);
    }
    if (den > 0.0) {
      lambda[x] = std::clamp(num / den, 0.0, 1.0);
    } else if (degenerate) {
      degenerate->push_back(x);
    }
  }
  return lambda;
}

/// Conditional throughput v(t) of the subsystem given content t = y + x:
/// probability the downstream machine produces. v(0) = 0.
inline std::vector<double> conditional_throughput(const SubsystemParams& params,
                                                  const TriangularDistribution& dist,
                                                  std::vector<int>* degenerate = nullptr) {
  std::vector<double> v(params.k_up + 1, 0.0);
  for (int t = 0; t <= params.k_up; ++t) {
    double num = 0.0, den = 0.0;
    const int y_lo = std::max(0, t - params.k_down);
    for (int y = y_lo; y <= t; ++y) {
      num += dist.at(y, t - y) * params.downstream[t - y];
      den += dist.at(y, t - y);
    }
    if (den > 0.0) {
      v[t] = std::clamp(num / den, 0.0, 1.0);
    } else if (degenerate) {
      degenerate->push_back(t);
    }
  }
  return v;
}

/// Average WIP of the downstream ensemble: xbar = sum_x x P(x).
inline double average_echelon_wip(const TriangularDistribution& dist) {
  double xbar = 0.0;
  for (int x = 1; x <= dist.k_down(); ++x) {
    double px = 0.0;
    for (int y = 0; y <= dist.k_up() - x; ++y) px += dist.at(y, x);
    xbar += x * px;
  }
  return xbar;
}

/// Probability that a part arrives while the upstream queue already holds
/// more than C = k_up - k_down parts and the upstream machine does not
/// produce, i.e. the arriving part spills into a remote downstream buffer.
inline double overflow_probability(const SubsystemParams& params,
                                   const TriangularDistribution& dist) {
  const int threshold = params.k_up - params.k_down + 1;
  double theta = 0.0;
  for (int x = 0; x <= params.k_down; ++x) {
    for (int y = threshold; y <= params.k_up - x; ++y) {
      theta += dist.at(y, x) * params.arrival[y + x] * (1.0 - params.production[y]);
    }
  }
  return theta;
}

/// Everything the fixed point needs from one solved subsystem.
struct SubsystemMeasures {
  std::vector<double> lambda;           // internal arrival probability, x = 0..k_down
  std::vector<double> cond_throughput;  // v(t), t = 0..k_up
  double avg_echelon_wip = 0.0;
  double overflow = 0.0;
  long iterations = 0;
  double residual = 0.0;
  std::vector<int> degenerate_states;   // flagged zero-mass levels, if any
};

inline SubsystemMeasures measure_subsystem(const SubsystemParams& params,
                                           const TriangularDistribution& dist,
                                           const SolveStats& stats = {}) {
  SubsystemMeasures m;
  m.lambda = internal_arrival_probability(params, dist, &m.degenerate_states);
  m.cond_throughput = conditional_throughput(params, dist, &m.degenerate_states);
  m.avg_echelon_wip = average_echelon_wip(dist);
  m.overflow = overflow_probability(params, dist);
  m.iterations = stats.sweeps;
  m.residual = stats.residual;
  return m;
}

/// First subsystem: a birth-death chain on the total line WIP j = 0..K_1.
/// The upstream machine produces with probability p1 unless blocked at K_1;
/// the downstream aggregate produces with probability q(j).
struct BirthDeathResult {
  std::vector<double> probs;    // P(j), j = 0..K_1
  double throughput = 0.0;      // v_1 = p1 (1 - P(K_1))
  double avg_wip = 0.0;         // xbar_1
  std::vector<double> lambda;   // p1 below K_1, 0 at K_1
};

/// Closed-form stationary solve via the G(j) coefficient ladder. The top
/// state is distinguished: its death rate carries no (1 - p1) factor because
/// the upstream machine is blocked there. Weights are accumulated with
/// on-the-fly rescaling; for p1 = 1 the ladder is walked from the top instead
/// so the vanishing (1 - p1) never lands in a denominator.
inline BirthDeathResult solve_first_subsystem(double p1, std::span<const double> q, int k1) {
  if (!(p1 > 0.0) || p1 > 1.0) throw ValidationError("p1 must lie in (0, 1]");
  if (k1 < 1) throw ValidationError("K_1 must be >= 1");
  if (q.size() != static_cast<std::size_t>(k1) + 1)
    throw ValidationError("q vector must have K_1 + 1 entries");
  if (q[0] != 0.0) throw ValidationError("q(0) = 0 required");
  for (int x = 1; x <= k1; ++x) {
    if (!(q[x] > 0.0) || q[x] > 1.0)
      throw DegenerateDownstream("q(" + std::to_string(x) + ") must lie in (0, 1]");
  }

  // birth(j) = p1 (1 - q(j)); death(j) = (1 - p1) q(j) for j < K_1, q(K_1) at the top
  std::vector<double> w(k1 + 1);
  if (p1 < 1.0) {
    w[0] = 1.0;
    for (int j = 1; j <= k1; ++j) {
      const double death = (j < k1) ? (1.0 - p1) * q[j] : q[j];
      w[j] = w[j - 1] * p1 * (1.0 - q[j - 1]) / death;
      if (w[j] > 1e250)
        for (int i = 0; i <= j; ++i) w[i] /= 1e250;
    }
  } else {
    w[k1] = 1.0;
    for (int j = k1 - 1; j >= 0; --j) {
      const double death = (j + 1 < k1) ? (1.0 - p1) * q[j + 1] : q[j + 1];
      const double birth = p1 * (1.0 - q[j]);
      if (birth <= 0.0)
        throw DegenerateDownstream("deterministic machine against q = 1 makes the chain reducible");
      w[j] = w[j + 1] * death / birth;
      if (w[j] > 1e250)
        for (int i = j; i <= k1; ++i) w[i] /= 1e250;
    }
  }

  double total = 0.0;
  for (double x : w) total += x;
  if (!(total > 0.0) || !std::isfinite(total))
    throw ValidationError("first-subsystem weights are not normalizable");

  BirthDeathResult result;
  result.probs.resize(k1 + 1);
  for (int j = 0; j <= k1; ++j) result.probs[j] = w[j] / total;
  result.throughput = p1 * (1.0 - result.probs[k1]);
  for (int j = 1; j <= k1; ++j) result.avg_wip += j * result.probs[j];
  result.lambda.assign(k1 + 1, p1);
  result.lambda[k1] = 0.0;
  return result;
}

/// Warm start for the subsystem chain: the normalized product of two
/// birth-death marginals, one for the upstream queue level and one for the
/// downstream content, each driven by the constant initial arrival/production
/// rates carried in `params_init`, restricted to the triangle.
inline TriangularDistribution init_marginal_product(const SubsystemParams& params_init) {
  params_init.validate();
  const int ku = params_init.k_up;
  const int kd = params_init.k_down;
  const double r0 = params_init.arrival[0];
  const double pn = params_init.production[1];
  const double qn = params_init.downstream[1];

  auto marginal = [](double up, double down, int cap) -> std::vector<double> {
    std::vector<double> point(cap + 1, 0.0);
    if (!(up > 0.0)) {
      point[0] = 1.0;  // nothing ever arrives
      return point;
    }
    if (!(down > 0.0)) {
      point[cap] = 1.0;  // nothing ever leaves
      return point;
    }
    std::vector<double> q(cap + 1, down);
    q[0] = 0.0;
    return solve_first_subsystem(up, q, cap).probs;
  };

  // upstream queue level in isolation: fed at the initial external arrival
  // rate, drained at the slowest rate seen downstream of the queue
  const std::vector<double> marg_y = marginal(r0, std::min(pn, qn), ku);
  // downstream content in isolation: fed at min(r0, p_n), drained at q
  const std::vector<double> marg_x = marginal(std::min(r0, pn), qn, kd);

  TriangularDistribution dist(ku, kd);
  for (int x = 0; x <= kd; ++x)
    for (int y = 0; y <= ku - x; ++y) dist.at(y, x) = marg_y[y] * marg_x[x];
  dist.normalize();
  return dist;
}

}  // namespace ebline
