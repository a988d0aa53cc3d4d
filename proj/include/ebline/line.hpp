#pragma once

#include <cstdint>
#include <limits>
#include <span>
#include <string>
#include <vector>

#include "ebline/errors.hpp"

namespace ebline {

enum class Policy { EB, IB };

inline const char* to_string(Policy p) { return p == Policy::EB ? "eb" : "ib"; }

/// Echelon capacities from intermediate buffer capacities:
/// K_n = 1 + sum_{m=n..N-1} C_m. Result is non-increasing with K_{N-1} >= 1.
inline std::vector<int> echelon_capacities(std::span<const int> buffer_caps) {
  std::vector<int> k(buffer_caps.size());
  long long acc = 1;
  for (int n = static_cast<int>(buffer_caps.size()) - 1; n >= 0; --n) {
    if (buffer_caps[n] < 0) throw ValidationError("buffer capacity must be >= 0");
    acc += buffer_caps[n];
    if (acc > std::numeric_limits<int>::max())
      throw Overflow("echelon capacity exceeds integer range");
    k[n] = static_cast<int>(acc);
  }
  return k;
}

/// Inverse of echelon_capacities: C_n = K_n - K_{n+1}, C_{N-1} = K_{N-1} - 1.
inline std::vector<int> installation_capacities(std::span<const int> echelon_caps) {
  if (echelon_caps.empty()) throw ValidationError("echelon capacity vector is empty");
  if (echelon_caps.back() < 1) throw ValidationError("echelon capacities must be >= 1");
  std::vector<int> c(echelon_caps.size());
  for (std::size_t n = 0; n + 1 < echelon_caps.size(); ++n) {
    if (echelon_caps[n] < echelon_caps[n + 1])
      throw NonMonotoneCapacities("echelon capacities increase at position " + std::to_string(n + 1));
    c[n] = echelon_caps[n] - echelon_caps[n + 1];
  }
  c.back() = echelon_caps.back() - 1;
  return c;
}

/// A serial line: machine production probabilities, buffer capacities, policy.
/// Capacities are stored as echelon capacities K; the installation view C is
/// recomputed on demand (all solver math indexes on K).
class LineSpec {
 public:
  LineSpec(std::vector<double> production_probs, std::span<const int> buffer_caps, Policy policy)
      : production_(std::move(production_probs)),
        echelon_(echelon_capacities(buffer_caps)),
        policy_(policy) {
    if (production_.size() < 2) throw ValidationError("line needs at least 2 machines");
    if (buffer_caps.size() != production_.size() - 1)
      throw ValidationError("need exactly N-1 buffer capacities for N machines");
    for (double p : production_) {
      if (!(p > 0.0) || p > 1.0)
        throw ValidationError("production probabilities must lie in (0, 1]");
    }
  }

  int machines() const { return static_cast<int>(production_.size()); }
  const std::vector<double>& production_probs() const { return production_; }
  double production_prob(int machine) const { return production_[machine - 1]; }  // 1-based
  const std::vector<int>& echelon_caps() const { return echelon_; }
  int echelon_cap(int n) const { return echelon_[n - 1]; }  // K_n, 1-based
  std::vector<int> buffer_caps() const { return installation_capacities(echelon_); }
  Policy policy() const { return policy_; }

 private:
  std::vector<double> production_;
  std::vector<int> echelon_;
  Policy policy_;
};

namespace detail {

inline std::uint64_t checked_add(std::uint64_t a, std::uint64_t b) {
  std::uint64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw Overflow("state count exceeds 64-bit range");
  return r;
}

inline std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
  std::uint64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw Overflow("state count exceeds 64-bit range");
  return r;
}

}  // namespace detail

/// Number of states of the EB-policy chain: feasible echelon vectors
/// (x_1..x_{N-1}) with x_{n+1} <= x_n <= K_n. Rolling dynamic program over the
/// nested sums, so K in the thousands stays instant.
inline std::uint64_t state_count_eb(std::span<const int> echelon_caps) {
  if (echelon_caps.empty()) throw ValidationError("echelon capacity vector is empty");
  installation_capacities(echelon_caps);  // validates monotonicity
  const int last = static_cast<int>(echelon_caps.size()) - 1;
  // count[v] = number of completions (x_{n+1}.., all <= v) given x_n = v
  std::vector<std::uint64_t> count(echelon_caps[last] + 1, 1);
  for (int n = last - 1; n >= 0; --n) {
    std::vector<std::uint64_t> next(echelon_caps[n] + 1);
    std::uint64_t prefix = 0;
    for (int v = 0; v <= echelon_caps[n]; ++v) {
      if (v < static_cast<int>(count.size())) prefix = detail::checked_add(prefix, count[v]);
      next[v] = prefix;
    }
    count = std::move(next);
  }
  std::uint64_t total = 0;
  for (std::uint64_t c : count) total = detail::checked_add(total, c);
  return total;
}

/// Nominal IB-policy state count: product over n of (C_n + 1).
inline std::uint64_t state_count_ib(std::span<const int> buffer_caps) {
  std::uint64_t total = 1;
  for (int c : buffer_caps) {
    if (c < 0) throw ValidationError("buffer capacity must be >= 0");
    total = detail::checked_mul(total, static_cast<std::uint64_t>(c) + 1);
  }
  return total;
}

/// True iff every buffer except the last has zero capacity, i.e. all echelon
/// capacities are equal; the EB policy then degenerates to CONWIP.
inline bool is_conwip(const LineSpec& spec) {
  const auto& k = spec.echelon_caps();
  for (std::size_t n = 0; n + 1 < k.size(); ++n)
    if (k[n] != k[n + 1]) return false;
  return true;
}

}  // namespace ebline
