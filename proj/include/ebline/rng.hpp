#pragma once

#include <cstdint>

namespace ebline {

/// splitmix64 finalizer; full-avalanche mix of a 64-bit word.
inline std::uint64_t mix64(std::uint64_t z) {
  z += 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

/// Counter-based uniform generator keyed by (base_seed, replication).
/// Each (period, machine) pair maps to an independent draw, so trajectories
/// are reproducible regardless of evaluation order and two simulators fed the
/// same key consume identical randomness.
class CounterRng {
 public:
  CounterRng(std::uint64_t base_seed, std::uint64_t replication)
      : key_(mix64(mix64(base_seed) + (replication + 1) * 0x9e3779b97f4a7c15ULL)) {}

  /// Uniform draw in [0, 1) for one machine in one period.
  double uniform(std::uint64_t period, std::uint32_t machine) const {
    std::uint64_t z = mix64(key_ + period * 0x9e3779b97f4a7c15ULL);
    z = mix64(z + (machine + 1) * 0xbf58476d1ce4e5b9ULL);
    return static_cast<double>(z >> 11) * 0x1.0p-53;
  }

  std::uint64_t key() const { return key_; }

 private:
  std::uint64_t key_;
};

}  // namespace ebline
