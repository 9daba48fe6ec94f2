// SPDX-License-Identifier: Apache-2.0
#ifndef RPCC_RNG_HPP
#define RPCC_RNG_HPP

#include <cmath>
#include <cstdint>

#include "rpcc/types.hpp"

namespace rpcc {

/// SplitMix64 generator. std:: distributions are implementation-defined, so
/// everything that must be reproducible bit-for-bit (RANSAC sampling, scene
/// synthesis, test data) draws from this instead.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next_u64() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ull);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }

  /// Uniform in [0, 1).
  Scalar uniform01() { return static_cast<Scalar>(next_u64() >> 11) * 0x1.0p-53; }

  Scalar uniform(Scalar lo, Scalar hi) { return lo + (hi - lo) * uniform01(); }

  /// Uniform integer in [0, n). n must be > 0.
  std::size_t index(std::size_t n) { return static_cast<std::size_t>(next_u64() % n); }

  /// Box-Muller; one value per call (the pair's second half is discarded to
  /// keep the stream position independent of call parity).
  Scalar normal(Scalar mu, Scalar sigma) {
    Scalar u1 = uniform01();
    Scalar u2 = uniform01();
    if (u1 < 1e-300) u1 = 1e-300;
    return mu + sigma * std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * kPi * u2);
  }

  /// Derive an independent stream, e.g. one per cluster.
  static std::uint64_t derive(std::uint64_t seed, std::uint64_t stream) {
    Rng r(seed ^ (0xD1B54A32D192ED03ull * (stream + 1)));
    return r.next_u64();
  }

 private:
  std::uint64_t state_;
};

}  // namespace rpcc

#endif
