#pragma once

// Seeded sampling helpers. Only the raw mt19937_64 stream is used (its output
// is fixed by the standard) so results are identical across platforms.

#include <cstdint>
#include <cstdlib>
#include <random>
#include <string>
#include <vector>

#include "spectra/scalar.hpp"

namespace spectra {

inline constexpr std::uint64_t kDefaultSeed = 42;

/// SPECTRA_SEED if set and numeric, otherwise kDefaultSeed.
inline std::uint64_t default_seed() {
  if (const char* env = std::getenv("SPECTRA_SEED")) {
    try {
      return std::stoull(env);
    } catch (const std::exception&) {
    }
  }
  return kDefaultSeed;
}

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }
  /// Uniform in [0, n).
  std::uint64_t below(std::uint64_t n) { return engine_() % n; }
  /// Uniform integer in [lo, hi].
  std::int64_t between(std::int64_t lo, std::int64_t hi) {
    return lo + static_cast<std::int64_t>(below(static_cast<std::uint64_t>(hi - lo + 1)));
  }
  /// Uniform double in [lo, hi).
  double uniform(double lo, double hi) {
    return lo + (hi - lo) * static_cast<double>(engine_() >> 11) * 0x1.0p-53;
  }
  /// Uniform double in the open interval (lo, hi).
  double uniform_open(double lo, double hi) {
    double v = uniform(lo, hi);
    while (v == lo) v = uniform(lo, hi);
    return v;
  }

 private:
  std::mt19937_64 engine_;
};

/// Components k/q with k uniform in {-3..3}\{0} and q uniform in {1..8}.
inline std::vector<Rational> random_direction(Rng& rng, std::size_t n) {
  std::vector<Rational> v;
  v.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    long k = static_cast<long>(rng.between(1, 6));
    if (k > 3) k = 3 - k;  // 4,5,6 -> -1,-2,-3
    v.emplace_back(k, static_cast<long>(rng.between(1, 8)));
  }
  return v;
}

/// Components k/q with k uniform in {1..9} and q uniform in {1..8}.
inline std::vector<Rational> random_positive_point(Rng& rng, std::size_t n) {
  std::vector<Rational> v;
  v.reserve(n);
  for (std::size_t i = 0; i < n; ++i)
    v.emplace_back(static_cast<long>(rng.between(1, 9)), static_cast<long>(rng.between(1, 8)));
  return v;
}

}  // namespace spectra
