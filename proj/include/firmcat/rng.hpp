#pragma once

#include <cmath>
#include <complex>
#include <cstdint>

namespace firmcat {

/// SplitMix64 generator. Every random value in every suite derives from one
/// of these, seeded from the CLI flag, so failures replay exactly. The
/// generator is self-contained so structured output is identical across
/// standard libraries.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next_u64() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ull);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }

  /// Uniform in [0, bound). bound must be nonzero.
  std::uint64_t uniform(std::uint64_t bound) { return next_u64() % bound; }

  /// Uniform integer in [lo, hi] inclusive.
  std::int64_t range(std::int64_t lo, std::int64_t hi) {
    return lo + static_cast<std::int64_t>(uniform(static_cast<std::uint64_t>(hi - lo + 1)));
  }

  double real(double lo = 0.0, double hi = 1.0) {
    const double u = static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
    return lo + u * (hi - lo);
  }

  bool chance(double p) { return real() < p; }

  std::complex<double> entry() { return {real(-1.0, 1.0), real(-1.0, 1.0)}; }

  /// Nonzero scalar with modulus in [0.5, 2]; used for non-canonical subunit
  /// witnesses where a value near zero would be indistinguishable from a
  /// tolerance violation.
  std::complex<double> nonzero_scalar() {
    const double m = real(0.5, 2.0);
    const double a = real(0.0, 6.283185307179586);
    return {m * std::cos(a), m * std::sin(a)};
  }

 private:
  std::uint64_t state_;
};

/// Stable per-case seed derivation: suites hand case i the generator
/// Rng(mix_seed(seed, i)) so serial and parallel execution agree.
inline std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t stream) {
  Rng r(seed ^ (0xD1B54A32D192ED03ull * (stream + 1)));
  r.next_u64();
  return r.next_u64();
}

}  // namespace firmcat
