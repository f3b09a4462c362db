#pragma once

#include <complex>
#include <cstdint>
#include <random>

namespace gpdlab {

constexpr std::uint64_t kDefaultSeed = 0xC57A;

// Deterministic random stream. mt19937_64 output is specified bit-for-bit by the
// standard; doubles are derived by explicit scaling so that two builds with the
// same seed produce identical streams (uniform_real_distribution would not).
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  // Independent per-instance stream: splitmix64 over (master, index) so that
  // instances can run in any order, or in parallel, without coupling.
  static Rng derive(std::uint64_t master, std::uint64_t index) {
    std::uint64_t z = master + 0x9E3779B97F4A7C15ULL * (index + 1);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return Rng(z ^ (z >> 31));
  }

  std::uint64_t bits() { return eng_(); }

  // uniform in [0, 1), 53 significant bits
  double uniform() { return static_cast<double>(eng_() >> 11) * 0x1.0p-53; }

  // uniform in [-1, 1)
  double sym() { return 2.0 * uniform() - 1.0; }

  std::complex<double> csym() { return {sym(), sym()}; }

  // uniform integer in [0, n)
  int below(int n) { return static_cast<int>(eng_() % static_cast<std::uint64_t>(n)); }

  bool coin() { return (eng_() & 1u) != 0; }

 private:
  std::mt19937_64 eng_;
};

}  // namespace gpdlab
