#pragma once

#include <cmath>
#include <cstdint>
#include <random>

namespace ckn {

// Deterministic random helper on top of mt19937_64. The std:: distribution
// objects are implementation-defined, so the transforms are done by hand to
// keep sampled streams reproducible across toolchains.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  std::uint64_t raw() { return eng_(); }

  // Uniform double in [0, 1).
  double uniform() { return static_cast<double>(eng_() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  // Uniform integer in [0, n). Multiply-shift; bias is < 2^-64.
  std::uint64_t index(std::uint64_t n) {
    return static_cast<std::uint64_t>(
        (static_cast<unsigned __int128>(eng_()) * n) >> 64);
  }

  // Standard normal via Box-Muller, one spare cached.
  double normal() {
    if (have_spare_) {
      have_spare_ = false;
      return spare_;
    }
    double u1 = 0.0;
    do {
      u1 = uniform();
    } while (u1 <= 0.0);
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double t = 2.0 * M_PI * uniform();
    spare_ = r * std::sin(t);
    have_spare_ = true;
    return r * std::cos(t);
  }

 private:
  std::mt19937_64 eng_;
  double spare_ = 0.0;
  bool have_spare_ = false;
};

}  // namespace ckn
