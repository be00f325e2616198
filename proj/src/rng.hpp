// Seeded RNG with explicit uniform mapping so streams are identical across
// platforms (std:: distributions are implementation-defined).
#ifndef SHARPYOUNG_RNG_HPP
#define SHARPYOUNG_RNG_HPP

#include <cstdint>
#include <random>

namespace sharpyoung {

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  // Uniform in [0, 1) with 53-bit resolution.
  double uniform() { return static_cast<double>(eng_() >> 11) * 0x1.0p-53; }

  double uniform(double a, double b) { return a + (b - a) * uniform(); }

  // Integer in [lo, hi] inclusive.
  int uniform_int(int lo, int hi) {
    return lo + static_cast<int>(uniform() * static_cast<double>(hi - lo + 1));
  }

 private:
  std::mt19937_64 eng_;
};

}  // namespace sharpyoung

#endif
