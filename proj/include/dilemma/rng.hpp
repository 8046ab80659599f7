#ifndef DILEMMA_RNG_HPP
#define DILEMMA_RNG_HPP

#include <cstdint>
#include <random>

namespace dilemma {

// Seeded generator with platform-independent output. mt19937_64 has a
// standard-mandated sequence; the double and integer conversions below avoid
// std::uniform_*_distribution, whose output is implementation-defined.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  // uniform in [0, 1)
  double real01() { return double(eng_() >> 11) * 0x1.0p-53; }

  // uniform integer in [lo, hi], Lemire's multiply-shift reduction
  int uniform_int(int lo, int hi) {
    std::uint64_t span = std::uint64_t(hi - lo) + 1;
    auto wide = static_cast<unsigned __int128>(eng_()) * span;
    return lo + int(wide >> 64);
  }

 private:
  std::mt19937_64 eng_;
};

}  // namespace dilemma

#endif  // DILEMMA_RNG_HPP
