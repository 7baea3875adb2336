#ifndef RGG_RNG_HPP
#define RGG_RNG_HPP

#include <cmath>
#include <cstdint>
#include <span>

namespace rgg {

// SplitMix64 output mix (Steele, Lea & Flood; the java.util.SplittableRandom
// finalizer). Bijective on 64-bit words.
inline std::uint64_t splitmix64_mix(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

// Seeded SplitMix64 stream: state advances by the golden-ratio gamma, output
// is the mix above. Identical bit streams for identical seeds on every
// platform; all sampling in this project goes through it (std:: distributions
// are implementation-defined and never used).
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() { return splitmix64_mix(state_ += 0x9e3779b97f4a7c15ULL); }

  // uniform in [0,1), 53 random bits
  double uniform01() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  // uniform in (0,1], safe as a log() argument
  double uniform01_pos() { return static_cast<double>((next() >> 11) + 1) * 0x1.0p-53; }

  // unbiased integer in [0, bound), bound >= 1, by rejection
  std::uint64_t below(std::uint64_t bound) {
    const std::uint64_t limit = bound * ((~std::uint64_t{0}) / bound);
    std::uint64_t x;
    do {
      x = next();
    } while (x >= limit);
    return x % bound;
  }

  // standard normal samples via Box-Muller, consumed pairwise
  void fill_gaussian(std::span<double> out) {
    constexpr double two_pi = 6.28318530717958647692;
    for (std::size_t k = 0; k < out.size(); k += 2) {
      const double u1 = uniform01_pos();
      const double u2 = uniform01();
      const double mag = std::sqrt(-2.0 * std::log(u1));
      out[k] = mag * std::cos(two_pi * u2);
      if (k + 1 < out.size()) out[k + 1] = mag * std::sin(two_pi * u2);
    }
  }

 private:
  std::uint64_t state_;
};

// Per-trial seed derivation for experiment suites: the base seed combined
// with (grid index, trial index) through two rounds of the output mix with
// distinct odd multipliers. Independent of scheduling and thread count.
inline std::uint64_t mix_seed(std::uint64_t base, std::uint64_t grid_index,
                              std::uint64_t trial_index) {
  std::uint64_t h = splitmix64_mix(base + 0x9e3779b97f4a7c15ULL * (grid_index + 1));
  return splitmix64_mix(h + 0xbf58476d1ce4e5b9ULL * (trial_index + 1));
}

}  // namespace rgg

#endif  // RGG_RNG_HPP
