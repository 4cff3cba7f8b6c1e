#ifndef SVDDCAP_RNG_HPP
#define SVDDCAP_RNG_HPP

#include <cstddef>
#include <cstdint>
#include <random>

namespace svddcap::rng {

// Sampling is organized in fixed-size logical blocks of rows. Block b draws
// from its own generator seeded by stream_seed(master, b), so any number of
// workers can fill disjoint blocks and the assembled output never depends
// on the worker layout.
inline constexpr std::size_t kBlockRows = 4096;

/// SplitMix64 finalizer, used as the documented seed-mixing function.
constexpr std::uint64_t mix64(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D4ECB9AAB1296Full;
  return z ^ (z >> 31);
}

/// Seed for substream `index` of a master seed:
/// mix64(master + (index + 1) * golden_gamma).
constexpr std::uint64_t stream_seed(std::uint64_t master, std::uint64_t index) {
  return mix64(master + (index + 1) * 0x9E3779B97F4A7C15ull);
}

/// Uniform double in [0, 1) from the top 53 bits of one engine draw.
/// Avoids std::uniform_real_distribution, whose output is not pinned by the
/// standard; this mapping is bit-reproducible everywhere.
inline double uniform01(std::mt19937_64& engine) {
  return static_cast<double>(engine() >> 11) * 0x1.0p-53;
}

}  // namespace svddcap::rng

#endif  // SVDDCAP_RNG_HPP
