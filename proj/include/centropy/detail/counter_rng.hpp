#pragma once

#include <cstdint>

namespace centropy::detail {

// splitmix64 finalizer: a counter-based generator. Draw i under a given seed
// depends only on (seed, i), so any partition of the index space across
// threads reproduces the same stream.
inline std::uint64_t mix64(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

inline std::uint64_t counter_bits(std::uint64_t seed, std::uint64_t index) {
  return mix64(seed + (index + 1) * 0x9E3779B97F4A7C15ULL);
}

// Uniform draw in the open interval (0, 1): safe through quantile functions.
inline double counter_uniform01(std::uint64_t seed, std::uint64_t index) {
  return (static_cast<double>(counter_bits(seed, index) >> 11) + 0.5) *
         0x1.0p-53;
}

}  // namespace centropy::detail
