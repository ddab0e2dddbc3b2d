#pragma once

#include <cstdint>
#include <random>

namespace helly {

using Rng = std::mt19937_64;

// Fixed output mappings so generated instances do not depend on the standard
// library's distribution implementations.
inline std::uint64_t uniform_below(Rng& rng, std::uint64_t n) { return rng() % n; }

inline std::int64_t uniform_int(Rng& rng, std::int64_t lo, std::int64_t hi) {
  return lo + static_cast<std::int64_t>(uniform_below(rng, static_cast<std::uint64_t>(hi - lo + 1)));
}

inline double uniform_unit(Rng& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

inline double uniform_real(Rng& rng, double lo, double hi) {
  return lo + (hi - lo) * uniform_unit(rng);
}

}  // namespace helly
