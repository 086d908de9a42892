#ifndef GATHER3D_RNG_HPP
#define GATHER3D_RNG_HPP

#include <cstdint>
#include <random>

namespace gather3d {

/* mt19937_64 has standardized output, so the raw bit stream is identical
 * across implementations.  All derived draws below stay away from
 * std::uniform_*_distribution, whose results are implementation-defined. */
using Rng = std::mt19937_64;

/* Uniform in [0, 1) with 53 random mantissa bits. */
inline double u01(Rng& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

inline double uniform(Rng& rng, double lo, double hi) {
  return lo + (hi - lo) * u01(rng);
}

/* Uniform in {0, ..., n-1}.  Modulo bias is < 2^-50 for the n used here. */
inline std::size_t below(Rng& rng, std::size_t n) {
  return static_cast<std::size_t>(rng() % n);
}

}  // namespace gather3d

#endif
