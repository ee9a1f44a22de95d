#ifndef CTX_RNG_HPP
#define CTX_RNG_HPP

#include <cstdint>
#include <random>

namespace ctx {

// All stochastic code uses std::mt19937_64, whose output sequence is
// fixed by the standard, so runs are bitwise reproducible across
// platforms.  Uniform doubles are produced from the top 53 bits directly;
// std::uniform_real_distribution is avoided because its mapping is
// implementation-defined.
inline double uniform01(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

}  // namespace ctx

#endif  // CTX_RNG_HPP
