/** \file    sampling.hpp
    \brief   Reproducible random points in a box with minimum-magnitude guards
*/
#pragma once
#include <cstdint>
#include <random>
#include <string>
#include <vector>

namespace haantjes {

struct Interval {
    double lo = -1, hi = 1;
};

/// |x_var| >= min_abs
struct Guard {
    std::size_t var = 0;
    double min_abs = 0;
};

struct SamplingDomain {
    std::vector<Interval> box;   ///< one interval per coordinate of the sampling chart
    std::vector<Guard> guards;
    std::uint64_t seed = 42;
    std::size_t samples = 100;

    bool admissible(const std::vector<double>& x) const;
    /// samples points drawn uniformly in the box, rejecting guard violations; identical for identical seeds
    std::vector<std::vector<double>> draw() const;
};

/// uniform double in [0,1) from the top 53 bits of one 64-bit draw
inline double uniform01(std::mt19937_64& rng)
{
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

inline double uniform(std::mt19937_64& rng, double lo, double hi)
{
    return lo + (hi - lo) * uniform01(rng);
}

}  // namespace haantjes
