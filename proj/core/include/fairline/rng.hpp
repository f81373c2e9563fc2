#ifndef FAIRLINE_RNG_HPP
#define FAIRLINE_RNG_HPP

#include <cstdint>
#include <limits>
#include <random>

namespace fairline {

/// Unbiased draw from {0, ..., bound-1} by rejection sampling on the raw
/// mt19937_64 stream. std::uniform_int_distribution is implementation
/// defined, so seeded outputs would differ across standard libraries;
/// this sampler is reproducible everywhere.
inline std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound) {
    const std::uint64_t max = std::numeric_limits<std::uint64_t>::max();
    const std::uint64_t limit = max - max % bound;
    for (;;) {
        std::uint64_t x = rng();
        if (x < limit) return x % bound;
    }
}

/// Uniform draw from the inclusive range {lo, ..., hi}.
inline std::int64_t uniform_int(std::mt19937_64& rng, std::int64_t lo, std::int64_t hi) {
    return lo + static_cast<std::int64_t>(uniform_below(rng, static_cast<std::uint64_t>(hi - lo + 1)));
}

} // namespace fairline

#endif
