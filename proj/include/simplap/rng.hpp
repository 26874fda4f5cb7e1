#ifndef SIMPLAP_RNG_HPP
#define SIMPLAP_RNG_HPP

#include <cstdint>
#include <stdexcept>

#include "simplap/rational.hpp"

namespace simplap {

/**
 * SplitMix64 pseudo-random generator (Steele, Lea & Flood 2014).
 *
 * Chosen because it is tiny, has a well-known reference implementation,
 * is pure 64-bit integer arithmetic (bit-identical on every platform),
 * and splits cleanly: `split()` derives an independent stream, so every
 * property-test instance owns a replayable generator keyed by
 * (suite seed, instance index).
 */
class SplitMix64 {
  public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    /// Independent child stream; advances this stream once.
    SplitMix64 split() { return SplitMix64(next() ^ 0x9e3779b97f4a7c15ULL); }

    /// Uniform integer in [lo, hi], inclusive.
    std::int64_t uniform_int(std::int64_t lo, std::int64_t hi) {
        if (hi < lo)
            throw std::invalid_argument("uniform_int: empty range");
        const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
        return lo + static_cast<std::int64_t>(next() % span);
    }

    /// Uniform double in [0, 1).
    double uniform01() {
        return static_cast<double>(next() >> 11) * 0x1.0p-53;
    }

    /// Random positive rational p/q with p, q uniform in [1, 16].
    Rational weight() {
        const std::int64_t p = uniform_int(1, 16);
        const std::int64_t q = uniform_int(1, 16);
        return Rational(p, q);
    }

  private:
    std::uint64_t state_;
};

}  // namespace simplap

#endif  // SIMPLAP_RNG_HPP
