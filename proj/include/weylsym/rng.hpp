#pragma once

#include <cstdint>
#include <string>

#include "weylsym/rational.hpp"

namespace weylsym {

// SplitMix64: tiny, fully specified, identical on every platform.  All
// randomized checks in the library draw from this so that a (seed, item)
// pair reproduces bit-identically.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // uniform in [lo, hi], inclusive
    long range(long lo, long hi) {
        return lo + long(next() % std::uint64_t(hi - lo + 1));
    }

    // nonzero integer coefficient in [-bound, bound]
    Rational coeff(long bound = 3) {
        long c = range(1, bound);
        if (next() & 1) c = -c;
        return Rational(c);
    }

  private:
    std::uint64_t state_;
};

// Stable per-item seed derivation (FNV-1a over the id, mixed with the run seed).
inline std::uint64_t derive_seed(std::uint64_t seed, const std::string& item_id) {
    std::uint64_t h = 1469598103934665603ULL;
    for (unsigned char c : item_id) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    return h ^ (seed * 0x9e3779b97f4a7c15ULL);
}

}  // namespace weylsym
