#pragma once

#include <cstdint>

namespace entriv {

// Counter-based SplitMix64: the k-th draw is mix(seed + (k+1) * golden), so a
// stream is fully determined by (seed, counter) and can be forked cheaply.
class Rng {
public:
    explicit Rng(std::uint64_t seed = 0, std::uint64_t counter = 0) : seed_(seed), counter_(counter) {}

    static std::uint64_t mix(std::uint64_t z)
    {
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    std::uint64_t next() { return mix(seed_ + (++counter_) * 0x9e3779b97f4a7c15ULL); }

    // Uniform in [lo, hi]; rejection sampling avoids modulo bias.
    std::int64_t uniform(std::int64_t lo, std::int64_t hi)
    {
        const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
        if (span == 0)
            return static_cast<std::int64_t>(next());
        const std::uint64_t limit = UINT64_MAX - UINT64_MAX % span;
        std::uint64_t x;
        do {
            x = next();
        } while (x >= limit);
        return lo + static_cast<std::int64_t>(x % span);
    }

    bool coin() { return next() & 1u; }

    // Independent stream derived from this one's seed and a label.
    Rng fork(std::uint64_t label) const { return Rng(mix(seed_ ^ mix(label + 0x632be59bd9b4e019ULL))); }

    std::uint64_t seed() const { return seed_; }
    std::uint64_t counter() const { return counter_; }

private:
    std::uint64_t seed_;
    std::uint64_t counter_;
};

} // namespace entriv
