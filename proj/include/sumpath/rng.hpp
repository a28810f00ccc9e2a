#pragma once

#include <cstdint>
#include <random>

namespace sumpath {

// Thin wrapper over mt19937_64 with hand-rolled range sampling.
// std::uniform_int_distribution is implementation-defined, which would break
// the "same seed, same bytes" contract across compilers.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    std::uint64_t next_u64() { return eng_(); }

    // Uniform in [0, bound), rejection-sampled.
    std::uint64_t below(std::uint64_t bound) {
        if (bound == 0) return 0;
        std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
        std::uint64_t v;
        do {
            v = eng_();
        } while (v >= limit);
        return v % bound;
    }

    // Uniform in [lo, hi], inclusive.
    std::int64_t range(std::int64_t lo, std::int64_t hi) {
        return lo + static_cast<std::int64_t>(below(static_cast<std::uint64_t>(hi - lo + 1)));
    }

    bool coin() { return (eng_() & 1) != 0; }

private:
    std::mt19937_64 eng_;
};

}  // namespace sumpath
