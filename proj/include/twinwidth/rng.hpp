#pragma once

#include <cstdint>
#include <random>

namespace tww {

// Seedable generator with portable bounded draws. std::mt19937_64 output is
// fixed by the standard; the rejection loop below avoids the
// implementation-defined std::uniform_int_distribution.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    std::uint64_t next() { return eng_(); }

    // Uniform in [0, n). n must be > 0.
    std::uint64_t below(std::uint64_t n) {
        const std::uint64_t reject = (0 - n) % n; // 2^64 mod n
        std::uint64_t r = eng_();
        while (r < reject)
            r = eng_();
        return r % n;
    }

    // Uniform in [lo, hi] inclusive.
    std::uint64_t range(std::uint64_t lo, std::uint64_t hi) {
        return lo + below(hi - lo + 1);
    }

private:
    std::mt19937_64 eng_;
};

} // namespace tww
