// Seeded randomness for the sampled checks. mt19937_64 has a fixed
// cross-platform output sequence; the bounded draw below avoids
// distribution-object differences between standard libraries, so a seed
// reproduces the same samples everywhere.
#pragma once

#include <cstdint>
#include <random>

namespace xprod {

class Rng {
public:
    explicit Rng(std::uint64_t seed) : eng_(seed), seed_(seed) {}

    std::uint64_t seed() const { return seed_; }

    // uniform draw from [0, n)
    int below(int n) {
        if (n <= 0) return 0;
        const std::uint64_t bound = (std::uint64_t)n;
        const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
        std::uint64_t x;
        do {
            x = eng_();
        } while (x >= limit);
        return (int)(x % bound);
    }

    bool coin() { return below(2) == 1; }

private:
    std::mt19937_64 eng_;
    std::uint64_t seed_;
};

}  // namespace xprod
