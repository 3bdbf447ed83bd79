#ifndef PSC_PRNG_HPP
#define PSC_PRNG_HPP

#include <cstdint>
#include <vector>

namespace psc {

// The single PRNG used everywhere randomness is needed (profile generators,
// the seeded-random tie-break policy). xorshift64* with the user seed passed
// once through a splitmix64 step, so any 64-bit seed (including 0) is valid
// and outputs are identical on every platform. Selection uses plain modulo;
// the tiny modulo bias is irrelevant here, reproducibility is the contract.
class Xorshift64Star {
public:
    explicit Xorshift64Star(std::uint64_t seed) : state_(splitmix64(seed)) {
        if (state_ == 0) state_ = 0x9E3779B97F4A7C15ULL;
    }

    std::uint64_t next() {
        state_ ^= state_ >> 12;
        state_ ^= state_ << 25;
        state_ ^= state_ >> 27;
        return state_ * 0x2545F4914F6CDD1DULL;
    }

    // Uniform in [0, bound); bound must be positive.
    std::uint64_t below(std::uint64_t bound) { return next() % bound; }

    // In-place Fisher-Yates, descending index order.
    template <typename T>
    void shuffle(std::vector<T>& values) {
        for (std::size_t i = values.size(); i > 1; --i) {
            const std::size_t j = static_cast<std::size_t>(below(i));
            std::swap(values[i - 1], values[j]);
        }
    }

private:
    static std::uint64_t splitmix64(std::uint64_t x) {
        x += 0x9E3779B97F4A7C15ULL;
        x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
        x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
        return x ^ (x >> 31);
    }

    std::uint64_t state_;
};

} // namespace psc

#endif
