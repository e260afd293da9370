#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace hyperq {

/// SplitMix64 finalizer: used for seeding and for deriving child seeds.
constexpr std::uint64_t splitmix64(std::uint64_t x) noexcept
{
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

/// Seed of the index-th child of a master seed; independent of evaluation order.
constexpr std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index) noexcept
{
    return splitmix64(master ^ splitmix64(index + 0x632BE59BD9B4E019ULL));
}

/**
 * xorshift64* (shifts 12/25/27, multiplier 0x2545F4914F6CDD1D). The state
 * is splitmix64(seed), bumped to 1 if that is zero. Everything random in
 * this library draws from here, so a seed fixes the output bit for bit.
 */
class Rng {
public:
    explicit Rng(std::uint64_t seed) noexcept : state_(splitmix64(seed))
    {
        if (state_ == 0)
            state_ = 1;
    }

    std::uint64_t next() noexcept
    {
        state_ ^= state_ >> 12;
        state_ ^= state_ << 25;
        state_ ^= state_ >> 27;
        return state_ * 0x2545F4914F6CDD1DULL;
    }

    /// Uniform on [0, bound) by rejection; bound > 0.
    std::uint64_t below(std::uint64_t bound) noexcept
    {
        const std::uint64_t threshold = (0 - bound) % bound;
        for (;;) {
            const std::uint64_t r = next();
            if (r >= threshold)
                return r % bound;
        }
    }

    /// Uniform on [lo, hi].
    std::uint64_t between(std::uint64_t lo, std::uint64_t hi) noexcept
    {
        return lo + below(hi - lo + 1);
    }

    bool chance(std::uint64_t num, std::uint64_t den) noexcept { return below(den) < num; }

    /// Fisher-Yates, last position first.
    template <typename T>
    void shuffle(std::vector<T>& v) noexcept
    {
        for (std::size_t i = v.size(); i > 1; --i)
            std::swap(v[i - 1], v[below(i)]);
    }

private:
    std::uint64_t state_;
};

} // namespace hyperq
