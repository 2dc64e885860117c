#ifndef COMMRANK_RNG_HPP
#define COMMRANK_RNG_HPP

#include <cstdint>
#include <random>
#include <vector>

namespace commrank {

/// Seeded random source with portable sampling helpers.
///
/// std::mt19937_64 output is specified bit-exactly by the standard, but the
/// standard distributions are not; every draw here goes through our own
/// samplers so identical seeds give identical streams on any toolchain.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(mix(seed)) {}

    /// Independent substream for (seed, stream): hashes both through
    /// splitmix64 so neighbouring seeds do not produce correlated engines.
    Rng(std::uint64_t seed, std::uint64_t stream) : Rng(substream_seed(seed, stream)) {}

    /// Plain seed equivalent of the (seed, stream) constructor, for APIs that
    /// take a single seed value.
    static std::uint64_t substream_seed(std::uint64_t seed, std::uint64_t stream) {
        return mix(seed) ^ (0x9e3779b97f4a7c15ULL + mix(stream));
    }

    std::uint64_t next_u64() { return engine_(); }

    /// Uniform integer in [0, bound). bound must be > 0.
    std::uint64_t next_below(std::uint64_t bound) {
        // rejection sampling on the top of the range keeps the draw unbiased
        const std::uint64_t limit = bound * ((~std::uint64_t{0}) / bound);
        std::uint64_t x;
        do {
            x = engine_();
        } while (x >= limit);
        return x % bound;
    }

    /// Uniform real in [0, 1).
    double next_real() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

    bool bernoulli(double p) { return next_real() < p; }

    template <typename T>
    void shuffle(std::vector<T>& v) {
        for (std::size_t i = v.size(); i > 1; --i) {
            std::size_t j = static_cast<std::size_t>(next_below(i));
            std::swap(v[i - 1], v[j]);
        }
    }

    /// splitmix64 finalizer; also used to derive substream seeds.
    static std::uint64_t mix(std::uint64_t x) {
        x += 0x9e3779b97f4a7c15ULL;
        x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
        x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
        return x ^ (x >> 31);
    }

private:
    std::mt19937_64 engine_;
};

} // namespace commrank

#endif // COMMRANK_RNG_HPP
