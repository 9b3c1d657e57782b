#ifndef SZEGO_RNG_HPP
#define SZEGO_RNG_HPP

#include <cstdint>

namespace szego {

/// Counter-based generator: the value at (stream, index) depends only on
/// (seed, stream, index), so windows can be extended and trials run in any
/// order (or in parallel) with identical results.
class IndexedRng {
public:
    explicit IndexedRng(std::uint64_t seed) : seed_(seed) {}

    std::uint64_t bits(std::uint64_t stream, std::uint64_t index) const {
        std::uint64_t x = mix(seed_ ^ mix(stream + 0x9e3779b97f4a7c15ULL));
        return mix(x ^ mix(index + 0xbf58476d1ce4e5b9ULL));
    }

    /// Uniform in [0, 1).
    double uniform(std::uint64_t stream, std::uint64_t index) const {
        return static_cast<double>(bits(stream, index) >> 11) * 0x1.0p-53;
    }

    std::uint64_t seed() const { return seed_; }

private:
    // splitmix64 finalizer
    static std::uint64_t mix(std::uint64_t z) {
        z += 0x9e3779b97f4a7c15ULL;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    std::uint64_t seed_;
};

} // namespace szego

#endif
