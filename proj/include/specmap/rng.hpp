#ifndef SPECMAP_RNG_HPP
#define SPECMAP_RNG_HPP

#include <complex>
#include <cstdint>

namespace specmap {

/// SplitMix64 stream. Self-contained so seeded runs are reproducible across
/// standard libraries (std::uniform_real_distribution is not).
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        state_ += 0x9e3779b97f4a7c15ULL;
        std::uint64_t z = state_;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    /// Uniform in [0,1).
    double unitReal() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    /// Uniform in [-1,1].
    double symReal() { return 2.0 * unitReal() - 1.0; }

    /// Re and im independently uniform in [-1,1].
    std::complex<double> symComplex() { return {symReal(), symReal()}; }

    std::uint64_t below(std::uint64_t n) { return next() % n; }

private:
    std::uint64_t state_;
};

} // namespace specmap

#endif
