#ifndef SPECMAP_VERIFY_HPP
#define SPECMAP_VERIFY_HPP

#include <cstdint>
#include <vector>

#include "specmap/mapbuilder.hpp"

namespace specmap {

struct Violation {
    std::uint64_t sampleSeed = 0;
    Cplx eigenvalue{0.0, 0.0};
    double distance = 0.0;
};

struct VerificationReport {
    int samples = 0;
    std::vector<Violation> violations; // sorted by sample seed
    double maxDefect = 0.0;
    bool pass() const { return violations.empty(); }
};

/// sp(phi(a)) within tol of a subset of sp(a) on N seeded samples. SMA
/// sources blend generic elements and diagonalizable conjugates 50/50.
VerificationReport checkShrinking(const Algebra& a, const QuasiOrder* rho,
                                  const ShrinkMapSpec& spec, int n, double tol,
                                  std::uint64_t seed, int jobs = 1);

/// Two-sided Hausdorff distance between sp(phi(a)) and sp(a) within tol.
VerificationReport checkPreserving(const Algebra& a, const QuasiOrder* rho,
                                   const ShrinkMapSpec& spec, int n, double tol,
                                   std::uint64_t seed, int jobs = 1);

/// Hausdorff distance between sp_A(a) and sp_{A/rad}(Q(a)) within tol on N
/// random elements; the radical and quotient are computed internally.
VerificationReport checkQuotientLemma(const Algebra& a, int n, double tol,
                                      std::uint64_t seed);

struct ExponentProfile {
    /// exponents[j][r]: multiplicity of probe value lambda_r in the
    /// characteristic polynomial of phi_j; constant on condensation classes.
    std::vector<std::vector<int>> exponents;
};

/// Probes the map with S (diag(1..n) + jitter) S^{-1}: image eigenvalues are
/// assigned to the nearest probe value (guard distance 0.25, NumericError on
/// breach) and the integer multiplicities must agree across all trials.
ExponentProfile exponentProfile(const QuasiOrder& rho, const Condensation& cond,
                                const ShrinkMapSpec& spec, int trials,
                                std::uint64_t seed);

} // namespace specmap

#endif
