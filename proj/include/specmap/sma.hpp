#ifndef SPECMAP_SMA_HPP
#define SPECMAP_SMA_HPP

#include <cstdint>
#include <utility>
#include <vector>

#include "specmap/algebra.hpp"

namespace specmap {

/// Reflexive transitive relation on {0,...,n-1}; indexes the matrix units
/// E_ij spanning a structural matrix algebra inside M_n.
struct QuasiOrder {
    int n = 0;
    std::vector<std::pair<int, int>> pairs; // sorted row-major, 0-based

    /// Validates reflexivity and transitivity; violations carry witness pairs.
    static QuasiOrder make(int n, std::vector<std::pair<int, int>> pairs);

    /// Reflexive and/or transitive closure applied before validation
    /// (opt-in; non-closed input is otherwise an error).
    static QuasiOrder closed(int n, std::vector<std::pair<int, int>> pairs,
                             bool addDiagonal, bool addTransitive);

    bool has(int i, int j) const { return idx(i, j) >= 0; }
    /// Basis index of E_ij, or -1.
    int idx(int i, int j) const { return table_[i * n + j]; }
    int dim() const { return static_cast<int>(pairs.size()); }

private:
    std::vector<int> table_;
};

/// Condensation of the quasi-order: strongly connected classes of the mutual
/// relation, in a topological order of the class DAG (ties broken by smallest
/// original index). The induced permutation makes the relation block
/// upper-triangular.
struct Condensation {
    std::vector<int> perm;        // perm[original index] = permuted position
    std::vector<int> blockSizes;  // k_1,...,k_p in topological order
    std::vector<int> classOf;     // original index -> block index
    std::vector<int> posInBlock;  // original index -> row within its block
};

Condensation condensation(const QuasiOrder& rho);

/// Algebra spanned by {E_ij : (i,j) in pairs}, unit = sum of E_ii.
Algebra smaAlgebra(const QuasiOrder& rho);

/// Radical basis: units strictly between distinct condensation classes.
std::vector<GRVec> smaRadical(const QuasiOrder& rho, const Condensation& cond);

/// Block-diagonal truncation (coordinates on off-diagonal-block units zeroed).
Element blockProjection(const QuasiOrder& rho, const Condensation& cond, const Element& x);

/// n x n matrix form of an SMA element (and back, asserting membership).
CMat smaToMatrix(const QuasiOrder& rho, const std::vector<Cplx>& coords);
std::vector<Cplx> smaFromMatrix(const QuasiOrder& rho, const CMat& m, double offSupportTol);

struct DiagConjSample {
    Element elem;             // S D S^{-1}, an exact member of the SMA
    CMat s;                   // the conjugating invertible SMA element
    std::vector<Cplx> diag;   // the n distinct diagonal entries of D
};

/// S = 1 + 0.5 * (random SMA element), D = diag(1..n) + complex jitter of
/// magnitude <= 0.1; resamples S when it is not safely invertible.
DiagConjSample sampleDiagConj(const QuasiOrder& rho, const Algebra& a, std::uint64_t seed);

} // namespace specmap

#endif
