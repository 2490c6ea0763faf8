#ifndef SPECMAP_TEST_HELPERS_HPP
#define SPECMAP_TEST_HELPERS_HPP

#include <utility>
#include <vector>

#include "specmap/algebra.hpp"
#include "specmap/sma.hpp"

namespace specmap::testing {

inline GaussRational gr(long num, long den = 1) {
    return GaussRational::fromParts(num, den, 0, 1);
}

/// C[x]/(x^k) with basis 1, t, ..., t^{k-1}.
inline Algebra truncatedPoly(int k) {
    std::vector<TensorEntry> tensor;
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j)
            if (i + j < k) tensor.emplace_back(i, j, i + j, gr(1));
    GRVec unit(static_cast<std::size_t>(k));
    unit[0] = gr(1);
    return Algebra::make(k, tensor, std::move(unit));
}

/// Upper-triangular 2x2 matrices as an SMA.
inline QuasiOrder upperTriangular2() {
    return QuasiOrder::make(2, {{0, 0}, {0, 1}, {1, 1}});
}

/// Complete relation on n indices (the SMA is all of M_n).
inline QuasiOrder fullRelation(int n) {
    std::vector<std::pair<int, int>> pairs;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) pairs.emplace_back(i, j);
    return QuasiOrder::make(n, std::move(pairs));
}

/// Disjoint complete blocks: the SMA is M_{k_1} + ... + M_{k_p} block-diagonal.
inline QuasiOrder blockRelation(const std::vector<int>& blocks) {
    std::vector<std::pair<int, int>> pairs;
    int off = 0;
    for (int k : blocks) {
        for (int r = 0; r < k; ++r)
            for (int c = 0; c < k; ++c) pairs.emplace_back(off + r, off + c);
        off += k;
    }
    return QuasiOrder::make(off, std::move(pairs));
}

inline std::vector<Cplx> toF(const GRVec& v) {
    std::vector<Cplx> out;
    out.reserve(v.size());
    for (const GaussRational& x : v) out.push_back(x.toComplex());
    return out;
}

} // namespace specmap::testing

#endif
