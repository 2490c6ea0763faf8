#ifndef SPECMAP_MAPBUILDER_HPP
#define SPECMAP_MAPBUILDER_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "specmap/sma.hpp"
#include "specmap/wedderburn.hpp"

namespace specmap {

/// Linear map reading the i-th source block out of an element's coordinates:
/// a k^2 x dim(A) matrix whose output is the row-major vec of X_i in M_k.
/// SMA sources get exact 0/1 readers; general sources get float readers
/// composed from the quotient projection and component isomorphisms.
struct BlockReader {
    int k = 0;
    bool exact = false;
    std::optional<ExactMatrix> exactMap;
    CMat floatMap; // always populated (float image of exactMap when exact)
};

struct SourcePipeline {
    bool sma = false;
    int dimA = 0;
    std::vector<int> ks; // ascending, aligned with readers
    std::vector<BlockReader> readers;
};

/// The constructed block-repetition map phi = (phi_1,...,phi_q):
/// phi_j places source block X_i on the diagonal exactly family[j][i] times.
struct ShrinkMapSpec {
    SourcePipeline source;
    std::vector<int> targets;                 // m_1,...,m_q
    std::vector<std::vector<int>> family;     // q x p repetition counts
    std::vector<std::vector<int>> blockOrder; // per j: source block index per slot, ascending
};

/// SMA source: condensation blocks sorted by size ascending (stable), exact
/// coordinate readers per block.
SourcePipeline makeSmaPipeline(const QuasiOrder& rho, const Condensation& cond);

/// General source: quotient to the semisimple part, then explicit component
/// isomorphisms (splitSimpleComponent) composed into per-block linear maps.
SourcePipeline makeGeneralPipeline(const Algebra& a, const WedderburnProfile& prof,
                                   std::uint64_t seed, double tol);

/// Validates sum_i ks[i]*family[j][i] = targets[j] and lays out blocks in
/// ascending source index with contiguous repetitions.
ShrinkMapSpec buildBlockMap(SourcePipeline source, const std::vector<int>& targets,
                            const std::vector<std::vector<int>>& family);

/// Per-source-block images X_i of an element (by coordinates).
std::vector<CMat> evaluateBlocks(const ShrinkMapSpec& spec, const std::vector<Cplx>& coords);

/// Full block-diagonal image of size sum(targets).
CMat evaluateMap(const ShrinkMapSpec& spec, const std::vector<Cplx>& coords);

/// Image of one coordinate map phi_j (an m_j x m_j block-diagonal matrix).
CMat evaluateTarget(const ShrinkMapSpec& spec, const std::vector<Cplx>& coords, int j);

std::string mapSpecToJson(const ShrinkMapSpec& spec);
ShrinkMapSpec mapSpecFromJson(const std::string& text);

} // namespace specmap

#endif
