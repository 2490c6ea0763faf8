#ifndef SPECMAP_WEDDERBURN_HPP
#define SPECMAP_WEDDERBURN_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "specmap/algebra.hpp"

namespace specmap {

/// One simple component of a semisimple algebra.
struct Component {
    int k = 0;                        // component is isomorphic to M_k
    CMat basis;                       // dim(Abar) x k^2, orthonormal columns
    std::vector<Cplx> idempotent;     // coordinates of the primitive central idempotent
    std::optional<GRVec> idempotentExact; // rationalized + exactly verified, when possible
};

struct WedderburnProfile {
    int dim = 0;
    IdealBasis radical;
    Algebra semisimple;               // A / rad(A)
    ExactMatrix quotientProjection;   // exact, multiplicative, unital
    std::vector<int> quotientReps;
    int p = 0;
    std::vector<int> ks;              // ascending with multiplicity
    std::vector<Component> components; // same order as ks
    std::vector<IdealBasis> maximalIdeals; // exact preimages under Q; may be empty
    bool maximalIdealsExact = false;
};

/// Exact radical basis via the characteristic-zero trace-form criterion:
/// kernel of G_{uv} = tr(L_{e_u e_v}). Verified to be a two-sided nilpotent
/// ideal when verify = true.
std::vector<GRVec> radicalBasis(const Algebra& a, bool verify = true);

/// Splits a semisimple algebra into simple components. The center is computed
/// exactly (p is exact); the primitive central idempotents come from Lagrange
/// interpolation at the eigenvalues of a random center element (retried on
/// eigenvalue collision, 16-seed budget).
std::vector<Component> splitSemisimple(const Algebra& abar, std::uint64_t seed, double tol);

/// Full pipeline: radical -> quotient -> split; ks sorted ascending and all
/// per-component data ordered consistently with ks.
WedderburnProfile wedderburnProfile(const Algebra& a, std::uint64_t seed = 0,
                                    double tol = 1e-8);

/// Explicit isomorphism component -> M_k, returned as the k^2 x dim(abar)
/// matrix of the linear map x |-> psi(e_t x) (row-major vec of the image).
/// Multiplicativity is verified on a budget of random pairs.
CMat splitSimpleComponent(const Algebra& abar, const Component& comp, std::uint64_t seed,
                          double tol);

/// Exact dimension of the center (solutions of ze_i = e_i z for all i).
std::vector<GRVec> centerBasis(const Algebra& a);

} // namespace specmap

#endif
