#ifndef SPECMAP_ALGEBRA_HPP
#define SPECMAP_ALGEBRA_HPP

#include <cstdint>
#include <string>
#include <tuple>
#include <vector>

#include "specmap/exact_matrix.hpp"
#include "specmap/float_linalg.hpp"

namespace specmap {

struct SparseTerm {
    int k;
    GaussRational c;
};
using SparseVec = std::vector<SparseTerm>;

/// Structure-constant tensor entry: e_i * e_j contains c * e_k.
using TensorEntry = std::tuple<int, int, int, GaussRational>;

/// A unital finite-dimensional complex algebra given by an exact sparse
/// structure-constant tensor. Associativity and the unit laws are verified
/// exactly on construction; instances are immutable.
class Algebra {
public:
    Algebra() = default; // empty placeholder; real instances come from make()

    static Algebra make(int dim, const std::vector<TensorEntry>& tensor, GRVec unit,
                        std::vector<std::string> labels = {});

    int dim() const { return dim_; }
    const SparseVec& basisProduct(int i, int j) const { return prod_[i * dim_ + j]; }
    const GRVec& unit() const { return unit_; }
    std::vector<Cplx> unitF() const;
    const std::vector<std::string>& labels() const { return labels_; }

    GRVec mul(const GRVec& x, const GRVec& y) const;
    std::vector<Cplx> mulF(const std::vector<Cplx>& x, const std::vector<Cplx>& y) const;

    /// Left regular representation L_x: column j = coordinates of x * e_j.
    ExactMatrix leftRegular(const GRVec& x) const;
    ExactMatrix rightRegular(const GRVec& x) const; // column j = e_j * x
    CMat leftRegularF(const std::vector<Cplx>& x) const;

    /// tr(L_{e_l}); building block for the trace Gram matrix.
    GaussRational basisTrace(int l) const;

    /// Enumerates the structure tensor as (i, j, k, c) with c nonzero.
    std::vector<TensorEntry> tensorEntries() const;

private:
    void validate() const;

    int dim_ = 0;
    std::vector<SparseVec> prod_; // index i*dim+j
    GRVec unit_;
    std::vector<std::string> labels_;
};

/// Element of an algebra: exact coordinates (tagged) or float coordinates.
/// Float coordinates are always populated.
struct Element {
    const Algebra* alg = nullptr;
    bool exact = false;
    GRVec xq;              // valid when exact
    std::vector<Cplx> xf;  // always valid
};

Element exactElement(const Algebra& a, GRVec coords);
Element floatElement(const Algebra& a, std::vector<Cplx> coords);

CMat regularRep(const Element& e);
ExactMatrix regularRepExact(const Element& e); // requires exact coordinates

/// Deduplicated eigenvalue set of the left regular representation
/// (condition-aware clustering, base tolerance tol). Nonempty.
std::vector<Cplx> spectrum(const Element& e, double tol);

/// Exact path: rank(L_a) = dim; float path: 0 not in spectrum.
bool isInvertible(const Element& e);

/// Coordinates i.i.d. with re/im uniform on [-1,1]; deterministic in seed.
Element randomElement(const Algebra& a, std::uint64_t seed);

/// Exact two-sided-ideal check; throws ValidationError with a witness
/// (basis element whose product leaves the span) when it fails.
void validateIdeal(const Algebra& a, const std::vector<GRVec>& vectors);

struct IdealBasis {
    const Algebra* alg = nullptr;
    std::vector<GRVec> vectors;
};

struct Quotient {
    Algebra algebra;
    ExactMatrix projection;     // (dim - |I|) x dim, exact
    std::vector<int> reps;      // standard basis indices representing cosets
};

/// Quotient by a two-sided ideal. Basis: ideal basis greedily extended by
/// standard basis vectors; the quotient map is exact and multiplicative.
Quotient quotientAlgebra(const Algebra& a, const std::vector<GRVec>& ideal,
                         bool validate = true);

/// M_{k_1} + ... + M_{k_p} as block-diagonal matrix units.
Algebra directSumAlgebra(const std::vector<int>& blocks);

/// Basis change: new basis f_j = sum_i T(i,j) e_i; T exact invertible.
Algebra conjugateBasis(const Algebra& a, const ExactMatrix& t);

GRVec basisVector(int dim, int j);

} // namespace specmap

#endif
