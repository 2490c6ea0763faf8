#ifndef SPECMAP_FLOAT_LINALG_HPP
#define SPECMAP_FLOAT_LINALG_HPP

#include <Eigen/Core>

#include <complex>
#include <vector>

namespace specmap {

using Cplx = std::complex<double>;
using CMat = Eigen::MatrixXcd;
using CVec = Eigen::VectorXcd;

/// Throws NumericError when the matrix contains NaN/Inf.
void checkFinite(const CMat& m);

/// Default clustering tolerance: 1e-9 * (1 + max|entry|).
double defaultTol(const CMat& m);

/// Eigenvalue multiset of a square matrix (size = dim).
std::vector<Cplx> eigenvalueMultiset(const CMat& m);

/// Single-linkage clustering at distance <= tol; returns cluster centroids.
std::vector<Cplx> clusterCentroids(const std::vector<Cplx>& pts, double tol);

struct EigenSet {
    std::vector<Cplx> multiset; // raw eigenvalues, size = dim
    std::vector<Cplx> set;      // deduplicated (clustered) values
};

/// Multiset plus plain-clustered set per the float_eigenvalues contract.
EigenSet floatEigenvalues(const CMat& m, double tol);

/// Deduplicated eigenvalue set with condition-aware clustering: each
/// eigenvalue carries an error estimate eps*||M||*kappa_i from eigenvector
/// conditioning, and the merge radius scales with it. Defective eigenvalues
/// (huge kappa) collapse to their cluster centroid, which is accurate to
/// O(eps) since eigenvalue sums are trace-stable.
std::vector<Cplx> spectrumSet(const CMat& m, double tol);

/// Monic characteristic polynomial coefficients, descending powers
/// (coeffs[0] = 1, size = dim+1). Expanded from computed eigenvalues.
std::vector<Cplx> charPoly(const CMat& m);

double distToSet(Cplx z, const std::vector<Cplx>& set);
/// max over a of dist(a, b).
double directedHausdorff(const std::vector<Cplx>& a, const std::vector<Cplx>& b);
double hausdorff(const std::vector<Cplx>& a, const std::vector<Cplx>& b);

} // namespace specmap

#endif
