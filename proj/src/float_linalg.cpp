#include "specmap/float_linalg.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/LU>

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "specmap/errors.hpp"

namespace specmap {

void checkFinite(const CMat& m) {
    if (!m.allFinite()) throw NumericError("matrix contains non-finite entries");
}

double defaultTol(const CMat& m) {
    double mx = 0.0;
    for (Eigen::Index i = 0; i < m.rows(); ++i)
        for (Eigen::Index j = 0; j < m.cols(); ++j) mx = std::max(mx, std::abs(m(i, j)));
    return 1e-9 * (1.0 + mx);
}

std::vector<Cplx> eigenvalueMultiset(const CMat& m) {
    if (m.rows() != m.cols()) throw NumericError("eigenvalues of non-square matrix");
    checkFinite(m);
    if (m.rows() == 0) return {};
    Eigen::ComplexEigenSolver<CMat> es(m, /*computeEigenvectors=*/false);
    if (es.info() != Eigen::Success) throw NumericError("eigensolver failed to converge");
    const CVec ev = es.eigenvalues();
    return {ev.data(), ev.data() + ev.size()};
}

namespace {

// Union-find single linkage with per-pair merge radii.
std::vector<Cplx> linkAndAverage(const std::vector<Cplx>& pts,
                                 const std::vector<double>& radius) {
    const std::size_t n = pts.size();
    std::vector<std::size_t> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](std::size_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (std::abs(pts[i] - pts[j]) <= std::max(radius[i], radius[j]))
                parent[find(i)] = find(j);
    std::vector<Cplx> sum(n, Cplx{0, 0});
    std::vector<int> cnt(n, 0);
    for (std::size_t i = 0; i < n; ++i) {
        const std::size_t r = find(i);
        sum[r] += pts[i];
        ++cnt[r];
    }
    std::vector<Cplx> out;
    for (std::size_t i = 0; i < n; ++i)
        if (cnt[i] > 0) out.push_back(sum[i] / static_cast<double>(cnt[i]));
    std::sort(out.begin(), out.end(), [](Cplx a, Cplx b) {
        return a.real() != b.real() ? a.real() < b.real() : a.imag() < b.imag();
    });
    return out;
}

} // namespace

std::vector<Cplx> clusterCentroids(const std::vector<Cplx>& pts, double tol) {
    return linkAndAverage(pts, std::vector<double>(pts.size(), tol));
}

EigenSet floatEigenvalues(const CMat& m, double tol) {
    EigenSet r;
    r.multiset = eigenvalueMultiset(m);
    r.set = clusterCentroids(r.multiset, tol);
    return r;
}

std::vector<Cplx> spectrumSet(const CMat& m, double tol) {
    if (m.rows() != m.cols()) throw NumericError("spectrum of non-square matrix");
    checkFinite(m);
    if (m.rows() == 0) return {};
    Eigen::ComplexEigenSolver<CMat> es(m, /*computeEigenvectors=*/true);
    if (es.info() != Eigen::Success) throw NumericError("eigensolver failed to converge");
    const CVec ev = es.eigenvalues();
    const CMat v = es.eigenvectors();
    const std::size_t n = static_cast<std::size_t>(ev.size());
    const double scale = m.norm();
    const double eps = std::numeric_limits<double>::epsilon();
    // kappa_i = ||row i of V^{-1}|| (columns of V are unit); a huge value
    // flags an ill-conditioned (near-defective) eigenvalue.
    CMat vinv;
    bool haveInv = true;
    Eigen::FullPivLU<CMat> lu(v);
    if (lu.isInvertible()) {
        vinv = lu.inverse();
    } else {
        haveInv = false;
    }
    const double cap = 0.05 * (1.0 + scale);
    std::vector<double> radius(n);
    std::vector<Cplx> pts(n);
    for (std::size_t i = 0; i < n; ++i) {
        pts[i] = ev(static_cast<Eigen::Index>(i));
        double kappa = haveInv ? vinv.row(static_cast<Eigen::Index>(i)).norm() : 1.0 / eps;
        double err = 16.0 * eps * scale * kappa;
        radius[i] = std::min(std::max(err, tol), cap);
    }
    return linkAndAverage(pts, radius);
}

std::vector<Cplx> charPoly(const CMat& m) {
    const std::vector<Cplx> ev = eigenvalueMultiset(m);
    std::vector<Cplx> c{Cplx{1, 0}};
    for (Cplx lambda : ev) {
        // multiply by (x - lambda), coefficients kept in descending powers
        c.push_back(Cplx{0, 0});
        for (std::size_t j = c.size() - 1; j > 0; --j) c[j] -= lambda * c[j - 1];
    }
    return c;
}

double distToSet(Cplx z, const std::vector<Cplx>& set) {
    double d = std::numeric_limits<double>::infinity();
    for (Cplx s : set) d = std::min(d, std::abs(z - s));
    return d;
}

double directedHausdorff(const std::vector<Cplx>& a, const std::vector<Cplx>& b) {
    double d = 0.0;
    for (Cplx z : a) d = std::max(d, distToSet(z, b));
    return d;
}

double hausdorff(const std::vector<Cplx>& a, const std::vector<Cplx>& b) {
    return std::max(directedHausdorff(a, b), directedHausdorff(b, a));
}

} // namespace specmap
