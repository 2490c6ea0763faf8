#include "specmap/wedderburn.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

#include <algorithm>
#include <cmath>
#include <string>

#include "specmap/errors.hpp"
#include "specmap/rng.hpp"

namespace specmap {

namespace {

double maxAbs(const std::vector<Cplx>& v) {
    double m = 0.0;
    for (Cplx z : v) m = std::max(m, std::abs(z));
    return m;
}

std::vector<Cplx> scaleVec(const std::vector<Cplx>& v, Cplx f) {
    std::vector<Cplx> r(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) r[i] = v[i] * f;
    return r;
}

std::vector<Cplx> subVec(const std::vector<Cplx>& a, const std::vector<Cplx>& b) {
    std::vector<Cplx> r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

bool isPerfectSquare(int x, int& root) {
    root = static_cast<int>(std::lround(std::sqrt(static_cast<double>(x))));
    return root * root == x;
}

} // namespace

std::vector<GRVec> centerBasis(const Algebra& a) {
    const int n = a.dim();
    // incrementally intersect the kernels of L_{e_i} - R_{e_i}
    ExactMatrix k = ExactMatrix::identity(n);
    for (int i = 0; i < n && k.cols() > 1; ++i) {
        const GRVec ei = basisVector(n, i);
        ExactMatrix m = a.leftRegular(ei);
        const ExactMatrix r = a.rightRegular(ei);
        for (int u = 0; u < n; ++u)
            for (int v = 0; v < n; ++v) m.at(u, v) -= r.at(u, v);
        const std::vector<GRVec> ker = (m * k).kernel();
        k = k * ExactMatrix::fromColumns(ker);
        if (ker.empty()) break;
    }
    std::vector<GRVec> basis;
    for (std::size_t j = 0; j < k.cols(); ++j) basis.push_back(k.column(j));
    return basis;
}

std::vector<GRVec> radicalBasis(const Algebra& a, bool verify) {
    const int n = a.dim();
    // Gram matrix of the trace form, G_{uv} = tr(L_{e_u e_v})
    GRVec traces(n);
    for (int l = 0; l < n; ++l) traces[l] = a.basisTrace(l);
    ExactMatrix g(n, n);
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v)
            for (const SparseTerm& t : a.basisProduct(u, v)) g.at(u, v) += t.c * traces[t.k];
    std::vector<GRVec> rad = g.kernel();
    if (verify && !rad.empty()) {
        validateIdeal(a, rad);
        // nilpotency: powers of the span must vanish within dim steps
        std::vector<GRVec> cur = rad;
        for (int power = 2; !cur.empty(); ++power) {
            if (power > n + 1)
                throw ValidationError("radical candidate is not nilpotent (internal inconsistency)");
            RowSpace next(n);
            std::vector<GRVec> nb;
            for (const GRVec& x : cur)
                for (const GRVec& y : rad) {
                    GRVec p = a.mul(x, y);
                    if (next.add(p)) nb.push_back(std::move(p));
                }
            cur = std::move(nb);
        }
    }
    return rad;
}

std::vector<Component> splitSemisimple(const Algebra& abar, std::uint64_t seed, double tol) {
    const int d = abar.dim();
    if (!radicalBasis(abar, false).empty())
        throw ValidationError("splitSemisimple requires a semisimple algebra");
    const std::vector<GRVec> center = centerBasis(abar);
    const int p = static_cast<int>(center.size());

    std::vector<Component> comps;
    if (p == 1) {
        int k = 0;
        if (!isPerfectSquare(d, k))
            throw ValidationError("simple algebra dimension is not a perfect square");
        Component c;
        c.k = k;
        c.basis = CMat::Identity(d, d);
        c.idempotent = abar.unitF();
        c.idempotentExact = abar.unit();
        comps.push_back(std::move(c));
        return comps;
    }

    CMat centerF(d, p);
    for (int j = 0; j < p; ++j)
        for (int i = 0; i < d; ++i) centerF(i, j) = center[j][i].toComplex();

    const std::vector<Cplx> unitF = abar.unitF();
    std::string lastFailure = "no attempt made";
    for (int attempt = 0; attempt < 16; ++attempt) {
        Rng rng(seed * 1315423911ULL + static_cast<std::uint64_t>(attempt) + 1);
        std::vector<Cplx> z(d, Cplx{0, 0});
        for (int j = 0; j < p; ++j) {
            const Cplx coeff = rng.symComplex();
            for (int i = 0; i < d; ++i) z[i] += coeff * centerF(i, j);
        }
        const std::vector<Cplx> evs = eigenvalueMultiset(abar.leftRegularF(z));
        const double clusterTol = 1e-6 * (1.0 + maxAbs(evs));
        const std::vector<Cplx> lambdas = clusterCentroids(evs, clusterTol);
        if (static_cast<int>(lambdas.size()) != p) {
            lastFailure = "center element had " + std::to_string(lambdas.size()) +
                          " eigenvalue clusters, expected " + std::to_string(p);
            continue;
        }
        // Lagrange spectral idempotents of z
        std::vector<std::vector<Cplx>> idems;
        for (int t = 0; t < p; ++t) {
            std::vector<Cplx> u = unitF;
            for (int s = 0; s < p; ++s) {
                if (s == t) continue;
                std::vector<Cplx> zShift = subVec(z, scaleVec(unitF, lambdas[s]));
                u = scaleVec(abar.mulF(u, zShift), 1.0 / (lambdas[t] - lambdas[s]));
            }
            idems.push_back(std::move(u));
        }
        // residual checks: orthogonality, idempotency, partition of unity
        const double scale = 1.0 + maxAbs(z);
        double residual = 0.0;
        std::vector<Cplx> sum(d, Cplx{0, 0});
        for (int t = 0; t < p; ++t) {
            for (int i = 0; i < d; ++i) sum[i] += idems[t][i];
            residual = std::max(residual, maxAbs(subVec(abar.mulF(idems[t], idems[t]), idems[t])));
            for (int s = t + 1; s < p; ++s)
                residual = std::max(residual, maxAbs(abar.mulF(idems[t], idems[s])));
        }
        residual = std::max(residual, maxAbs(subVec(sum, unitF)));
        if (residual > tol * scale * 100) {
            lastFailure = "idempotent residual " + std::to_string(residual);
            continue;
        }
        // component subspaces e_t * Abar; dimensions must be perfect squares
        bool ok = true;
        comps.clear();
        int dimSum = 0;
        for (int t = 0; t < p && ok; ++t) {
            CMat span(d, d);
            for (int j = 0; j < d; ++j) {
                std::vector<Cplx> ej(d, Cplx{0, 0});
                ej[j] = Cplx{1, 0};
                const std::vector<Cplx> col = abar.mulF(idems[t], ej);
                for (int i = 0; i < d; ++i) span(i, j) = col[i];
            }
            Eigen::BDCSVD<CMat> svd(span, Eigen::ComputeThinU);
            const auto& sv = svd.singularValues();
            const double svTol = 1e-7 * (1.0 + sv(0));
            int rank = 0;
            while (rank < sv.size() && sv(rank) > svTol) ++rank;
            int k = 0;
            if (!isPerfectSquare(rank, k)) {
                lastFailure = "component dimension " + std::to_string(rank) +
                              " is not a perfect square";
                ok = false;
                break;
            }
            Component c;
            c.k = k;
            c.basis = svd.matrixU().leftCols(rank);
            c.idempotent = idems[t];
            comps.push_back(std::move(c));
            dimSum += rank;
        }
        if (!ok) continue;
        if (dimSum != d) {
            lastFailure = "component dimensions sum to " + std::to_string(dimSum) +
                          ", expected " + std::to_string(d);
            continue;
        }
        // try to rationalize idempotents; exactness is optional
        for (Component& c : comps) {
            GRVec exact(d);
            bool exactOk = true;
            for (int i = 0; i < d && exactOk; ++i)
                exactOk = rationalReconstruct(c.idempotent[i], 1000000, 1e-6, exact[i]);
            if (exactOk) {
                exactOk = abar.mul(exact, exact) == exact;
                for (int i = 0; i < d && exactOk; ++i) {
                    const GRVec ei = basisVector(d, i);
                    exactOk = abar.mul(exact, ei) == abar.mul(ei, exact);
                }
                if (exactOk)
                    exactOk = abar.leftRegular(exact).rank() ==
                              static_cast<std::size_t>(c.k) * static_cast<std::size_t>(c.k);
            }
            if (exactOk) c.idempotentExact = std::move(exact);
        }
        std::stable_sort(comps.begin(), comps.end(),
                         [](const Component& a, const Component& b) { return a.k < b.k; });
        return comps;
    }
    throw NumericError("splitSemisimple: retry budget exhausted; last failure: " + lastFailure);
}

WedderburnProfile wedderburnProfile(const Algebra& a, std::uint64_t seed, double tol) {
    WedderburnProfile prof;
    prof.dim = a.dim();
    std::vector<GRVec> rad = radicalBasis(a, true);
    Quotient q = quotientAlgebra(a, rad, /*validate=*/false); // radical is verified above

    // quotient trace form must be nondegenerate (semisimplicity, exact)
    if (!radicalBasis(q.algebra, false).empty())
        throw ValidationError("quotient by the radical is not semisimple (internal inconsistency)");

    prof.radical = IdealBasis{&a, rad};
    prof.components = splitSemisimple(q.algebra, seed, tol);
    prof.p = static_cast<int>(prof.components.size());
    for (const Component& c : prof.components) prof.ks.push_back(c.k);

    int sq = 0;
    for (int k : prof.ks) sq += k * k;
    if (sq + static_cast<int>(rad.size()) != a.dim())
        throw ValidationError("profile dimension bookkeeping failed (internal inconsistency)");

    // exact maximal ideals when every idempotent rationalized:
    // M_i = Q^{-1}(sum of all components except i) = rad + lift(ker L_{e_i})
    prof.maximalIdealsExact =
        std::all_of(prof.components.begin(), prof.components.end(),
                    [](const Component& c) { return c.idempotentExact.has_value(); });
    if (prof.maximalIdealsExact) {
        for (const Component& c : prof.components) {
            std::vector<GRVec> vecs = rad;
            for (const GRVec& v : q.algebra.leftRegular(*c.idempotentExact).kernel()) {
                GRVec lifted(a.dim());
                for (std::size_t j = 0; j < v.size(); ++j) lifted[q.reps[j]] = v[j];
                vecs.push_back(std::move(lifted));
            }
            if (static_cast<int>(vecs.size()) != a.dim() - c.k * c.k)
                throw ValidationError("maximal ideal codimension mismatch (internal inconsistency)");
            prof.maximalIdeals.push_back(IdealBasis{&a, std::move(vecs)});
        }
    }
    prof.semisimple = std::move(q.algebra);
    prof.quotientProjection = std::move(q.projection);
    prof.quotientReps = std::move(q.reps);
    // IdealBasis in maximalIdeals references `a`, which the caller owns.
    return prof;
}

CMat splitSimpleComponent(const Algebra& abar, const Component& comp, std::uint64_t seed,
                          double tol) {
    const int d = abar.dim();
    const int k = comp.k;
    const int k2 = k * k;
    std::string lastFailure = "no attempt made";
    for (int attempt = 0; attempt < 16; ++attempt) {
        Rng rng(seed * 2654435761ULL + static_cast<std::uint64_t>(attempt) + 1);
        // rank-one idempotent e inside the component
        std::vector<Cplx> e;
        if (k == 1) {
            e = comp.idempotent;
        } else {
            std::vector<Cplx> elem(d, Cplx{0, 0});
            for (int j = 0; j < k2; ++j) {
                const Cplx coeff = rng.symComplex();
                for (int i = 0; i < d; ++i) elem[i] += coeff * comp.basis(i, j);
            }
            // eigenvalues of L_elem restricted to the component
            CMat la(d, k2);
            for (int j = 0; j < k2; ++j) {
                std::vector<Cplx> col(d);
                for (int i = 0; i < d; ++i) col[i] = comp.basis(i, j);
                const std::vector<Cplx> prod = abar.mulF(elem, col);
                for (int i = 0; i < d; ++i) la(i, j) = prod[i];
            }
            const CMat restricted = comp.basis.adjoint() * la;
            const std::vector<Cplx> evs = eigenvalueMultiset(restricted);
            const std::vector<Cplx> lambdas =
                clusterCentroids(evs, 1e-6 * (1.0 + maxAbs(evs)));
            if (static_cast<int>(lambdas.size()) != k) {
                lastFailure = "component element had " + std::to_string(lambdas.size()) +
                              " distinct eigenvalues, expected " + std::to_string(k);
                continue;
            }
            e = comp.idempotent; // unit of the component
            for (int s = 1; s < k; ++s) {
                std::vector<Cplx> shift = subVec(elem, scaleVec(comp.idempotent, lambdas[s]));
                e = scaleVec(abar.mulF(e, shift), 1.0 / (lambdas[0] - lambdas[s]));
            }
        }
        // left module (component)*e has dimension k
        CMat module(d, k2);
        for (int j = 0; j < k2; ++j) {
            std::vector<Cplx> col(d);
            for (int i = 0; i < d; ++i) col[i] = comp.basis(i, j);
            const std::vector<Cplx> prod = abar.mulF(col, e);
            for (int i = 0; i < d; ++i) module(i, j) = prod[i];
        }
        Eigen::BDCSVD<CMat> svd(module, Eigen::ComputeThinU);
        const auto& sv = svd.singularValues();
        const double svTol = 1e-7 * (1.0 + sv(0));
        int rank = 0;
        while (rank < sv.size() && sv(rank) > svTol) ++rank;
        if (rank != k) {
            lastFailure = "module dimension " + std::to_string(rank) + ", expected " +
                          std::to_string(k);
            continue;
        }
        const CMat v = svd.matrixU().leftCols(k);
        // psi(x) = V^H L_x V; assemble as a k^2 x d matrix (row-major vec)
        CMat psi(k2, d);
        for (int b = 0; b < d; ++b) {
            std::vector<Cplx> eb(d, Cplx{0, 0});
            eb[b] = Cplx{1, 0};
            CMat lv(d, k);
            for (int c = 0; c < k; ++c) {
                std::vector<Cplx> col(d);
                for (int i = 0; i < d; ++i) col[i] = v(i, c);
                const std::vector<Cplx> prod = abar.mulF(eb, col);
                for (int i = 0; i < d; ++i) lv(i, c) = prod[i];
            }
            const CMat m = v.adjoint() * lv;
            for (int r = 0; r < k; ++r)
                for (int c = 0; c < k; ++c) psi(r * k + c, b) = m(r, c);
        }
        // verification: unit and multiplicativity on a fixed budget of pairs
        auto apply = [&](const std::vector<Cplx>& x) {
            CMat m(k, k);
            for (int r = 0; r < k; ++r)
                for (int c = 0; c < k; ++c) {
                    Cplx acc{0, 0};
                    for (int b = 0; b < d; ++b) acc += psi(r * k + c, b) * x[b];
                    m(r, c) = acc;
                }
            return m;
        };
        double residual = (apply(abar.unitF()) - CMat::Identity(k, k)).norm();
        for (int trial = 0; trial < 20; ++trial) {
            std::vector<Cplx> x(d), y(d);
            for (auto& c : x) c = rng.symComplex();
            for (auto& c : y) c = rng.symComplex();
            const CMat lhs = apply(abar.mulF(x, y));
            const CMat rhs = apply(x) * apply(y);
            residual = std::max(residual, (lhs - rhs).norm() / (1.0 + rhs.norm()));
        }
        if (residual > 100 * tol) {
            lastFailure = "multiplicativity residual " + std::to_string(residual);
            continue;
        }
        return psi;
    }
    throw NumericError("splitSimpleComponent: retry budget exhausted; last failure: " +
                       lastFailure);
}

} // namespace specmap
