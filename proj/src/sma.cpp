#include "specmap/sma.hpp"

#include <Eigen/LU>
#include <Eigen/SVD>

#include <algorithm>
#include <queue>
#include <set>
#include <string>

#include "specmap/errors.hpp"
#include "specmap/rng.hpp"

namespace specmap {

namespace {
std::string pairStr(int i, int j) {
    return "(" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")";
}
} // namespace

QuasiOrder QuasiOrder::make(int n, std::vector<std::pair<int, int>> pairs) {
    if (n <= 0) throw ValidationError("quasi-order ground set must be nonempty");
    std::set<std::pair<int, int>> uniq;
    for (auto [i, j] : pairs) {
        if (i < 0 || i >= n || j < 0 || j >= n)
            throw ValidationError("pair index out of range: " + pairStr(i, j));
        uniq.insert({i, j});
    }
    QuasiOrder q;
    q.n = n;
    q.pairs.assign(uniq.begin(), uniq.end());
    q.table_.assign(static_cast<std::size_t>(n) * n, -1);
    for (std::size_t b = 0; b < q.pairs.size(); ++b)
        q.table_[q.pairs[b].first * n + q.pairs[b].second] = static_cast<int>(b);
    for (int i = 0; i < n; ++i)
        if (!q.has(i, i))
            throw ValidationError("relation not reflexive: missing " + pairStr(i, i));
    for (auto [i, j] : q.pairs)
        for (int k = 0; k < n; ++k)
            if (q.has(j, k) && !q.has(i, k))
                throw ValidationError("relation not transitive: " + pairStr(i, j) + "," +
                                      pairStr(j, k) + " present but " + pairStr(i, k) +
                                      " missing");
    return q;
}

QuasiOrder QuasiOrder::closed(int n, std::vector<std::pair<int, int>> pairs,
                              bool addDiagonal, bool addTransitive) {
    std::set<std::pair<int, int>> s(pairs.begin(), pairs.end());
    if (addDiagonal)
        for (int i = 0; i < n; ++i) s.insert({i, i});
    if (addTransitive) {
        bool grew = true;
        while (grew) {
            grew = false;
            std::vector<std::pair<int, int>> cur(s.begin(), s.end());
            for (auto [i, j] : cur)
                for (auto [j2, k] : cur)
                    if (j == j2 && s.insert({i, k}).second) grew = true;
        }
    }
    return make(n, {s.begin(), s.end()});
}

Condensation condensation(const QuasiOrder& rho) {
    const int n = rho.n;
    // mutual-reachability classes (rho is already transitive)
    std::vector<int> classId(n, -1);
    std::vector<std::vector<int>> members;
    for (int i = 0; i < n; ++i) {
        if (classId[i] >= 0) continue;
        const int c = static_cast<int>(members.size());
        members.push_back({});
        for (int j = i; j < n; ++j)
            if (classId[j] < 0 && rho.has(i, j) && rho.has(j, i)) {
                classId[j] = c;
                members[c].push_back(j);
            }
    }
    const int nc = static_cast<int>(members.size());
    // class DAG + Kahn topological order, ties by smallest original index
    std::vector<std::set<int>> succ(nc);
    std::vector<int> indeg(nc, 0);
    for (auto [i, j] : rho.pairs)
        if (classId[i] != classId[j] && succ[classId[i]].insert(classId[j]).second)
            ++indeg[classId[j]];
    auto cmp = [&](int a, int b) { return members[a][0] > members[b][0]; };
    std::priority_queue<int, std::vector<int>, decltype(cmp)> ready(cmp);
    for (int c = 0; c < nc; ++c)
        if (indeg[c] == 0) ready.push(c);
    Condensation out;
    out.perm.assign(n, -1);
    out.classOf.assign(n, -1);
    out.posInBlock.assign(n, -1);
    int pos = 0;
    while (!ready.empty()) {
        const int c = ready.top();
        ready.pop();
        const int blockIdx = static_cast<int>(out.blockSizes.size());
        out.blockSizes.push_back(static_cast<int>(members[c].size()));
        int within = 0;
        for (int v : members[c]) {
            out.perm[v] = pos++;
            out.classOf[v] = blockIdx;
            out.posInBlock[v] = within++;
        }
        for (int d : succ[c])
            if (--indeg[d] == 0) ready.push(d);
    }
    if (pos != n) throw ValidationError("condensation: cycle in class DAG (corrupt relation)");
    // permuted relation must be block upper-triangular
    for (auto [i, j] : rho.pairs)
        if (out.classOf[i] > out.classOf[j])
            throw ValidationError("condensation: pair " + pairStr(i, j) +
                                  " maps below the block diagonal");
    return out;
}

Algebra smaAlgebra(const QuasiOrder& rho) {
    const int dim = rho.dim();
    std::vector<TensorEntry> tensor;
    for (int b = 0; b < dim; ++b) {
        auto [i, j] = rho.pairs[b];
        for (int c = 0; c < dim; ++c) {
            auto [k, l] = rho.pairs[c];
            if (j != k) continue;
            const int target = rho.idx(i, l);
            if (target < 0)
                throw ValidationError("relation not transitive at " + pairStr(i, j) + "," +
                                      pairStr(k, l));
            tensor.emplace_back(b, c, target, GaussRational(1));
        }
    }
    GRVec unit(dim);
    std::vector<std::string> labels(dim);
    for (int b = 0; b < dim; ++b) {
        auto [i, j] = rho.pairs[b];
        labels[b] = "E" + std::to_string(i + 1) + "," + std::to_string(j + 1);
        if (i == j) unit[b] = GaussRational(1);
    }
    return Algebra::make(dim, tensor, std::move(unit), std::move(labels));
}

std::vector<GRVec> smaRadical(const QuasiOrder& rho, const Condensation& cond) {
    std::vector<GRVec> basis;
    for (int b = 0; b < rho.dim(); ++b) {
        auto [i, j] = rho.pairs[b];
        if (cond.classOf[i] != cond.classOf[j]) basis.push_back(basisVector(rho.dim(), b));
    }
    return basis;
}

Element blockProjection(const QuasiOrder& rho, const Condensation& cond, const Element& x) {
    if (x.alg->dim() != rho.dim()) throw ValidationError("element is not in this SMA");
    if (x.exact) {
        GRVec c = x.xq;
        for (int b = 0; b < rho.dim(); ++b)
            if (cond.classOf[rho.pairs[b].first] != cond.classOf[rho.pairs[b].second])
                c[b] = GaussRational();
        return exactElement(*x.alg, std::move(c));
    }
    std::vector<Cplx> c = x.xf;
    for (int b = 0; b < rho.dim(); ++b)
        if (cond.classOf[rho.pairs[b].first] != cond.classOf[rho.pairs[b].second])
            c[b] = Cplx{0, 0};
    return floatElement(*x.alg, std::move(c));
}

CMat smaToMatrix(const QuasiOrder& rho, const std::vector<Cplx>& coords) {
    if (static_cast<int>(coords.size()) != rho.dim())
        throw ValidationError("coordinate length does not match the SMA dimension");
    CMat m = CMat::Zero(rho.n, rho.n);
    for (int b = 0; b < rho.dim(); ++b) m(rho.pairs[b].first, rho.pairs[b].second) = coords[b];
    return m;
}

std::vector<Cplx> smaFromMatrix(const QuasiOrder& rho, const CMat& m, double offSupportTol) {
    std::vector<Cplx> coords(rho.dim());
    for (int i = 0; i < rho.n; ++i)
        for (int j = 0; j < rho.n; ++j) {
            const int b = rho.idx(i, j);
            if (b >= 0)
                coords[b] = m(i, j);
            else if (std::abs(m(i, j)) > offSupportTol)
                throw NumericError("matrix leaves the SMA: entry (" + std::to_string(i + 1) +
                                   "," + std::to_string(j + 1) + ") = " +
                                   std::to_string(std::abs(m(i, j))));
        }
    return coords;
}

DiagConjSample sampleDiagConj(const QuasiOrder& rho, const Algebra& a, std::uint64_t seed) {
    if (a.dim() != rho.dim()) throw ValidationError("algebra does not match the quasi-order");
    Rng rng(seed);
    const int n = rho.n;
    CMat s;
    bool ok = false;
    for (int attempt = 0; attempt < 16 && !ok; ++attempt) {
        std::vector<Cplx> coords(rho.dim());
        for (auto& c : coords) c = 0.5 * rng.symComplex();
        for (int i = 0; i < n; ++i) coords[rho.idx(i, i)] += 1.0; // S = 1 + 0.5*rand
        s = smaToMatrix(rho, coords);
        Eigen::JacobiSVD<CMat> svd(s);
        ok = svd.singularValues()(n - 1) > 1e-4;
    }
    if (!ok) throw NumericError("sampleDiagConj: failed to draw an invertible S");
    std::vector<Cplx> diag(n);
    CMat d = CMat::Zero(n, n);
    for (int i = 0; i < n; ++i) {
        diag[i] = Cplx(static_cast<double>(i + 1), 0) + 0.1 * rng.symComplex();
        d(i, i) = diag[i];
    }
    const CMat m = s * d * s.inverse();
    // S, D and S^{-1} (a polynomial in S) all lie in the SMA, so m does too.
    std::vector<Cplx> coords = smaFromMatrix(rho, m, 1e-8 * (1.0 + m.norm()));
    return {floatElement(a, std::move(coords)), s, std::move(diag)};
}

} // namespace specmap
