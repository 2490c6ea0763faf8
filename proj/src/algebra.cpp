#include "specmap/algebra.hpp"

#include <algorithm>
#include <map>

#include "specmap/errors.hpp"
#include "specmap/rng.hpp"

namespace specmap {

GRVec basisVector(int dim, int j) {
    GRVec v(dim);
    v[j] = GaussRational(1);
    return v;
}

Algebra Algebra::make(int dim, const std::vector<TensorEntry>& tensor, GRVec unit,
                      std::vector<std::string> labels) {
    if (dim <= 0) throw ValidationError("algebra dimension must be positive");
    if (static_cast<int>(unit.size()) != dim)
        throw ValidationError("unit vector length does not match dimension");
    Algebra a;
    a.dim_ = dim;
    a.prod_.assign(static_cast<std::size_t>(dim) * dim, {});
    std::map<std::tuple<int, int, int>, GaussRational> acc;
    for (const auto& [i, j, k, c] : tensor) {
        if (i < 0 || i >= dim || j < 0 || j >= dim || k < 0 || k >= dim)
            throw ValidationError("structure tensor index out of range");
        acc[{i, j, k}] += c;
    }
    for (const auto& [key, c] : acc) {
        if (c.isZero()) continue;
        const auto& [i, j, k] = key;
        a.prod_[i * dim + j].push_back({k, c});
    }
    a.unit_ = std::move(unit);
    a.labels_ = std::move(labels);
    a.validate();
    return a;
}

void Algebra::validate() const {
    // unit laws, exact
    for (int j = 0; j < dim_; ++j) {
        const GRVec ej = basisVector(dim_, j);
        if (mul(unit_, ej) != ej || mul(ej, unit_) != ej)
            throw ValidationError("unit law fails at basis element " + std::to_string(j));
    }
    // associativity on all basis triples, exact
    for (int i = 0; i < dim_; ++i)
        for (int j = 0; j < dim_; ++j) {
            const SparseVec& pij = basisProduct(i, j);
            for (int k = 0; k < dim_; ++k) {
                GRVec lhs(dim_), rhs(dim_);
                for (const SparseTerm& t : pij)
                    for (const SparseTerm& u : basisProduct(t.k, k)) lhs[u.k] += t.c * u.c;
                for (const SparseTerm& t : basisProduct(j, k))
                    for (const SparseTerm& u : basisProduct(i, t.k)) rhs[u.k] += t.c * u.c;
                if (lhs != rhs)
                    throw ValidationError("associativity fails at triple (" + std::to_string(i) +
                                          "," + std::to_string(j) + "," + std::to_string(k) + ")");
            }
        }
}

std::vector<Cplx> Algebra::unitF() const {
    std::vector<Cplx> u(dim_);
    for (int i = 0; i < dim_; ++i) u[i] = unit_[i].toComplex();
    return u;
}

GRVec Algebra::mul(const GRVec& x, const GRVec& y) const {
    GRVec r(dim_);
    for (int i = 0; i < dim_; ++i) {
        if (x[i].isZero()) continue;
        for (int j = 0; j < dim_; ++j) {
            if (y[j].isZero()) continue;
            const GaussRational f = x[i] * y[j];
            for (const SparseTerm& t : basisProduct(i, j)) r[t.k] += f * t.c;
        }
    }
    return r;
}

std::vector<Cplx> Algebra::mulF(const std::vector<Cplx>& x, const std::vector<Cplx>& y) const {
    std::vector<Cplx> r(dim_, Cplx{0, 0});
    for (int i = 0; i < dim_; ++i) {
        if (x[i] == Cplx{0, 0}) continue;
        for (int j = 0; j < dim_; ++j) {
            if (y[j] == Cplx{0, 0}) continue;
            const Cplx f = x[i] * y[j];
            for (const SparseTerm& t : basisProduct(i, j)) r[t.k] += f * t.c.toComplex();
        }
    }
    return r;
}

ExactMatrix Algebra::leftRegular(const GRVec& x) const {
    ExactMatrix m(dim_, dim_);
    for (int i = 0; i < dim_; ++i) {
        if (x[i].isZero()) continue;
        for (int j = 0; j < dim_; ++j)
            for (const SparseTerm& t : basisProduct(i, j)) m.at(t.k, j) += x[i] * t.c;
    }
    return m;
}

ExactMatrix Algebra::rightRegular(const GRVec& x) const {
    ExactMatrix m(dim_, dim_);
    for (int j = 0; j < dim_; ++j)
        for (int i = 0; i < dim_; ++i) {
            if (x[i].isZero()) continue;
            for (const SparseTerm& t : basisProduct(j, i)) m.at(t.k, j) += x[i] * t.c;
        }
    return m;
}

CMat Algebra::leftRegularF(const std::vector<Cplx>& x) const {
    CMat m = CMat::Zero(dim_, dim_);
    for (int i = 0; i < dim_; ++i) {
        if (x[i] == Cplx{0, 0}) continue;
        for (int j = 0; j < dim_; ++j)
            for (const SparseTerm& t : basisProduct(i, j)) m(t.k, j) += x[i] * t.c.toComplex();
    }
    return m;
}

GaussRational Algebra::basisTrace(int l) const {
    GaussRational tr;
    for (int j = 0; j < dim_; ++j)
        for (const SparseTerm& t : basisProduct(l, j))
            if (t.k == j) tr += t.c;
    return tr;
}

std::vector<TensorEntry> Algebra::tensorEntries() const {
    std::vector<TensorEntry> out;
    for (int i = 0; i < dim_; ++i)
        for (int j = 0; j < dim_; ++j)
            for (const SparseTerm& t : basisProduct(i, j)) out.emplace_back(i, j, t.k, t.c);
    return out;
}

Element exactElement(const Algebra& a, GRVec coords) {
    if (static_cast<int>(coords.size()) != a.dim())
        throw ValidationError("element coordinate length mismatch");
    Element e;
    e.alg = &a;
    e.exact = true;
    e.xf.resize(coords.size());
    for (std::size_t i = 0; i < coords.size(); ++i) e.xf[i] = coords[i].toComplex();
    e.xq = std::move(coords);
    return e;
}

Element floatElement(const Algebra& a, std::vector<Cplx> coords) {
    if (static_cast<int>(coords.size()) != a.dim())
        throw ValidationError("element coordinate length mismatch");
    Element e;
    e.alg = &a;
    e.exact = false;
    e.xf = std::move(coords);
    return e;
}

CMat regularRep(const Element& e) { return e.alg->leftRegularF(e.xf); }

ExactMatrix regularRepExact(const Element& e) {
    if (!e.exact) throw ValidationError("exact regular representation needs exact coordinates");
    return e.alg->leftRegular(e.xq);
}

std::vector<Cplx> spectrum(const Element& e, double tol) {
    return spectrumSet(regularRep(e), tol);
}

bool isInvertible(const Element& e) {
    if (e.exact) return regularRepExact(e).rank() == static_cast<std::size_t>(e.alg->dim());
    const CMat m = regularRep(e);
    return distToSet(Cplx{0, 0}, spectrumSet(m, defaultTol(m))) > 10.0 * defaultTol(m);
}

Element randomElement(const Algebra& a, std::uint64_t seed) {
    Rng rng(seed);
    std::vector<Cplx> coords(a.dim());
    for (auto& c : coords) c = rng.symComplex();
    return floatElement(a, std::move(coords));
}

void validateIdeal(const Algebra& a, const std::vector<GRVec>& vectors) {
    RowSpace span(a.dim());
    for (const GRVec& v : vectors) {
        if (!span.add(v))
            throw ValidationError("ideal basis vectors are linearly dependent");
    }
    for (std::size_t vi = 0; vi < vectors.size(); ++vi) {
        for (int i = 0; i < a.dim(); ++i) {
            const GRVec ei = basisVector(a.dim(), i);
            if (!span.contains(a.mul(ei, vectors[vi])))
                throw ValidationError("not an ideal: e_" + std::to_string(i) +
                                      " * v_" + std::to_string(vi) + " leaves the span");
            if (!span.contains(a.mul(vectors[vi], ei)))
                throw ValidationError("not an ideal: v_" + std::to_string(vi) +
                                      " * e_" + std::to_string(i) + " leaves the span");
        }
    }
}

Quotient quotientAlgebra(const Algebra& a, const std::vector<GRVec>& ideal, bool validate) {
    if (validate) validateIdeal(a, ideal);
    const int n = a.dim();
    const int r = static_cast<int>(ideal.size());
    const int s = n - r;
    if (s <= 0) throw ValidationError("quotient by the whole algebra is not unital");

    // greedy extension by standard basis vectors (deterministic)
    RowSpace span(n);
    for (const GRVec& v : ideal) span.add(v);
    std::vector<int> reps;
    for (int j = 0; j < n && static_cast<int>(reps.size()) < s; ++j)
        if (span.add(basisVector(n, j))) reps.push_back(j);
    if (static_cast<int>(reps.size()) != s)
        throw ValidationError("failed to extend ideal basis to a full basis");

    // B = [rep columns | ideal columns]; projection = first s rows of B^{-1}
    ExactMatrix b(n, n);
    for (int c = 0; c < s; ++c) b.at(reps[c], c) = GaussRational(1);
    for (int c = 0; c < r; ++c)
        for (int i = 0; i < n; ++i) b.at(i, s + c) = ideal[c][i];
    const ExactMatrix binv = b.inverse();
    ExactMatrix proj(s, n);
    for (int i = 0; i < s; ++i)
        for (int j = 0; j < n; ++j) proj.at(i, j) = binv.at(i, j);

    std::vector<TensorEntry> tensor;
    for (int x = 0; x < s; ++x)
        for (int y = 0; y < s; ++y) {
            const GRVec p = proj.apply(a.mul(basisVector(n, reps[x]), basisVector(n, reps[y])));
            for (int k = 0; k < s; ++k)
                if (!p[k].isZero()) tensor.emplace_back(x, y, k, p[k]);
        }
    std::vector<std::string> labels;
    if (!a.labels().empty())
        for (int c = 0; c < s; ++c) labels.push_back(a.labels()[reps[c]] + "~");
    Quotient q{Algebra::make(s, tensor, proj.apply(a.unit()), std::move(labels)),
               std::move(proj), std::move(reps)};
    return q;
}

Algebra directSumAlgebra(const std::vector<int>& blocks) {
    if (blocks.empty()) throw ValidationError("direct sum needs at least one block");
    int dim = 0;
    for (int k : blocks) {
        if (k <= 0) throw ValidationError("block sizes must be positive");
        dim += k * k;
    }
    std::vector<TensorEntry> tensor;
    GRVec unit(dim);
    std::vector<std::string> labels(dim);
    int base = 0, blockNo = 0;
    for (int k : blocks) {
        auto idx = [&](int r, int c) { return base + r * k + c; };
        for (int r = 0; r < k; ++r)
            for (int c = 0; c < k; ++c) {
                labels[idx(r, c)] = "B" + std::to_string(blockNo) + ":E" + std::to_string(r + 1) +
                                    "," + std::to_string(c + 1);
                for (int c2 = 0; c2 < k; ++c2)
                    // E_{r,c} * E_{c,c2} = E_{r,c2}
                    tensor.emplace_back(idx(r, c), idx(c, c2), idx(r, c2), GaussRational(1));
            }
        for (int r = 0; r < k; ++r) unit[idx(r, r)] = GaussRational(1);
        base += k * k;
        ++blockNo;
    }
    return Algebra::make(dim, tensor, std::move(unit), std::move(labels));
}

Algebra conjugateBasis(const Algebra& a, const ExactMatrix& t) {
    const int n = a.dim();
    if (t.rows() != static_cast<std::size_t>(n) || t.cols() != static_cast<std::size_t>(n))
        throw ValidationError("transition matrix has wrong shape");
    const ExactMatrix tinv = t.inverse();
    std::vector<TensorEntry> tensor;
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
            const GRVec p = tinv.apply(a.mul(t.column(x), t.column(y)));
            for (int k = 0; k < n; ++k)
                if (!p[k].isZero()) tensor.emplace_back(x, y, k, p[k]);
        }
    return Algebra::make(n, tensor, tinv.apply(a.unit()));
}

} // namespace specmap
