#include "specmap/exact_matrix.hpp"

#include <algorithm>

#include "specmap/errors.hpp"

namespace specmap {

bool rationalReconstruct(double x, long maxDen, double tol, mpq_class& out) {
    if (!std::isfinite(x)) return false;
    // Continued-fraction convergents of x until the denominator bound.
    double v = x;
    long p0 = 0, q0 = 1, p1 = 1, q1 = 0; // p1/q1 is the current convergent
    for (int it = 0; it < 64; ++it) {
        double fl = std::floor(v);
        if (fl > 9.2e18 || fl < -9.2e18) break;
        long a = static_cast<long>(fl);
        long p2 = a * p1 + p0;
        long q2 = a * q1 + q0;
        if (q2 > maxDen || q2 < 0) break;
        p0 = p1; q0 = q1; p1 = p2; q1 = q2;
        double rem = v - fl;
        if (rem < 1e-15) break;
        v = 1.0 / rem;
    }
    if (q1 <= 0) return false;
    mpq_class cand(p1, q1);
    cand.canonicalize();
    if (std::abs(cand.get_d() - x) > tol) return false;
    out = cand;
    return true;
}

bool rationalReconstruct(std::complex<double> z, long maxDen, double tol, GaussRational& out) {
    mpq_class r, i;
    if (!rationalReconstruct(z.real(), maxDen, tol, r)) return false;
    if (!rationalReconstruct(z.imag(), maxDen, tol, i)) return false;
    out = GaussRational(r, i);
    return true;
}

ExactMatrix ExactMatrix::identity(std::size_t n) {
    ExactMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = GaussRational(1);
    return m;
}

ExactMatrix ExactMatrix::fromColumns(const std::vector<GRVec>& cols) {
    if (cols.empty()) return {};
    ExactMatrix m(cols[0].size(), cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j)
        for (std::size_t i = 0; i < cols[j].size(); ++i) m.at(i, j) = cols[j][i];
    return m;
}

ExactMatrix ExactMatrix::transpose() const {
    ExactMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
    return t;
}

ExactMatrix ExactMatrix::operator*(const ExactMatrix& rhs) const {
    if (cols_ != rhs.rows_) throw ValidationError("ExactMatrix: dimension mismatch in product");
    ExactMatrix r(rows_, rhs.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            const GaussRational& aik = at(i, k);
            if (aik.isZero()) continue;
            for (std::size_t j = 0; j < rhs.cols_; ++j) {
                const GaussRational& b = rhs.at(k, j);
                if (!b.isZero()) r.at(i, j) += aik * b;
            }
        }
    return r;
}

GRVec ExactMatrix::apply(const GRVec& v) const {
    if (v.size() != cols_) throw ValidationError("ExactMatrix: dimension mismatch in apply");
    GRVec r(rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            if (!at(i, j).isZero() && !v[j].isZero()) r[i] += at(i, j) * v[j];
    return r;
}

std::vector<std::complex<double>> ExactMatrix::applyF(
    const std::vector<std::complex<double>>& v) const {
    if (v.size() != cols_) throw ValidationError("ExactMatrix: dimension mismatch in applyF");
    std::vector<std::complex<double>> r(rows_, {0.0, 0.0});
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            if (!at(i, j).isZero()) r[i] += at(i, j).toComplex() * v[j];
    return r;
}

GRVec ExactMatrix::column(std::size_t j) const {
    GRVec c(rows_);
    for (std::size_t i = 0; i < rows_; ++i) c[i] = at(i, j);
    return c;
}

GRVec ExactMatrix::row(std::size_t i) const {
    GRVec r(cols_);
    for (std::size_t j = 0; j < cols_; ++j) r[j] = at(i, j);
    return r;
}

Echelon ExactMatrix::reduced() const {
    Echelon e{*this, {}, 0};
    ExactMatrix& w = e.rref;
    GaussRational prev(1);
    std::size_t pr = 0; // next pivot row
    for (std::size_t col = 0; col < cols_ && pr < rows_; ++col) {
        // first nonzero in column order
        std::size_t piv = pr;
        while (piv < rows_ && w.at(piv, col).isZero()) ++piv;
        if (piv == rows_) continue;
        if (piv != pr)
            for (std::size_t j = 0; j < cols_; ++j) std::swap(w.at(piv, j), w.at(pr, j));
        const GaussRational p = w.at(pr, col);
        // Bareiss update: exact division by the previous pivot
        for (std::size_t i = pr + 1; i < rows_; ++i) {
            const GaussRational f = w.at(i, col);
            for (std::size_t j = 0; j < cols_; ++j)
                w.at(i, j) = (w.at(i, j) * p - f * w.at(pr, j)) / prev;
        }
        prev = p;
        e.pivotCols.push_back(col);
        ++pr;
    }
    e.rank = pr;
    // normalize pivot rows and back-eliminate to RREF
    for (std::size_t r = 0; r < e.rank; ++r) {
        const std::size_t pc = e.pivotCols[r];
        const GaussRational p = w.at(r, pc);
        for (std::size_t j = 0; j < cols_; ++j) w.at(r, j) = w.at(r, j) / p;
    }
    for (std::size_t r = e.rank; r-- > 0;) {
        const std::size_t pc = e.pivotCols[r];
        for (std::size_t i = 0; i < r; ++i) {
            const GaussRational f = w.at(i, pc);
            if (f.isZero()) continue;
            for (std::size_t j = 0; j < cols_; ++j) w.at(i, j) -= f * w.at(r, j);
        }
    }
    return e;
}

std::vector<GRVec> ExactMatrix::kernel() const {
    const Echelon e = reduced();
    std::vector<bool> isPivot(cols_, false);
    for (std::size_t c : e.pivotCols) isPivot[c] = true;
    std::vector<GRVec> basis;
    for (std::size_t f = 0; f < cols_; ++f) {
        if (isPivot[f]) continue;
        GRVec v(cols_);
        v[f] = GaussRational(1);
        for (std::size_t r = 0; r < e.rank; ++r) v[e.pivotCols[r]] = -e.rref.at(r, f);
        basis.push_back(std::move(v));
    }
    return basis;
}

std::optional<ExactMatrix> ExactMatrix::solve(const ExactMatrix& rhs) const {
    if (rhs.rows() != rows_) throw ValidationError("ExactMatrix: solve dimension mismatch");
    ExactMatrix aug(rows_, cols_ + rhs.cols());
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t j = 0; j < cols_; ++j) aug.at(i, j) = at(i, j);
        for (std::size_t j = 0; j < rhs.cols(); ++j) aug.at(i, cols_ + j) = rhs.at(i, j);
    }
    const Echelon e = aug.reduced();
    for (std::size_t c : e.pivotCols)
        if (c >= cols_) return std::nullopt; // inconsistent system
    ExactMatrix x(cols_, rhs.cols());
    for (std::size_t r = 0; r < e.rank; ++r)
        for (std::size_t j = 0; j < rhs.cols(); ++j)
            x.at(e.pivotCols[r], j) = e.rref.at(r, cols_ + j);
    return x;
}

ExactMatrix ExactMatrix::inverse() const {
    if (rows_ != cols_) throw ValidationError("ExactMatrix: inverse of non-square matrix");
    auto x = solve(identity(rows_));
    if (!x || x->rows() != rows_) throw ValidationError("ExactMatrix: singular matrix");
    // solve() leaves free variables at 0, so verify invertibility via rank
    if (rank() != rows_) throw ValidationError("ExactMatrix: singular matrix");
    return *x;
}

bool ExactMatrix::isZero() const {
    return std::all_of(a_.begin(), a_.end(), [](const GaussRational& g) { return g.isZero(); });
}

GRVec RowSpace::reduce(GRVec v) const {
    for (std::size_t r = 0; r < rows_.size(); ++r) {
        const GaussRational& f = v[pivots_[r]];
        if (f.isZero()) continue;
        const GaussRational c = f;
        for (std::size_t j = 0; j < n_; ++j)
            if (!rows_[r][j].isZero()) v[j] -= c * rows_[r][j];
    }
    return v;
}

bool RowSpace::add(GRVec v) {
    v = reduce(std::move(v));
    std::size_t p = 0;
    while (p < n_ && v[p].isZero()) ++p;
    if (p == n_) return false;
    const GaussRational lead = v[p];
    for (std::size_t j = 0; j < n_; ++j) v[j] = v[j] / lead;
    // keep earlier rows reduced against the new one
    for (std::size_t r = 0; r < rows_.size(); ++r) {
        const GaussRational f = rows_[r][p];
        if (f.isZero()) continue;
        for (std::size_t j = 0; j < n_; ++j) rows_[r][j] -= f * v[j];
    }
    rows_.push_back(std::move(v));
    pivots_.push_back(p);
    return true;
}

bool RowSpace::contains(const GRVec& v) const {
    GRVec r = reduce(v);
    return std::all_of(r.begin(), r.end(), [](const GaussRational& g) { return g.isZero(); });
}

} // namespace specmap
