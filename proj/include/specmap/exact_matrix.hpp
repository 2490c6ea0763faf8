#ifndef SPECMAP_EXACT_MATRIX_HPP
#define SPECMAP_EXACT_MATRIX_HPP

#include <cstddef>
#include <optional>
#include <vector>

#include "specmap/gauss_rational.hpp"

namespace specmap {

using GRVec = std::vector<GaussRational>;

class ExactMatrix;

/// Result of exact elimination: the RREF, its pivot columns and the rank.
struct Echelon;

/// Dense matrix over the Gaussian rationals. Rank/kernel/solve are exact;
/// elimination is fraction-free (Bareiss) with first-nonzero pivoting.
class ExactMatrix {
public:
    ExactMatrix() : rows_(0), cols_(0) {}
    ExactMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), a_(rows * cols) {}

    static ExactMatrix identity(std::size_t n);
    static ExactMatrix fromColumns(const std::vector<GRVec>& cols);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    GaussRational& at(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    const GaussRational& at(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

    ExactMatrix transpose() const;
    ExactMatrix operator*(const ExactMatrix& rhs) const;
    GRVec apply(const GRVec& v) const; // M v
    std::vector<std::complex<double>> applyF(const std::vector<std::complex<double>>& v) const;
    friend bool operator==(const ExactMatrix& a, const ExactMatrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
    }

    GRVec column(std::size_t j) const;
    GRVec row(std::size_t i) const;

    /// Bareiss forward elimination followed by exact normalization to RREF.
    Echelon reduced() const;

    std::size_t rank() const;

    /// Basis of {v : Mv = 0}; size = cols - rank, each vector exact.
    std::vector<GRVec> kernel() const;

    /// Solves M X = rhs; nullopt when inconsistent. Free variables are set to 0.
    std::optional<ExactMatrix> solve(const ExactMatrix& rhs) const;

    /// Inverse of a square matrix; throws ValidationError when singular.
    ExactMatrix inverse() const;

    bool isZero() const;

private:
    std::size_t rows_, cols_;
    std::vector<GaussRational> a_;
};

struct Echelon {
    ExactMatrix rref;
    std::vector<std::size_t> pivotCols;
    std::size_t rank = 0;
};

inline std::size_t ExactMatrix::rank() const { return reduced().rank; }

/// Incrementally maintained row space in RREF form; used for span membership,
/// closure checks and greedy basis extension.
class RowSpace {
public:
    explicit RowSpace(std::size_t n) : n_(n) {}

    /// Reduces v against the stored rows; returns the residual.
    GRVec reduce(GRVec v) const;

    /// Adds v to the span. Returns true when the rank grew.
    bool add(GRVec v);

    bool contains(const GRVec& v) const;
    std::size_t rank() const { return rows_.size(); }
    std::size_t dim() const { return n_; }
    const std::vector<GRVec>& rows() const { return rows_; }

private:
    std::size_t n_;
    std::vector<GRVec> rows_;          // each normalized: leading coeff 1
    std::vector<std::size_t> pivots_;  // pivot column of rows_[i]
};

} // namespace specmap

#endif
