#pragma once

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <vector>

#include "preab/rational.hpp"

namespace preab {

// Dense matrix of exact rationals. Degenerate shapes (0 x n, n x 0) are
// first-class citizens: zero objects and empty bases depend on them.
class RatMatrix {
  public:
    RatMatrix() : rows_(0), cols_(0) {}
    RatMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows * cols) {}
    RatMatrix(std::initializer_list<std::initializer_list<long>> rows);

    static RatMatrix identity(std::size_t n);
    static RatMatrix zero(std::size_t rows, std::size_t cols) { return RatMatrix(rows, cols); }
    static RatMatrix column(const std::vector<Rational>& entries);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Rational& at(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Rational& at(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    bool operator==(const RatMatrix& other) const {
        return rows_ == other.rows_ && cols_ == other.cols_ && data_ == other.data_;
    }
    bool operator!=(const RatMatrix& other) const { return !(*this == other); }

    bool is_zero() const;
    bool is_identity() const;

    RatMatrix operator*(const RatMatrix& rhs) const;
    RatMatrix operator+(const RatMatrix& rhs) const;
    RatMatrix operator-(const RatMatrix& rhs) const;
    RatMatrix operator-() const;
    RatMatrix scaled(const Rational& c) const;
    RatMatrix transpose() const;

    RatMatrix column_slice(std::size_t first, std::size_t count) const;
    RatMatrix row_slice(std::size_t first, std::size_t count) const;
    RatMatrix select_columns(const std::vector<std::size_t>& which) const;

  private:
    std::size_t rows_, cols_;
    std::vector<Rational> data_;
};

RatMatrix hstack(const RatMatrix& left, const RatMatrix& right);
RatMatrix vstack(const RatMatrix& top, const RatMatrix& bottom);
RatMatrix block_diag(const RatMatrix& a, const RatMatrix& b);
// Kronecker product, vec(AXB) = (B^T (x) A) vec(X) with column-major vec.
RatMatrix kron(const RatMatrix& a, const RatMatrix& b);
RatMatrix vec_columns(const RatMatrix& m);            // column-major vectorization
RatMatrix unvec_columns(const RatMatrix& v, std::size_t rows, std::size_t cols);

struct RrefResult {
    RatMatrix reduced;
    std::vector<std::size_t> pivots;  // pivot column indices, ascending
    RatMatrix transform;              // transform * input == reduced (when requested)
};

// Reduced row echelon form. Forward pass is fraction-free (rows cleared to
// integers, Bareiss elimination); the reduction to unit pivots happens last.
RrefResult rref(const RatMatrix& m, bool want_transform = false);

std::size_t rank(const RatMatrix& m);

// Columns span the right nullspace {x : Mx = 0}; cols() == nullity.
RatMatrix nullspace_basis(const RatMatrix& m);

// Canonical basis of the column space: reduced column echelon form columns.
RatMatrix columnspace_basis(const RatMatrix& m);

// Reduced column echelon form (canonical representative of a column span).
RatMatrix rcef(const RatMatrix& m);

// Canonical row basis of the left nullspace {w : wM = 0}.
RatMatrix left_nullspace_rows(const RatMatrix& m);

struct RatSolve {
    std::optional<RatMatrix> solution;     // some X with M X = B
    std::optional<RatMatrix> row_witness;  // row w with w M = 0, w B != 0
};

// Exact multi-RHS solve. On failure the witness row certifies inconsistency.
RatSolve solve_rational(const RatMatrix& m, const RatMatrix& rhs);

std::optional<RatMatrix> inverse(const RatMatrix& m);

// True when every column of `vectors` lies in the column span of `space`.
bool columns_in_span(const RatMatrix& space, const RatMatrix& vectors);

}  // namespace preab
