#pragma once

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <vector>

#include "preab/rat_matrix.hpp"
#include "preab/rational.hpp"

namespace preab {

class IntMatrix {
  public:
    IntMatrix() : rows_(0), cols_(0) {}
    IntMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows * cols) {}
    IntMatrix(std::initializer_list<std::initializer_list<long>> rows);

    static IntMatrix identity(std::size_t n);
    static IntMatrix zero(std::size_t rows, std::size_t cols) { return IntMatrix(rows, cols); }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Integer& at(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Integer& at(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    bool operator==(const IntMatrix& other) const {
        return rows_ == other.rows_ && cols_ == other.cols_ && data_ == other.data_;
    }
    bool operator!=(const IntMatrix& other) const { return !(*this == other); }

    bool is_zero() const;

    IntMatrix operator*(const IntMatrix& rhs) const;
    IntMatrix operator-(const IntMatrix& rhs) const;
    IntMatrix operator-() const;
    IntMatrix transpose() const;

  private:
    std::size_t rows_, cols_;
    std::vector<Integer> data_;
};

IntMatrix hstack(const IntMatrix& left, const IntMatrix& right);
IntMatrix vstack(const IntMatrix& top, const IntMatrix& bottom);
IntMatrix block_diag(const IntMatrix& a, const IntMatrix& b);
IntMatrix kron(const IntMatrix& a, const IntMatrix& b);
IntMatrix vec_columns(const IntMatrix& m);
IntMatrix unvec_columns(const IntMatrix& v, std::size_t rows, std::size_t cols);

RatMatrix to_rational(const IntMatrix& m);
// Fails when an entry has a denominator != 1.
std::optional<IntMatrix> to_integer(const RatMatrix& m);

// U * A * V = S with U, V unimodular, S diagonal, s_i >= 0, s_i | s_{i+1}.
// u_inverse is carried along so column lattices can be read off S directly.
struct SnfDecomposition {
    IntMatrix u, v, s;
    IntMatrix u_inverse;
    std::vector<Integer> diagonal() const;
};

SnfDecomposition smith_normal_form(const IntMatrix& a);

// Nonzero diagonal of the SNF, i.e. the invariant factors of the column
// lattice; trailing structure (free rank) is the caller's bookkeeping.
std::vector<Integer> invariant_factors(const IntMatrix& a);

// Some integer X with M X = B, or nullopt when no integral solution exists.
std::optional<IntMatrix> solve_integer(const IntMatrix& m, const IntMatrix& rhs);

// Columns form a lattice basis of {x : Mx = 0}.
IntMatrix integer_nullspace(const IntMatrix& m);

// Columns form a basis (not just a generating set) of the column lattice.
IntMatrix column_lattice_basis(const IntMatrix& m);

// True when every column of `vectors` lies in the column lattice of `lattice`.
bool columns_in_lattice(const IntMatrix& lattice, const IntMatrix& vectors);

// Basis of the lattice {a : F a in col(R)}.
IntMatrix preimage_lattice(const IntMatrix& f, const IntMatrix& r);

}  // namespace preab
