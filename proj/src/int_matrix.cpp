#include "preab/int_matrix.hpp"

#include <algorithm>
#include <stdexcept>

namespace preab {

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long>> rows) {
    rows_ = rows.size();
    cols_ = rows_ == 0 ? 0 : rows.begin()->size();
    data_.reserve(rows_ * cols_);
    for (const auto& row : rows) {
        if (row.size() != cols_) throw std::invalid_argument("IntMatrix: ragged rows");
        for (long v : row) data_.emplace_back(v);
    }
}

IntMatrix IntMatrix::identity(std::size_t n) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

bool IntMatrix::is_zero() const {
    for (const auto& v : data_)
        if (v != 0) return false;
    return true;
}

IntMatrix IntMatrix::operator*(const IntMatrix& rhs) const {
    if (cols_ != rhs.rows_) throw std::invalid_argument("IntMatrix: shape mismatch in product");
    IntMatrix out(rows_, rhs.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            const Integer& a = at(i, k);
            if (a == 0) continue;
            for (std::size_t j = 0; j < rhs.cols_; ++j) out.at(i, j) += a * rhs.at(k, j);
        }
    return out;
}

IntMatrix IntMatrix::operator-(const IntMatrix& rhs) const {
    if (rows_ != rhs.rows_ || cols_ != rhs.cols_)
        throw std::invalid_argument("IntMatrix: shape mismatch in difference");
    IntMatrix out(rows_, cols_);
    for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] = data_[i] - rhs.data_[i];
    return out;
}

IntMatrix IntMatrix::operator-() const {
    IntMatrix out(rows_, cols_);
    for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] = -data_[i];
    return out;
}

IntMatrix IntMatrix::transpose() const {
    IntMatrix out(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) out.at(j, i) = at(i, j);
    return out;
}

IntMatrix hstack(const IntMatrix& left, const IntMatrix& right) {
    if (left.rows() != right.rows()) throw std::invalid_argument("hstack: row mismatch");
    IntMatrix out(left.rows(), left.cols() + right.cols());
    for (std::size_t i = 0; i < left.rows(); ++i) {
        for (std::size_t j = 0; j < left.cols(); ++j) out.at(i, j) = left.at(i, j);
        for (std::size_t j = 0; j < right.cols(); ++j) out.at(i, left.cols() + j) = right.at(i, j);
    }
    return out;
}

IntMatrix vstack(const IntMatrix& top, const IntMatrix& bottom) {
    if (top.cols() != bottom.cols()) throw std::invalid_argument("vstack: column mismatch");
    IntMatrix out(top.rows() + bottom.rows(), top.cols());
    for (std::size_t j = 0; j < top.cols(); ++j) {
        for (std::size_t i = 0; i < top.rows(); ++i) out.at(i, j) = top.at(i, j);
        for (std::size_t i = 0; i < bottom.rows(); ++i) out.at(top.rows() + i, j) = bottom.at(i, j);
    }
    return out;
}

IntMatrix kron(const IntMatrix& a, const IntMatrix& b) {
    IntMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (std::size_t ia = 0; ia < a.rows(); ++ia)
        for (std::size_t ja = 0; ja < a.cols(); ++ja) {
            if (a.at(ia, ja) == 0) continue;
            for (std::size_t ib = 0; ib < b.rows(); ++ib)
                for (std::size_t jb = 0; jb < b.cols(); ++jb)
                    out.at(ia * b.rows() + ib, ja * b.cols() + jb) = a.at(ia, ja) * b.at(ib, jb);
        }
    return out;
}

IntMatrix vec_columns(const IntMatrix& m) {
    IntMatrix out(m.rows() * m.cols(), 1);
    for (std::size_t j = 0; j < m.cols(); ++j)
        for (std::size_t i = 0; i < m.rows(); ++i) out.at(j * m.rows() + i, 0) = m.at(i, j);
    return out;
}

IntMatrix unvec_columns(const IntMatrix& v, std::size_t rows, std::size_t cols) {
    if (v.cols() != 1 || v.rows() != rows * cols) throw std::invalid_argument("unvec: shape");
    IntMatrix out(rows, cols);
    for (std::size_t j = 0; j < cols; ++j)
        for (std::size_t i = 0; i < rows; ++i) out.at(i, j) = v.at(j * rows + i, 0);
    return out;
}

IntMatrix block_diag(const IntMatrix& a, const IntMatrix& b) {
    IntMatrix out(a.rows() + b.rows(), a.cols() + b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) out.at(i, j) = a.at(i, j);
    for (std::size_t i = 0; i < b.rows(); ++i)
        for (std::size_t j = 0; j < b.cols(); ++j) out.at(a.rows() + i, a.cols() + j) = b.at(i, j);
    return out;
}

RatMatrix to_rational(const IntMatrix& m) {
    RatMatrix out(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) out.at(i, j) = rat(m.at(i, j));
    return out;
}

std::optional<IntMatrix> to_integer(const RatMatrix& m) {
    IntMatrix out(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) {
            if (m.at(i, j).get_den() != 1) return std::nullopt;
            out.at(i, j) = m.at(i, j).get_num();
        }
    return out;
}

std::vector<Integer> SnfDecomposition::diagonal() const {
    std::vector<Integer> d;
    const std::size_t n = std::min(s.rows(), s.cols());
    d.reserve(n);
    for (std::size_t i = 0; i < n; ++i) d.push_back(s.at(i, i));
    return d;
}

namespace {

// Elementary operations applied simultaneously to S and the accumulated
// transforms. Row ops touch U and U^{-1}; column ops touch V.
struct SnfWorker {
    IntMatrix s, u, u_inv, v;

    explicit SnfWorker(const IntMatrix& a)
        : s(a),
          u(IntMatrix::identity(a.rows())),
          u_inv(IntMatrix::identity(a.rows())),
          v(IntMatrix::identity(a.cols())) {}

    void row_swap(std::size_t a, std::size_t b) {
        if (a == b) return;
        for (std::size_t j = 0; j < s.cols(); ++j) std::swap(s.at(a, j), s.at(b, j));
        for (std::size_t j = 0; j < u.cols(); ++j) std::swap(u.at(a, j), u.at(b, j));
        for (std::size_t i = 0; i < u_inv.rows(); ++i) std::swap(u_inv.at(i, a), u_inv.at(i, b));
    }

    void col_swap(std::size_t a, std::size_t b) {
        if (a == b) return;
        for (std::size_t i = 0; i < s.rows(); ++i) std::swap(s.at(i, a), s.at(i, b));
        for (std::size_t i = 0; i < v.rows(); ++i) std::swap(v.at(i, a), v.at(i, b));
    }

    // row a -= q * row b
    void row_axpy(std::size_t a, std::size_t b, const Integer& q) {
        if (q == 0) return;
        for (std::size_t j = 0; j < s.cols(); ++j) s.at(a, j) -= q * s.at(b, j);
        for (std::size_t j = 0; j < u.cols(); ++j) u.at(a, j) -= q * u.at(b, j);
        for (std::size_t i = 0; i < u_inv.rows(); ++i) u_inv.at(i, b) += q * u_inv.at(i, a);
    }

    // col a -= q * col b
    void col_axpy(std::size_t a, std::size_t b, const Integer& q) {
        if (q == 0) return;
        for (std::size_t i = 0; i < s.rows(); ++i) s.at(i, a) -= q * s.at(i, b);
        for (std::size_t i = 0; i < v.rows(); ++i) v.at(i, a) -= q * v.at(i, b);
    }

    void row_negate(std::size_t a) {
        for (std::size_t j = 0; j < s.cols(); ++j) s.at(a, j) = -s.at(a, j);
        for (std::size_t j = 0; j < u.cols(); ++j) u.at(a, j) = -u.at(a, j);
        for (std::size_t i = 0; i < u_inv.rows(); ++i) u_inv.at(i, a) = -u_inv.at(i, a);
    }

    bool find_pivot(std::size_t t, std::size_t& pi, std::size_t& pj) const {
        bool found = false;
        Integer best;
        for (std::size_t i = t; i < s.rows(); ++i)
            for (std::size_t j = t; j < s.cols(); ++j) {
                if (s.at(i, j) == 0) continue;
                Integer mag = abs(s.at(i, j));
                if (!found || mag < best) {
                    best = mag;
                    pi = i;
                    pj = j;
                    found = true;
                }
            }
        return found;
    }

    void run() {
        const std::size_t n = std::min(s.rows(), s.cols());
        for (std::size_t t = 0; t < n; ++t) {
            std::size_t pi = t, pj = t;
            if (!find_pivot(t, pi, pj)) break;
            row_swap(t, pi);
            col_swap(t, pj);

            for (;;) {
                bool dirty = false;
                for (std::size_t i = t + 1; i < s.rows(); ++i) {
                    if (s.at(i, t) == 0) continue;
                    Integer q;
                    mpz_fdiv_q(q.get_mpz_t(), s.at(i, t).get_mpz_t(), s.at(t, t).get_mpz_t());
                    row_axpy(i, t, q);
                    if (s.at(i, t) != 0) {
                        row_swap(t, i);  // remainder is strictly smaller
                        dirty = true;
                    }
                }
                for (std::size_t j = t + 1; j < s.cols(); ++j) {
                    if (s.at(t, j) == 0) continue;
                    Integer q;
                    mpz_fdiv_q(q.get_mpz_t(), s.at(t, j).get_mpz_t(), s.at(t, t).get_mpz_t());
                    col_axpy(j, t, q);
                    if (s.at(t, j) != 0) {
                        col_swap(t, j);
                        dirty = true;
                    }
                }
                if (!dirty) break;
            }

            if (s.at(t, t) < 0) row_negate(t);

            // Divisibility repair: fold any non-multiple into column t.
            bool restart = false;
            for (std::size_t i = t + 1; i < s.rows() && !restart; ++i)
                for (std::size_t j = t + 1; j < s.cols() && !restart; ++j)
                    if (s.at(i, j) % s.at(t, t) != 0) {
                        row_axpy(t, i, Integer(-1));  // adds row i to row t
                        restart = true;
                    }
            if (restart) --t;
        }
    }
};

}  // namespace

SnfDecomposition smith_normal_form(const IntMatrix& a) {
    SnfWorker w(a);
    w.run();
    SnfDecomposition out;
    out.s = std::move(w.s);
    out.u = std::move(w.u);
    out.u_inverse = std::move(w.u_inv);
    out.v = std::move(w.v);
    return out;
}

std::vector<Integer> invariant_factors(const IntMatrix& a) {
    std::vector<Integer> out;
    for (const Integer& d : smith_normal_form(a).diagonal())
        if (d != 0) out.push_back(d);
    return out;
}

std::optional<IntMatrix> solve_integer(const IntMatrix& m, const IntMatrix& rhs) {
    if (m.rows() != rhs.rows()) throw std::invalid_argument("solve_integer: shape mismatch");
    const SnfDecomposition snf = smith_normal_form(m);
    const IntMatrix y = snf.u * rhs;
    const std::size_t n = std::min(m.rows(), m.cols());
    IntMatrix z(m.cols(), rhs.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < rhs.cols(); ++j) {
            const Integer& target = y.at(i, j);
            if (i >= n || snf.s.at(i, i) == 0) {
                if (target != 0) return std::nullopt;
            } else {
                if (target % snf.s.at(i, i) != 0) return std::nullopt;
                z.at(i, j) = target / snf.s.at(i, i);
            }
        }
    return snf.v * z;
}

IntMatrix integer_nullspace(const IntMatrix& m) {
    const SnfDecomposition snf = smith_normal_form(m);
    const std::size_t n = std::min(m.rows(), m.cols());
    std::vector<std::size_t> free_cols;
    for (std::size_t j = 0; j < m.cols(); ++j)
        if (j >= n || snf.s.at(j, j) == 0) free_cols.push_back(j);
    IntMatrix out(m.cols(), free_cols.size());
    for (std::size_t k = 0; k < free_cols.size(); ++k)
        for (std::size_t i = 0; i < m.cols(); ++i) out.at(i, k) = snf.v.at(i, free_cols[k]);
    return out;
}

IntMatrix column_lattice_basis(const IntMatrix& m) {
    const SnfDecomposition snf = smith_normal_form(m);
    // col(M) = col(M V) = col(U^{-1} S); keep the columns with s_i != 0.
    const IntMatrix gen = snf.u_inverse * snf.s;
    const std::size_t n = std::min(m.rows(), m.cols());
    std::vector<std::size_t> keep;
    for (std::size_t j = 0; j < n; ++j)
        if (snf.s.at(j, j) != 0) keep.push_back(j);
    IntMatrix out(m.rows(), keep.size());
    for (std::size_t k = 0; k < keep.size(); ++k)
        for (std::size_t i = 0; i < m.rows(); ++i) out.at(i, k) = gen.at(i, keep[k]);
    return out;
}

bool columns_in_lattice(const IntMatrix& lattice, const IntMatrix& vectors) {
    if (lattice.rows() != vectors.rows())
        throw std::invalid_argument("columns_in_lattice: shape mismatch");
    if (vectors.cols() == 0) return true;
    return solve_integer(lattice, vectors).has_value();
}

IntMatrix preimage_lattice(const IntMatrix& f, const IntMatrix& r) {
    const IntMatrix null = integer_nullspace(hstack(f, -r));
    IntMatrix head(f.cols(), null.cols());
    for (std::size_t i = 0; i < f.cols(); ++i)
        for (std::size_t j = 0; j < null.cols(); ++j) head.at(i, j) = null.at(i, j);
    return column_lattice_basis(head);
}

}  // namespace preab
