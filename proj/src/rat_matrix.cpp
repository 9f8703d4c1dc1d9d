#include "preab/rat_matrix.hpp"

#include <stdexcept>

namespace preab {

RatMatrix::RatMatrix(std::initializer_list<std::initializer_list<long>> rows) {
    rows_ = rows.size();
    cols_ = rows_ == 0 ? 0 : rows.begin()->size();
    data_.reserve(rows_ * cols_);
    for (const auto& row : rows) {
        if (row.size() != cols_) throw std::invalid_argument("RatMatrix: ragged rows");
        for (long v : row) data_.emplace_back(v);
    }
}

RatMatrix RatMatrix::identity(std::size_t n) {
    RatMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

RatMatrix RatMatrix::column(const std::vector<Rational>& entries) {
    RatMatrix m(entries.size(), 1);
    for (std::size_t i = 0; i < entries.size(); ++i) m.at(i, 0) = entries[i];
    return m;
}

bool RatMatrix::is_zero() const {
    for (const auto& v : data_)
        if (v != 0) return false;
    return true;
}

bool RatMatrix::is_identity() const {
    if (rows_ != cols_) return false;
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            if (at(i, j) != (i == j ? 1 : 0)) return false;
    return true;
}

RatMatrix RatMatrix::operator*(const RatMatrix& rhs) const {
    if (cols_ != rhs.rows_) throw std::invalid_argument("RatMatrix: shape mismatch in product");
    RatMatrix out(rows_, rhs.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            const Rational& a = at(i, k);
            if (a == 0) continue;
            for (std::size_t j = 0; j < rhs.cols_; ++j) {
                if (rhs.at(k, j) == 0) continue;
                out.at(i, j) += a * rhs.at(k, j);
            }
        }
    return out;
}

RatMatrix RatMatrix::operator+(const RatMatrix& rhs) const {
    if (rows_ != rhs.rows_ || cols_ != rhs.cols_)
        throw std::invalid_argument("RatMatrix: shape mismatch in sum");
    RatMatrix out(rows_, cols_);
    for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] = data_[i] + rhs.data_[i];
    return out;
}

RatMatrix RatMatrix::operator-(const RatMatrix& rhs) const { return *this + (-rhs); }

RatMatrix RatMatrix::operator-() const {
    RatMatrix out(rows_, cols_);
    for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] = -data_[i];
    return out;
}

RatMatrix RatMatrix::scaled(const Rational& c) const {
    RatMatrix out(rows_, cols_);
    for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] = c * data_[i];
    return out;
}

RatMatrix RatMatrix::transpose() const {
    RatMatrix out(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) out.at(j, i) = at(i, j);
    return out;
}

RatMatrix RatMatrix::column_slice(std::size_t first, std::size_t count) const {
    if (first + count > cols_) throw std::out_of_range("RatMatrix: column slice");
    RatMatrix out(rows_, count);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < count; ++j) out.at(i, j) = at(i, first + j);
    return out;
}

RatMatrix RatMatrix::row_slice(std::size_t first, std::size_t count) const {
    if (first + count > rows_) throw std::out_of_range("RatMatrix: row slice");
    RatMatrix out(count, cols_);
    for (std::size_t i = 0; i < count; ++i)
        for (std::size_t j = 0; j < cols_; ++j) out.at(i, j) = at(first + i, j);
    return out;
}

RatMatrix RatMatrix::select_columns(const std::vector<std::size_t>& which) const {
    RatMatrix out(rows_, which.size());
    for (std::size_t j = 0; j < which.size(); ++j) {
        if (which[j] >= cols_) throw std::out_of_range("RatMatrix: column selection");
        for (std::size_t i = 0; i < rows_; ++i) out.at(i, j) = at(i, which[j]);
    }
    return out;
}

RatMatrix hstack(const RatMatrix& left, const RatMatrix& right) {
    if (left.rows() != right.rows()) throw std::invalid_argument("hstack: row mismatch");
    RatMatrix out(left.rows(), left.cols() + right.cols());
    for (std::size_t i = 0; i < left.rows(); ++i) {
        for (std::size_t j = 0; j < left.cols(); ++j) out.at(i, j) = left.at(i, j);
        for (std::size_t j = 0; j < right.cols(); ++j) out.at(i, left.cols() + j) = right.at(i, j);
    }
    return out;
}

RatMatrix vstack(const RatMatrix& top, const RatMatrix& bottom) {
    if (top.cols() != bottom.cols()) throw std::invalid_argument("vstack: column mismatch");
    RatMatrix out(top.rows() + bottom.rows(), top.cols());
    for (std::size_t j = 0; j < top.cols(); ++j) {
        for (std::size_t i = 0; i < top.rows(); ++i) out.at(i, j) = top.at(i, j);
        for (std::size_t i = 0; i < bottom.rows(); ++i) out.at(top.rows() + i, j) = bottom.at(i, j);
    }
    return out;
}

RatMatrix block_diag(const RatMatrix& a, const RatMatrix& b) {
    RatMatrix out(a.rows() + b.rows(), a.cols() + b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) out.at(i, j) = a.at(i, j);
    for (std::size_t i = 0; i < b.rows(); ++i)
        for (std::size_t j = 0; j < b.cols(); ++j) out.at(a.rows() + i, a.cols() + j) = b.at(i, j);
    return out;
}

RatMatrix kron(const RatMatrix& a, const RatMatrix& b) {
    RatMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (std::size_t ia = 0; ia < a.rows(); ++ia)
        for (std::size_t ja = 0; ja < a.cols(); ++ja) {
            if (a.at(ia, ja) == 0) continue;
            for (std::size_t ib = 0; ib < b.rows(); ++ib)
                for (std::size_t jb = 0; jb < b.cols(); ++jb)
                    out.at(ia * b.rows() + ib, ja * b.cols() + jb) = a.at(ia, ja) * b.at(ib, jb);
        }
    return out;
}

RatMatrix vec_columns(const RatMatrix& m) {
    RatMatrix out(m.rows() * m.cols(), 1);
    for (std::size_t j = 0; j < m.cols(); ++j)
        for (std::size_t i = 0; i < m.rows(); ++i) out.at(j * m.rows() + i, 0) = m.at(i, j);
    return out;
}

RatMatrix unvec_columns(const RatMatrix& v, std::size_t rows, std::size_t cols) {
    if (v.cols() != 1 || v.rows() != rows * cols) throw std::invalid_argument("unvec: shape");
    RatMatrix out(rows, cols);
    for (std::size_t j = 0; j < cols; ++j)
        for (std::size_t i = 0; i < rows; ++i) out.at(i, j) = v.at(j * rows + i, 0);
    return out;
}

namespace {

// Clears denominators row by row, then runs Bareiss elimination on the
// integer matrix (augmented with the transform when requested). Entries stay
// integral through the forward pass; the back pass divides by pivots.
struct Eliminator {
    RatMatrix work;       // echelonized copy
    RatMatrix transform;  // row ops applied to identity
    std::vector<std::size_t> pivots;
    bool track;

    Eliminator(const RatMatrix& m, bool want_transform)
        : work(m), transform(RatMatrix::identity(m.rows())), track(want_transform) {
        for (std::size_t i = 0; i < work.rows(); ++i) {
            Integer lcm = 1;
            for (std::size_t j = 0; j < work.cols(); ++j) {
                const Integer den = work.at(i, j).get_den();
                Integer g;
                mpz_gcd(g.get_mpz_t(), lcm.get_mpz_t(), den.get_mpz_t());
                lcm = lcm / g * den;
            }
            if (lcm != 1) scale_row(i, rat(lcm));
        }
        forward();
        backward();
    }

    void scale_row(std::size_t i, const Rational& c) {
        for (std::size_t j = 0; j < work.cols(); ++j) work.at(i, j) *= c;
        if (track)
            for (std::size_t j = 0; j < transform.cols(); ++j) transform.at(i, j) *= c;
    }

    void swap_rows(std::size_t a, std::size_t b) {
        if (a == b) return;
        for (std::size_t j = 0; j < work.cols(); ++j) std::swap(work.at(a, j), work.at(b, j));
        if (track)
            for (std::size_t j = 0; j < transform.cols(); ++j)
                std::swap(transform.at(a, j), transform.at(b, j));
    }

    void forward() {
        Rational prev_pivot = 1;
        std::size_t r = 0;
        for (std::size_t c = 0; c < work.cols() && r < work.rows(); ++c) {
            std::size_t sel = r;
            while (sel < work.rows() && work.at(sel, c) == 0) ++sel;
            if (sel == work.rows()) continue;
            swap_rows(r, sel);
            const Rational pivot = work.at(r, c);
            for (std::size_t i = r + 1; i < work.rows(); ++i) {
                const Rational factor = work.at(i, c);
                for (std::size_t j = 0; j < work.cols(); ++j)
                    work.at(i, j) = (pivot * work.at(i, j) - factor * work.at(r, j)) / prev_pivot;
                if (track)
                    for (std::size_t j = 0; j < transform.cols(); ++j)
                        transform.at(i, j) =
                            (pivot * transform.at(i, j) - factor * transform.at(r, j)) / prev_pivot;
            }
            pivots.push_back(c);
            prev_pivot = pivot;
            ++r;
        }
    }

    void backward() {
        for (std::size_t k = pivots.size(); k-- > 0;) {
            const std::size_t c = pivots[k];
            const Rational inv = 1 / work.at(k, c);
            scale_row(k, inv);
            for (std::size_t i = 0; i < k; ++i) {
                const Rational factor = work.at(i, c);
                if (factor == 0) continue;
                for (std::size_t j = 0; j < work.cols(); ++j)
                    work.at(i, j) -= factor * work.at(k, j);
                if (track)
                    for (std::size_t j = 0; j < transform.cols(); ++j)
                        transform.at(i, j) -= factor * transform.at(k, j);
            }
        }
    }
};

}  // namespace

RrefResult rref(const RatMatrix& m, bool want_transform) {
    Eliminator e(m, want_transform);
    RrefResult out;
    out.reduced = std::move(e.work);
    out.pivots = std::move(e.pivots);
    if (want_transform) out.transform = std::move(e.transform);
    return out;
}

std::size_t rank(const RatMatrix& m) { return rref(m).pivots.size(); }

RatMatrix nullspace_basis(const RatMatrix& m) {
    const RrefResult r = rref(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (std::size_t c : r.pivots) is_pivot[c] = true;
    std::vector<std::size_t> free_cols;
    for (std::size_t c = 0; c < m.cols(); ++c)
        if (!is_pivot[c]) free_cols.push_back(c);

    RatMatrix basis(m.cols(), free_cols.size());
    for (std::size_t k = 0; k < free_cols.size(); ++k) {
        basis.at(free_cols[k], k) = 1;
        for (std::size_t p = 0; p < r.pivots.size(); ++p)
            basis.at(r.pivots[p], k) = -r.reduced.at(p, free_cols[k]);
    }
    return basis;
}

RatMatrix rcef(const RatMatrix& m) {
    const RrefResult r = rref(m.transpose());
    return r.reduced.row_slice(0, r.pivots.size()).transpose();
}

RatMatrix columnspace_basis(const RatMatrix& m) { return rcef(m); }

RatMatrix left_nullspace_rows(const RatMatrix& m) {
    return rref(nullspace_basis(m.transpose()).transpose()).reduced;
}

RatSolve solve_rational(const RatMatrix& m, const RatMatrix& rhs) {
    if (m.rows() != rhs.rows()) throw std::invalid_argument("solve_rational: shape mismatch");
    const RrefResult r = rref(hstack(m, rhs), true);

    // A pivot landing in the RHS block certifies inconsistency.
    for (std::size_t p = 0; p < r.pivots.size(); ++p)
        if (r.pivots[p] >= m.cols()) {
            RatSolve out;
            out.row_witness = r.transform.row_slice(p, 1);
            return out;
        }

    RatMatrix x(m.cols(), rhs.cols());
    for (std::size_t p = 0; p < r.pivots.size(); ++p)
        for (std::size_t j = 0; j < rhs.cols(); ++j)
            x.at(r.pivots[p], j) = r.reduced.at(p, m.cols() + j);
    RatSolve out;
    out.solution = std::move(x);
    return out;
}

std::optional<RatMatrix> inverse(const RatMatrix& m) {
    if (m.rows() != m.cols()) return std::nullopt;
    RatSolve s = solve_rational(m, RatMatrix::identity(m.rows()));
    if (!s.solution) return std::nullopt;
    if (!((*s.solution * m).is_identity())) return std::nullopt;
    return s.solution;
}

bool columns_in_span(const RatMatrix& space, const RatMatrix& vectors) {
    if (space.rows() != vectors.rows()) throw std::invalid_argument("columns_in_span: shape");
    if (vectors.cols() == 0) return true;
    return rank(hstack(space, vectors)) == rank(space);
}

}  // namespace preab
