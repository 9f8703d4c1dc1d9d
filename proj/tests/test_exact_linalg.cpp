#include <doctest.h>

#include "preab/corpus.hpp"
#include "preab/int_matrix.hpp"
#include "preab/rat_matrix.hpp"

using namespace preab;

namespace {

// Independent determinant oracle (Laplace expansion) for small matrices.
Rational det_oracle(const RatMatrix& m) {
    REQUIRE(m.rows() == m.cols());
    const std::size_t n = m.rows();
    if (n == 0) return rat(1);
    if (n == 1) return m.at(0, 0);
    Rational total = 0;
    for (std::size_t j = 0; j < n; ++j) {
        if (m.at(0, j) == 0) continue;
        RatMatrix minor(n - 1, n - 1);
        for (std::size_t r = 1; r < n; ++r) {
            std::size_t cc = 0;
            for (std::size_t c = 0; c < n; ++c) {
                if (c == j) continue;
                minor.at(r - 1, cc++) = m.at(r, c);
            }
        }
        const Rational term = m.at(0, j) * det_oracle(minor);
        total += (j % 2 == 0) ? term : -term;
    }
    return total;
}

Rational det_oracle(const IntMatrix& m) { return det_oracle(to_rational(m)); }

// Plain rational Gauss-Jordan, kept deliberately naive: the independent
// oracle for the fraction-free implementation.
RatMatrix naive_rref(RatMatrix m) {
    std::size_t row = 0;
    for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
        std::size_t pivot = row;
        while (pivot < m.rows() && m.at(pivot, col) == 0) ++pivot;
        if (pivot == m.rows()) continue;
        for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m.at(row, j), m.at(pivot, j));
        const Rational inv = 1 / m.at(row, col);
        for (std::size_t j = 0; j < m.cols(); ++j) m.at(row, j) *= inv;
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == row || m.at(i, col) == 0) continue;
            const Rational factor = m.at(i, col);
            for (std::size_t j = 0; j < m.cols(); ++j) m.at(i, j) -= factor * m.at(row, j);
        }
        ++row;
    }
    return m;
}

RatMatrix random_matrix(SplitMix64& rng, std::size_t rows, std::size_t cols) {
    RatMatrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j)
            m.at(i, j) = rat(rng.range(-4, 4), rng.below(3) == 0 ? 3 : 1);
    return m;
}

IntMatrix random_int_matrix(SplitMix64& rng, std::size_t rows, std::size_t cols) {
    IntMatrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) m.at(i, j) = rng.range(-5, 5);
    return m;
}

}  // namespace

TEST_CASE("rref named cases") {
    const RatMatrix id3 = RatMatrix::identity(3);
    const RrefResult r_id = rref(id3);
    CHECK(r_id.reduced == id3);
    CHECK(r_id.pivots == std::vector<std::size_t>{0, 1, 2});

    const RrefResult r = rref(RatMatrix{{1, 1}, {2, 2}});
    CHECK(r.reduced == RatMatrix{{1, 1}, {0, 0}});
    CHECK(r.pivots.size() == 1);

    const RrefResult z = rref(RatMatrix::zero(2, 3));
    CHECK(z.reduced == RatMatrix::zero(2, 3));
    CHECK(z.pivots.empty());
}

TEST_CASE("rref is idempotent and matches the naive oracle") {
    SplitMix64 rng(11);
    for (int trial = 0; trial < 60; ++trial) {
        const RatMatrix m = random_matrix(rng, rng.below(5), rng.below(5));
        const RatMatrix reduced = rref(m).reduced;
        CHECK(reduced == naive_rref(m));
        CHECK(rref(reduced).reduced == reduced);
        CHECK(rank(m) == rank(m.transpose()));
    }
}

TEST_CASE("rref transform tracks the row operations") {
    SplitMix64 rng(12);
    for (int trial = 0; trial < 30; ++trial) {
        const RatMatrix m = random_matrix(rng, 1 + rng.below(4), 1 + rng.below(4));
        const RrefResult r = rref(m, true);
        CHECK(r.transform * m == r.reduced);
    }
}

TEST_CASE("nullspace of [[1,1]] is spanned by (1,-1)") {
    const RatMatrix n = nullspace_basis(RatMatrix{{1, 1}});
    REQUIRE(n.cols() == 1);
    RatMatrix expected(2, 1);
    expected.at(0, 0) = 1;
    expected.at(1, 0) = -1;
    CHECK(columns_in_span(n, expected));
    CHECK(columns_in_span(expected, n));
}

TEST_CASE("solve named cases") {
    RatMatrix b(3, 1);
    b.at(0, 0) = rat(1, 2);
    b.at(1, 0) = rat(-2);
    b.at(2, 0) = rat(7, 3);
    const RatSolve s_id = solve_rational(RatMatrix::identity(3), b);
    REQUIRE(s_id.solution.has_value());
    CHECK(*s_id.solution == b);

    const RatSolve s_half = solve_rational(RatMatrix{{2}}, RatMatrix{{1}});
    REQUIRE(s_half.solution.has_value());
    CHECK(s_half.solution->at(0, 0) == rat(1, 2));

    // Inconsistent system: the witness row certifies it.
    const RatSolve bad = solve_rational(RatMatrix{{1, 1}, {1, 1}}, RatMatrix{{0}, {1}});
    CHECK(!bad.solution.has_value());
    REQUIRE(bad.row_witness.has_value());
    CHECK((*bad.row_witness * RatMatrix{{1, 1}, {1, 1}}).is_zero());
    CHECK(!(*bad.row_witness * RatMatrix{{0}, {1}}).is_zero());
}

TEST_CASE("solve and nullspace stay consistent on random probes") {
    SplitMix64 rng(13);
    for (int trial = 0; trial < 60; ++trial) {
        const RatMatrix m = random_matrix(rng, rng.below(5), rng.below(5));
        const RatMatrix n = nullspace_basis(m);
        CHECK((m * n).is_zero());
        CHECK(n.cols() == m.cols() - rank(m));

        const RatMatrix x = random_matrix(rng, m.cols(), 1);
        const RatMatrix b = m * x;
        const RatSolve s = solve_rational(m, b);
        REQUIRE(s.solution.has_value());
        CHECK(m * *s.solution == b);
    }
}

TEST_CASE("rcef is a canonical column-span form") {
    SplitMix64 rng(14);
    for (int trial = 0; trial < 40; ++trial) {
        const RatMatrix m = random_matrix(rng, rng.below(4), rng.below(4));
        const RatMatrix c = rcef(m);
        CHECK(rank(c) == c.cols());
        CHECK(columns_in_span(m, c));
        CHECK(columns_in_span(c, m));
        CHECK(rcef(c) == c);
        // Scaling columns must not change the canonical form.
        CHECK(rcef(m.scaled(rat(3, 2))) == c);
    }
}

TEST_CASE("smith normal form named cases") {
    IntMatrix d23(2, 2);
    d23.at(0, 0) = 2;
    d23.at(1, 1) = 3;
    const SnfDecomposition snf = smith_normal_form(d23);
    CHECK(snf.s.at(0, 0) == 1);
    CHECK(snf.s.at(1, 1) == 6);

    const SnfDecomposition id = smith_normal_form(IntMatrix::identity(3));
    CHECK(id.s == IntMatrix::identity(3));

    CHECK(!solve_integer(IntMatrix{{2}}, IntMatrix{{1}}).has_value());
    const auto even = solve_integer(IntMatrix{{2}}, IntMatrix{{6}});
    REQUIRE(even.has_value());
    CHECK(even->at(0, 0) == 3);
}

TEST_CASE("smith normal form invariants on random probes") {
    SplitMix64 rng(15);
    for (int trial = 0; trial < 60; ++trial) {
        const IntMatrix m = random_int_matrix(rng, rng.below(4), rng.below(4));
        const SnfDecomposition snf = smith_normal_form(m);
        CHECK(snf.u * m * snf.v == snf.s);
        CHECK(snf.u * snf.u_inverse == IntMatrix::identity(m.rows()));
        if (m.rows() > 0) {
            const Rational det_u = det_oracle(snf.u);
            CHECK((det_u == 1 || det_u == -1));
        }
        if (m.cols() > 0) {
            const Rational det_v = det_oracle(snf.v);
            CHECK((det_v == 1 || det_v == -1));
        }
        const auto diag = snf.diagonal();
        for (std::size_t i = 0; i + 1 < diag.size(); ++i) {
            CHECK(diag[i] >= 0);
            if (diag[i] != 0) CHECK(diag[i + 1] % diag[i] == 0);
            if (diag[i] == 0) CHECK(diag[i + 1] == 0);
        }
        // Off-diagonal entries vanish.
        for (std::size_t i = 0; i < snf.s.rows(); ++i)
            for (std::size_t j = 0; j < snf.s.cols(); ++j)
                if (i != j) CHECK(snf.s.at(i, j) == 0);
    }
}

TEST_CASE("integer nullspace and lattice routines") {
    SplitMix64 rng(16);
    for (int trial = 0; trial < 60; ++trial) {
        const IntMatrix m = random_int_matrix(rng, rng.below(4), rng.below(4));
        const IntMatrix n = integer_nullspace(m);
        CHECK((m * n).is_zero());

        const IntMatrix basis = column_lattice_basis(m);
        // Mutual containment: the basis generates exactly col(m).
        CHECK(columns_in_lattice(basis, m));
        CHECK(columns_in_lattice(m, basis));

        const IntMatrix x = random_int_matrix(rng, m.cols(), 1);
        CHECK(columns_in_lattice(m, m * x));
    }

    // Parity witness: (1,1) generates a strict sublattice of Z^2.
    IntMatrix diag2(2, 1);
    diag2.at(0, 0) = 1;
    diag2.at(1, 0) = 1;
    IntMatrix odd(2, 1);
    odd.at(0, 0) = 1;
    CHECK(!columns_in_lattice(diag2, odd));
}

TEST_CASE("preimage lattice of a congruence") {
    // {a : a * 1 in 2Z} = 2Z.
    const IntMatrix lattice = preimage_lattice(IntMatrix{{1}}, IntMatrix{{2}});
    CHECK(columns_in_lattice(lattice, IntMatrix{{2}}));
    CHECK(!columns_in_lattice(lattice, IntMatrix{{1}}));
}
