#include "preab/claims.hpp"

namespace preab {

namespace {

bool spans_equal(const RatMatrix& a, const RatMatrix& b) {
    return columns_in_span(a, b) && columns_in_span(b, a);
}

bool full_row(const RatMatrix& m) { return rank(m) == m.rows(); }
bool full_col(const RatMatrix& m) { return rank(m) == m.cols(); }

// u invertible on ambient spaces and mapping src span onto tgt span.
bool pair_iso(const RatMatrix& u, const RatMatrix& src_sub, const RatMatrix& tgt_sub) {
    if (u.rows() != u.cols() || rank(u) != u.rows()) return false;
    return spans_equal(u * src_sub, tgt_sub);
}

// Mock cokernel projection of f into (n, tgt_sub): kill ran f + tgt subspace.
RatMatrix mock_quotient_rows(const RatMatrix& f, const RatMatrix& tgt_sub) {
    return left_nullspace_rows(hstack(f, tgt_sub));
}

// Replays mockpair's canonical-comparison kernel recognition with raw
// elimination: f is recognized iff the comparison into ker(mock-coker f)
// is a pair isomorphism.
bool mock_kernel_recognized(const RatMatrix& f, const RatMatrix& src_sub,
                            const RatMatrix& tgt_sub) {
    const RatMatrix q = mock_quotient_rows(f, tgt_sub);
    const RatMatrix nq = nullspace_basis(q);
    const RatSolve wq_coords = solve_rational(nq, tgt_sub);
    if (!wq_coords.solution) return false;  // cannot happen: q kills tgt_sub
    const RatMatrix wq = rcef(*wq_coords.solution);
    // Ambient comparison u with nq * u = f; nq injective makes it unique.
    const RatSolve u = solve_rational(nq, f);
    if (!u.solution) return false;
    // u must be a valid pair morphism (m, src_sub) -> (k, wq).
    if (!columns_in_span(wq, *u.solution * src_sub)) return false;
    return pair_iso(*u.solution, src_sub, wq);
}

// Dual replay for mockpair's cokernel recognition.
bool mock_cokernel_recognized(const RatMatrix& f, const RatMatrix& src_sub,
                              const RatMatrix& tgt_sub) {
    // Honest pair kernel of f, then the mock cokernel of the kernel arrow
    // (which only sees the arrow matrix and the source subspace).
    const RatMatrix n = nullspace_basis(f);
    const RatMatrix q = mock_quotient_rows(n, src_sub);
    const RatMatrix q_sub = rcef(q * src_sub);
    // Comparison u with u * q = f; q has full row rank so u is unique.
    const RatSolve ut = solve_rational(q.transpose(), f.transpose());
    if (!ut.solution) return false;
    const RatMatrix u = ut.solution->transpose();
    if (!columns_in_span(tgt_sub, u * q_sub)) return false;
    return pair_iso(u, q_sub, tgt_sub);
}

IntMatrix int_identity_cols(std::size_t n) { return IntMatrix::identity(n); }

struct Checker {
    bool operator()(const ClaimProductEquals& c) const { return c.a * c.b == c.c; }
    bool operator()(const ClaimMatricesEqual& c) const { return (c.a == c.b) == c.expect; }
    bool operator()(const ClaimMatrixZero& c) const { return c.a.is_zero() == c.expect; }
    bool operator()(const ClaimFullRowRank& c) const {
        return (rank(c.m) == c.m.rows()) == c.expect;
    }
    bool operator()(const ClaimFullColumnRank& c) const {
        return (rank(c.m) == c.m.cols()) == c.expect;
    }
    bool operator()(const ClaimSpanContains& c) const {
        return columns_in_span(c.space, c.vectors) == c.expect;
    }
    bool operator()(const ClaimRationalUnsolvable& c) const {
        if (c.witness.rows() != 1 || c.witness.cols() != c.m.rows()) return false;
        return (c.witness * c.m).is_zero() && !(c.witness * c.rhs).is_zero();
    }
    bool operator()(const ClaimIntegerUnsolvable& c) const {
        return !solve_integer(c.m, c.rhs).has_value();
    }
    bool operator()(const ClaimIntegerSolves& c) const { return c.m * c.solution == c.rhs; }
    bool operator()(const ClaimLatticeContains& c) const {
        return columns_in_lattice(c.lattice, c.vectors) == c.expect;
    }
    bool operator()(const ClaimInvariantFactors& c) const {
        return invariant_factors(c.m) == c.factors;
    }
    bool operator()(const ClaimPairKernel& c) const {
        const RatMatrix preimage = nullspace_basis(left_nullspace_rows(c.tgt_subspace) * c.f);
        const bool verdict = full_col(c.f) && spans_equal(c.src_subspace, preimage);
        return verdict == c.expect;
    }
    bool operator()(const ClaimPairCokernel& c) const {
        const bool verdict = full_row(c.f) && spans_equal(c.f * c.src_subspace, c.tgt_subspace);
        return verdict == c.expect;
    }
    bool operator()(const ClaimMockEpi& c) const {
        return full_row(hstack(c.f, c.tgt_subspace)) == c.expect;
    }
    bool operator()(const ClaimMockKernel& c) const {
        return mock_kernel_recognized(c.f, c.src_subspace, c.tgt_subspace) == c.expect;
    }
    bool operator()(const ClaimMockCokernel& c) const {
        return mock_cokernel_recognized(c.f, c.src_subspace, c.tgt_subspace) == c.expect;
    }
    bool operator()(const ClaimFgabMono& c) const {
        const IntMatrix lattice = preimage_lattice(c.f, c.tgt_relations);
        return columns_in_lattice(c.src_relations, lattice) == c.expect;
    }
    bool operator()(const ClaimFgabEpi& c) const {
        return columns_in_lattice(hstack(c.f, c.tgt_relations),
                                  int_identity_cols(c.f.rows())) == c.expect;
    }
};

struct KindName {
    const char* operator()(const ClaimProductEquals&) const { return "product_equals"; }
    const char* operator()(const ClaimMatricesEqual&) const { return "matrices_equal"; }
    const char* operator()(const ClaimMatrixZero&) const { return "matrix_zero"; }
    const char* operator()(const ClaimFullRowRank&) const { return "full_row_rank"; }
    const char* operator()(const ClaimFullColumnRank&) const { return "full_column_rank"; }
    const char* operator()(const ClaimSpanContains&) const { return "span_contains"; }
    const char* operator()(const ClaimRationalUnsolvable&) const { return "rational_unsolvable"; }
    const char* operator()(const ClaimIntegerUnsolvable&) const { return "integer_unsolvable"; }
    const char* operator()(const ClaimIntegerSolves&) const { return "integer_solves"; }
    const char* operator()(const ClaimLatticeContains&) const { return "lattice_contains"; }
    const char* operator()(const ClaimInvariantFactors&) const { return "invariant_factors"; }
    const char* operator()(const ClaimPairKernel&) const { return "pair_kernel"; }
    const char* operator()(const ClaimPairCokernel&) const { return "pair_cokernel"; }
    const char* operator()(const ClaimMockEpi&) const { return "mock_epi"; }
    const char* operator()(const ClaimMockKernel&) const { return "mock_kernel"; }
    const char* operator()(const ClaimMockCokernel&) const { return "mock_cokernel"; }
    const char* operator()(const ClaimFgabMono&) const { return "fgab_mono"; }
    const char* operator()(const ClaimFgabEpi&) const { return "fgab_epi"; }
};

}  // namespace

bool claim_holds(const Claim& claim) { return std::visit(Checker{}, claim.body); }

const char* claim_kind_name(const Claim& claim) { return std::visit(KindName{}, claim.body); }

}  // namespace preab
