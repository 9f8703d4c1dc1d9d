#include "preab/instances.hpp"

namespace preab {

namespace {

const PairObjData& pair_data(const ObjectPayload& p) {
    if (!std::holds_alternative<PairObjData>(p.v))
        throw CategoryError("pairvect: payload is not a subspace pair");
    return std::get<PairObjData>(p.v);
}

// Constraint block expressing "u maps span(src_basis) into span(tgt_basis)"
// over unknowns [vec(u); vec(W)]: u*src_basis - tgt_basis*W = 0.
struct SubspaceConstraint {
    RatMatrix block;       // rows x (u_vars + w_vars)
    std::size_t u_vars, w_vars;
};

SubspaceConstraint subspace_constraint(std::size_t u_rows, std::size_t u_cols,
                                       const RatMatrix& src_basis, const RatMatrix& tgt_basis) {
    SubspaceConstraint c;
    c.u_vars = u_rows * u_cols;
    c.w_vars = tgt_basis.cols() * src_basis.cols();
    const RatMatrix on_u = kron(src_basis.transpose(), RatMatrix::identity(u_rows));
    const RatMatrix on_w = kron(RatMatrix::identity(src_basis.cols()), tgt_basis);
    c.block = hstack(on_u, -on_w);
    return c;
}

}  // namespace

const std::string& PairVectInstance::id() const {
    static const std::string name = "pairvect";
    return name;
}

std::size_t PairVectInstance::coord_dim(const ObjectPayload& payload) const {
    return pair_data(payload).dim;
}

ObjectPayload PairVectInstance::biproduct_object(const ObjectPayload& a,
                                                 const ObjectPayload& b) const {
    const PairObjData& da = pair_data(a);
    const PairObjData& db = pair_data(b);
    return pair_obj(da.dim + db.dim, block_diag(da.subspace, db.subspace));
}

bool PairVectInstance::valid_object(const ObjectPayload& payload) const {
    if (!std::holds_alternative<PairObjData>(payload.v)) return false;
    const PairObjData& d = std::get<PairObjData>(payload.v);
    return d.subspace.rows() == d.dim && d.subspace == rcef(d.subspace);
}

bool PairVectInstance::valid_morphism(const Morphism& f) const {
    if (f.source.instance != id() || f.target.instance != id()) return false;
    if (!valid_object(f.source.payload) || !valid_object(f.target.payload)) return false;
    if (!std::holds_alternative<RatMatrix>(f.payload.v)) return false;
    const PairObjData& src = pair_data(f.source.payload);
    const PairObjData& tgt = pair_data(f.target.payload);
    const RatMatrix& m = arrow_matrix(f);
    if (m.rows() != tgt.dim || m.cols() != src.dim) return false;
    return columns_in_span(tgt.subspace, m * src.subspace);
}

bool PairVectInstance::object_eq(const ObjectPayload& a, const ObjectPayload& b) const {
    const PairObjData& da = pair_data(a);
    const PairObjData& db = pair_data(b);
    return da.dim == db.dim && da.subspace == db.subspace;
}

bool PairVectInstance::morphism_eq(const Morphism& f, const Morphism& g) const {
    return payload_identical(f.source.payload, g.source.payload) &&
           payload_identical(f.target.payload, g.target.payload) &&
           arrow_matrix(f) == arrow_matrix(g);
}

ObjectPayload PairVectInstance::zero_object() const { return pair_obj(0, RatMatrix(0, 0)); }

KernelResult PairVectInstance::kernel(const Morphism& f) const {
    const PairObjData& src = pair_data(f.source.payload);
    const RatMatrix& m = arrow_matrix(f);

    RatMatrix basis = nullspace_basis(m);  // ambient kernel, src.dim x k
    // K cap U, parametrized through the source subspace basis.
    const RatMatrix t = nullspace_basis(m * src.subspace);
    const RatMatrix cap = src.subspace * t;  // columns inside ker(m) and U
    RatSolve coords = solve_rational(basis, cap);
    if (!coords.solution) throw CategoryError("pairvect kernel: internal coordinate solve failed");
    ObjectRef object{id(), pair_obj(basis.cols(), rcef(*coords.solution))};

    KernelResult out;
    out.arrow = Morphism{object, f.source, ArrowPayload{std::move(basis)}};
    out.object = std::move(object);
    return out;
}

CokernelResult PairVectInstance::cokernel(const Morphism& f) const {
    const PairObjData& tgt = pair_data(f.target.payload);
    RatMatrix q = left_nullspace_rows(arrow_matrix(f));
    ObjectRef object{id(), pair_obj(q.rows(), rcef(q * tgt.subspace))};
    CokernelResult out;
    out.arrow = Morphism{f.target, object, ArrowPayload{std::move(q)}};
    out.object = std::move(object);
    return out;
}

const std::string& MockPairInstance::id() const {
    static const std::string name = "mockpair";
    return name;
}

CokernelResult MockPairInstance::cokernel(const Morphism& f) const {
    const PairObjData& tgt = pair_data(f.target.payload);
    // Deliberately wrong: quotient by ran f + target subspace (the
    // quotient-by-closure failure mode, at desk scale).
    RatMatrix q = left_nullspace_rows(hstack(arrow_matrix(f), tgt.subspace));
    ObjectRef object{id(), pair_obj(q.rows(), rcef(q * tgt.subspace))};
    CokernelResult out;
    out.arrow = Morphism{f.target, object, ArrowPayload{std::move(q)}};
    out.object = std::move(object);
    return out;
}

SolveOutcome PairVectInstance::solve_right(const Morphism& f, const Morphism& v) const {
    const PairObjData& fsrc = pair_data(f.source.payload);  // X, the unknown's target
    const PairObjData& vsrc = pair_data(v.source.payload);  // P, the unknown's source
    const RatMatrix& fm = arrow_matrix(f);
    const RatMatrix& vm = arrow_matrix(v);

    const std::size_t m = fsrc.dim, p = vsrc.dim;
    const SubspaceConstraint sc = subspace_constraint(m, p, vsrc.subspace, fsrc.subspace);
    // Rows: f*u = v, then the subspace constraint.
    const RatMatrix top =
        hstack(kron(RatMatrix::identity(p), fm), RatMatrix::zero(fm.rows() * p, sc.w_vars));
    const RatMatrix system = vstack(top, sc.block);
    const RatMatrix rhs =
        vstack(vec_columns(vm), RatMatrix::zero(sc.block.rows(), 1));

    RatSolve s = solve_rational(system, rhs);
    SolveOutcome out;
    if (s.solution) {
        RatMatrix u = unvec_columns(s.solution->row_slice(0, sc.u_vars), m, p);
        out.solution = Morphism{v.source, f.source, ArrowPayload{std::move(u)}};
    } else {
        out.evidence = Claim{"no structure-preserving lift in " + id(), -1,
                             ClaimRationalUnsolvable{system, rhs, std::move(*s.row_witness)}};
    }
    return out;
}

SolveOutcome PairVectInstance::solve_left(const Morphism& f, const Morphism& v) const {
    const PairObjData& ftgt = pair_data(f.target.payload);  // Y, the unknown's source
    const PairObjData& vtgt = pair_data(v.target.payload);  // Z, the unknown's target
    const RatMatrix& fm = arrow_matrix(f);
    const RatMatrix& vm = arrow_matrix(v);

    const std::size_t q = vtgt.dim, n = ftgt.dim;
    const SubspaceConstraint sc = subspace_constraint(q, n, ftgt.subspace, vtgt.subspace);
    const RatMatrix top =
        hstack(kron(fm.transpose(), RatMatrix::identity(q)),
               RatMatrix::zero(q * fm.cols(), sc.w_vars));
    const RatMatrix system = vstack(top, sc.block);
    const RatMatrix rhs = vstack(vec_columns(vm), RatMatrix::zero(sc.block.rows(), 1));

    RatSolve s = solve_rational(system, rhs);
    SolveOutcome out;
    if (s.solution) {
        RatMatrix u = unvec_columns(s.solution->row_slice(0, sc.u_vars), q, n);
        out.solution = Morphism{f.target, v.target, ArrowPayload{std::move(u)}};
    } else {
        out.evidence = Claim{"no structure-preserving extension in " + id(), -1,
                             ClaimRationalUnsolvable{system, rhs, std::move(*s.row_witness)}};
    }
    return out;
}

std::vector<Morphism> PairVectInstance::hom_generators(const ObjectRef& a,
                                                       const ObjectRef& b) const {
    const PairObjData& src = pair_data(a.payload);
    const PairObjData& tgt = pair_data(b.payload);
    const std::size_t rows = tgt.dim, cols = src.dim;

    const SubspaceConstraint sc = subspace_constraint(rows, cols, src.subspace, tgt.subspace);
    const RatMatrix null = nullspace_basis(sc.block);
    // Valid matrices are the projection of the nullspace to the u-block.
    const RatMatrix u_part = rcef(null.row_slice(0, sc.u_vars));

    std::vector<Morphism> out;
    out.reserve(u_part.cols());
    for (std::size_t j = 0; j < u_part.cols(); ++j)
        out.push_back(
            Morphism{a, b, ArrowPayload{unvec_columns(u_part.column_slice(j, 1), rows, cols)}});
    return out;
}

std::string PairVectInstance::describe_object(const ObjectPayload& payload) const {
    const PairObjData& d = pair_data(payload);
    return "(U^" + std::to_string(d.subspace.cols()) + " <= Q^" + std::to_string(d.dim) + ")";
}

Claim PairVectInstance::morphism_neq_claim(const Morphism& f, const Morphism& g) const {
    return Claim{"morphisms differ in " + id(), -1,
                 ClaimMatricesEqual{arrow_matrix(f), arrow_matrix(g), false}};
}

}  // namespace preab
