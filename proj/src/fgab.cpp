#include "preab/instances.hpp"

namespace preab {

namespace {

const FgabObjData& fgab_data(const ObjectPayload& p) {
    if (!std::holds_alternative<FgabObjData>(p.v))
        throw CategoryError("fgab: payload is not a presentation");
    return std::get<FgabObjData>(p.v);
}

IntMatrix arrow_int(const Morphism& f) {
    auto m = to_integer(arrow_matrix(f));
    if (!m) throw CategoryError("fgab: arrow matrix is not integral");
    return *m;
}

}  // namespace

const std::string& FgabInstance::id() const {
    static const std::string name = "fgab";
    return name;
}

std::size_t FgabInstance::coord_dim(const ObjectPayload& payload) const {
    return fgab_data(payload).generators;
}

ObjectPayload FgabInstance::biproduct_object(const ObjectPayload& a,
                                             const ObjectPayload& b) const {
    const FgabObjData& da = fgab_data(a);
    const FgabObjData& db = fgab_data(b);
    return fgab_obj(da.generators + db.generators, block_diag(da.relations, db.relations));
}

bool FgabInstance::valid_object(const ObjectPayload& payload) const {
    if (!std::holds_alternative<FgabObjData>(payload.v)) return false;
    const FgabObjData& d = std::get<FgabObjData>(payload.v);
    if (d.relations.rows() != d.generators) return false;
    const ObjectPayload canonical = fgab_obj(d.generators, d.relations);
    return std::get<FgabObjData>(canonical.v).invariants == d.invariants;
}

bool FgabInstance::valid_morphism(const Morphism& f) const {
    if (f.source.instance != id() || f.target.instance != id()) return false;
    if (!valid_object(f.source.payload) || !valid_object(f.target.payload)) return false;
    if (!std::holds_alternative<RatMatrix>(f.payload.v)) return false;
    const FgabObjData& src = fgab_data(f.source.payload);
    const FgabObjData& tgt = fgab_data(f.target.payload);
    const RatMatrix& m = arrow_matrix(f);
    if (m.rows() != tgt.generators || m.cols() != src.generators) return false;
    auto mi = to_integer(m);
    if (!mi) return false;
    // Relations must map into relations.
    return columns_in_lattice(tgt.relations, *mi * src.relations);
}

bool FgabInstance::object_eq(const ObjectPayload& a, const ObjectPayload& b) const {
    return fgab_data(a).invariants == fgab_data(b).invariants;
}

bool FgabInstance::morphism_eq(const Morphism& f, const Morphism& g) const {
    if (!payload_identical(f.source.payload, g.source.payload) ||
        !payload_identical(f.target.payload, g.target.payload))
        return false;
    const FgabObjData& tgt = fgab_data(f.target.payload);
    return columns_in_lattice(tgt.relations, arrow_int(f) - arrow_int(g));
}

ObjectPayload FgabInstance::zero_object() const { return fgab_obj(0, IntMatrix(0, 0)); }

KernelResult FgabInstance::kernel(const Morphism& f) const {
    const FgabObjData& src = fgab_data(f.source.payload);
    const FgabObjData& tgt = fgab_data(f.target.payload);

    const IntMatrix lattice = preimage_lattice(arrow_int(f), tgt.relations);
    const IntMatrix k_relations = preimage_lattice(lattice, src.relations);
    ObjectRef object{id(), fgab_obj(lattice.cols(), k_relations)};

    KernelResult out;
    out.arrow = Morphism{object, f.source, ArrowPayload{to_rational(lattice)}};
    out.object = std::move(object);
    return out;
}

CokernelResult FgabInstance::cokernel(const Morphism& f) const {
    const FgabObjData& tgt = fgab_data(f.target.payload);
    ObjectRef object{id(), fgab_obj(tgt.generators, hstack(arrow_int(f), tgt.relations))};
    CokernelResult out;
    out.arrow =
        Morphism{f.target, object, ArrowPayload{RatMatrix::identity(tgt.generators)}};
    out.object = std::move(object);
    return out;
}

SolveOutcome FgabInstance::solve_right(const Morphism& f, const Morphism& v) const {
    const FgabObjData& x = fgab_data(f.source.payload);  // unknown's target
    const FgabObjData& y = fgab_data(f.target.payload);
    const FgabObjData& p = fgab_data(v.source.payload);  // unknown's source
    const IntMatrix fm = arrow_int(f);
    const IntMatrix vm = arrow_int(v);

    const std::size_t u_vars = x.generators * p.generators;
    const std::size_t a1_vars = x.relations.cols() * p.relations.cols();
    const std::size_t a2_vars = y.relations.cols() * p.generators;

    // Row block 1: F u - R_Y A2 = V. Row block 2: u R_P - R_X A1 = 0.
    const IntMatrix id_p = IntMatrix::identity(p.generators);
    const IntMatrix top = hstack(
        hstack(kron(id_p, fm), IntMatrix::zero(y.generators * p.generators, a1_vars)),
        -kron(id_p, y.relations));
    const IntMatrix bottom = hstack(
        hstack(kron(p.relations.transpose(), IntMatrix::identity(x.generators)),
               -kron(IntMatrix::identity(p.relations.cols()), x.relations)),
        IntMatrix::zero(x.generators * p.relations.cols(), a2_vars));
    const IntMatrix system = vstack(top, bottom);
    const IntMatrix rhs =
        vstack(vec_columns(vm), IntMatrix::zero(x.generators * p.relations.cols(), 1));

    SolveOutcome out;
    if (auto z = solve_integer(system, rhs)) {
        IntMatrix u(u_vars, 1);
        for (std::size_t i = 0; i < u_vars; ++i) u.at(i, 0) = z->at(i, 0);
        out.solution = Morphism{v.source, f.source,
                                ArrowPayload{to_rational(
                                    unvec_columns(u, x.generators, p.generators))}};
    } else {
        out.evidence =
            Claim{"no integral lift in fgab", -1, ClaimIntegerUnsolvable{system, rhs}};
    }
    return out;
}

SolveOutcome FgabInstance::solve_left(const Morphism& f, const Morphism& v) const {
    const FgabObjData& x = fgab_data(f.source.payload);
    const FgabObjData& y = fgab_data(f.target.payload);  // unknown's source
    const FgabObjData& z = fgab_data(v.target.payload);  // unknown's target
    const IntMatrix fm = arrow_int(f);
    const IntMatrix vm = arrow_int(v);

    const std::size_t u_vars = z.generators * y.generators;
    const std::size_t a1_vars = z.relations.cols() * y.relations.cols();
    const std::size_t a2_vars = z.relations.cols() * x.generators;

    // Row block 1: u F - R_Z A2 = V. Row block 2: u R_Y - R_Z A1 = 0.
    const IntMatrix top = hstack(
        hstack(kron(fm.transpose(), IntMatrix::identity(z.generators)),
               IntMatrix::zero(z.generators * x.generators, a1_vars)),
        -kron(IntMatrix::identity(x.generators), z.relations));
    const IntMatrix bottom = hstack(
        hstack(kron(y.relations.transpose(), IntMatrix::identity(z.generators)),
               -kron(IntMatrix::identity(y.relations.cols()), z.relations)),
        IntMatrix::zero(z.generators * y.relations.cols(), a2_vars));
    const IntMatrix system = vstack(top, bottom);
    const IntMatrix rhs =
        vstack(vec_columns(vm), IntMatrix::zero(z.generators * y.relations.cols(), 1));

    SolveOutcome out;
    if (auto sol = solve_integer(system, rhs)) {
        IntMatrix u(u_vars, 1);
        for (std::size_t i = 0; i < u_vars; ++i) u.at(i, 0) = sol->at(i, 0);
        out.solution = Morphism{f.target, v.target,
                                ArrowPayload{to_rational(
                                    unvec_columns(u, z.generators, y.generators))}};
    } else {
        out.evidence =
            Claim{"no integral extension in fgab", -1, ClaimIntegerUnsolvable{system, rhs}};
    }
    return out;
}

std::vector<Morphism> FgabInstance::hom_generators(const ObjectRef& a,
                                                   const ObjectRef& b) const {
    const FgabObjData& src = fgab_data(a.payload);
    const FgabObjData& tgt = fgab_data(b.payload);
    const std::size_t u_vars = tgt.generators * src.generators;

    // Valid matrices: u R_A = R_B W for some integral W.
    const IntMatrix constraint =
        hstack(kron(src.relations.transpose(), IntMatrix::identity(tgt.generators)),
               -kron(IntMatrix::identity(src.relations.cols()), tgt.relations));
    const IntMatrix null = integer_nullspace(constraint);
    IntMatrix head(u_vars, null.cols());
    for (std::size_t i = 0; i < u_vars; ++i)
        for (std::size_t j = 0; j < null.cols(); ++j) head.at(i, j) = null.at(i, j);
    const IntMatrix basis = column_lattice_basis(head);

    std::vector<Morphism> out;
    out.reserve(basis.cols());
    for (std::size_t j = 0; j < basis.cols(); ++j) {
        IntMatrix col(u_vars, 1);
        for (std::size_t i = 0; i < u_vars; ++i) col.at(i, 0) = basis.at(i, j);
        out.push_back(Morphism{
            a, b,
            ArrowPayload{to_rational(unvec_columns(col, tgt.generators, src.generators))}});
    }
    return out;
}

std::string FgabInstance::describe_object(const ObjectPayload& payload) const {
    const FgabObjData& d = fgab_data(payload);
    if (d.invariants.empty()) return "0";
    std::string out;
    for (std::size_t i = 0; i < d.invariants.size(); ++i) {
        if (i) out += " (+) ";
        out += d.invariants[i] == 0 ? "Z" : "Z/" + d.invariants[i].get_str();
    }
    return out;
}

Claim FgabInstance::morphism_neq_claim(const Morphism& f, const Morphism& g) const {
    const FgabObjData& tgt = fgab_data(f.target.payload);
    return Claim{"morphisms differ modulo relations in fgab", -1,
                 ClaimLatticeContains{tgt.relations, arrow_int(f) - arrow_int(g), false}};
}

}  // namespace preab
