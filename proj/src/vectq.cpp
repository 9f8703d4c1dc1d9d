#include "preab/instances.hpp"

namespace preab {

namespace {
const VectObjData& vect_data(const ObjectPayload& p) {
    if (!std::holds_alternative<VectObjData>(p.v))
        throw CategoryError("vectq: payload is not a dimension");
    return std::get<VectObjData>(p.v);
}

}  // namespace

const std::string& VectQInstance::id() const {
    static const std::string name = "vectq";
    return name;
}

std::size_t VectQInstance::coord_dim(const ObjectPayload& payload) const {
    return vect_data(payload).dim;
}

ObjectPayload VectQInstance::biproduct_object(const ObjectPayload& a,
                                              const ObjectPayload& b) const {
    return vect_obj(vect_data(a).dim + vect_data(b).dim);
}

bool VectQInstance::valid_object(const ObjectPayload& payload) const {
    return std::holds_alternative<VectObjData>(payload.v);
}

bool VectQInstance::valid_morphism(const Morphism& f) const {
    if (f.source.instance != id() || f.target.instance != id()) return false;
    if (!valid_object(f.source.payload) || !valid_object(f.target.payload)) return false;
    if (!std::holds_alternative<RatMatrix>(f.payload.v)) return false;
    const RatMatrix& m = arrow_matrix(f);
    return m.rows() == vect_data(f.target.payload).dim &&
           m.cols() == vect_data(f.source.payload).dim;
}

bool VectQInstance::object_eq(const ObjectPayload& a, const ObjectPayload& b) const {
    return vect_data(a).dim == vect_data(b).dim;
}

bool VectQInstance::morphism_eq(const Morphism& f, const Morphism& g) const {
    return payload_identical(f.source.payload, g.source.payload) &&
           payload_identical(f.target.payload, g.target.payload) &&
           arrow_matrix(f) == arrow_matrix(g);
}

ObjectPayload VectQInstance::zero_object() const { return vect_obj(0); }

KernelResult VectQInstance::kernel(const Morphism& f) const {
    RatMatrix basis = nullspace_basis(arrow_matrix(f));
    ObjectRef object{id(), vect_obj(basis.cols())};
    KernelResult out;
    out.arrow = Morphism{object, f.source, ArrowPayload{std::move(basis)}};
    out.object = std::move(object);
    return out;
}

CokernelResult VectQInstance::cokernel(const Morphism& f) const {
    RatMatrix q = left_nullspace_rows(arrow_matrix(f));
    ObjectRef object{id(), vect_obj(q.rows())};
    CokernelResult out;
    out.arrow = Morphism{f.target, object, ArrowPayload{std::move(q)}};
    out.object = std::move(object);
    return out;
}

SolveOutcome VectQInstance::solve_right(const Morphism& f, const Morphism& v) const {
    const RatMatrix& m = arrow_matrix(f);
    const RatMatrix& rhs = arrow_matrix(v);
    RatSolve s = solve_rational(m, rhs);
    SolveOutcome out;
    if (s.solution) {
        out.solution = Morphism{v.source, f.source, ArrowPayload{std::move(*s.solution)}};
    } else {
        out.evidence = Claim{"no lift through " + id() + " morphism", -1,
                             ClaimRationalUnsolvable{m, rhs, std::move(*s.row_witness)}};
    }
    return out;
}

SolveOutcome VectQInstance::solve_left(const Morphism& f, const Morphism& v) const {
    const RatMatrix mt = arrow_matrix(f).transpose();
    const RatMatrix vt = arrow_matrix(v).transpose();
    RatSolve s = solve_rational(mt, vt);
    SolveOutcome out;
    if (s.solution) {
        out.solution = Morphism{f.target, v.target, ArrowPayload{s.solution->transpose()}};
    } else {
        out.evidence = Claim{"no extension along " + id() + " morphism", -1,
                             ClaimRationalUnsolvable{mt, vt, std::move(*s.row_witness)}};
    }
    return out;
}

std::vector<Morphism> VectQInstance::hom_generators(const ObjectRef& a,
                                                    const ObjectRef& b) const {
    const std::size_t cols = vect_data(a.payload).dim;
    const std::size_t rows = vect_data(b.payload).dim;
    std::vector<Morphism> out;
    out.reserve(rows * cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) {
            RatMatrix unit(rows, cols);
            unit.at(i, j) = 1;
            out.push_back(Morphism{a, b, ArrowPayload{std::move(unit)}});
        }
    return out;
}

std::string VectQInstance::describe_object(const ObjectPayload& payload) const {
    return "Q^" + std::to_string(vect_data(payload).dim);
}

Claim VectQInstance::morphism_neq_claim(const Morphism& f, const Morphism& g) const {
    return Claim{"morphisms differ in vectq", -1,
                 ClaimMatricesEqual{arrow_matrix(f), arrow_matrix(g), false}};
}

}  // namespace preab
