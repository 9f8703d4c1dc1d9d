#include "preab/instances.hpp"

namespace preab {

namespace {

const ProductObjData& prod_data(const ObjectPayload& p) {
    if (!std::holds_alternative<ProductObjData>(p.v))
        throw CategoryError("product: payload is not a component pair");
    return std::get<ProductObjData>(p.v);
}

const ProductArrowData& prod_arrow(const ArrowPayload& p) {
    if (!std::holds_alternative<ProductArrowData>(p.v))
        throw CategoryError("product: arrow payload is not a component pair");
    return std::get<ProductArrowData>(p.v);
}

}  // namespace

ProductInstance::ProductInstance(std::string id, const CategoryInstance& first,
                                 const CategoryInstance& second)
    : id_(std::move(id)) {
    parts_[0] = &first;
    parts_[1] = &second;
}

const std::string& ProductInstance::id() const { return id_; }

const CategoryInstance& ProductInstance::component(std::size_t idx) const {
    return *parts_[idx];
}

Morphism ProductInstance::component_morphism(const Morphism& f, std::size_t idx) const {
    const auto& src = prod_data(f.source.payload).components;
    const auto& tgt = prod_data(f.target.payload).components;
    const auto& arr = prod_arrow(f.payload).components;
    if (src.size() != 2 || tgt.size() != 2 || arr.size() != 2)
        throw CategoryError("product: malformed component data");
    return Morphism{ObjectRef{parts_[idx]->id(), src[idx]},
                    ObjectRef{parts_[idx]->id(), tgt[idx]}, arr[idx]};
}

Morphism ProductInstance::combine(const Morphism& first, const Morphism& second) const {
    if (first.source.instance != parts_[0]->id() || second.source.instance != parts_[1]->id())
        throw CategoryError("product: component instance mismatch");
    Morphism out;
    out.source = ObjectRef{id_, product_obj({first.source.payload, second.source.payload})};
    out.target = ObjectRef{id_, product_obj({first.target.payload, second.target.payload})};
    out.payload = ArrowPayload{ProductArrowData{{first.payload, second.payload}}};
    return out;
}

ObjectRef ProductInstance::combine_objects(const ObjectPayload& first,
                                           const ObjectPayload& second) const {
    return ObjectRef{id_, product_obj({first, second})};
}

bool ProductInstance::valid_object(const ObjectPayload& payload) const {
    if (!std::holds_alternative<ProductObjData>(payload.v)) return false;
    const auto& comps = std::get<ProductObjData>(payload.v).components;
    return comps.size() == 2 && parts_[0]->valid_object(comps[0]) &&
           parts_[1]->valid_object(comps[1]);
}

bool ProductInstance::valid_morphism(const Morphism& f) const {
    if (f.source.instance != id_ || f.target.instance != id_) return false;
    if (!valid_object(f.source.payload) || !valid_object(f.target.payload)) return false;
    if (!std::holds_alternative<ProductArrowData>(f.payload.v)) return false;
    if (prod_arrow(f.payload).components.size() != 2) return false;
    return parts_[0]->valid_morphism(component_morphism(f, 0)) &&
           parts_[1]->valid_morphism(component_morphism(f, 1));
}

bool ProductInstance::object_eq(const ObjectPayload& a, const ObjectPayload& b) const {
    const auto& ca = prod_data(a).components;
    const auto& cb = prod_data(b).components;
    return parts_[0]->object_eq(ca[0], cb[0]) && parts_[1]->object_eq(ca[1], cb[1]);
}

bool ProductInstance::morphism_eq(const Morphism& f, const Morphism& g) const {
    return parts_[0]->morphism_eq(component_morphism(f, 0), component_morphism(g, 0)) &&
           parts_[1]->morphism_eq(component_morphism(f, 1), component_morphism(g, 1));
}

ObjectPayload ProductInstance::zero_object() const {
    return product_obj({parts_[0]->zero_object(), parts_[1]->zero_object()});
}

Morphism ProductInstance::identity(const ObjectRef& a) const {
    const auto& comps = prod_data(a.payload).components;
    return combine(parts_[0]->identity(ObjectRef{parts_[0]->id(), comps[0]}),
                   parts_[1]->identity(ObjectRef{parts_[1]->id(), comps[1]}));
}

Morphism ProductInstance::zero_morphism(const ObjectRef& source, const ObjectRef& target) const {
    const auto& sc = prod_data(source.payload).components;
    const auto& tc = prod_data(target.payload).components;
    return combine(parts_[0]->zero_morphism(ObjectRef{parts_[0]->id(), sc[0]},
                                            ObjectRef{parts_[0]->id(), tc[0]}),
                   parts_[1]->zero_morphism(ObjectRef{parts_[1]->id(), sc[1]},
                                            ObjectRef{parts_[1]->id(), tc[1]}));
}

Morphism ProductInstance::compose(const Morphism& f, const Morphism& g) const {
    return combine(parts_[0]->compose(component_morphism(f, 0), component_morphism(g, 0)),
                   parts_[1]->compose(component_morphism(f, 1), component_morphism(g, 1)));
}

Morphism ProductInstance::add(const Morphism& f, const Morphism& g) const {
    return combine(parts_[0]->add(component_morphism(f, 0), component_morphism(g, 0)),
                   parts_[1]->add(component_morphism(f, 1), component_morphism(g, 1)));
}

Morphism ProductInstance::negate(const Morphism& f) const {
    return combine(parts_[0]->negate(component_morphism(f, 0)),
                   parts_[1]->negate(component_morphism(f, 1)));
}

KernelResult ProductInstance::kernel(const Morphism& f) const {
    const KernelResult k0 = parts_[0]->kernel(component_morphism(f, 0));
    const KernelResult k1 = parts_[1]->kernel(component_morphism(f, 1));
    KernelResult out;
    out.arrow = combine(k0.arrow, k1.arrow);
    out.object = out.arrow.source;
    return out;
}

CokernelResult ProductInstance::cokernel(const Morphism& f) const {
    const CokernelResult c0 = parts_[0]->cokernel(component_morphism(f, 0));
    const CokernelResult c1 = parts_[1]->cokernel(component_morphism(f, 1));
    CokernelResult out;
    out.arrow = combine(c0.arrow, c1.arrow);
    out.object = out.arrow.target;
    return out;
}

CategoryInstance::BiproductResult ProductInstance::biproduct(const ObjectRef& a,
                                                             const ObjectRef& b) const {
    const auto& ca = prod_data(a.payload).components;
    const auto& cb = prod_data(b.payload).components;
    const auto b0 = parts_[0]->biproduct(ObjectRef{parts_[0]->id(), ca[0]},
                                         ObjectRef{parts_[0]->id(), cb[0]});
    const auto b1 = parts_[1]->biproduct(ObjectRef{parts_[1]->id(), ca[1]},
                                         ObjectRef{parts_[1]->id(), cb[1]});
    BiproductResult out;
    out.inj1 = combine(b0.inj1, b1.inj1);
    out.inj2 = combine(b0.inj2, b1.inj2);
    out.proj1 = combine(b0.proj1, b1.proj1);
    out.proj2 = combine(b0.proj2, b1.proj2);
    out.object = out.inj1.target;
    return out;
}

SolveOutcome ProductInstance::solve_right(const Morphism& f, const Morphism& v) const {
    SolveOutcome s0 = parts_[0]->solve_right(component_morphism(f, 0), component_morphism(v, 0));
    if (!s0.solution) {
        if (s0.evidence) s0.evidence->component = 0;
        return s0;
    }
    SolveOutcome s1 = parts_[1]->solve_right(component_morphism(f, 1), component_morphism(v, 1));
    if (!s1.solution) {
        if (s1.evidence) s1.evidence->component = 1;
        return s1;
    }
    SolveOutcome out;
    out.solution = combine(*s0.solution, *s1.solution);
    return out;
}

SolveOutcome ProductInstance::solve_left(const Morphism& f, const Morphism& v) const {
    SolveOutcome s0 = parts_[0]->solve_left(component_morphism(f, 0), component_morphism(v, 0));
    if (!s0.solution) {
        if (s0.evidence) s0.evidence->component = 0;
        return s0;
    }
    SolveOutcome s1 = parts_[1]->solve_left(component_morphism(f, 1), component_morphism(v, 1));
    if (!s1.solution) {
        if (s1.evidence) s1.evidence->component = 1;
        return s1;
    }
    SolveOutcome out;
    out.solution = combine(*s0.solution, *s1.solution);
    return out;
}

std::vector<Morphism> ProductInstance::hom_generators(const ObjectRef& a,
                                                      const ObjectRef& b) const {
    const auto& ca = prod_data(a.payload).components;
    const auto& cb = prod_data(b.payload).components;
    const ObjectRef a0{parts_[0]->id(), ca[0]}, b0{parts_[0]->id(), cb[0]};
    const ObjectRef a1{parts_[1]->id(), ca[1]}, b1{parts_[1]->id(), cb[1]};

    std::vector<Morphism> out;
    const Morphism zero1 = parts_[1]->zero_morphism(a1, b1);
    for (const Morphism& g : parts_[0]->hom_generators(a0, b0)) out.push_back(combine(g, zero1));
    const Morphism zero0 = parts_[0]->zero_morphism(a0, b0);
    for (const Morphism& g : parts_[1]->hom_generators(a1, b1)) out.push_back(combine(zero0, g));
    return out;
}

Claim ProductInstance::morphism_neq_claim(const Morphism& f, const Morphism& g) const {
    for (std::size_t idx = 0; idx < 2; ++idx) {
        const Morphism fc = component_morphism(f, idx);
        const Morphism gc = component_morphism(g, idx);
        if (!parts_[idx]->morphism_eq(fc, gc)) {
            Claim claim = parts_[idx]->morphism_neq_claim(fc, gc);
            claim.component = static_cast<int>(idx);
            return claim;
        }
    }
    throw CategoryError("morphism_neq_claim: morphisms are equal");
}

std::string ProductInstance::describe_object(const ObjectPayload& payload) const {
    const auto& comps = prod_data(payload).components;
    return "(" + parts_[0]->describe_object(comps[0]) + ", " +
           parts_[1]->describe_object(comps[1]) + ")";
}

}  // namespace preab
