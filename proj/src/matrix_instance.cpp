#include "preab/instances.hpp"

namespace preab {

Morphism MatrixInstance::identity(const ObjectRef& a) const {
    return Morphism{a, a, ArrowPayload{RatMatrix::identity(coord_dim(a.payload))}};
}

Morphism MatrixInstance::zero_morphism(const ObjectRef& source, const ObjectRef& target) const {
    return Morphism{source, target,
                    ArrowPayload{RatMatrix::zero(coord_dim(target.payload),
                                                 coord_dim(source.payload))}};
}

Morphism MatrixInstance::compose(const Morphism& f, const Morphism& g) const {
    return Morphism{g.source, f.target, ArrowPayload{arrow_matrix(f) * arrow_matrix(g)}};
}

Morphism MatrixInstance::add(const Morphism& f, const Morphism& g) const {
    return Morphism{f.source, f.target, ArrowPayload{arrow_matrix(f) + arrow_matrix(g)}};
}

Morphism MatrixInstance::negate(const Morphism& f) const {
    return Morphism{f.source, f.target, ArrowPayload{-arrow_matrix(f)}};
}

CategoryInstance::BiproductResult MatrixInstance::biproduct(const ObjectRef& a,
                                                            const ObjectRef& b) const {
    if (a.instance != id() || b.instance != id())
        throw CategoryError("biproduct: instance mismatch");
    const std::size_t da = coord_dim(a.payload);
    const std::size_t db = coord_dim(b.payload);
    ObjectRef object{id(), biproduct_object(a.payload, b.payload)};

    RatMatrix i1(da + db, da), i2(da + db, db), p1(da, da + db), p2(db, da + db);
    for (std::size_t k = 0; k < da; ++k) {
        i1.at(k, k) = 1;
        p1.at(k, k) = 1;
    }
    for (std::size_t k = 0; k < db; ++k) {
        i2.at(da + k, k) = 1;
        p2.at(k, da + k) = 1;
    }
    BiproductResult out;
    out.inj1 = Morphism{a, object, ArrowPayload{std::move(i1)}};
    out.inj2 = Morphism{b, object, ArrowPayload{std::move(i2)}};
    out.proj1 = Morphism{object, a, ArrowPayload{std::move(p1)}};
    out.proj2 = Morphism{object, b, ArrowPayload{std::move(p2)}};
    out.object = std::move(object);
    return out;
}

}  // namespace preab
