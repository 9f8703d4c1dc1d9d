#include "preab/engine.hpp"

namespace preab {
namespace engine {

const CategoryInstance& instance_of(const Morphism& f) {
    if (f.source.instance != f.target.instance)
        throw CategoryError("morphism endpoints belong to different instances");
    return instance_registry_get(f.source.instance);
}

const CategoryInstance& instance_of(const ObjectRef& a) {
    return instance_registry_get(a.instance);
}

Morphism compose(const Morphism& f, const Morphism& g) {
    const CategoryInstance& inst = instance_of(f);
    if (g.source.instance != f.source.instance)
        throw CategoryError("compose: instance mismatch");
    if (!payload_identical(g.target.payload, f.source.payload))
        throw CategoryError("compose: domain mismatch (target of g != source of f)");
    return inst.compose(f, g);
}

Morphism add(const Morphism& f, const Morphism& g) {
    const CategoryInstance& inst = instance_of(f);
    if (!payload_identical(f.source.payload, g.source.payload) ||
        !payload_identical(f.target.payload, g.target.payload))
        throw CategoryError("add: endpoint mismatch");
    return inst.add(f, g);
}

Morphism subtract(const Morphism& f, const Morphism& g) {
    const CategoryInstance& inst = instance_of(f);
    return add(f, inst.negate(g));
}

bool is_zero_morphism(const Morphism& f) {
    const CategoryInstance& inst = instance_of(f);
    return inst.morphism_eq(f, inst.zero_morphism(f.source, f.target));
}

bool is_zero_object(const ObjectRef& a) {
    const CategoryInstance& inst = instance_of(a);
    const Morphism id = inst.identity(a);
    return inst.morphism_eq(id, inst.zero_morphism(a, a));
}

CategoryInstance::BiproductResult biproduct(const ObjectRef& a, const ObjectRef& b) {
    if (a.instance != b.instance) throw CategoryError("biproduct: instance mismatch");
    const CategoryInstance& inst = instance_of(a);
    auto bp = inst.biproduct(a, b);

    const Morphism id_a = inst.identity(a);
    const Morphism id_b = inst.identity(b);
    const Morphism id_ab = inst.identity(bp.object);
    if (!inst.morphism_eq(inst.compose(bp.proj1, bp.inj1), id_a) ||
        !inst.morphism_eq(inst.compose(bp.proj2, bp.inj2), id_b) ||
        !inst.morphism_eq(inst.compose(bp.proj1, bp.inj2), inst.zero_morphism(b, a)) ||
        !inst.morphism_eq(inst.compose(bp.proj2, bp.inj1), inst.zero_morphism(a, b)) ||
        !inst.morphism_eq(inst.add(inst.compose(bp.inj1, bp.proj1),
                                   inst.compose(bp.inj2, bp.proj2)),
                          id_ab))
        throw CategoryError("biproduct identities failed (instance bug)");
    return bp;
}

KernelResult kernel(const Morphism& f) { return instance_of(f).kernel(f); }

CokernelResult cokernel(const Morphism& f) { return instance_of(f).cokernel(f); }

KernelResult image(const Morphism& f) { return kernel(cokernel(f).arrow); }

CokernelResult coimage(const Morphism& f) { return cokernel(kernel(f).arrow); }

FactorizeOutcome factorize(const Morphism& f) {
    const CategoryInstance& inst = instance_of(f);
    FactorizeOutcome out;

    KernelResult ker = kernel(f);
    CokernelResult coim = inst.cokernel(ker.arrow);
    CokernelResult cok = cokernel(f);
    KernelResult im = inst.kernel(cok.arrow);

    // f kills its kernel, so it factors through ker(coker f) via some u.
    SolveOutcome u = inst.solve_right(im.arrow, f);
    if (!u.solution) {
        u.evidence->label = "morphism does not factor through ker(coker f): " +
                            u.evidence->label;
        out.failure = std::move(u.evidence);
        return out;
    }
    // u kills ker f, so it descends along the coimage projection.
    SolveOutcome par = inst.solve_left(coim.arrow, *u.solution);
    if (!par.solution) {
        par.evidence->label = "induced morphism does not descend along coker(ker f): " +
                              par.evidence->label;
        out.failure = std::move(par.evidence);
        return out;
    }

    Factorization fact;
    fact.image = std::move(im);
    fact.coimage = std::move(coim);
    fact.parallel = std::move(*par.solution);
    out.factorization = std::move(fact);
    return out;
}

Morphism parallel_morphism(const Morphism& f) {
    FactorizeOutcome out = factorize(f);
    if (!out.factorization)
        throw CategoryError("parallel morphism does not exist: " + out.failure->label);
    return out.factorization->parallel;
}

SquareWitness pullback(const Morphism& c, const Morphism& d) {
    const CategoryInstance& inst = instance_of(c);
    if (d.source.instance != c.source.instance) throw CategoryError("pullback: instance mismatch");
    if (!payload_identical(c.target.payload, d.target.payload))
        throw CategoryError("pullback: morphisms do not share a target");

    const auto bp = biproduct(c.source, d.source);
    const Morphism diff =
        inst.add(inst.compose(c, bp.proj1), inst.negate(inst.compose(d, bp.proj2)));
    const KernelResult k = inst.kernel(diff);

    SquareWitness square;
    square.kind = SquareKind::Pullback;
    square.a = inst.compose(bp.proj1, k.arrow);
    square.b = inst.compose(bp.proj2, k.arrow);
    square.c = c;
    square.d = d;
    return square;
}

SquareWitness pushout(const Morphism& a, const Morphism& b) {
    const CategoryInstance& inst = instance_of(a);
    if (b.source.instance != a.source.instance) throw CategoryError("pushout: instance mismatch");
    if (!payload_identical(a.source.payload, b.source.payload))
        throw CategoryError("pushout: morphisms do not share a source");

    const auto bp = biproduct(a.target, b.target);
    const Morphism diff =
        inst.add(inst.compose(bp.inj1, a), inst.negate(inst.compose(bp.inj2, b)));
    const CokernelResult q = inst.cokernel(diff);

    SquareWitness square;
    square.kind = SquareKind::Pushout;
    square.a = a;
    square.b = b;
    square.c = inst.compose(q.arrow, bp.inj1);
    square.d = inst.compose(q.arrow, bp.inj2);
    return square;
}

std::optional<Morphism> pullback_mediator(const SquareWitness& square, const Morphism& to_b,
                                          const Morphism& to_c) {
    const CategoryInstance& inst = instance_of(square.c);
    // Rebuild the construction (pure and deterministic) to recover the
    // kernel arrow into the biproduct.
    const auto bp = inst.biproduct(square.c.source, square.d.source);
    const Morphism diff =
        inst.add(inst.compose(square.c, bp.proj1), inst.negate(inst.compose(square.d, bp.proj2)));
    const KernelResult k = inst.kernel(diff);
    const Morphism cone =
        inst.add(inst.compose(bp.inj1, to_b), inst.compose(bp.inj2, to_c));
    SolveOutcome u = inst.solve_right(k.arrow, cone);
    return u.solution;
}

std::optional<Morphism> pushout_mediator(const SquareWitness& square, const Morphism& from_b,
                                         const Morphism& from_c) {
    const CategoryInstance& inst = instance_of(square.a);
    const auto bp = inst.biproduct(square.a.target, square.b.target);
    const Morphism diff =
        inst.add(inst.compose(bp.inj1, square.a), inst.negate(inst.compose(bp.inj2, square.b)));
    const CokernelResult q = inst.cokernel(diff);
    const Morphism cocone =
        inst.add(inst.compose(from_b, bp.proj1), inst.compose(from_c, bp.proj2));
    SolveOutcome u = inst.solve_left(q.arrow, cocone);
    return u.solution;
}

bool is_mono(const Morphism& f) { return is_zero_object(kernel(f).object); }

bool is_epi(const Morphism& f) { return is_zero_object(cokernel(f).object); }

IsoCheck is_isomorphism(const Morphism& f) {
    const CategoryInstance& inst = instance_of(f);
    IsoCheck out;

    SolveOutcome right = inst.solve_right(f, inst.identity(f.target));
    if (!right.solution) {
        out.evidence = std::move(right.evidence);
        if (out.evidence) out.evidence->label = "no right inverse: " + out.evidence->label;
        return out;
    }
    // If f is invertible the right inverse is unique and two-sided; if the
    // two-sided check fails no other candidate can succeed.
    const Morphism candidate = *right.solution;
    const Morphism gf = inst.compose(candidate, f);
    const Morphism id_src = inst.identity(f.source);
    if (inst.morphism_eq(gf, id_src)) {
        out.iso = true;
        out.inverse = candidate;
        return out;
    }
    out.evidence = inst.morphism_neq_claim(gf, id_src);
    out.evidence->label = "right inverse is not two-sided: " + out.evidence->label;
    return out;
}

RecognitionResult is_kernel_morphism(const Morphism& f) {
    const CategoryInstance& inst = instance_of(f);
    RecognitionResult out;

    const CokernelResult cok = cokernel(f);
    const KernelResult ker = inst.kernel(cok.arrow);
    SolveOutcome u = inst.solve_right(ker.arrow, f);
    if (!u.solution) {
        out.evidence = std::move(u.evidence);
        return out;
    }
    out.comparison = *u.solution;
    IsoCheck iso = is_isomorphism(*u.solution);
    out.verdict = iso.iso;
    if (!iso.iso) out.evidence = std::move(iso.evidence);
    return out;
}

RecognitionResult is_cokernel_morphism(const Morphism& f) {
    const CategoryInstance& inst = instance_of(f);
    RecognitionResult out;

    const KernelResult ker = kernel(f);
    const CokernelResult coim = inst.cokernel(ker.arrow);
    SolveOutcome u = inst.solve_left(coim.arrow, f);
    if (!u.solution) {
        out.evidence = std::move(u.evidence);
        return out;
    }
    out.comparison = *u.solution;
    IsoCheck iso = is_isomorphism(*u.solution);
    out.verdict = iso.iso;
    if (!iso.iso) out.evidence = std::move(iso.evidence);
    return out;
}

}  // namespace engine
}  // namespace preab
