#include "preab/checker.hpp"

#include <array>

#include "preab/instances.hpp"
#include "preab/verify.hpp"

namespace preab {

namespace {

const PairObjData& pair_of(const ObjectPayload& p) { return std::get<PairObjData>(p.v); }
const FgabObjData& fgab_of(const ObjectPayload& p) { return std::get<FgabObjData>(p.v); }

IntMatrix arrow_int_strict(const Morphism& f) {
    auto m = to_integer(arrow_matrix(f));
    if (!m) throw CategoryError("expected integral arrow");
    return *m;
}

Claim base_predicate_claim(const Morphism& f, const std::string& predicate, bool expect) {
    const std::string& inst = f.source.instance;
    const std::string label =
        predicate + (expect ? " holds" : " fails") + " for a " + inst + " morphism";

    if (inst == "vectq") {
        if (predicate == "mono" || predicate == "kernel_morphism")
            return Claim{label, -1, ClaimFullColumnRank{arrow_matrix(f), expect}};
        return Claim{label, -1, ClaimFullRowRank{arrow_matrix(f), expect}};
    }
    if (inst == "pairvect" || inst == "mockpair") {
        const RatMatrix& src_sub = pair_of(f.source.payload).subspace;
        const RatMatrix& tgt_sub = pair_of(f.target.payload).subspace;
        if (predicate == "mono")
            return Claim{label, -1, ClaimFullColumnRank{arrow_matrix(f), expect}};
        if (predicate == "epi") {
            if (inst == "mockpair")
                return Claim{label, -1, ClaimMockEpi{arrow_matrix(f), tgt_sub, expect}};
            return Claim{label, -1, ClaimFullRowRank{arrow_matrix(f), expect}};
        }
        if (predicate == "kernel_morphism") {
            if (inst == "mockpair")
                return Claim{label, -1, ClaimMockKernel{arrow_matrix(f), src_sub, tgt_sub, expect}};
            return Claim{label, -1, ClaimPairKernel{arrow_matrix(f), src_sub, tgt_sub, expect}};
        }
        if (inst == "mockpair")
            return Claim{label, -1, ClaimMockCokernel{arrow_matrix(f), src_sub, tgt_sub, expect}};
        return Claim{label, -1, ClaimPairCokernel{arrow_matrix(f), src_sub, tgt_sub, expect}};
    }
    if (inst == "fgab") {
        const IntMatrix& src_rel = fgab_of(f.source.payload).relations;
        const IntMatrix& tgt_rel = fgab_of(f.target.payload).relations;
        if (predicate == "mono" || predicate == "kernel_morphism")
            return Claim{label, -1, ClaimFgabMono{arrow_int_strict(f), src_rel, tgt_rel, expect}};
        return Claim{label, -1, ClaimFgabEpi{arrow_int_strict(f), tgt_rel, expect}};
    }
    throw CategoryError("predicate_claim: unsupported instance '" + inst + "'");
}

bool engine_predicate(const Morphism& f, const std::string& predicate) {
    if (predicate == "mono") return engine::is_mono(f);
    if (predicate == "epi") return engine::is_epi(f);
    if (predicate == "kernel_morphism") return engine::is_kernel_morphism(f).verdict;
    return engine::is_cokernel_morphism(f).verdict;
}

}  // namespace

std::vector<Claim> predicate_claims(const Morphism& f, const std::string& predicate,
                                    bool expect) {
    const std::string& inst = f.source.instance;
    if (inst.rfind("product:", 0) != 0) return {base_predicate_claim(f, predicate, expect)};

    const auto& product =
        dynamic_cast<const ProductInstance&>(instance_registry_get(inst));
    std::vector<Claim> out;
    if (expect) {
        for (std::size_t idx = 0; idx < 2; ++idx) {
            Claim claim = base_predicate_claim(product.component_morphism(f, idx), predicate, true);
            claim.component = static_cast<int>(idx);
            out.push_back(std::move(claim));
        }
        return out;
    }
    // A product predicate fails in some component; record the first one.
    for (std::size_t idx = 0; idx < 2; ++idx) {
        const Morphism comp = product.component_morphism(f, idx);
        if (!engine_predicate(comp, predicate)) {
            Claim claim = base_predicate_claim(comp, predicate, false);
            claim.component = static_cast<int>(idx);
            out.push_back(std::move(claim));
            return out;
        }
    }
    throw CategoryError("predicate_claims: predicate does not fail in any component");
}

namespace {

// ---------------------------------------------------------------------------
// The four pullback/pushout-stability checkers share one loop.

struct StabilitySpec {
    PropertyId property;
    bool via_pullback;          // pullback (left variants) or pushout (right)
    std::string anchor_pred;    // predicate required of the anchor
    std::string leg_pred;       // predicate the transported leg must keep
};

const StabilitySpec& stability_spec(PropertyId id) {
    static const std::array<StabilitySpec, 4> specs = {{
        {PropertyId::LeftQuasiAbelian, true, "cokernel_morphism", "cokernel_morphism"},
        {PropertyId::RightQuasiAbelian, false, "kernel_morphism", "kernel_morphism"},
        {PropertyId::LeftIntegral, true, "epi", "epi"},
        {PropertyId::RightIntegral, false, "mono", "mono"},
    }};
    for (const auto& s : specs)
        if (s.property == id) return s;
    throw CategoryError("not a stability property");
}

PropertyCheckResult check_stability(PropertyId id, const ProbeCorpus& corpus,
                                    const CheckOptions& options) {
    const StabilitySpec& spec = stability_spec(id);
    PropertyCheckResult result;
    result.property = id;
    result.probes_examined = corpus.probes.size();

    std::vector<std::size_t> anchors;
    for (std::size_t i = 0; i < corpus.probes.size(); ++i) {
        if (result.pairs_examined + anchors.size() >= options.pair_budget) break;
        if (engine_predicate(corpus.probes[i], spec.anchor_pred)) anchors.push_back(i);
    }

    for (std::size_t ai : anchors) {
        const Morphism& anchor = corpus.probes[ai];
        for (std::size_t pi = 0; pi < corpus.probes.size(); ++pi) {
            if (result.pairs_examined >= options.pair_budget) return result;
            const Morphism& partner = corpus.probes[pi];
            const bool composable =
                spec.via_pullback
                    ? payload_identical(partner.target.payload, anchor.target.payload)
                    : payload_identical(partner.source.payload, anchor.source.payload);
            if (!composable) continue;
            ++result.pairs_examined;

            // Pullback: anchor is d (bottom), partner is c (right); the
            // transported leg is a. Pushout: anchor is a (top), partner is
            // b (left); the transported leg is d.
            const SquareWitness square = spec.via_pullback
                                             ? engine::pullback(partner, anchor)
                                             : engine::pushout(anchor, partner);
            const Morphism& leg = spec.via_pullback ? square.a : square.d;
            if (engine_predicate(leg, spec.leg_pred)) continue;

            PropertyCertificate cert;
            cert.property = property_name(id);
            cert.instance = corpus.instance;
            cert.failed_check = std::string(spec.via_pullback ? "pullback" : "pushout") +
                                " leg does not remain a " + spec.leg_pred;
            cert.square = square;
            for (Claim& c : predicate_claims(anchor, spec.anchor_pred, true))
                cert.claims.push_back(std::move(c));
            for (Claim& c : predicate_claims(leg, spec.leg_pred, false))
                cert.claims.push_back(std::move(c));
            result.pass = false;
            result.certificate = std::move(cert);
            return result;
        }
    }
    return result;
}

PropertyCheckResult check_semi_abelian(PropertyId id, const ProbeCorpus& corpus) {
    const bool left = id == PropertyId::LeftSemiAbelian;
    PropertyCheckResult result;
    result.property = id;

    for (const Morphism& f : corpus.probes) {
        ++result.probes_examined;
        engine::FactorizeOutcome fact = engine::factorize(f);
        if (!fact.factorization) {
            PropertyCertificate cert;
            cert.property = property_name(id);
            cert.instance = corpus.instance;
            cert.failed_check = "coimage-image factorization exists";
            cert.witness = f;
            cert.claims.push_back(std::move(*fact.failure));
            result.pass = false;
            result.certificate = std::move(cert);
            return result;
        }
        const Morphism& parallel = fact.factorization->parallel;
        const bool ok = left ? engine::is_mono(parallel) : engine::is_epi(parallel);
        if (ok) continue;

        PropertyCertificate cert;
        cert.property = property_name(id);
        cert.instance = corpus.instance;
        cert.failed_check = std::string("parallel morphism is ") + (left ? "monic" : "epic");
        cert.witness = f;
        for (Claim& c : predicate_claims(parallel, left ? "mono" : "epi", false))
            cert.claims.push_back(std::move(c));
        result.pass = false;
        result.certificate = std::move(cert);
        return result;
    }
    return result;
}

}  // namespace

const char* property_name(PropertyId id) {
    switch (id) {
        case PropertyId::LeftSemiAbelian: return "left-semi-abelian";
        case PropertyId::RightSemiAbelian: return "right-semi-abelian";
        case PropertyId::LeftQuasiAbelian: return "left-quasi-abelian";
        case PropertyId::RightQuasiAbelian: return "right-quasi-abelian";
        case PropertyId::LeftIntegral: return "left-integral";
        case PropertyId::RightIntegral: return "right-integral";
    }
    return "?";
}

const std::vector<PropertyId>& all_properties() {
    static const std::vector<PropertyId> ids = {
        PropertyId::LeftSemiAbelian,  PropertyId::RightSemiAbelian,
        PropertyId::LeftQuasiAbelian, PropertyId::RightQuasiAbelian,
        PropertyId::LeftIntegral,     PropertyId::RightIntegral,
    };
    return ids;
}

PropertyCheckResult check_property(PropertyId id, const ProbeCorpus& corpus,
                                   const CheckOptions& options) {
    switch (id) {
        case PropertyId::LeftSemiAbelian:
        case PropertyId::RightSemiAbelian: return check_semi_abelian(id, corpus);
        default: return check_stability(id, corpus, options);
    }
}

PropertyCheckResult check_left_semi_abelian(const ProbeCorpus& c, const CheckOptions& o) {
    return check_property(PropertyId::LeftSemiAbelian, c, o);
}
PropertyCheckResult check_right_semi_abelian(const ProbeCorpus& c, const CheckOptions& o) {
    return check_property(PropertyId::RightSemiAbelian, c, o);
}
PropertyCheckResult check_left_quasi_abelian(const ProbeCorpus& c, const CheckOptions& o) {
    return check_property(PropertyId::LeftQuasiAbelian, c, o);
}
PropertyCheckResult check_right_quasi_abelian(const ProbeCorpus& c, const CheckOptions& o) {
    return check_property(PropertyId::RightQuasiAbelian, c, o);
}
PropertyCheckResult check_left_integral(const ProbeCorpus& c, const CheckOptions& o) {
    return check_property(PropertyId::LeftIntegral, c, o);
}
PropertyCheckResult check_right_integral(const ProbeCorpus& c, const CheckOptions& o) {
    return check_property(PropertyId::RightIntegral, c, o);
}

bool left_semi_abelian_at_direct(const Morphism& f) {
    // f = i ∘ p with p the coimage cokernel; left semi-abelian at f iff the
    // induced i is monic.
    const CokernelResult coim = engine::coimage(f);
    const CategoryInstance& inst = engine::instance_of(f);
    const SolveOutcome i = inst.solve_left(coim.arrow, f);
    return i.solution && engine::is_mono(*i.solution);
}

bool right_semi_abelian_at_direct(const Morphism& f) {
    const KernelResult im = engine::image(f);
    const CategoryInstance& inst = engine::instance_of(f);
    const SolveOutcome p = inst.solve_right(im.arrow, f);
    return p.solution && engine::is_epi(*p.solution);
}

Claim predicate_claim(const Morphism& f, const std::string& predicate, bool expect) {
    return base_predicate_claim(f, predicate, expect);
}

std::vector<Claim> morphism_eq_claims(const Morphism& a, const Morphism& b, bool expect) {
    const std::string& inst_id = a.source.instance;
    if (inst_id.rfind("product:", 0) == 0) {
        const auto& product =
            dynamic_cast<const ProductInstance&>(instance_registry_get(inst_id));
        std::vector<Claim> out;
        for (std::size_t idx = 0; idx < 2; ++idx) {
            const Morphism ac = product.component_morphism(a, idx);
            const Morphism bc = product.component_morphism(b, idx);
            if (!expect && product.component(idx).morphism_eq(ac, bc)) continue;
            for (Claim& c : morphism_eq_claims(ac, bc, expect)) {
                c.component = static_cast<int>(idx);
                out.push_back(std::move(c));
            }
            if (!expect) return out;  // first differing component suffices
        }
        if (out.empty()) throw CategoryError("morphism_eq_claims: no differing component");
        return out;
    }
    const std::string label =
        std::string("morphisms are ") + (expect ? "equal" : "different") + " in " + inst_id;
    if (inst_id == "fgab") {
        const IntMatrix diff = arrow_int_strict(a) - arrow_int_strict(b);
        const IntMatrix& rel = fgab_of(a.target.payload).relations;
        return {Claim{label, -1, ClaimLatticeContains{rel, diff, expect}}};
    }
    return {Claim{label, -1, ClaimMatricesEqual{arrow_matrix(a), arrow_matrix(b), expect}}};
}

bool reverify_certificate(const PropertyCertificate& cert) {
    if (cert.square && !verify_square_commutes(*cert.square)) return false;
    if (cert.claims.empty()) return false;
    for (const Claim& claim : cert.claims)
        if (!claim_holds(claim)) return false;
    return true;
}

PropertyCertificate lift_counterexample_to_product(const PropertyCertificate& cert,
                                                   const std::string& other_instance) {
    const std::string product_id = "product:" + cert.instance + ":" + other_instance;
    const auto& product =
        dynamic_cast<const ProductInstance&>(instance_registry_get(product_id));
    const CategoryInstance& other = instance_registry_get(other_instance);
    const ObjectRef zero = make_object(other_instance, other.zero_object());
    const Morphism zero_arrow = other.zero_morphism(zero, zero);

    auto lift = [&](const Morphism& f) { return product.combine(f, zero_arrow); };

    PropertyCertificate lifted;
    lifted.property = cert.property;
    lifted.instance = product_id;
    lifted.failed_check = cert.failed_check;
    for (Claim claim : cert.claims) {
        claim.component = 0;
        lifted.claims.push_back(std::move(claim));
    }
    lifted.claims.push_back(Claim{"second component is the zero object", 1,
                                  ClaimMatrixZero{arrow_matrix(zero_arrow.payload), true}});

    if (cert.witness) lifted.witness = lift(*cert.witness);

    if (cert.square) {
        SquareWitness sq;
        sq.kind = cert.square->kind;
        sq.a = lift(cert.square->a);
        sq.b = lift(cert.square->b);
        sq.c = lift(cert.square->c);
        sq.d = lift(cert.square->d);
        lifted.square = sq;

        // Componentwise pullbacks/pushouts: recomputing in the product must
        // reproduce the lifted square, and the failure must re-verify there.
        const bool pullback = sq.kind == SquareKind::Pullback;
        const SquareWitness recomputed =
            pullback ? engine::pullback(sq.c, sq.d) : engine::pushout(sq.a, sq.b);
        const Morphism& leg = pullback ? recomputed.a : recomputed.d;
        const Morphism& lifted_leg = pullback ? sq.a : sq.d;
        if (!product.morphism_eq(leg, lifted_leg))
            throw CategoryError("lifted square does not recompute componentwise");

        std::string pred;
        if (cert.property == "left-quasi-abelian" || cert.property == "right-quasi-abelian")
            pred = pullback ? "cokernel_morphism" : "kernel_morphism";
        else if (cert.property == "left-integral")
            pred = "epi";
        else if (cert.property == "right-integral")
            pred = "mono";
        if (!pred.empty() && engine_predicate(lifted_leg, pred))
            throw CategoryError("lifted certificate fails re-verification: leg keeps " + pred);
    } else if (cert.witness) {
        if (cert.property == "left-semi-abelian" || cert.property == "right-semi-abelian") {
            engine::FactorizeOutcome fact = engine::factorize(*lifted.witness);
            if (fact.factorization) {
                const bool left = cert.property == "left-semi-abelian";
                const bool ok = left ? engine::is_mono(fact.factorization->parallel)
                                     : engine::is_epi(fact.factorization->parallel);
                if (ok)
                    throw CategoryError(
                        "lifted certificate fails re-verification: parallel morphism survives");
            }
        }
    }

    if (!reverify_certificate(lifted))
        throw CategoryError("lifted certificate claims do not re-verify");
    return lifted;
}

// ---------------------------------------------------------------------------
// Projectivity probes

namespace {

ProjectivityResult hom_surjectivity_probe(const ObjectRef& p, const ProbeCorpus& corpus,
                                          bool cokernels_only) {
    const CategoryInstance& inst = instance_registry_get(p.instance);
    ProjectivityResult result;
    result.object = p;

    for (const Morphism& f : corpus.probes) {
        const bool eligible = cokernels_only ? engine::is_cokernel_morphism(f).verdict
                                             : engine::is_epi(f);
        if (!eligible) continue;
        // Hom(P, f) is surjective iff every generator of Hom(P, Y) lifts
        // through f; each lift is one exact solve.
        for (const Morphism& v : inst.hom_generators(p, f.target)) {
            ++result.tests;
            if (!inst.solve_right(f, v).solution) {
                result.pass = false;
                result.unliftable = v;
                result.against = f;
                return result;
            }
        }
    }
    return result;
}

}  // namespace

ProjectivityResult is_projective_probe(const ObjectRef& p, const ProbeCorpus& corpus) {
    return hom_surjectivity_probe(p, corpus, false);
}

ProjectivityResult is_quasi_projective_probe(const ObjectRef& p, const ProbeCorpus& corpus) {
    return hom_surjectivity_probe(p, corpus, true);
}

}  // namespace preab
