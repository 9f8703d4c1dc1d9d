#include "preab/exact_structure.hpp"

#include "preab/verify.hpp"

namespace preab {

namespace {

// Retraction r with r∘f = id, plus infeasibility evidence when none exists.
SolveOutcome find_retraction(const Morphism& f) {
    const CategoryInstance& inst = engine::instance_of(f);
    return inst.solve_left(f, inst.identity(f.source));
}

SolveOutcome find_section(const Morphism& g) {
    const CategoryInstance& inst = engine::instance_of(g);
    return inst.solve_right(g, inst.identity(g.target));
}

bool listed_member(const ExactStructure& e, const Morphism& f, const Morphism& g) {
    const CategoryInstance& inst = instance_registry_get(e.instance);
    for (const Conflation& c : e.listed) {
        if (!payload_identical(c.inflation.source.payload, f.source.payload) ||
            !payload_identical(c.inflation.target.payload, f.target.payload) ||
            !payload_identical(c.deflation.target.payload, g.target.payload))
            continue;
        if (inst.morphism_eq(c.inflation, f) && inst.morphism_eq(c.deflation, g)) return true;
    }
    return false;
}

}  // namespace

ExactStructure ExactStructure::all_pairs(const std::string& instance) {
    return ExactStructure{instance, ExactStructureKind::AllPairs, {}};
}

ExactStructure ExactStructure::split(const std::string& instance) {
    return ExactStructure{instance, ExactStructureKind::Split, {}};
}

ExactStructure ExactStructure::explicit_list(const std::string& instance,
                                             std::vector<Conflation> listed) {
    return ExactStructure{instance, ExactStructureKind::Explicit, std::move(listed)};
}

const char* ExactStructure::kind_name() const {
    switch (kind) {
        case ExactStructureKind::AllPairs: return "all-pairs";
        case ExactStructureKind::Split: return "split";
        case ExactStructureKind::Explicit: return "explicit";
    }
    return "?";
}

bool is_kernel_cokernel_pair(const Morphism& f, const Morphism& g) {
    if (!payload_identical(f.target.payload, g.source.payload)) return false;
    if (!engine::is_zero_morphism(engine::compose(g, f))) return false;

    const CategoryInstance& inst = engine::instance_of(f);
    // f must be the kernel of g (not merely of its own cokernel).
    const KernelResult ker_g = engine::kernel(g);
    const SolveOutcome cmp_f = inst.solve_right(ker_g.arrow, f);
    if (!cmp_f.solution || !engine::is_isomorphism(*cmp_f.solution).iso) return false;
    // g must be the cokernel of f.
    const CokernelResult cok_f = engine::cokernel(f);
    const SolveOutcome cmp_g = inst.solve_left(cok_f.arrow, g);
    return cmp_g.solution && engine::is_isomorphism(*cmp_g.solution).iso;
}

bool is_conflation(const Morphism& f, const Morphism& g, const ExactStructure& e) {
    if (!is_kernel_cokernel_pair(f, g)) return false;
    switch (e.kind) {
        case ExactStructureKind::AllPairs: return true;
        case ExactStructureKind::Split:
            return find_retraction(f).solution.has_value() &&
                   find_section(g).solution.has_value();
        case ExactStructureKind::Explicit:
            // Split conflations belong to every exact structure.
            if (find_retraction(f).solution && find_section(g).solution) return true;
            return listed_member(e, f, g);
    }
    return false;
}

bool is_admissible_mono(const Morphism& f, const ExactStructure& e) {
    switch (e.kind) {
        case ExactStructureKind::AllPairs: return engine::is_kernel_morphism(f).verdict;
        case ExactStructureKind::Split: return find_retraction(f).solution.has_value();
        case ExactStructureKind::Explicit: {
            if (find_retraction(f).solution.has_value()) return true;
            const CategoryInstance& inst = instance_registry_get(e.instance);
            for (const Conflation& c : e.listed) {
                if (!payload_identical(c.inflation.source.payload, f.source.payload) ||
                    !payload_identical(c.inflation.target.payload, f.target.payload))
                    continue;
                if (inst.morphism_eq(c.inflation, f)) return true;
            }
            return false;
        }
    }
    return false;
}

bool is_admissible_epi(const Morphism& g, const ExactStructure& e) {
    switch (e.kind) {
        case ExactStructureKind::AllPairs: return engine::is_cokernel_morphism(g).verdict;
        case ExactStructureKind::Split: return find_section(g).solution.has_value();
        case ExactStructureKind::Explicit: {
            if (find_section(g).solution.has_value()) return true;
            const CategoryInstance& inst = instance_registry_get(e.instance);
            for (const Conflation& c : e.listed) {
                if (!payload_identical(c.deflation.source.payload, g.source.payload) ||
                    !payload_identical(c.deflation.target.payload, g.target.payload))
                    continue;
                if (inst.morphism_eq(c.deflation, g)) return true;
            }
            return false;
        }
    }
    return false;
}

AxiomCheckResult check_exact_axioms(const ExactStructure& e, const ProbeCorpus& corpus,
                                    const CheckOptions& options) {
    AxiomCheckResult result;
    const CategoryInstance& inst = instance_registry_get(e.instance);
    auto fail = [&](const std::string& axiom, const std::string& detail,
                    std::vector<Morphism> witnesses) {
        result.pass = false;
        result.violation = AxiomViolation{axiom, detail, std::move(witnesses)};
    };

    // Identity conflations: identities are admissible on both sides.
    for (const ObjectRef& obj : corpus_objects(corpus, 12)) {
        ++result.checks;
        const Morphism id = inst.identity(obj);
        if (!is_admissible_mono(id, e)) {
            fail("identity", "identity is not an admissible monomorphism", {id});
            return result;
        }
        if (!is_admissible_epi(id, e)) {
            fail("identity", "identity is not an admissible epimorphism", {id});
            return result;
        }
    }

    // Precompute admissibility per probe.
    std::vector<std::size_t> monos, epis;
    for (std::size_t i = 0; i < corpus.probes.size(); ++i) {
        if (is_admissible_mono(corpus.probes[i], e)) monos.push_back(i);
        if (is_admissible_epi(corpus.probes[i], e)) epis.push_back(i);
    }

    // Composition closure of admissible monos and epis.
    std::size_t budget = options.pair_budget;
    for (std::size_t i : monos) {
        if (!result.pass || budget == 0) break;
        for (std::size_t j : monos) {
            const Morphism& u = corpus.probes[i];
            const Morphism& v = corpus.probes[j];
            if (!payload_identical(u.target.payload, v.source.payload)) continue;
            if (budget == 0) break;
            --budget;
            ++result.checks;
            if (!is_admissible_mono(engine::compose(v, u), e)) {
                fail("composition", "composite of admissible monos is not admissible", {u, v});
                return result;
            }
        }
    }
    budget = options.pair_budget;
    for (std::size_t i : epis) {
        if (budget == 0) break;
        for (std::size_t j : epis) {
            const Morphism& u = corpus.probes[i];
            const Morphism& v = corpus.probes[j];
            if (!payload_identical(u.target.payload, v.source.payload)) continue;
            if (budget == 0) break;
            --budget;
            ++result.checks;
            if (!is_admissible_epi(engine::compose(v, u), e)) {
                fail("composition", "composite of admissible epis is not admissible", {u, v});
                return result;
            }
        }
    }

    // Pushout stability of admissible monos along arbitrary probes; dually
    // pullback stability of admissible epis.
    budget = options.pair_budget;
    for (std::size_t i : monos) {
        if (budget == 0) break;
        for (std::size_t j = 0; j < corpus.probes.size(); ++j) {
            const Morphism& mono = corpus.probes[i];
            const Morphism& along = corpus.probes[j];
            if (!payload_identical(mono.source.payload, along.source.payload)) continue;
            if (budget == 0) break;
            --budget;
            ++result.checks;
            const SquareWitness sq = engine::pushout(mono, along);
            if (!is_admissible_mono(sq.d, e)) {
                fail("pushout-stability", "pushout leg of an admissible mono is not admissible",
                     {mono, along, sq.d});
                return result;
            }
        }
    }
    budget = options.pair_budget;
    for (std::size_t i : epis) {
        if (budget == 0) break;
        for (std::size_t j = 0; j < corpus.probes.size(); ++j) {
            const Morphism& epi = corpus.probes[i];
            const Morphism& along = corpus.probes[j];
            if (!payload_identical(epi.target.payload, along.target.payload)) continue;
            if (budget == 0) break;
            --budget;
            ++result.checks;
            const SquareWitness sq = engine::pullback(along, epi);
            if (!is_admissible_epi(sq.a, e)) {
                fail("pullback-stability", "pullback leg of an admissible epi is not admissible",
                     {epi, along, sq.a});
                return result;
            }
        }
    }

    if (e.kind == ExactStructureKind::Explicit) {
        // Probe iso-closure: twisting a listed conflation by a corpus
        // isomorphism of its middle object must stay in the class.
        for (const Conflation& c : e.listed)
            for (const Morphism& u : corpus.probes) {
                if (!payload_identical(u.source.payload, c.inflation.target.payload)) continue;
                const engine::IsoCheck iso = engine::is_isomorphism(u);
                if (!iso.iso) continue;
                ++result.checks;
                const Morphism twisted_f = engine::compose(u, c.inflation);
                const Morphism twisted_g = engine::compose(c.deflation, *iso.inverse);
                if (!is_conflation(twisted_f, twisted_g, e)) {
                    fail("iso-closure", "conflation list is not closed under isomorphism",
                         {c.inflation, u});
                    return result;
                }
            }
    }
    return result;
}

SectionTrickOutcome section_trick_refute(const Morphism& f, const Morphism& g,
                                         const ExactStructure& e) {
    if (!is_kernel_cokernel_pair(f, g))
        throw CategoryError("section_trick_refute: (f, g) is not a kernel-cokernel pair");
    SectionTrickOutcome out;
    if (is_conflation(f, g, e)) return out;  // not applicable
    out.applicable = true;

    const CategoryInstance& inst = engine::instance_of(f);
    const auto bp = engine::biproduct(f.target, g.target);  // B (+) C
    // (1, g) and (1, 0): both sections of proj1, hence admissible monos.
    const Morphism c1 = inst.add(bp.inj1, inst.compose(bp.inj2, g));
    const Morphism c2 = bp.inj1;

    const SquareWitness square = engine::pullback(c1, c2);
    // The mediating morphism from (f, f) is the comparison to the corner.
    const std::optional<Morphism> mediator = engine::pullback_mediator(square, f, f);
    if (!mediator) throw CategoryError("section trick: mediating morphism missing");
    const engine::IsoCheck iso = engine::is_isomorphism(*mediator);
    if (!iso.iso) throw CategoryError("section trick: comparison to the corner is not iso");

    AiCertificate cert;
    cert.instance = e.instance;
    cert.structure = e.kind_name();
    cert.mono_c = c1;
    cert.mono_d = c2;
    cert.square = square;
    cert.failing_leg = "both";
    cert.refuted_kernel = f;

    // Sections: proj1 retracts both monos.
    const Morphism id_b = inst.identity(f.target);
    for (Claim& c : morphism_eq_claims(engine::compose(bp.proj1, c1), id_b, true)) {
        c.label = "(1,g) is a section: " + c.label;
        cert.claims.push_back(std::move(c));
    }
    for (Claim& c : morphism_eq_claims(engine::compose(bp.proj1, c2), id_b, true)) {
        c.label = "(1,0) is a section: " + c.label;
        cert.claims.push_back(std::move(c));
    }
    // Both legs are isomorphic to f: the mediator carries f to the corner
    // and is invertible.
    const Morphism via_a = engine::compose(square.a, *mediator);
    const Morphism via_b = engine::compose(square.b, *mediator);
    for (Claim& c : morphism_eq_claims(via_a, f, true)) {
        c.label = "leg a composed with the corner comparison equals f: " + c.label;
        cert.claims.push_back(std::move(c));
    }
    for (Claim& c : morphism_eq_claims(via_b, f, true)) {
        c.label = "leg b composed with the corner comparison equals f: " + c.label;
        cert.claims.push_back(std::move(c));
    }
    const Morphism u_inv = *iso.inverse;
    for (Claim& c : morphism_eq_claims(engine::compose(*mediator, u_inv),
                                       inst.identity(mediator->target), true)) {
        c.label = "corner comparison is invertible: " + c.label;
        cert.claims.push_back(std::move(c));
    }
    for (Claim& c : morphism_eq_claims(engine::compose(u_inv, *mediator),
                                       inst.identity(mediator->source), true)) {
        c.label = "corner comparison is invertible: " + c.label;
        cert.claims.push_back(std::move(c));
    }

    // Admissibility failure of f (and hence of the legs).
    SolveOutcome retraction = find_retraction(f);
    if (retraction.solution)
        throw CategoryError("section trick: f unexpectedly has a retraction");
    Claim evidence = std::move(*retraction.evidence);
    evidence.label = "no retraction of the refuted kernel exists: " + evidence.label;
    cert.claims.push_back(std::move(evidence));

    out.certificate = std::move(cert);
    return out;
}

AiCheckResult check_admissible_intersections(const ExactStructure& e, const ProbeCorpus& corpus,
                                             const CheckOptions& options) {
    AiCheckResult result;

    // Phase A: every kernel-cokernel pair arising from a corpus kernel must
    // be a conflation, otherwise the section trick refutes E.
    for (const Morphism& f : corpus.probes) {
        if (!engine::is_kernel_morphism(f).verdict) continue;
        const Morphism g = engine::cokernel(f).arrow;
        ++result.pairs_examined;
        if (is_conflation(f, g, e)) continue;
        SectionTrickOutcome trick = section_trick_refute(f, g, e);
        result.pass = false;
        result.certificate = std::move(trick.certificate);
        return result;
    }

    // Phase B: pullbacks of admissible monos have admissible legs.
    std::vector<std::size_t> monos;
    for (std::size_t i = 0; i < corpus.probes.size(); ++i)
        if (is_admissible_mono(corpus.probes[i], e)) monos.push_back(i);

    std::size_t budget = options.pair_budget;
    for (std::size_t i : monos)
        for (std::size_t j : monos) {
            const Morphism& c = corpus.probes[i];
            const Morphism& d = corpus.probes[j];
            if (!payload_identical(c.target.payload, d.target.payload)) continue;
            if (budget-- == 0) return result;
            ++result.pairs_examined;
            const SquareWitness square = engine::pullback(c, d);
            const bool a_ok = is_admissible_mono(square.a, e);
            const bool b_ok = is_admissible_mono(square.b, e);
            if (a_ok && b_ok) continue;

            AiCertificate cert;
            cert.instance = e.instance;
            cert.structure = e.kind_name();
            cert.mono_c = c;
            cert.mono_d = d;
            cert.square = square;
            cert.failing_leg = !a_ok && !b_ok ? "both" : (!a_ok ? "a" : "b");
            const Morphism& leg = !a_ok ? square.a : square.b;
            if (e.kind == ExactStructureKind::AllPairs) {
                for (Claim& cl : predicate_claims(leg, "kernel_morphism", false))
                    cert.claims.push_back(std::move(cl));
            } else {
                SolveOutcome retraction = find_retraction(leg);
                if (retraction.evidence) {
                    retraction.evidence->label =
                        "leg has no retraction: " + retraction.evidence->label;
                    cert.claims.push_back(std::move(*retraction.evidence));
                }
            }
            result.pass = false;
            result.certificate = std::move(cert);
            return result;
        }
    return result;
}

bool reverify_certificate(const AiCertificate& cert) {
    if (!verify_square_commutes(cert.square)) return false;
    if (cert.claims.empty()) return false;
    for (const Claim& claim : cert.claims)
        if (!claim_holds(claim)) return false;
    return true;
}

}  // namespace preab
