#include "preab/infer.hpp"

#include <stdexcept>

namespace preab {

namespace {

struct Rule {
    std::vector<SignedAtom> premises;
    SignedAtom conclusion;
    std::string provenance;
};

SignedAtom pos(Atom a) { return {a, true}; }
SignedAtom neg(Atom a) { return {a, false}; }
SignedAtom flip(const SignedAtom& s) { return {s.atom, !s.positive}; }

std::vector<Rule> build_rules() {
    std::vector<Rule> rules;
    auto add = [&](std::vector<SignedAtom> premises, SignedAtom conclusion,
                   const std::string& provenance) {
        rules.push_back(Rule{std::move(premises), conclusion, provenance});
    };

    using A = Atom;
    // Definitional combinations. Note: no expansion of semi-abelian into its
    // left/right halves (the halves combine upward only).
    add({pos(A::LeftSemiAbelian), pos(A::RightSemiAbelian)}, pos(A::SemiAbelian), "definition");
    add({pos(A::QuasiAbelian)}, pos(A::LeftQuasiAbelian), "definition");
    add({pos(A::QuasiAbelian)}, pos(A::RightQuasiAbelian), "definition");
    add({pos(A::LeftQuasiAbelian), pos(A::RightQuasiAbelian)}, pos(A::QuasiAbelian),
        "definition");
    add({pos(A::Integral)}, pos(A::LeftIntegral), "definition");
    add({pos(A::Integral)}, pos(A::RightIntegral), "definition");
    add({pos(A::LeftIntegral), pos(A::RightIntegral)}, pos(A::Integral), "definition");

    // Quasi-abelian and integral categories are semi-abelian.
    add({pos(A::QuasiAbelian)}, pos(A::SemiAbelian), "quasi-abelian => semi-abelian");
    add({pos(A::Integral)}, pos(A::SemiAbelian), "integral => semi-abelian");

    // Under semi-abelian, the left and right variants are equivalent.
    add({pos(A::SemiAbelian), pos(A::LeftQuasiAbelian)}, pos(A::RightQuasiAbelian),
        "left/right quasi-abelian agree under semi-abelian");
    add({pos(A::SemiAbelian), pos(A::RightQuasiAbelian)}, pos(A::LeftQuasiAbelian),
        "left/right quasi-abelian agree under semi-abelian");
    add({pos(A::SemiAbelian), pos(A::LeftIntegral)}, pos(A::RightIntegral),
        "left/right integral agree under semi-abelian");
    add({pos(A::SemiAbelian), pos(A::RightIntegral)}, pos(A::LeftIntegral),
        "left/right integral agree under semi-abelian");

    // Composite refutations (left/right equivalence plus definitions).
    add({pos(A::SemiAbelian), neg(A::Integral)}, neg(A::LeftIntegral),
        "semi-abelian and not integral exclude one-sided integrality");
    add({pos(A::SemiAbelian), neg(A::Integral)}, neg(A::RightIntegral),
        "semi-abelian and not integral exclude one-sided integrality");
    add({pos(A::SemiAbelian), neg(A::QuasiAbelian)}, neg(A::LeftQuasiAbelian),
        "semi-abelian and not quasi-abelian exclude one-sided quasi-abelianness");
    add({pos(A::SemiAbelian), neg(A::QuasiAbelian)}, neg(A::RightQuasiAbelian),
        "semi-abelian and not quasi-abelian exclude one-sided quasi-abelianness");

    // Enough (quasi-)projectives/injectives.
    add({pos(A::EnoughQuasiProjectives)}, pos(A::LeftQuasiAbelian),
        "enough quasi-projectives => left quasi-abelian");
    add({pos(A::EnoughQuasiInjectives)}, pos(A::RightQuasiAbelian),
        "enough quasi-injectives => right quasi-abelian");
    add({pos(A::EnoughProjectives)}, pos(A::LeftIntegral),
        "enough projectives => left integral");
    add({pos(A::EnoughInjectives)}, pos(A::RightIntegral),
        "enough injectives => right integral");

    // Quasi-abelian iff admissible intersections.
    add({pos(A::QuasiAbelian)}, pos(A::AdmissibleIntersections),
        "quasi-abelian => admissible intersections");
    add({pos(A::AdmissibleIntersections)}, pos(A::QuasiAbelian),
        "admissible intersections => quasi-abelian");

    // Close under contrapositives: from P1 & ... & Pn => C derive
    // ~C & (all but Pi) => ~Pi.
    const std::size_t direct = rules.size();
    for (std::size_t r = 0; r < direct; ++r) {
        const Rule& rule = rules[r];
        for (std::size_t skip = 0; skip < rule.premises.size(); ++skip) {
            Rule contra;
            contra.premises.push_back(flip(rule.conclusion));
            for (std::size_t i = 0; i < rule.premises.size(); ++i)
                if (i != skip) contra.premises.push_back(rule.premises[i]);
            contra.conclusion = flip(rule.premises[skip]);
            contra.provenance = rule.provenance + " (contrapositive)";
            rules.push_back(std::move(contra));
        }
    }

    // One-sided semi-abelian failures refute the combined property. These
    // are added after the contrapositive pass on purpose: contraposing them
    // would reintroduce the semi-abelian -> left/right expansion, which is
    // deliberately not a rule (closures must not sprout the split atoms).
    add({neg(A::LeftSemiAbelian)}, neg(A::SemiAbelian), "definition");
    add({neg(A::RightSemiAbelian)}, neg(A::SemiAbelian), "definition");
    return rules;
}

const std::vector<Rule>& rule_table() {
    static const std::vector<Rule> rules = build_rules();
    return rules;
}

}  // namespace

const char* atom_name(Atom a) {
    switch (a) {
        case Atom::LeftSemiAbelian: return "left-semi-abelian";
        case Atom::RightSemiAbelian: return "right-semi-abelian";
        case Atom::SemiAbelian: return "semi-abelian";
        case Atom::LeftQuasiAbelian: return "left-quasi-abelian";
        case Atom::RightQuasiAbelian: return "right-quasi-abelian";
        case Atom::QuasiAbelian: return "quasi-abelian";
        case Atom::LeftIntegral: return "left-integral";
        case Atom::RightIntegral: return "right-integral";
        case Atom::Integral: return "integral";
        case Atom::AdmissibleIntersections: return "admissible-intersections";
        case Atom::EnoughProjectives: return "enough-projectives";
        case Atom::EnoughInjectives: return "enough-injectives";
        case Atom::EnoughQuasiProjectives: return "enough-quasi-projectives";
        case Atom::EnoughQuasiInjectives: return "enough-quasi-injectives";
    }
    return "?";
}

const std::vector<Atom>& all_atoms() {
    static const std::vector<Atom> atoms = {
        Atom::LeftSemiAbelian,
        Atom::RightSemiAbelian,
        Atom::SemiAbelian,
        Atom::LeftQuasiAbelian,
        Atom::RightQuasiAbelian,
        Atom::QuasiAbelian,
        Atom::LeftIntegral,
        Atom::RightIntegral,
        Atom::Integral,
        Atom::AdmissibleIntersections,
        Atom::EnoughProjectives,
        Atom::EnoughInjectives,
        Atom::EnoughQuasiProjectives,
        Atom::EnoughQuasiInjectives,
    };
    return atoms;
}

std::optional<Atom> atom_from_name(const std::string& name) {
    for (Atom a : all_atoms())
        if (name == atom_name(a)) return a;
    return std::nullopt;
}

void FactBase::add(const Fact& fact) {
    if (contains(fact.value)) return;
    facts_.push_back(fact);
}

bool FactBase::contains(const SignedAtom& value) const {
    for (const Fact& f : facts_)
        if (f.value == value) return true;
    return false;
}

InferOutcome infer(const FactBase& input) {
    InferOutcome out;
    out.closure = input;

    bool changed = true;
    while (changed) {
        changed = false;
        for (const Rule& rule : rule_table()) {
            if (out.closure.contains(rule.conclusion)) continue;
            bool fire = true;
            for (const SignedAtom& p : rule.premises)
                if (!out.closure.contains(p)) {
                    fire = false;
                    break;
                }
            if (!fire) continue;
            Fact fact;
            fact.value = rule.conclusion;
            fact.source = FactSource::Inferred;
            fact.rule = rule.provenance;
            fact.premises = rule.premises;
            out.closure.add(fact);
            changed = true;
        }
    }

    // Contradiction scan; certificate-backed pairs indicate an engine bug.
    for (const Fact& f : out.closure.facts()) {
        if (!out.closure.contains(flip(f.value))) continue;
        const std::string name = atom_name(f.value.atom);
        if (!out.contradiction) out.contradiction = "contradictory facts for '" + name + "'";
        for (const Fact& g : out.closure.facts()) {
            if (g.value == flip(f.value) && g.source == FactSource::CertificateBacked &&
                f.source == FactSource::CertificateBacked)
                out.certificate_level_contradiction = true;
        }
    }
    return out;
}

}  // namespace preab
