#pragma once

#include "preab/checker.hpp"

namespace preab {

// Exact structures over an instance: a distinguished class of
// kernel-cokernel pairs (conflations). Built-in kinds are the maximal class
// (all kernel-cokernel pairs) and the split class; arbitrary conflation
// lists are accepted but must survive check_exact_axioms.

enum class ExactStructureKind { AllPairs, Split, Explicit };

struct Conflation {
    Morphism inflation;  // f: A -> B
    Morphism deflation;  // g: B -> C, with (f, g) a kernel-cokernel pair
};

struct ExactStructure {
    std::string instance;
    ExactStructureKind kind = ExactStructureKind::AllPairs;
    std::vector<Conflation> listed;  // Explicit only

    static ExactStructure all_pairs(const std::string& instance);
    static ExactStructure split(const std::string& instance);
    static ExactStructure explicit_list(const std::string& instance,
                                        std::vector<Conflation> listed);
    const char* kind_name() const;
};

// (f, g) is a kernel-cokernel pair: g∘f = 0, f recognized as the kernel of g
// and g as the cokernel of f via the canonical comparisons.
bool is_kernel_cokernel_pair(const Morphism& f, const Morphism& g);

bool is_conflation(const Morphism& f, const Morphism& g, const ExactStructure& e);

// f is the first leg of some conflation in e. All-pairs: kernel recognition;
// split: a retraction exists; explicit: listed (or split, which every exact
// structure contains).
bool is_admissible_mono(const Morphism& f, const ExactStructure& e);
bool is_admissible_epi(const Morphism& g, const ExactStructure& e);

struct AxiomViolation {
    std::string axiom;
    std::string detail;
    std::vector<Morphism> witnesses;
};

struct AxiomCheckResult {
    bool pass = true;
    std::size_t checks = 0;
    std::optional<AxiomViolation> violation;
};

// Probe-checks the exact-category axioms: identity conflations, closure of
// admissible monos/epis under composition, pushout (dually pullback)
// stability, and iso-closure of explicit lists.
AxiomCheckResult check_exact_axioms(const ExactStructure& e, const ProbeCorpus& corpus,
                                    const CheckOptions& options = {});

struct AiCertificate {
    std::string instance;
    std::string structure;  // all-pairs | split | explicit
    Morphism mono_c, mono_d;
    SquareWitness square;     // their pullback
    std::string failing_leg;  // "a", "b" or "both"
    std::vector<Claim> claims;
    std::optional<Morphism> refuted_kernel;  // section trick: the f whose
                                             // conflation lies outside E
};

struct AiCheckResult {
    bool pass = true;
    std::size_t pairs_examined = 0;
    std::optional<AiCertificate> certificate;
};

// The admissible-intersection check: every kernel-cokernel pair in the
// corpus must be a conflation (otherwise the section trick produces a
// certificate), and pullbacks of admissible monos must have admissible legs.
AiCheckResult check_admissible_intersections(const ExactStructure& e, const ProbeCorpus& corpus,
                                             const CheckOptions& options = {});

struct SectionTrickOutcome {
    bool applicable = false;  // false when (f, g) already belongs to E
    std::optional<AiCertificate> certificate;
};

// Realizes the converse construction: for a kernel-cokernel pair (f, g)
// outside E, the sections (1,g) and (1,0) into B (+) C are admissible monos
// whose pullback has both legs isomorphic to f; f not being admissible
// refutes admissible intersections for E.
SectionTrickOutcome section_trick_refute(const Morphism& f, const Morphism& g,
                                         const ExactStructure& e);

bool reverify_certificate(const AiCertificate& cert);

}  // namespace preab
