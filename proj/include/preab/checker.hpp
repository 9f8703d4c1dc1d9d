#pragma once

#include "preab/corpus.hpp"
#include "preab/engine.hpp"

namespace preab {

// The six probe-based property deciders. "Pass" always means "no
// counterexample among the examined probes/pairs", never a proof; failure
// certificates are absolute and re-verify from their own data.

enum class PropertyId {
    LeftSemiAbelian,
    RightSemiAbelian,
    LeftQuasiAbelian,
    RightQuasiAbelian,
    LeftIntegral,
    RightIntegral,
};

const char* property_name(PropertyId id);
const std::vector<PropertyId>& all_properties();

struct PropertyCertificate {
    std::string property;
    std::string instance;
    std::string failed_check;  // the predicate that failed, human-readable
    std::optional<SquareWitness> square;
    std::optional<Morphism> witness;  // morphism witness (semi-abelian variants)
    std::vector<Claim> claims;        // transcript; every claim re-checks raw
};

struct CheckOptions {
    // Pair-based checkers examine (anchor, partner) pairs in lexicographic
    // order up to this budget; the report records how many were examined.
    std::size_t pair_budget = 50000;
};

struct PropertyCheckResult {
    PropertyId property;
    bool pass = true;
    std::size_t probes_examined = 0;
    std::size_t pairs_examined = 0;
    std::optional<PropertyCertificate> certificate;
};

PropertyCheckResult check_property(PropertyId id, const ProbeCorpus& corpus,
                                   const CheckOptions& options = {});

PropertyCheckResult check_left_semi_abelian(const ProbeCorpus&, const CheckOptions& = {});
PropertyCheckResult check_right_semi_abelian(const ProbeCorpus&, const CheckOptions& = {});
PropertyCheckResult check_left_quasi_abelian(const ProbeCorpus&, const CheckOptions& = {});
PropertyCheckResult check_right_quasi_abelian(const ProbeCorpus&, const CheckOptions& = {});
PropertyCheckResult check_left_integral(const ProbeCorpus&, const CheckOptions& = {});
PropertyCheckResult check_right_integral(const ProbeCorpus&, const CheckOptions& = {});

// Cross-validation route for the semi-abelian deciders: factor f = i∘p with
// p the coimage projection (a cokernel) and test i monic / dually.
bool left_semi_abelian_at_direct(const Morphism& f);
bool right_semi_abelian_at_direct(const Morphism& f);

// Instance-semantic claims about a single morphism, re-checkable raw.
// Predicates: "mono", "epi", "kernel_morphism", "cokernel_morphism".
Claim predicate_claim(const Morphism& f, const std::string& predicate, bool expect);
// Product-aware variant: expands componentwise (all components for expect,
// the first failing component otherwise).
std::vector<Claim> predicate_claims(const Morphism& f, const std::string& predicate, bool expect);

// Claims certifying morphism (in)equality in the instance's Hom equality;
// product morphisms expand componentwise.
std::vector<Claim> morphism_eq_claims(const Morphism& a, const Morphism& b, bool expect);

// Rebuilds the claim transcript of a certificate and re-checks everything,
// including square commutation, with claims replay only.
bool reverify_certificate(const PropertyCertificate& cert);

// Lifts a failure square into product:<a>:<b> (or <b> x <a>) with zero
// second components, re-verifies the lifted failure, and returns the lifted
// certificate. Throws CategoryError when re-verification fails.
PropertyCertificate lift_counterexample_to_product(const PropertyCertificate& cert,
                                                   const std::string& other_instance);

// ---------------------------------------------------------------------------
// Projectivity probes (Hom-surjectivity against corpus epis / cokernels).

struct ProjectivityResult {
    ObjectRef object;
    bool pass = true;
    std::size_t tests = 0;
    std::optional<Morphism> unliftable;  // v: P -> Y with no lift through f
    std::optional<Morphism> against;     // the epi / cokernel f it failed against
};

ProjectivityResult is_projective_probe(const ObjectRef& p, const ProbeCorpus& corpus);
ProjectivityResult is_quasi_projective_probe(const ObjectRef& p, const ProbeCorpus& corpus);

}  // namespace preab
