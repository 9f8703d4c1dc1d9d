#include <doctest.h>

#include "preab/checker.hpp"
#include "preab/verify.hpp"

using namespace preab;

TEST_CASE("vectq passes all six checkers on the exhaustive corpus") {
    const ProbeCorpus corpus = default_corpus("vectq", 1, 50);
    for (PropertyId id : all_properties()) {
        const PropertyCheckResult r = check_property(id, corpus);
        CHECK(r.pass);
        CHECK(!r.certificate.has_value());
    }
}

TEST_CASE("pairvect passes the checkers on its corpus") {
    const ProbeCorpus corpus = default_corpus("pairvect", 2, 40);
    for (PropertyId id : all_properties()) {
        const PropertyCheckResult r = check_property(id, corpus);
        CHECK(r.pass);
    }
}

TEST_CASE("fgab passes the integral checkers on its corpus") {
    const ProbeCorpus corpus = default_corpus("fgab", 3, 25);
    CHECK(check_left_integral(corpus).pass);
    CHECK(check_right_integral(corpus).pass);
    CHECK(check_left_quasi_abelian(corpus).pass);
    CHECK(check_right_quasi_abelian(corpus).pass);
}

TEST_CASE("every checker has a true failure path on the mock instance") {
    const ProbeCorpus corpus = default_corpus("mockpair", 4, 20);
    for (PropertyId id : all_properties()) {
        const PropertyCheckResult r = check_property(id, corpus);
        CHECK(!r.pass);
        REQUIRE(r.certificate.has_value());
        // Certificates re-verify from their own data.
        CHECK(reverify_certificate(*r.certificate));
        CHECK(r.certificate->instance == "mockpair");
        CHECK(r.certificate->property == property_name(id));
    }
}

TEST_CASE("pass/fail duality of the stability checkers on fixtures") {
    // The mock breaks the left checks exactly where it breaks the right
    // checks on the dualized witness data; the honest pair instance passes
    // both sides.
    const ProbeCorpus mock = default_corpus("mockpair", 5, 15);
    CHECK(!check_left_integral(mock).pass);
    CHECK(!check_right_integral(mock).pass);
    CHECK(!check_left_quasi_abelian(mock).pass);
    CHECK(!check_right_quasi_abelian(mock).pass);

    const ProbeCorpus honest = default_corpus("pairvect", 5, 15);
    CHECK(check_left_integral(honest).pass);
    CHECK(check_right_integral(honest).pass);
}

TEST_CASE("transpose duality in the abelian control") {
    // A pullback square for (c, d) transposes to a pushout square for
    // (c^T, d^T); the leg verdicts must match.
    const ProbeCorpus corpus = default_corpus("vectq", 6, 40);
    std::size_t seen = 0;
    for (std::size_t i = 0; i < corpus.probes.size() && seen < 30; ++i)
        for (std::size_t j = 0; j < corpus.probes.size() && seen < 30; ++j) {
            const Morphism& c = corpus.probes[i];
            const Morphism& d = corpus.probes[j];
            if (!payload_identical(c.target.payload, d.target.payload)) continue;
            ++seen;
            const SquareWitness pb = engine::pullback(c, d);

            auto transpose_morphism = [](const Morphism& f) {
                return make_matrix_morphism("vectq", f.target.payload, f.source.payload,
                                            arrow_matrix(f).transpose());
            };
            const SquareWitness po = engine::pushout(transpose_morphism(c), transpose_morphism(d));
            CHECK(engine::is_epi(pb.a) == engine::is_mono(po.c));
            CHECK(engine::is_epi(pb.b) == engine::is_mono(po.d));
        }
    CHECK(seen > 0);
}

TEST_CASE("semi-abelian checkers agree with the direct factorization route") {
    for (const char* instance : {"vectq", "pairvect", "fgab"}) {
        const ProbeCorpus corpus = default_corpus(instance, 7, 20);
        for (const Morphism& f : corpus.probes) {
            const Morphism parallel = engine::parallel_morphism(f);
            CHECK(left_semi_abelian_at_direct(f) == engine::is_mono(parallel));
            CHECK(right_semi_abelian_at_direct(f) == engine::is_epi(parallel));
        }
    }
}

TEST_CASE("left-integral certificate on the mock lifts to a product") {
    const ProbeCorpus corpus = default_corpus("mockpair", 8, 10);
    const PropertyCheckResult r = check_left_integral(corpus);
    REQUIRE(r.certificate.has_value());

    const PropertyCertificate lifted = lift_counterexample_to_product(*r.certificate, "fgab");
    CHECK(lifted.instance == "product:mockpair:fgab");
    CHECK(reverify_certificate(lifted));
    REQUIRE(lifted.square.has_value());
    CHECK(verify_square_commutes(*lifted.square));

    // Lifting into the abelian control also works.
    const PropertyCertificate lifted2 = lift_counterexample_to_product(*r.certificate, "vectq");
    CHECK(reverify_certificate(lifted2));
}

TEST_CASE("lifting a healthy square claims no failure") {
    // A failure-free certificate (square only) lifts to a commuting square.
    const Morphism f =
        make_matrix_morphism("vectq", vect_obj(1), vect_obj(2), RatMatrix{{1}, {1}});
    const CategoryInstance& inst = instance_registry_get("vectq");
    const SquareWitness sq = engine::pullback(inst.identity(f.target), f);

    PropertyCertificate cert;
    cert.property = "square";
    cert.instance = "vectq";
    cert.failed_check = "none (identity lift fixture)";
    cert.square = sq;
    cert.claims.push_back(Claim{"square data is present", -1,
                                ClaimMatricesEqual{arrow_matrix(sq.c), arrow_matrix(sq.c), true}});
    const PropertyCertificate lifted = lift_counterexample_to_product(cert, "fgab");
    REQUIRE(lifted.square.has_value());
    CHECK(verify_square_commutes(*lifted.square));
}

TEST_CASE("projectivity probes: the pair-vect object (Q <= Q)") {
    const ProbeCorpus corpus = default_corpus("pairvect", 9, 0);
    const ObjectRef p = make_object("pairvect", pair_obj(1, RatMatrix::identity(1)));

    const ProjectivityResult proj = is_projective_probe(p, corpus);
    CHECK(!proj.pass);
    REQUIRE(proj.against.has_value());
    CHECK(engine::is_epi(*proj.against));
    REQUIRE(proj.unliftable.has_value());
    // The lift really is impossible.
    const CategoryInstance& inst = instance_registry_get("pairvect");
    CHECK(!inst.solve_right(*proj.against, *proj.unliftable).solution.has_value());

    const ProjectivityResult qproj = is_quasi_projective_probe(p, corpus);
    CHECK(qproj.pass);
    CHECK(qproj.tests > 0);
}

TEST_CASE("every vectq object is projective and quasi-projective on probes") {
    const ProbeCorpus corpus = default_corpus("vectq", 10, 15);
    const ObjectRef p = make_object("vectq", vect_obj(2));
    CHECK(is_projective_probe(p, corpus).pass);
    CHECK(is_quasi_projective_probe(p, corpus).pass);
}
