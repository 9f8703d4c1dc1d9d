#include <doctest.h>

#include <set>

#include "preab/corpus.hpp"
#include "preab/infer.hpp"

using namespace preab;

namespace {

FactBase base_of(std::initializer_list<std::pair<Atom, bool>> items) {
    FactBase base;
    for (const auto& [atom, positive] : items) {
        Fact fact;
        fact.value = {atom, positive};
        base.add(fact);
    }
    return base;
}

std::set<std::pair<Atom, bool>> atoms_of(const FactBase& base) {
    std::set<std::pair<Atom, bool>> out;
    for (const Fact& f : base.facts()) out.insert({f.value.atom, f.value.positive});
    return out;
}

}  // namespace

TEST_CASE("semi-abelian and not integral: the closure is exactly the four refutations") {
    const InferOutcome out =
        infer(base_of({{Atom::SemiAbelian, true}, {Atom::Integral, false}}));
    const std::set<std::pair<Atom, bool>> expected = {
        {Atom::SemiAbelian, true},       {Atom::Integral, false},
        {Atom::LeftIntegral, false},     {Atom::RightIntegral, false},
        {Atom::EnoughProjectives, false}, {Atom::EnoughInjectives, false},
    };
    CHECK(atoms_of(out.closure) == expected);
    CHECK(!out.contradiction.has_value());
}

TEST_CASE("quasi-abelian closure adds exactly the expected positives") {
    const InferOutcome out = infer(base_of({{Atom::QuasiAbelian, true}}));
    const std::set<std::pair<Atom, bool>> expected = {
        {Atom::QuasiAbelian, true},      {Atom::LeftQuasiAbelian, true},
        {Atom::RightQuasiAbelian, true}, {Atom::SemiAbelian, true},
        {Atom::AdmissibleIntersections, true},
    };
    CHECK(atoms_of(out.closure) == expected);
}

TEST_CASE("empty closure is empty") {
    CHECK(infer(FactBase{}).closure.size() == 0);
}

TEST_CASE("six positive verdicts close to the full positive picture") {
    const InferOutcome out = infer(base_of({{Atom::LeftSemiAbelian, true},
                                            {Atom::RightSemiAbelian, true},
                                            {Atom::LeftQuasiAbelian, true},
                                            {Atom::RightQuasiAbelian, true},
                                            {Atom::LeftIntegral, true},
                                            {Atom::RightIntegral, true}}));
    CHECK(out.closure.contains({Atom::SemiAbelian, true}));
    CHECK(out.closure.contains({Atom::QuasiAbelian, true}));
    CHECK(out.closure.contains({Atom::Integral, true}));
    CHECK(out.closure.contains({Atom::AdmissibleIntersections, true}));
    // No negatives and no enough-* conclusions can appear.
    for (const Fact& f : out.closure.facts()) {
        CHECK(f.value.positive);
        CHECK(f.value.atom != Atom::EnoughProjectives);
        CHECK(f.value.atom != Atom::EnoughQuasiProjectives);
    }
}

TEST_CASE("a semi-abelian failure cascades through the contrapositives") {
    const InferOutcome out = infer(base_of({{Atom::LeftSemiAbelian, false}}));
    CHECK(out.closure.contains({Atom::SemiAbelian, false}));
    CHECK(out.closure.contains({Atom::QuasiAbelian, false}));
    CHECK(out.closure.contains({Atom::Integral, false}));
    CHECK(out.closure.contains({Atom::AdmissibleIntersections, false}));
}

TEST_CASE("infer is monotone and idempotent on random fact bases") {
    SplitMix64 rng(77);
    for (int trial = 0; trial < 100; ++trial) {
        FactBase base;
        const auto& atoms = all_atoms();
        const std::size_t picks = 1 + rng.below(5);
        for (std::size_t k = 0; k < picks; ++k) {
            Fact fact;
            fact.value = {atoms[rng.below(atoms.size())], rng.below(2) == 0};
            base.add(fact);
        }
        const InferOutcome once = infer(base);
        const InferOutcome twice = infer(once.closure);

        // Monotone: the input embeds in the closure.
        for (const Fact& f : base.facts()) CHECK(once.closure.contains(f.value));
        // Idempotent: a second pass adds nothing.
        CHECK(atoms_of(once.closure) == atoms_of(twice.closure));
    }
}

TEST_CASE("contradictions are reported") {
    FactBase base;
    Fact a;
    a.value = {Atom::QuasiAbelian, true};
    a.source = FactSource::CertificateBacked;
    base.add(a);
    Fact b;
    b.value = {Atom::LeftQuasiAbelian, false};
    b.source = FactSource::CertificateBacked;
    base.add(b);
    const InferOutcome out = infer(base);
    CHECK(out.contradiction.has_value());
}

TEST_CASE("atom names round-trip") {
    for (Atom a : all_atoms()) {
        const auto parsed = atom_from_name(atom_name(a));
        REQUIRE(parsed.has_value());
        CHECK(*parsed == a);
    }
    CHECK(!atom_from_name("no-such-atom").has_value());
}
