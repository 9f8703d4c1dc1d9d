#pragma once

#include <string>
#include <variant>
#include <vector>

#include "preab/int_matrix.hpp"
#include "preab/rat_matrix.hpp"

namespace preab {

// A claim is a concrete, instance-free statement about matrices that can be
// re-checked from its own data with nothing but exact linear algebra. All
// certificates carry their evidence as claims so the verify path never has
// to trust (or call into) the engine that produced them.

struct ClaimProductEquals {
    RatMatrix a, b, c;  // a * b == c
};

struct ClaimMatricesEqual {
    RatMatrix a, b;
    bool expect;  // false asserts a != b
};

struct ClaimMatrixZero {
    RatMatrix a;
    bool expect;
};

struct ClaimFullRowRank {
    RatMatrix m;
    bool expect;  // rank == rows, i.e. surjective as a column map
};

struct ClaimFullColumnRank {
    RatMatrix m;
    bool expect;  // rank == cols, i.e. injective as a column map
};

struct ClaimSpanContains {
    RatMatrix space, vectors;
    bool expect;  // every column of `vectors` in the column span of `space`
};

struct ClaimRationalUnsolvable {
    RatMatrix m, rhs, witness;  // witness * m == 0 and witness * rhs != 0
};

struct ClaimIntegerUnsolvable {
    IntMatrix m, rhs;  // M X = rhs has no integer solution
};

struct ClaimIntegerSolves {
    IntMatrix m, rhs, solution;  // m * solution == rhs
};

struct ClaimLatticeContains {
    IntMatrix lattice, vectors;
    bool expect;  // every column of `vectors` in the column lattice
};

struct ClaimInvariantFactors {
    IntMatrix m;
    std::vector<Integer> factors;  // nonzero SNF diagonal, in chain order
};

// Instance-semantic predicates, restated as raw formulas over payload data so
// that re-verification never consults the engine. Each holds iff the stated
// predicate evaluates to `expect`.

// pairvect: f is a kernel iff injective with src subspace = f^{-1}(tgt span).
struct ClaimPairKernel {
    RatMatrix f, src_subspace, tgt_subspace;
    bool expect;
};

// pairvect: f is a cokernel iff surjective with f(src span) = tgt span.
struct ClaimPairCokernel {
    RatMatrix f, src_subspace, tgt_subspace;
    bool expect;
};

// mockpair: epi iff [f | tgt subspace] has full row rank.
struct ClaimMockEpi {
    RatMatrix f, tgt_subspace;
    bool expect;
};

// mockpair recognition chains, replayed with raw elimination.
struct ClaimMockKernel {
    RatMatrix f, src_subspace, tgt_subspace;
    bool expect;
};

struct ClaimMockCokernel {
    RatMatrix f, src_subspace, tgt_subspace;
    bool expect;
};

// fgab: mono iff the preimage lattice of col(tgt relations) under f is
// contained in col(src relations).
struct ClaimFgabMono {
    IntMatrix f, src_relations, tgt_relations;
    bool expect;
};

// fgab: epi iff every standard basis vector lies in col([f | tgt relations]).
struct ClaimFgabEpi {
    IntMatrix f, tgt_relations;
    bool expect;
};

using ClaimBody =
    std::variant<ClaimProductEquals, ClaimMatricesEqual, ClaimMatrixZero, ClaimFullRowRank,
                 ClaimFullColumnRank, ClaimSpanContains, ClaimRationalUnsolvable,
                 ClaimIntegerUnsolvable, ClaimIntegerSolves, ClaimLatticeContains,
                 ClaimInvariantFactors, ClaimPairKernel, ClaimPairCokernel, ClaimMockEpi,
                 ClaimMockKernel, ClaimMockCokernel, ClaimFgabMono, ClaimFgabEpi>;

struct Claim {
    std::string label;   // what the claim witnesses, e.g. "leg is not epic"
    int component = -1;  // product component index, -1 for non-product data
    ClaimBody body;
};

// Re-checks a single claim from its own data (exact arithmetic only).
bool claim_holds(const Claim& claim);

const char* claim_kind_name(const Claim& claim);

}  // namespace preab
