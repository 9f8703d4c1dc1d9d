#pragma once

#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "preab/claims.hpp"
#include "preab/int_matrix.hpp"
#include "preab/rat_matrix.hpp"

namespace preab {

class CategoryError : public std::runtime_error {
  public:
    explicit CategoryError(const std::string& what) : std::runtime_error(what) {}
};

class UnknownInstanceError : public CategoryError {
  public:
    explicit UnknownInstanceError(const std::string& id)
        : CategoryError("unknown instance '" + id + "'") {}
};

// ---------------------------------------------------------------------------
// Object and arrow payloads. Concrete categories describe objects as a
// dimension, a subspace pair, or an integer presentation; product categories
// as tuples of component payloads.

struct VectObjData {
    std::size_t dim = 0;
};

struct PairObjData {
    std::size_t dim = 0;   // ambient dimension
    RatMatrix subspace;    // dim x d basis, reduced column echelon form
};

struct FgabObjData {
    std::size_t generators = 0;
    IntMatrix relations;              // generators x k, columns are relations
    std::vector<Integer> invariants;  // canonical: factors >= 2 in chain order, then zeros
};

struct ObjectPayload;
struct ProductObjData {
    std::vector<ObjectPayload> components;
};

struct ObjectPayload {
    std::variant<VectObjData, PairObjData, FgabObjData, ProductObjData> v;
};

struct ObjectRef {
    std::string instance;
    ObjectPayload payload;
};

struct ArrowPayload;
struct ProductArrowData {
    std::vector<ArrowPayload> components;
};

struct ArrowPayload {
    std::variant<RatMatrix, ProductArrowData> v;
};

struct Morphism {
    ObjectRef source, target;
    ArrowPayload payload;
};

// Structural (bit-exact) equality; instances layer semantic equality on top.
bool payload_identical(const ObjectPayload& a, const ObjectPayload& b);
bool payload_identical(const ArrowPayload& a, const ArrowPayload& b);

const RatMatrix& arrow_matrix(const Morphism& f);  // throws on product payloads
const RatMatrix& arrow_matrix(const ArrowPayload& p);

// ---------------------------------------------------------------------------
// Results of the derived constructions.

struct KernelResult {
    ObjectRef object;
    Morphism arrow;  // object -> source(f)
};

struct CokernelResult {
    ObjectRef object;
    Morphism arrow;  // target(f) -> object
};

enum class SquareKind { Pullback, Pushout };

// Commuting square with corner A (pullback) or D (pushout):
//
//       a          pullback(c, d) computes a, b from c, d;
//   A -----> B     pushout(a, b) computes c, d from a, b.
//   |        |
//   | b      | c   c∘a = d∘b always holds.
//   v        v
//   C -----> D
//       d
struct SquareWitness {
    SquareKind kind;
    Morphism a, b, c, d;
};

// An outcome of an exact Hom solve; when no solution exists the evidence (if
// present) is a claim certifying infeasibility.
struct SolveOutcome {
    std::optional<Morphism> solution;
    std::optional<Claim> evidence;
};

// ---------------------------------------------------------------------------
// The dispatch record of one concrete pre-abelian category: everything the
// generic engine needs, and nothing else.

class CategoryInstance {
  public:
    virtual ~CategoryInstance() = default;

    virtual const std::string& id() const = 0;

    virtual bool valid_object(const ObjectPayload& payload) const = 0;
    virtual bool valid_morphism(const Morphism& f) const = 0;

    // Semantic object equality (canonical forms / invariant factors).
    virtual bool object_eq(const ObjectPayload& a, const ObjectPayload& b) const = 0;
    // Morphism equality over identical endpoints (congruence where relevant).
    virtual bool morphism_eq(const Morphism& f, const Morphism& g) const = 0;

    virtual ObjectPayload zero_object() const = 0;
    virtual Morphism identity(const ObjectRef& a) const = 0;
    virtual Morphism zero_morphism(const ObjectRef& source, const ObjectRef& target) const = 0;

    virtual Morphism compose(const Morphism& f, const Morphism& g) const = 0;  // f after g
    virtual Morphism add(const Morphism& f, const Morphism& g) const = 0;
    virtual Morphism negate(const Morphism& f) const = 0;

    virtual KernelResult kernel(const Morphism& f) const = 0;
    virtual CokernelResult cokernel(const Morphism& f) const = 0;

    struct BiproductResult {
        ObjectRef object;
        Morphism inj1, inj2, proj1, proj2;
    };
    virtual BiproductResult biproduct(const ObjectRef& a, const ObjectRef& b) const = 0;

    // u with f∘u ≡ v (lift through f) and u with u∘f ≡ v (extend along f).
    virtual SolveOutcome solve_right(const Morphism& f, const Morphism& v) const = 0;
    virtual SolveOutcome solve_left(const Morphism& f, const Morphism& v) const = 0;

    // Generators of Hom(a, b) as an abelian group / Q-vector space.
    virtual std::vector<Morphism> hom_generators(const ObjectRef& a,
                                                 const ObjectRef& b) const = 0;

    // A claim certifying f != g in this instance's Hom equality. Preconditions:
    // identical endpoints and morphism_eq(f, g) is false.
    virtual Claim morphism_neq_claim(const Morphism& f, const Morphism& g) const = 0;

    virtual std::string describe_object(const ObjectPayload& payload) const = 0;
};

// ---------------------------------------------------------------------------
// Registry. Base instances are registered once; "product:<a>:<b>" ids are
// materialized on demand (components must be base ids).

const CategoryInstance& instance_registry_get(const std::string& id);
bool instance_registry_known(const std::string& id);
std::vector<std::string> instance_registry_base_ids();

// Payload construction helpers (validating + canonicalizing).
ObjectPayload vect_obj(std::size_t dim);
ObjectPayload pair_obj(std::size_t dim, const RatMatrix& subspace_columns);
ObjectPayload fgab_obj(std::size_t generators, const IntMatrix& relations);
ObjectPayload product_obj(std::vector<ObjectPayload> components);

ObjectRef make_object(const std::string& instance, ObjectPayload payload);
Morphism make_matrix_morphism(const std::string& instance, const ObjectPayload& source,
                              const ObjectPayload& target, const RatMatrix& matrix);
Morphism make_product_morphism(const std::string& instance, const Morphism& first,
                               const Morphism& second);

}  // namespace preab
