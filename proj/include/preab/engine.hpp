#pragma once

#include "preab/category.hpp"

namespace preab {
namespace engine {

// Generic additive-category constructions, expressed solely through the
// CategoryInstance interface. Every operation resolves the instance from the
// morphism endpoints and validates composability before delegating.

const CategoryInstance& instance_of(const Morphism& f);
const CategoryInstance& instance_of(const ObjectRef& a);

Morphism compose(const Morphism& f, const Morphism& g);  // f after g
Morphism add(const Morphism& f, const Morphism& g);
Morphism subtract(const Morphism& f, const Morphism& g);

bool is_zero_morphism(const Morphism& f);
bool is_zero_object(const ObjectRef& a);

// Verifies the biproduct identities (p1 i1 = 1, p2 i2 = 1, p1 i2 = 0,
// p2 i1 = 0, i1 p1 + i2 p2 = 1) before returning.
CategoryInstance::BiproductResult biproduct(const ObjectRef& a, const ObjectRef& b);

KernelResult kernel(const Morphism& f);
CokernelResult cokernel(const Morphism& f);

KernelResult image(const Morphism& f);      // kernel of the cokernel
CokernelResult coimage(const Morphism& f);  // cokernel of the kernel

struct Factorization {
    KernelResult image;
    CokernelResult coimage;
    Morphism parallel;  // coimage object -> image object
};

struct FactorizeOutcome {
    std::optional<Factorization> factorization;
    std::optional<Claim> failure;  // set when an intermediate solve has no solution
};

// f = image.arrow ∘ parallel ∘ coimage.arrow. The solves cannot fail in a
// pre-abelian instance; broken (mock) instances surface the evidence instead.
FactorizeOutcome factorize(const Morphism& f);
Morphism parallel_morphism(const Morphism& f);  // throws CategoryError on failure

// pullback(c, d): kernel of c∘p1 - d∘p2 on the biproduct; pushout(a, b):
// cokernel of i1∘a - i2∘b. See SquareWitness for the edge labelling.
SquareWitness pullback(const Morphism& c, const Morphism& d);
SquareWitness pushout(const Morphism& a, const Morphism& b);

// Mediating morphism against a probe cone; nullopt when none exists.
std::optional<Morphism> pullback_mediator(const SquareWitness& square, const Morphism& to_b,
                                          const Morphism& to_c);
std::optional<Morphism> pushout_mediator(const SquareWitness& square, const Morphism& from_b,
                                         const Morphism& from_c);

bool is_mono(const Morphism& f);  // kernel object is zero
bool is_epi(const Morphism& f);   // cokernel object is zero

struct IsoCheck {
    bool iso = false;
    std::optional<Morphism> inverse;
    std::optional<Claim> evidence;  // why f is not an isomorphism
};

IsoCheck is_isomorphism(const Morphism& f);

struct RecognitionResult {
    bool verdict = false;
    std::optional<Morphism> comparison;  // canonical comparison morphism
    std::optional<Claim> evidence;       // why the comparison is not invertible
};

// f is a kernel iff the canonical map to ker(coker f) is an isomorphism;
// dually for cokernels.
RecognitionResult is_kernel_morphism(const Morphism& f);
RecognitionResult is_cokernel_morphism(const Morphism& f);

}  // namespace engine
}  // namespace preab
