#pragma once

#include "preab/category.hpp"

namespace preab {

// Shared plumbing for the instances whose arrows are plain rational matrices
// acting on a coordinate module (Q^n or Z^g).
class MatrixInstance : public CategoryInstance {
  public:
    Morphism identity(const ObjectRef& a) const override;
    Morphism zero_morphism(const ObjectRef& source, const ObjectRef& target) const override;
    Morphism compose(const Morphism& f, const Morphism& g) const override;
    Morphism add(const Morphism& f, const Morphism& g) const override;
    Morphism negate(const Morphism& f) const override;
    BiproductResult biproduct(const ObjectRef& a, const ObjectRef& b) const override;

  protected:
    virtual std::size_t coord_dim(const ObjectPayload& payload) const = 0;
    virtual ObjectPayload biproduct_object(const ObjectPayload& a,
                                           const ObjectPayload& b) const = 0;
};

// Finite-dimensional rational vector spaces: the abelian control instance.
class VectQInstance final : public MatrixInstance {
  public:
    const std::string& id() const override;
    bool valid_object(const ObjectPayload& payload) const override;
    bool valid_morphism(const Morphism& f) const override;
    bool object_eq(const ObjectPayload& a, const ObjectPayload& b) const override;
    bool morphism_eq(const Morphism& f, const Morphism& g) const override;
    ObjectPayload zero_object() const override;
    KernelResult kernel(const Morphism& f) const override;
    CokernelResult cokernel(const Morphism& f) const override;
    SolveOutcome solve_right(const Morphism& f, const Morphism& v) const override;
    SolveOutcome solve_left(const Morphism& f, const Morphism& v) const override;
    std::vector<Morphism> hom_generators(const ObjectRef& a, const ObjectRef& b) const override;
    std::string describe_object(const ObjectPayload& payload) const override;
    Claim morphism_neq_claim(const Morphism& f, const Morphism& g) const override;

  protected:
    std::size_t coord_dim(const ObjectPayload& payload) const override;
    ObjectPayload biproduct_object(const ObjectPayload& a, const ObjectPayload& b) const override;
};

// Pairs (subspace inside an ambient rational space) with subspace-compatible
// maps: quasi-abelian but not abelian, the instance carrying the
// monic+epic-but-not-invertible phenomenon.
class PairVectInstance : public MatrixInstance {
  public:
    const std::string& id() const override;
    bool valid_object(const ObjectPayload& payload) const override;
    bool valid_morphism(const Morphism& f) const override;
    bool object_eq(const ObjectPayload& a, const ObjectPayload& b) const override;
    bool morphism_eq(const Morphism& f, const Morphism& g) const override;
    ObjectPayload zero_object() const override;
    KernelResult kernel(const Morphism& f) const override;
    CokernelResult cokernel(const Morphism& f) const override;
    SolveOutcome solve_right(const Morphism& f, const Morphism& v) const override;
    SolveOutcome solve_left(const Morphism& f, const Morphism& v) const override;
    std::vector<Morphism> hom_generators(const ObjectRef& a, const ObjectRef& b) const override;
    std::string describe_object(const ObjectPayload& payload) const override;
    Claim morphism_neq_claim(const Morphism& f, const Morphism& g) const override;

  protected:
    std::size_t coord_dim(const ObjectPayload& payload) const override;
    ObjectPayload biproduct_object(const ObjectPayload& a, const ObjectPayload& b) const override;
};

// Negative control: pair objects with honest kernels but cokernels that
// quotient by ran f *plus the target subspace* (a desk-scale model of
// quotient-by-closure). Not a pre-abelian category; exists so every checker
// has a true failure path.
class MockPairInstance final : public PairVectInstance {
  public:
    const std::string& id() const override;
    CokernelResult cokernel(const Morphism& f) const override;
};

// Finitely generated abelian groups via integer presentations; abelian with
// non-split extensions, the carrier of the section-trick refutation.
class FgabInstance final : public MatrixInstance {
  public:
    const std::string& id() const override;
    bool valid_object(const ObjectPayload& payload) const override;
    bool valid_morphism(const Morphism& f) const override;
    bool object_eq(const ObjectPayload& a, const ObjectPayload& b) const override;
    bool morphism_eq(const Morphism& f, const Morphism& g) const override;
    ObjectPayload zero_object() const override;
    KernelResult kernel(const Morphism& f) const override;
    CokernelResult cokernel(const Morphism& f) const override;
    SolveOutcome solve_right(const Morphism& f, const Morphism& v) const override;
    SolveOutcome solve_left(const Morphism& f, const Morphism& v) const override;
    std::vector<Morphism> hom_generators(const ObjectRef& a, const ObjectRef& b) const override;
    std::string describe_object(const ObjectPayload& payload) const override;
    Claim morphism_neq_claim(const Morphism& f, const Morphism& g) const override;

  protected:
    std::size_t coord_dim(const ObjectPayload& payload) const override;
    ObjectPayload biproduct_object(const ObjectPayload& a, const ObjectPayload& b) const override;
};

// Componentwise product of two instances.
class ProductInstance final : public CategoryInstance {
  public:
    ProductInstance(std::string id, const CategoryInstance& first, const CategoryInstance& second);

    const std::string& id() const override;
    bool valid_object(const ObjectPayload& payload) const override;
    bool valid_morphism(const Morphism& f) const override;
    bool object_eq(const ObjectPayload& a, const ObjectPayload& b) const override;
    bool morphism_eq(const Morphism& f, const Morphism& g) const override;
    ObjectPayload zero_object() const override;
    Morphism identity(const ObjectRef& a) const override;
    Morphism zero_morphism(const ObjectRef& source, const ObjectRef& target) const override;
    Morphism compose(const Morphism& f, const Morphism& g) const override;
    Morphism add(const Morphism& f, const Morphism& g) const override;
    Morphism negate(const Morphism& f) const override;
    KernelResult kernel(const Morphism& f) const override;
    CokernelResult cokernel(const Morphism& f) const override;
    BiproductResult biproduct(const ObjectRef& a, const ObjectRef& b) const override;
    SolveOutcome solve_right(const Morphism& f, const Morphism& v) const override;
    SolveOutcome solve_left(const Morphism& f, const Morphism& v) const override;
    std::vector<Morphism> hom_generators(const ObjectRef& a, const ObjectRef& b) const override;
    Claim morphism_neq_claim(const Morphism& f, const Morphism& g) const override;
    std::string describe_object(const ObjectPayload& payload) const override;

    const CategoryInstance& component(std::size_t idx) const;
    // Splits a product morphism into its component morphisms.
    Morphism component_morphism(const Morphism& f, std::size_t idx) const;
    Morphism combine(const Morphism& first, const Morphism& second) const;
    ObjectRef combine_objects(const ObjectPayload& first, const ObjectPayload& second) const;

  private:
    std::string id_;
    const CategoryInstance* parts_[2];
};

}  // namespace preab
