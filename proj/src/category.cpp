#include "preab/category.hpp"

#include <map>
#include <memory>
#include <mutex>

#include "preab/instances.hpp"

namespace preab {

namespace {

struct ObjEq {
    bool operator()(const VectObjData& a, const VectObjData& b) const { return a.dim == b.dim; }
    bool operator()(const PairObjData& a, const PairObjData& b) const {
        return a.dim == b.dim && a.subspace == b.subspace;
    }
    bool operator()(const FgabObjData& a, const FgabObjData& b) const {
        return a.generators == b.generators && a.relations == b.relations;
    }
    bool operator()(const ProductObjData& a, const ProductObjData& b) const {
        if (a.components.size() != b.components.size()) return false;
        for (std::size_t i = 0; i < a.components.size(); ++i)
            if (!payload_identical(a.components[i], b.components[i])) return false;
        return true;
    }
    template <class A, class B>
    bool operator()(const A&, const B&) const {
        return false;
    }
};

}  // namespace

bool payload_identical(const ObjectPayload& a, const ObjectPayload& b) {
    return std::visit(ObjEq{}, a.v, b.v);
}

bool payload_identical(const ArrowPayload& a, const ArrowPayload& b) {
    if (a.v.index() != b.v.index()) return false;
    if (std::holds_alternative<RatMatrix>(a.v))
        return std::get<RatMatrix>(a.v) == std::get<RatMatrix>(b.v);
    const auto& pa = std::get<ProductArrowData>(a.v);
    const auto& pb = std::get<ProductArrowData>(b.v);
    if (pa.components.size() != pb.components.size()) return false;
    for (std::size_t i = 0; i < pa.components.size(); ++i)
        if (!payload_identical(pa.components[i], pb.components[i])) return false;
    return true;
}

const RatMatrix& arrow_matrix(const ArrowPayload& p) {
    if (!std::holds_alternative<RatMatrix>(p.v))
        throw CategoryError("arrow payload is not a matrix");
    return std::get<RatMatrix>(p.v);
}

const RatMatrix& arrow_matrix(const Morphism& f) { return arrow_matrix(f.payload); }

// ---------------------------------------------------------------------------
// Registry

namespace {

std::map<std::string, std::unique_ptr<CategoryInstance>>& registry_map() {
    static std::map<std::string, std::unique_ptr<CategoryInstance>> instances;
    return instances;
}

std::mutex& registry_mutex() {
    static std::mutex m;
    return m;
}

std::unique_ptr<CategoryInstance> make_base_instance(const std::string& id) {
    if (id == "vectq") return std::make_unique<VectQInstance>();
    if (id == "pairvect") return std::make_unique<PairVectInstance>();
    if (id == "mockpair") return std::make_unique<MockPairInstance>();
    if (id == "fgab") return std::make_unique<FgabInstance>();
    return nullptr;
}

}  // namespace

std::vector<std::string> instance_registry_base_ids() {
    return {"vectq", "fgab", "pairvect", "mockpair"};
}

bool instance_registry_known(const std::string& id) {
    if (make_base_instance(id)) return true;
    const std::string prefix = "product:";
    if (id.rfind(prefix, 0) != 0) return false;
    const std::string rest = id.substr(prefix.size());
    const auto sep = rest.find(':');
    if (sep == std::string::npos) return false;
    const std::string left = rest.substr(0, sep);
    const std::string right = rest.substr(sep + 1);
    return make_base_instance(left) != nullptr && make_base_instance(right) != nullptr;
}

const CategoryInstance& instance_registry_get(const std::string& id) {
    std::lock_guard<std::mutex> lock(registry_mutex());
    auto& map = registry_map();
    auto it = map.find(id);
    if (it != map.end()) return *it->second;

    if (auto base = make_base_instance(id)) {
        auto* raw = base.get();
        map.emplace(id, std::move(base));
        return *raw;
    }

    const std::string prefix = "product:";
    if (id.rfind(prefix, 0) == 0) {
        const std::string rest = id.substr(prefix.size());
        const auto sep = rest.find(':');
        if (sep != std::string::npos) {
            const std::string left = rest.substr(0, sep);
            const std::string right = rest.substr(sep + 1);
            auto lbase = make_base_instance(left);
            auto rbase = make_base_instance(right);
            if (lbase && rbase) {
                // Components are owned by the registry under their own ids.
                if (map.find(left) == map.end()) map.emplace(left, std::move(lbase));
                if (map.find(right) == map.end()) map.emplace(right, std::move(rbase));
                auto prod = std::make_unique<ProductInstance>(id, *map.at(left), *map.at(right));
                auto* raw = prod.get();
                map.emplace(id, std::move(prod));
                return *raw;
            }
        }
    }
    throw UnknownInstanceError(id);
}

// ---------------------------------------------------------------------------
// Payload constructors

ObjectPayload vect_obj(std::size_t dim) { return ObjectPayload{VectObjData{dim}}; }

ObjectPayload pair_obj(std::size_t dim, const RatMatrix& subspace_columns) {
    if (subspace_columns.rows() != dim)
        throw CategoryError("pair_obj: subspace basis has wrong ambient dimension");
    PairObjData data;
    data.dim = dim;
    data.subspace = rcef(subspace_columns);
    return ObjectPayload{std::move(data)};
}

ObjectPayload fgab_obj(std::size_t generators, const IntMatrix& relations) {
    if (relations.rows() != generators)
        throw CategoryError("fgab_obj: relation matrix has wrong generator count");
    FgabObjData data;
    data.generators = generators;
    data.relations = relations;
    std::size_t nontrivial = 0;
    for (const Integer& d : smith_normal_form(relations).diagonal()) {
        if (d == 0) continue;
        ++nontrivial;
        if (d != 1) data.invariants.push_back(d);
    }
    for (std::size_t i = nontrivial; i < generators; ++i) data.invariants.push_back(0);
    return ObjectPayload{std::move(data)};
}

ObjectPayload product_obj(std::vector<ObjectPayload> components) {
    if (components.size() != 2) throw CategoryError("product_obj: exactly two components");
    return ObjectPayload{ProductObjData{std::move(components)}};
}

ObjectRef make_object(const std::string& instance, ObjectPayload payload) {
    const CategoryInstance& inst = instance_registry_get(instance);
    ObjectRef ref{instance, std::move(payload)};
    if (!inst.valid_object(ref.payload))
        throw CategoryError("invalid object payload for instance '" + instance + "'");
    return ref;
}

Morphism make_matrix_morphism(const std::string& instance, const ObjectPayload& source,
                              const ObjectPayload& target, const RatMatrix& matrix) {
    Morphism f{make_object(instance, source), make_object(instance, target),
               ArrowPayload{matrix}};
    if (!instance_registry_get(instance).valid_morphism(f))
        throw CategoryError("invalid morphism payload for instance '" + instance + "'");
    return f;
}

Morphism make_product_morphism(const std::string& instance, const Morphism& first,
                               const Morphism& second) {
    const auto& inst = dynamic_cast<const ProductInstance&>(instance_registry_get(instance));
    return inst.combine(first, second);
}

}  // namespace preab
