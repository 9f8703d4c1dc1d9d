#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "preab/report.hpp"
#include "preab/verify.hpp"

namespace py = pybind11;
using namespace preab;

namespace {

RatMatrix matrix_from_py(const std::vector<std::vector<std::string>>& rows) {
    const std::size_t r = rows.size();
    const std::size_t c = r == 0 ? 0 : rows[0].size();
    RatMatrix m(r, c);
    for (std::size_t i = 0; i < r; ++i) {
        if (rows[i].size() != c) throw std::invalid_argument("ragged matrix");
        for (std::size_t j = 0; j < c; ++j) m.at(i, j) = rat_from_string(rows[i][j]);
    }
    return m;
}

std::vector<std::vector<std::string>> matrix_to_py(const RatMatrix& m) {
    std::vector<std::vector<std::string>> out(m.rows(), std::vector<std::string>(m.cols()));
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) out[i][j] = rat_to_string(m.at(i, j));
    return out;
}

ObjectRef object_from_json_str(const std::string& instance, const std::string& payload) {
    return make_object(instance, object_payload_from_json(json::parse(payload)));
}

py::dict morphism_summary(const Morphism& f) {
    py::dict out;
    out["instance"] = f.source.instance;
    out["json"] = to_json(f).dump();
    if (std::holds_alternative<RatMatrix>(f.payload.v))
        out["matrix"] = matrix_to_py(arrow_matrix(f));
    return out;
}

}  // namespace

PYBIND11_MODULE(_preab, m) {
    m.doc() = "Exact kernels, cokernels, pullbacks and property checkers for "
              "concrete pre-abelian categories";

    py::class_<ObjectRef>(m, "Object")
        .def_property_readonly("instance", [](const ObjectRef& o) { return o.instance; })
        .def("describe",
             [](const ObjectRef& o) {
                 return instance_registry_get(o.instance).describe_object(o.payload);
             })
        .def("is_zero", [](const ObjectRef& o) { return engine::is_zero_object(o); })
        .def("__repr__", [](const ObjectRef& o) {
            return "<preab.Object " + instance_registry_get(o.instance).describe_object(o.payload) +
                   " in " + o.instance + ">";
        });

    py::class_<Morphism>(m, "Morphism")
        .def_property_readonly("source", [](const Morphism& f) { return f.source; })
        .def_property_readonly("target", [](const Morphism& f) { return f.target; })
        .def_property_readonly("matrix",
                               [](const Morphism& f) { return matrix_to_py(arrow_matrix(f)); })
        .def("to_json", [](const Morphism& f) { return to_json(f).dump(); })
        .def("summary", &morphism_summary)
        .def("__repr__", [](const Morphism& f) {
            const CategoryInstance& inst = instance_registry_get(f.source.instance);
            return "<preab.Morphism " + inst.describe_object(f.source.payload) + " -> " +
                   inst.describe_object(f.target.payload) + " in " + f.source.instance + ">";
        });

    // Object constructors.
    m.def("vect_object", [](std::size_t dim) { return make_object("vectq", vect_obj(dim)); });
    m.def(
        "pair_object",
        [](std::size_t dim, const std::vector<std::vector<std::string>>& basis,
           const std::string& instance) {
            return make_object(instance, pair_obj(dim, matrix_from_py(basis)));
        },
        py::arg("dim"), py::arg("subspace_basis"), py::arg("instance") = "pairvect");
    m.def("fgab_object", [](std::size_t generators,
                            const std::vector<std::vector<std::string>>& relations) {
        auto rel = to_integer(matrix_from_py(relations));
        if (!rel) throw std::invalid_argument("relations must be integral");
        return make_object("fgab", fgab_obj(generators, *rel));
    });
    m.def("product_object", [](const ObjectRef& a, const ObjectRef& b) {
        const std::string id = "product:" + a.instance + ":" + b.instance;
        return make_object(id, product_obj({a.payload, b.payload}));
    });
    m.def("object_from_json", &object_from_json_str);

    // Morphism constructors.
    m.def("morphism", [](const ObjectRef& source, const ObjectRef& target,
                         const std::vector<std::vector<std::string>>& matrix) {
        if (source.instance != target.instance)
            throw std::invalid_argument("endpoints in different instances");
        return make_matrix_morphism(source.instance, source.payload, target.payload,
                                    matrix_from_py(matrix));
    });
    m.def("product_morphism", [](const Morphism& first, const Morphism& second) {
        const std::string id = "product:" + first.source.instance + ":" + second.source.instance;
        return make_product_morphism(id, first, second);
    });
    m.def("morphism_from_json",
          [](const std::string& text) { return morphism_from_json(json::parse(text)); });
    m.def("identity", [](const ObjectRef& a) {
        return instance_registry_get(a.instance).identity(a);
    });
    m.def("zero_morphism", [](const ObjectRef& a, const ObjectRef& b) {
        return instance_registry_get(a.instance).zero_morphism(a, b);
    });

    // Engine operations.
    m.def("compose", &engine::compose);
    m.def("kernel", [](const Morphism& f) {
        const KernelResult k = engine::kernel(f);
        return py::make_tuple(k.object, k.arrow);
    });
    m.def("cokernel", [](const Morphism& f) {
        const CokernelResult c = engine::cokernel(f);
        return py::make_tuple(c.object, c.arrow);
    });
    m.def("image", [](const Morphism& f) {
        const KernelResult k = engine::image(f);
        return py::make_tuple(k.object, k.arrow);
    });
    m.def("coimage", [](const Morphism& f) {
        const CokernelResult c = engine::coimage(f);
        return py::make_tuple(c.object, c.arrow);
    });
    m.def("parallel_morphism", &engine::parallel_morphism);
    m.def("pullback", [](const Morphism& c, const Morphism& d) {
        const SquareWitness sq = engine::pullback(c, d);
        py::dict out;
        out["a"] = sq.a;
        out["b"] = sq.b;
        out["c"] = sq.c;
        out["d"] = sq.d;
        return out;
    });
    m.def("pushout", [](const Morphism& a, const Morphism& b) {
        const SquareWitness sq = engine::pushout(a, b);
        py::dict out;
        out["a"] = sq.a;
        out["b"] = sq.b;
        out["c"] = sq.c;
        out["d"] = sq.d;
        return out;
    });
    m.def("biproduct", [](const ObjectRef& a, const ObjectRef& b) {
        const auto bp = engine::biproduct(a, b);
        py::dict out;
        out["object"] = bp.object;
        out["inj1"] = bp.inj1;
        out["inj2"] = bp.inj2;
        out["proj1"] = bp.proj1;
        out["proj2"] = bp.proj2;
        return out;
    });
    m.def("is_mono", &engine::is_mono);
    m.def("is_epi", &engine::is_epi);
    m.def("is_isomorphism", [](const Morphism& f) { return engine::is_isomorphism(f).iso; });
    m.def("is_kernel_morphism",
          [](const Morphism& f) { return engine::is_kernel_morphism(f).verdict; });
    m.def("is_cokernel_morphism",
          [](const Morphism& f) { return engine::is_cokernel_morphism(f).verdict; });
    m.def("morphisms_equal", [](const Morphism& f, const Morphism& g) {
        return instance_registry_get(f.source.instance).morphism_eq(f, g);
    });

    // Checkers, reports, structures.
    m.def(
        "classify",
        [](const std::string& instance, std::uint64_t seed, std::size_t size,
           std::size_t pair_budget) {
            CheckOptions options;
            options.pair_budget = pair_budget;
            return report_to_json(classify_run(default_corpus(instance, seed, size), options))
                .dump(2);
        },
        py::arg("instance"), py::arg("seed") = 1, py::arg("size") = 100,
        py::arg("pair_budget") = 50000);
    m.def(
        "ai_check",
        [](const std::string& instance, const std::string& structure, std::uint64_t seed,
           std::size_t size, std::size_t pair_budget) {
            CheckOptions options;
            options.pair_budget = pair_budget;
            return report_to_json(
                       ai_check_run(default_corpus(instance, seed, size), structure, options))
                .dump(2);
        },
        py::arg("instance"), py::arg("structure") = "all", py::arg("seed") = 1,
        py::arg("size") = 100, py::arg("pair_budget") = 50000);
    m.def("verify_json", [](const std::string& text) {
        const VerifyOutcome outcome = verify_document(json::parse(text));
        return py::make_tuple(outcome.ok, outcome.failures);
    });

    // Sequence-space laboratory.
    m.def("xn_values", [](long n) {
        const FiniteSeq x = make_xn(n);
        return py::make_tuple(rat_to_string(sup_norm(x)), rat_to_string(one_norm(x)),
                              rat_to_string(sum_functional(x)));
    });
    m.def("s_seminorm", [](long n, long m) { return rat_to_string(s_seminorm(make_xn(n), m)); });
    m.def("product_seminorm",
          [](long n, long m) { return rat_to_string(product_seminorm(make_xn(n), m)); });
    m.def("banach_closure_witness", [](const std::string& eps) {
        return to_json(banach_closure_witness(rat_from_string(eps))).dump(2);
    });
    m.def("nuclear_closure_witness", [](const std::string& eps, long m_max) {
        return to_json(nuclear_closure_witness(rat_from_string(eps), m_max)).dump(2);
    });

    // Inference.
    m.def("infer", [](const std::vector<std::pair<std::string, bool>>& facts) {
        FactBase base;
        for (const auto& [name, positive] : facts) {
            const auto atom = atom_from_name(name);
            if (!atom) throw std::invalid_argument("unknown atom '" + name + "'");
            Fact fact;
            fact.value = {*atom, positive};
            base.add(fact);
        }
        const InferOutcome outcome = infer(base);
        std::vector<std::pair<std::string, bool>> out;
        for (const Fact& f : outcome.closure.facts())
            out.emplace_back(atom_name(f.value.atom), f.value.positive);
        return out;
    });

    m.attr("__version__") = kToolVersion;
    m.attr("instances") = std::vector<std::string>{"vectq", "fgab", "pairvect", "mockpair"};
}
