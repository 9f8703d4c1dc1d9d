#include "preab/jsonio.hpp"

namespace preab {

namespace {

json rational_array(const std::vector<SeminormRecord>& records) {
    json out = json::array();
    for (const auto& r : records)
        out.push_back(json{{"m", r.m}, {"value", rat_to_string(r.value)}});
    return out;
}

std::vector<SeminormRecord> records_from_json(const json& j) {
    std::vector<SeminormRecord> out;
    for (const auto& item : j)
        out.push_back({item.at("m").get<long>(), rat_from_string(item.at("value"))});
    return out;
}

template <class T>
T get_or_throw(const json& j, const char* key) {
    if (!j.contains(key)) throw JsonFormatError(std::string("missing key '") + key + "'");
    return j.at(key).get<T>();
}

}  // namespace

json to_json(const RatMatrix& m) {
    json entries = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) entries.push_back(rat_to_string(m.at(i, j)));
    return json{{"rows", m.rows()}, {"cols", m.cols()}, {"entries", entries}};
}

RatMatrix rat_matrix_from_json(const json& j) {
    const auto rows = get_or_throw<std::size_t>(j, "rows");
    const auto cols = get_or_throw<std::size_t>(j, "cols");
    const json& entries = j.at("entries");
    if (!entries.is_array() || entries.size() != rows * cols)
        throw JsonFormatError("matrix entry count does not match its shape");
    RatMatrix m(rows, cols);
    std::size_t k = 0;
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t c = 0; c < cols; ++c)
            m.at(i, c) = rat_from_string(entries[k++].get<std::string>());
    return m;
}

json to_json(const IntMatrix& m) {
    json entries = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) entries.push_back(m.at(i, j).get_str());
    return json{{"rows", m.rows()}, {"cols", m.cols()}, {"entries", entries}};
}

IntMatrix int_matrix_from_json(const json& j) {
    const RatMatrix m = rat_matrix_from_json(j);
    auto out = to_integer(m);
    if (!out) throw JsonFormatError("expected an integer matrix");
    return *out;
}

json to_json(const ObjectPayload& payload) {
    if (std::holds_alternative<VectObjData>(payload.v))
        return json{{"kind", "dim"}, {"dim", std::get<VectObjData>(payload.v).dim}};
    if (std::holds_alternative<PairObjData>(payload.v)) {
        const auto& d = std::get<PairObjData>(payload.v);
        return json{{"kind", "pair"}, {"dim", d.dim}, {"subspace", to_json(d.subspace)}};
    }
    if (std::holds_alternative<FgabObjData>(payload.v)) {
        const auto& d = std::get<FgabObjData>(payload.v);
        json invariants = json::array();
        for (const Integer& x : d.invariants) invariants.push_back(x.get_str());
        return json{{"kind", "fgab"},
                    {"generators", d.generators},
                    {"relations", to_json(d.relations)},
                    {"invariant_factors", invariants}};
    }
    const auto& d = std::get<ProductObjData>(payload.v);
    json comps = json::array();
    for (const auto& c : d.components) comps.push_back(to_json(c));
    return json{{"kind", "product"}, {"components", comps}};
}

ObjectPayload object_payload_from_json(const json& j) {
    const std::string kind = get_or_throw<std::string>(j, "kind");
    if (kind == "dim") return vect_obj(get_or_throw<std::size_t>(j, "dim"));
    if (kind == "pair")
        return pair_obj(get_or_throw<std::size_t>(j, "dim"),
                        rat_matrix_from_json(j.at("subspace")));
    if (kind == "fgab")
        return fgab_obj(get_or_throw<std::size_t>(j, "generators"),
                        int_matrix_from_json(j.at("relations")));
    if (kind == "product") {
        std::vector<ObjectPayload> comps;
        for (const auto& c : j.at("components")) comps.push_back(object_payload_from_json(c));
        return product_obj(std::move(comps));
    }
    throw JsonFormatError("unknown object kind '" + kind + "'");
}

json to_json(const ArrowPayload& payload) {
    if (std::holds_alternative<RatMatrix>(payload.v))
        return json{{"matrix", to_json(std::get<RatMatrix>(payload.v))}};
    json comps = json::array();
    for (const auto& c : std::get<ProductArrowData>(payload.v).components)
        comps.push_back(to_json(c));
    return json{{"components", comps}};
}

ArrowPayload arrow_payload_from_json(const json& j) {
    if (j.contains("matrix")) return ArrowPayload{rat_matrix_from_json(j.at("matrix"))};
    if (j.contains("components")) {
        ProductArrowData data;
        for (const auto& c : j.at("components")) data.components.push_back(arrow_payload_from_json(c));
        return ArrowPayload{std::move(data)};
    }
    throw JsonFormatError("arrow payload needs 'matrix' or 'components'");
}

json to_json(const Morphism& f) {
    json out{{"instance", f.source.instance},
             {"source", to_json(f.source.payload)},
             {"target", to_json(f.target.payload)}};
    const json payload = to_json(f.payload);
    for (auto it = payload.begin(); it != payload.end(); ++it) out[it.key()] = it.value();
    return out;
}

Morphism morphism_from_json(const json& j) {
    const std::string instance = get_or_throw<std::string>(j, "instance");
    const CategoryInstance& inst = instance_registry_get(instance);
    Morphism f{make_object(instance, object_payload_from_json(j.at("source"))),
               make_object(instance, object_payload_from_json(j.at("target"))),
               arrow_payload_from_json(j)};
    if (!inst.valid_morphism(f)) throw JsonFormatError("morphism fails instance validation");
    return f;
}

// ---------------------------------------------------------------------------
// Claims

namespace {

struct ClaimWriter {
    json out;
    void operator()(const ClaimProductEquals& c) {
        out["a"] = to_json(c.a);
        out["b"] = to_json(c.b);
        out["c"] = to_json(c.c);
    }
    void operator()(const ClaimMatricesEqual& c) {
        out["a"] = to_json(c.a);
        out["b"] = to_json(c.b);
        out["expect"] = c.expect;
    }
    void operator()(const ClaimMatrixZero& c) {
        out["a"] = to_json(c.a);
        out["expect"] = c.expect;
    }
    void operator()(const ClaimFullRowRank& c) {
        out["m"] = to_json(c.m);
        out["expect"] = c.expect;
    }
    void operator()(const ClaimFullColumnRank& c) {
        out["m"] = to_json(c.m);
        out["expect"] = c.expect;
    }
    void operator()(const ClaimSpanContains& c) {
        out["space"] = to_json(c.space);
        out["vectors"] = to_json(c.vectors);
        out["expect"] = c.expect;
    }
    void operator()(const ClaimRationalUnsolvable& c) {
        out["m"] = to_json(c.m);
        out["rhs"] = to_json(c.rhs);
        out["witness"] = to_json(c.witness);
    }
    void operator()(const ClaimIntegerUnsolvable& c) {
        out["m"] = to_json(c.m);
        out["rhs"] = to_json(c.rhs);
    }
    void operator()(const ClaimIntegerSolves& c) {
        out["m"] = to_json(c.m);
        out["rhs"] = to_json(c.rhs);
        out["solution"] = to_json(c.solution);
    }
    void operator()(const ClaimLatticeContains& c) {
        out["lattice"] = to_json(c.lattice);
        out["vectors"] = to_json(c.vectors);
        out["expect"] = c.expect;
    }
    void operator()(const ClaimInvariantFactors& c) {
        out["m"] = to_json(c.m);
        json f = json::array();
        for (const Integer& x : c.factors) f.push_back(x.get_str());
        out["factors"] = f;
    }
    void operator()(const ClaimPairKernel& c) { write_pair(c.f, c.src_subspace, c.tgt_subspace, c.expect); }
    void operator()(const ClaimPairCokernel& c) { write_pair(c.f, c.src_subspace, c.tgt_subspace, c.expect); }
    void operator()(const ClaimMockEpi& c) {
        out["f"] = to_json(c.f);
        out["tgt_subspace"] = to_json(c.tgt_subspace);
        out["expect"] = c.expect;
    }
    void operator()(const ClaimMockKernel& c) { write_pair(c.f, c.src_subspace, c.tgt_subspace, c.expect); }
    void operator()(const ClaimMockCokernel& c) { write_pair(c.f, c.src_subspace, c.tgt_subspace, c.expect); }
    void operator()(const ClaimFgabMono& c) {
        out["f"] = to_json(c.f);
        out["src_relations"] = to_json(c.src_relations);
        out["tgt_relations"] = to_json(c.tgt_relations);
        out["expect"] = c.expect;
    }
    void operator()(const ClaimFgabEpi& c) {
        out["f"] = to_json(c.f);
        out["tgt_relations"] = to_json(c.tgt_relations);
        out["expect"] = c.expect;
    }
    void write_pair(const RatMatrix& f, const RatMatrix& src, const RatMatrix& tgt, bool expect) {
        out["f"] = to_json(f);
        out["src_subspace"] = to_json(src);
        out["tgt_subspace"] = to_json(tgt);
        out["expect"] = expect;
    }
};

}  // namespace

json to_json(const Claim& claim) {
    ClaimWriter writer;
    writer.out["claim"] = claim_kind_name(claim);
    writer.out["label"] = claim.label;
    if (claim.component >= 0) writer.out["component"] = claim.component;
    std::visit(writer, claim.body);
    return writer.out;
}

Claim claim_from_json(const json& j) {
    Claim claim;
    claim.label = get_or_throw<std::string>(j, "label");
    claim.component = j.contains("component") ? j.at("component").get<int>() : -1;
    const std::string kind = get_or_throw<std::string>(j, "claim");

    auto rm = [&](const char* key) { return rat_matrix_from_json(j.at(key)); };
    auto im = [&](const char* key) { return int_matrix_from_json(j.at(key)); };
    auto expect = [&]() { return get_or_throw<bool>(j, "expect"); };

    if (kind == "product_equals")
        claim.body = ClaimProductEquals{rm("a"), rm("b"), rm("c")};
    else if (kind == "matrices_equal")
        claim.body = ClaimMatricesEqual{rm("a"), rm("b"), expect()};
    else if (kind == "matrix_zero")
        claim.body = ClaimMatrixZero{rm("a"), expect()};
    else if (kind == "full_row_rank")
        claim.body = ClaimFullRowRank{rm("m"), expect()};
    else if (kind == "full_column_rank")
        claim.body = ClaimFullColumnRank{rm("m"), expect()};
    else if (kind == "span_contains")
        claim.body = ClaimSpanContains{rm("space"), rm("vectors"), expect()};
    else if (kind == "rational_unsolvable")
        claim.body = ClaimRationalUnsolvable{rm("m"), rm("rhs"), rm("witness")};
    else if (kind == "integer_unsolvable")
        claim.body = ClaimIntegerUnsolvable{im("m"), im("rhs")};
    else if (kind == "integer_solves")
        claim.body = ClaimIntegerSolves{im("m"), im("rhs"), im("solution")};
    else if (kind == "lattice_contains")
        claim.body = ClaimLatticeContains{im("lattice"), im("vectors"), expect()};
    else if (kind == "invariant_factors") {
        std::vector<Integer> factors;
        for (const auto& x : j.at("factors")) factors.emplace_back(x.get<std::string>());
        claim.body = ClaimInvariantFactors{im("m"), std::move(factors)};
    } else if (kind == "pair_kernel")
        claim.body = ClaimPairKernel{rm("f"), rm("src_subspace"), rm("tgt_subspace"), expect()};
    else if (kind == "pair_cokernel")
        claim.body = ClaimPairCokernel{rm("f"), rm("src_subspace"), rm("tgt_subspace"), expect()};
    else if (kind == "mock_epi")
        claim.body = ClaimMockEpi{rm("f"), rm("tgt_subspace"), expect()};
    else if (kind == "mock_kernel")
        claim.body = ClaimMockKernel{rm("f"), rm("src_subspace"), rm("tgt_subspace"), expect()};
    else if (kind == "mock_cokernel")
        claim.body = ClaimMockCokernel{rm("f"), rm("src_subspace"), rm("tgt_subspace"), expect()};
    else if (kind == "fgab_mono")
        claim.body = ClaimFgabMono{im("f"), im("src_relations"), im("tgt_relations"), expect()};
    else if (kind == "fgab_epi")
        claim.body = ClaimFgabEpi{im("f"), im("tgt_relations"), expect()};
    else
        throw JsonFormatError("unknown claim kind '" + kind + "'");
    return claim;
}

json to_json(const SquareWitness& square) {
    return json{{"kind", square.kind == SquareKind::Pullback ? "pullback" : "pushout"},
                {"a", to_json(square.a)},
                {"b", to_json(square.b)},
                {"c", to_json(square.c)},
                {"d", to_json(square.d)}};
}

SquareWitness square_from_json(const json& j) {
    SquareWitness square;
    const std::string kind = get_or_throw<std::string>(j, "kind");
    if (kind == "pullback")
        square.kind = SquareKind::Pullback;
    else if (kind == "pushout")
        square.kind = SquareKind::Pushout;
    else
        throw JsonFormatError("unknown square kind '" + kind + "'");
    square.a = morphism_from_json(j.at("a"));
    square.b = morphism_from_json(j.at("b"));
    square.c = morphism_from_json(j.at("c"));
    square.d = morphism_from_json(j.at("d"));
    return square;
}

json to_json(const PropertyCertificate& cert) {
    json out{{"schema", "preab-cert/1"},
             {"certificate", "property"},
             {"property", cert.property},
             {"instance", cert.instance},
             {"failed_check", cert.failed_check}};
    if (cert.square) out["square"] = to_json(*cert.square);
    if (cert.witness) out["witness"] = to_json(*cert.witness);
    json claims = json::array();
    for (const Claim& c : cert.claims) claims.push_back(to_json(c));
    out["claims"] = claims;
    return out;
}

PropertyCertificate property_certificate_from_json(const json& j) {
    PropertyCertificate cert;
    cert.property = get_or_throw<std::string>(j, "property");
    cert.instance = get_or_throw<std::string>(j, "instance");
    cert.failed_check = get_or_throw<std::string>(j, "failed_check");
    if (j.contains("square")) cert.square = square_from_json(j.at("square"));
    if (j.contains("witness")) cert.witness = morphism_from_json(j.at("witness"));
    for (const auto& c : j.at("claims")) cert.claims.push_back(claim_from_json(c));
    return cert;
}

json to_json(const AiCertificate& cert) {
    json out{{"schema", "preab-cert/1"},
             {"certificate", "admissible-intersection"},
             {"instance", cert.instance},
             {"structure", cert.structure},
             {"mono_c", to_json(cert.mono_c)},
             {"mono_d", to_json(cert.mono_d)},
             {"square", to_json(cert.square)},
             {"failing_leg", cert.failing_leg}};
    if (cert.refuted_kernel) out["refuted_kernel"] = to_json(*cert.refuted_kernel);
    json claims = json::array();
    for (const Claim& c : cert.claims) claims.push_back(to_json(c));
    out["claims"] = claims;
    return out;
}

AiCertificate ai_certificate_from_json(const json& j) {
    AiCertificate cert;
    cert.instance = get_or_throw<std::string>(j, "instance");
    cert.structure = get_or_throw<std::string>(j, "structure");
    cert.mono_c = morphism_from_json(j.at("mono_c"));
    cert.mono_d = morphism_from_json(j.at("mono_d"));
    cert.square = square_from_json(j.at("square"));
    cert.failing_leg = get_or_throw<std::string>(j, "failing_leg");
    if (j.contains("refuted_kernel")) cert.refuted_kernel = morphism_from_json(j.at("refuted_kernel"));
    for (const auto& c : j.at("claims")) cert.claims.push_back(claim_from_json(c));
    return cert;
}

json to_json(const ClosureCertificate& cert) {
    json out{{"schema", "preab-cert/1"},
             {"certificate", "closure-witness"},
             {"family", cert.family},
             {"epsilon", rat_to_string(cert.epsilon)},
             {"witness_index", cert.witness_index},
             {"seq_distance", rat_to_string(cert.seq_distance)},
             {"scalar_distance", rat_to_string(cert.scalar_distance)},
             {"distance", rat_to_string(cert.distance)},
             {"sum_value", rat_to_string(cert.sum_value)},
             {"target", json{{"sequence", "0"}, {"scalar", "1"}}}};
    if (cert.family == "nuclear") {
        out["m_max"] = cert.m_max;
        out["product_seminorms"] = rational_array(cert.seminorms);
        out["s_seminorm_bounds"] = rational_array(cert.domination);
    }
    return out;
}

ClosureCertificate closure_certificate_from_json(const json& j) {
    ClosureCertificate cert;
    cert.family = get_or_throw<std::string>(j, "family");
    cert.epsilon = rat_from_string(get_or_throw<std::string>(j, "epsilon"));
    cert.witness_index = get_or_throw<long>(j, "witness_index");
    cert.seq_distance = rat_from_string(get_or_throw<std::string>(j, "seq_distance"));
    cert.scalar_distance = rat_from_string(get_or_throw<std::string>(j, "scalar_distance"));
    cert.distance = rat_from_string(get_or_throw<std::string>(j, "distance"));
    cert.sum_value = rat_from_string(get_or_throw<std::string>(j, "sum_value"));
    if (j.contains("m_max")) cert.m_max = j.at("m_max").get<long>();
    if (j.contains("product_seminorms")) cert.seminorms = records_from_json(j.at("product_seminorms"));
    if (j.contains("s_seminorm_bounds")) cert.domination = records_from_json(j.at("s_seminorm_bounds"));
    return cert;
}

json to_json(const ProbeCorpus& corpus) {
    json entries = json::array();
    for (const Morphism& f : corpus.probes) {
        json entry{{"source", to_json(f.source.payload)}, {"target", to_json(f.target.payload)}};
        const json payload = to_json(f.payload);
        for (auto it = payload.begin(); it != payload.end(); ++it) entry[it.key()] = it.value();
        entries.push_back(entry);
    }
    return json{{"schema", "preab-corpus/1"},
                {"instance", corpus.instance},
                {"seed", corpus.seed},
                {"curated", corpus.curated_count},
                {"entries", entries}};
}

ProbeCorpus corpus_from_json(const json& j) {
    if (get_or_throw<std::string>(j, "schema") != "preab-corpus/1")
        throw JsonFormatError("not a corpus file");
    ProbeCorpus corpus;
    corpus.instance = get_or_throw<std::string>(j, "instance");
    const CategoryInstance& inst = instance_registry_get(corpus.instance);
    corpus.seed = j.contains("seed") ? j.at("seed").get<std::uint64_t>() : 0;
    for (const auto& entry : j.at("entries")) {
        Morphism f{make_object(corpus.instance, object_payload_from_json(entry.at("source"))),
                   make_object(corpus.instance, object_payload_from_json(entry.at("target"))),
                   arrow_payload_from_json(entry)};
        if (!inst.valid_morphism(f)) throw JsonFormatError("corpus entry fails validation");
        corpus.probes.push_back(std::move(f));
    }
    corpus.curated_count =
        j.contains("curated") ? j.at("curated").get<std::size_t>() : corpus.probes.size();
    if (corpus.curated_count > corpus.probes.size())
        throw JsonFormatError("curated count exceeds entry count");
    return corpus;
}

}  // namespace preab
