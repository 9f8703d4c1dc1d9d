#include "preab/report.hpp"

#include "preab/exact_structure.hpp"

namespace preab {

namespace {

Atom property_atom(PropertyId id) {
    switch (id) {
        case PropertyId::LeftSemiAbelian: return Atom::LeftSemiAbelian;
        case PropertyId::RightSemiAbelian: return Atom::RightSemiAbelian;
        case PropertyId::LeftQuasiAbelian: return Atom::LeftQuasiAbelian;
        case PropertyId::RightQuasiAbelian: return Atom::RightQuasiAbelian;
        case PropertyId::LeftIntegral: return Atom::LeftIntegral;
        case PropertyId::RightIntegral: return Atom::RightIntegral;
    }
    throw CategoryError("unmapped property");
}

json projectivity_row(const ProjectivityResult& r, const char* kind) {
    const CategoryInstance& inst = instance_registry_get(r.object.instance);
    json row{{"probe", kind},
             {"object", inst.describe_object(r.object.payload)},
             {"object_payload", to_json(r.object.payload)},
             {"verdict", r.pass ? "pass-on-corpus" : "failure"},
             {"lifts_checked", r.tests}};
    if (!r.pass) {
        row["unliftable"] = to_json(*r.unliftable);
        row["against"] = to_json(*r.against);
    }
    return row;
}

}  // namespace

const char* fact_source_name(FactSource source) {
    switch (source) {
        case FactSource::CertificateBacked: return "certificate";
        case FactSource::CorpusPass: return "corpus-pass";
        case FactSource::Declared: return "declared";
        case FactSource::Inferred: return "inferred";
    }
    return "?";
}

RunReport classify_run(const ProbeCorpus& corpus, const CheckOptions& options) {
    RunReport report;
    report.command = "classify";
    report.instance = corpus.instance;
    report.corpus_seed = corpus.seed;
    report.corpus_curated = corpus.curated_count;
    report.corpus_random = corpus.random_count();
    report.corpus_fingerprint = corpus.fingerprint();
    report.pair_budget = options.pair_budget;

    FactBase observed;
    for (PropertyId id : all_properties()) {
        const PropertyCheckResult result = check_property(id, corpus, options);
        RunReport::Verdict verdict;
        verdict.property = property_name(id);
        verdict.pass = result.pass;
        verdict.probes_examined = result.probes_examined;
        verdict.pairs_examined = result.pairs_examined;
        if (result.certificate) {
            verdict.certificate_index = report.certificates.size();
            report.certificates.push_back(to_json(*result.certificate));
        }
        report.verdicts.push_back(verdict);

        Fact fact;
        fact.value = {property_atom(id), result.pass};
        fact.source = result.pass ? FactSource::CorpusPass : FactSource::CertificateBacked;
        observed.add(fact);
    }

    const InferOutcome closure = infer(observed);
    report.facts = closure.closure;
    report.contradiction = closure.contradiction;

    // Projectivity probes over the leading distinct corpus objects.
    for (const ObjectRef& obj : corpus_objects(corpus, 6)) {
        report.projectivity.push_back(
            projectivity_row(is_projective_probe(obj, corpus), "projective"));
        report.projectivity.push_back(
            projectivity_row(is_quasi_projective_probe(obj, corpus), "quasi-projective"));
    }
    return report;
}

RunReport ai_check_run(const ProbeCorpus& corpus, const std::string& structure_kind,
                       const CheckOptions& options) {
    RunReport report;
    report.command = "ai-check";
    report.instance = corpus.instance;
    report.corpus_seed = corpus.seed;
    report.corpus_curated = corpus.curated_count;
    report.corpus_random = corpus.random_count();
    report.corpus_fingerprint = corpus.fingerprint();
    report.pair_budget = options.pair_budget;

    ExactStructure structure = structure_kind == "split"
                                   ? ExactStructure::split(corpus.instance)
                                   : ExactStructure::all_pairs(corpus.instance);
    report.extra["structure"] = structure.kind_name();

    const AxiomCheckResult axioms = check_exact_axioms(structure, corpus, options);
    json axioms_json{{"verdict", axioms.pass ? "pass-on-corpus" : "violation"},
                     {"checks", axioms.checks}};
    if (!axioms.pass) {
        json witnesses = json::array();
        for (const Morphism& w : axioms.violation->witnesses) witnesses.push_back(to_json(w));
        axioms_json["axiom"] = axioms.violation->axiom;
        axioms_json["detail"] = axioms.violation->detail;
        axioms_json["witnesses"] = witnesses;
    }
    report.extra["axioms"] = axioms_json;

    RunReport::Verdict verdict;
    verdict.property = "admissible-intersections (" + std::string(structure.kind_name()) + ")";
    if (!axioms.pass) {
        verdict.pass = false;
        report.verdicts.push_back(verdict);
        return report;
    }

    const AiCheckResult ai = check_admissible_intersections(structure, corpus, options);
    verdict.pass = ai.pass;
    verdict.probes_examined = corpus.probes.size();
    verdict.pairs_examined = ai.pairs_examined;
    if (ai.certificate) {
        verdict.certificate_index = report.certificates.size();
        report.certificates.push_back(to_json(*ai.certificate));
    }
    report.verdicts.push_back(verdict);

    FactBase observed;
    if (structure.kind == ExactStructureKind::AllPairs) {
        if (ai.pass) {
            Fact fact;
            fact.value = {Atom::AdmissibleIntersections, true};
            fact.source = FactSource::CorpusPass;
            observed.add(fact);
        } else {
            // Kernels whose pullback legs fail to be kernels refute
            // quasi-abelianness outright.
            Fact fact;
            fact.value = {Atom::QuasiAbelian, false};
            fact.source = FactSource::CertificateBacked;
            fact.rule = "pullback of kernels fails to be a kernel";
            observed.add(fact);
        }
    }
    const InferOutcome closure = infer(observed);
    report.facts = closure.closure;
    report.contradiction = closure.contradiction;
    return report;
}

json report_to_json(const RunReport& report) {
    json verdicts = json::array();
    for (const auto& v : report.verdicts) {
        json row{{"property", v.property},
                 {"verdict", v.pass ? "pass-on-corpus" : "certificate"},
                 {"probes_examined", v.probes_examined},
                 {"pairs_examined", v.pairs_examined}};
        if (v.certificate_index) row["certificate_index"] = *v.certificate_index;
        verdicts.push_back(row);
    }

    json facts = json::array();
    for (const Fact& f : report.facts.facts()) {
        json row{{"atom", atom_name(f.value.atom)},
                 {"sign", f.value.positive ? "+" : "-"},
                 {"source", fact_source_name(f.source)}};
        if (f.source == FactSource::Inferred) {
            row["rule"] = f.rule;
            json premises = json::array();
            for (const SignedAtom& p : f.premises)
                premises.push_back(std::string(p.positive ? "+" : "-") + atom_name(p.atom));
            row["premises"] = premises;
        }
        facts.push_back(row);
    }

    json out{{"schema", "preab/1"},
             {"tool_version", kToolVersion},
             {"command", report.command},
             {"instance", report.instance},
             {"corpus",
              json{{"seed", report.corpus_seed},
                   {"curated", report.corpus_curated},
                   {"random", report.corpus_random},
                   {"fingerprint", report.corpus_fingerprint}}},
             {"options", json{{"pair_budget", report.pair_budget}}},
             {"verdicts", verdicts},
             {"certificates", report.certificates},
             {"facts", facts}};
    if (report.contradiction) out["contradiction"] = *report.contradiction;
    if (!report.projectivity.empty()) out["projectivity"] = report.projectivity;
    if (!report.extra.empty()) out["details"] = report.extra;
    return out;
}

}  // namespace preab
