#include <CLI11.hpp>

#include <fstream>
#include <iostream>

#include "preab/report.hpp"
#include "preab/verify.hpp"

namespace {

using preab::json;

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitUsage = 2;
constexpr int kExitBadCorpus = 3;

void write_or_print(const json& doc, const std::string& path) {
    if (path.empty()) {
        std::cout << doc.dump(2) << "\n";
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write '" + path + "'");
    out << doc.dump(2) << "\n";
}

json load_json(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot read '" + path + "'");
    return json::parse(in);
}

// Loads --corpus when given, otherwise builds the instance's default corpus.
preab::ProbeCorpus resolve_corpus(const std::string& instance, const std::string& corpus_path,
                                  std::uint64_t seed, std::size_t size) {
    if (corpus_path.empty()) return preab::default_corpus(instance, seed, size);
    preab::ProbeCorpus corpus = preab::corpus_from_json(load_json(corpus_path));
    if (corpus.instance != instance)
        throw preab::JsonFormatError("corpus file targets instance '" + corpus.instance + "'");
    return corpus;
}

void print_report_summary(const preab::RunReport& report) {
    std::cout << report.command << " " << report.instance << " (corpus "
              << report.corpus_fingerprint << ")\n";
    for (const auto& v : report.verdicts)
        std::cout << "  " << v.property << ": " << (v.pass ? "pass-on-corpus" : "CERTIFICATE")
                  << " [probes " << v.probes_examined << ", pairs " << v.pairs_examined << "]\n";
    for (const auto& f : report.facts.facts())
        std::cout << "  fact " << (f.value.positive ? "+" : "-")
                  << preab::atom_name(f.value.atom) << " (" << preab::fact_source_name(f.source)
                  << (f.source == preab::FactSource::Inferred ? "; " + f.rule : "") << ")\n";
    if (report.contradiction) std::cout << "  CONTRADICTION: " << *report.contradiction << "\n";
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"preab: exact computations in concrete pre-abelian categories"};
    app.require_subcommand(1);

    // classify
    std::string instance, corpus_path, json_path;
    std::uint64_t seed = 1;
    std::size_t size = 100, pair_budget = 50000;
    auto* classify = app.add_subcommand("classify", "run the property checkers and inference");
    classify->add_option("instance", instance, "vectq | fgab | pairvect | mockpair | product:<a>:<b>")
        ->required();
    classify->add_option("--corpus", corpus_path, "probe corpus JSON file");
    classify->add_option("--seed", seed, "seed for the random corpus extension");
    classify->add_option("--size", size, "random probes to add to the curated corpus");
    classify->add_option("--pair-budget", pair_budget, "max pairs per pair-based checker");
    classify->add_option("--json", json_path, "write the JSON report here");

    // ai-check
    std::string structure = "all";
    auto* ai = app.add_subcommand("ai-check", "exact-structure axioms + admissible intersections");
    ai->add_option("instance", instance, "instance id")->required();
    ai->add_option("structure", structure, "all | split")
        ->check(CLI::IsMember({"all", "split"}));
    ai->add_option("--corpus", corpus_path, "probe corpus JSON file");
    ai->add_option("--seed", seed, "seed for the random corpus extension");
    ai->add_option("--size", size, "random probes to add to the curated corpus");
    ai->add_option("--pair-budget", pair_budget, "max pairs examined");
    ai->add_option("--json", json_path, "write the JSON report here");

    // seq-verify
    std::string eps_text = "1/100";
    long m_max = 8;
    auto* seq = app.add_subcommand("seq-verify", "sequence-space closure certificates");
    seq->add_option("eps", eps_text, "positive rational, e.g. 1/1000")->required();
    seq->add_option("m_max", m_max, "largest seminorm index for the nuclear witness");
    seq->add_option("--json", json_path, "write certificates and the invariant table here");

    // verify
    std::string verify_path;
    auto* verify = app.add_subcommand("verify", "re-verify an emitted JSON document");
    verify->add_option("file", verify_path, "certificate, report, or corpus file")->required();

    // corpus gen
    std::string out_path;
    auto* corpus_cmd = app.add_subcommand("corpus", "corpus utilities");
    auto* gen = corpus_cmd->add_subcommand("gen", "generate a default probe corpus");
    gen->add_option("--instance", instance, "instance id")->required();
    gen->add_option("--seed", seed, "random seed");
    gen->add_option("--size", size, "number of random probes");
    gen->add_option("--out", out_path, "output path (stdout when omitted)");

    CLI11_PARSE(app, argc, argv);

    try {
        if (classify->parsed() || ai->parsed() || gen->parsed()) {
            if (!preab::instance_registry_known(instance)) {
                std::cerr << "unknown instance '" << instance << "'\n";
                return kExitUsage;
            }
        }

        if (classify->parsed()) {
            const preab::ProbeCorpus corpus = resolve_corpus(instance, corpus_path, seed, size);
            preab::CheckOptions options;
            options.pair_budget = pair_budget;
            const preab::RunReport report = preab::classify_run(corpus, options);
            print_report_summary(report);
            if (!json_path.empty()) write_or_print(preab::report_to_json(report), json_path);
            return kExitOk;
        }

        if (ai->parsed()) {
            const preab::ProbeCorpus corpus = resolve_corpus(instance, corpus_path, seed, size);
            preab::CheckOptions options;
            options.pair_budget = pair_budget;
            const preab::RunReport report =
                preab::ai_check_run(corpus, structure == "split" ? "split" : "all", options);
            print_report_summary(report);
            if (!json_path.empty()) write_or_print(preab::report_to_json(report), json_path);
            return kExitOk;
        }

        if (seq->parsed()) {
            preab::Rational eps;
            try {
                eps = preab::rat_from_string(eps_text);
            } catch (const std::exception&) {
                std::cerr << "malformed eps '" << eps_text << "'\n";
                return kExitUsage;
            }
            if (eps <= 0 || m_max < 1) {
                std::cerr << "eps and m_max must be positive\n";
                return kExitUsage;
            }
            const preab::ClosureCertificate banach = preab::banach_closure_witness(eps);
            const preab::ClosureCertificate nuclear = preab::nuclear_closure_witness(eps, m_max);

            json table = json::array();
            for (long n : {1L, 2L, 3L, 4L, 5L, 10L, 100L, 1000L, 10000L}) {
                const preab::FiniteSeq xn = preab::make_xn(n);
                table.push_back(json{{"n", n},
                                     {"sup_norm", preab::rat_to_string(preab::sup_norm(xn))},
                                     {"one_norm", preab::rat_to_string(preab::one_norm(xn))},
                                     {"sum", preab::rat_to_string(preab::sum_functional(xn))}});
            }
            json doc{{"schema", "preab-seq/1"},
                     {"tool_version", preab::kToolVersion},
                     {"epsilon", preab::rat_to_string(eps)},
                     {"m_max", m_max},
                     {"certificates", json::array({preab::to_json(banach), preab::to_json(nuclear)})},
                     {"table", table}};
            std::cout << "banach witness: n = " << banach.witness_index << ", distance "
                      << preab::rat_to_string(banach.distance) << "\n";
            std::cout << "nuclear witness: n = " << nuclear.witness_index << ", distance "
                      << preab::rat_to_string(nuclear.distance) << "\n";
            write_or_print(doc, json_path);
            return kExitOk;
        }

        if (verify->parsed()) {
            const json doc = load_json(verify_path);
            const preab::VerifyOutcome outcome = preab::verify_document(doc);
            if (outcome.ok) {
                std::cout << "verified: " << verify_path << "\n";
                return kExitOk;
            }
            std::cout << "verification FAILED: " << verify_path << "\n";
            for (const std::string& f : outcome.failures) std::cout << "  " << f << "\n";
            return kExitVerifyFailed;
        }

        if (gen->parsed()) {
            const preab::ProbeCorpus corpus = preab::default_corpus(instance, seed, size);
            write_or_print(preab::to_json(corpus), out_path);
            return kExitOk;
        }
    } catch (const preab::UnknownInstanceError& e) {
        std::cerr << e.what() << "\n";
        return kExitUsage;
    } catch (const preab::JsonFormatError& e) {
        std::cerr << "corpus/document error: " << e.what() << "\n";
        return kExitBadCorpus;
    } catch (const nlohmann::json::exception& e) {
        std::cerr << "malformed JSON: " << e.what() << "\n";
        return kExitBadCorpus;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitOk;
}
