#pragma once

#include "preab/infer.hpp"
#include "preab/jsonio.hpp"

namespace preab {

inline constexpr const char* kToolVersion = "0.1.0";

// One classification / AI-check run, ready for deterministic serialization.
// Verdicts never claim more than "pass-on-corpus"; certificates are absolute
// and embedded in full.
struct RunReport {
    std::string command;  // classify | ai-check
    std::string instance;
    std::uint64_t corpus_seed = 0;
    std::size_t corpus_curated = 0;
    std::size_t corpus_random = 0;
    std::string corpus_fingerprint;
    std::size_t pair_budget = 0;

    struct Verdict {
        std::string property;
        bool pass = true;
        std::size_t probes_examined = 0;
        std::size_t pairs_examined = 0;
        std::optional<std::size_t> certificate_index;
    };
    std::vector<Verdict> verdicts;
    std::vector<json> certificates;
    FactBase facts;
    std::optional<std::string> contradiction;
    json projectivity = json::array();
    json extra = json::object();
};

RunReport classify_run(const ProbeCorpus& corpus, const CheckOptions& options = {});
RunReport ai_check_run(const ProbeCorpus& corpus, const std::string& structure_kind,
                       const CheckOptions& options = {});

json report_to_json(const RunReport& report);

const char* fact_source_name(FactSource source);

}  // namespace preab
