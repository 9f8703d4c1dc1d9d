#pragma once

#include "preab/category.hpp"

#include <json.hpp>

namespace preab {

// Independent re-verification. Everything here re-checks certificates and
// reports from their serialized data using exact linear algebra only; it
// never calls the construction engine, so a pass genuinely replays the
// recorded computation.

// Recomputes c∘a and d∘b from the stored edge payloads (componentwise for
// products) and compares bit-exactly.
bool verify_square_commutes(const SquareWitness& square);

struct VerifyOutcome {
    bool ok = true;
    std::vector<std::string> failures;

    void fail(const std::string& message) {
        ok = false;
        failures.push_back(message);
    }
};

// Dispatches on the document schema: certificates (property, admissible
// intersection, closure), run reports, and corpus files.
VerifyOutcome verify_document(const nlohmann::ordered_json& doc);

}  // namespace preab
