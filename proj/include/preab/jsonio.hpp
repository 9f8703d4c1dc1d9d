#pragma once

#include <json.hpp>

#include "preab/checker.hpp"
#include "preab/exact_structure.hpp"
#include "preab/seqspace.hpp"

namespace preab {

// All reports and certificates serialize through ordered JSON with rationals
// as canonical strings ("p" or "p/q"), so identical inputs produce
// byte-identical files.
using json = nlohmann::ordered_json;

class JsonFormatError : public std::runtime_error {
  public:
    explicit JsonFormatError(const std::string& what) : std::runtime_error(what) {}
};

json to_json(const RatMatrix& m);
RatMatrix rat_matrix_from_json(const json& j);

json to_json(const IntMatrix& m);
IntMatrix int_matrix_from_json(const json& j);

json to_json(const ObjectPayload& payload);
ObjectPayload object_payload_from_json(const json& j);

json to_json(const ArrowPayload& payload);
ArrowPayload arrow_payload_from_json(const json& j);

json to_json(const Morphism& f);
Morphism morphism_from_json(const json& j);  // validates against the instance

json to_json(const Claim& claim);
Claim claim_from_json(const json& j);

json to_json(const SquareWitness& square);
SquareWitness square_from_json(const json& j);

json to_json(const PropertyCertificate& cert);
PropertyCertificate property_certificate_from_json(const json& j);

json to_json(const AiCertificate& cert);
AiCertificate ai_certificate_from_json(const json& j);

json to_json(const ClosureCertificate& cert);
ClosureCertificate closure_certificate_from_json(const json& j);

json to_json(const ProbeCorpus& corpus);
ProbeCorpus corpus_from_json(const json& j);

}  // namespace preab
