#include "preab/verify.hpp"

#include "preab/jsonio.hpp"
#include "preab/report.hpp"

namespace preab {

namespace {

// Raw evaluation of arrow payloads: plain matrix algebra, componentwise for
// products. No instance or engine code is consulted.
ArrowPayload raw_compose(const ArrowPayload& f, const ArrowPayload& g) {
    if (std::holds_alternative<RatMatrix>(f.v) && std::holds_alternative<RatMatrix>(g.v))
        return ArrowPayload{std::get<RatMatrix>(f.v) * std::get<RatMatrix>(g.v)};
    const auto& pf = std::get<ProductArrowData>(f.v);
    const auto& pg = std::get<ProductArrowData>(g.v);
    if (pf.components.size() != pg.components.size())
        throw CategoryError("raw_compose: component mismatch");
    ProductArrowData out;
    for (std::size_t i = 0; i < pf.components.size(); ++i)
        out.components.push_back(raw_compose(pf.components[i], pg.components[i]));
    return ArrowPayload{std::move(out)};
}

// ---------------------------------------------------------------------------
// Independent closure-certificate recomputation. The defining formulas are
// evaluated with direct loops here, sharing no code with the construction.

Rational raw_xn_value(long n) { return rat(-1, n); }

Rational raw_sup_norm_xn(long n) { return rat(1, n); }

Rational raw_one_norm_xn(long n) {
    Rational total = 0;
    const Rational v = rat(1, n);
    for (long j = 1; j <= n; ++j) total += v;
    return total;
}

Rational raw_sum_xn(long n) {
    Rational total = 0;
    const Rational v = raw_xn_value(n);
    for (long j = 1; j <= n; ++j) total += v;
    return total;
}

Rational raw_product_seminorm_xn(long n, long m) {
    // Entries 1..min(n, m) all equal 1/n in absolute value.
    Rational best = 0;
    for (long j = 1; j <= m && j <= n; ++j) {
        Rational mag = rat(1, n);
        if (mag > best) best = mag;
    }
    return best;
}

Rational raw_s_seminorm_xn(long n, long m) {
    Rational total = 0;
    for (long j = 1; j <= n; ++j) {
        Integer power;
        mpz_ui_pow_ui(power.get_mpz_t(), static_cast<unsigned long>(j),
                      static_cast<unsigned long>(m));
        total += rat(power) * rat(1, n);
    }
    return total;
}

void verify_closure(const ClosureCertificate& cert, VerifyOutcome& out) {
    const long n = cert.witness_index;
    if (n < 1) {
        out.fail("witness index must be positive");
        return;
    }
    if (cert.epsilon <= 0) out.fail("epsilon must be positive");

    const Rational scalar = rat_abs(rat(1) - (-raw_sum_xn(n)));
    if (scalar != cert.scalar_distance) out.fail("scalar distance mismatch");
    if (cert.sum_value != raw_sum_xn(n)) out.fail("summation value mismatch");

    Rational seq;
    if (cert.family == "banach") {
        seq = raw_sup_norm_xn(n);
    } else if (cert.family == "nuclear") {
        if (cert.m_max < 1 || cert.seminorms.size() != static_cast<std::size_t>(cert.m_max)) {
            out.fail("nuclear certificate must record seminorms for m = 1..m_max");
            return;
        }
        seq = 0;
        for (const auto& record : cert.seminorms) {
            const Rational value = raw_product_seminorm_xn(n, record.m);
            if (value != record.value) out.fail("product seminorm mismatch");
            if (value > seq) seq = value;
        }
        for (const auto& record : cert.domination) {
            if (raw_s_seminorm_xn(n, record.m) != record.value)
                out.fail("s-seminorm bound mismatch");
            if (!(rat_abs(cert.sum_value) <= record.value))
                out.fail("recorded bound does not dominate the summation value");
        }
    } else {
        out.fail("unknown certificate family '" + cert.family + "'");
        return;
    }
    if (seq != cert.seq_distance) out.fail("sequence distance mismatch");
    const Rational distance = seq > scalar ? seq : scalar;
    if (distance != cert.distance) out.fail("distance mismatch");
    if (!(distance <= cert.epsilon)) out.fail("distance exceeds epsilon");
    // Minimality: distance at n-1 must exceed epsilon.
    if (n > 1 && rat(1, n - 1) <= cert.epsilon) out.fail("witness index is not minimal");

    // One-norm sanity on the recomputed witness (always exactly 1).
    if (raw_one_norm_xn(n) != 1) out.fail("one-norm of the witness is not 1");
}

void verify_claims(const std::vector<Claim>& claims, VerifyOutcome& out) {
    if (claims.empty()) out.fail("certificate carries no claims");
    for (std::size_t i = 0; i < claims.size(); ++i)
        if (!claim_holds(claims[i]))
            out.fail("claim " + std::to_string(i) + " (" + claim_kind_name(claims[i]) +
                     ") does not re-verify: " + claims[i].label);
}

void verify_property_certificate(const PropertyCertificate& cert, VerifyOutcome& out) {
    if (cert.square && !verify_square_commutes(*cert.square))
        out.fail("witness square does not commute");
    if (!cert.square && !cert.witness) out.fail("certificate has neither square nor witness");
    verify_claims(cert.claims, out);
}

void verify_ai_certificate(const AiCertificate& cert, VerifyOutcome& out) {
    if (!verify_square_commutes(cert.square)) out.fail("witness square does not commute");
    if (cert.square.kind != SquareKind::Pullback) out.fail("AI square must be a pullback");
    if (!payload_identical(cert.mono_c.target.payload, cert.mono_d.target.payload))
        out.fail("admissible monos do not share a target");
    verify_claims(cert.claims, out);
}

void verify_report(const json& doc, VerifyOutcome& out) {
    for (const auto& cert : doc.value("certificates", json::array())) {
        const std::string kind = cert.value("certificate", "");
        if (kind == "property")
            verify_property_certificate(property_certificate_from_json(cert), out);
        else if (kind == "admissible-intersection")
            verify_ai_certificate(ai_certificate_from_json(cert), out);
        else
            out.fail("unknown embedded certificate kind '" + kind + "'");
    }

    // Inferred facts must be reproducible from the non-inferred ones.
    if (doc.contains("facts")) {
        FactBase observed;
        for (const auto& row : doc.at("facts")) {
            if (row.at("source").get<std::string>() == "inferred") continue;
            const auto atom = atom_from_name(row.at("atom").get<std::string>());
            if (!atom) {
                out.fail("unknown atom in facts");
                continue;
            }
            Fact fact;
            fact.value = {*atom, row.at("sign").get<std::string>() == "+"};
            observed.add(fact);
        }
        const InferOutcome closure = infer(observed);
        std::size_t fact_count = 0;
        for (const auto& row : doc.at("facts")) {
            ++fact_count;
            const auto atom = atom_from_name(row.at("atom").get<std::string>());
            if (!atom) continue;
            if (!closure.closure.contains({*atom, row.at("sign").get<std::string>() == "+"}))
                out.fail("reported fact is not reproducible by inference");
        }
        if (fact_count != closure.closure.size())
            out.fail("reported facts differ from the recomputed closure");
    }
}

}  // namespace

namespace {

// Payload-level commutation check, dispatching on the instance id: fgab
// composites agree modulo the target relations, products recurse
// componentwise, everything else compares bit-exactly.
bool payloads_agree(const std::string& instance, const ArrowPayload& lhs,
                    const ArrowPayload& rhs, const ObjectPayload& target) {
    if (instance.rfind("product:", 0) == 0) {
        const auto& pl = std::get<ProductArrowData>(lhs.v);
        const auto& pr = std::get<ProductArrowData>(rhs.v);
        const auto& tc = std::get<ProductObjData>(target.v).components;
        const std::string rest = instance.substr(8);
        const auto sep = rest.find(':');
        const std::string ids[2] = {rest.substr(0, sep), rest.substr(sep + 1)};
        for (std::size_t i = 0; i < 2; ++i)
            if (!payloads_agree(ids[i], pl.components[i], pr.components[i], tc[i])) return false;
        return true;
    }
    const RatMatrix& a = std::get<RatMatrix>(lhs.v);
    const RatMatrix& b = std::get<RatMatrix>(rhs.v);
    if (instance == "fgab") {
        const auto diff = to_integer(a - b);
        return diff && columns_in_lattice(std::get<FgabObjData>(target.v).relations, *diff);
    }
    return a == b;
}

}  // namespace

bool verify_square_commutes(const SquareWitness& square) {
    try {
        const ArrowPayload via_top = raw_compose(square.c.payload, square.a.payload);
        const ArrowPayload via_bottom = raw_compose(square.d.payload, square.b.payload);
        return payloads_agree(square.c.target.instance, via_top, via_bottom,
                              square.c.target.payload);
    } catch (const std::exception&) {
        return false;
    }
}

VerifyOutcome verify_document(const nlohmann::ordered_json& doc) {
    VerifyOutcome out;
    const std::string schema = doc.value("schema", "");
    try {
        if (schema == "preab-cert/1") {
            const std::string kind = doc.value("certificate", "");
            if (kind == "property")
                verify_property_certificate(property_certificate_from_json(doc), out);
            else if (kind == "admissible-intersection")
                verify_ai_certificate(ai_certificate_from_json(doc), out);
            else if (kind == "closure-witness")
                verify_closure(closure_certificate_from_json(doc), out);
            else
                out.fail("unknown certificate kind '" + kind + "'");
        } else if (schema == "preab/1") {
            verify_report(doc, out);
        } else if (schema == "preab-corpus/1") {
            corpus_from_json(doc);  // full validation happens on load
        } else if (schema == "preab-seq/1") {
            for (const auto& cert : doc.value("certificates", json::array()))
                verify_closure(closure_certificate_from_json(cert), out);
            for (const auto& row : doc.value("table", json::array())) {
                const long n = row.at("n").get<long>();
                if (rat_from_string(row.at("sup_norm").get<std::string>()) != rat(1, n))
                    out.fail("table sup norm mismatch");
                if (rat_from_string(row.at("one_norm").get<std::string>()) !=
                    raw_one_norm_xn(n))
                    out.fail("table one norm mismatch");
                if (rat_from_string(row.at("sum").get<std::string>()) != raw_sum_xn(n))
                    out.fail("table sum mismatch");
            }
        } else {
            out.fail("unknown schema '" + schema + "'");
        }
    } catch (const std::exception& e) {
        out.fail(std::string("verification error: ") + e.what());
    }
    return out;
}

}  // namespace preab
