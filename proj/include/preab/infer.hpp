#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace preab {

// Property atoms for the forward-chaining closure. The left/right
// semi-abelian atoms exist so checker verdicts can be recorded, but no rule
// produces them: the closure of {semi-abelian, ...} must not sprout split
// variants (fixed-point shapes are pinned by tests).
enum class Atom {
    LeftSemiAbelian,
    RightSemiAbelian,
    SemiAbelian,
    LeftQuasiAbelian,
    RightQuasiAbelian,
    QuasiAbelian,
    LeftIntegral,
    RightIntegral,
    Integral,
    AdmissibleIntersections,
    EnoughProjectives,
    EnoughInjectives,
    EnoughQuasiProjectives,
    EnoughQuasiInjectives,
};

const char* atom_name(Atom a);
std::optional<Atom> atom_from_name(const std::string& name);
const std::vector<Atom>& all_atoms();

enum class FactSource { CertificateBacked, CorpusPass, Declared, Inferred };

struct SignedAtom {
    Atom atom;
    bool positive;
    bool operator==(const SignedAtom&) const = default;
    bool operator<(const SignedAtom& o) const {
        return atom != o.atom ? atom < o.atom : positive < o.positive;
    }
};

struct Fact {
    SignedAtom value;
    FactSource source = FactSource::Declared;
    std::string rule;                  // provenance for inferred facts
    std::vector<SignedAtom> premises;  // premises for inferred facts
};

class FactBase {
  public:
    // Adding an existing signed atom keeps the first-recorded provenance.
    void add(const Fact& fact);
    bool contains(const SignedAtom& value) const;
    const std::vector<Fact>& facts() const { return facts_; }
    std::size_t size() const { return facts_.size(); }

  private:
    std::vector<Fact> facts_;
};

struct InferOutcome {
    FactBase closure;
    // Set when an atom is derivable with both signs; contradictions between
    // certificate-backed facts indicate an engine bug.
    std::optional<std::string> contradiction;
    bool certificate_level_contradiction = false;
};

// Forward-chaining closure under the fixed rule set (definitional
// combinations, the containment of quasi-abelian/integral in semi-abelian,
// the left/right equivalences under semi-abelian, the enough-(quasi-)
// projectives rules, the admissible-intersection characterisation, and all
// contrapositives). Monotone and idempotent.
InferOutcome infer(const FactBase& input);

}  // namespace preab
