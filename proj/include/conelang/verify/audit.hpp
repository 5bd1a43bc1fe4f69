// audit.hpp -- brute-force checks of the cone axioms on word-metric balls
#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include <json.hpp>

#include "conelang/automata/transducer.hpp"
#include "conelang/cones/cone.hpp"
#include "conelang/cones/tau_cones.hpp"
#include "conelang/groups/ball.hpp"

namespace conelang::verify {

using cones::ConeLanguage;
using cones::Predicate;
using cones::Verdict;
using groups::Element;
using groups::ElementHash;
using groups::Int;
using Json = nlohmann::ordered_json;

struct AuditConfig {
    std::size_t ball_radius = 4;
    std::size_t max_word_len = 12;
    std::size_t closure_radius = 8;

    /// Throws InvalidParameter when max_word_len < ball_radius or
    /// closure_radius < ball_radius.
    void validate() const;
};

/// Evaluated accepted words: each element with the first accepted word found
/// for it (shortest, then lexicographically least).
using PositiveSet = std::unordered_map<Element, automata::Word, ElementHash>;

PositiveSet collect_positive(const ConeLanguage& cone, std::size_t max_word_len);

using Witness = std::function<std::optional<automata::Word>(const Element&)>;

/// For each element g of ball(radius) absent from pos together with its
/// inverse, tries witness(g) and witness(g^-1): a word the machine accepts
/// and that evaluates to the element is added to pos. Returns the number
/// added.
std::size_t add_witnesses(const ConeLanguage& cone, PositiveSet& pos, std::size_t radius, const Witness& witness);

enum class ViolationKind { IdentityInP, PMeetsPinv, ClosureFail, RelativeOverlap };
std::string to_string(ViolationKind kind);

struct Violation {
    ViolationKind kind;
    /// Accepted words involved, e.g. g, h for a closure failure.
    std::vector<std::string> words;
    /// Formatted elements involved; for closure failures the last is g*h.
    std::vector<std::string> elements;
};

enum class Status { Pass, Fail, Inconclusive };
std::string to_string(Status status);

struct PropertyResult {
    Status status = Status::Pass;
    std::string witness;
};

struct VerificationReport {
    std::string provenance;
    std::size_t ball_size = 0;
    std::size_t positive_set_size = 0;
    std::vector<Violation> violations;
    std::vector<std::string> uncovered;
    std::map<std::string, PropertyResult> property_results;

    /// No violations, nothing uncovered and no failed or inconclusive
    /// property.
    bool clean() const;
    bool has_failures() const;
    Json to_json() const;
};

/// Witness lists per violation kind stop at this many entries.
inline constexpr std::size_t kMaxWitnesses = 10;

VerificationReport audit_cone(const ConeLanguage& cone, const AuditConfig& cfg);
/// Same, with the accepted set already collected at cfg.max_word_len.
VerificationReport audit_cone(const ConeLanguage& cone, const PositiveSet& pos, const AuditConfig& cfg);

struct OracleReport {
    std::size_t checked = 0;
    /// Accepted elements the predicate does not call positive.
    std::size_t mismatch_count = 0;
    std::vector<std::string> hard_mismatches;
    /// Ball elements the predicate calls positive without an accepted word.
    std::size_t missing_count = 0;
    std::vector<std::string> missing;

    bool agrees() const { return mismatch_count == 0; }
    Json to_json() const;
};

/// Hard check over every accepted word of length <= max_word_len, coverage
/// check over ball(ball_radius).
OracleReport compare_with_oracle(const ConeLanguage& cone, const Predicate& predicate, const AuditConfig& cfg);
/// Same, with the accepted set already collected.
OracleReport compare_with_oracle(const ConeLanguage& cone, const PositiveSet& positive, const Predicate& predicate,
                                 std::size_t ball_radius);

/// f_w(j) > f_w(i) - K for every accepted w over {t, t'} of length <=
/// max_len and i < j, with f_w(i) the balance of the first i letters and K
/// the state count of the trimmed determinization.
PropertyResult check_coarse_monotone(const automata::Nfa& m, std::size_t max_len);

/// At every state (alpha, dagger) of the embedded machine reached by a live
/// prefix w of length <= max_len, with alpha accepting in the transducer:
/// tau(g) + 2n = dagger where pi(w) = (g, n).
PropertyResult check_balancing(const cones::EmbeddedCone& embedded,
                               const std::function<Int(const Element&)>& inner_tau, std::size_t max_len);

} // namespace conelang::verify
