#include "conelang/verify/audit.hpp"

#include <algorithm>
#include <optional>

#include "conelang/errors.hpp"

namespace conelang::verify {

using automata::format_word;
using automata::Word;

void AuditConfig::validate() const {
    if (max_word_len < ball_radius)
        throw InvalidParameter("max_word_len (" + std::to_string(max_word_len) + ") is below ball_radius (" +
                               std::to_string(ball_radius) + ")");
    if (closure_radius < ball_radius)
        throw InvalidParameter("closure_radius (" + std::to_string(closure_radius) + ") is below ball_radius (" +
                               std::to_string(ball_radius) + ")");
}

namespace {

bool shorter(const Word& a, const Word& b) {
    return a.size() != b.size() ? a.size() < b.size() : a < b;
}

using Entry = std::pair<const Element*, const Word*>;

std::vector<Entry> sorted_entries(const PositiveSet& pos) {
    std::vector<Entry> out;
    out.reserve(pos.size());
    for (const auto& [g, w] : pos)
        out.emplace_back(&g, &w);
    std::sort(out.begin(), out.end(), [](const Entry& a, const Entry& b) { return shorter(*a.second, *b.second); });
    return out;
}

} // namespace

PositiveSet collect_positive(const ConeLanguage& cone, std::size_t max_word_len) {
    const auto& group = *cone.group;
    PositiveSet pos;
    std::vector<Element> stack{group.identity()};
    automata::walk_prefixes(cone.machine, max_word_len, [&](const Word& prefix, bool accepted) {
        stack.resize(prefix.size() + 1);
        if (!prefix.empty())
            stack[prefix.size()] = group.multiply(stack[prefix.size() - 1], group.generator(prefix.back()));
        if (accepted) {
            auto [it, inserted] = pos.try_emplace(stack[prefix.size()], prefix);
            if (!inserted && shorter(prefix, it->second))
                it->second = prefix;
        }
        return true;
    });
    return pos;
}

std::size_t add_witnesses(const ConeLanguage& cone, PositiveSet& pos, std::size_t radius, const Witness& witness) {
    const auto& group = *cone.group;
    std::size_t added = 0;
    for (const auto& g : groups::ball(group, radius).elements) {
        if (group.is_identity(g) || pos.count(g) || pos.count(group.invert(g)))
            continue;
        for (const auto& target : {g, group.invert(g)}) {
            auto w = witness(target);
            if (w && automata::machine_accepts(cone.machine, *w) && group.evaluate(*w) == target) {
                pos.emplace(target, std::move(*w));
                ++added;
                break;
            }
        }
    }
    return added;
}

std::string to_string(ViolationKind kind) {
    switch (kind) {
    case ViolationKind::IdentityInP:
        return "identity_in_P";
    case ViolationKind::PMeetsPinv:
        return "P_meets_Pinv";
    case ViolationKind::ClosureFail:
        return "closure_fail";
    case ViolationKind::RelativeOverlap:
        return "relative_overlap";
    }
    return "unknown";
}

std::string to_string(Status status) {
    switch (status) {
    case Status::Pass:
        return "pass";
    case Status::Fail:
        return "fail";
    case Status::Inconclusive:
        return "inconclusive";
    }
    return "unknown";
}

bool VerificationReport::clean() const {
    if (!violations.empty() || !uncovered.empty())
        return false;
    return std::all_of(property_results.begin(), property_results.end(),
                       [](const auto& kv) { return kv.second.status == Status::Pass; });
}

bool VerificationReport::has_failures() const {
    if (!violations.empty())
        return true;
    return std::any_of(property_results.begin(), property_results.end(),
                       [](const auto& kv) { return kv.second.status == Status::Fail; });
}

Json VerificationReport::to_json() const {
    Json j;
    j["provenance"] = provenance;
    j["ball_size"] = ball_size;
    j["positive_set_size"] = positive_set_size;
    j["violations"] = Json::array();
    for (const auto& v : violations)
        j["violations"].push_back({{"kind", to_string(v.kind)}, {"words", v.words}, {"elements", v.elements}});
    j["uncovered"] = uncovered;
    j["property_results"] = Json::object();
    for (const auto& [name, r] : property_results)
        j["property_results"][name] = {{"status", to_string(r.status)}, {"witness", r.witness}};
    j["clean"] = clean();
    return j;
}

VerificationReport audit_cone(const ConeLanguage& cone, const AuditConfig& cfg) {
    cfg.validate();
    return audit_cone(cone, collect_positive(cone, cfg.max_word_len), cfg);
}

VerificationReport audit_cone(const ConeLanguage& cone, const PositiveSet& pos, const AuditConfig& cfg) {
    cfg.validate();
    const auto& group = *cone.group;
    const auto& alphabet = group.alphabet();
    auto entries = sorted_entries(pos);
    auto b = groups::ball(group, cfg.ball_radius);

    VerificationReport report;
    report.provenance = cone.provenance;
    report.ball_size = b.size();
    report.positive_set_size = pos.size();
    std::map<ViolationKind, std::size_t> counts;
    auto flag = [&](ViolationKind kind, std::vector<std::string> words, std::vector<std::string> elements) {
        if (counts[kind]++ < kMaxWitnesses)
            report.violations.push_back({kind, std::move(words), std::move(elements)});
    };
    auto in_c = [&](const Element& g) {
        return !cone.relative_to.empty() && !group.is_identity(g) && group.in_subgroup(g, cone.relative_to);
    };
    auto in_neg = [&](const Element& g) { return pos.count(group.invert(g)) != 0; };

    if (auto it = pos.find(group.identity()); it != pos.end())
        flag(ViolationKind::IdentityInP, {format_word(alphabet, it->second)}, {group.format(it->first)});
    for (const auto& [g, w] : entries) {
        auto inv = pos.find(group.invert(*g));
        if (inv != pos.end() && !group.is_identity(*g) && shorter(*w, inv->second))
            flag(ViolationKind::PMeetsPinv, {format_word(alphabet, *w), format_word(alphabet, inv->second)},
                 {group.format(*g), group.format(inv->first)});
        if (in_c(*g))
            flag(ViolationKind::RelativeOverlap, {format_word(alphabet, *w)}, {group.format(*g)});
    }

    for (const auto& g : b.elements)
        if (!pos.count(g) && !in_neg(g) && !group.is_identity(g) && !in_c(g))
            report.uncovered.push_back(group.format(g));

    std::optional<groups::Ball> window;
    if (cfg.closure_radius < 2 * cfg.ball_radius)
        window = groups::ball(group, cfg.closure_radius);
    std::vector<Entry> local;
    for (const auto& e : entries)
        if (b.contains(*e.first))
            local.push_back(e);
    std::size_t gaps = 0;
    std::string gap_witness;
    for (const auto& [g, wg] : local)
        for (const auto& [h, wh] : local) {
            Element gh = group.multiply(*g, *h);
            if (pos.count(gh) || group.is_identity(gh))
                continue;
            if (window && !window->contains(gh))
                continue;
            auto words = [&] { return std::vector<std::string>{format_word(alphabet, *wg), format_word(alphabet, *wh)}; };
            auto elements = [&] {
                return std::vector<std::string>{group.format(*g), group.format(*h), group.format(gh)};
            };
            if (in_neg(gh) || in_c(gh) || (b.contains(gh) && report.uncovered.empty())) {
                flag(ViolationKind::ClosureFail, words(), elements());
            } else if (b.contains(gh) && gaps++ == 0) {
                auto w = words();
                gap_witness = w[0] + " * " + w[1] + " = " + group.format(gh) + " has no accepted word";
            }
        }
    report.property_results["closure_window"] =
        gaps == 0 ? PropertyResult{Status::Pass, ""}
                  : PropertyResult{Status::Inconclusive, gap_witness + " (" + std::to_string(gaps) + " products)"};
    return report;
}

Json OracleReport::to_json() const {
    return {{"checked", checked},
            {"mismatch_count", mismatch_count},
            {"hard_mismatches", hard_mismatches},
            {"missing_count", missing_count},
            {"missing", missing}};
}

OracleReport compare_with_oracle(const ConeLanguage& cone, const PositiveSet& positive, const Predicate& predicate,
                                 std::size_t ball_radius) {
    const auto& group = *cone.group;
    OracleReport out;
    for (const auto& [g, w] : sorted_entries(positive)) {
        ++out.checked;
        if (predicate(*g) != Verdict::Positive && out.mismatch_count++ < kMaxWitnesses)
            out.hard_mismatches.push_back(format_word(group.alphabet(), *w) + " -> " + group.format(*g));
    }
    auto b = groups::ball(group, ball_radius);
    for (const auto& g : b.elements)
        if (predicate(g) == Verdict::Positive && !positive.count(g) && out.missing_count++ < kMaxWitnesses)
            out.missing.push_back(group.format(g));
    return out;
}

OracleReport compare_with_oracle(const ConeLanguage& cone, const Predicate& predicate, const AuditConfig& cfg) {
    cfg.validate();
    return compare_with_oracle(cone, collect_positive(cone, cfg.max_word_len), predicate, cfg.ball_radius);
}

PropertyResult check_coarse_monotone(const automata::Nfa& m, std::size_t max_len) {
    auto d = automata::trim(automata::determinize(m));
    const auto k = static_cast<Int>(d.num_states());
    const auto& alphabet = d.alphabet();
    std::vector<int> step(alphabet.size());
    for (automata::Symbol s = 0; s < alphabet.size(); ++s) {
        const auto& id = alphabet.id(s);
        if (id != "t" && id != "t'")
            throw AlphabetError("check_coarse_monotone needs a machine over {t, t'}, found '" + id + "'");
        step[s] = id == "t" ? 1 : -1;
    }
    PropertyResult result;
    automata::walk_prefixes(d, max_len, [&](const Word& w, const std::vector<automata::State>&, bool accepted) {
        if (!accepted || result.status == Status::Fail)
            return result.status != Status::Fail;
        Int f = 0, best = 0;
        std::size_t arg = 0;
        for (std::size_t j = 1; j <= w.size(); ++j) {
            f += step[w[j - 1]];
            if (f <= best - k) {
                result = {Status::Fail, "w = " + format_word(alphabet, w) + ", i = " + std::to_string(arg) +
                                            ", j = " + std::to_string(j) + ", f(i) = " + std::to_string(best) +
                                            ", f(j) = " + std::to_string(f) + ", K = " + std::to_string(k)};
                return false;
            }
            if (f > best) {
                best = f;
                arg = j;
            }
        }
        return true;
    });
    return result;
}

PropertyResult check_balancing(const cones::EmbeddedCone& embedded,
                               const std::function<Int(const Element&)>& inner_tau, std::size_t max_len) {
    const auto& cone = embedded.cone;
    const auto& group = *cone.group;
    const auto& m = std::get<automata::Nfa>(cone.machine);
    std::vector<bool> checked(m.num_states(), false);
    for (automata::State s = 0; s < m.num_states(); ++s) {
        const auto& o = s < embedded.origin.size() ? embedded.origin[s] : std::nullopt;
        checked[s] = o && std::find(embedded.transducer_accepting.begin(), embedded.transducer_accepting.end(),
                                    o->first) != embedded.transducer_accepting.end();
    }
    PropertyResult result;
    std::vector<Element> stack{group.identity()};
    automata::walk_prefixes(m, max_len, [&](const Word& w, const std::vector<automata::State>& states, bool) {
        if (result.status == Status::Fail)
            return false;
        stack.resize(w.size() + 1);
        if (!w.empty())
            stack[w.size()] = group.multiply(stack[w.size() - 1], group.generator(w.back()));
        const auto& x = std::get<groups::CrossElem>(stack[w.size()].v);
        Int value = inner_tau(*x.inner) + 2 * x.z;
        for (auto s : states)
            if (checked[s] && embedded.origin[s]->second != value) {
                result = {Status::Fail, "prefix '" + format_word(m.alphabet(), w) + "' reaches state " +
                                            std::to_string(s) + " with dagger " +
                                            std::to_string(embedded.origin[s]->second) + " but tau' = " +
                                            std::to_string(value)};
                return false;
            }
        return true;
    });
    return result;
}

} // namespace conelang::verify
