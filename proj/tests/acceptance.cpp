// acceptance -- one PASS/FAIL line per acceptance criterion, exact checks only
#include <chrono>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <string>

#include "conelang/automata/enumerate.hpp"
#include "conelang/automata/transducer.hpp"
#include "conelang/cones/constructions.hpp"
#include "conelang/cones/oracles.hpp"
#include "conelang/cones/registry.hpp"
#include "conelang/cones/tau_cones.hpp"
#include "conelang/groups/tau.hpp"
#include "conelang/verify/audit.hpp"
#include "conelang/verify/checks.hpp"
#include "support/faults.hpp"
#include "support/oracles.hpp"

namespace {

using namespace conelang;
using automata::Alphabet;
using automata::Nfa;
using automata::Word;
using oracle::Ids;
using verify::AuditConfig;

struct Outcome {
    bool pass = true;
    std::string detail;

    void require(bool ok, const std::string& what) {
        if (!ok) {
            pass = false;
            detail += (detail.empty() ? "" : "; ") + what;
        }
    }
};

std::string summary(const verify::VerificationReport& r) {
    std::string s = std::to_string(r.violations.size()) + " violations, " + std::to_string(r.uncovered.size()) +
                    " uncovered";
    for (const auto& [name, p] : r.property_results)
        if (p.status != verify::Status::Pass)
            s += ", " + name + " " + verify::to_string(p.status) + " (" + p.witness + ")";
    if (!r.violations.empty())
        s += ", first " + verify::to_string(r.violations.front().kind);
    return s;
}

// ---- 1 ----------------------------------------------------------------------

Outcome baseline_z() {
    Outcome o;
    auto cone = cones::zz_cyclic();
    auto report = verify::audit_cone(cone, {6, 8, 8});
    o.require(report.clean(), "audit: " + summary(report));
    std::set<long> values;
    for (const auto& w : automata::accepted_word_list(cone.machine, 8))
        values.insert(oracle::balance(oracle::ids(cone.group->alphabet(), w)));
    std::set<long> expected;
    for (long v = 1; v <= 8; ++v)
        expected.insert(v);
    o.require(values == expected, "accepted words do not evaluate to exactly 1..8");
    o.detail = o.detail.empty() ? "ball(6) of " + std::to_string(report.ball_size) + " elements, " + summary(report)
                                : o.detail;
    return o;
}

// ---- 2 ----------------------------------------------------------------------

using Lang = std::set<Word>;

Lang language(const Nfa& m, const std::vector<Word>& universe) {
    Lang out;
    for (const auto& w : universe)
        if (oracle::nfa_accepts(m, w))
            out.insert(w);
    return out;
}

Lang star_oracle(const Lang& a, const std::vector<Word>& universe) {
    Lang out;
    for (const auto& w : universe) {
        std::vector<bool> ok(w.size() + 1, false);
        ok[0] = true;
        for (std::size_t j = 1; j <= w.size(); ++j)
            for (std::size_t i = 0; i < j && !ok[j]; ++i)
                ok[j] = ok[i] && a.count(Word(w.begin() + i, w.begin() + j));
        if (ok[w.size()])
            out.insert(w);
    }
    return out;
}

Outcome afl_suite() {
    Outcome o;
    constexpr std::size_t kLen = 6;
    const auto alphabet = Alphabet::paired({"t"});
    const auto universe = oracle::all_words(alphabet.size(), kLen);
    const auto t = alphabet.at("t"), ti = alphabet.at("t'");
    // non-erasing, so image words of length <= 6 come from sources of length <= 6
    automata::Homomorphism h(alphabet, alphabet, {{t, ti}, {ti}});
    std::mt19937 rng(20240611);
    std::size_t checked = 0;
    for (int pair = 0; pair < 20; ++pair) {
        auto a = oracle::random_nfa(rng, alphabet, 4);
        auto b = oracle::random_nfa(rng, alphabet, 4);
        auto la = language(a, universe), lb = language(b, universe);
        auto check = [&](const std::string& op, const Nfa& m, const std::function<bool(const Word&)>& expected) {
            for (const auto& w : universe) {
                ++checked;
                if (automata::accepts(m, w) != expected(w)) {
                    o.require(false, "pair " + std::to_string(pair) + " " + op + " differs on '" +
                                         automata::format_word(alphabet, w) + "'");
                    return;
                }
            }
        };
        check("union", automata::union_of(a, b), [&](const Word& w) { return la.count(w) || lb.count(w); });
        check("intersect", automata::intersect(a, b), [&](const Word& w) { return la.count(w) && lb.count(w); });
        check("concat", automata::concat(a, b), [&](const Word& w) {
            for (std::size_t i = 0; i <= w.size(); ++i)
                if (la.count(Word(w.begin(), w.begin() + i)) && lb.count(Word(w.begin() + i, w.end())))
                    return true;
            return false;
        });
        auto star = star_oracle(la, universe);
        check("star", automata::kleene_star(a), [&](const Word& w) { return star.count(w) != 0; });
        check("reverse", automata::reverse(a), [&](const Word& w) { return la.count(Word(w.rbegin(), w.rend())) != 0; });
        check("complement", automata::complement(a), [&](const Word& w) { return !la.count(w); });
        Lang image;
        for (const auto& u : la)
            if (auto v = h.apply(u); v.size() <= kLen)
                image.insert(v);
        check("hom", automata::hom_image(a, h), [&](const Word& w) { return image.count(w) != 0; });
        check("inverse hom", automata::inverse_hom(a, h),
              [&](const Word& w) { return oracle::nfa_accepts(a, h.apply(w)); });
        check("formal inverse", automata::formal_inverse(a), [&](const Word& w) {
            Word v;
            for (auto it = w.rbegin(); it != w.rend(); ++it)
                v.push_back(*it == t ? ti : t);
            return la.count(v) != 0;
        });
    }
    if (o.pass)
        o.detail = "20 pairs, 9 operations, " + std::to_string(checked) + " word checks";
    return o;
}

// ---- 3 ----------------------------------------------------------------------

Outcome klein() {
    Outcome o;
    const std::vector<std::pair<int, int>> signs{{1, 1}, {1, -1}, {-1, 1}, {-1, -1}};
    auto cones_k = cones::klein_orders();
    const auto& group = *cones_k[0].group;
    const auto& alphabet = group.alphabet();
    auto b = groups::ball(group, 4);
    std::vector<std::set<oracle::Klein>> positive(4);
    for (std::size_t i = 0; i < 4; ++i) {
        auto report = verify::audit_cone(cones_k[i], {4, 8, 8});
        o.require(report.clean(), "cone " + std::to_string(i) + ": " + summary(report));
        auto [bs, as] = signs[i];
        for (const auto& w : automata::accepted_word_list(cones_k[i].machine, 8)) {
            auto k = oracle::klein(oracle::ids(alphabet, w));
            int sign = k.m != 0 ? (k.m > 0 ? as : -as) : (k.n > 0 ? bs : (k.n < 0 ? -bs : 0));
            if (sign <= 0) {
                o.require(false, "cone " + std::to_string(i) + " accepts non-positive '" +
                                     automata::format_word(alphabet, w) + "'");
                break;
            }
            positive[i].insert(k);
        }
    }
    std::vector<oracle::Klein> ball_keys;
    for (const auto& w : b.witnesses)
        ball_keys.push_back(oracle::klein(oracle::ids(alphabet, w)));
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = i + 1; j < 4; ++j) {
            bool differ = false;
            for (const auto& k : ball_keys)
                differ = differ || positive[i].count(k) != positive[j].count(k);
            o.require(differ, "cones " + std::to_string(i) + " and " + std::to_string(j) + " agree on ball(4)");
        }
    // signs (s) and (-s) sit at positions i and 3 - i
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t e = 0; e < b.size(); ++e) {
            auto inv = oracle::klein(oracle::inverse(oracle::ids(alphabet, b.witnesses[e])));
            if (positive[i].count(ball_keys[e]) != positive[3 - i].count(inv)) {
                o.require(false, "cone(s) != cone(-s)^-1 at " + group.format(b.elements[e]));
                break;
            }
        }
    if (o.pass)
        o.detail = "4 cones clean on ball(4) of " + std::to_string(b.size()) + ", pairwise distinct, mirror pairs inverse";
    return o;
}

// ---- 4 ----------------------------------------------------------------------

Outcome bs_affine() {
    Outcome o;
    std::string detail;
    for (long q : {2L, 3L}) {
        auto built = cones::build_construction("bs_affine_cone", {{"q", q}});
        const auto& cone = *built.cone;
        const auto& alphabet = cone.group->alphabet();
        AuditConfig cfg{4, 14, 8};
        auto report = verify::verify_construction(built, cfg);
        o.require(report.clean(), "q=" + std::to_string(q) + ": " + summary(report));
        std::size_t words = 0;
        for (const auto& w : automata::accepted_word_list(cone.machine, 14)) {
            ++words;
            if (oracle::affine_sign(q, oracle::ids(alphabet, w)) <= 0) {
                o.require(false, "q=" + std::to_string(q) + " accepts '" + automata::format_word(alphabet, w) +
                                     "' outside the affine cone");
                break;
            }
        }
        // the long words that close coverage gaps are themselves checked
        auto pos = verify::collect_positive(cone, 14);
        verify::add_witnesses(cone, pos, 4, built.witness);
        for (const auto& [g, w] : pos)
            if (oracle::affine_sign(q, oracle::ids(alphabet, w)) <= 0) {
                o.require(false, "witness word for " + cone.group->format(g) + " is not affine positive");
                break;
            }
        detail += "q=" + std::to_string(q) + ": " + std::to_string(words) + " words, " +
                  report.property_results["long_word_coverage"].witness + "; ";
    }
    if (o.pass)
        o.detail = detail + "clean at radius 4";
    return o;
}

// ---- 5 ----------------------------------------------------------------------

Outcome bs_lex() {
    Outcome o;
    std::string detail;
    for (long q : {-2L, -3L, 2L}) {
        auto v1 = cones::bs_lex_onecounter(q, 1);
        auto v3 = cones::bs_lex_onecounter(q, 3);
        const auto& alphabet = v1.group->alphabet();
        std::size_t words = 0;
        for (const auto& w : automata::accepted_word_list(v1.machine, 12)) {
            ++words;
            if (oracle::bs_lex_sign(q, oracle::ids(alphabet, w)) <= 0) {
                o.require(false, "q=" + std::to_string(q) + " variant 1 accepts '" +
                                     automata::format_word(alphabet, w) + "'");
                break;
            }
        }
        auto p1 = verify::collect_positive(v1, 12);
        auto p3 = verify::collect_positive(v3, 12);
        auto b = groups::ball(*v1.group, 4);
        std::size_t shared = 0;
        for (const auto& g : b.elements)
            shared += p1.count(g) && p3.count(g);
        o.require(shared == 0, "q=" + std::to_string(q) + ": " + std::to_string(shared) +
                                   " ball(4) elements in both variants");
        detail += "q=" + std::to_string(q) + " " + std::to_string(words) + " words; ";
    }
    if (o.pass)
        o.detail = detail + "variants 1 and 3 disjoint on ball(4)";
    return o;
}

// ---- 6 ----------------------------------------------------------------------

Outcome distinct_families() {
    Outcome o;
    auto affine = cones::bs_affine_cone(2);
    auto lex = cones::bs_lex_onecounter(2, 1);
    const auto& group = *affine.group;
    auto pa = verify::collect_positive(affine, 12);
    auto pl = verify::collect_positive(lex, 12);
    auto b = groups::ball(group, 5);
    for (std::size_t i = 0; i < b.size(); ++i) {
        const auto& g = b.elements[i];
        auto inv = pl.find(group.invert(g));
        auto pos = pa.find(g);
        if (pos == pa.end() || inv == pl.end())
            continue;
        auto wa = oracle::ids(group.alphabet(), pos->second);
        auto wl = oracle::ids(group.alphabet(), inv->second);
        if (oracle::affine_sign(2, wa) > 0 && oracle::bs_lex_sign(2, wl) > 0 &&
            oracle::affine(2, wa) == oracle::affine(2, oracle::inverse(wl))) {
            o.detail = group.format(g) + " = '" + oracle::join(wa) + "' is affine positive, its inverse '" +
                       oracle::join(wl) + "' is lex positive";
            return o;
        }
    }
    o.require(false, "no witness in ball(5)");
    return o;
}

// ---- 7 ----------------------------------------------------------------------

Outcome wreath() {
    Outcome o;
    auto hand = cones::build_construction("zwrz_cone");
    auto eq2 = cones::build_construction("wreath_cone_zz");
    const auto& group = *hand.cone->group;
    const auto& alphabet = group.alphabet();
    auto b = groups::ball(group, 5);
    std::size_t raw_diff = 0;
    std::vector<verify::PositiveSet> sets;
    for (const auto* built : {&hand, &eq2}) {
        auto pos = verify::collect_positive(*built->cone, 12);
        for (const auto& [g, w] : pos)
            if (oracle::leadcoef_sign(oracle::ids(alphabet, w)) <= 0) {
                o.require(false, built->name + " accepts '" + automata::format_word(alphabet, w) +
                                     "' with non-positive leading coefficient");
                break;
            }
        sets.push_back(std::move(pos));
    }
    for (const auto& g : b.elements)
        raw_diff += sets[0].count(g) != sets[1].count(g);
    for (std::size_t i = 0; i < 2; ++i) {
        const auto& built = i == 0 ? hand : eq2;
        if (built.witness)
            verify::add_witnesses(*built.cone, sets[i], 5, built.witness);
        for (const auto& [g, w] : sets[i])
            if (oracle::leadcoef_sign(oracle::ids(alphabet, w)) <= 0) {
                o.require(false, built.name + " witness for " + group.format(g) + " is not positive");
                break;
            }
    }
    std::size_t diff = 0;
    std::string first;
    for (const auto& g : b.elements)
        if (sets[0].count(g) != sets[1].count(g) && diff++ == 0)
            first = group.format(g);
    o.require(diff == 0, std::to_string(diff) + " ball(5) elements accepted by one machine only, first " + first);
    for (std::size_t i = 0; i < b.size(); ++i) {
        int expected = oracle::leadcoef_sign(oracle::ids(alphabet, b.witnesses[i]));
        if (expected > 0 && !sets[0].count(b.elements[i])) {
            o.require(false, "positive " + group.format(b.elements[i]) + " not accepted");
            break;
        }
    }
    if (o.pass)
        o.detail = "ball(5) of " + std::to_string(b.size()) + " elements identical; " + std::to_string(raw_diff) +
                   " needed words over 12 letters";
    return o;
}

// ---- 8 ----------------------------------------------------------------------

Outcome tau_axioms() {
    Outcome o;
    auto group = groups::f2_as_free_product();
    auto b4 = groups::ball(*group, 4);
    std::vector<groups::Int> tau(b4.size());
    for (std::size_t i = 0; i < b4.size(); ++i) {
        tau[i] = groups::f2_tau(b4.elements[i]);
        auto w = oracle::ids(group->alphabet(), b4.witnesses[i]);
        if (tau[i] != oracle::free_tau(w))
            o.require(false, "tau(" + oracle::join(w) + ") = " + std::to_string(tau[i]) + ", by hand " +
                                 std::to_string(oracle::free_tau(w)));
        if (tau[i] != -groups::f2_tau(group->invert(b4.elements[i])))
            o.require(false, "tau not antisymmetric at " + group->format(b4.elements[i]));
        if ((tau[i] == 0) != group->is_identity(b4.elements[i]))
            o.require(false, "tau = 0 off the identity at " + group->format(b4.elements[i]));
    }
    std::size_t pairs = 0;
    for (std::size_t i = 0; i < b4.size() && o.pass; ++i)
        for (std::size_t j = 0; j < b4.size(); ++j) {
            ++pairs;
            auto ghinv = group->invert(group->multiply(b4.elements[i], b4.elements[j]));
            if (tau[i] + tau[j] + groups::f2_tau(ghinv) > 1) {
                o.require(false, "quasimorphism bound fails at " + group->format(b4.elements[i]) + ", " +
                                     group->format(b4.elements[j]));
                break;
            }
        }
    auto b5 = groups::ball(*group, 5);
    for (const auto& g : b5.elements)
        if (!group->is_identity(g) && groups::f2_tau(g) % 2 == 0) {
            o.require(false, "tau even at " + group->format(g));
            break;
        }
    if (o.pass)
        o.detail = std::to_string(pairs) + " pairs on ball(4), odd on " + std::to_string(b5.size() - 1) +
                   " non-identity elements of ball(5)";
    return o;
}

// ---- 9 ----------------------------------------------------------------------

Outcome tau_transducer() {
    Outcome o;
    auto t = cones::f2_tau_transducer();
    auto group = groups::f2_as_free_product();
    const auto& in = t.input_alphabet();
    const auto& out = t.output_alphabet();
    std::size_t reduced = 0;
    for (const auto& w : oracle::all_words(in.size(), 6)) {
        auto letters = oracle::ids(in, w);
        if (!oracle::is_reduced(letters))
            continue;
        ++reduced;
        auto outputs = automata::transducer_outputs(t, w);
        auto expected = groups::f2_tau(group->evaluate(oracle::word(group->alphabet(), letters)));
        if (outputs.empty()) {
            o.require(false, "'" + oracle::join(letters) + "' has no output");
            break;
        }
        if (expected != oracle::free_tau(letters)) {
            o.require(false, "tau_value disagrees with the hand count on '" + oracle::join(letters) + "'");
            break;
        }
        for (const auto& v : outputs)
            if (oracle::balance(oracle::ids(out, v)) != expected) {
                o.require(false, "'" + oracle::join(letters) + "' outputs '" + oracle::join(oracle::ids(out, v)) +
                                     "', tau = " + std::to_string(expected));
                break;
            }
        if (!o.pass)
            break;
    }
    if (o.pass)
        o.detail = std::to_string(reduced) + " reduced words, all in the domain, every output evaluates to tau";
    return o;
}

// ---- 10 ---------------------------------------------------------------------

Outcome f2_onecounter() {
    Outcome o;
    auto cone = cones::f2_onecounter_cone();
    const auto& alphabet = cone.group->alphabet();
    const auto& m = std::get<automata::OneCounter>(cone.machine);
    std::size_t accepted = 0, tested = 0;
    for (const auto& w : automata::accepted_word_list(cone.machine, 10)) {
        ++accepted;
        if (oracle::free_tau(oracle::ids(alphabet, w)) <= 0) {
            o.require(false, "accepts '" + automata::format_word(alphabet, w) + "' with tau <= 0");
            break;
        }
    }
    for (const auto& w : oracle::all_words(alphabet.size(), 8)) {
        auto letters = oracle::ids(alphabet, w);
        if (!oracle::is_reduced(letters))
            continue;
        ++tested;
        if (automata::oc_accepts(m, w) != (oracle::free_tau(letters) > 0)) {
            o.require(false, "reduced word '" + oracle::join(letters) + "' misclassified");
            break;
        }
    }
    auto report = verify::audit_cone(cone, {3, 10, 6});
    o.require(report.clean(), "audit: " + summary(report));
    if (o.pass)
        o.detail = std::to_string(accepted) + " accepted words <= 10, " + std::to_string(tested) +
                   " reduced words <= 8 decided by tau, audit clean at radius 3";
    return o;
}

// ---- 11 ---------------------------------------------------------------------

Outcome embedding() {
    Outcome o;
    auto built = cones::build_construction("embed_cross_z_f2");
    const auto& cone = *built.cone;
    const auto& group = *cone.group;
    const auto& alphabet = group.alphabet();
    auto value = [](const Ids& w) { return oracle::free_tau(w) + 2 * oracle::balance(w, "z"); };

    auto balancing = verify::check_balancing(*built.embedded, built.inner_tau, 10);
    o.require(balancing.status == verify::Status::Pass, "balancing: " + balancing.witness);

    AuditConfig cfg{4, 12, 8};
    auto pos = verify::collect_positive(cone, cfg.max_word_len);
    for (const auto& [g, w] : pos)
        if (value(oracle::ids(alphabet, w)) <= 0) {
            o.require(false, "accepted '" + automata::format_word(alphabet, w) + "' has tau + 2n <= 0");
            break;
        }
    auto b = groups::ball(group, 4);
    for (std::size_t i = 0; i < b.size(); ++i) {
        int expected = value(oracle::ids(alphabet, b.witnesses[i])) > 0 ? 1 : 0;
        if (expected != (built.oracle(b.elements[i]) == cones::Verdict::Positive)) {
            o.require(false, "library predicate differs from the hand count at " + group.format(b.elements[i]));
            break;
        }
    }
    auto cmp = verify::compare_with_oracle(cone, pos, built.oracle, cfg.ball_radius);
    o.require(cmp.mismatch_count == 0, std::to_string(cmp.mismatch_count) + " hard mismatches");
    o.require(cmp.missing_count == 0, std::to_string(cmp.missing_count) + " positive elements without a word");
    auto report = verify::audit_cone(cone, pos, cfg);
    o.require(report.violations.empty() && report.uncovered.empty(), "audit: " + summary(report));
    if (o.pass)
        o.detail = "balancing on words <= 10, " + std::to_string(cmp.checked) + " accepted elements, ball(4) of " +
                   std::to_string(b.size()) + ": 0 mismatches, 0 violations, 0 uncovered";
    return o;
}

// ---- 12 ---------------------------------------------------------------------

Outcome coarse_monotone() {
    Outcome o;
    auto good = verify::check_coarse_monotone(cones::z2_lex_projection(), 12);
    o.require(good.status == verify::Status::Pass, "projection fails: " + good.witness);
    auto bad = verify::check_coarse_monotone(cones::coarse_counterexample(), 12);
    o.require(bad.status == verify::Status::Fail && !bad.witness.empty(), "counterexample not rejected");
    if (o.pass)
        o.detail = "projection passes; counterexample fails with " + bad.witness;
    return o;
}

// ---- 13 ---------------------------------------------------------------------

Outcome fault_injection() {
    Outcome o;
    AuditConfig cfg{4, 8, 8};
    struct Target {
        std::string name;
        cones::ConeLanguage cone;
        Ids identity_word, negative_word, removed_a, removed_b;
    };
    std::vector<Target> targets{
        {"Z", cones::zz_cyclic(), {"t", "t'"}, {"t'", "t'"}, {"t"}, {"t"}},
        {"K", cones::klein_order(1, 1), {"a", "a'"}, {"b'"}, {"a"}, {"a"}},
    };
    std::string detail;
    for (const auto& t : targets) {
        const auto& alphabet = t.cone.group->alphabet();
        auto clean = verify::audit_cone(t.cone, cfg);
        o.require(clean.clean(), t.name + " uncorrupted cone not clean");

        auto with_identity = faults::add_word(t.cone, oracle::word(alphabet, t.identity_word));
        auto r1 = verify::audit_cone(with_identity, cfg);
        bool f1 = std::any_of(r1.violations.begin(), r1.violations.end(),
                              [](const auto& v) { return v.kind == verify::ViolationKind::IdentityInP; });
        o.require(f1, t.name + ": identity word not flagged");

        auto with_inverse = faults::add_word(t.cone, oracle::word(alphabet, t.negative_word));
        auto r2 = verify::audit_cone(with_inverse, cfg);
        bool f2 = std::any_of(r2.violations.begin(), r2.violations.end(),
                              [](const auto& v) { return v.kind == verify::ViolationKind::PMeetsPinv; });
        o.require(f2, t.name + ": inverse word not flagged");

        auto product = t.cone.group->evaluate(oracle::word(alphabet, oracle::concat(t.removed_a, t.removed_b)));
        auto removed = faults::remove_element(t.cone, product, cfg.max_word_len);
        auto r3 = verify::audit_cone(removed, cfg);
        const auto& window = r3.property_results["closure_window"];
        bool f3 = !r3.clean() && window.status != verify::Status::Pass &&
                  std::count(r3.uncovered.begin(), r3.uncovered.end(), t.cone.group->format(product)) == 1;
        o.require(f3, t.name + ": removal of " + t.cone.group->format(product) + " not flagged");
        detail += t.name + ": identity_in_P, P_meets_Pinv, closure gap at " + t.cone.group->format(product) + "; ";
    }
    if (o.pass)
        o.detail = detail + "uncorrupted cones clean";
    return o;
}

} // namespace

int main() {
    struct Criterion {
        int id;
        std::string name;
        std::function<Outcome()> run;
        double limit_seconds;
    };
    const std::vector<Criterion> criteria{
        {1, "Z baseline audit", baseline_z, 1},
        {2, "closure operations vs word-set oracle", afl_suite, 0},
        {3, "Klein bottle group orders", klein, 10},
        {4, "BS(1,q) affine cone, q = 2, 3", bs_affine, 0},
        {5, "BS(1,q) one-counter lex cones, q = -2, -3, 2", bs_lex, 0},
        {6, "affine and lex families differ on BS(1,2)", distinct_families, 0},
        {7, "Z wr Z machines agree", wreath, 60},
        {8, "tau axioms on F2", tau_axioms, 0},
        {9, "tau-transducer outputs", tau_transducer, 0},
        {10, "one-counter cone on F2", f2_onecounter, 0},
        {11, "regular cone on F2 x Z", embedding, 300},
        {12, "coarse monotonicity diagnostic", coarse_monotone, 0},
        {13, "fault injection", fault_injection, 0},
    };
    int failures = 0;
    for (const auto& c : criteria) {
        auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = c.run();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (c.limit_seconds > 0 && secs >= c.limit_seconds)
            o.require(false, "runtime " + std::to_string(secs) + " s over the " +
                                 std::to_string(static_cast<int>(c.limit_seconds)) + " s limit");
        failures += !o.pass;
        char timing[32];
        std::snprintf(timing, sizeof timing, "%.2f s", secs);
        std::cout << (o.pass ? "PASS" : "FAIL") << " criterion " << c.id << ": " << c.name << " -- " << o.detail
                  << " [" << timing << "]" << std::endl;
    }
    std::cout << (13 - failures) << "/13 criteria pass" << std::endl;
    return failures == 0 ? 0 : 1;
}
