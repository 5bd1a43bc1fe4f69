#include "conelang/cones/constructions.hpp"

#include "conelang/automata/one_counter.hpp"
#include "conelang/errors.hpp"

namespace conelang::cones {

using namespace automata;

namespace {

std::string with_params(const std::string& name, const std::string& params) {
    return name + params;
}

Nfa single_plus(const Alphabet& alphabet, const std::string& generator, int sign) {
    return letter_plus(alphabet, sign > 0 ? generator : inverse_id(generator));
}

} // namespace

ConeLanguage zz_cyclic() {
    auto group = groups::cyclic_group("t");
    return make_cone(letter_plus(group->alphabet(), "t"), group, {}, "zz_cyclic{}");
}

Nfa fig2_automaton() {
    NfaBuilder b(Alphabet::paired({"t"}));
    // State d: running maximum of the balance minus the current balance.
    b.add_states(3);
    b.set_initial(0);
    for (State d = 0; d < 3; ++d) {
        b.set_accepting(d);
        b.add_transition(d, "t", d == 0 ? 0 : d - 1);
        if (d < 2)
            b.add_transition(d, "t'", d + 1);
    }
    return std::move(b).build();
}

OneCounter fig3_onecounter() {
    OneCounterBuilder b(Alphabet::paired({"t"}));
    State p = b.add_state(); // t leads, counter = #t - #t'
    State n = b.add_state(); // t' leads, counter = #t' - #t
    State acc = b.add_state();
    b.set_initial(p);
    b.add_transition_any(p, "t", p, +1);
    b.add_transition(p, "t'", ZeroFlag::Positive, p, -1);
    b.add_transition(p, "t'", ZeroFlag::Zero, n, +1);
    b.add_transition_any(n, "t'", n, +1);
    b.add_transition(n, "t", ZeroFlag::Positive, n, -1);
    b.add_transition(n, kEpsilon, ZeroFlag::Zero, p, 0);
    b.add_transition(p, kEpsilon, ZeroFlag::Positive, acc, 0);
    b.set_accepting(acc);
    return std::move(b).build();
}

OneCounter lquot_onecounter() {
    OneCounterBuilder b(Alphabet::paired({"a", "b"}));
    State push = b.add_state();
    State bs = b.add_state();
    State binv = b.add_state();
    State pop = b.add_state();
    State acc = b.add_state();
    b.set_initial(push);
    b.add_transition_any(push, "a'", push, +1);
    b.add_transition_any(push, "b", bs, 0);
    b.add_transition_any(bs, "b", bs, 0);
    b.add_transition_any(push, "b'", binv, 0);
    b.add_transition_any(binv, "b'", binv, 0);
    for (State s : {push, bs, binv, pop}) {
        b.add_transition(s, "a", ZeroFlag::Positive, pop, -1);
        b.add_transition(s, kEpsilon, ZeroFlag::Zero, acc, 0);
    }
    b.set_accepting(acc);
    return std::move(b).build();
}

ConeLanguage z2_lex() {
    auto group = groups::free_abelian_group({"x", "y"});
    auto x = Alphabet::paired({"x"});
    auto y = Alphabet::paired({"y"});
    return lex_quotient_cone(letter_plus(x, "x"), letter_plus(y, "y"), group, "z2_lex{}");
}

Nfa z2_lex_projection() {
    auto cone = z2_lex();
    const auto& source = machine_alphabet(cone.machine);
    auto target = Alphabet::paired({"t"});
    std::vector<Word> images(source.size());
    images[source.at("y")] = {target.at("t")};
    images[source.at("y'")] = {target.at("t'")};
    return hom_image(std::get<Nfa>(cone.machine), Homomorphism(source, target, std::move(images)));
}

Nfa coarse_counterexample() {
    NfaBuilder b(Alphabet::paired({"t"}));
    b.add_states(3);
    b.set_initial(0);
    auto dip = b.add_state();
    b.add_transition(0, "t", 1);
    b.add_transition(1, "t'", dip);
    b.add_transition(dip, "t'", dip);
    b.add_transition(dip, "t", 2);
    b.add_transition(2, "t", 2);
    b.set_accepting(2);
    return std::move(b).build();
}

ConeLanguage klein_order(int b_sign, int a_sign) {
    if (b_sign == 0 || a_sign == 0)
        throw InvalidParameter("klein_order signs must be +1 or -1");
    auto group = groups::klein_bottle_group();
    auto l_n = single_plus(Alphabet::paired({"b"}), "b", b_sign);
    auto l_q = single_plus(Alphabet::paired({"a"}), "a", a_sign);
    std::string params = std::string("{\"signs\":[") + (b_sign > 0 ? "1" : "-1") + "," + (a_sign > 0 ? "1" : "-1") + "]}";
    return lex_quotient_cone(l_n, l_q, group, with_params("klein_order", params));
}

std::vector<ConeLanguage> klein_orders() {
    return {klein_order(1, 1), klein_order(1, -1), klein_order(-1, 1), klein_order(-1, -1)};
}

namespace {

Nfa fig5_machine(bool a_run_accepting) {
    NfaBuilder b(Alphabet::paired({"a", "b"}));
    State s0 = b.add_state();
    State apos = b.add_state();
    State aneg = b.add_state();
    State brun = b.add_state();
    State tail = b.add_state();
    b.set_initial(s0);
    b.add_transition(s0, "a", apos);
    b.add_transition(apos, "a", apos);
    b.add_transition(s0, "a'", aneg);
    b.add_transition(aneg, "a'", aneg);
    for (State s : {s0, apos, aneg, brun})
        b.add_transition(s, "b", brun);
    b.add_transition(brun, "a", tail);
    b.add_transition(tail, "a", tail);
    b.set_accepting(apos, a_run_accepting);
    b.set_accepting(brun);
    b.set_accepting(tail);
    return std::move(b).build();
}

void check_affine_q(Int q) {
    if (q < 2)
        throw InvalidParameter("bs_affine_cone needs q >= 2, got " + std::to_string(q));
}

} // namespace

ConeLanguage bs_affine_relative_cone(Int q) {
    check_affine_q(q);
    return make_cone(fig5_machine(false), groups::bs_group(q), {"a"},
                     with_params("bs_affine_relative_cone", "{\"q\":" + std::to_string(q) + "}"));
}

ConeLanguage bs_affine_cone(Int q) {
    check_affine_q(q);
    return make_cone(fig5_machine(true), groups::bs_group(q), {},
                     with_params("bs_affine_cone", "{\"q\":" + std::to_string(q) + "}"));
}

std::optional<Word> bs_affine_witness(Int q, const Element& g, bool with_a_run, std::size_t max_len) {
    check_affine_q(q);
    const auto* x = std::get_if<groups::BsElem>(&g.v);
    if (!x)
        return std::nullopt;
    const auto alphabet = Alphabet::paired({"a", "b"});
    auto run = [&](Word& w, const char* letter, groups::BigInt count) {
        if (count > groups::BigInt(max_len - w.size()))
            return false;
        w.insert(w.end(), static_cast<std::size_t>(count), alphabet.at(letter));
        return true;
    };
    Word w;
    if (x->x.is_zero()) {
        if (!with_a_run || x->n <= 0 || !run(w, "a", x->n))
            return std::nullopt;
        return w;
    }
    if (x->x.sign() < 0)
        return std::nullopt;
    Int j = std::min(x->n, -x->x.exp);
    Int l = x->n - j;
    groups::BigInt k = x->x.num * boost::multiprecision::pow(groups::BigInt(q), static_cast<unsigned>(-j - x->x.exp));
    if (!run(w, j >= 0 ? "a" : "a'", j >= 0 ? j : -j) || !run(w, "b", k) || !run(w, "a", l))
        return std::nullopt;
    return w;
}

namespace {

// Words a'^m b^k a^m with k != 0 whose value a^-m b^k a^m = q^-m k is positive.
Nfa kernel_filter(Int q) {
    NfaBuilder b(Alphabet::paired({"a", "b"}));
    if (q > 0) {
        State push = b.add_state();
        State brun = b.add_state();
        State pop = b.add_state();
        b.set_initial(push);
        b.add_transition(push, "a'", push);
        b.add_transition(push, "b", brun);
        b.add_transition(brun, "b", brun);
        b.add_transition(brun, "a", pop);
        b.add_transition(pop, "a", pop);
        b.set_accepting(brun);
        b.set_accepting(pop);
        return std::move(b).build();
    }
    // m even with b-runs, m odd with b'-runs.
    State even = b.add_state();
    State even_half = b.add_state();
    State brun = b.add_state();
    State even_pop_half = b.add_state();
    State even_pop = b.add_state();
    State odd = b.add_state();
    State odd_half = b.add_state();
    State binv = b.add_state();
    State odd_pop = b.add_state();
    State odd_pop_half = b.add_state();
    b.set_initial(even);
    b.add_transition(even, "a'", even_half);
    b.add_transition(even_half, "a'", even);
    b.add_transition(even, "b", brun);
    b.add_transition(brun, "b", brun);
    b.add_transition(brun, "a", even_pop_half);
    b.add_transition(even_pop_half, "a", even_pop);
    b.add_transition(even_pop, "a", even_pop_half);
    b.set_accepting(brun);
    b.set_accepting(even_pop);

    b.add_transition(even, "a'", odd);
    b.add_transition(odd, "a'", odd_half);
    b.add_transition(odd_half, "a'", odd);
    b.add_transition(odd, "b'", binv);
    b.add_transition(binv, "b'", binv);
    b.add_transition(binv, "a", odd_pop);
    b.add_transition(odd_pop, "a", odd_pop_half);
    b.add_transition(odd_pop_half, "a", odd_pop);
    b.set_accepting(odd_pop);
    return std::move(b).build();
}

} // namespace

ConeLanguage bs_lex_onecounter(Int q, int variant) {
    if (q == 0)
        throw InvalidParameter("bs_lex_onecounter needs q != 0");
    if (variant < 1 || variant > 4)
        throw InvalidParameter("bs_lex_onecounter variant must be 1, 2, 3 or 4");
    auto group = groups::bs_group(q);
    const auto& alphabet = group->alphabet();
    auto quot = lquot_onecounter();
    auto filter = kernel_filter(q);
    auto lead = letter_plus(alphabet, variant == 1 || variant == 4 ? "a" : "a'");
    OneCounter m = variant <= 2 ? oc_union(oc_concat(lead, quot), oc_intersect(quot, filter))
                                : oc_union(oc_concat(quot, lead), oc_intersect(quot, formal_inverse(filter)));
    auto params = "{\"q\":" + std::to_string(q) + ",\"variant\":" + std::to_string(variant) + "}";
    return make_cone(std::move(m), group, {}, with_params("bs_lex_onecounter", params));
}

ConeLanguage wreath_cone(const Nfa& l_n, const Nfa& l_q, GroupPtr group, std::string provenance) {
    const auto& x = l_n.alphabet();
    const auto& y = l_q.alphabet();
    if (!x.disjoint_from(y))
        throw AlphabetError("wreath_cone needs disjoint alphabets");
    auto full = x.merged_with(y);
    std::vector<std::string> x_ids, y_ids;
    for (const auto& l : x.letters())
        x_ids.push_back(l.id);
    for (const auto& l : y.letters())
        y_ids.push_back(l.id);
    auto y_star = universal_language(full, y_ids);
    auto x_star = universal_language(full, x_ids);
    auto m_q = formal_inverse(l_q);
    auto body = concat(concat(concat(y_star, l_n), m_q), concat(kleene_star(concat(x_star, m_q)), y_star));
    return make_cone(union_of(body, l_q), std::move(group), {}, std::move(provenance));
}

ConeLanguage wreath_cone_zz() {
    return wreath_cone(letter_plus(Alphabet::paired({"c"}), "c"), letter_plus(Alphabet::paired({"t"}), "t"),
                       groups::wreath_zz_group(), "wreath_cone_zz{}");
}

std::optional<Word> wreath_zz_witness(const Element& g) {
    const auto* x = std::get_if<groups::WreathElem>(&g.v);
    if (!x)
        return std::nullopt;
    const auto alphabet = Alphabet::paired({"t", "c"});
    Word w;
    auto run = [&](const char* pos, const char* neg, Int count) {
        w.insert(w.end(), static_cast<std::size_t>(count < 0 ? -count : count), alphabet.at(count < 0 ? neg : pos));
    };
    if (x->p.is_zero()) {
        if (x->s <= 0)
            return std::nullopt;
        run("t", "t'", x->s);
        return w;
    }
    if (x->p.leading() < 0)
        return std::nullopt;
    run("t", "t'", x->p.high());
    for (Int i = x->p.high(); i >= x->p.low; --i) {
        run("c", "c'", x->p.at(i));
        run("t", "t'", -1);
    }
    run("t", "t'", x->s - x->p.low + 1);
    return w;
}

ConeLanguage zwrz_cone() {
    NfaBuilder b(Alphabet::paired({"t", "c"}));
    State s0 = b.add_state();
    State p = b.add_state();
    State n = b.add_state();
    State c = b.add_state();
    State d = b.add_state();
    State e = b.add_state();
    State e_inv = b.add_state();
    State f = b.add_state();
    b.set_initial(s0);
    b.add_transition(s0, "t", p);
    b.add_transition(p, "t", p);
    b.add_transition(s0, "t'", n);
    b.add_transition(n, "t'", n);
    for (State s : {s0, p, n, c})
        b.add_transition(s, "c", c);
    b.add_transition(c, "t'", d);
    b.add_transition(d, "t'", d);
    b.add_transition(d, "c", e);
    b.add_transition(e, "c", e);
    b.add_transition(d, "c'", e_inv);
    b.add_transition(e_inv, "c'", e_inv);
    for (State s : {e, e_inv})
        b.add_transition(s, "t'", d);
    for (State s : {c, e, e_inv, f})
        b.add_transition(s, "t", f);
    for (State s : {p, c, d, e, e_inv, f})
        b.set_accepting(s);
    return make_cone(std::move(b).build(), groups::wreath_zz_group(), {}, "zwrz_cone{}");
}

} // namespace conelang::cones
