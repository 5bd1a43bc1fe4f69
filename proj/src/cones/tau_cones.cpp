#include "conelang/cones/tau_cones.hpp"

#include <deque>
#include <set>

#include "conelang/cones/constructions.hpp"
#include "conelang/errors.hpp"
#include "conelang/groups/tau.hpp"

namespace conelang::cones {

using namespace automata;

namespace {

// Copies `m` into `b` and routes the initial state's out-edges from `root`.
State graft(NfaBuilder& b, const Nfa& m, State root) {
    State offset = b.add_states(m.num_states());
    for (State s = 0; s < m.num_states(); ++s)
        for (const auto& e : m.edges(s)) {
            Symbol x = b.alphabet().at(m.alphabet().id(e.letter));
            b.add_transition(offset + s, x, offset + e.to);
            if (s == m.initial())
                b.add_transition(root, x, offset + e.to);
        }
    return offset;
}

Int output_value(const Transducer& t, const Word& out) {
    Symbol up = t.output_alphabet().at("t");
    Int v = 0;
    for (Symbol x : out)
        v += x == up ? 1 : -1;
    return v;
}

Int floor_half(Int v) {
    return v >= 0 ? v / 2 : -((-v + 1) / 2);
}

// Every accepting run value of `t` must be odd or 0. Runs are explored over
// (state, value) pairs with |value| bounded by the longest possible
// repetition-free run.
void check_odd_outputs(const Transducer& t) {
    Int max_out = 0;
    for (State s = 0; s < t.num_states(); ++s)
        for (const auto& e : t.edges(s))
            max_out = std::max<Int>(max_out, static_cast<Int>(e.output.size()));
    Int bound = static_cast<Int>(t.num_states() + 1) * std::max<Int>(max_out, 1) * 2;
    std::set<std::pair<State, Int>> seen{{t.initial(), 0}};
    std::deque<std::pair<State, Int>> queue{{t.initial(), 0}};
    while (!queue.empty()) {
        auto [s, v] = queue.front();
        queue.pop_front();
        if (t.is_accepting(s) && v != 0 && v % 2 == 0)
            throw ConstructionError("transducer run reaches state " + std::to_string(s) + " with even value " +
                                    std::to_string(v));
        for (const auto& e : t.edges(s)) {
            Int w = v + output_value(t, e.output);
            if (w > bound || w < -bound)
                continue;
            if (seen.insert({e.to, w}).second)
                queue.push_back({e.to, w});
        }
    }
}

Nfa pm_of_letter(const std::string& generator) {
    return pm_automaton(letter_plus(Alphabet::paired({generator}), generator));
}

ConeLanguage a_plus_cone() {
    auto cyclic = groups::cyclic_group("a");
    return make_cone(letter_plus(cyclic->alphabet(), "a"), cyclic, {}, "letter_plus{\"letter\":\"a\"}");
}

void check_amalgam_params(Int m, Int n) {
    if (m < 2 || n < 2)
        throw InvalidParameter("bs_amalgam constructions need m, n >= 2");
}

std::string amalgam_params(Int m, Int n) {
    return "{\"m\":" + std::to_string(m) + ",\"n\":" + std::to_string(n) + "}";
}

} // namespace

Nfa pm_automaton(const Nfa& l_p) {
    auto plus = trim(determinize(l_p));
    auto minus = trim(determinize(formal_inverse(l_p)));
    if (plus.is_accepting(plus.initial()))
        throw ConstructionError("pm_automaton: the cone language contains the empty word");
    NfaBuilder b(l_p.alphabet());
    State s0 = b.add_state();
    b.set_initial(s0);
    State op = graft(b, plus, s0);
    State om = graft(b, minus, s0);
    std::vector<State> pos, neg;
    for (State s : plus.accepting())
        pos.push_back(op + s);
    for (State s : minus.accepting())
        neg.push_back(om + s);
    for (State s : pos)
        b.set_accepting(s);
    for (State s : neg)
        b.set_accepting(s);
    b.set_sign_partition(pos, neg);
    return trim(std::move(b).build());
}

Transducer tau_transducer(const TauData& data) {
    const auto k = data.factors.size();
    if (k < 2)
        throw ConstructionError("tau_transducer needs at least two factors");
    auto rank = groups::ranks_from_order(data.index_order, k);
    Alphabet input = Alphabet::paired(data.c_alphabet);
    for (const auto& m : data.factors) {
        if (!m.sign_partition())
            throw ConstructionError("tau_transducer: factor machine without sign partition");
        input = input.merged_with(m.alphabet());
    }
    // Factor letters first, in factor order, then the C letters.
    Alphabet ordered;
    for (const auto& m : data.factors)
        ordered = ordered.merged_with(m.alphabet());
    input = ordered.merged_with(input);

    Alphabet output = Alphabet::paired({"t"});
    Word tt{output.at("t"), output.at("t")};
    Word tt_inv{output.at("t'"), output.at("t'")};
    TransducerBuilder b(input, output);
    State s0 = b.add_state();
    b.set_initial(s0);
    std::vector<State> offset(k);
    for (std::size_t i = 0; i < k; ++i) {
        const auto& m = data.factors[i];
        offset[i] = b.add_states(m.num_states());
        for (State s = 0; s < m.num_states(); ++s)
            for (const auto& e : m.edges(s)) {
                Symbol x = e.letter == kEpsilon ? kEpsilon : input.at(m.alphabet().id(e.letter));
                b.add_transition(offset[i] + s, x, offset[i] + e.to, {});
            }
    }
    State f = b.add_state();
    b.set_accepting(f);
    b.add_transition(s0, kEpsilon, f, {});
    for (std::size_t i = 0; i < k; ++i) {
        const auto& sign = *data.factors[i].sign_partition();
        b.add_transition(s0, kEpsilon, offset[i] + data.factors[i].initial(), {});
        for (std::size_t j = 0; j < k; ++j) {
            if (i == j)
                continue;
            State start = offset[j] + data.factors[j].initial();
            for (State s : sign.plus)
                b.add_transition(offset[i] + s, kEpsilon, start, rank[i] < rank[j] ? tt : Word{});
            for (State s : sign.minus)
                b.add_transition(offset[i] + s, kEpsilon, start, rank[i] > rank[j] ? tt_inv : Word{});
        }
        for (State s : sign.plus)
            b.add_transition(offset[i] + s, kEpsilon, f, {output.at("t")});
        for (State s : sign.minus)
            b.add_transition(offset[i] + s, kEpsilon, f, {output.at("t'")});
    }
    for (const auto& y : data.c_alphabet) {
        b.add_transition(f, input.at(y), f, {});
        b.add_transition(f, input.at(inverse_id(y)), f, {});
    }
    return std::move(b).build();
}

ConeLanguage onecounter_cone_from_tau(const Transducer& t, GroupPtr group, std::vector<std::string> relative_to,
                                      std::string provenance) {
    return make_cone(transducer_inverse_image_oc(t, fig3_onecounter()), std::move(group), std::move(relative_to),
                     std::move(provenance));
}

EmbeddedCone embed_cross_z(const Transducer& t, GroupPtr group, std::vector<std::string> relative_to,
                           std::string provenance, const std::string& z) {
    check_odd_outputs(t);
    const auto& input = t.input_alphabet();
    Alphabet alphabet = input.merged_with(Alphabet::paired({z}));
    Symbol z_up = alphabet.at(z);
    Symbol z_down = alphabet.at(inverse_id(z));
    NfaBuilder b(alphabet);
    const auto n = t.num_states();
    b.add_states(2 * n);
    State f = b.add_state();
    auto pair_state = [](State s, int dagger) { return static_cast<State>(2 * s + dagger); };
    b.set_initial(pair_state(t.initial(), 0));

    for (State s = 0; s < n; ++s)
        for (const auto& e : t.edges(s)) {
            Int value = output_value(t, e.output);
            Int k = floor_half(value);
            int eta = static_cast<int>(value - 2 * k);
            for (int dagger : {0, 1}) {
                int next;
                Int z_exp;
                if (dagger == 0) {
                    next = eta;
                    z_exp = -k;
                } else if (eta == 0) {
                    next = 1;
                    z_exp = -k;
                } else {
                    next = 0;
                    z_exp = -k - 1;
                }
                Word label;
                if (e.letter != kEpsilon)
                    label.push_back(alphabet.at(input.id(e.letter)));
                for (Int i = 0; i < (z_exp < 0 ? -z_exp : z_exp); ++i)
                    label.push_back(z_exp > 0 ? z_up : z_down);
                b.add_word_path(pair_state(s, dagger), label, pair_state(e.to, next));
            }
        }
    b.add_transition(f, z_up, f);
    b.add_transition(pair_state(t.initial(), 0), z_up, f);
    for (State a : t.accepting())
        for (int dagger : {0, 1})
            b.add_transition(pair_state(a, dagger), z_up, f);
    for (State a : t.accepting())
        b.set_accepting(pair_state(a, 1));
    b.set_accepting(f);

    std::vector<std::optional<std::pair<State, int>>> origin(b.num_states());
    for (State s = 0; s < n; ++s)
        for (int dagger : {0, 1})
            origin[pair_state(s, dagger)] = std::pair<State, int>{s, dagger};
    auto cone = make_cone(std::move(b).build(), std::move(group), std::move(relative_to), std::move(provenance));
    return {std::move(cone), std::move(origin), f, t.accepting()};
}

// ---- instances -------------------------------------------------------------

Nfa zz_pm_automaton() {
    return pm_of_letter("t");
}

TauData f2_tau_data() {
    return {{pm_of_letter("a"), pm_of_letter("b")}, {0, 1}, {}};
}

Transducer f2_tau_transducer() {
    return tau_transducer(f2_tau_data());
}

ConeLanguage f2_onecounter_cone() {
    return onecounter_cone_from_tau(f2_tau_transducer(), groups::f2_as_free_product(), {}, "f2_onecounter_cone{}");
}

EmbeddedCone embed_cross_z_f2() {
    return embed_cross_z(f2_tau_transducer(), groups::cross_z_group(groups::f2_as_free_product()), {},
                         "embed_cross_z_f2{}");
}

TauData bs_amalgam_tau_data(Int m, Int n) {
    check_amalgam_params(m, n);
    auto first = std::get<Nfa>(bs_affine_relative_cone(m).machine);
    auto second_b = std::get<Nfa>(bs_affine_relative_cone(n).machine);
    auto target = Alphabet::paired({"a", "c"});
    auto rename = Homomorphism::renaming(second_b.alphabet(), target, {{"b", "c"}, {"b'", "c'"}});
    auto second = hom_image(second_b, rename);
    return {{pm_automaton(first), pm_automaton(second)}, {0, 1}, {"a"}};
}

ConeLanguage bs_amalgam_onecounter_cone(Int m, Int n) {
    auto group = groups::bs_amalgam_group(m, n);
    auto rel = onecounter_cone_from_tau(tau_transducer(bs_amalgam_tau_data(m, n)), group, {"a"},
                                        "bs_amalgam_relative_onecounter" + amalgam_params(m, n));
    auto cone = cone_union_relative(rel, a_plus_cone());
    cone.provenance = "bs_amalgam_onecounter_cone" + amalgam_params(m, n);
    return cone;
}

ConeLanguage bs_amalgam_cross_z_cone(Int m, Int n) {
    auto group = groups::cross_z_group(groups::bs_amalgam_group(m, n));
    auto rel = embed_cross_z(tau_transducer(bs_amalgam_tau_data(m, n)), group, {"a"},
                             "bs_amalgam_relative_cross_z" + amalgam_params(m, n));
    auto cone = cone_union_relative(rel.cone, a_plus_cone());
    cone.provenance = "bs_amalgam_cross_z_cone" + amalgam_params(m, n);
    return cone;
}

ConeLanguage f2_by_z_onecounter_cone() {
    return lex_quotient_cone(f2_onecounter_cone().machine, letter_plus(Alphabet::paired({"s"}), "s"),
                             groups::free_by_cyclic_group(), "f2_by_z_onecounter_cone{}");
}

ConeLanguage f2_by_z_cross_z_cone() {
    return lex_quotient_cone(embed_cross_z_f2().cone.machine, letter_plus(Alphabet::paired({"s"}), "s"),
                             groups::cross_z_group(groups::free_by_cyclic_group()), "f2_by_z_cross_z_cone{}");
}

} // namespace conelang::cones
