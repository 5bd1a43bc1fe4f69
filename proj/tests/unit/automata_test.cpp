#include <doctest.h>

#include <random>

#include "conelang/automata/enumerate.hpp"
#include "conelang/automata/one_counter.hpp"
#include "conelang/automata/serialize.hpp"
#include "conelang/automata/transducer.hpp"
#include "conelang/cones/constructions.hpp"
#include "conelang/cones/tau_cones.hpp"
#include "conelang/errors.hpp"
#include "support/oracles.hpp"

using namespace conelang;
using namespace conelang::automata;

namespace {

const Alphabet kT = Alphabet::paired({"t"});

Word w_(const Alphabet& a, const char* text) {
    return parse_word(a, text);
}

std::set<Word> words_of(const Alphabet& a, std::initializer_list<const char*> texts) {
    std::set<Word> out;
    for (auto t : texts)
        out.insert(w_(a, t));
    return out;
}

} // namespace

TEST_CASE("alphabet pairing and word syntax") {
    CHECK(kT.size() == 2);
    CHECK(kT.inverse(kT.at("t")) == kT.at("t'"));
    CHECK(kT.fully_paired());
    CHECK(format_word(kT, {}) == "ε");
    CHECK(parse_word(kT, "ε").empty());
    CHECK(format_word(kT, w_(kT, "t t' t")) == "t t' t");
    CHECK_THROWS_AS(parse_word(kT, "t x"), RejectedInputError);
    CHECK_THROWS_AS(Alphabet({{"a", std::string("b")}, {"b", std::nullopt}}), AlphabetError);
    CHECK(formal_inverse(kT, w_(kT, "t t t'")) == w_(kT, "t t' t'"));
    auto ab = Alphabet::paired({"a", "b"});
    CHECK(translate(w_(kT, "t'"), kT, kT.merged_with(ab)) == w_(kT, "t'"));
    CHECK_THROWS_AS(formal_inverse(Alphabet::plain({"x"}), Word{0}), AlphabetError);
}

TEST_CASE("Fig. 2 automaton membership") {
    auto m = cones::fig2_automaton();
    CHECK(m.num_states() == 3);
    CHECK(accepts(m, w_(kT, "t t' t'")));
    CHECK_FALSE(accepts(m, w_(kT, "t' t' t'")));
    CHECK(accepts(m, {}));
    CHECK_THROWS_AS(accepts(m, Word{7}), RejectedInputError);
    // brute force over every word of length <= 2
    std::set<Word> expected;
    for (const auto& w : oracle::all_words(2, 2))
        if (oracle::nfa_accepts(m, w))
            expected.insert(w);
    CHECK(accepted_words(m, 2) == expected);
    CHECK(expected.size() == 7);
}

TEST_CASE("accepted_words on basic languages") {
    CHECK(accepted_words(letter_plus(kT, "t"), 3) == words_of(kT, {"t", "t t", "t t t"}));
    CHECK(accepted_words(letter_plus(kT, "t"), 0).empty());
    CHECK(accepted_words(letter_star(kT, "t"), 0) == std::set<Word>{Word{}});
    CHECK(accepted_words(empty_language(kT), 4).empty());
    CHECK(accepted_words(epsilon_language(kT), 4) == std::set<Word>{Word{}});
    CHECK(accepted_words(universal_language(kT), 2).size() == 7);
}

TEST_CASE("closure operations, spec examples") {
    auto t_or_tt = union_of(word_language(kT, w_(kT, "t")), word_language(kT, w_(kT, "t t")));
    CHECK(accepted_words(reverse(t_or_tt), 4) == words_of(kT, {"t", "t t"}));

    auto xy = Alphabet::paired({"x", "y"});
    auto xyx = word_language(xy, w_(xy, "x y x"));
    auto y_only = Alphabet::paired({"y"});
    auto erase = Homomorphism::deleting(xy, y_only, {"x", "x'"});
    CHECK(accepted_words(hom_image(xyx, erase), 4) == words_of(y_only, {"y"}));

    auto xt = Alphabet::paired({"x", "t"});
    auto pull = inverse_hom(letter_plus(kT, "t"), Homomorphism::deleting(xt, kT, {"x", "x'"}));
    CHECK(accepts(pull, w_(xt, "x t x t")));
    CHECK_FALSE(accepts(pull, w_(xt, "x t t'")));
    CHECK_FALSE(accepts(pull, w_(xt, "x")));
}

TEST_CASE("formal inverse") {
    CHECK(accepted_words(formal_inverse(letter_plus(kT, "t")), 3) == words_of(kT, {"t'", "t' t'", "t' t' t'"}));
    CHECK(accepted_words(formal_inverse(empty_language(kT)), 4).empty());
    CHECK(accepted_words(formal_inverse(word_language(kT, w_(kT, "t t t'"))), 4) == words_of(kT, {"t t' t'"}));
    CHECK_THROWS_AS(formal_inverse(letter_plus(Alphabet::plain({"x"}), "x")), AlphabetError);
}

TEST_CASE("random machines: determinize, double inverse, epsilon removal") {
    std::mt19937 rng(7);
    auto universe = oracle::all_words(kT.size(), 8);
    for (int round = 0; round < 25; ++round) {
        auto m = oracle::random_nfa(rng, kT, 5);
        auto d = determinize(m);
        auto ff = formal_inverse(formal_inverse(m));
        auto ne = remove_epsilon(m);
        auto tr = trim(m);
        CHECK(d.is_deterministic());
        CHECK_FALSE(ne.has_epsilon_moves());
        for (const auto& w : universe) {
            bool expected = oracle::nfa_accepts(m, w);
            REQUIRE(accepts(m, w) == expected);
            REQUIRE(accepts(d, w) == expected);
            REQUIRE(accepts(ff, w) == expected);
            REQUIRE(accepts(ne, w) == expected);
            REQUIRE(accepts(tr, w) == expected);
        }
    }
}

TEST_CASE("epsilon cycles terminate") {
    NfaBuilder b(kT);
    b.add_states(3);
    b.set_initial(0);
    b.add_epsilon(0, 1);
    b.add_epsilon(1, 2);
    b.add_epsilon(2, 0);
    b.add_transition(2, "t", 2);
    b.set_accepting(1);
    auto m = std::move(b).build();
    CHECK(accepts(m, {}));
    CHECK(accepts(m, w_(kT, "t t t")));
    CHECK_FALSE(accepts(m, w_(kT, "t'")));
    CHECK(accepted_words(m, 3).size() == 4);
}

TEST_CASE("builder invariants") {
    NfaBuilder b(kT);
    b.add_state();
    CHECK_THROWS_AS(b.add_transition(0, "t", 5), MachineError);
    CHECK_THROWS_AS(b.add_transition(0, "q", 0), AlphabetError);

    NfaBuilder sign(kT);
    sign.add_states(2);
    sign.set_initial(0);
    sign.set_accepting(1);
    sign.set_sign_partition({1}, {1});
    CHECK_THROWS_AS(std::move(sign).build(), MachineError);

    OneCounterBuilder oc(kT);
    oc.add_state();
    oc.set_initial(0);
    CHECK_THROWS_AS(oc.add_transition(0, "t", ZeroFlag::Zero, 0, -1), MachineError);

    OneCounterBuilder big(kT);
    big.add_state();
    big.set_initial(0);
    CHECK_THROWS_AS(big.add_transition(0, "t", ZeroFlag::Positive, 0, 3), MachineError);
}

TEST_CASE("Fig. 3 one-counter machine") {
    auto m = cones::fig3_onecounter();
    CHECK(oc_accepts(m, w_(kT, "t t t'")));
    CHECK_FALSE(oc_accepts(m, {}));
    CHECK(oc_accepts(m, w_(kT, "t' t t")));
    CHECK_FALSE(oc_accepts(m, w_(kT, "t t'")));
    CHECK_THROWS_AS(oc_accepts(m, Word{9}), RejectedInputError);
    // strictly more t than t'
    for (const auto& w : oracle::all_words(2, 9))
        REQUIRE(oc_accepts(m, w) == (oracle::balance(oracle::ids(kT, w)) > 0));
}

TEST_CASE("L_quot one-counter machine") {
    auto ab = Alphabet::paired({"a", "b"});
    auto m = cones::lquot_onecounter();
    CHECK(oc_accepts(m, w_(ab, "a' a' b b b a a")));
    CHECK(oc_accepts(m, w_(ab, "a' b' a")));
    CHECK(oc_accepts(m, {}));
    CHECK_FALSE(oc_accepts(m, w_(ab, "a' b a a")));
    CHECK_FALSE(oc_accepts(m, w_(ab, "a' b b' a")));
    CHECK_FALSE(oc_accepts(m, w_(ab, "a b a'")));
}

TEST_CASE("one-counter closure against the NFA and counter semantics") {
    std::mt19937 rng(11);
    auto fig3 = cones::fig3_onecounter();
    auto universe = oracle::all_words(2, 7);
    for (int round = 0; round < 10; ++round) {
        auto n = oracle::random_nfa(rng, kT, 3);
        auto lifted = lift(n);
        auto u = oc_union(fig3, lift(n));
        auto i = oc_intersect(fig3, n);
        auto c = oc_concat(n, fig3);
        for (const auto& w : universe) {
            bool in_n = oracle::nfa_accepts(n, w);
            bool in_f = oracle::balance(oracle::ids(kT, w)) > 0;
            REQUIRE(oc_accepts(lifted, w) == in_n);
            REQUIRE(oc_accepts(u, w) == (in_n || in_f));
            REQUIRE(oc_accepts(i, w) == (in_n && in_f));
            bool split = false;
            for (std::size_t k = 0; k <= w.size() && !split; ++k)
                split = oracle::nfa_accepts(n, Word(w.begin(), w.begin() + k)) &&
                        oracle::balance(oracle::ids(kT, Word(w.begin() + k, w.end()))) > 0;
            REQUIRE(oc_accepts(c, w) == split);
        }
    }
}

TEST_CASE("transducers") {
    auto id = identity_transducer(kT);
    CHECK(transducer_outputs(id, w_(kT, "t t'")) == std::set<Word>{w_(kT, "t t'")});

    auto f2 = cones::f2_tau_transducer();
    const auto& in = f2.input_alphabet();
    const auto& out = f2.output_alphabet();
    CHECK(transducer_outputs(f2, w_(in, "a")) == std::set<Word>{w_(out, "t")});
    auto ab = transducer_outputs(f2, w_(in, "a b"));
    REQUIRE(ab.size() == 1);
    CHECK(oracle::balance(oracle::ids(out, *ab.begin())) == 3);
    for (const auto& v : transducer_outputs(f2, w_(in, "a b'")))
        CHECK(oracle::balance(oracle::ids(out, v)) == 1);

    TransducerBuilder dead(kT, kT);
    dead.add_state();
    dead.set_initial(0);
    dead.add_transition(0, kT.at("t"), 0, {});
    auto none = std::move(dead).build();
    CHECK(transducer_outputs(none, w_(kT, "t")).empty());
    CHECK(accepted_words(transducer_inverse_image(none, universal_language(kT)), 4).empty());

    // identity pullback of an NFA and of Fig. 3
    auto l = cones::fig2_automaton();
    auto pulled = transducer_inverse_image(id, l);
    auto fig3 = cones::fig3_onecounter();
    auto pulled_oc = transducer_inverse_image_oc(id, fig3);
    for (const auto& w : oracle::all_words(2, 8)) {
        REQUIRE(accepts(pulled, w) == accepts(l, w));
        REQUIRE(oc_accepts(pulled_oc, w) == oc_accepts(fig3, w));
    }

    // a transducer that always outputs the empty word pulls Fig. 3 back to nothing
    TransducerBuilder mute(kT, kT);
    mute.add_state();
    mute.set_initial(0);
    mute.set_accepting(0);
    mute.add_transition(0, kT.at("t"), 0, {});
    mute.add_transition(0, kT.at("t'"), 0, {});
    auto silent = transducer_inverse_image_oc(std::move(mute).build(), fig3);
    CHECK(oc_accepted_words(silent, 6).empty());
}

TEST_CASE("F2 tau transducer preimage of the single output t") {
    auto f2 = cones::f2_tau_transducer();
    const auto& in = f2.input_alphabet();
    auto just_t = word_language(f2.output_alphabet(), w_(f2.output_alphabet(), "t"));
    auto pre = transducer_inverse_image(f2, just_t);
    for (const auto& w : oracle::all_words(in.size(), 4)) {
        auto letters = oracle::ids(in, w);
        if (!oracle::is_reduced(letters))
            continue;
        bool single = false;
        for (const auto& v : transducer_outputs(f2, w))
            single = single || v == w_(f2.output_alphabet(), "t");
        REQUIRE(accepts(pre, w) == single);
        if (single)
            REQUIRE(oracle::free_tau(letters) == 1);
    }
}

TEST_CASE("machine JSON round trip and canonical DOT") {
    std::vector<AnyMachine> machines{cones::fig2_automaton(), cones::fig3_onecounter(), cones::lquot_onecounter(),
                                     cones::zz_pm_automaton(), cones::f2_tau_transducer()};
    for (const auto& m : machines) {
        auto j = to_json(m);
        auto back = machine_from_json(j);
        CHECK(dump(to_json(back)) == dump(j));
        CHECK(to_dot(back, "m") == to_dot(m, "m"));
    }
    auto j = to_json(AnyMachine{cones::fig2_automaton()});
    std::vector<std::string> keys;
    for (const auto& [k, v] : j.items())
        keys.push_back(k);
    CHECK(keys == std::vector<std::string>{"kind", "alphabet", "states", "initial", "accepting", "transitions"});
    CHECK(dump(j).back() == '\n');
    auto broken = j;
    broken["initial"] = 17;
    CHECK_THROWS_AS(machine_from_json(broken), MachineError);
    CHECK(display_letter("a'") == "a⁻¹");
}
