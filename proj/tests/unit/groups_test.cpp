#include <doctest.h>

#include <random>

#include "conelang/errors.hpp"
#include "conelang/groups/ball.hpp"
#include "conelang/groups/group.hpp"
#include "conelang/groups/tau.hpp"
#include "support/oracles.hpp"

using namespace conelang;
using namespace conelang::groups;
using automata::parse_word;
using automata::Word;

namespace {

Element ev(const Group& g, const char* text) {
    return g.evaluate(parse_word(g.alphabet(), text));
}

std::vector<GroupPtr> test_groups() {
    return {free_abelian_group({"t"}),
            free_abelian_group({"x", "y"}),
            free_group({"a", "b"}),
            klein_bottle_group(),
            bs_group(2),
            bs_group(-3),
            wreath_zz_group(),
            f2_as_free_product(),
            cross_z_group(f2_as_free_product()),
            bs_amalgam_group(2, 3),
            free_by_cyclic_group()};
}

Word random_word(std::mt19937& rng, const automata::Alphabet& a, std::size_t len) {
    std::uniform_int_distribution<automata::Symbol> letter(0, static_cast<automata::Symbol>(a.size() - 1));
    Word w(len);
    for (auto& s : w)
        s = letter(rng);
    return w;
}

} // namespace

TEST_CASE("evaluation examples") {
    auto bs2 = bs_group(2);
    CHECK(ev(*bs2, "a b a'") == ev(*bs2, "b b"));
    CHECK(bs2->invert(ev(*bs2, "b")) == ev(*bs2, "b'"));
    CHECK(bs2->format(ev(*bs2, "b'")) == "(-1, 0)");
    auto wr = wreath_zz_group();
    CHECK(wr->format(ev(*wr, "t c t' c")) == "(X + 1, 0)");
    CHECK(wr->format(ev(*wr, "t c t' c' c'")) == "(X - 2, 0)");
    auto k = klein_bottle_group();
    CHECK(k->multiply(ev(*k, "b a"), ev(*k, "b")) == ev(*k, "a"));
    for (const auto& g : test_groups()) {
        CHECK(g->is_identity(g->evaluate({})));
        auto x = g->evaluate(Word{0});
        CHECK(g->multiply(x, g->identity()) == x);
    }
    CHECK_THROWS_AS(bs_group(0), GroupError);
    CHECK_THROWS_AS(bs2->evaluate(Word{17}), AlphabetError);
}

TEST_CASE("defining relators evaluate to the identity") {
    auto bs2 = bs_group(2);
    auto bs3 = bs_group(-3);
    auto k = klein_bottle_group();
    auto wr = wreath_zz_group();
    auto z2 = free_abelian_group({"x", "y"});
    auto am = bs_amalgam_group(2, 3);
    CHECK(bs2->is_identity(ev(*bs2, "a b a' b' b'")));
    CHECK(bs3->is_identity(ev(*bs3, "a b a' b b b")));
    CHECK(k->is_identity(ev(*k, "a b a' b")));
    CHECK(wr->is_identity(ev(*wr, "t c t' c t c' t' c'")));
    CHECK(wr->is_identity(ev(*wr, "t t c t' t' c t t c' t' t' c'")));
    CHECK(z2->is_identity(ev(*z2, "x y x' y'")));
    CHECK(am->is_identity(ev(*am, "a b a' b' b'")));
    CHECK(am->is_identity(ev(*am, "a c a' c' c' c'")));
}

TEST_CASE("evaluation is a homomorphism and the group axioms hold") {
    std::mt19937 rng(3);
    for (const auto& g : test_groups()) {
        CAPTURE(g->name());
        const auto& a = g->alphabet();
        auto words = oracle::all_words(a.size(), 3);
        if (a.size() > 4)
            words = oracle::all_words(a.size(), 2);
        for (const auto& u : words)
            for (const auto& v : words) {
                Word uv = u;
                uv.insert(uv.end(), v.begin(), v.end());
                REQUIRE(g->evaluate(uv) == g->multiply(g->evaluate(u), g->evaluate(v)));
            }
        for (int i = 0; i < 200; ++i) {
            auto wx = random_word(rng, a, 8);
            auto x = g->evaluate(wx);
            auto y = g->evaluate(random_word(rng, a, 8));
            auto z = g->evaluate(random_word(rng, a, 8));
            REQUIRE(g->multiply(g->multiply(x, y), z) == g->multiply(x, g->multiply(y, z)));
            REQUIRE(g->is_identity(g->multiply(x, g->invert(x))));
            REQUIRE(g->evaluate(automata::formal_inverse(a, wx)) == g->invert(x));
        }
    }
}

TEST_CASE("evaluation matches hand-written semantics") {
    std::mt19937 rng(5);
    auto bs2 = bs_group(2), bsm3 = bs_group(-3), k = klein_bottle_group(), wr = wreath_zz_group();
    auto f2 = free_group({"a", "b"});
    for (int i = 0; i < 400; ++i) {
        auto len = static_cast<std::size_t>(i % 11);
        auto w = random_word(rng, bs2->alphabet(), len);
        auto ids = oracle::ids(bs2->alphabet(), w);
        // equal elements have equal affine maps and conversely
        auto v = random_word(rng, bs2->alphabet(), len);
        auto vids = oracle::ids(bs2->alphabet(), v);
        REQUIRE((bs2->evaluate(w) == bs2->evaluate(v)) == (oracle::affine(2, ids) == oracle::affine(2, vids)));
        REQUIRE((bsm3->evaluate(w) == bsm3->evaluate(v)) == (oracle::affine(-3, ids) == oracle::affine(-3, vids)));
        REQUIRE((k->evaluate(w) == k->evaluate(v)) == (oracle::klein(ids) == oracle::klein(vids)));
        auto ww = random_word(rng, wr->alphabet(), len);
        auto wv = random_word(rng, wr->alphabet(), len);
        REQUIRE((wr->evaluate(ww) == wr->evaluate(wv)) ==
                (oracle::lamp(oracle::ids(wr->alphabet(), ww)) == oracle::lamp(oracle::ids(wr->alphabet(), wv))));
        REQUIRE((f2->evaluate(w) == f2->evaluate(v)) ==
                (oracle::free_reduce(ids) == oracle::free_reduce(vids)));
    }
}

TEST_CASE("balls") {
    CHECK(ball(*free_abelian_group({"t"}), 3).size() == 7);
    CHECK(ball(*free_group({"a", "b"}), 2).size() == 17);
    CHECK(ball(*klein_bottle_group(), 1).size() == 5);
    CHECK(ball(*free_abelian_group({"x", "y"}), 3).size() == 25);
    for (const auto& g : test_groups()) {
        CAPTURE(g->name());
        std::size_t previous = 0;
        for (std::size_t r = 0; r <= 3; ++r) {
            auto b = ball(*g, r);
            auto bigger = ball(*g, r + 1);
            REQUIRE(b.size() >= previous);
            previous = b.size();
            for (std::size_t i = 0; i < b.size(); ++i) {
                REQUIRE(bigger.contains(b.elements[i]));
                REQUIRE(g->evaluate(b.witnesses[i]) == b.elements[i]);
                REQUIRE(b.witnesses[i].size() <= r);
            }
        }
    }
    // witnesses are geodesic: nothing shorter evaluates to a sphere element
    auto k = klein_bottle_group();
    auto b3 = ball(*k, 3);
    auto b2 = ball(*k, 2);
    for (std::size_t i = 0; i < b3.size(); ++i)
        REQUIRE((b3.length(i) == 3) == !b2.contains(b3.elements[i]));
}

TEST_CASE("tau on F2") {
    auto g = f2_as_free_product();
    CHECK(f2_tau(ev(*g, "a")) == 1);
    CHECK(f2_tau(g->identity()) == 0);
    CHECK(f2_tau(ev(*g, "a b")) == 3);
    CHECK(f2_tau(ev(*g, "b' a")) == -1);
    CHECK(f2_tau(ev(*g, "a b'")) == 1);
    auto b = ball(*g, 4);
    for (std::size_t i = 0; i < b.size(); ++i)
        REQUIRE(f2_tau(b.elements[i]) == oracle::free_tau(oracle::ids(g->alphabet(), b.witnesses[i])));
    auto fw = free_group({"a", "b"});
    for (const auto& w : oracle::all_words(4, 4))
        REQUIRE(free_word_tau(std::get<FreeWord>(fw->evaluate(w).v)) == oracle::free_tau(oracle::ids(fw->alphabet(), w)));
}

TEST_CASE("tau rejects a syllable its order calls trivial") {
    auto g = f2_as_free_product();
    const auto& fp = static_cast<const FreeProductGroup&>(*g);
    std::vector<SignOracle> broken{cyclic_sign, [](const Element&) { return 0; }};
    CHECK_THROWS_AS(tau_value(fp, broken, {0, 1}, ev(*g, "a b")), GroupError);
    CHECK(tau_value(fp, broken, {0, 1}, ev(*g, "a a")) == 1);
}

TEST_CASE("tau on the BS amalgam is odd off the identity") {
    auto g = bs_amalgam_group(2, 3);
    const auto& am = static_cast<const BsAmalgamGroup&>(*g);
    for (const auto& x : ball(*g, 4).elements) {
        auto t = tau_value(am, {0, 1}, x);
        if (am.in_subgroup(x, {"a"}))
            REQUIRE(t == 0);
        else
            REQUIRE(t % 2 != 0);
    }
}
