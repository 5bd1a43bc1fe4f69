// oracles.hpp -- reference semantics written against letter ids only
//
// Nothing here calls the library's group arithmetic: words are evaluated by
// hand (affine maps, lamplighter tapes, free reduction) so that test verdicts
// do not inherit library bugs.
#pragma once

#include <algorithm>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "conelang/automata/nfa.hpp"

namespace oracle {

using conelang::automata::Alphabet;
using conelang::automata::Nfa;
using conelang::automata::State;
using conelang::automata::Symbol;
using conelang::automata::Word;
using Ids = std::vector<std::string>;
using Rational = boost::multiprecision::cpp_rational;

inline Ids ids(const Alphabet& alphabet, const Word& w) {
    Ids out;
    for (auto s : w)
        out.push_back(alphabet.id(s));
    return out;
}

inline Word word(const Alphabet& alphabet, const Ids& letters) {
    Word w;
    for (const auto& id : letters)
        w.push_back(alphabet.at(id));
    return w;
}

inline std::string base(const std::string& id) {
    return id.back() == '\'' ? id.substr(0, id.size() - 1) : id;
}

inline int exponent(const std::string& id) {
    return id.back() == '\'' ? -1 : 1;
}

inline std::string inverse(const std::string& id) {
    return exponent(id) > 0 ? id + "'" : base(id);
}

inline Ids inverse(const Ids& w) {
    Ids out;
    for (auto it = w.rbegin(); it != w.rend(); ++it)
        out.push_back(inverse(*it));
    return out;
}

inline Ids concat(Ids u, const Ids& v) {
    u.insert(u.end(), v.begin(), v.end());
    return u;
}

/// Every word over `n` symbols of length <= max_len, shortest first.
inline std::vector<Word> all_words(std::size_t n, std::size_t max_len) {
    std::vector<Word> out{Word{}};
    std::size_t begin = 0;
    for (std::size_t len = 1; len <= max_len; ++len) {
        std::size_t end = out.size();
        for (std::size_t i = begin; i < end; ++i)
            for (Symbol s = 0; s < n; ++s) {
                Word w = out[i];
                w.push_back(s);
                out.push_back(std::move(w));
            }
        begin = end;
    }
    return out;
}

// ---- automata ---------------------------------------------------------------

inline std::set<State> close(const Nfa& m, std::set<State> states) {
    std::vector<State> todo(states.begin(), states.end());
    while (!todo.empty()) {
        State s = todo.back();
        todo.pop_back();
        for (const auto& e : m.edges(s))
            if (e.letter == conelang::automata::kEpsilon && states.insert(e.to).second)
                todo.push_back(e.to);
    }
    return states;
}

inline bool nfa_accepts(const Nfa& m, const Word& w) {
    auto current = close(m, {m.initial()});
    for (auto letter : w) {
        std::set<State> next;
        for (State s : current)
            for (const auto& e : m.edges(s))
                if (e.letter == letter)
                    next.insert(e.to);
        current = close(m, std::move(next));
    }
    return std::any_of(current.begin(), current.end(), [&](State s) { return m.is_accepting(s); });
}

/// Random epsilon-NFA over `alphabet` with up to `max_states` states.
inline Nfa random_nfa(std::mt19937& rng, const Alphabet& alphabet, int max_states) {
    std::uniform_int_distribution<int> n_states(1, max_states);
    std::bernoulli_distribution edge(0.35), eps(0.1), acc(0.4);
    conelang::automata::NfaBuilder b(alphabet);
    int n = n_states(rng);
    b.add_states(static_cast<std::size_t>(n));
    b.set_initial(0);
    for (State s = 0; s < static_cast<State>(n); ++s) {
        b.set_accepting(s, acc(rng));
        for (State t = 0; t < static_cast<State>(n); ++t) {
            for (Symbol x = 0; x < alphabet.size(); ++x)
                if (edge(rng))
                    b.add_transition(s, x, t);
            if (s != t && eps(rng))
                b.add_epsilon(s, t);
        }
    }
    return std::move(b).build();
}

// ---- groups -----------------------------------------------------------------

inline long count_balance(const Ids& w, const std::string& gen) {
    long n = 0;
    for (const auto& id : w)
        if (base(id) == gen)
            n += exponent(id);
    return n;
}

/// b^n a^m in the Klein bottle group, a b a^-1 = b^-1.
struct Klein {
    long n = 0, m = 0;
    bool operator<(const Klein& o) const { return std::tie(n, m) < std::tie(o.n, o.m); }
    bool operator==(const Klein& o) const { return n == o.n && m == o.m; }
};

inline Klein klein(const Ids& w) {
    Klein k;
    for (const auto& id : w) {
        if (base(id) == "a")
            k.m += exponent(id);
        else
            k.n += (k.m % 2 == 0 ? 1 : -1) * exponent(id);
    }
    return k;
}

/// The map x -> slope * x + shift of a word under a: x -> qx, b: x -> x + 1,
/// composed right to left.
struct Affine {
    Rational slope = 1, shift = 0;
    bool operator<(const Affine& o) const { return std::tie(slope, shift) < std::tie(o.slope, o.shift); }
    bool operator==(const Affine& o) const { return slope == o.slope && shift == o.shift; }
};

inline Affine affine(long q, const Ids& w) {
    Affine f;
    for (auto it = w.rbegin(); it != w.rend(); ++it) {
        if (base(*it) == "a") {
            Rational k = exponent(*it) > 0 ? Rational(q) : Rational(1) / q;
            f.slope *= k;
            f.shift *= k;
        } else {
            f.shift += exponent(*it);
        }
    }
    return f;
}

/// a-exponent sum, the Z coordinate of BS(1,q).
inline long a_exponent(const Ids& w) {
    return count_balance(w, "a");
}

/// g(0) > 0, or g(0) = 0 and g in <a>^+.
inline int affine_sign(long q, const Ids& w) {
    auto f = affine(q, w);
    if (f.shift != 0)
        return f.shift > 0 ? 1 : -1;
    long n = a_exponent(w);
    return n > 0 ? 1 : (n < 0 ? -1 : 0);
}

/// n > 0, or n = 0 and the fibre coordinate g(0) is positive.
inline int bs_lex_sign(long q, const Ids& w) {
    long n = a_exponent(w);
    if (n != 0)
        return n > 0 ? 1 : -1;
    auto f = affine(q, w);
    return f.shift > 0 ? 1 : (f.shift < 0 ? -1 : 0);
}

/// Lamplighter tape over Z: t moves the head, c adds 1 under the head.
struct Lamp {
    std::map<long, long> tape;
    long head = 0;
    bool operator<(const Lamp& o) const { return std::tie(tape, head) < std::tie(o.tape, o.head); }
    bool operator==(const Lamp& o) const { return tape == o.tape && head == o.head; }
};

inline Lamp lamp(const Ids& w) {
    Lamp l;
    for (const auto& id : w) {
        if (base(id) == "t") {
            l.head += exponent(id);
        } else {
            long& cell = l.tape[l.head];
            cell += exponent(id);
            if (cell == 0)
                l.tape.erase(l.head);
        }
    }
    return l;
}

/// Leading coefficient of the tape, or the head when the tape is blank.
inline int leadcoef_sign(const Ids& w) {
    auto l = lamp(w);
    if (!l.tape.empty())
        return l.tape.rbegin()->second > 0 ? 1 : -1;
    return l.head > 0 ? 1 : (l.head < 0 ? -1 : 0);
}

inline Ids free_reduce(const Ids& w) {
    Ids out;
    for (const auto& id : w) {
        if (!out.empty() && out.back() == inverse(id))
            out.pop_back();
        else
            out.push_back(id);
    }
    return out;
}

inline bool is_reduced(const Ids& w) {
    return free_reduce(w).size() == w.size();
}

/// Syllable count on <a> * <b> with <a> below <b>: positive minus negative
/// syllables, plus a -> b steps, minus b -> a steps. Letters other than
/// a, b are ignored.
inline long free_tau(const Ids& w) {
    Ids letters;
    for (const auto& id : w)
        if (base(id) == "a" || base(id) == "b")
            letters.push_back(id);
    auto r = free_reduce(letters);
    long tau = 0;
    for (std::size_t i = 0; i < r.size(); ++i) {
        bool starts = i == 0 || base(r[i - 1]) != base(r[i]);
        if (!starts)
            continue;
        tau += exponent(r[i]);
        if (i > 0)
            tau += base(r[i]) == "b" ? 1 : -1;
    }
    return tau;
}

inline long balance(const Ids& w, const std::string& up = "t") {
    return count_balance(w, up);
}

template <class T>
std::string show(const T& x) {
    std::ostringstream os;
    os << x;
    return os.str();
}

inline std::string join(const Ids& w) {
    std::string s;
    for (const auto& id : w)
        s += (s.empty() ? "" : " ") + id;
    return s.empty() ? "ε" : s;
}

} // namespace oracle
