// nfa.hpp -- nondeterministic finite automata with epsilon-moves
#pragma once

#include <optional>
#include <set>
#include <span>
#include <vector>

#include "conelang/automata/alphabet.hpp"

namespace conelang::automata {

struct Edge {
    Symbol letter; ///< kEpsilon for an epsilon-move
    State to;

    auto operator<=>(const Edge&) const = default;
};

/// Accepting states split into a positive and a negative half.
struct SignPartition {
    std::vector<State> plus;
    std::vector<State> minus;

    bool operator==(const SignPartition&) const = default;
};

/// Immutable epsilon-NFA (S, X, delta, s0, A). Build one with NfaBuilder.
class Nfa {
public:
    const Alphabet& alphabet() const { return alphabet_; }
    std::size_t num_states() const { return out_.size(); }
    State initial() const { return initial_; }
    const std::vector<State>& accepting() const { return accepting_; }
    bool is_accepting(State s) const { return accepting_flag_[s]; }
    const std::optional<SignPartition>& sign_partition() const { return sign_; }
    /// Outgoing edges of `s`, sorted by (letter, target).
    std::span<const Edge> edges(State s) const { return out_[s]; }
    std::size_t num_transitions() const;
    bool has_epsilon_moves() const;
    /// No epsilon-moves and at most one target per (state, letter).
    bool is_deterministic() const;

private:
    friend class NfaBuilder;
    Nfa() = default;

    Alphabet alphabet_;
    State initial_ = 0;
    std::vector<std::vector<Edge>> out_;
    std::vector<State> accepting_;
    std::vector<bool> accepting_flag_;
    std::optional<SignPartition> sign_;
};

class NfaBuilder {
public:
    explicit NfaBuilder(Alphabet alphabet);

    State add_state();
    /// Adds `n` states and returns the id of the first.
    State add_states(std::size_t n);
    std::size_t num_states() const { return out_.size(); }
    const Alphabet& alphabet() const { return alphabet_; }

    void set_initial(State s);
    void add_transition(State from, Symbol letter, State to);
    void add_transition(State from, std::string_view letter, State to);
    void add_epsilon(State from, State to) { add_transition(from, kEpsilon, to); }
    /// Edge labelled by a word: expanded into a chain through fresh states.
    /// The empty word becomes an epsilon-move.
    void add_word_path(State from, const Word& word, State to);
    void set_accepting(State s, bool accepting = true);
    void set_sign_partition(std::vector<State> plus, std::vector<State> minus);

    /// Validates the structural invariants and freezes the machine.
    /// Throws MachineError on violation.
    Nfa build() &&;

private:
    void check_state(State s, const char* what) const;

    Alphabet alphabet_;
    std::optional<State> initial_;
    std::vector<std::vector<Edge>> out_;
    std::vector<bool> accepting_;
    std::optional<SignPartition> sign_;
};

/// A monoid homomorphism source* -> target*, given letter by letter.
class Homomorphism {
public:
    Homomorphism(Alphabet source, Alphabet target, std::vector<Word> images);
    /// Identity on letters shared with `target`, empty word on the letters
    /// listed in `deleted`.
    static Homomorphism deleting(const Alphabet& source, const Alphabet& target,
                                 const std::vector<std::string>& deleted);
    /// Letter-to-letter renaming by id; letters missing from `renames` keep
    /// their id.
    static Homomorphism renaming(const Alphabet& source, const Alphabet& target,
                                 const std::vector<std::pair<std::string, std::string>>& renames);

    const Alphabet& source() const { return source_; }
    const Alphabet& target() const { return target_; }
    const Word& image(Symbol s) const { return images_.at(s); }
    Word apply(const Word& word) const;

private:
    Alphabet source_;
    Alphabet target_;
    std::vector<Word> images_;
};

// ---- simulation -----------------------------------------------------------

/// Sorted epsilon-closure of a state set.
std::vector<State> epsilon_closure(const Nfa& m, std::vector<State> states);
/// Epsilon-closed successor set after reading `letter`.
std::vector<State> step(const Nfa& m, const std::vector<State>& closed, Symbol letter);
/// Epsilon-closed set of states reachable from the initial state on `w`.
/// Throws RejectedInputError if `w` leaves the alphabet.
std::vector<State> reachable_states(const Nfa& m, const Word& w);

bool accepts(const Nfa& m, const Word& w);
/// Acceptance restricted to the plus / minus half of the sign partition.
bool accepts_plus(const Nfa& m, const Word& w);
bool accepts_minus(const Nfa& m, const Word& w);

/// Every accepted word of length <= max_len, each exactly once.
std::set<Word> accepted_words(const Nfa& m, std::size_t max_len);

// ---- basic languages --------------------------------------------------------

Nfa empty_language(const Alphabet& alphabet);
Nfa epsilon_language(const Alphabet& alphabet);
/// {x}^+ for a single letter.
Nfa letter_plus(const Alphabet& alphabet, std::string_view letter);
/// {x}^* for a single letter.
Nfa letter_star(const Alphabet& alphabet, std::string_view letter);
/// The single word `w`.
Nfa word_language(const Alphabet& alphabet, const Word& w);
/// X^* over the whole alphabet, or over the listed letters only.
Nfa universal_language(const Alphabet& alphabet);
Nfa universal_language(const Alphabet& alphabet, const std::vector<std::string>& letters);

// ---- closure operations -----------------------------------------------------

/// Binary operations work over the merged alphabet of their operands.
Nfa union_of(const Nfa& a, const Nfa& b);
Nfa concat(const Nfa& a, const Nfa& b);
Nfa kleene_star(const Nfa& a);
Nfa kleene_plus(const Nfa& a);
Nfa intersect(const Nfa& a, const Nfa& b);
Nfa reverse(const Nfa& a);
/// Subset construction; the result is complete over the alphabet (it may
/// contain a sink state) and epsilon-free.
Nfa determinize(const Nfa& a);
Nfa complement(const Nfa& a);
/// Drops states that are unreachable or cannot reach acceptance. The initial
/// state is always kept.
Nfa trim(const Nfa& a);
/// Equivalent machine without epsilon-moves, trimmed. Sign partitions carry
/// over only when no epsilon path joins a state to both halves.
Nfa remove_epsilon(const Nfa& a);
Nfa hom_image(const Nfa& a, const Homomorphism& h);
Nfa inverse_hom(const Nfa& a, const Homomorphism& h);
/// {xn^-1 ... x1^-1 : x1...xn accepted}. Throws AlphabetError when some
/// letter has no inverse.
Nfa formal_inverse(const Nfa& a);
/// Same machine re-indexed over a larger alphabet.
Nfa with_alphabet(const Nfa& a, const Alphabet& superset);
/// Same machine with a different accepting set (sign partition dropped).
Nfa with_accepting(const Nfa& a, const std::vector<State>& accepting);

} // namespace conelang::automata
