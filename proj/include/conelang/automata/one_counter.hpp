// one_counter.hpp -- pushdown automata with a single stack symbol, as counters
#pragma once

#include <cstdint>
#include <set>
#include <span>
#include <vector>

#include "conelang/automata/nfa.hpp"

namespace conelang::automata {

/// Which counter values a transition may fire on.
enum class ZeroFlag : std::uint8_t { Zero, Positive };

inline constexpr int kMaxCounterDelta = 2;

struct OcEdge {
    Symbol letter; ///< kEpsilon for an epsilon-move
    ZeroFlag flag;
    State to;
    int delta;

    auto operator<=>(const OcEdge&) const = default;
};

/// A counter configuration of a run.
struct Config {
    State state;
    std::uint64_t counter;

    auto operator<=>(const Config&) const = default;
};

class OneCounter {
public:
    const Alphabet& alphabet() const { return alphabet_; }
    std::size_t num_states() const { return out_.size(); }
    State initial() const { return initial_; }
    std::uint64_t initial_counter() const { return initial_counter_; }
    const std::vector<State>& accepting() const { return accepting_; }
    bool is_accepting(State s) const { return accepting_flag_[s]; }
    /// Sorted by (letter, flag, target, delta).
    std::span<const OcEdge> edges(State s) const { return out_[s]; }
    std::size_t num_transitions() const;
    int max_abs_delta() const { return max_abs_delta_; }

private:
    friend class OneCounterBuilder;
    OneCounter() = default;

    Alphabet alphabet_;
    State initial_ = 0;
    std::uint64_t initial_counter_ = 0;
    std::vector<std::vector<OcEdge>> out_;
    std::vector<State> accepting_;
    std::vector<bool> accepting_flag_;
    int max_abs_delta_ = 0;
};

class OneCounterBuilder {
public:
    explicit OneCounterBuilder(Alphabet alphabet);

    State add_state();
    State add_states(std::size_t n);
    std::size_t num_states() const { return out_.size(); }
    const Alphabet& alphabet() const { return alphabet_; }

    void set_initial(State s);
    void set_initial_counter(std::uint64_t c) { initial_counter_ = c; }
    void add_transition(State from, Symbol letter, ZeroFlag flag, State to, int delta);
    void add_transition(State from, std::string_view letter, ZeroFlag flag, State to, int delta);
    /// One transition per flag. A negative delta only gets the positive one.
    void add_transition_any(State from, Symbol letter, State to, int delta);
    void add_transition_any(State from, std::string_view letter, State to, int delta);
    /// Word-labelled edge; the flag test and delta apply to the first letter.
    void add_word_path(State from, const Word& word, ZeroFlag flag, State to, int delta);
    void set_accepting(State s, bool accepting = true);

    /// Throws MachineError on a structural violation, including a zero-flag
    /// transition with negative delta or |delta| > kMaxCounterDelta.
    OneCounter build() &&;

private:
    void check_state(State s, const char* what) const;

    Alphabet alphabet_;
    std::optional<State> initial_;
    std::uint64_t initial_counter_ = 0;
    std::vector<std::vector<OcEdge>> out_;
    std::vector<bool> accepting_;
};

inline bool flag_allows(ZeroFlag flag, std::uint64_t counter) {
    return (flag == ZeroFlag::Zero) == (counter == 0);
}

/// Counter bound used by oc_accepts for a word of length n.
std::uint64_t counter_bound(const OneCounter& m, std::size_t n);

/// Closure of a configuration set under epsilon-moves, dropping
/// configurations whose counter exceeds `bound`. Sorted.
std::vector<Config> oc_epsilon_closure(const OneCounter& m, std::vector<Config> configs,
                                       std::uint64_t bound);
std::vector<Config> oc_step(const OneCounter& m, const std::vector<Config>& closed, Symbol letter,
                            std::uint64_t bound);

/// Breadth-first simulation over (state, counter) pairs.
/// Throws RejectedInputError if `w` leaves the alphabet.
bool oc_accepts(const OneCounter& m, const Word& w);
std::set<Word> oc_accepted_words(const OneCounter& m, std::size_t max_len);

/// The NFA as a one-counter machine that never touches its counter.
OneCounter lift(const Nfa& m);
/// Requires equal initial counters.
OneCounter oc_union(const OneCounter& a, const OneCounter& b);
OneCounter oc_concat(const Nfa& a, const OneCounter& b);
OneCounter oc_concat(const OneCounter& a, const Nfa& b);
OneCounter oc_intersect(const OneCounter& a, const Nfa& b);
OneCounter oc_with_alphabet(const OneCounter& a, const Alphabet& superset);

} // namespace conelang::automata
