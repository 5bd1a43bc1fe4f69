// transducer.hpp -- rational transducers and inverse images of languages
#pragma once

#include <set>
#include <span>
#include <vector>

#include "conelang/automata/nfa.hpp"
#include "conelang/automata/one_counter.hpp"

namespace conelang::automata {

struct TEdge {
    Symbol letter; ///< input letter, kEpsilon for an epsilon-move
    State to;
    Word output;   ///< over the output alphabet

    auto operator<=>(const TEdge&) const = default;
};

class Transducer {
public:
    const Alphabet& input_alphabet() const { return input_; }
    const Alphabet& output_alphabet() const { return output_; }
    std::size_t num_states() const { return out_.size(); }
    State initial() const { return initial_; }
    const std::vector<State>& accepting() const { return accepting_; }
    bool is_accepting(State s) const { return accepting_flag_[s]; }
    /// Sorted by (letter, target, output).
    std::span<const TEdge> edges(State s) const { return out_[s]; }
    std::size_t num_transitions() const;

private:
    friend class TransducerBuilder;
    Transducer() = default;

    Alphabet input_;
    Alphabet output_;
    State initial_ = 0;
    std::vector<std::vector<TEdge>> out_;
    std::vector<State> accepting_;
    std::vector<bool> accepting_flag_;
};

class TransducerBuilder {
public:
    TransducerBuilder(Alphabet input, Alphabet output);

    State add_state();
    State add_states(std::size_t n);
    std::size_t num_states() const { return out_.size(); }
    const Alphabet& input_alphabet() const { return input_; }
    const Alphabet& output_alphabet() const { return output_; }

    void set_initial(State s);
    void add_transition(State from, Symbol letter, State to, Word output);
    void set_accepting(State s, bool accepting = true);

    Transducer build() &&;

private:
    void check_state(State s, const char* what) const;

    Alphabet input_;
    Alphabet output_;
    std::optional<State> initial_;
    std::vector<std::vector<TEdge>> out_;
    std::vector<bool> accepting_;
};

/// x/x on every letter, single accepting state.
Transducer identity_transducer(const Alphabet& alphabet);

/// Outputs of all accepting runs on `w`. Runs take at most |states|
/// consecutive epsilon-moves, which bounds the output set.
std::set<Word> transducer_outputs(const Transducer& t, const Word& w);

/// {u : some accepting run on u outputs a word of `l`}.
Nfa transducer_inverse_image(const Transducer& t, const Nfa& l);
/// Same, for a one-counter language; the product inherits the counter.
OneCounter transducer_inverse_image_oc(const Transducer& t, const OneCounter& l);

} // namespace conelang::automata
