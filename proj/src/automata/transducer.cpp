#include "conelang/automata/transducer.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <tuple>

#include "conelang/errors.hpp"

namespace conelang::automata {

std::size_t Transducer::num_transitions() const {
    std::size_t n = 0;
    for (const auto& edges : out_)
        n += edges.size();
    return n;
}

TransducerBuilder::TransducerBuilder(Alphabet input, Alphabet output)
    : input_(std::move(input)), output_(std::move(output)) {}

State TransducerBuilder::add_state() {
    out_.emplace_back();
    accepting_.push_back(false);
    return static_cast<State>(out_.size() - 1);
}

State TransducerBuilder::add_states(std::size_t n) {
    auto first = static_cast<State>(out_.size());
    for (std::size_t i = 0; i < n; ++i)
        add_state();
    return first;
}

void TransducerBuilder::check_state(State s, const char* what) const {
    if (s >= out_.size())
        throw MachineError(std::string(what) + " refers to undeclared state " + std::to_string(s));
}

void TransducerBuilder::set_initial(State s) {
    check_state(s, "initial state");
    initial_ = s;
}

void TransducerBuilder::add_transition(State from, Symbol letter, State to, Word output) {
    check_state(from, "transition source");
    check_state(to, "transition target");
    if (letter != kEpsilon && letter >= input_.size())
        throw RejectedInputError("transition letter " + std::to_string(letter) + " outside input alphabet");
    for (Symbol y : output)
        if (y >= output_.size())
            throw MachineError("transducer output leaves the output alphabet");
    out_[from].push_back({letter, to, std::move(output)});
}

void TransducerBuilder::set_accepting(State s, bool accepting) {
    check_state(s, "accepting state");
    accepting_[s] = accepting;
}

Transducer TransducerBuilder::build() && {
    if (out_.empty())
        throw MachineError("transducer has no states");
    if (!initial_)
        throw MachineError("transducer has no initial state");
    Transducer t;
    t.input_ = std::move(input_);
    t.output_ = std::move(output_);
    t.initial_ = *initial_;
    t.out_ = std::move(out_);
    for (auto& edges : t.out_) {
        std::sort(edges.begin(), edges.end());
        edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    }
    t.accepting_flag_ = std::move(accepting_);
    for (State s = 0; s < t.accepting_flag_.size(); ++s)
        if (t.accepting_flag_[s])
            t.accepting_.push_back(s);
    return t;
}

Transducer identity_transducer(const Alphabet& alphabet) {
    TransducerBuilder b(alphabet, alphabet);
    State s = b.add_state();
    b.set_initial(s);
    b.set_accepting(s);
    for (Symbol x = 0; x < alphabet.size(); ++x)
        b.add_transition(s, x, s, Word{x});
    return std::move(b).build();
}

std::set<Word> transducer_outputs(const Transducer& t, const Word& w) {
    check_word(t.input_alphabet(), w);
    std::set<Word> outputs;
    std::set<std::tuple<State, std::size_t, Word>> seen;
    Word out;
    const auto eps_cap = t.num_states();
    auto dfs = [&](auto&& self, State s, std::size_t pos, std::size_t eps_run) -> void {
        if (!seen.emplace(s, pos, out).second)
            return;
        if (pos == w.size() && t.is_accepting(s))
            outputs.insert(out);
        for (const auto& e : t.edges(s)) {
            bool eps = e.letter == kEpsilon;
            if (eps ? eps_run >= eps_cap : (pos == w.size() || e.letter != w[pos]))
                continue;
            auto mark = out.size();
            out.insert(out.end(), e.output.begin(), e.output.end());
            self(self, e.to, eps ? pos : pos + 1, eps ? eps_run + 1 : 0);
            out.resize(mark);
        }
    };
    dfs(dfs, t.initial(), 0, 0);
    return outputs;
}

namespace {

/// Output words of `t` re-indexed into `target`; nullopt when some letter is
/// missing there (such an edge can never be matched).
std::vector<std::vector<std::optional<Word>>> outputs_in(const Transducer& t, const Alphabet& target) {
    std::vector<std::vector<std::optional<Word>>> res(t.num_states());
    for (State s = 0; s < t.num_states(); ++s)
        for (const auto& e : t.edges(s)) {
            Word u;
            bool ok = true;
            for (Symbol y : e.output) {
                auto z = target.find(t.output_alphabet().id(y));
                if (!z) {
                    ok = false;
                    break;
                }
                u.push_back(*z);
            }
            res[s].push_back(ok ? std::optional<Word>(std::move(u)) : std::nullopt);
        }
    return res;
}

void check_output_alphabet(const Transducer& t, const Alphabet& l) {
    if (!t.output_alphabet().includes(l))
        throw AlphabetError("language alphabet is not contained in the transducer's output alphabet");
}

} // namespace

Nfa transducer_inverse_image(const Transducer& t, const Nfa& l) {
    check_output_alphabet(t, l.alphabet());
    auto outs = outputs_in(t, l.alphabet());
    NfaBuilder out(t.input_alphabet());
    std::map<std::pair<State, State>, State> ids;
    std::deque<std::pair<State, State>> queue;
    auto get = [&](State s, State p) {
        auto [it, fresh] = ids.emplace(std::make_pair(s, p), 0);
        if (fresh) {
            it->second = out.add_state();
            queue.emplace_back(s, p);
            if (t.is_accepting(s) && l.is_accepting(p))
                out.set_accepting(it->second);
        }
        return it->second;
    };
    out.set_initial(get(t.initial(), l.initial()));
    while (!queue.empty()) {
        auto [s, p] = queue.front();
        queue.pop_front();
        State from = ids.at({s, p});
        for (const auto& e : l.edges(p))
            if (e.letter == kEpsilon)
                out.add_epsilon(from, get(s, e.to));
        auto edges = t.edges(s);
        for (std::size_t i = 0; i < edges.size(); ++i) {
            if (!outs[s][i])
                continue;
            std::vector<State> cur{p};
            for (Symbol y : *outs[s][i]) {
                if (cur.empty())
                    break;
                cur = step(l, epsilon_closure(l, cur), y);
            }
            for (State q : cur)
                out.add_transition(from, edges[i].letter, get(edges[i].to, q));
        }
    }
    return std::move(out).build();
}

OneCounter transducer_inverse_image_oc(const Transducer& t, const OneCounter& l) {
    check_output_alphabet(t, l.alphabet());
    auto outs = outputs_in(t, l.alphabet());
    OneCounterBuilder out(t.input_alphabet());
    out.set_initial_counter(l.initial_counter());

    // A product state is at rest at (s, p), or midway through the output of
    // edge i of s after j letters.
    using Key = std::tuple<State, std::size_t, std::size_t, State>; // s, edge+1 (0 = at rest), j, p
    std::map<Key, State> ids;
    std::deque<Key> queue;
    auto get = [&](const Key& k) {
        auto [it, fresh] = ids.emplace(k, 0);
        if (fresh) {
            it->second = out.add_state();
            queue.push_back(k);
            auto [s, edge, j, p] = k;
            if (edge == 0 && t.is_accepting(s) && l.is_accepting(p))
                out.set_accepting(it->second);
        }
        return it->second;
    };
    out.set_initial(get({t.initial(), 0, 0, l.initial()}));
    while (!queue.empty()) {
        Key k = queue.front();
        queue.pop_front();
        auto [s, edge, j, p] = k;
        State from = ids.at(k);
        for (const auto& e : l.edges(p))
            if (e.letter == kEpsilon)
                out.add_transition(from, kEpsilon, e.flag, get({s, edge, j, e.to}), e.delta);
        if (edge == 0) {
            auto edges = t.edges(s);
            for (std::size_t i = 0; i < edges.size(); ++i) {
                if (!outs[s][i])
                    continue;
                const Word& u = *outs[s][i];
                if (u.empty()) {
                    out.add_transition_any(from, edges[i].letter, get({edges[i].to, 0, 0, p}), 0);
                    continue;
                }
                for (const auto& e : l.edges(p)) {
                    if (e.letter != u[0])
                        continue;
                    Key next = u.size() == 1 ? Key{edges[i].to, 0, 0, e.to} : Key{s, i + 1, 1, e.to};
                    out.add_transition(from, edges[i].letter, e.flag, get(next), e.delta);
                }
            }
        } else {
            const auto& te = t.edges(s)[edge - 1];
            const Word& u = *outs[s][edge - 1];
            for (const auto& e : l.edges(p)) {
                if (e.letter != u[j])
                    continue;
                Key next = j + 1 == u.size() ? Key{te.to, 0, 0, e.to} : Key{s, edge, j + 1, e.to};
                out.add_transition(from, kEpsilon, e.flag, get(next), e.delta);
            }
        }
    }
    return std::move(out).build();
}

} // namespace conelang::automata
