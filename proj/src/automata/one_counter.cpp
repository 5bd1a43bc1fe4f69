#include "conelang/automata/one_counter.hpp"

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <map>

#include "conelang/errors.hpp"

namespace conelang::automata {

std::size_t OneCounter::num_transitions() const {
    std::size_t n = 0;
    for (const auto& edges : out_)
        n += edges.size();
    return n;
}

// ---- builder --------------------------------------------------------------------

OneCounterBuilder::OneCounterBuilder(Alphabet alphabet) : alphabet_(std::move(alphabet)) {}

State OneCounterBuilder::add_state() {
    out_.emplace_back();
    accepting_.push_back(false);
    return static_cast<State>(out_.size() - 1);
}

State OneCounterBuilder::add_states(std::size_t n) {
    auto first = static_cast<State>(out_.size());
    for (std::size_t i = 0; i < n; ++i)
        add_state();
    return first;
}

void OneCounterBuilder::check_state(State s, const char* what) const {
    if (s >= out_.size())
        throw MachineError(std::string(what) + " refers to undeclared state " + std::to_string(s));
}

void OneCounterBuilder::set_initial(State s) {
    check_state(s, "initial state");
    initial_ = s;
}

void OneCounterBuilder::add_transition(State from, Symbol letter, ZeroFlag flag, State to, int delta) {
    check_state(from, "transition source");
    check_state(to, "transition target");
    if (letter != kEpsilon && letter >= alphabet_.size())
        throw RejectedInputError("transition letter " + std::to_string(letter) + " outside alphabet");
    if (std::abs(delta) > kMaxCounterDelta)
        throw MachineError("counter delta " + std::to_string(delta) + " outside [-2, 2]");
    if (flag == ZeroFlag::Zero && delta < 0)
        throw MachineError("zero-flag transition with negative counter delta");
    out_[from].push_back({letter, flag, to, delta});
}

void OneCounterBuilder::add_transition(State from, std::string_view letter, ZeroFlag flag, State to,
                                       int delta) {
    add_transition(from, alphabet_.at(letter), flag, to, delta);
}

void OneCounterBuilder::add_transition_any(State from, Symbol letter, State to, int delta) {
    if (delta >= 0)
        add_transition(from, letter, ZeroFlag::Zero, to, delta);
    add_transition(from, letter, ZeroFlag::Positive, to, delta);
}

void OneCounterBuilder::add_transition_any(State from, std::string_view letter, State to, int delta) {
    add_transition_any(from, alphabet_.at(letter), to, delta);
}

void OneCounterBuilder::add_word_path(State from, const Word& word, ZeroFlag flag, State to, int delta) {
    if (word.empty()) {
        add_transition(from, kEpsilon, flag, to, delta);
        return;
    }
    State cur = from;
    for (std::size_t i = 0; i < word.size(); ++i) {
        State next = i + 1 == word.size() ? to : add_state();
        if (i == 0)
            add_transition(cur, word[i], flag, next, delta);
        else
            add_transition_any(cur, word[i], next, 0);
        cur = next;
    }
}

void OneCounterBuilder::set_accepting(State s, bool accepting) {
    check_state(s, "accepting state");
    accepting_[s] = accepting;
}

OneCounter OneCounterBuilder::build() && {
    if (out_.empty())
        throw MachineError("automaton has no states");
    if (!initial_)
        throw MachineError("automaton has no initial state");
    OneCounter m;
    m.alphabet_ = std::move(alphabet_);
    m.initial_ = *initial_;
    m.initial_counter_ = initial_counter_;
    m.out_ = std::move(out_);
    for (auto& edges : m.out_) {
        std::sort(edges.begin(), edges.end());
        edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
        for (const auto& e : edges)
            m.max_abs_delta_ = std::max(m.max_abs_delta_, std::abs(e.delta));
    }
    m.accepting_flag_ = std::move(accepting_);
    for (State s = 0; s < m.accepting_flag_.size(); ++s)
        if (m.accepting_flag_[s])
            m.accepting_.push_back(s);
    return m;
}

// ---- simulation -----------------------------------------------------------------

std::uint64_t counter_bound(const OneCounter& m, std::size_t n) {
    return m.initial_counter() +
           static_cast<std::uint64_t>(m.max_abs_delta()) * (n + 1) * m.num_states();
}

namespace {

/// Applies `e` to a counter; false when the move is not enabled.
bool fire(const OcEdge& e, std::uint64_t counter, std::uint64_t bound, std::uint64_t& out) {
    if (!flag_allows(e.flag, counter))
        return false;
    auto next = static_cast<std::int64_t>(counter) + e.delta;
    if (next < 0 || static_cast<std::uint64_t>(next) > bound)
        return false;
    out = static_cast<std::uint64_t>(next);
    return true;
}

} // namespace

std::vector<Config> oc_epsilon_closure(const OneCounter& m, std::vector<Config> configs,
                                       std::uint64_t bound) {
    std::set<Config> seen;
    std::vector<Config> stack;
    for (const auto& c : configs)
        if (c.counter <= bound && seen.insert(c).second)
            stack.push_back(c);
    while (!stack.empty()) {
        Config c = stack.back();
        stack.pop_back();
        for (const auto& e : m.edges(c.state)) {
            if (e.letter != kEpsilon)
                continue;
            std::uint64_t next;
            if (!fire(e, c.counter, bound, next))
                continue;
            Config d{e.to, next};
            if (seen.insert(d).second)
                stack.push_back(d);
        }
    }
    return {seen.begin(), seen.end()};
}

std::vector<Config> oc_step(const OneCounter& m, const std::vector<Config>& closed, Symbol letter,
                            std::uint64_t bound) {
    std::vector<Config> next;
    for (const auto& c : closed) {
        auto edges = m.edges(c.state);
        auto it = std::lower_bound(edges.begin(), edges.end(), OcEdge{letter, ZeroFlag::Zero, 0, -kMaxCounterDelta});
        for (; it != edges.end() && it->letter == letter; ++it) {
            std::uint64_t counter;
            if (fire(*it, c.counter, bound, counter))
                next.push_back({it->to, counter});
        }
    }
    return oc_epsilon_closure(m, std::move(next), bound);
}

bool oc_accepts(const OneCounter& m, const Word& w) {
    check_word(m.alphabet(), w);
    auto bound = counter_bound(m, w.size());
    auto cur = oc_epsilon_closure(m, {{m.initial(), m.initial_counter()}}, bound);
    for (Symbol x : w) {
        if (cur.empty())
            return false;
        cur = oc_step(m, cur, x, bound);
    }
    return std::any_of(cur.begin(), cur.end(), [&](const Config& c) { return m.is_accepting(c.state); });
}

std::set<Word> oc_accepted_words(const OneCounter& m, std::size_t max_len) {
    std::set<Word> words;
    auto bound = counter_bound(m, max_len);
    Word prefix;
    auto dfs = [&](auto&& self, const std::vector<Config>& cur) -> void {
        if (std::any_of(cur.begin(), cur.end(), [&](const Config& c) { return m.is_accepting(c.state); }))
            words.insert(prefix);
        if (prefix.size() == max_len)
            return;
        for (Symbol x = 0; x < m.alphabet().size(); ++x) {
            auto next = oc_step(m, cur, x, bound);
            if (next.empty())
                continue;
            prefix.push_back(x);
            self(self, next);
            prefix.pop_back();
        }
    };
    dfs(dfs, oc_epsilon_closure(m, {{m.initial(), m.initial_counter()}}, bound));
    return words;
}

// ---- constructions --------------------------------------------------------------

namespace {

std::vector<Symbol> symbol_map(const Alphabet& from, const Alphabet& to) {
    std::vector<Symbol> map(from.size());
    for (Symbol s = 0; s < from.size(); ++s)
        map[s] = to.at(from.id(s));
    return map;
}

Symbol remap(Symbol x, const std::vector<Symbol>& map) {
    return x == kEpsilon ? kEpsilon : map[x];
}

State copy_into(OneCounterBuilder& b, const OneCounter& m) {
    auto map = symbol_map(m.alphabet(), b.alphabet());
    State offset = b.add_states(m.num_states());
    for (State s = 0; s < m.num_states(); ++s)
        for (const auto& e : m.edges(s))
            b.add_transition(offset + s, remap(e.letter, map), e.flag, offset + e.to, e.delta);
    return offset;
}

State copy_into(OneCounterBuilder& b, const Nfa& m) {
    auto map = symbol_map(m.alphabet(), b.alphabet());
    State offset = b.add_states(m.num_states());
    for (State s = 0; s < m.num_states(); ++s)
        for (const auto& e : m.edges(s))
            b.add_transition_any(offset + s, remap(e.letter, map), offset + e.to, 0);
    return offset;
}

} // namespace

OneCounter lift(const Nfa& m) {
    OneCounterBuilder b(m.alphabet());
    State offset = copy_into(b, m);
    b.set_initial(offset + m.initial());
    for (State s : m.accepting())
        b.set_accepting(offset + s);
    return std::move(b).build();
}

OneCounter oc_union(const OneCounter& a, const OneCounter& b) {
    if (a.initial_counter() != b.initial_counter())
        throw MachineError("union of one-counter machines with different initial counters");
    OneCounterBuilder out(a.alphabet().merged_with(b.alphabet()));
    out.set_initial_counter(a.initial_counter());
    State init = out.add_state();
    out.set_initial(init);
    State oa = copy_into(out, a);
    State ob = copy_into(out, b);
    out.add_transition_any(init, kEpsilon, oa + a.initial(), 0);
    out.add_transition_any(init, kEpsilon, ob + b.initial(), 0);
    for (State s : a.accepting())
        out.set_accepting(oa + s);
    for (State s : b.accepting())
        out.set_accepting(ob + s);
    return std::move(out).build();
}

OneCounter oc_concat(const Nfa& a, const OneCounter& b) {
    OneCounterBuilder out(a.alphabet().merged_with(b.alphabet()));
    out.set_initial_counter(b.initial_counter());
    State oa = copy_into(out, a);
    State ob = copy_into(out, b);
    out.set_initial(oa + a.initial());
    for (State s : a.accepting())
        out.add_transition_any(oa + s, kEpsilon, ob + b.initial(), 0);
    for (State s : b.accepting())
        out.set_accepting(ob + s);
    return std::move(out).build();
}

OneCounter oc_concat(const OneCounter& a, const Nfa& b) {
    OneCounterBuilder out(a.alphabet().merged_with(b.alphabet()));
    out.set_initial_counter(a.initial_counter());
    State oa = copy_into(out, a);
    State ob = copy_into(out, b);
    out.set_initial(oa + a.initial());
    for (State s : a.accepting())
        out.add_transition_any(oa + s, kEpsilon, ob + b.initial(), 0);
    for (State s : b.accepting())
        out.set_accepting(ob + s);
    return std::move(out).build();
}

OneCounter oc_intersect(const OneCounter& a, const Nfa& b) {
    Alphabet alphabet = a.alphabet().merged_with(b.alphabet());
    auto map_a = symbol_map(a.alphabet(), alphabet);
    auto map_b = symbol_map(b.alphabet(), alphabet);
    std::vector<std::optional<Symbol>> to_b(alphabet.size());
    for (Symbol s = 0; s < b.alphabet().size(); ++s)
        to_b[map_b[s]] = s;

    OneCounterBuilder out(alphabet);
    out.set_initial_counter(a.initial_counter());
    std::map<std::pair<State, State>, State> ids;
    std::deque<std::pair<State, State>> queue;
    auto get = [&](State p, State q) {
        auto [it, fresh] = ids.emplace(std::make_pair(p, q), 0);
        if (fresh) {
            it->second = out.add_state();
            queue.emplace_back(p, q);
            if (a.is_accepting(p) && b.is_accepting(q))
                out.set_accepting(it->second);
        }
        return it->second;
    };
    out.set_initial(get(a.initial(), b.initial()));
    while (!queue.empty()) {
        auto [p, q] = queue.front();
        queue.pop_front();
        State from = ids.at({p, q});
        for (const auto& e : a.edges(p))
            if (e.letter == kEpsilon)
                out.add_transition(from, kEpsilon, e.flag, get(e.to, q), e.delta);
        for (const auto& e : b.edges(q))
            if (e.letter == kEpsilon)
                out.add_transition_any(from, kEpsilon, get(p, e.to), 0);
        for (const auto& ea : a.edges(p)) {
            if (ea.letter == kEpsilon)
                continue;
            Symbol x = map_a[ea.letter];
            if (!to_b[x])
                continue;
            for (const auto& eb : b.edges(q))
                if (eb.letter == *to_b[x])
                    out.add_transition(from, x, ea.flag, get(ea.to, eb.to), ea.delta);
        }
    }
    return std::move(out).build();
}

OneCounter oc_with_alphabet(const OneCounter& a, const Alphabet& superset) {
    if (!superset.includes(a.alphabet()))
        throw AlphabetError("target alphabet does not include the machine's alphabet");
    OneCounterBuilder out(superset);
    out.set_initial_counter(a.initial_counter());
    State offset = copy_into(out, a);
    out.set_initial(offset + a.initial());
    for (State s : a.accepting())
        out.set_accepting(offset + s);
    return std::move(out).build();
}

} // namespace conelang::automata
