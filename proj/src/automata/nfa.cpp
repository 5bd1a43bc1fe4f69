#include "conelang/automata/nfa.hpp"

#include <algorithm>
#include <deque>
#include <map>

#include "conelang/automata/subset.hpp"
#include "conelang/errors.hpp"

namespace conelang::automata {

// ---- Nfa ----------------------------------------------------------------------

std::size_t Nfa::num_transitions() const {
    std::size_t n = 0;
    for (const auto& edges : out_)
        n += edges.size();
    return n;
}

bool Nfa::has_epsilon_moves() const {
    for (const auto& edges : out_)
        for (const auto& e : edges)
            if (e.letter == kEpsilon)
                return true;
    return false;
}

bool Nfa::is_deterministic() const {
    for (const auto& edges : out_)
        for (std::size_t i = 0; i < edges.size(); ++i) {
            if (edges[i].letter == kEpsilon)
                return false;
            if (i > 0 && edges[i - 1].letter == edges[i].letter)
                return false;
        }
    return true;
}

// ---- NfaBuilder -----------------------------------------------------------------

NfaBuilder::NfaBuilder(Alphabet alphabet) : alphabet_(std::move(alphabet)) {}

State NfaBuilder::add_state() {
    out_.emplace_back();
    accepting_.push_back(false);
    return static_cast<State>(out_.size() - 1);
}

State NfaBuilder::add_states(std::size_t n) {
    auto first = static_cast<State>(out_.size());
    for (std::size_t i = 0; i < n; ++i)
        add_state();
    return first;
}

void NfaBuilder::check_state(State s, const char* what) const {
    if (s >= out_.size())
        throw MachineError(std::string(what) + " refers to undeclared state " + std::to_string(s));
}

void NfaBuilder::set_initial(State s) {
    check_state(s, "initial state");
    initial_ = s;
}

void NfaBuilder::add_transition(State from, Symbol letter, State to) {
    check_state(from, "transition source");
    check_state(to, "transition target");
    if (letter != kEpsilon && letter >= alphabet_.size())
        throw RejectedInputError("transition letter " + std::to_string(letter) + " outside alphabet");
    out_[from].push_back({letter, to});
}

void NfaBuilder::add_transition(State from, std::string_view letter, State to) {
    add_transition(from, alphabet_.at(letter), to);
}

void NfaBuilder::add_word_path(State from, const Word& word, State to) {
    if (word.empty()) {
        add_epsilon(from, to);
        return;
    }
    State cur = from;
    for (std::size_t i = 0; i + 1 < word.size(); ++i) {
        State next = add_state();
        add_transition(cur, word[i], next);
        cur = next;
    }
    add_transition(cur, word.back(), to);
}

void NfaBuilder::set_accepting(State s, bool accepting) {
    check_state(s, "accepting state");
    accepting_[s] = accepting;
}

void NfaBuilder::set_sign_partition(std::vector<State> plus, std::vector<State> minus) {
    std::sort(plus.begin(), plus.end());
    plus.erase(std::unique(plus.begin(), plus.end()), plus.end());
    std::sort(minus.begin(), minus.end());
    minus.erase(std::unique(minus.begin(), minus.end()), minus.end());
    sign_ = SignPartition{std::move(plus), std::move(minus)};
}

Nfa NfaBuilder::build() && {
    if (out_.empty())
        throw MachineError("automaton has no states");
    if (!initial_)
        throw MachineError("automaton has no initial state");
    Nfa m;
    m.alphabet_ = std::move(alphabet_);
    m.initial_ = *initial_;
    m.out_ = std::move(out_);
    for (auto& edges : m.out_) {
        std::sort(edges.begin(), edges.end());
        edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    }
    m.accepting_flag_ = std::move(accepting_);
    for (State s = 0; s < m.accepting_flag_.size(); ++s)
        if (m.accepting_flag_[s])
            m.accepting_.push_back(s);
    if (sign_) {
        for (const auto* half : {&sign_->plus, &sign_->minus})
            for (State s : *half)
                if (s >= m.out_.size())
                    throw MachineError("sign partition refers to undeclared state " + std::to_string(s));
        std::vector<State> both;
        std::set_intersection(sign_->plus.begin(), sign_->plus.end(), sign_->minus.begin(),
                              sign_->minus.end(), std::back_inserter(both));
        if (!both.empty())
            throw MachineError("sign partition halves overlap");
        std::vector<State> all;
        std::set_union(sign_->plus.begin(), sign_->plus.end(), sign_->minus.begin(), sign_->minus.end(),
                       std::back_inserter(all));
        if (all != m.accepting_)
            throw MachineError("sign partition does not cover the accepting states exactly");
        m.sign_ = std::move(sign_);
    }
    return m;
}

// ---- Homomorphism ---------------------------------------------------------------

Homomorphism::Homomorphism(Alphabet source, Alphabet target, std::vector<Word> images)
    : source_(std::move(source)), target_(std::move(target)), images_(std::move(images)) {
    if (images_.size() != source_.size())
        throw AlphabetError("homomorphism must give one image per source letter");
    for (const auto& w : images_)
        check_word(target_, w);
}

Homomorphism Homomorphism::deleting(const Alphabet& source, const Alphabet& target,
                                    const std::vector<std::string>& deleted) {
    std::vector<Word> images(source.size());
    for (Symbol s = 0; s < source.size(); ++s) {
        const auto& id = source.id(s);
        if (std::find(deleted.begin(), deleted.end(), id) != deleted.end())
            continue;
        images[s] = Word{target.at(id)};
    }
    return Homomorphism(source, target, std::move(images));
}

Homomorphism Homomorphism::renaming(const Alphabet& source, const Alphabet& target,
                                    const std::vector<std::pair<std::string, std::string>>& renames) {
    std::vector<Word> images(source.size());
    for (Symbol s = 0; s < source.size(); ++s) {
        std::string id = source.id(s);
        for (const auto& [from, to] : renames)
            if (from == id)
                id = to;
        images[s] = Word{target.at(id)};
    }
    return Homomorphism(source, target, std::move(images));
}

Word Homomorphism::apply(const Word& word) const {
    check_word(source_, word);
    Word out;
    for (Symbol s : word)
        out.insert(out.end(), images_[s].begin(), images_[s].end());
    return out;
}

// ---- simulation -----------------------------------------------------------------

std::vector<State> epsilon_closure(const Nfa& m, std::vector<State> states) {
    std::vector<bool> seen(m.num_states(), false);
    std::vector<State> stack;
    for (State s : states)
        if (!seen[s]) {
            seen[s] = true;
            stack.push_back(s);
        }
    std::vector<State> closed;
    while (!stack.empty()) {
        State s = stack.back();
        stack.pop_back();
        closed.push_back(s);
        for (const auto& e : m.edges(s)) {
            if (e.letter != kEpsilon)
                continue;
            if (!seen[e.to]) {
                seen[e.to] = true;
                stack.push_back(e.to);
            }
        }
    }
    std::sort(closed.begin(), closed.end());
    return closed;
}

std::vector<State> step(const Nfa& m, const std::vector<State>& closed, Symbol letter) {
    std::vector<State> next;
    for (State s : closed) {
        auto edges = m.edges(s);
        auto it = std::lower_bound(edges.begin(), edges.end(), Edge{letter, 0});
        for (; it != edges.end() && it->letter == letter; ++it)
            next.push_back(it->to);
    }
    return epsilon_closure(m, std::move(next));
}

std::vector<State> reachable_states(const Nfa& m, const Word& w) {
    check_word(m.alphabet(), w);
    auto cur = epsilon_closure(m, {m.initial()});
    for (Symbol x : w) {
        if (cur.empty())
            break;
        cur = step(m, cur, x);
    }
    return cur;
}

bool accepts(const Nfa& m, const Word& w) {
    auto states = reachable_states(m, w);
    return std::any_of(states.begin(), states.end(), [&](State s) { return m.is_accepting(s); });
}

namespace {

bool reaches_any(const std::vector<State>& states, const std::vector<State>& targets) {
    return std::any_of(states.begin(), states.end(),
                       [&](State s) { return std::binary_search(targets.begin(), targets.end(), s); });
}

const SignPartition& require_sign(const Nfa& m) {
    if (!m.sign_partition())
        throw MachineError("automaton has no sign partition");
    return *m.sign_partition();
}

} // namespace

bool accepts_plus(const Nfa& m, const Word& w) {
    return reaches_any(reachable_states(m, w), require_sign(m).plus);
}

bool accepts_minus(const Nfa& m, const Word& w) {
    return reaches_any(reachable_states(m, w), require_sign(m).minus);
}

std::set<Word> accepted_words(const Nfa& m, std::size_t max_len) {
    std::set<Word> words;
    SubsetCache cache(m);
    Word prefix;
    auto dfs = [&](auto&& self, SubsetCache::Id id) -> void {
        if (cache.accepting(id))
            words.insert(prefix);
        if (prefix.size() == max_len)
            return;
        for (Symbol x = 0; x < m.alphabet().size(); ++x) {
            auto next = cache.next(id, x);
            if (next == SubsetCache::kDead || cache.distance(next) == kUnreachable ||
                prefix.size() + 1 + cache.distance(next) > max_len)
                continue;
            prefix.push_back(x);
            self(self, next);
            prefix.pop_back();
        }
    };
    if (cache.distance(cache.start()) <= max_len)
        dfs(dfs, cache.start());
    return words;
}

// ---- basic languages ------------------------------------------------------------

Nfa empty_language(const Alphabet& alphabet) {
    NfaBuilder b(alphabet);
    b.set_initial(b.add_state());
    return std::move(b).build();
}

Nfa epsilon_language(const Alphabet& alphabet) {
    NfaBuilder b(alphabet);
    State s = b.add_state();
    b.set_initial(s);
    b.set_accepting(s);
    return std::move(b).build();
}

Nfa letter_plus(const Alphabet& alphabet, std::string_view letter) {
    NfaBuilder b(alphabet);
    State s0 = b.add_state();
    State s1 = b.add_state();
    b.set_initial(s0);
    b.add_transition(s0, letter, s1);
    b.add_transition(s1, letter, s1);
    b.set_accepting(s1);
    return std::move(b).build();
}

Nfa letter_star(const Alphabet& alphabet, std::string_view letter) {
    NfaBuilder b(alphabet);
    State s0 = b.add_state();
    b.set_initial(s0);
    b.add_transition(s0, letter, s0);
    b.set_accepting(s0);
    return std::move(b).build();
}

Nfa word_language(const Alphabet& alphabet, const Word& w) {
    check_word(alphabet, w);
    NfaBuilder b(alphabet);
    State s0 = b.add_state();
    State s1 = b.add_state();
    b.set_initial(s0);
    b.add_word_path(s0, w, s1);
    b.set_accepting(s1);
    return std::move(b).build();
}

Nfa universal_language(const Alphabet& alphabet) {
    NfaBuilder b(alphabet);
    State s0 = b.add_state();
    b.set_initial(s0);
    b.set_accepting(s0);
    for (Symbol x = 0; x < alphabet.size(); ++x)
        b.add_transition(s0, x, s0);
    return std::move(b).build();
}

Nfa universal_language(const Alphabet& alphabet, const std::vector<std::string>& letters) {
    NfaBuilder b(alphabet);
    State s0 = b.add_state();
    b.set_initial(s0);
    b.set_accepting(s0);
    for (const auto& id : letters)
        b.add_transition(s0, id, s0);
    return std::move(b).build();
}

// ---- closure operations ---------------------------------------------------------

namespace {

std::vector<Symbol> symbol_map(const Alphabet& from, const Alphabet& to) {
    std::vector<Symbol> map(from.size());
    for (Symbol s = 0; s < from.size(); ++s) {
        auto t = to.find(from.id(s));
        if (!t)
            throw AlphabetError("alphabet mismatch: '" + from.id(s) + "' missing from target alphabet");
        map[s] = *t;
    }
    return map;
}

/// Copies all states and edges of `m` into `b`; returns the state offset.
State copy_into(NfaBuilder& b, const Nfa& m) {
    auto map = symbol_map(m.alphabet(), b.alphabet());
    State offset = b.add_states(m.num_states());
    for (State s = 0; s < m.num_states(); ++s)
        for (const auto& e : m.edges(s))
            b.add_transition(offset + s, e.letter == kEpsilon ? kEpsilon : map[e.letter], offset + e.to);
    return offset;
}

} // namespace

Nfa union_of(const Nfa& a, const Nfa& b) {
    NfaBuilder out(a.alphabet().merged_with(b.alphabet()));
    State init = out.add_state();
    out.set_initial(init);
    State oa = copy_into(out, a);
    State ob = copy_into(out, b);
    out.add_epsilon(init, oa + a.initial());
    out.add_epsilon(init, ob + b.initial());
    for (State s : a.accepting())
        out.set_accepting(oa + s);
    for (State s : b.accepting())
        out.set_accepting(ob + s);
    return std::move(out).build();
}

Nfa concat(const Nfa& a, const Nfa& b) {
    NfaBuilder out(a.alphabet().merged_with(b.alphabet()));
    State oa = copy_into(out, a);
    State ob = copy_into(out, b);
    out.set_initial(oa + a.initial());
    for (State s : a.accepting())
        out.add_epsilon(oa + s, ob + b.initial());
    for (State s : b.accepting())
        out.set_accepting(ob + s);
    return std::move(out).build();
}

Nfa kleene_star(const Nfa& a) {
    NfaBuilder out(a.alphabet());
    State hub = out.add_state();
    out.set_initial(hub);
    out.set_accepting(hub);
    State oa = copy_into(out, a);
    out.add_epsilon(hub, oa + a.initial());
    for (State s : a.accepting())
        out.add_epsilon(oa + s, hub);
    return std::move(out).build();
}

Nfa kleene_plus(const Nfa& a) {
    return concat(a, kleene_star(a));
}

Nfa intersect(const Nfa& a, const Nfa& b) {
    Alphabet alphabet = a.alphabet().merged_with(b.alphabet());
    auto map_a = symbol_map(a.alphabet(), alphabet);
    auto map_b = symbol_map(b.alphabet(), alphabet);
    // Letter in the merged alphabet -> letter of b (or none).
    std::vector<std::optional<Symbol>> to_b(alphabet.size());
    for (Symbol s = 0; s < b.alphabet().size(); ++s)
        to_b[map_b[s]] = s;

    NfaBuilder out(alphabet);
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
                out.add_epsilon(from, get(e.to, q));
        for (const auto& e : b.edges(q))
            if (e.letter == kEpsilon)
                out.add_epsilon(from, get(p, e.to));
        for (const auto& ea : a.edges(p)) {
            if (ea.letter == kEpsilon)
                continue;
            Symbol x = map_a[ea.letter];
            if (!to_b[x])
                continue;
            for (const auto& eb : b.edges(q))
                if (eb.letter == *to_b[x])
                    out.add_transition(from, x, get(ea.to, eb.to));
        }
    }
    return std::move(out).build();
}

Nfa reverse(const Nfa& a) {
    NfaBuilder out(a.alphabet());
    State init = out.add_state();
    State offset = out.add_states(a.num_states());
    out.set_initial(init);
    for (State s : a.accepting())
        out.add_epsilon(init, offset + s);
    for (State s = 0; s < a.num_states(); ++s)
        for (const auto& e : a.edges(s))
            out.add_transition(offset + e.to, e.letter, offset + s);
    out.set_accepting(offset + a.initial());
    return std::move(out).build();
}

Nfa determinize(const Nfa& a) {
    SubsetCache cache(a);
    const auto k = a.alphabet().size();
    // Explore every reachable subset; the empty subset becomes an explicit sink.
    std::vector<std::vector<SubsetCache::Id>> delta;
    for (SubsetCache::Id id = 0; id < cache.size(); ++id) {
        delta.emplace_back(k);
        for (Symbol x = 0; x < k; ++x)
            delta[id][x] = cache.next(id, x);
    }
    bool need_sink = false;
    for (const auto& row : delta)
        for (auto t : row)
            need_sink |= (t == SubsetCache::kDead);

    NfaBuilder out(a.alphabet());
    out.add_states(cache.size());
    State sink = need_sink ? out.add_state() : 0;
    out.set_initial(0);
    for (SubsetCache::Id id = 0; id < cache.size(); ++id) {
        if (cache.accepting(id))
            out.set_accepting(id);
        for (Symbol x = 0; x < k; ++x)
            out.add_transition(id, x, delta[id][x] == SubsetCache::kDead ? sink : delta[id][x]);
    }
    if (need_sink)
        for (Symbol x = 0; x < k; ++x)
            out.add_transition(sink, x, sink);
    return std::move(out).build();
}

Nfa complement(const Nfa& a) {
    Nfa d = determinize(a);
    std::vector<State> accepting;
    for (State s = 0; s < d.num_states(); ++s)
        if (!d.is_accepting(s))
            accepting.push_back(s);
    return with_accepting(d, accepting);
}

Nfa trim(const Nfa& a) {
    const auto n = a.num_states();
    std::vector<bool> fwd(n, false), bwd(n, false);
    std::vector<std::vector<State>> rev(n);
    for (State s = 0; s < n; ++s)
        for (const auto& e : a.edges(s))
            rev[e.to].push_back(s);
    std::vector<State> stack{a.initial()};
    fwd[a.initial()] = true;
    while (!stack.empty()) {
        State s = stack.back();
        stack.pop_back();
        for (const auto& e : a.edges(s))
            if (!fwd[e.to]) {
                fwd[e.to] = true;
                stack.push_back(e.to);
            }
    }
    for (State s : a.accepting()) {
        bwd[s] = true;
        stack.push_back(s);
    }
    while (!stack.empty()) {
        State s = stack.back();
        stack.pop_back();
        for (State p : rev[s])
            if (!bwd[p]) {
                bwd[p] = true;
                stack.push_back(p);
            }
    }
    std::vector<std::optional<State>> remap(n);
    NfaBuilder out(a.alphabet());
    for (State s = 0; s < n; ++s)
        if ((fwd[s] && bwd[s]) || s == a.initial())
            remap[s] = out.add_state();
    out.set_initial(*remap[a.initial()]);
    for (State s = 0; s < n; ++s) {
        if (!remap[s])
            continue;
        if (a.is_accepting(s))
            out.set_accepting(*remap[s]);
        for (const auto& e : a.edges(s))
            if (remap[e.to])
                out.add_transition(*remap[s], e.letter, *remap[e.to]);
    }
    if (a.sign_partition()) {
        std::vector<State> plus, minus;
        for (State s : a.sign_partition()->plus)
            if (remap[s])
                plus.push_back(*remap[s]);
        for (State s : a.sign_partition()->minus)
            if (remap[s])
                minus.push_back(*remap[s]);
        out.set_sign_partition(std::move(plus), std::move(minus));
    }
    return std::move(out).build();
}

Nfa remove_epsilon(const Nfa& a) {
    NfaBuilder out(a.alphabet());
    out.add_states(a.num_states());
    out.set_initial(a.initial());
    const auto* sign = a.sign_partition() ? &*a.sign_partition() : nullptr;
    std::vector<State> plus, minus;
    for (State s = 0; s < a.num_states(); ++s) {
        auto closed = epsilon_closure(a, {s});
        bool is_plus = false, is_minus = false;
        for (State t : closed) {
            if (a.is_accepting(t))
                out.set_accepting(s);
            if (sign) {
                is_plus |= std::binary_search(sign->plus.begin(), sign->plus.end(), t);
                is_minus |= std::binary_search(sign->minus.begin(), sign->minus.end(), t);
            }
            for (const auto& e : a.edges(t))
                if (e.letter != kEpsilon)
                    out.add_transition(s, e.letter, e.to);
        }
        if (is_plus && is_minus)
            throw MachineError("epsilon-moves join both halves of the sign partition");
        if (is_plus)
            plus.push_back(s);
        if (is_minus)
            minus.push_back(s);
    }
    if (sign)
        out.set_sign_partition(std::move(plus), std::move(minus));
    return trim(std::move(out).build());
}

Nfa hom_image(const Nfa& a, const Homomorphism& h) {
    auto map = symbol_map(a.alphabet(), h.source());
    NfaBuilder out(h.target());
    State offset = out.add_states(a.num_states());
    out.set_initial(offset + a.initial());
    for (State s = 0; s < a.num_states(); ++s) {
        if (a.is_accepting(s))
            out.set_accepting(offset + s);
        for (const auto& e : a.edges(s)) {
            if (e.letter == kEpsilon)
                out.add_epsilon(offset + s, offset + e.to);
            else
                out.add_word_path(offset + s, h.image(map[e.letter]), offset + e.to);
        }
    }
    return std::move(out).build();
}

Nfa inverse_hom(const Nfa& a, const Homomorphism& h) {
    // Images that use a letter `a` cannot read simply produce no edge.
    std::vector<std::optional<Word>> images(h.source().size());
    for (Symbol x = 0; x < h.source().size(); ++x) {
        Word img;
        bool ok = true;
        for (Symbol y : h.image(x)) {
            auto t = a.alphabet().find(h.target().id(y));
            if (!t) {
                ok = false;
                break;
            }
            img.push_back(*t);
        }
        if (ok)
            images[x] = std::move(img);
    }
    NfaBuilder out(h.source());
    out.add_states(a.num_states());
    out.set_initial(a.initial());
    for (State s = 0; s < a.num_states(); ++s) {
        auto base = epsilon_closure(a, {s});
        if (std::any_of(base.begin(), base.end(), [&](State t) { return a.is_accepting(t); }))
            out.set_accepting(s);
        for (Symbol x = 0; x < h.source().size(); ++x) {
            if (!images[x])
                continue;
            auto cur = base;
            for (Symbol y : *images[x]) {
                if (cur.empty())
                    break;
                cur = step(a, cur, y);
            }
            for (State t : cur)
                out.add_transition(s, x, t);
        }
    }
    return std::move(out).build();
}

Nfa formal_inverse(const Nfa& a) {
    const auto& alphabet = a.alphabet();
    NfaBuilder out(alphabet);
    State init = out.add_state();
    State offset = out.add_states(a.num_states());
    out.set_initial(init);
    for (State s : a.accepting())
        out.add_epsilon(init, offset + s);
    for (State s = 0; s < a.num_states(); ++s)
        for (const auto& e : a.edges(s)) {
            if (e.letter == kEpsilon) {
                out.add_epsilon(offset + e.to, offset + s);
                continue;
            }
            auto inv = alphabet.inverse(e.letter);
            if (!inv)
                throw AlphabetError("formal inverse: letter '" + alphabet.id(e.letter) + "' has no inverse");
            out.add_transition(offset + e.to, *inv, offset + s);
        }
    out.set_accepting(offset + a.initial());
    if (!alphabet.fully_paired())
        throw AlphabetError("formal inverse needs an inverse for every letter of the alphabet");
    return std::move(out).build();
}

Nfa with_alphabet(const Nfa& a, const Alphabet& superset) {
    if (!superset.includes(a.alphabet()))
        throw AlphabetError("target alphabet does not include the machine's alphabet");
    NfaBuilder out(superset);
    State offset = copy_into(out, a);
    out.set_initial(offset + a.initial());
    for (State s : a.accepting())
        out.set_accepting(offset + s);
    if (a.sign_partition())
        out.set_sign_partition(a.sign_partition()->plus, a.sign_partition()->minus);
    return std::move(out).build();
}

Nfa with_accepting(const Nfa& a, const std::vector<State>& accepting) {
    NfaBuilder out(a.alphabet());
    State offset = copy_into(out, a);
    out.set_initial(offset + a.initial());
    for (State s : accepting)
        out.set_accepting(offset + s);
    return std::move(out).build();
}

} // namespace conelang::automata
