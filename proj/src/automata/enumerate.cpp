#include "conelang/automata/enumerate.hpp"

#include <algorithm>
#include <deque>

#include "conelang/automata/subset.hpp"

namespace conelang::automata {

const Alphabet& machine_alphabet(const Machine& m) {
    return std::visit([](const auto& x) -> const Alphabet& { return x.alphabet(); }, m);
}

bool machine_accepts(const Machine& m, const Word& w) {
    if (const auto* n = std::get_if<Nfa>(&m))
        return accepts(*n, w);
    return oc_accepts(std::get<OneCounter>(m), w);
}

void walk_prefixes(const Nfa& m, std::size_t max_len, const NfaPrefixVisitor& visit, bool prune) {
    SubsetCache cache(m);
    const auto k = m.alphabet().size();
    Word prefix;
    auto fits = [&](SubsetCache::Id id, std::size_t len) {
        return !prune || (cache.distance(id) != kUnreachable && len + cache.distance(id) <= max_len);
    };
    auto dfs = [&](auto&& self, SubsetCache::Id id) -> void {
        if (!visit(prefix, cache.states(id), cache.accepting(id)) || prefix.size() == max_len)
            return;
        for (Symbol x = 0; x < k; ++x) {
            auto next = cache.next(id, x);
            if (next == SubsetCache::kDead || !fits(next, prefix.size() + 1))
                continue;
            prefix.push_back(x);
            self(self, next);
            prefix.pop_back();
        }
    };
    if (fits(cache.start(), 0))
        dfs(dfs, cache.start());
}

namespace {

/// Letters needed to reach acceptance from each state, ignoring the counter.
std::vector<std::size_t> oc_distance(const OneCounter& m) {
    const auto n = m.num_states();
    std::vector<std::vector<std::pair<State, std::size_t>>> rev(n);
    for (State s = 0; s < n; ++s)
        for (const auto& e : m.edges(s))
            rev[e.to].emplace_back(s, e.letter == kEpsilon ? 0 : 1);
    std::vector<std::size_t> dist(n, kUnreachable);
    std::deque<State> queue;
    for (State s : m.accepting()) {
        dist[s] = 0;
        queue.push_back(s);
    }
    while (!queue.empty()) {
        State s = queue.front();
        queue.pop_front();
        for (auto [p, w] : rev[s])
            if (dist[s] + w < dist[p]) {
                dist[p] = dist[s] + w;
                w == 0 ? queue.push_front(p) : queue.push_back(p);
            }
    }
    return dist;
}

} // namespace

void walk_prefixes(const OneCounter& m, std::size_t max_len, const PrefixVisitor& visit) {
    auto dist = oc_distance(m);
    auto bound = counter_bound(m, max_len);
    const auto k = m.alphabet().size();
    auto fits = [&](const std::vector<Config>& cs, std::size_t len) {
        return std::any_of(cs.begin(), cs.end(), [&](const Config& c) {
            return dist[c.state] != kUnreachable && len + dist[c.state] <= max_len;
        });
    };
    Word prefix;
    auto dfs = [&](auto&& self, const std::vector<Config>& cur) -> void {
        bool acc = std::any_of(cur.begin(), cur.end(), [&](const Config& c) { return m.is_accepting(c.state); });
        if (!visit(prefix, acc) || prefix.size() == max_len)
            return;
        for (Symbol x = 0; x < k; ++x) {
            auto next = oc_step(m, cur, x, bound);
            if (next.empty() || !fits(next, prefix.size() + 1))
                continue;
            prefix.push_back(x);
            self(self, next);
            prefix.pop_back();
        }
    };
    auto start = oc_epsilon_closure(m, {{m.initial(), m.initial_counter()}}, bound);
    if (fits(start, 0))
        dfs(dfs, start);
}

void walk_prefixes(const Machine& m, std::size_t max_len, const PrefixVisitor& visit) {
    if (const auto* n = std::get_if<Nfa>(&m)) {
        walk_prefixes(
            *n, max_len, [&](const Word& w, const std::vector<State>&, bool acc) { return visit(w, acc); });
        return;
    }
    walk_prefixes(std::get<OneCounter>(m), max_len, visit);
}

std::vector<Word> accepted_word_list(const Machine& m, std::size_t max_len) {
    std::vector<Word> words;
    walk_prefixes(m, max_len, [&](const Word& w, bool acc) {
        if (acc)
            words.push_back(w);
        return true;
    });
    return words;
}

} // namespace conelang::automata
