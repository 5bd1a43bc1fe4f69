#include "conelang/automata/subset.hpp"

#include <algorithm>
#include <deque>

namespace conelang::automata {

std::vector<std::size_t> distance_to_acceptance(const Nfa& m) {
    const auto n = m.num_states();
    std::vector<std::vector<Edge>> rev(n);
    for (State s = 0; s < n; ++s)
        for (const auto& e : m.edges(s))
            rev[e.to].push_back({e.letter, s});

    std::vector<std::size_t> dist(n, kUnreachable);
    std::deque<State> queue;
    for (State s : m.accepting()) {
        dist[s] = 0;
        queue.push_back(s);
    }
    while (!queue.empty()) {
        State s = queue.front();
        queue.pop_front();
        for (const auto& e : rev[s]) {
            std::size_t w = e.letter == kEpsilon ? 0 : 1;
            if (dist[s] + w < dist[e.to]) {
                dist[e.to] = dist[s] + w;
                if (w == 0)
                    queue.push_front(e.to);
                else
                    queue.push_back(e.to);
            }
        }
    }
    return dist;
}

SubsetCache::SubsetCache(const Nfa& m) : m_(&m), state_distance_(distance_to_acceptance(m)) {
    intern(epsilon_closure(m, {m.initial()}));
}

SubsetCache::Id SubsetCache::intern(std::vector<State> closed) {
    auto it = index_.find(closed);
    if (it != index_.end())
        return it->second;
    auto id = static_cast<Id>(subsets_.size());
    bool acc = false;
    std::size_t dist = kUnreachable;
    for (State s : closed) {
        acc |= m_->is_accepting(s);
        dist = std::min(dist, state_distance_[s]);
    }
    accepting_.push_back(acc);
    distance_.push_back(dist);
    table_.resize(table_.size() + m_->alphabet().size(), kUnknown);
    index_.emplace(closed, id);
    subsets_.push_back(std::move(closed));
    return id;
}

SubsetCache::Id SubsetCache::next(Id subset, Symbol letter) {
    auto slot = static_cast<std::size_t>(subset) * m_->alphabet().size() + letter;
    if (table_[slot] != kUnknown)
        return table_[slot];
    auto succ = step(*m_, subsets_[subset], letter);
    Id id = succ.empty() ? kDead : intern(std::move(succ));
    table_[slot] = id;
    return id;
}

} // namespace conelang::automata
