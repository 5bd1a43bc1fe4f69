// subset.hpp -- on-the-fly subset construction over an NFA
#pragma once

#include <cstdint>
#include <limits>
#include <map>
#include <vector>

#include "conelang/automata/nfa.hpp"

namespace conelang::automata {

inline constexpr std::size_t kUnreachable = std::numeric_limits<std::size_t>::max();

/// Minimum number of letters needed to reach an accepting state from each
/// state (epsilon-moves are free); kUnreachable when acceptance is out of reach.
std::vector<std::size_t> distance_to_acceptance(const Nfa& m);

/// Determinizes lazily: subsets are materialized the first time a DFS or a
/// simulation reaches them, and transitions are memoized.
class SubsetCache {
public:
    using Id = std::uint32_t;
    static constexpr Id kDead = std::numeric_limits<Id>::max();

    explicit SubsetCache(const Nfa& m);

    Id start() const { return 0; }
    Id next(Id subset, Symbol letter);
    bool accepting(Id subset) const { return accepting_[subset]; }
    /// Lower bound on the letters still needed before acceptance.
    std::size_t distance(Id subset) const { return distance_[subset]; }
    const std::vector<State>& states(Id subset) const { return subsets_[subset]; }
    std::size_t size() const { return subsets_.size(); }
    const Nfa& machine() const { return *m_; }

private:
    Id intern(std::vector<State> closed);

    static constexpr Id kUnknown = kDead - 1;

    const Nfa* m_;
    std::vector<std::size_t> state_distance_;
    std::vector<std::vector<State>> subsets_;
    std::vector<bool> accepting_;
    std::vector<std::size_t> distance_;
    std::vector<Id> table_;
    std::map<std::vector<State>, Id> index_;
};

} // namespace conelang::automata
