// ball.hpp -- word-metric balls with lexicographically least geodesic witnesses
#pragma once

#include <optional>
#include <unordered_map>
#include <vector>

#include "conelang/groups/group.hpp"

namespace conelang::groups {

struct Ball {
    std::size_t radius = 0;
    /// Breadth-first order; within a sphere, ordered by witness.
    std::vector<Element> elements;
    std::vector<Word> witnesses;
    std::unordered_map<Element, std::size_t, ElementHash> index;

    std::size_t size() const { return elements.size(); }
    bool contains(const Element& g) const { return index.count(g) != 0; }
    std::optional<std::size_t> find(const Element& g) const;
    /// Word length of the element at position i.
    std::size_t length(std::size_t i) const { return witnesses[i].size(); }
};

/// {g : |g| <= radius}, each with its lexicographically least geodesic
/// (letters compared by alphabet index).
Ball ball(const Group& group, std::size_t radius);

} // namespace conelang::groups
