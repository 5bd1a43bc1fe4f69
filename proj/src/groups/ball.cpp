#include "conelang/groups/ball.hpp"

namespace conelang::groups {

std::optional<std::size_t> Ball::find(const Element& g) const {
    auto it = index.find(g);
    if (it == index.end())
        return std::nullopt;
    return it->second;
}

Ball ball(const Group& group, std::size_t radius) {
    Ball b;
    b.radius = radius;
    b.elements.push_back(group.identity());
    b.witnesses.emplace_back();
    b.index.emplace(b.elements.back(), 0);
    // Parents are expanded in witness order and letters in index order, so
    // the first discovery of an element is its least geodesic.
    for (std::size_t i = 0; i < b.elements.size(); ++i) {
        if (b.witnesses[i].size() == radius)
            continue;
        for (Symbol s = 0; s < group.alphabet().size(); ++s) {
            Element h = group.multiply(b.elements[i], group.generator(s));
            if (b.index.count(h))
                continue;
            Word w = b.witnesses[i];
            w.push_back(s);
            b.index.emplace(h, b.elements.size());
            b.elements.push_back(std::move(h));
            b.witnesses.push_back(std::move(w));
        }
    }
    return b;
}

} // namespace conelang::groups
