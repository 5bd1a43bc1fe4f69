#include "conelang/groups/tau.hpp"

#include "conelang/errors.hpp"

namespace conelang::groups {

Int tau_of_syllables(const std::vector<SignedSyllable>& syllables, const std::vector<std::size_t>& rank) {
    Int tau = 0;
    for (std::size_t i = 0; i < syllables.size(); ++i) {
        tau += syllables[i].sign;
        if (i + 1 < syllables.size()) {
            auto here = rank.at(syllables[i].factor);
            auto next = rank.at(syllables[i + 1].factor);
            tau += here < next ? 1 : (here > next ? -1 : 0);
        }
    }
    return tau;
}

std::vector<std::size_t> ranks_from_order(const std::vector<std::size_t>& index_order, std::size_t factors) {
    if (index_order.size() != factors)
        throw GroupError("index order must list every factor exactly once");
    std::vector<std::size_t> rank(factors, factors);
    for (std::size_t pos = 0; pos < index_order.size(); ++pos) {
        auto f = index_order[pos];
        if (f >= factors || rank[f] != factors)
            throw GroupError("index order must list every factor exactly once");
        rank[f] = pos;
    }
    return rank;
}

Int tau_value(const FreeProductGroup& group, const std::vector<SignOracle>& orders,
              const std::vector<std::size_t>& index_order, const Element& g) {
    const auto* x = std::get_if<ProductElem>(&g.v);
    if (!x)
        throw GroupError("tau needs an element of a free product");
    if (orders.size() != group.factors().size())
        throw GroupError("tau needs one order per free factor");
    auto rank = ranks_from_order(index_order, group.factors().size());
    std::vector<SignedSyllable> syllables;
    for (std::size_t i = 0; i < x->syllables.size(); ++i) {
        int sign = orders[x->factors[i]](x->syllables[i]);
        if (sign == 0)
            throw GroupError("factor order reports identity for a syllable of a normal form");
        syllables.push_back({x->factors[i], sign > 0 ? 1 : -1});
    }
    return tau_of_syllables(syllables, rank);
}

Int tau_value(const BsAmalgamGroup&, const std::vector<std::size_t>& index_order, const Element& g) {
    const auto* x = std::get_if<AmalgamElem>(&g.v);
    if (!x)
        throw GroupError("tau needs an element of BS(1,m;1,n)");
    auto rank = ranks_from_order(index_order, 2);
    std::vector<SignedSyllable> syllables;
    for (std::size_t i = 0; i < x->xs.size(); ++i)
        syllables.push_back({x->factors[i], x->xs[i].sign()});
    return tau_of_syllables(syllables, rank);
}

int cyclic_sign(const Element& g) {
    const auto& v = std::get<IntVector>(g.v).v;
    return v.at(0) > 0 ? 1 : (v.at(0) < 0 ? -1 : 0);
}

GroupPtr f2_as_free_product() {
    return free_product_group({cyclic_group("a"), cyclic_group("b")});
}

Int f2_tau(const Element& g) {
    static const auto group = f2_as_free_product();
    return tau_value(static_cast<const FreeProductGroup&>(*group), {cyclic_sign, cyclic_sign}, {0, 1}, g);
}

Int free_word_tau(const FreeWord& w) {
    std::vector<SignedSyllable> syllables;
    for (std::size_t i = 0; i < w.letters.size(); ++i) {
        auto l = w.letters[i];
        std::size_t factor = static_cast<std::size_t>(l < 0 ? -l : l) - 1;
        if (factor > 1)
            throw GroupError("free_word_tau handles the free group of rank 2 only");
        if (i > 0 && w.letters[i - 1] == l)
            continue;
        syllables.push_back({factor, l > 0 ? 1 : -1});
    }
    return tau_of_syllables(syllables, {0, 1});
}

} // namespace conelang::groups
