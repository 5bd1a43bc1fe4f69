// tau.hpp -- the syllable-counting ordering quasi-morphism on free products
#pragma once

#include <functional>
#include <utility>
#include <vector>

#include "conelang/groups/group.hpp"

namespace conelang::groups {

/// Sign of a factor element under that factor's (relative) order: +1 or -1,
/// and 0 when the element lies in the amalgamated subgroup.
using SignOracle = std::function<int(const Element&)>;

/// One syllable of a normal form: its factor and its sign.
struct SignedSyllable {
    std::size_t factor;
    int sign;
};

/// #positive - #negative syllables + #index jumps - #index drops, where
/// `rank[f]` is the position of factor f in the index order.
Int tau_of_syllables(const std::vector<SignedSyllable>& syllables, const std::vector<std::size_t>& rank);

/// Index order given as factor indices from smallest to largest.
std::vector<std::size_t> ranks_from_order(const std::vector<std::size_t>& index_order, std::size_t factors);

/// Throws GroupError when an oracle reports 0 for a syllable.
Int tau_value(const FreeProductGroup& group, const std::vector<SignOracle>& orders,
              const std::vector<std::size_t>& index_order, const Element& g);

/// BS(1,m;1,n) with each factor ordered by the sign of its fibre coordinate,
/// i.e. by g(0) > 0 relative to <a>.
Int tau_value(const BsAmalgamGroup& group, const std::vector<std::size_t>& index_order, const Element& g);

/// Sign by the exponent of a cyclic factor.
int cyclic_sign(const Element& g);

/// F2 = <a> * <b> with both factors ordered by positive exponent and
/// <a> before <b>.
GroupPtr f2_as_free_product();
Int f2_tau(const Element& g);
/// The same quasi-morphism read off a reduced word of the free group on a, b.
Int free_word_tau(const FreeWord& w);

} // namespace conelang::groups
