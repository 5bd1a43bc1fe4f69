// cone.hpp -- machines tagged with the group whose positive cone they describe
#pragma once

#include <functional>
#include <string>
#include <vector>

#include "conelang/automata/enumerate.hpp"
#include "conelang/groups/group.hpp"

namespace conelang::cones {

using automata::Alphabet;
using automata::Machine;
using automata::Nfa;
using automata::OneCounter;
using automata::Word;
using groups::Element;
using groups::GroupPtr;
using groups::Int;

struct ConeLanguage {
    Machine machine;
    GroupPtr group;
    /// Generators of the subgroup C the cone is relative to; empty for the
    /// trivial subgroup.
    std::vector<std::string> relative_to;
    /// Construction name and parameters, e.g. bs_affine_cone{"q":2}.
    std::string provenance;
};

/// Tags a machine with its group. The machine is re-indexed over the group
/// alphabet; throws AlphabetError if it uses letters the group lacks.
ConeLanguage make_cone(Machine machine, GroupPtr group, std::vector<std::string> relative_to,
                       std::string provenance);

/// P_rel u P_H for a cone `rel` relative to H and a cone `sub` of H.
/// Throws AlphabetError when sub's machine leaves rel's alphabet.
ConeLanguage cone_union_relative(const ConeLanguage& rel, const ConeLanguage& sub);

/// f^-1(P_Q) u P_N for N = <X> normal with quotient Q = <Y>, the quotient
/// map deleting X. `group` must be generated by X and Y; throws
/// AlphabetError when X and Y overlap.
ConeLanguage lex_quotient_cone(const Machine& l_n, const Nfa& l_q, GroupPtr group, std::string provenance);

/// Three-way classification used by closed-form oracles.
enum class Verdict { Negative = -1, Kernel = 0, Positive = 1 };
using Predicate = std::function<Verdict(const Element&)>;

inline Verdict verdict_of(Int sign) {
    return sign > 0 ? Verdict::Positive : (sign < 0 ? Verdict::Negative : Verdict::Kernel);
}

} // namespace conelang::cones
