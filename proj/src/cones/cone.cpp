#include "conelang/cones/cone.hpp"

#include "conelang/automata/one_counter.hpp"
#include "conelang/errors.hpp"

namespace conelang::cones {

using namespace automata;

namespace {

Machine reindex(const Machine& m, const Alphabet& alphabet) {
    if (machine_alphabet(m) == alphabet)
        return m;
    if (const auto* nfa = std::get_if<Nfa>(&m))
        return with_alphabet(*nfa, alphabet);
    return oc_with_alphabet(std::get<OneCounter>(m), alphabet);
}

Machine machine_union(const Machine& a, const Machine& b) {
    const auto* na = std::get_if<Nfa>(&a);
    const auto* nb = std::get_if<Nfa>(&b);
    if (na && nb)
        return union_of(*na, *nb);
    auto oa = na ? lift(*na) : std::get<OneCounter>(a);
    auto ob = nb ? lift(*nb) : std::get<OneCounter>(b);
    return oc_union(oa, ob);
}

} // namespace

ConeLanguage make_cone(Machine machine, GroupPtr group, std::vector<std::string> relative_to,
                       std::string provenance) {
    if (!group)
        throw ConstructionError("cone without a group");
    for (const auto& g : relative_to)
        if (!group->alphabet().find(g))
            throw AlphabetError("relative subgroup generator '" + g + "' is not a generator of " + group->name());
    if (!group->alphabet().includes(machine_alphabet(machine)))
        throw AlphabetError("cone machine uses letters outside the generators of " + group->name());
    return {reindex(machine, group->alphabet()), std::move(group), std::move(relative_to), std::move(provenance)};
}

ConeLanguage cone_union_relative(const ConeLanguage& rel, const ConeLanguage& sub) {
    if (!rel.group->alphabet().includes(machine_alphabet(sub.machine)))
        throw AlphabetError("subgroup cone uses letters outside the relative cone's alphabet");
    auto provenance = "union(" + rel.provenance + ", " + sub.provenance + ")";
    return make_cone(machine_union(rel.machine, sub.machine), rel.group, sub.relative_to, std::move(provenance));
}

ConeLanguage lex_quotient_cone(const Machine& l_n, const Nfa& l_q, GroupPtr group, std::string provenance) {
    const auto& x = machine_alphabet(l_n);
    if (!x.disjoint_from(l_q.alphabet()))
        throw AlphabetError("kernel and quotient alphabets overlap");
    auto full = x.merged_with(l_q.alphabet());
    std::vector<std::string> deleted;
    for (const auto& letter : x.letters())
        deleted.push_back(letter.id);
    auto pullback = inverse_hom(l_q, Homomorphism::deleting(full, l_q.alphabet(), deleted));
    return make_cone(machine_union(pullback, l_n), std::move(group), {}, std::move(provenance));
}

} // namespace conelang::cones
