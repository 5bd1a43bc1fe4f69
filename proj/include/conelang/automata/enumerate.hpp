// enumerate.hpp -- depth-first walks over the live prefixes of a machine
#pragma once

#include <functional>
#include <variant>

#include "conelang/automata/nfa.hpp"
#include "conelang/automata/one_counter.hpp"

namespace conelang::automata {

using Machine = std::variant<Nfa, OneCounter>;

const Alphabet& machine_alphabet(const Machine& m);
bool machine_accepts(const Machine& m, const Word& w);

/// Called once per visited prefix, in lexicographic order of symbol indices.
/// Returning false skips the prefix's extensions.
using PrefixVisitor = std::function<bool(const Word& prefix, bool accepted)>;
using NfaPrefixVisitor =
    std::function<bool(const Word& prefix, const std::vector<State>& states, bool accepted)>;

/// Visits every prefix of length <= max_len with a nonempty state set. With
/// `prune`, prefixes that cannot reach acceptance within max_len are skipped.
void walk_prefixes(const Nfa& m, std::size_t max_len, const NfaPrefixVisitor& visit, bool prune = true);
/// Prunes by the counter-free distance to acceptance, a lower bound.
void walk_prefixes(const OneCounter& m, std::size_t max_len, const PrefixVisitor& visit);
void walk_prefixes(const Machine& m, std::size_t max_len, const PrefixVisitor& visit);

/// Accepted words of length <= max_len in walk order.
std::vector<Word> accepted_word_list(const Machine& m, std::size_t max_len);

} // namespace conelang::automata
