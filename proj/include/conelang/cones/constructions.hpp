// constructions.hpp -- the regular and one-counter cones of the solvable examples
#pragma once

#include <optional>
#include <vector>

#include "conelang/cones/cone.hpp"

namespace conelang::cones {

/// {t}^+ on Z.
ConeLanguage zz_cyclic();

/// Words over {t, t'} none of whose factors has balance below -2. A regular
/// language with all states accepting.
Nfa fig2_automaton();

/// #t(w) > #t'(w) over {t, t'}, counting the excess of whichever letter leads.
OneCounter fig3_onecounter();

/// L_quot = {a'^m b^k a^m : m >= 0, k in Z} over {a, b}.
OneCounter lquot_onecounter();

/// Lexicographic cone on Z^2 = <x> x <y> led by y.
ConeLanguage z2_lex();

/// Image of z2_lex's machine in {t, t'}* under x -> 1, y -> t.
Nfa z2_lex_projection();
/// t t'^+ t^+, whose balance dips below any fixed bound.
Nfa coarse_counterexample();

/// The four cones of the Klein bottle group, in the order (+,+), (+,-),
/// (-,+), (-,-) of (sign of b, sign of a).
std::vector<ConeLanguage> klein_orders();
ConeLanguage klein_order(int b_sign, int a_sign);

/// P_0 = {a^n a^-m b^k a^m : k >= 1, m >= 0}, relative to <a>.
/// Throws InvalidParameter for q < 2.
ConeLanguage bs_affine_relative_cone(Int q);
/// P_0 u {a}^+, the affine cone g(0) > 0 or g in <a>^+.
ConeLanguage bs_affine_cone(Int q);
/// The accepted word a^j b^k a^l (j = min(n, -e), l = n - j) for an affine
/// positive (x, n), x = num / q^e, or a^n when x = 0 and n > 0. Empty for
/// other elements or when the word would exceed max_len letters.
std::optional<automata::Word> bs_affine_witness(Int q, const Element& g, bool with_a_run,
                                                std::size_t max_len = 1u << 16);

/// Variant 1: n > 0 or (n = 0 and x > 0). Variant 2 flips the sign of n,
/// variants 3 and 4 are the inverses of 1 and 2. Throws InvalidParameter
/// for q = 0 or a variant outside 1..4.
ConeLanguage bs_lex_onecounter(Int q, int variant);

/// Y* L_N M_Q (X* M_Q)* Y* u L_Q with M_Q the formal inverse of L_Q.
ConeLanguage wreath_cone(const Nfa& l_n, const Nfa& l_q, GroupPtr group, std::string provenance);
ConeLanguage wreath_cone_zz();
/// For (p, s) with positive leading coefficient, the word
/// t^h c^p_h t' c^p_(h-1) ... t' c^p_low t' Y* of wreath_cone_zz, with the
/// final t-run restoring s; t^s for (0, s), s > 0. Empty otherwise.
std::optional<automata::Word> wreath_zz_witness(const Element& g);
/// Hand-built automaton for Z wr Z, cone of positive leading coefficient.
ConeLanguage zwrz_cone();

} // namespace conelang::cones
