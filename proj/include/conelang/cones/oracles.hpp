// oracles.hpp -- closed-form positivity predicates for the constructed cones
#pragma once

#include "conelang/cones/cone.hpp"

namespace conelang::cones {

/// Positive exponent on Z.
Verdict zz_predicate(const Element& g);
/// (x, y) in Z^2: y > 0, or y = 0 and x > 0.
Verdict z2_lex_predicate(const Element& g);
/// b^n a^m in K, led by the sign of m.
Predicate klein_predicate(int b_sign, int a_sign);
/// (x, n) in BS(1,q): x > 0, or x = 0 and n > 0.
Verdict bs_affine_predicate(const Element& g);
/// Same without the <a> part, which is the kernel.
Verdict bs_affine_relative_predicate(const Element& g);
Predicate bs_lex_predicate(int variant);
/// (p, s) in Z wr Z: leading coefficient of p positive, or p = 0 and s > 0.
Verdict leadcoef_predicate(const Element& g);
/// Sign of tau on F2 = <a> * <b>.
Verdict f2_tau_predicate(const Element& g);
/// Sign of tau(g) + 2n on (F2 = <a> * <b>) x Z.
Verdict f2_cross_z_predicate(const Element& g);
/// Sign of tau, falling back to the a-exponent on <a>.
Verdict bs_amalgam_predicate(const Element& g);
Verdict bs_amalgam_cross_z_predicate(const Element& g);
/// s-exponent first, then tau of the F2 part.
Verdict f2_by_z_predicate(const Element& g);
Verdict f2_by_z_cross_z_predicate(const Element& g);

} // namespace conelang::cones
