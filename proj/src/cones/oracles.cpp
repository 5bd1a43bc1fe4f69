#include "conelang/cones/oracles.hpp"

#include "conelang/errors.hpp"
#include "conelang/groups/tau.hpp"

namespace conelang::cones {

using namespace groups;

namespace {

template <class T>
const T& as(const Element& g) {
    const auto* x = std::get_if<T>(&g.v);
    if (!x)
        throw GroupError("oracle applied to an element of the wrong group");
    return *x;
}

Int amalgam_tau(const Element& g) {
    static const auto group = bs_amalgam_group(2, 2);
    return tau_value(static_cast<const BsAmalgamGroup&>(*group), {0, 1}, g);
}

} // namespace

Verdict zz_predicate(const Element& g) {
    return verdict_of(as<IntVector>(g).v.at(0));
}

Verdict z2_lex_predicate(const Element& g) {
    const auto& v = as<IntVector>(g).v;
    return v.at(1) != 0 ? verdict_of(v[1]) : verdict_of(v.at(0));
}

Predicate klein_predicate(int b_sign, int a_sign) {
    return [=](const Element& g) {
        const auto& k = as<KleinElem>(g);
        return k.m != 0 ? verdict_of(k.m * a_sign) : verdict_of(k.n * b_sign);
    };
}

Verdict bs_affine_predicate(const Element& g) {
    const auto& x = as<BsElem>(g);
    return !x.x.is_zero() ? verdict_of(x.x.sign()) : verdict_of(x.n);
}

Verdict bs_affine_relative_predicate(const Element& g) {
    return verdict_of(as<BsElem>(g).x.sign());
}

Predicate bs_lex_predicate(int variant) {
    return [=](const Element& g) {
        const auto& x = as<BsElem>(g);
        Int n = variant == 2 || variant == 4 ? -x.n : x.n;
        Int v = n != 0 ? n : x.x.sign();
        return verdict_of(variant >= 3 ? -v : v);
    };
}

Verdict leadcoef_predicate(const Element& g) {
    const auto& x = as<WreathElem>(g);
    return !x.p.is_zero() ? verdict_of(x.p.leading()) : verdict_of(x.s);
}

Verdict f2_tau_predicate(const Element& g) {
    return verdict_of(f2_tau(g));
}

Verdict f2_cross_z_predicate(const Element& g) {
    const auto& x = as<CrossElem>(g);
    return verdict_of(f2_tau(*x.inner) + 2 * x.z);
}

Verdict bs_amalgam_predicate(const Element& g) {
    Int t = amalgam_tau(g);
    return t != 0 ? verdict_of(t) : verdict_of(as<AmalgamElem>(g).shift);
}

Verdict bs_amalgam_cross_z_predicate(const Element& g) {
    const auto& x = as<CrossElem>(g);
    Int v = amalgam_tau(*x.inner) + 2 * x.z;
    return v != 0 ? verdict_of(v) : verdict_of(as<AmalgamElem>(*x.inner).shift);
}

Verdict f2_by_z_predicate(const Element& g) {
    const auto& x = as<FreeByZElem>(g);
    return x.k != 0 ? verdict_of(x.k) : verdict_of(free_word_tau(x.w));
}

Verdict f2_by_z_cross_z_predicate(const Element& g) {
    const auto& c = as<CrossElem>(g);
    const auto& x = as<FreeByZElem>(*c.inner);
    return x.k != 0 ? verdict_of(x.k) : verdict_of(free_word_tau(x.w) + 2 * c.z);
}

} // namespace conelang::cones
