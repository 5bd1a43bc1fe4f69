#include "conelang/groups/group.hpp"

#include <algorithm>
#include <sstream>

#include "conelang/errors.hpp"

namespace conelang::groups {

// ---- Group ----------------------------------------------------------------------

void Group::init(Alphabet alphabet) {
    if (!alphabet.fully_paired())
        throw GroupError("group generators must be closed under formal inverses");
    alphabet_ = std::move(alphabet);
    generators_.clear();
    for (Symbol s = 0; s < alphabet_.size(); ++s)
        generators_.push_back(generator_image(s));
    for (Symbol s = 0; s < alphabet_.size(); ++s)
        if (!is_identity(multiply(generators_[s], generators_[*alphabet_.inverse(s)])))
            throw GroupError("evaluation does not respect the inverse pairing of '" + alphabet_.id(s) + "'");
}

Element Group::evaluate(const Word& w) const {
    automata::check_word(alphabet_, w);
    Element g = identity();
    for (Symbol s : w)
        g = multiply(g, generators_[s]);
    return g;
}

bool Group::in_subgroup(const Element& g, const std::vector<std::string>& gens) const {
    if (gens.empty())
        return is_identity(g);
    throw GroupError("subgroup membership for these generators is not supported in " + name());
}

void Group::check_kind(bool ok) const {
    if (!ok)
        throw GroupError("element does not belong to " + name());
}

namespace {

/// Index of the generator behind a letter of a paired alphabet, and its sign.
std::pair<std::size_t, int> generator_of(Symbol s) {
    return {s / 2, s % 2 == 0 ? 1 : -1};
}

std::string power(const std::string& base, Int e) {
    if (e == 1)
        return base;
    return base + "^" + std::to_string(e);
}

std::string fibre_string(const Fibre& x, Int base) {
    std::ostringstream out;
    out << x.num;
    if (x.exp > 0)
        out << "/" << base << (x.exp > 1 ? "^" + std::to_string(x.exp) : "");
    return out.str();
}

std::vector<std::string> base_names(const Alphabet& a) {
    std::vector<std::string> names;
    for (Symbol s = 0; s < a.size(); s += 2)
        names.push_back(a.id(s));
    return names;
}

} // namespace

// ---- free abelian ---------------------------------------------------------------

FreeAbelianGroup::FreeAbelianGroup(std::vector<std::string> generators) : rank_(generators.size()) {
    init(Alphabet::paired(generators));
}

std::string FreeAbelianGroup::name() const {
    return rank_ == 1 ? "Z" : "Z^" + std::to_string(rank_);
}

Element FreeAbelianGroup::identity() const {
    return {IntVector{std::vector<Int>(rank_, 0)}};
}

Element FreeAbelianGroup::generator_image(Symbol s) const {
    auto [i, sign] = generator_of(s);
    IntVector v{std::vector<Int>(rank_, 0)};
    v.v[i] = sign;
    return {v};
}

Element FreeAbelianGroup::multiply(const Element& g, const Element& h) const {
    const auto* x = std::get_if<IntVector>(&g.v);
    const auto* y = std::get_if<IntVector>(&h.v);
    check_kind(x && y && x->v.size() == rank_ && y->v.size() == rank_);
    IntVector r = *x;
    for (std::size_t i = 0; i < rank_; ++i)
        r.v[i] += y->v[i];
    return {r};
}

Element FreeAbelianGroup::invert(const Element& g) const {
    const auto* x = std::get_if<IntVector>(&g.v);
    check_kind(x != nullptr);
    IntVector r = *x;
    for (auto& c : r.v)
        c = -c;
    return {r};
}

std::string FreeAbelianGroup::format(const Element& g) const {
    const auto& v = std::get<IntVector>(g.v).v;
    auto names = base_names(alphabet());
    std::string out;
    for (std::size_t i = 0; i < rank_; ++i)
        if (v[i] != 0)
            out += (out.empty() ? "" : " ") + power(names[i], v[i]);
    return out.empty() ? "1" : out;
}

bool FreeAbelianGroup::in_subgroup(const Element& g, const std::vector<std::string>& gens) const {
    const auto& v = std::get<IntVector>(g.v).v;
    auto names = base_names(alphabet());
    for (std::size_t i = 0; i < rank_; ++i)
        if (v[i] != 0 && std::find(gens.begin(), gens.end(), names[i]) == gens.end())
            return false;
    return true;
}

// ---- free -----------------------------------------------------------------------

FreeWord free_multiply(const FreeWord& u, const FreeWord& v) {
    FreeWord r = u;
    for (auto x : v.letters) {
        if (!r.letters.empty() && r.letters.back() == -x)
            r.letters.pop_back();
        else
            r.letters.push_back(x);
    }
    return r;
}

FreeWord free_invert(const FreeWord& u) {
    FreeWord r;
    r.letters.reserve(u.letters.size());
    for (auto it = u.letters.rbegin(); it != u.letters.rend(); ++it)
        r.letters.push_back(-*it);
    return r;
}

namespace {

std::string free_word_string(const FreeWord& w, const std::vector<std::string>& names) {
    if (w.letters.empty())
        return "1";
    std::string out;
    for (auto x : w.letters) {
        if (!out.empty())
            out += ' ';
        out += names[static_cast<std::size_t>(std::abs(x) - 1)];
        if (x < 0)
            out += automata::kInverseSuffix;
    }
    return out;
}

} // namespace

FreeGroup::FreeGroup(std::vector<std::string> generators) : names_(generators) {
    init(Alphabet::paired(generators));
}

std::string FreeGroup::name() const {
    return "F" + std::to_string(names_.size());
}

Element FreeGroup::identity() const {
    return {FreeWord{}};
}

Element FreeGroup::generator_image(Symbol s) const {
    auto [i, sign] = generator_of(s);
    return {FreeWord{{static_cast<std::int32_t>(sign * static_cast<int>(i + 1))}}};
}

Element FreeGroup::multiply(const Element& g, const Element& h) const {
    const auto* x = std::get_if<FreeWord>(&g.v);
    const auto* y = std::get_if<FreeWord>(&h.v);
    check_kind(x && y);
    return {free_multiply(*x, *y)};
}

Element FreeGroup::invert(const Element& g) const {
    const auto* x = std::get_if<FreeWord>(&g.v);
    check_kind(x != nullptr);
    return {free_invert(*x)};
}

std::string FreeGroup::format(const Element& g) const {
    return free_word_string(std::get<FreeWord>(g.v), names_);
}

// ---- Klein bottle ---------------------------------------------------------------

KleinBottleGroup::KleinBottleGroup() {
    init(Alphabet::paired({"a", "b"}));
}

Element KleinBottleGroup::identity() const {
    return {KleinElem{}};
}

Element KleinBottleGroup::generator_image(Symbol s) const {
    auto [i, sign] = generator_of(s);
    return {i == 0 ? KleinElem{0, sign} : KleinElem{sign, 0}};
}

Element KleinBottleGroup::multiply(const Element& g, const Element& h) const {
    const auto* x = std::get_if<KleinElem>(&g.v);
    const auto* y = std::get_if<KleinElem>(&h.v);
    check_kind(x && y);
    Int twist = (x->m % 2 == 0) ? y->n : -y->n;
    return {KleinElem{x->n + twist, x->m + y->m}};
}

Element KleinBottleGroup::invert(const Element& g) const {
    const auto* x = std::get_if<KleinElem>(&g.v);
    check_kind(x != nullptr);
    // (n, m)^-1 = (-(-1)^m n, -m)
    Int n = (x->m % 2 == 0) ? -x->n : x->n;
    return {KleinElem{n, -x->m}};
}

std::string KleinBottleGroup::format(const Element& g) const {
    const auto& x = std::get<KleinElem>(g.v);
    std::string out;
    if (x.n != 0)
        out += power("b", x.n);
    if (x.m != 0)
        out += (out.empty() ? "" : " ") + power("a", x.m);
    return out.empty() ? "1" : out;
}

// ---- BS(1,q) --------------------------------------------------------------------

BsGroup::BsGroup(Int q) : q_(q) {
    if (q == 0)
        throw GroupError("BS(1,q) needs q != 0");
    init(Alphabet::paired({"a", "b"}));
    // a b a^-1 must equal b^q under the chosen convention.
    Element lhs = evaluate(automata::parse_word(alphabet(), "a b a'"));
    Element rhs{BsElem{Fibre::integer(q), 0}};
    if (!(lhs == rhs))
        throw GroupError("BS(1,q) multiplication convention violates a b a^-1 = b^q");
}

std::string BsGroup::name() const {
    return "BS(1," + std::to_string(q_) + ")";
}

Element BsGroup::identity() const {
    return {BsElem{}};
}

Element BsGroup::generator_image(Symbol s) const {
    auto [i, sign] = generator_of(s);
    return {i == 0 ? BsElem{{}, sign} : BsElem{Fibre::integer(sign), 0}};
}

Element BsGroup::multiply(const Element& g, const Element& h) const {
    const auto* x = std::get_if<BsElem>(&g.v);
    const auto* y = std::get_if<BsElem>(&h.v);
    check_kind(x && y);
    return {BsElem{add(x->x, scale(y->x, q_, x->n), base()), x->n + y->n}};
}

Element BsGroup::invert(const Element& g) const {
    const auto* x = std::get_if<BsElem>(&g.v);
    check_kind(x != nullptr);
    return {BsElem{negate(scale(x->x, q_, -x->n)), -x->n}};
}

std::string BsGroup::format(const Element& g) const {
    const auto& x = std::get<BsElem>(g.v);
    return "(" + fibre_string(x.x, base()) + ", " + std::to_string(x.n) + ")";
}

bool BsGroup::in_subgroup(const Element& g, const std::vector<std::string>& gens) const {
    const auto& x = std::get<BsElem>(g.v);
    if (gens == std::vector<std::string>{"a"})
        return x.x.is_zero();
    return Group::in_subgroup(g, gens);
}

// ---- Z wr Z ---------------------------------------------------------------------

WreathZZGroup::WreathZZGroup() {
    init(Alphabet::paired({"t", "c"}));
}

Element WreathZZGroup::identity() const {
    return {WreathElem{}};
}

Element WreathZZGroup::generator_image(Symbol s) const {
    auto [i, sign] = generator_of(s);
    return {i == 0 ? WreathElem{{}, sign} : WreathElem{laurent_monomial(sign, 0), 0}};
}

Element WreathZZGroup::multiply(const Element& g, const Element& h) const {
    const auto* x = std::get_if<WreathElem>(&g.v);
    const auto* y = std::get_if<WreathElem>(&h.v);
    check_kind(x && y);
    return {WreathElem{laurent_add(x->p, y->p, x->s), x->s + y->s}};
}

Element WreathZZGroup::invert(const Element& g) const {
    const auto* x = std::get_if<WreathElem>(&g.v);
    check_kind(x != nullptr);
    // (p, s)^-1 = (-X^-s p, -s)
    return {WreathElem{laurent_shift(laurent_negate(x->p), -x->s), -x->s}};
}

std::string WreathZZGroup::format(const Element& g) const {
    const auto& x = std::get<WreathElem>(g.v);
    std::string poly;
    for (Int k = x.p.high(); !x.p.is_zero() && k >= x.p.low; --k) {
        Int c = x.p.at(k);
        if (c == 0)
            continue;
        std::string term = k == 0 ? std::to_string(c < 0 ? -c : c)
                                  : ((c == 1 || c == -1) ? "" : std::to_string(c < 0 ? -c : c)) + power("X", k);
        if (poly.empty())
            poly = (c < 0 ? "-" : "") + term;
        else
            poly += (c < 0 ? " - " : " + ") + term;
    }
    return "(" + (poly.empty() ? "0" : poly) + ", " + std::to_string(x.s) + ")";
}

// ---- free products --------------------------------------------------------------

namespace {

Alphabet joined_alphabet(const std::vector<GroupPtr>& factors) {
    Alphabet acc;
    for (const auto& f : factors) {
        if (!acc.disjoint_from(f->alphabet()))
            throw GroupError("free product factors must have disjoint generators");
        acc = acc.merged_with(f->alphabet());
    }
    return acc;
}

} // namespace

FreeProductGroup::FreeProductGroup(std::vector<GroupPtr> factors) : factors_(std::move(factors)) {
    if (factors_.size() < 2)
        throw GroupError("a free product needs at least two factors");
    Alphabet a = joined_alphabet(factors_);
    for (std::size_t f = 0; f < factors_.size(); ++f)
        for (Symbol s = 0; s < factors_[f]->alphabet().size(); ++s) {
            letter_factor_.push_back(f);
            letter_local_.push_back(s);
        }
    init(std::move(a));
}

std::string FreeProductGroup::name() const {
    std::string out;
    for (const auto& f : factors_)
        out += (out.empty() ? "" : " * ") + f->name();
    return out;
}

Element FreeProductGroup::identity() const {
    return {ProductElem{}};
}

Element FreeProductGroup::generator_image(Symbol s) const {
    const auto f = letter_factor_.at(s);
    Element g = factors_[f]->generator(letter_local_[s]);
    if (factors_[f]->is_identity(g))
        return identity();
    return {ProductElem{{static_cast<std::uint32_t>(f)}, {std::move(g)}}};
}

Element FreeProductGroup::multiply(const Element& g, const Element& h) const {
    const auto* x = std::get_if<ProductElem>(&g.v);
    const auto* y = std::get_if<ProductElem>(&h.v);
    check_kind(x && y);
    ProductElem r = *x;
    for (std::size_t i = 0; i < y->syllables.size(); ++i) {
        auto f = y->factors[i];
        if (!r.factors.empty() && r.factors.back() == f) {
            Element merged = factors_[f]->multiply(r.syllables.back(), y->syllables[i]);
            r.factors.pop_back();
            r.syllables.pop_back();
            if (!factors_[f]->is_identity(merged)) {
                r.factors.push_back(f);
                r.syllables.push_back(std::move(merged));
            }
        } else {
            r.factors.push_back(f);
            r.syllables.push_back(y->syllables[i]);
        }
    }
    return {std::move(r)};
}

Element FreeProductGroup::invert(const Element& g) const {
    const auto* x = std::get_if<ProductElem>(&g.v);
    check_kind(x != nullptr);
    ProductElem r;
    for (std::size_t i = x->syllables.size(); i-- > 0;) {
        r.factors.push_back(x->factors[i]);
        r.syllables.push_back(factors_[x->factors[i]]->invert(x->syllables[i]));
    }
    return {std::move(r)};
}

std::string FreeProductGroup::format(const Element& g) const {
    const auto& x = std::get<ProductElem>(g.v);
    if (x.syllables.empty())
        return "1";
    std::string out;
    for (std::size_t i = 0; i < x.syllables.size(); ++i)
        out += (i ? " . " : "") + factors_[x.factors[i]]->format(x.syllables[i]);
    return out;
}

// ---- G x Z ----------------------------------------------------------------------

CrossZGroup::CrossZGroup(GroupPtr inner, std::string generator) : inner_(std::move(inner)), z_(std::move(generator)) {
    Alphabet zs = Alphabet::paired({z_});
    if (!inner_->alphabet().disjoint_from(zs))
        throw GroupError("generator '" + z_ + "' clashes with the inner group");
    init(inner_->alphabet().merged_with(zs));
}

std::string CrossZGroup::name() const {
    return "(" + inner_->name() + ") x Z";
}

Element CrossZGroup::identity() const {
    return {CrossElem{inner_->identity(), 0}};
}

Element CrossZGroup::generator_image(Symbol s) const {
    const auto n = inner_->alphabet().size();
    if (s < n)
        return {CrossElem{inner_->generator(s), 0}};
    return {CrossElem{inner_->identity(), s == n ? 1 : -1}};
}

Element CrossZGroup::multiply(const Element& g, const Element& h) const {
    const auto* x = std::get_if<CrossElem>(&g.v);
    const auto* y = std::get_if<CrossElem>(&h.v);
    check_kind(x && y);
    return {CrossElem{inner_->multiply(*x->inner, *y->inner), x->z + y->z}};
}

Element CrossZGroup::invert(const Element& g) const {
    const auto* x = std::get_if<CrossElem>(&g.v);
    check_kind(x != nullptr);
    return {CrossElem{inner_->invert(*x->inner), -x->z}};
}

std::string CrossZGroup::format(const Element& g) const {
    const auto& x = std::get<CrossElem>(g.v);
    return "(" + inner_->format(*x.inner) + ", " + std::to_string(x.z) + ")";
}

bool CrossZGroup::in_subgroup(const Element& g, const std::vector<std::string>& gens) const {
    const auto& x = std::get<CrossElem>(g.v);
    std::vector<std::string> inner_gens;
    bool with_z = false;
    for (const auto& id : gens) {
        if (id == z_)
            with_z = true;
        else
            inner_gens.push_back(id);
    }
    return (with_z || x.z == 0) && inner_->in_subgroup(*x.inner, inner_gens);
}

// ---- BS(1,m) *_<a> BS(1,n) ------------------------------------------------------

BsAmalgamGroup::BsAmalgamGroup(Int m, Int n) : m_(m), n_(n) {
    if (m < 1 || n < 1)
        throw GroupError("BS(1,m;1,n) needs m, n >= 1");
    init(Alphabet::paired({"a", "b", "c"}));
}

std::string BsAmalgamGroup::name() const {
    return "BS(1," + std::to_string(m_) + ";1," + std::to_string(n_) + ")";
}

Element BsAmalgamGroup::identity() const {
    return {AmalgamElem{}};
}

Element BsAmalgamGroup::generator_image(Symbol s) const {
    auto [i, sign] = generator_of(s);
    if (i == 0)
        return {AmalgamElem{{}, {}, sign}};
    return {AmalgamElem{{static_cast<std::uint8_t>(i - 1)}, {Fibre::integer(sign)}, 0}};
}

void BsAmalgamGroup::append(AmalgamElem& acc, std::uint8_t factor, const Fibre& x) const {
    if (!acc.factors.empty() && acc.factors.back() == factor) {
        Fibre sum = add(acc.xs.back(), x, q(factor));
        acc.factors.pop_back();
        acc.xs.pop_back();
        if (!sum.is_zero()) {
            acc.factors.push_back(factor);
            acc.xs.push_back(std::move(sum));
        }
        return;
    }
    acc.factors.push_back(factor);
    acc.xs.push_back(x);
}

Element BsAmalgamGroup::multiply(const Element& g, const Element& h) const {
    const auto* x = std::get_if<AmalgamElem>(&g.v);
    const auto* y = std::get_if<AmalgamElem>(&h.v);
    check_kind(x && y);
    AmalgamElem r = *x;
    // a^e y a^-e rescales each fibre syllable by its factor's multiplier.
    for (std::size_t i = 0; i < y->xs.size(); ++i)
        append(r, y->factors[i], scale(y->xs[i], q(y->factors[i]), x->shift));
    r.shift = x->shift + y->shift;
    return {std::move(r)};
}

Element BsAmalgamGroup::invert(const Element& g) const {
    const auto* x = std::get_if<AmalgamElem>(&g.v);
    check_kind(x != nullptr);
    AmalgamElem r;
    for (std::size_t i = x->xs.size(); i-- > 0;) {
        r.factors.push_back(x->factors[i]);
        r.xs.push_back(negate(scale(x->xs[i], q(x->factors[i]), -x->shift)));
    }
    r.shift = -x->shift;
    return {std::move(r)};
}

std::string BsAmalgamGroup::format(const Element& g) const {
    const auto& x = std::get<AmalgamElem>(g.v);
    std::string out;
    for (std::size_t i = 0; i < x.xs.size(); ++i)
        out += (out.empty() ? "" : " ") + std::string(x.factors[i] == 0 ? "b" : "c") + "^(" +
               fibre_string(x.xs[i], q(x.factors[i])) + ")";
    if (x.shift != 0)
        out += (out.empty() ? "" : " ") + power("a", x.shift);
    return out.empty() ? "1" : out;
}

bool BsAmalgamGroup::in_subgroup(const Element& g, const std::vector<std::string>& gens) const {
    const auto& x = std::get<AmalgamElem>(g.v);
    if (gens == std::vector<std::string>{"a"})
        return x.xs.empty();
    return Group::in_subgroup(g, gens);
}

// ---- F2 x| Z --------------------------------------------------------------------

FreeByCyclicGroup::FreeByCyclicGroup() {
    init(Alphabet::paired({"a", "b", "s"}));
}

FreeWord FreeByCyclicGroup::twist(const FreeWord& w, Int k) {
    if (k == 0)
        return w;
    FreeWord bk;
    for (Int i = 0; i < (k < 0 ? -k : k); ++i)
        bk.letters.push_back(k < 0 ? -2 : 2);
    FreeWord r;
    for (auto x : w.letters) {
        if (x == 1)
            r = free_multiply(free_multiply(r, FreeWord{{1}}), bk);
        else if (x == -1)
            r = free_multiply(free_multiply(r, free_invert(bk)), FreeWord{{-1}});
        else
            r = free_multiply(r, FreeWord{{x}});
    }
    return r;
}

Element FreeByCyclicGroup::identity() const {
    return {FreeByZElem{}};
}

Element FreeByCyclicGroup::generator_image(Symbol s) const {
    auto [i, sign] = generator_of(s);
    if (i == 2)
        return {FreeByZElem{{}, sign}};
    return {FreeByZElem{FreeWord{{static_cast<std::int32_t>(sign * static_cast<int>(i + 1))}}, 0}};
}

Element FreeByCyclicGroup::multiply(const Element& g, const Element& h) const {
    const auto* x = std::get_if<FreeByZElem>(&g.v);
    const auto* y = std::get_if<FreeByZElem>(&h.v);
    check_kind(x && y);
    return {FreeByZElem{free_multiply(x->w, twist(y->w, x->k)), x->k + y->k}};
}

Element FreeByCyclicGroup::invert(const Element& g) const {
    const auto* x = std::get_if<FreeByZElem>(&g.v);
    check_kind(x != nullptr);
    return {FreeByZElem{twist(free_invert(x->w), -x->k), -x->k}};
}

std::string FreeByCyclicGroup::format(const Element& g) const {
    const auto& x = std::get<FreeByZElem>(g.v);
    return "(" + free_word_string(x.w, {"a", "b"}) + ", " + std::to_string(x.k) + ")";
}

bool FreeByCyclicGroup::in_subgroup(const Element& g, const std::vector<std::string>& gens) const {
    const auto& x = std::get<FreeByZElem>(g.v);
    auto sorted = gens;
    std::sort(sorted.begin(), sorted.end());
    if (sorted == std::vector<std::string>{"a", "b"})
        return x.k == 0;
    return Group::in_subgroup(g, gens);
}

// ---- factories ------------------------------------------------------------------

GroupPtr free_abelian_group(std::vector<std::string> generators) {
    return std::make_shared<FreeAbelianGroup>(std::move(generators));
}

GroupPtr free_group(std::vector<std::string> generators) {
    return std::make_shared<FreeGroup>(std::move(generators));
}

GroupPtr klein_bottle_group() {
    return std::make_shared<KleinBottleGroup>();
}

GroupPtr bs_group(Int q) {
    return std::make_shared<BsGroup>(q);
}

GroupPtr wreath_zz_group() {
    return std::make_shared<WreathZZGroup>();
}

GroupPtr free_product_group(std::vector<GroupPtr> factors) {
    return std::make_shared<FreeProductGroup>(std::move(factors));
}

GroupPtr cross_z_group(GroupPtr inner, std::string generator) {
    return std::make_shared<CrossZGroup>(std::move(inner), std::move(generator));
}

GroupPtr bs_amalgam_group(Int m, Int n) {
    return std::make_shared<BsAmalgamGroup>(m, n);
}

GroupPtr free_by_cyclic_group() {
    return std::make_shared<FreeByCyclicGroup>();
}

} // namespace conelang::groups
