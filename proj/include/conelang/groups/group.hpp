// group.hpp -- the concrete groups cones are audited against
#pragma once

#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "conelang/automata/alphabet.hpp"
#include "conelang/groups/element.hpp"

namespace conelang::groups {

using automata::Alphabet;
using automata::Symbol;
using automata::Word;

class Group;
using GroupPtr = std::shared_ptr<const Group>;

/// Finitely generated group with exact canonical forms. Equality of elements
/// is equality of canonical forms.
class Group {
public:
    virtual ~Group() = default;

    /// Short description such as "BS(1,2)".
    virtual std::string name() const = 0;
    /// Generators g, g' in declaration order.
    const Alphabet& alphabet() const { return alphabet_; }

    virtual Element identity() const = 0;
    virtual Element multiply(const Element& g, const Element& h) const = 0;
    virtual Element invert(const Element& g) const = 0;
    virtual std::string format(const Element& g) const = 0;

    bool is_identity(const Element& g) const { return g == identity(); }
    const Element& generator(Symbol s) const { return generators_.at(s); }
    /// Throws RejectedInputError on a letter outside the generators.
    Element evaluate(const Word& w) const;

    /// Membership in the subgroup generated by the named generators. Only
    /// the subgroups the constructions use are supported; others throw
    /// GroupError. The empty list is the trivial subgroup.
    virtual bool in_subgroup(const Element& g, const std::vector<std::string>& gens) const;

protected:
    /// Derived constructors call this once the alphabet is known.
    void init(Alphabet alphabet);
    virtual Element generator_image(Symbol s) const = 0;
    void check_kind(bool ok) const;

private:
    Alphabet alphabet_;
    std::vector<Element> generators_;
};

/// Z^rank; rank 1 is the cyclic group.
GroupPtr free_abelian_group(std::vector<std::string> generators);
inline GroupPtr cyclic_group(std::string generator = "t") { return free_abelian_group({std::move(generator)}); }
GroupPtr free_group(std::vector<std::string> generators);
/// <a, b | a b a^-1 = b^-1>, elements b^n a^m.
GroupPtr klein_bottle_group();
/// <a, b | a b a^-1 = b^q> as Z[1/q] x| Z. Throws GroupError for q = 0.
GroupPtr bs_group(Int q);
/// Z wr Z with generators t (shift) and c (constant polynomial 1).
GroupPtr wreath_zz_group();
/// Free product; factor alphabets must be disjoint.
GroupPtr free_product_group(std::vector<GroupPtr> factors);
/// G x Z with the extra generator pair z, z'.
GroupPtr cross_z_group(GroupPtr inner, std::string generator = "z");
/// <a, b, c | a b a^-1 = b^m, a c a^-1 = c^n>, amalgamated over <a>.
GroupPtr bs_amalgam_group(Int m, Int n);
/// F2 x| Z = <a, b, s | s a s^-1 = a b, s b s^-1 = b>.
GroupPtr free_by_cyclic_group();

class FreeAbelianGroup final : public Group {
public:
    explicit FreeAbelianGroup(std::vector<std::string> generators);
    std::string name() const override;
    Element identity() const override;
    Element multiply(const Element& g, const Element& h) const override;
    Element invert(const Element& g) const override;
    std::string format(const Element& g) const override;
    bool in_subgroup(const Element& g, const std::vector<std::string>& gens) const override;
    std::size_t rank() const { return rank_; }

protected:
    Element generator_image(Symbol s) const override;

private:
    std::size_t rank_;
};

class FreeGroup final : public Group {
public:
    explicit FreeGroup(std::vector<std::string> generators);
    std::string name() const override;
    Element identity() const override;
    Element multiply(const Element& g, const Element& h) const override;
    Element invert(const Element& g) const override;
    std::string format(const Element& g) const override;

protected:
    Element generator_image(Symbol s) const override;

private:
    std::vector<std::string> names_;
};

class KleinBottleGroup final : public Group {
public:
    KleinBottleGroup();
    std::string name() const override { return "K"; }
    Element identity() const override;
    Element multiply(const Element& g, const Element& h) const override;
    Element invert(const Element& g) const override;
    std::string format(const Element& g) const override;

protected:
    Element generator_image(Symbol s) const override;
};

class BsGroup final : public Group {
public:
    explicit BsGroup(Int q);
    std::string name() const override;
    Element identity() const override;
    Element multiply(const Element& g, const Element& h) const override;
    Element invert(const Element& g) const override;
    std::string format(const Element& g) const override;
    bool in_subgroup(const Element& g, const std::vector<std::string>& gens) const override;
    Int q() const { return q_; }
    Int base() const { return q_ < 0 ? -q_ : q_; }

protected:
    Element generator_image(Symbol s) const override;

private:
    Int q_;
};

class WreathZZGroup final : public Group {
public:
    WreathZZGroup();
    std::string name() const override { return "Z wr Z"; }
    Element identity() const override;
    Element multiply(const Element& g, const Element& h) const override;
    Element invert(const Element& g) const override;
    std::string format(const Element& g) const override;

protected:
    Element generator_image(Symbol s) const override;
};

class FreeProductGroup final : public Group {
public:
    explicit FreeProductGroup(std::vector<GroupPtr> factors);
    std::string name() const override;
    Element identity() const override;
    Element multiply(const Element& g, const Element& h) const override;
    Element invert(const Element& g) const override;
    std::string format(const Element& g) const override;
    const std::vector<GroupPtr>& factors() const { return factors_; }
    /// Factor owning each letter of the alphabet.
    std::size_t factor_of(Symbol s) const { return letter_factor_.at(s); }

protected:
    Element generator_image(Symbol s) const override;

private:
    std::vector<GroupPtr> factors_;
    std::vector<std::size_t> letter_factor_;
    std::vector<Symbol> letter_local_;
};

class CrossZGroup final : public Group {
public:
    CrossZGroup(GroupPtr inner, std::string generator);
    std::string name() const override;
    Element identity() const override;
    Element multiply(const Element& g, const Element& h) const override;
    Element invert(const Element& g) const override;
    std::string format(const Element& g) const override;
    /// Generators of the inner group, plus the z generator meaning C x {0}
    /// extended by z only when it is listed.
    bool in_subgroup(const Element& g, const std::vector<std::string>& gens) const override;
    const GroupPtr& inner() const { return inner_; }
    const std::string& z_generator() const { return z_; }

protected:
    Element generator_image(Symbol s) const override;

private:
    GroupPtr inner_;
    std::string z_;
};

class BsAmalgamGroup final : public Group {
public:
    BsAmalgamGroup(Int m, Int n);
    std::string name() const override;
    Element identity() const override;
    Element multiply(const Element& g, const Element& h) const override;
    Element invert(const Element& g) const override;
    std::string format(const Element& g) const override;
    bool in_subgroup(const Element& g, const std::vector<std::string>& gens) const override;
    /// Multiplier of factor 0 (letters b) or 1 (letters c).
    Int q(std::size_t factor) const { return factor == 0 ? m_ : n_; }

protected:
    Element generator_image(Symbol s) const override;

private:
    /// Appends syllables to `acc`, merging at the junction.
    void append(AmalgamElem& acc, std::uint8_t factor, const Fibre& x) const;

    Int m_;
    Int n_;
};

class FreeByCyclicGroup final : public Group {
public:
    FreeByCyclicGroup();
    std::string name() const override { return "F2 x| Z"; }
    Element identity() const override;
    Element multiply(const Element& g, const Element& h) const override;
    Element invert(const Element& g) const override;
    std::string format(const Element& g) const override;
    bool in_subgroup(const Element& g, const std::vector<std::string>& gens) const override;
    /// The automorphism a -> a b^k, b -> b applied to a reduced word.
    static FreeWord twist(const FreeWord& w, Int k);

protected:
    Element generator_image(Symbol s) const override;
};

/// Free reduction of the concatenation u v (letters as in FreeWord).
FreeWord free_multiply(const FreeWord& u, const FreeWord& v);
FreeWord free_invert(const FreeWord& u);

} // namespace conelang::groups
