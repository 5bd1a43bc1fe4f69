// element.hpp -- exact canonical forms for elements of the supported groups
#pragma once

#include <cstdint>
#include <memory>
#include <variant>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace conelang::groups {

using Int = std::int64_t;
using BigInt = boost::multiprecision::cpp_int;

/// An exact rational num / base^exp, kept with the smallest exponent.
/// The base is a property of the group (|q| for BS(1,q)), not of the value.
struct Fibre {
    BigInt num;
    Int exp = 0;

    static Fibre integer(Int n) { return {BigInt(n), 0}; }
    int sign() const { return num.sign(); }
    bool is_zero() const { return num.is_zero(); }

    bool operator==(const Fibre&) const = default;
};

/// Brings a fibre value into canonical form.
Fibre normalize(Fibre f, Int base);
Fibre add(const Fibre& x, const Fibre& y, Int base);
Fibre negate(const Fibre& x);
/// x * q^n for the signed multiplier q with |q| = base.
Fibre scale(const Fibre& x, Int q, Int n);

/// Laurent polynomial sum coef[i] X^(low + i), no zero at either end.
struct Laurent {
    Int low = 0;
    std::vector<Int> coef;

    bool is_zero() const { return coef.empty(); }
    Int high() const { return low + static_cast<Int>(coef.size()) - 1; }
    /// Coefficient of the highest power; 0 for the zero polynomial.
    Int leading() const { return coef.empty() ? 0 : coef.back(); }
    Int at(Int power) const;

    bool operator==(const Laurent&) const = default;
};

Laurent laurent_add(const Laurent& p, const Laurent& q, Int shift_q = 0);
Laurent laurent_negate(const Laurent& p);
Laurent laurent_shift(const Laurent& p, Int shift);
Laurent laurent_monomial(Int coefficient, Int power);

/// Value-semantic owning pointer, for the recursive element kinds.
template <class T>
class Box {
public:
    Box(T value) : p_(std::make_unique<T>(std::move(value))) {}
    Box(const Box& o) : p_(std::make_unique<T>(*o.p_)) {}
    Box(Box&&) noexcept = default;
    Box& operator=(const Box& o) {
        if (this != &o)
            p_ = std::make_unique<T>(*o.p_);
        return *this;
    }
    Box& operator=(Box&&) noexcept = default;

    const T& operator*() const { return *p_; }
    const T* operator->() const { return p_.get(); }
    bool operator==(const Box& o) const { return *p_ == *o.p_; }

private:
    std::unique_ptr<T> p_;
};

struct Element;

/// Cyclic and free abelian groups.
struct IntVector {
    std::vector<Int> v;
    bool operator==(const IntVector&) const = default;
};

/// Reduced word; letter +k is generator k-1, -k its inverse.
struct FreeWord {
    std::vector<std::int32_t> letters;
    bool operator==(const FreeWord&) const = default;
};

/// b^n a^m in the Klein bottle group.
struct KleinElem {
    Int n = 0;
    Int m = 0;
    bool operator==(const KleinElem&) const = default;
};

/// (x, n) in Z[1/q] x| Z.
struct BsElem {
    Fibre x;
    Int n = 0;
    bool operator==(const BsElem&) const = default;
};

/// (p, s) in Z[X, 1/X] x| Z.
struct WreathElem {
    Laurent p;
    Int s = 0;
    bool operator==(const WreathElem&) const = default;
};

/// Alternating non-identity syllables, tagged with their factor.
struct ProductElem {
    std::vector<std::uint32_t> factors;
    std::vector<Element> syllables;
    bool operator==(const ProductElem& o) const;
};

struct CrossElem {
    Box<Element> inner;
    Int z = 0;
    bool operator==(const CrossElem&) const = default;
};

/// BS(1,m) *_<a> BS(1,n): alternating nonzero fibre syllables, then a^shift.
struct AmalgamElem {
    std::vector<std::uint8_t> factors;
    std::vector<Fibre> xs;
    Int shift = 0;
    bool operator==(const AmalgamElem&) const = default;
};

/// (w, k) in F2 x| Z.
struct FreeByZElem {
    FreeWord w;
    Int k = 0;
    bool operator==(const FreeByZElem&) const = default;
};

struct Element {
    std::variant<IntVector, FreeWord, KleinElem, BsElem, WreathElem, ProductElem, CrossElem, AmalgamElem,
                 FreeByZElem>
        v;

    bool operator==(const Element&) const = default;
};

inline bool ProductElem::operator==(const ProductElem& o) const {
    return factors == o.factors && syllables == o.syllables;
}

std::size_t hash_value(const Element& g);

struct ElementHash {
    std::size_t operator()(const Element& g) const { return hash_value(g); }
};

} // namespace conelang::groups
