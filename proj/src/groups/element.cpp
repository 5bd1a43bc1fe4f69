#include "conelang/groups/element.hpp"

#include <algorithm>

#include <boost/container_hash/hash.hpp>

namespace conelang::groups {

namespace {

BigInt power(Int base, Int e) {
    BigInt r = 1;
    for (Int i = 0; i < e; ++i)
        r *= base;
    return r;
}

} // namespace

Fibre normalize(Fibre f, Int base) {
    if (f.num.is_zero() || base == 1) {
        f.exp = 0;
        return f;
    }
    if (f.exp < 0) {
        f.num *= power(base, -f.exp);
        f.exp = 0;
    }
    while (f.exp > 0 && f.num % base == 0) {
        f.num /= base;
        --f.exp;
    }
    return f;
}

Fibre add(const Fibre& x, const Fibre& y, Int base) {
    if (x.is_zero())
        return y;
    if (y.is_zero())
        return x;
    Int e = std::max(x.exp, y.exp);
    Fibre r{x.num * power(base, e - x.exp) + y.num * power(base, e - y.exp), e};
    return normalize(std::move(r), base);
}

Fibre negate(const Fibre& x) {
    return {-x.num, x.exp};
}

Fibre scale(const Fibre& x, Int q, Int n) {
    if (x.is_zero() || n == 0)
        return x;
    Int base = q < 0 ? -q : q;
    if (n > 0)
        return normalize({x.num * power(q, n), x.exp}, base);
    Fibre r{x.num, x.exp - n};
    if (q < 0 && ((-n) % 2 == 1))
        r.num = -r.num;
    return normalize(std::move(r), base);
}

// ---- Laurent polynomials -------------------------------------------------------

namespace {

Laurent trimmed(Int low, std::vector<Int> coef) {
    auto first = std::find_if(coef.begin(), coef.end(), [](Int c) { return c != 0; });
    if (first == coef.end())
        return {};
    auto last = std::find_if(coef.rbegin(), coef.rend(), [](Int c) { return c != 0; }).base();
    Laurent p;
    p.low = low + (first - coef.begin());
    p.coef.assign(first, last);
    return p;
}

} // namespace

Int Laurent::at(Int power) const {
    if (coef.empty() || power < low || power > high())
        return 0;
    return coef[static_cast<std::size_t>(power - low)];
}

Laurent laurent_add(const Laurent& p, const Laurent& q, Int shift_q) {
    if (q.is_zero())
        return p;
    if (p.is_zero())
        return laurent_shift(q, shift_q);
    Int lo = std::min(p.low, q.low + shift_q);
    Int hi = std::max(p.high(), q.high() + shift_q);
    std::vector<Int> coef(static_cast<std::size_t>(hi - lo + 1), 0);
    for (std::size_t i = 0; i < p.coef.size(); ++i)
        coef[static_cast<std::size_t>(p.low - lo) + i] += p.coef[i];
    for (std::size_t i = 0; i < q.coef.size(); ++i)
        coef[static_cast<std::size_t>(q.low + shift_q - lo) + i] += q.coef[i];
    return trimmed(lo, std::move(coef));
}

Laurent laurent_negate(const Laurent& p) {
    Laurent r = p;
    for (auto& c : r.coef)
        c = -c;
    return r;
}

Laurent laurent_shift(const Laurent& p, Int shift) {
    Laurent r = p;
    if (!r.is_zero())
        r.low += shift;
    return r;
}

Laurent laurent_monomial(Int coefficient, Int power) {
    if (coefficient == 0)
        return {};
    return {power, {coefficient}};
}

// ---- hashing --------------------------------------------------------------------

namespace {

void mix(std::size_t& seed, const Fibre& f) {
    boost::hash_combine(seed, boost::multiprecision::hash_value(f.num));
    boost::hash_combine(seed, f.exp);
}

struct Hasher {
    std::size_t seed;

    void operator()(const IntVector& g) { boost::hash_combine(seed, boost::hash_range(g.v.begin(), g.v.end())); }
    void operator()(const FreeWord& g) {
        boost::hash_combine(seed, boost::hash_range(g.letters.begin(), g.letters.end()));
    }
    void operator()(const KleinElem& g) {
        boost::hash_combine(seed, g.n);
        boost::hash_combine(seed, g.m);
    }
    void operator()(const BsElem& g) {
        mix(seed, g.x);
        boost::hash_combine(seed, g.n);
    }
    void operator()(const WreathElem& g) {
        boost::hash_combine(seed, g.p.low);
        boost::hash_combine(seed, boost::hash_range(g.p.coef.begin(), g.p.coef.end()));
        boost::hash_combine(seed, g.s);
    }
    void operator()(const ProductElem& g) {
        for (std::size_t i = 0; i < g.syllables.size(); ++i) {
            boost::hash_combine(seed, g.factors[i]);
            boost::hash_combine(seed, hash_value(g.syllables[i]));
        }
    }
    void operator()(const CrossElem& g) {
        boost::hash_combine(seed, hash_value(*g.inner));
        boost::hash_combine(seed, g.z);
    }
    void operator()(const AmalgamElem& g) {
        for (std::size_t i = 0; i < g.xs.size(); ++i) {
            boost::hash_combine(seed, g.factors[i]);
            mix(seed, g.xs[i]);
        }
        boost::hash_combine(seed, g.shift);
    }
    void operator()(const FreeByZElem& g) {
        (*this)(g.w);
        boost::hash_combine(seed, g.k);
    }
};

} // namespace

std::size_t hash_value(const Element& g) {
    Hasher h{g.v.index()};
    std::visit(h, g.v);
    return h.seed;
}

} // namespace conelang::groups
