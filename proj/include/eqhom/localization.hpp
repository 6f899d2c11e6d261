#pragma once

// Localizations of Sym(R_E[d]) at coaugmentation classes.
//
// A LocFraction is num / prod_alpha vartheta_alpha^{f_alpha}. In MUP mode any
// character of the group may be inverted; in mUP mode only vartheta_eps.
// The ambient ring is a polynomial ring over an integral domain, so equality
// is decided by cross-multiplication. Reduced forms are only greedy; compare
// with frac_eq, never with ==.

#include "eqhom/sym.hpp"

#include <map>

namespace eqhom {

enum class LocMode { MUP, mUP };

inline const char* to_string(LocMode m) { return m == LocMode::MUP ? "MUP" : "mUP"; }

using DenomExponents = std::map<Character, int>;

class LocFraction {
public:
    LocFraction(Flag flag, LocMode mode, SymPoly num, DenomExponents denom = {})
        : flag_(std::move(flag)), mode_(mode), num_(std::move(num))
    {
        require_same_group(flag_.group(), num_.group(), "fraction");
        if (mode_ == LocMode::mUP && num_.shift() == -2)
            throw PreconditionError("mUP is a localization of Sym(R_E[2]); shift -2 is not available");
        for (const auto& [alpha, f] : denom) {
            if (f < 0)
                throw PreconditionError("denominator exponents must be >= 0");
            if (f == 0)
                continue;
            require_same_group(flag_.group(), alpha.group(), "fraction denominator");
            if (mode_ == LocMode::mUP && !alpha.is_trivial())
                throw PreconditionError("mUP localization inverts only vartheta_eps; got vartheta_" + alpha.to_string());
            detail::require_in_flag(flag_, alpha);
            denom_[alpha] += f;
        }
    }

    static LocFraction from_poly(const Flag& flag, LocMode mode, const SymPoly& x) { return LocFraction(flag, mode, x); }

    const Flag& flag() const { return flag_; }
    LocMode mode() const { return mode_; }
    int shift() const { return num_.shift(); }
    const SymPoly& num() const { return num_; }
    const DenomExponents& denom() const { return denom_; }

    int denom_dimension() const
    {
        int s = 0;
        for (const auto& [alpha, f] : denom_)
            s += f;
        return s;
    }

    // prod vartheta_alpha^{f_alpha} as an element of Sym(R_E[d]).
    SymPoly expanded_denominator() const
    {
        SymPoly out = SymPoly::one(flag_.group(), shift());
        for (const auto& [alpha, f] : denom_)
            out = out * theta_class(flag_, alpha, shift()).pow(f);
        return out;
    }

    // Internal homological degree, when the numerator is homogeneous.
    // Each vartheta has degree -d.
    std::optional<int> internal_degree() const
    {
        auto d = num_.internal_degree();
        if (!d)
            return std::nullopt;
        return *d + shift() * denom_dimension();
    }

    friend LocFraction operator*(const LocFraction& a, const LocFraction& b)
    {
        a.check_compatible(b);
        DenomExponents d = a.denom_;
        for (const auto& [alpha, f] : b.denom_)
            d[alpha] += f;
        return LocFraction(a.flag_, a.mode_, a.num_ * b.num_, std::move(d));
    }

    // a/s + b/t over the denominator with componentwise maximal exponents.
    friend LocFraction operator+(const LocFraction& a, const LocFraction& b)
    {
        a.check_compatible(b);
        DenomExponents common = a.denom_;
        for (const auto& [alpha, f] : b.denom_)
            common[alpha] = std::max(common[alpha], f);
        auto lift = [&](const LocFraction& x) {
            SymPoly n = x.num_;
            for (const auto& [alpha, f] : common) {
                auto it = x.denom_.find(alpha);
                int have = it == x.denom_.end() ? 0 : it->second;
                if (f > have)
                    n = n * theta_class(x.flag_, alpha, x.shift()).pow(f - have);
            }
            return n;
        };
        return LocFraction(a.flag_, a.mode_, lift(a) + lift(b), common);
    }

    friend LocFraction operator-(const LocFraction& a) { return LocFraction(a.flag_, a.mode_, -a.num_, a.denom_); }
    friend LocFraction operator-(const LocFraction& a, const LocFraction& b) { return a + (-b); }

    void check_compatible(const LocFraction& o) const
    {
        if (mode_ != o.mode_)
            throw PreconditionError(std::string("localization mode mismatch: ") + to_string(mode_) + " vs "
                                    + to_string(o.mode_));
        if (!(flag_ == o.flag_))
            throw PreconditionError("fractions are taken with respect to different flags");
        if (shift() != o.shift())
            throw PreconditionError("fractions live in symmetric algebras with different shifts");
    }

private:
    Flag flag_;
    LocMode mode_;
    SymPoly num_;
    DenomExponents denom_;
};

// a/s == b/t  iff  a * t == b * s.
inline bool frac_eq(const LocFraction& a, const LocFraction& b)
{
    a.check_compatible(b);
    return a.num() * b.expanded_denominator() == b.num() * a.expanded_denominator();
}

// Divide out vartheta_alpha factors from the numerator while exact division
// succeeds, visiting characters in lexicographic order.
inline LocFraction frac_reduce(const LocFraction& a)
{
    SymPoly num = a.num();
    DenomExponents denom = a.denom();
    for (auto& [alpha, f] : denom) {
        if (num.is_zero())
            break;
        SymPoly theta = theta_class(a.flag(), alpha, a.shift());
        while (f > 0) {
            auto q = num.divide_exact(theta);
            if (!q)
                break;
            num = std::move(*q);
            --f;
        }
    }
    if (num.is_zero())
        denom.clear();
    return LocFraction(a.flag(), a.mode(), std::move(num), std::move(denom));
}

// dim(num) - sum f_alpha; requires a dimension-homogeneous numerator.
inline int dim_degree(const LocFraction& a)
{
    auto d = a.num().dimension();
    if (!d)
        throw PreconditionError(a.num().is_zero() ? "the zero fraction has no dimension degree"
                                                  : "numerator is not dimension-homogeneous");
    return *d - a.denom_dimension();
}

template <class Twist = DefaultTwist>
LocFraction theta_mul(const Character& alpha, const LocFraction& a)
{
    return LocFraction(a.flag(), a.mode(), theta_mul<Twist>(a.flag(), alpha, a.num()), a.denom());
}

// a / vartheta_alpha: the preimage of a under multiplication by vartheta_alpha.
inline LocFraction theta_div(const Character& alpha, const LocFraction& a)
{
    DenomExponents d = a.denom();
    d[alpha] += 1;
    return LocFraction(a.flag(), a.mode(), a.num(), std::move(d));
}

}  // namespace eqhom
