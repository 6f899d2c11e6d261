#pragma once

// The coefficient ring: integer polynomials in Euler symbols e_gamma, one for
// every non-trivial character gamma, each in homological degree -2.
//
// No relations are imposed among the symbols beyond e(eps) = 0, so every
// identity proved here survives any specialization to a concrete theory.
// Variables of the underlying SparsePoly are character indices (> 0).

#include "eqhom/group.hpp"
#include "eqhom/sparse_poly.hpp"

#include <map>
#include <optional>
#include <utility>

namespace eqhom {

// e_gamma for a non-trivial character gamma.
class EulerSymbol {
public:
    explicit EulerSymbol(Character gamma) : gamma_(std::move(gamma))
    {
        if (gamma_.is_trivial())
            throw PreconditionError("the Euler class of the trivial character is zero, not a symbol");
    }

    const Character& character() const { return gamma_; }

    friend bool operator==(const EulerSymbol&, const EulerSymbol&) = default;

private:
    Character gamma_;
};

class CoeffPoly {
public:
    using Poly = SparsePoly<Integer>;

    explicit CoeffPoly(AbelianGroup group, Poly poly = {}) : group_(std::move(group)), poly_(std::move(poly)) {}

    static CoeffPoly zero(const AbelianGroup& g) { return CoeffPoly(g); }
    static CoeffPoly one(const AbelianGroup& g) { return constant(g, 1); }
    static CoeffPoly constant(const AbelianGroup& g, const Integer& c) { return CoeffPoly(g, Poly::monomial({}, c)); }

    static CoeffPoly symbol(const EulerSymbol& s, int exp = 1)
    {
        const Character& c = s.character();
        return CoeffPoly(c.group(), Poly::monomial(single_var(c.index(), exp), 1));
    }

    const AbelianGroup& group() const { return group_; }
    const Poly& poly() const { return poly_; }
    bool is_zero() const { return poly_.is_zero(); }

    std::optional<Integer> as_constant() const
    {
        if (poly_.is_zero())
            return Integer(0);
        if (poly_.size() == 1 && poly_.leading().first.empty())
            return poly_.leading().second;
        return std::nullopt;
    }

    bool is_one() const
    {
        auto c = as_constant();
        return c && *c == 1;
    }

    // Homological degree (-2 per Euler symbol) if every monomial shares it.
    // The zero polynomial has no well-defined degree.
    std::optional<int> degree() const
    {
        auto d = poly_.homogeneous_degree();
        if (!d)
            return std::nullopt;
        return -2 * *d;
    }

    CoeffPoly operator-() const { return CoeffPoly(group_, -poly_); }

    CoeffPoly& operator+=(const CoeffPoly& o)
    {
        require_same_group(group_, o.group_, "coefficient sum");
        poly_ += o.poly_;
        return *this;
    }

    CoeffPoly& operator-=(const CoeffPoly& o)
    {
        require_same_group(group_, o.group_, "coefficient difference");
        poly_ -= o.poly_;
        return *this;
    }

    friend CoeffPoly operator+(CoeffPoly a, const CoeffPoly& b) { return a += b; }
    friend CoeffPoly operator-(CoeffPoly a, const CoeffPoly& b) { return a -= b; }

    friend CoeffPoly operator*(const CoeffPoly& a, const CoeffPoly& b)
    {
        require_same_group(a.group_, b.group_, "coefficient product");
        return CoeffPoly(a.group_, a.poly_ * b.poly_);
    }

    CoeffPoly& operator*=(const CoeffPoly& o) { return *this = *this * o; }

    friend bool operator==(const CoeffPoly& a, const CoeffPoly& b)
    {
        return a.group_ == b.group_ && a.poly_ == b.poly_;
    }

    std::optional<CoeffPoly> divide_exact(const CoeffPoly& d) const
    {
        require_same_group(group_, d.group_, "coefficient division");
        auto q = poly_.divide_exact(d.poly_);
        if (!q)
            return std::nullopt;
        return CoeffPoly(group_, std::move(*q));
    }

    CoeffPoly pow(int k) const
    {
        CoeffPoly out = one(group_);
        for (int i = 0; i < k; ++i)
            out *= *this;
        return out;
    }

private:
    AbelianGroup group_;
    Poly poly_;
};

template <>
struct ring_traits<CoeffPoly> {
    static bool is_zero(const CoeffPoly& x) { return x.is_zero(); }
    static std::optional<CoeffPoly> exact_quotient(const CoeffPoly& a, const CoeffPoly& b) { return a.divide_exact(b); }
};

inline CoeffPoly poly_add(const CoeffPoly& a, const CoeffPoly& b) { return a + b; }
inline CoeffPoly poly_mul(const CoeffPoly& a, const CoeffPoly& b) { return a * b; }

// e(V): zero if V has a trivial summand, otherwise the product of the
// summands' Euler symbols (1 for the zero representation).
inline CoeffPoly euler_class(const Representation& v)
{
    const AbelianGroup& g = v.group();
    if (v.contains_trivial())
        return CoeffPoly::zero(g);
    Exponents m;
    for (const Character& c : v.summands()) {
        if (!m.empty() && m.back().first == c.index())
            ++m.back().second;
        else
            m.emplace_back(c.index(), 1);
    }
    return CoeffPoly(g, CoeffPoly::Poly::monomial(std::move(m), 1));
}

// A ring homomorphism of the coefficient ring given by values on Euler
// symbols. Unassigned symbols map to themselves unless a fallback is set.
class Specialization {
public:
    explicit Specialization(AbelianGroup group) : group_(std::move(group)) {}

    // e_gamma -> 0 for every gamma.
    static Specialization vanishing(const AbelianGroup& g)
    {
        Specialization s(g);
        s.assign_all(CoeffPoly::zero(g));
        return s;
    }

    const AbelianGroup& group() const { return group_; }

    void assign(const EulerSymbol& sym, CoeffPoly value)
    {
        require_same_group(group_, value.group(), "specialization value");
        require_same_group(group_, sym.character().group(), "specialization symbol");
        values_.insert_or_assign(sym.character().index(), std::move(value));
    }

    void assign_all(CoeffPoly value)
    {
        require_same_group(group_, value.group(), "specialization value");
        fallback_ = std::move(value);
    }

    CoeffPoly value_of(int var) const
    {
        if (auto it = values_.find(var); it != values_.end())
            return it->second;
        if (fallback_)
            return *fallback_;
        return CoeffPoly::symbol(EulerSymbol(group_.from_index(var)));
    }

private:
    AbelianGroup group_;
    std::map<int, CoeffPoly> values_;
    std::optional<CoeffPoly> fallback_;
};

inline CoeffPoly specialize(const CoeffPoly& p, const Specialization& s)
{
    require_same_group(p.group(), s.group(), "specialize");
    const AbelianGroup& g = p.group();
    CoeffPoly out = CoeffPoly::zero(g);
    std::map<std::pair<int, int>, CoeffPoly> powers;
    for (const auto& [m, c] : p.poly().terms()) {
        CoeffPoly term = CoeffPoly::constant(g, c);
        for (const auto& ve : m) {
            auto it = powers.find(ve);
            if (it == powers.end())
                it = powers.emplace(ve, s.value_of(ve.first).pow(ve.second)).first;
            term *= it->second;
        }
        out += term;
    }
    return out;
}

}  // namespace eqhom
