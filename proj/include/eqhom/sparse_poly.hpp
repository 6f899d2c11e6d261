#pragma once

// Sparse multivariate polynomials over a commutative coefficient ring.
//
// Variables are non-negative integers. A monomial is stored as a sorted list
// of (variable, exponent) pairs with strictly increasing variables and
// positive exponents. Terms are kept in a std::map ordered by lex order with
// variable 0 most significant, so terms().begin() is always the leading term.
//
// The coefficient type must specialize ring_traits (zero test and exact
// quotient) and support +, -, unary -, * and ==.

#include "eqhom/integer.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <optional>
#include <utility>
#include <vector>

namespace eqhom {

using Exponents = std::vector<std::pair<int, int>>;

// Lex order, variable 0 most significant. Returns true when a > b.
struct LexGreater {
    bool operator()(const Exponents& a, const Exponents& b) const
    {
        const std::size_t n = std::min(a.size(), b.size());
        for (std::size_t k = 0; k < n; ++k) {
            if (a[k].first != b[k].first)
                return a[k].first < b[k].first;
            if (a[k].second != b[k].second)
                return a[k].second > b[k].second;
        }
        return a.size() > b.size();
    }
};

inline Exponents mono_mul(const Exponents& a, const Exponents& b)
{
    Exponents out;
    out.reserve(a.size() + b.size());
    auto i = a.begin();
    auto j = b.begin();
    while (i != a.end() && j != b.end()) {
        if (i->first < j->first)
            out.push_back(*i++);
        else if (j->first < i->first)
            out.push_back(*j++);
        else {
            out.emplace_back(i->first, i->second + j->second);
            ++i;
            ++j;
        }
    }
    out.insert(out.end(), i, a.end());
    out.insert(out.end(), j, b.end());
    return out;
}

// a / b as monomials, nullopt if b does not divide a.
inline std::optional<Exponents> mono_div(const Exponents& a, const Exponents& b)
{
    Exponents out;
    auto i = a.begin();
    for (const auto& [var, e] : b) {
        while (i != a.end() && i->first < var)
            out.push_back(*i++);
        if (i == a.end() || i->first != var || i->second < e)
            return std::nullopt;
        if (i->second > e)
            out.emplace_back(var, i->second - e);
        ++i;
    }
    out.insert(out.end(), i, a.end());
    return out;
}

inline int total_degree(const Exponents& m)
{
    int d = 0;
    for (const auto& [var, e] : m)
        d += e;
    return d;
}

inline int exponent_of(const Exponents& m, int var)
{
    for (const auto& [v, e] : m)
        if (v == var)
            return e;
    return 0;
}

inline Exponents single_var(int var, int exp = 1)
{
    if (exp == 0)
        return {};
    return {{var, exp}};
}

template <class Coeff>
class SparsePoly {
public:
    using Terms = std::map<Exponents, Coeff, LexGreater>;
    using traits = ring_traits<Coeff>;

    SparsePoly() = default;

    static SparsePoly monomial(Exponents m, Coeff c)
    {
        SparsePoly p;
        p.add_term(m, c);
        return p;
    }

    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }
    const Terms& terms() const { return terms_; }

    const typename Terms::value_type& leading() const
    {
        assert(!terms_.empty());
        return *terms_.begin();
    }

    void add_term(const Exponents& m, const Coeff& c)
    {
        if (traits::is_zero(c))
            return;
        auto it = terms_.find(m);
        if (it == terms_.end()) {
            terms_.emplace(m, c);
            return;
        }
        it->second = it->second + c;
        if (traits::is_zero(it->second))
            terms_.erase(it);
    }

    // this += sign * c * x^m * g
    void add_scaled(const SparsePoly& g, const Exponents& m, const Coeff& c, bool negate = false)
    {
        for (const auto& [gm, gc] : g.terms_) {
            Coeff prod = c * gc;
            add_term(mono_mul(m, gm), negate ? -prod : prod);
        }
    }

    SparsePoly operator-() const
    {
        SparsePoly out;
        for (const auto& [m, c] : terms_)
            out.terms_.emplace(m, -c);
        return out;
    }

    SparsePoly& operator+=(const SparsePoly& o)
    {
        for (const auto& [m, c] : o.terms_)
            add_term(m, c);
        return *this;
    }

    SparsePoly& operator-=(const SparsePoly& o)
    {
        for (const auto& [m, c] : o.terms_)
            add_term(m, -c);
        return *this;
    }

    friend SparsePoly operator+(SparsePoly a, const SparsePoly& b) { return a += b; }
    friend SparsePoly operator-(SparsePoly a, const SparsePoly& b) { return a -= b; }

    friend SparsePoly operator*(const SparsePoly& a, const SparsePoly& b)
    {
        SparsePoly out;
        for (const auto& [m, c] : a.terms_)
            out.add_scaled(b, m, c);
        return out;
    }

    // Multiply every coefficient by s.
    SparsePoly scaled(const Coeff& s) const
    {
        SparsePoly out;
        for (const auto& [m, c] : terms_)
            out.add_term(m, c * s);
        return out;
    }

    friend bool operator==(const SparsePoly& a, const SparsePoly& b) { return a.terms_ == b.terms_; }

    // Exact division in a polynomial ring over an integral domain. Since
    // divisibility forces LT(g) | LT(r) at every step, the loop either clears
    // the remainder or proves g does not divide this.
    std::optional<SparsePoly> divide_exact(const SparsePoly& g) const
    {
        if (g.is_zero())
            return std::nullopt;
        SparsePoly q;
        SparsePoly r = *this;
        const auto& [gm, gc] = g.leading();
        while (!r.is_zero()) {
            const auto& [rm, rc] = r.leading();
            auto m = mono_div(rm, gm);
            if (!m)
                return std::nullopt;
            auto c = traits::exact_quotient(rc, gc);
            if (!c)
                return std::nullopt;
            Exponents mq = *m;
            Coeff cq = *c;
            q.add_term(mq, cq);
            r.add_scaled(g, mq, cq, true);
        }
        return q;
    }

    // Apply f to every coefficient, dropping terms that become zero.
    template <class F>
    SparsePoly map_coeffs(F&& f) const
    {
        SparsePoly out;
        for (const auto& [m, c] : terms_)
            out.add_term(m, f(c));
        return out;
    }

    // Largest total degree among terms (0 for the zero polynomial).
    int max_total_degree() const
    {
        int d = 0;
        for (const auto& [m, c] : terms_)
            d = std::max(d, total_degree(m));
        return d;
    }

    // Total degree if every term shares it; nullopt for zero or mixed input.
    std::optional<int> homogeneous_degree() const
    {
        std::optional<int> d;
        for (const auto& [m, c] : terms_) {
            int t = total_degree(m);
            if (d && *d != t)
                return std::nullopt;
            d = t;
        }
        return d;
    }

private:
    Terms terms_;
};

}  // namespace eqhom
