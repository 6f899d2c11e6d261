#pragma once

// Bigraded symmetric algebras Sym(R_E[d]) on the flag basis beta_0, beta_1, ...
//
// d is the shift of the generating module (d in {-2, 0, +2}); with the
// convention X[n]_k = X_{k+n}, beta_i has internal homological degree 2i - d.
// The dimension degree of a monomial is its total exponent, realizing the
// decomposition Sym = (+)_n Sym_n. Multiplication is ordinary polynomial
// multiplication, the homology shadow of direct sum of planes.

#include "eqhom/flag.hpp"

#include <optional>

namespace eqhom {

class SymPoly {
public:
    using Poly = SparsePoly<CoeffPoly>;

    SymPoly(AbelianGroup group, int shift, Poly poly = {}) : group_(std::move(group)), shift_(shift), poly_(std::move(poly))
    {
        if (shift_ != -2 && shift_ != 0 && shift_ != 2)
            throw PreconditionError("shift must be -2, 0 or 2, got " + std::to_string(shift_));
    }

    static SymPoly zero(const AbelianGroup& g, int shift) { return SymPoly(g, shift); }
    static SymPoly one(const AbelianGroup& g, int shift) { return constant(CoeffPoly::one(g), shift); }
    static SymPoly constant(const CoeffPoly& c, int shift) { return SymPoly(c.group(), shift, Poly::monomial({}, c)); }

    static SymPoly beta(const AbelianGroup& g, int shift, int i, int exp = 1)
    {
        if (i < 0)
            throw PreconditionError("beta index must be >= 0");
        return SymPoly(g, shift, Poly::monomial(single_var(i, exp), CoeffPoly::one(g)));
    }

    // The image of a projective class in Sym_1.
    static SymPoly embed(const ProjClass& x, int shift)
    {
        Poly p;
        for (const auto& [i, c] : x.terms())
            p.add_term(single_var(i, 1), c);
        return SymPoly(x.group(), shift, std::move(p));
    }

    const AbelianGroup& group() const { return group_; }
    int shift() const { return shift_; }
    const Poly& poly() const { return poly_; }
    bool is_zero() const { return poly_.is_zero(); }

    // Homological degree of beta_i in Sym(R_E[d]).
    static int beta_degree(int i, int shift) { return 2 * i - shift; }

    // Common dimension degree of all monomials; nullopt for zero or mixed.
    std::optional<int> dimension() const { return poly_.homogeneous_degree(); }

    std::optional<int> internal_degree() const
    {
        std::optional<int> d;
        for (const auto& [m, c] : poly_.terms()) {
            auto cd = c.degree();
            if (!cd)
                return std::nullopt;
            int t = *cd;
            for (const auto& [i, e] : m)
                t += e * beta_degree(i, shift_);
            if (d && *d != t)
                return std::nullopt;
            d = t;
        }
        return d;
    }

    int max_index() const
    {
        int mx = -1;
        for (const auto& [m, c] : poly_.terms())
            if (!m.empty())
                mx = std::max(mx, m.back().first);
        return mx;
    }

    SymPoly operator-() const { return SymPoly(group_, shift_, -poly_); }

    SymPoly& operator+=(const SymPoly& o)
    {
        check_compatible(o, "sum");
        poly_ += o.poly_;
        return *this;
    }

    SymPoly& operator-=(const SymPoly& o)
    {
        check_compatible(o, "difference");
        poly_ -= o.poly_;
        return *this;
    }

    friend SymPoly operator+(SymPoly a, const SymPoly& b) { return a += b; }
    friend SymPoly operator-(SymPoly a, const SymPoly& b) { return a -= b; }

    friend SymPoly operator*(const SymPoly& a, const SymPoly& b)
    {
        a.check_compatible(b, "product");
        return SymPoly(a.group_, a.shift_, a.poly_ * b.poly_);
    }

    friend SymPoly operator*(const CoeffPoly& s, const SymPoly& x)
    {
        require_same_group(s.group(), x.group_, "scalar product");
        return SymPoly(x.group_, x.shift_, x.poly_.scaled(s));
    }

    SymPoly pow(int k) const
    {
        SymPoly out = one(group_, shift_);
        for (int i = 0; i < k; ++i)
            out = out * *this;
        return out;
    }

    std::optional<SymPoly> divide_exact(const SymPoly& d) const
    {
        check_compatible(d, "division");
        auto q = poly_.divide_exact(d.poly_);
        if (!q)
            return std::nullopt;
        return SymPoly(group_, shift_, std::move(*q));
    }

    friend bool operator==(const SymPoly& a, const SymPoly& b)
    {
        return a.group_ == b.group_ && a.shift_ == b.shift_ && a.poly_ == b.poly_;
    }

private:
    void check_compatible(const SymPoly& o, const char* what) const
    {
        require_same_group(group_, o.group_, what);
        if (shift_ != o.shift_)
            throw PreconditionError(std::string("symmetric algebra ") + what + ": shift mismatch ("
                                    + std::to_string(shift_) + " vs " + std::to_string(o.shift_) + ")");
    }

    AbelianGroup group_;
    int shift_;
    Poly poly_;
};

inline SymPoly sym_mul(const SymPoly& a, const SymPoly& b) { return a * b; }

inline SymPoly specialize(const SymPoly& x, const Specialization& s)
{
    return SymPoly(x.group(), x.shift(), x.poly().map_coeffs([&](const CoeffPoly& c) { return specialize(c, s); }));
}

// vartheta_alpha as an element of Sym_1(R_E[d]).
template <class Twist = DefaultTwist>
SymPoly theta_class(const Flag& flag, const Character& alpha, int shift)
{
    return SymPoly::embed(coaug<Twist>(flag, alpha), shift);
}

// Multiplication by vartheta_alpha: Sym_n -> Sym_{n+1}.
template <class Twist = DefaultTwist>
SymPoly theta_mul(const Flag& flag, const Character& alpha, const SymPoly& x)
{
    require_same_group(flag.group(), x.group(), "theta multiplication");
    return theta_class<Twist>(flag, alpha, x.shift()) * x;
}

// Retraction of multiplication by vartheta_eps = beta_0 on Sym_{n+1} -> Sym_n:
// a monomial beta_{i1}...beta_{i(n+1)} with weakly increasing indices maps to
// beta_{i2}...beta_{i(n+1)} if i1 = 0 and to 0 otherwise, extended linearly
// over the coefficient ring.
inline SymPoly retract(const SymPoly& x, int n)
{
    if (n < 0)
        throw PreconditionError("retraction target dimension must be >= 0");
    SymPoly::Poly out;
    for (const auto& [m, c] : x.poly().terms()) {
        if (total_degree(m) != n + 1)
            throw PreconditionError("retraction input is not dimension-homogeneous of dimension " + std::to_string(n + 1));
        if (m.empty() || m.front().first != 0)
            continue;
        Exponents r = m;
        if (--r.front().second == 0)
            r.erase(r.begin());
        out.add_term(r, c);
    }
    return SymPoly(x.group(), x.shift(), std::move(out));
}

// The retraction only splits multiplication by the first flag step's class.
// Requests for any other character are reported rather than reinterpreted.
inline SymPoly retract_for(const Flag& flag, const Character& alpha, const SymPoly& x, int n)
{
    if (!(alpha == flag.step(1)))
        throw PreconditionError("the monomial retraction splits multiplication by vartheta of the first flag step "
                                + flag.step(1).to_string() + " only; requested " + alpha.to_string()
                                + ". Choose a flag starting with that character instead.");
    return retract(x, n);
}

}  // namespace eqhom
