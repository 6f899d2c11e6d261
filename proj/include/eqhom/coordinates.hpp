#pragma once

// Coordinatized presentations of the dimension-degree-0 subrings.
//
// With vartheta_eps = beta_0, the normalized classes
//   b_i = beta_i / vartheta_eps        in Sym(R_E[-2])[...]   (b-coordinates)
//   c_i = beta_i / vartheta_eps        in Sym(R_E[+2])[...]   (c-coordinates)
//   b(vartheta_alpha) = vartheta_alpha / vartheta_eps = 1 + sum_i e(alpha^{-1} V_i) b_i
// live in dimension degree 0, and b_0 = b(vartheta_eps) = 1. A dimension-0
// fraction whose numerator monomials all have dimension p = sum f_alpha is
// rewritten term by term: dividing numerator and denominator by beta_0^p turns
// every beta_i into b_i and every vartheta_alpha into b(vartheta_alpha).

#include "eqhom/localization.hpp"

#include <utility>
#include <vector>

namespace eqhom {

enum class CoordKind { b, c };

inline int shift_of(CoordKind k) { return k == CoordKind::b ? -2 : 2; }
inline const char* generator_prefix(CoordKind k) { return k == CoordKind::b ? "b" : "c"; }
inline const char* theta_prefix(CoordKind k) { return k == CoordKind::b ? "btheta" : "ctheta"; }

using CoordPoly = SparsePoly<CoeffPoly>;

// num(b_1, b_2, ...) / prod_{alpha != eps} b(vartheta_alpha)^{f_alpha}
class CoordFraction {
public:
    CoordFraction(Flag flag, LocMode mode, CoordKind kind, CoordPoly num, DenomExponents denom = {})
        : flag_(std::move(flag)), mode_(mode), kind_(kind), num_(std::move(num))
    {
        if (mode_ == LocMode::mUP && kind_ == CoordKind::b)
            throw PreconditionError("mUP has no b-coordinates; use c-coordinates");
        for (const auto& [m, c] : num_.terms()) {
            require_same_group(flag_.group(), c.group(), "coordinate fraction");
            for (const auto& [i, e] : m)
                if (i < 1 || i > flag_.length())
                    throw PreconditionError(std::string(generator_prefix(kind_)) + "[" + std::to_string(i)
                                            + "] outside 1.." + std::to_string(flag_.length()));
        }
        for (const auto& [alpha, f] : denom) {
            if (f < 0)
                throw PreconditionError("denominator exponents must be >= 0");
            if (f == 0 || alpha.is_trivial())
                continue;
            if (mode_ == LocMode::mUP)
                throw PreconditionError("mUP inverts nothing beyond vartheta_eps; got " + alpha.to_string());
            detail::require_in_flag(flag_, alpha);
            denom_[alpha] += f;
        }
    }

    const Flag& flag() const { return flag_; }
    LocMode mode() const { return mode_; }
    CoordKind kind() const { return kind_; }
    const CoordPoly& num() const { return num_; }
    const DenomExponents& denom() const { return denom_; }
    bool is_polynomial() const { return denom_.empty(); }

    int denom_dimension() const
    {
        int s = 0;
        for (const auto& [alpha, f] : denom_)
            s += f;
        return s;
    }

private:
    Flag flag_;
    LocMode mode_;
    CoordKind kind_;
    CoordPoly num_;
    DenomExponents denom_;
};

// b(vartheta_alpha) = 1 + sum_{i>=1} aug(alpha, i) b_i as a polynomial in the
// coordinates.
template <class Twist = DefaultTwist>
CoordPoly coord_theta(const Flag& flag, const Character& alpha)
{
    CoordPoly out;
    const ProjClass theta = coaug<Twist>(flag, alpha);
    for (const auto& [i, c] : theta.terms())
        out.add_term(single_var(i, i == 0 ? 0 : 1), c);
    return out;
}

namespace detail {

inline CoordFraction to_coords(const LocFraction& a, CoordKind kind)
{
    if (a.shift() != shift_of(kind))
        throw PreconditionError(std::string(generator_prefix(kind)) + "-coordinates need shift "
                                + std::to_string(shift_of(kind)) + ", fraction has shift "
                                + std::to_string(a.shift()));
    if (!a.flag().step(1).is_trivial())
        throw PreconditionError("coordinates normalize by the first flag step, which must be the trivial character");
    const int p = a.denom_dimension();
    CoordPoly num;
    for (const auto& [m, c] : a.num().poly().terms()) {
        if (total_degree(m) != p)
            throw PreconditionError("fraction does not have dimension degree 0 monomialwise: numerator monomial of "
                                    "dimension " + std::to_string(total_degree(m)) + " over denominator of dimension "
                                    + std::to_string(p));
        Exponents r;
        for (const auto& ve : m)
            if (ve.first != 0)
                r.push_back(ve);
        num.add_term(r, c);
    }
    return CoordFraction(a.flag(), a.mode(), kind, std::move(num), a.denom());
}

}  // namespace detail

inline CoordFraction to_b_generators(const LocFraction& a) { return detail::to_coords(a, CoordKind::b); }
inline CoordFraction to_c_generators(const LocFraction& a) { return detail::to_coords(a, CoordKind::c); }

// Substitute b_i -> beta_i / vartheta_eps and b(vartheta_alpha) ->
// vartheta_alpha / vartheta_eps, then clear to a single fraction.
inline LocFraction expand_coords(const CoordFraction& x)
{
    const int shift = shift_of(x.kind());
    const AbelianGroup& g = x.flag().group();
    const int top = std::max(x.num().max_total_degree(), x.denom_dimension());
    SymPoly::Poly num;
    for (const auto& [m, c] : x.num().terms()) {
        Exponents beta = m;
        int pad = top - total_degree(m);
        if (pad > 0)
            beta.insert(beta.begin(), {0, pad});
        num.add_term(beta, c);
    }
    DenomExponents denom = x.denom();
    if (top - x.denom_dimension() > 0)
        denom[g.identity()] += top - x.denom_dimension();
    return LocFraction(x.flag(), x.mode(), SymPoly(g, shift, std::move(num)), std::move(denom));
}

inline LocFraction expand_b(const CoordFraction& x) { return expand_coords(x); }

// Denominator-free normal form in c_1, c_2, ... of a dimension-0 element of
// the mUP localization. Unique because the c_i are polynomial generators.
inline CoordFraction mup_normal_form(const LocFraction& a)
{
    if (a.mode() != LocMode::mUP)
        throw PreconditionError("normal form in c-coordinates is defined for the mUP localization");
    CoordFraction out = to_c_generators(a);
    if (!out.is_polynomial())
        throw std::logic_error("mUP coordinates acquired a denominator");
    return out;
}

// A coordinatized fraction after a specialization of the coefficients. The
// inverted classes become explicit polynomials; those equal to 1 are dropped.
struct SpecializedCoords {
    CoordKind kind;
    CoordPoly num;
    std::vector<std::pair<CoordPoly, int>> denom;

    bool is_polynomial() const { return denom.empty(); }
};

inline SpecializedCoords specialize(const CoordFraction& x, const Specialization& s)
{
    auto spec = [&](const CoordPoly& p) { return p.map_coeffs([&](const CoeffPoly& c) { return specialize(c, s); }); };
    SpecializedCoords out{x.kind(), spec(x.num()), {}};
    const CoordPoly one = CoordPoly::monomial({}, CoeffPoly::one(x.flag().group()));
    for (const auto& [alpha, f] : x.denom()) {
        CoordPoly t = spec(coord_theta(x.flag(), alpha));
        if (!(t == one))
            out.denom.emplace_back(std::move(t), f);
    }
    return out;
}

}  // namespace eqhom
