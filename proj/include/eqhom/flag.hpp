#pragma once

// Truncated flags of a complete universe, the homology of equivariant
// projective space on the flag basis, augmentations and coaugmentation
// classes.
//
// A flag is stored as its sequence of one-dimensional steps
// (gamma_1, ..., gamma_N) with gamma_1 = eps; V_i = gamma_1 + ... + gamma_i and
// V_0 = 0. The homology is free on beta_0, ..., beta_N, the Kronecker duals of
// the Chern classes y(V_0), ..., y(V_N). beta_i sits in homological degree 2i.
//
// Flag spec: comma-joined character specs, e.g. "(0),(1),(0),(1)".

#include "eqhom/coeff.hpp"

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace eqhom {

class Flag {
public:
    Flag(AbelianGroup group, std::vector<Character> chars) : group_(std::move(group)), chars_(std::move(chars))
    {
        if (chars_.empty())
            throw PreconditionError("a flag needs at least one step");
        for (const auto& c : chars_)
            require_same_group(group_, c.group(), "flag");
        if (!chars_.front().is_trivial())
            throw PreconditionError("flag must start with the trivial character, got " + chars_.front().to_string());
    }

    static constexpr std::string_view grammar =
        "flag      := character { \",\" character }   first entry must be the trivial character";

    static Flag parse(const AbelianGroup& g, std::string_view spec)
    {
        std::vector<Character> chars;
        for (std::string_view part : detail::split_top_level(detail::trim(spec), ','))
            chars.push_back(g.parse_character(part));
        if (!chars.empty() && !chars.front().is_trivial())
            throw ParseError("flag '" + std::string(spec) + "' must start with the trivial character, got "
                             + chars.front().to_string());
        return Flag(g, std::move(chars));
    }

    // All characters in lexicographic order (eps first), repeated cyclically
    // until the flag has `length` steps.
    static Flag standard(const AbelianGroup& g, int length)
    {
        if (length < 1)
            throw PreconditionError("flag length must be >= 1");
        std::vector<Character> chars;
        chars.reserve(length);
        for (int i = 0; i < length; ++i)
            chars.push_back(g.from_index(i % g.order()));
        return Flag(g, std::move(chars));
    }

    const AbelianGroup& group() const { return group_; }
    const std::vector<Character>& chars() const { return chars_; }
    int length() const { return static_cast<int>(chars_.size()); }

    // gamma_i, 1-based.
    const Character& step(int i) const { return chars_.at(i - 1); }

    Representation subrep(int i) const
    {
        check_index(i);
        return Representation(group_, std::vector<Character>(chars_.begin(), chars_.begin() + i));
    }

    // Smallest j >= 1 with gamma_j = alpha.
    std::optional<int> first_occurrence(const Character& alpha) const
    {
        for (int j = 0; j < length(); ++j)
            if (chars_[j] == alpha)
                return j + 1;
        return std::nullopt;
    }

    bool contains(const Character& alpha) const { return first_occurrence(alpha).has_value(); }

    // Every character of the group occurs among the steps.
    bool complete() const
    {
        std::vector<bool> seen(group_.order(), false);
        for (const auto& c : chars_)
            seen[c.index()] = true;
        return std::all_of(seen.begin(), seen.end(), [](bool b) { return b; });
    }

    std::string to_string() const
    {
        std::string out;
        for (std::size_t k = 0; k < chars_.size(); ++k) {
            if (k)
                out += ',';
            out += chars_[k].to_string();
        }
        return out;
    }

    void check_index(int i) const
    {
        if (i < 0 || i > length())
            throw PreconditionError("flag index " + std::to_string(i) + " out of range 0.." + std::to_string(length()));
    }

    friend bool operator==(const Flag& a, const Flag& b) { return a.group_ == b.group_ && a.chars_ == b.chars_; }

private:
    AbelianGroup group_;
    std::vector<Character> chars_;
};

// Element of the homology of projective space: sum of coeff_i * beta_i.
class ProjClass {
public:
    explicit ProjClass(AbelianGroup group) : group_(std::move(group)) {}

    static ProjClass basis(const AbelianGroup& g, int i)
    {
        ProjClass p(g);
        p.add_term(i, CoeffPoly::one(g));
        return p;
    }

    const AbelianGroup& group() const { return group_; }
    const std::map<int, CoeffPoly>& terms() const { return coeffs_; }
    bool is_zero() const { return coeffs_.empty(); }

    void add_term(int i, const CoeffPoly& c)
    {
        require_same_group(group_, c.group(), "projective class");
        if (c.is_zero())
            return;
        auto it = coeffs_.find(i);
        if (it == coeffs_.end()) {
            coeffs_.emplace(i, c);
            return;
        }
        it->second += c;
        if (it->second.is_zero())
            coeffs_.erase(it);
    }

    CoeffPoly coefficient(int i) const
    {
        auto it = coeffs_.find(i);
        return it == coeffs_.end() ? CoeffPoly::zero(group_) : it->second;
    }

    // Homological degree deg(c) + 2i if all terms agree.
    std::optional<int> degree() const
    {
        std::optional<int> d;
        for (const auto& [i, c] : coeffs_) {
            auto cd = c.degree();
            if (!cd || (d && *d != *cd + 2 * i))
                return std::nullopt;
            d = *cd + 2 * i;
        }
        return d;
    }

    friend ProjClass operator+(ProjClass a, const ProjClass& b)
    {
        for (const auto& [i, c] : b.coeffs_)
            a.add_term(i, c);
        return a;
    }

    friend ProjClass operator*(const CoeffPoly& s, const ProjClass& x)
    {
        ProjClass out(x.group_);
        for (const auto& [i, c] : x.coeffs_)
            out.add_term(i, s * c);
        return out;
    }

    friend bool operator==(const ProjClass& a, const ProjClass& b)
    {
        return a.group_ == b.group_ && a.coeffs_ == b.coeffs_;
    }

private:
    AbelianGroup group_;
    std::map<int, CoeffPoly> coeffs_;
};

inline ProjClass specialize(const ProjClass& x, const Specialization& s)
{
    ProjClass out(x.group());
    for (const auto& [i, c] : x.terms())
        out.add_term(i, specialize(c, s));
    return out;
}

// How the augmentation at alpha twists V_i before taking its Euler class.
// The correct twist is alpha^{-1} (x) V_i; DirectTwist uses alpha (x) V_i and
// exists only so the test suite can show it detects that error.
struct InverseTwist {
    static Character apply(const Character& alpha) { return alpha.inverse(); }
};

struct DirectTwist {
    static Character apply(const Character& alpha) { return alpha; }
};

// Defining EQHOM_MUTANT_DIRECT_TWIST builds the deliberately broken variant.
#ifdef EQHOM_MUTANT_DIRECT_TWIST
using DefaultTwist = DirectTwist;
#else
using DefaultTwist = InverseTwist;
#endif

// theta(alpha)(y(V_i)) = e(alpha^{-1} (x) V_i).
template <class Twist = DefaultTwist>
CoeffPoly aug(const Flag& flag, const Character& alpha, int i)
{
    require_same_group(flag.group(), alpha.group(), "augmentation");
    flag.check_index(i);
    return euler_class(tensor_char(Twist::apply(alpha), flag.subrep(i)));
}

namespace detail {

inline void require_in_flag(const Flag& flag, const Character& alpha)
{
    if (!flag.contains(alpha))
        throw PreconditionError("character " + alpha.to_string() + " does not occur in the truncated flag "
                                + flag.to_string() + "; its coaugmentation class is not determined at this truncation");
}

}  // namespace detail

// vartheta_alpha = beta_0 + sum_{i>=1} e(alpha^{-1} (x) V_i) beta_i. Terms
// with i >= first occurrence of alpha vanish, so the sum stops there.
template <class Twist = DefaultTwist>
ProjClass coaug(const Flag& flag, const Character& alpha)
{
    require_same_group(flag.group(), alpha.group(), "coaugmentation");
    detail::require_in_flag(flag, alpha);
    const int stop = *flag.first_occurrence(alpha);
    ProjClass out(flag.group());
    for (int i = 0; i < stop; ++i)
        out.add_term(i, aug<Twist>(flag, alpha, i));
    return out;
}

// <y(V_i), x>: the beta_i coordinate, by duality of the two bases.
inline CoeffPoly pairing(const Flag& flag, int i, const ProjClass& x)
{
    flag.check_index(i);
    require_same_group(flag.group(), x.group(), "pairing");
    return x.coefficient(i);
}

// Independent route to vartheta_alpha: restrict each Chern class factor
// y(gamma_j) separately (theta(alpha)(y(gamma)) = e(alpha^{-1} gamma), zero
// when gamma = alpha), multiply out y(V_i) = y(gamma_1)...y(gamma_i) for every
// i <= N, and assemble the class whose pairings with the y(V_i) are these
// values. Shares no code with aug/coaug beyond the coefficient ring.
inline ProjClass coaug_via_duality(const Flag& flag, const Character& alpha)
{
    require_same_group(flag.group(), alpha.group(), "coaugmentation");
    detail::require_in_flag(flag, alpha);
    const AbelianGroup& g = flag.group();
    const auto& orders = g.cyclic_orders();
    const std::vector<int> ra = alpha.residues();

    auto restrict_line = [&](const Character& gamma) {
        std::vector<int> r = gamma.residues();
        for (std::size_t k = 0; k < r.size(); ++k)
            r[k] = ((r[k] - ra[k]) % orders[k] + orders[k]) % orders[k];
        int idx = g.index_of(r);
        if (idx == 0)
            return CoeffPoly::zero(g);
        return CoeffPoly::symbol(EulerSymbol(g.from_index(idx)));
    };

    std::vector<CoeffPoly> values;
    values.reserve(flag.length() + 1);
    values.push_back(CoeffPoly::one(g));
    for (int i = 1; i <= flag.length(); ++i)
        values.push_back(values.back() * restrict_line(flag.step(i)));

    ProjClass x(g);
    for (int i = 0; i <= flag.length(); ++i)
        x = x + values[i] * ProjClass::basis(g, i);

    for (int i = 0; i <= flag.length(); ++i)
        if (!(pairing(flag, i, x) == values[i]))
            throw std::logic_error("assembled class does not pair to its prescribed values");
    return x;
}

}  // namespace eqhom
