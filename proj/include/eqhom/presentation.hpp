#pragma once

// Generator/relation presentations of the four homology rings
//   MUP  = Sym(R_E[d])[vartheta_alpha^{-1} | alpha]     d = -2 or +2
//   mUP  = Sym(R_E[2])[vartheta_eps^{-1}]
//   MU   = dimension-0 part of MUP: E[b_1, b_2, ...][b(vartheta_alpha)^{-1}]
//          (c-coordinates when d = +2)
//   mU   = dimension-0 part of mUP: E[c_1, c_2, ...]
// truncated at generator index N.

#include "eqhom/coordinates.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace eqhom {

enum class Theory { MUP, mUP, MU, mU };

inline const char* to_string(Theory t)
{
    switch (t) {
    case Theory::MUP: return "MUP";
    case Theory::mUP: return "mUP";
    case Theory::MU: return "MU";
    case Theory::mU: return "mU";
    }
    return "?";
}

inline Theory parse_theory(std::string_view s)
{
    if (s == "MUP")
        return Theory::MUP;
    if (s == "mUP")
        return Theory::mUP;
    if (s == "MU")
        return Theory::MU;
    if (s == "mU")
        return Theory::mU;
    throw ParseError("unknown theory '" + std::string(s) + "': expected MUP, mUP, MU or mU");
}

inline LocMode mode_of(Theory t) { return (t == Theory::MUP || t == Theory::MU) ? LocMode::MUP : LocMode::mUP; }
inline int default_shift(Theory t) { return (t == Theory::MUP || t == Theory::MU) ? -2 : 2; }

struct PresentationGenerator {
    int index;
    int degree;     // homological
    int dimension;  // dimension-decomposition degree
};

struct InvertedElement {
    Character alpha;
    std::optional<SymPoly> beta_form;     // MUP / mUP
    std::optional<CoordPoly> coord_form;  // MU
};

struct Presentation {
    Theory theory;
    int shift;
    Flag flag;
    int truncate;
    std::optional<CoordKind> coords;  // set for MU / mU
    std::vector<PresentationGenerator> generators;
    std::vector<InvertedElement> inverted;
    bool specialized = false;
};

inline Presentation build_presentation(Theory theory, const Flag& flag, int truncate, int shift,
                                       const Specialization* spec = nullptr)
{
    if (truncate < 1 || truncate > flag.length())
        throw PreconditionError("truncation " + std::to_string(truncate) + " outside 1.." + std::to_string(flag.length())
                                + " (the flag length)");
    if (shift != -2 && shift != 2)
        throw PreconditionError("presentations use shift -2 or 2");
    if ((theory == Theory::mUP || theory == Theory::mU) && shift != 2)
        throw PreconditionError(std::string(to_string(theory)) + " is presented from Sym(R_E[2]); shift must be 2");
    if (spec)
        require_same_group(flag.group(), spec->group(), "presentation specialization");

    Presentation p{theory, shift, flag, truncate, std::nullopt, {}, {}, spec != nullptr};
    const AbelianGroup& g = flag.group();
    const bool coordinatized = theory == Theory::MU || theory == Theory::mU;
    if (coordinatized)
        p.coords = shift == -2 ? CoordKind::b : CoordKind::c;

    for (int i = coordinatized ? 1 : 0; i <= truncate; ++i) {
        const int deg_beta = SymPoly::beta_degree(i, shift);
        if (coordinatized)
            p.generators.push_back({i, deg_beta - SymPoly::beta_degree(0, shift), 0});
        else
            p.generators.push_back({i, deg_beta, 1});
    }

    std::vector<Character> inverted_chars;
    if (theory == Theory::MUP || theory == Theory::MU)
        inverted_chars = all_characters(g);
    else if (theory == Theory::mUP)
        inverted_chars = {g.identity()};

    const CoordPoly one = CoordPoly::monomial({}, CoeffPoly::one(g));
    for (const auto& alpha : inverted_chars) {
        if (theory == Theory::MU) {
            if (alpha.is_trivial())
                continue;  // b(vartheta_eps) = 1
            CoordPoly t = coord_theta(flag, alpha);
            if (spec)
                t = t.map_coeffs([&](const CoeffPoly& c) { return specialize(c, *spec); });
            if (t == one)
                continue;
            p.inverted.push_back({alpha, std::nullopt, std::move(t)});
        } else {
            SymPoly t = theta_class(flag, alpha, shift);
            if (spec)
                t = specialize(t, *spec);
            p.inverted.push_back({alpha, std::move(t), std::nullopt});
        }
    }
    return p;
}

}  // namespace eqhom
