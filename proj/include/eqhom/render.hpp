#pragma once

// Text and JSON renderings. Text output is deterministic and uses the same
// grammar the expression parser reads back:
//   coefficients   e[(1)]^2*e[(2)]      integer factor first, '*' joined
//   beta / b / c   beta[0]*beta[1]^2    b[1]*b[2]    c[3]
//   denominators   theta[(1)]^2         btheta[(1)]  ctheta[(2)]
// Coefficient polynomials list terms in ascending lex order (constants
// first); beta polynomials list terms in descending lex order (beta_0 first).

#include "eqhom/presentation.hpp"

#include <nlohmann/json.hpp>

#include <functional>
#include <limits>
#include <string>
#include <vector>

namespace eqhom {

using json = nlohmann::json;

namespace detail {

inline std::string join(const std::vector<std::string>& parts, const std::string& sep)
{
    std::string out;
    for (std::size_t k = 0; k < parts.size(); ++k) {
        if (k)
            out += sep;
        out += parts[k];
    }
    return out;
}

inline std::string power(const std::string& base, int e) { return e == 1 ? base : base + "^" + std::to_string(e); }

// c * f1 * f2 ... with the conventional elisions of 1 and -1.
inline std::string term_text(const Integer& c, const std::vector<std::string>& factors)
{
    if (factors.empty())
        return c.str();
    if (c == 1)
        return join(factors, "*");
    if (c == -1)
        return "-" + join(factors, "*");
    return c.str() + "*" + join(factors, "*");
}

inline std::string sum_text(const std::vector<std::string>& terms)
{
    if (terms.empty())
        return "0";
    std::string out = terms.front();
    for (std::size_t k = 1; k < terms.size(); ++k) {
        if (!terms[k].empty() && terms[k].front() == '-')
            out += " - " + terms[k].substr(1);
        else
            out += " + " + terms[k];
    }
    return out;
}

inline std::vector<std::string> euler_factors(const AbelianGroup& g, const Exponents& m)
{
    std::vector<std::string> f;
    for (const auto& [var, e] : m)
        f.push_back(power("e[" + g.from_index(var).to_string() + "]", e));
    return f;
}

json integer_json(const Integer& c);

}  // namespace detail

inline std::string to_text(const CoeffPoly& p)
{
    std::vector<std::string> terms;
    const auto& t = p.poly().terms();
    for (auto it = t.rbegin(); it != t.rend(); ++it)
        terms.push_back(detail::term_text(it->second, detail::euler_factors(p.group(), it->first)));
    return detail::sum_text(terms);
}

// Polynomial over CoeffPoly in named variables, descending lex order.
inline std::string poly_text(const SparsePoly<CoeffPoly>& p, const std::function<std::string(int)>& var_name)
{
    std::vector<std::string> terms;
    for (const auto& [m, c] : p.terms()) {
        std::vector<std::string> vars;
        for (const auto& [i, e] : m)
            vars.push_back(detail::power(var_name(i), e));
        const auto& cp = c.poly();
        if (cp.size() == 1) {
            const auto& [cm, cc] = cp.leading();
            std::vector<std::string> f = detail::euler_factors(c.group(), cm);
            f.insert(f.end(), vars.begin(), vars.end());
            terms.push_back(detail::term_text(cc, f));
        } else {
            std::string ct = "(" + to_text(c) + ")";
            terms.push_back(vars.empty() ? ct : ct + "*" + detail::join(vars, "*"));
        }
    }
    return detail::sum_text(terms);
}

inline std::string beta_name(int i) { return "beta[" + std::to_string(i) + "]"; }

inline std::string to_text(const SymPoly& x) { return poly_text(x.poly(), beta_name); }

inline std::string to_text(const ProjClass& x) { return to_text(SymPoly::embed(x, 0)); }

inline std::string coord_text(const CoordPoly& p, CoordKind kind)
{
    std::string prefix = generator_prefix(kind);
    return poly_text(p, [&](int i) { return prefix + "[" + std::to_string(i) + "]"; });
}

namespace detail {

inline std::string over(const std::string& num, std::size_t num_terms, const std::vector<std::string>& den)
{
    if (den.empty())
        return num;
    std::string n = num_terms > 1 ? "(" + num + ")" : num;
    return n + "/" + (den.size() > 1 ? "(" + join(den, "*") + ")" : den.front());
}

inline std::vector<std::string> theta_factors(const DenomExponents& d, const std::string& prefix)
{
    std::vector<std::string> out;
    for (const auto& [alpha, f] : d)
        out.push_back(power(prefix + "[" + alpha.to_string() + "]", f));
    return out;
}

}  // namespace detail

inline std::string to_text(const LocFraction& a)
{
    return detail::over(to_text(a.num()), a.num().poly().size(), detail::theta_factors(a.denom(), "theta"));
}

inline std::string to_text(const CoordFraction& x)
{
    return detail::over(coord_text(x.num(), x.kind()), x.num().size(),
                        detail::theta_factors(x.denom(), theta_prefix(x.kind())));
}

inline std::string to_text(const SpecializedCoords& x)
{
    std::vector<std::string> den;
    for (const auto& [p, f] : x.denom)
        den.push_back(detail::power("(" + coord_text(p, x.kind) + ")", f));
    return detail::over(coord_text(x.num, x.kind), x.num.size(), den);
}

// ---- JSON -----------------------------------------------------------------

inline json detail::integer_json(const Integer& c)
{
    if (c >= std::numeric_limits<long long>::min() && c <= std::numeric_limits<long long>::max())
        return json(static_cast<long long>(c));
    return json(c.str());
}

// [{coeff, exponents: {character: k}}]
inline json to_json(const CoeffPoly& p)
{
    json out = json::array();
    const auto& t = p.poly().terms();
    for (auto it = t.rbegin(); it != t.rend(); ++it) {
        json ex = json::object();
        for (const auto& [var, e] : it->first)
            ex[p.group().from_index(var).to_string()] = e;
        out.push_back({{"coeff", detail::integer_json(it->second)}, {"exponents", ex}});
    }
    return out;
}

// [{coeff: CoeffPoly, monomial: {index: k}}]
inline json poly_json(const SparsePoly<CoeffPoly>& p)
{
    json out = json::array();
    for (const auto& [m, c] : p.terms()) {
        json mono = json::object();
        for (const auto& [i, e] : m)
            mono[std::to_string(i)] = e;
        out.push_back({{"coeff", to_json(c)}, {"monomial", mono}});
    }
    return out;
}

inline json denom_json(const DenomExponents& d)
{
    json out = json::object();
    for (const auto& [alpha, f] : d)
        out[alpha.to_string()] = f;
    return out;
}

inline json to_json(const LocFraction& a)
{
    return {{"variables", "beta"},
            {"shift", a.shift()},
            {"mode", to_string(a.mode())},
            {"numerator", poly_json(a.num().poly())},
            {"denominator", denom_json(a.denom())},
            {"text", to_text(a)}};
}

inline json to_json(const CoordFraction& x)
{
    return {{"variables", generator_prefix(x.kind())},
            {"shift", shift_of(x.kind())},
            {"mode", to_string(x.mode())},
            {"numerator", poly_json(x.num())},
            {"denominator", denom_json(x.denom())},
            {"text", to_text(x)}};
}

inline json to_json(const SpecializedCoords& x)
{
    json den = json::array();
    for (const auto& [p, f] : x.denom)
        den.push_back({{"expansion", poly_json(p)}, {"power", f}});
    return {{"variables", generator_prefix(x.kind)},
            {"shift", shift_of(x.kind)},
            {"specialized", true},
            {"numerator", poly_json(x.num)},
            {"denominator", den},
            {"text", to_text(x)}};
}

// ---- augmentation table -----------------------------------------------------

struct ThetaTable {
    Flag flag;
    std::vector<Character> alphas;
    std::vector<std::vector<CoeffPoly>> aug;  // [alpha][i], i = 0..N
    std::vector<ProjClass> coaug;            // per alpha
};

inline ThetaTable theta_table(const Flag& flag, const Specialization* spec = nullptr,
                              std::optional<Character> only = std::nullopt)
{
    ThetaTable t{flag, {}, {}, {}};
    std::vector<Character> alphas = only ? std::vector<Character>{*only} : all_characters(flag.group());
    if (!only && !flag.complete())
        throw PreconditionError("flag " + flag.to_string() + " is not complete at truncation: every character of "
                                + flag.group().to_string() + " must occur before all coaugmentation classes are determined");
    for (const auto& alpha : alphas) {
        std::vector<CoeffPoly> row;
        for (int i = 0; i <= flag.length(); ++i) {
            CoeffPoly v = aug(flag, alpha, i);
            row.push_back(spec ? specialize(v, *spec) : v);
        }
        ProjClass th = coaug(flag, alpha);
        t.alphas.push_back(alpha);
        t.aug.push_back(std::move(row));
        t.coaug.push_back(spec ? specialize(th, *spec) : th);
    }
    return t;
}

inline std::string theta_table_text(const ThetaTable& t, bool with_aug = true)
{
    std::string out = "degree convention: homological\n";
    out += "group: " + t.flag.group().to_string() + "\n";
    out += "flag: " + t.flag.to_string() + "\n";
    if (with_aug) {
        out += "augmentations theta(alpha)(y(V_i)):\n";
        std::vector<std::vector<std::string>> cells;
        std::vector<std::string> header{"alpha"};
        for (int i = 0; i <= t.flag.length(); ++i)
            header.push_back("y(V_" + std::to_string(i) + ")");
        cells.push_back(header);
        for (std::size_t a = 0; a < t.alphas.size(); ++a) {
            std::vector<std::string> row{t.alphas[a].to_string()};
            for (const auto& v : t.aug[a])
                row.push_back(to_text(v));
            cells.push_back(row);
        }
        std::vector<std::size_t> width(header.size(), 0);
        for (const auto& row : cells)
            for (std::size_t k = 0; k < row.size(); ++k)
                width[k] = std::max(width[k], row[k].size());
        for (const auto& row : cells) {
            std::string line = " ";
            for (std::size_t k = 0; k < row.size(); ++k) {
                line += " " + row[k];
                if (k + 1 < row.size())
                    line += std::string(width[k] - row[k].size() + 1, ' ');
            }
            out += line + "\n";
        }
    }
    out += "coaugmentation classes:\n";
    for (std::size_t a = 0; a < t.alphas.size(); ++a)
        out += "  theta[" + t.alphas[a].to_string() + "] = " + to_text(t.coaug[a]) + "\n";
    return out;
}

inline json theta_table_json(const ThetaTable& t, bool with_aug = true)
{
    json out = {{"degree_convention", "homological"}, {"group", t.flag.group().to_string()}, {"flag", t.flag.to_string()}};
    if (with_aug) {
        json rows = json::array();
        for (std::size_t a = 0; a < t.alphas.size(); ++a) {
            json vals = json::array();
            json texts = json::array();
            for (const auto& v : t.aug[a]) {
                vals.push_back(to_json(v));
                texts.push_back(to_text(v));
            }
            rows.push_back({{"alpha", t.alphas[a].to_string()}, {"values", vals}, {"text", texts}});
        }
        out["augmentations"] = rows;
    }
    json th = json::array();
    for (std::size_t a = 0; a < t.alphas.size(); ++a) {
        json terms = json::array();
        for (const auto& [i, c] : t.coaug[a].terms())
            terms.push_back({{"index", i}, {"coeff", to_json(c)}});
        th.push_back({{"alpha", t.alphas[a].to_string()}, {"expansion", terms}, {"text", to_text(t.coaug[a])}});
    }
    out["coaugmentations"] = th;
    return out;
}

// ---- presentations ----------------------------------------------------------

inline std::string generator_name(const Presentation& p, int i)
{
    if (p.coords)
        return std::string(generator_prefix(*p.coords)) + "[" + std::to_string(i) + "]";
    return beta_name(i);
}

inline std::string inverted_name(const Presentation& p, const Character& alpha)
{
    return std::string(p.coords ? theta_prefix(*p.coords) : "theta") + "[" + alpha.to_string() + "]";
}

inline std::string inverted_text(const Presentation& p, const InvertedElement& e)
{
    return e.coord_form ? coord_text(*e.coord_form, *p.coords) : to_text(*e.beta_form);
}

inline std::string presentation_text(const Presentation& p)
{
    std::string out = "degree convention: homological\n";
    out += std::string("theory: ") + to_string(p.theory) + "\n";
    out += "group: " + p.flag.group().to_string() + "\n";
    out += "flag: " + p.flag.to_string() + "\n";
    out += "shift: " + std::to_string(p.shift) + "\n";
    if (p.specialized)
        out += "specialized: yes\n";
    out += "generators:\n";
    for (const auto& g : p.generators)
        out += "  " + generator_name(p, g.index) + "  degree " + std::to_string(g.degree) + "  dimension "
               + std::to_string(g.dimension) + "\n";
    if (p.inverted.empty()) {
        out += "inverted: none (polynomial ring)\n";
    } else {
        out += "inverted:\n";
        for (const auto& e : p.inverted)
            out += "  " + inverted_name(p, e.alpha) + " = " + inverted_text(p, e) + "\n";
    }
    if (p.coords)
        out += std::string("relations: ") + generator_prefix(*p.coords) + "[0] = 1, " + theta_prefix(*p.coords)
               + "[" + p.flag.group().identity().to_string() + "] = 1\n";
    return out;
}

inline json presentation_json(const Presentation& p)
{
    json gens = json::array();
    for (const auto& g : p.generators)
        gens.push_back({{"name", generator_name(p, g.index)}, {"index", g.index}, {"degree", g.degree},
                        {"dimension", g.dimension}});
    json inv = json::array();
    for (const auto& e : p.inverted)
        inv.push_back({{"name", inverted_name(p, e.alpha)},
                       {"alpha", e.alpha.to_string()},
                       {"expansion", e.coord_form ? poly_json(*e.coord_form) : poly_json(e.beta_form->poly())},
                       {"text", inverted_text(p, e)}});
    return {{"degree_convention", "homological"},
            {"theory", to_string(p.theory)},
            {"group", p.flag.group().to_string()},
            {"flag", p.flag.to_string()},
            {"shift", p.shift},
            {"coordinates", p.coords ? json(generator_prefix(*p.coords)) : json(nullptr)},
            {"specialized", p.specialized},
            {"generators", gens},
            {"inverted", inv},
            {"polynomial", p.inverted.empty()}};
}

}  // namespace eqhom
