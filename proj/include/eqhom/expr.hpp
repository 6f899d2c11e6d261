#pragma once

// Parser for the textual expression grammar (see expression_grammar) and for
// specialization files.

#include "eqhom/coordinates.hpp"

#include <cctype>
#include <string>
#include <string_view>

namespace eqhom {

inline constexpr std::string_view expression_grammar =
    "fraction  := sum [ \"/\" denom ]\n"
    "sum       := [ \"+\" | \"-\" ] product { (\"+\" | \"-\") product }\n"
    "product   := power { \"*\" power }\n"
    "power     := atom [ \"^\" uint ]\n"
    "atom      := uint | \"e[\" character \"]\" | \"beta[\" uint \"]\" | \"b[\" uint \"]\"\n"
    "           | \"c[\" uint \"]\" | \"(\" sum \")\"\n"
    "denom     := dfactor { \"*\" dfactor }\n"
    "dfactor   := \"1\" | (\"theta\" | \"btheta\" | \"ctheta\") \"[\" character \"]\" [ \"^\" uint ]\n"
    "           | \"(\" denom \")\"\n"
    "\n"
    "e[(0,...,0)] is 0; b[0] and c[0] are 1. A fraction uses one variable family\n"
    "(beta, b or c) and the matching denominator family (theta, btheta or ctheta).";

inline constexpr std::string_view specialization_format =
    "One assignment per line; \"#\" starts a comment.\n"
    "  e[(1)] = 1 + e[(1)]\n"
    "  e[*]   = 0          every symbol not assigned explicitly";

enum class VarFamily { none, beta, b, c };
enum class ThetaFamily { none, theta, btheta, ctheta };

struct ParsedFraction {
    VarFamily vars = VarFamily::none;
    SparsePoly<CoeffPoly> num;
    ThetaFamily theta = ThetaFamily::none;
    DenomExponents denom;
};

namespace detail {

class ExprParser {
public:
    ExprParser(const AbelianGroup& g, std::string_view text) : g_(g), s_(text) {}

    ParsedFraction fraction()
    {
        ParsedFraction out;
        out.num = sum(out);
        skip_ws();
        if (peek() == '/') {
            ++pos_;
            denom(out);
        }
        expect_end();
        return out;
    }

    CoeffPoly coefficient()
    {
        ParsedFraction scratch;
        auto p = sum(scratch);
        expect_end();
        if (scratch.vars != VarFamily::none)
            fail("coefficient expressions may only use integers and e[...]");
        if (p.is_zero())
            return CoeffPoly::zero(g_);
        return p.leading().second;
    }

private:
    using Poly = SparsePoly<CoeffPoly>;

    [[noreturn]] void fail(const std::string& msg) const
    {
        throw ParseError(msg + " at position " + std::to_string(pos_) + " in '" + std::string(s_) + "'");
    }

    void skip_ws()
    {
        while (pos_ < s_.size() && (s_[pos_] == ' ' || s_[pos_] == '\t'))
            ++pos_;
    }

    char peek()
    {
        skip_ws();
        return pos_ < s_.size() ? s_[pos_] : '\0';
    }

    void expect(char c)
    {
        if (peek() != c)
            fail(std::string("expected '") + c + "'");
        ++pos_;
    }

    void expect_end()
    {
        if (peek() != '\0')
            fail("unexpected token '" + std::string(s_.substr(pos_, 12)) + "'");
    }

    std::string ident()
    {
        skip_ws();
        std::size_t start = pos_;
        while (pos_ < s_.size() && std::isalpha(static_cast<unsigned char>(s_[pos_])))
            ++pos_;
        return std::string(s_.substr(start, pos_ - start));
    }

    Integer uint_literal()
    {
        skip_ws();
        std::size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])))
            ++pos_;
        if (start == pos_)
            fail("expected a non-negative integer");
        return Integer(std::string(s_.substr(start, pos_ - start)));
    }

    int small_uint(int max)
    {
        Integer v = uint_literal();
        if (v > max)
            fail("integer " + v.str() + " exceeds " + std::to_string(max));
        return static_cast<int>(v);
    }

    Character bracket_character()
    {
        expect('[');
        std::size_t start = pos_;
        int depth = 0;
        while (pos_ < s_.size() && !(s_[pos_] == ']' && depth == 0)) {
            if (s_[pos_] == '(')
                ++depth;
            else if (s_[pos_] == ')')
                --depth;
            ++pos_;
        }
        if (pos_ >= s_.size())
            fail("unterminated '['");
        std::string_view body = s_.substr(start, pos_ - start);
        ++pos_;
        return g_.parse_character(body);
    }

    Poly constant(const CoeffPoly& c) { return Poly::monomial({}, c); }

    void set_family(ParsedFraction& out, VarFamily f, const std::string& name)
    {
        if (out.vars != VarFamily::none && out.vars != f)
            fail("cannot mix variable families (found '" + name + "')");
        out.vars = f;
    }

    Poly atom(ParsedFraction& out)
    {
        char c = peek();
        if (c == '(') {
            ++pos_;
            Poly p = sum(out);
            expect(')');
            return p;
        }
        if (std::isdigit(static_cast<unsigned char>(c)))
            return constant(CoeffPoly::constant(g_, uint_literal()));
        std::size_t at = pos_;
        std::string name = ident();
        if (name == "e") {
            Character ch = bracket_character();
            if (ch.is_trivial())
                return {};
            return constant(CoeffPoly::symbol(EulerSymbol(ch)));
        }
        if (name == "beta" || name == "b" || name == "c") {
            set_family(out, name == "beta" ? VarFamily::beta : name == "b" ? VarFamily::b : VarFamily::c, name);
            expect('[');
            int i = small_uint(1 << 20);
            expect(']');
            if (i == 0 && name != "beta")
                return constant(CoeffPoly::one(g_));
            return Poly::monomial(single_var(i), CoeffPoly::one(g_));
        }
        pos_ = at;
        fail(name.empty() ? "expected a term" : "unknown symbol '" + name + "'");
    }

    Poly power(ParsedFraction& out)
    {
        Poly base = atom(out);
        if (peek() != '^')
            return base;
        ++pos_;
        int k = small_uint(256);
        Poly r = constant(CoeffPoly::one(g_));
        for (int i = 0; i < k; ++i)
            r = r * base;
        return r;
    }

    Poly product(ParsedFraction& out)
    {
        Poly p = power(out);
        while (peek() == '*') {
            ++pos_;
            p = p * power(out);
        }
        return p;
    }

    Poly sum(ParsedFraction& out)
    {
        bool neg = false;
        if (peek() == '-' || peek() == '+') {
            neg = s_[pos_] == '-';
            ++pos_;
        }
        Poly p = product(out);
        if (neg)
            p = -p;
        for (;;) {
            char c = peek();
            if (c != '+' && c != '-')
                break;
            ++pos_;
            Poly t = product(out);
            p = c == '+' ? p + t : p - t;
        }
        return p;
    }

    void dfactor(ParsedFraction& out)
    {
        char c = peek();
        if (c == '(') {
            ++pos_;
            denom(out);
            expect(')');
            return;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            if (uint_literal() != 1)
                fail("the only integer allowed in a denominator is 1");
            return;
        }
        std::size_t at = pos_;
        std::string name = ident();
        ThetaFamily f = name == "theta"    ? ThetaFamily::theta
                        : name == "btheta" ? ThetaFamily::btheta
                        : name == "ctheta" ? ThetaFamily::ctheta
                                           : ThetaFamily::none;
        if (f == ThetaFamily::none) {
            pos_ = at;
            fail("expected theta[...], btheta[...] or ctheta[...] in denominator, found '" + name + "'");
        }
        if (out.theta != ThetaFamily::none && out.theta != f)
            fail("cannot mix denominator families (found '" + name + "')");
        out.theta = f;
        Character ch = bracket_character();
        int k = 1;
        if (peek() == '^') {
            ++pos_;
            k = small_uint(256);
        }
        out.denom[ch] += k;
    }

    void denom(ParsedFraction& out)
    {
        dfactor(out);
        while (peek() == '*') {
            ++pos_;
            dfactor(out);
        }
    }

    const AbelianGroup& g_;
    std::string_view s_;
    std::size_t pos_ = 0;
};

}  // namespace detail

inline ParsedFraction parse_fraction(const AbelianGroup& g, std::string_view text)
{
    return detail::ExprParser(g, text).fraction();
}

inline CoeffPoly parse_coeff(const AbelianGroup& g, std::string_view text)
{
    return detail::ExprParser(g, text).coefficient();
}

// Interpret a parsed fraction in beta variables as an element of the
// localization of Sym(R_E[shift]).
inline LocFraction to_loc_fraction(const ParsedFraction& p, const Flag& flag, LocMode mode, int shift)
{
    if (p.vars == VarFamily::b || p.vars == VarFamily::c)
        throw ParseError("expected an expression in beta[...], found coordinate variables");
    if (p.theta == ThetaFamily::btheta || p.theta == ThetaFamily::ctheta)
        throw ParseError("beta-fractions take theta[...] denominators");
    SymPoly num(flag.group(), shift, p.num);
    if (num.max_index() > flag.length())
        throw PreconditionError("beta[" + std::to_string(num.max_index()) + "] exceeds the flag truncation "
                                + std::to_string(flag.length()));
    return LocFraction(flag, mode, std::move(num), p.denom);
}

// A constant with no denominator names no family; `fallback` decides then.
inline CoordFraction to_coord_fraction(const ParsedFraction& p, const Flag& flag, LocMode mode,
                                       std::optional<CoordKind> fallback = std::nullopt)
{
    CoordKind kind;
    if (p.vars == VarFamily::b || (p.vars == VarFamily::none && p.theta == ThetaFamily::btheta))
        kind = CoordKind::b;
    else if (p.vars == VarFamily::c || (p.vars == VarFamily::none && p.theta == ThetaFamily::ctheta))
        kind = CoordKind::c;
    else if (p.vars == VarFamily::none && p.theta == ThetaFamily::none && fallback)
        kind = *fallback;
    else
        throw ParseError("expected an expression in b[...] or c[...]");
    if (p.theta == ThetaFamily::theta || (kind == CoordKind::b && p.theta == ThetaFamily::ctheta)
        || (kind == CoordKind::c && p.theta == ThetaFamily::btheta))
        throw ParseError(std::string("denominators of ") + generator_prefix(kind) + "-expressions must be "
                         + theta_prefix(kind) + "[...]");
    return CoordFraction(flag, mode, kind, p.num, p.denom);
}

inline Specialization parse_specialization(const AbelianGroup& g, std::string_view text)
{
    Specialization s(g);
    std::size_t line_no = 0;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t end = text.find('\n', start);
        if (end == std::string_view::npos)
            end = text.size();
        std::string_view line = text.substr(start, end - start);
        ++line_no;
        start = end + 1;
        if (auto hash = line.find('#'); hash != std::string_view::npos)
            line = line.substr(0, hash);
        line = detail::trim(line);
        if (line.empty())
            continue;
        auto eq = line.find('=');
        if (eq == std::string_view::npos)
            throw ParseError("specialization line " + std::to_string(line_no) + ": expected 'e[...] = value'");
        std::string_view lhs = detail::trim(line.substr(0, eq));
        CoeffPoly value = parse_coeff(g, line.substr(eq + 1));
        if (lhs == "e[*]") {
            s.assign_all(value);
            continue;
        }
        if (lhs.size() < 3 || lhs.substr(0, 2) != "e[" || lhs.back() != ']')
            throw ParseError("specialization line " + std::to_string(line_no) + ": invalid symbol '" + std::string(lhs)
                             + "'");
        Character ch = g.parse_character(lhs.substr(2, lhs.size() - 3));
        if (ch.is_trivial())
            throw ParseError("specialization line " + std::to_string(line_no)
                             + ": e of the trivial character is 0, not a symbol");
        s.assign(EulerSymbol(ch), value);
    }
    return s;
}

}  // namespace eqhom
