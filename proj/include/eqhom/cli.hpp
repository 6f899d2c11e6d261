#pragma once

// The `eqhom` command line. run_cli is the whole program; tools/eqhom.cpp only
// forwards argv and the standard streams.
//
// Exit status: 0 ok, 1 a check or comparison failed, 2 malformed input,
// 3 well-formed input outside an operation's domain, 4 internal error.

#include "eqhom/verify.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace eqhom::cli {

enum Status { ok = 0, check_failed = 1, bad_input = 2, bad_domain = 3, internal = 4 };

struct Options {
    std::string group;
    std::optional<std::string> flag;
    std::optional<int> truncate;
    std::optional<std::string> theory;
    std::optional<int> shift;
    std::optional<std::string> expr;
    std::optional<std::string> alpha;
    std::optional<std::string> check;
    std::optional<std::string> pair;
    std::optional<std::string> config;
    std::optional<std::string> specialize;
    std::optional<std::uint64_t> seed;
    std::string format = "text";
};

inline constexpr std::string_view eval_checks[] = {
    "coaug-duality",   "pairing",         "roundtrip",        "retract",     "retract-zero", "collapse-theta",
    "collapse-btheta", "collapse-rewrite", "collapse-present", "periodicity", "injective",    "degree"};

namespace detail {

inline std::string read_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw ParseError("cannot read file '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

inline Flag resolve_flag(const AbelianGroup& g, const Options& o, int default_length)
{
    if (!o.flag)
        return Flag::standard(g, o.truncate.value_or(default_length));
    Flag f = Flag::parse(g, *o.flag);
    if (!o.truncate || *o.truncate == f.length())
        return f;
    if (*o.truncate < 1 || *o.truncate > f.length())
        throw PreconditionError("--truncate " + std::to_string(*o.truncate) + " outside 1.."
                                + std::to_string(f.length()) + " (the flag length)");
    return Flag(g, std::vector<Character>(f.chars().begin(), f.chars().begin() + *o.truncate));
}

inline std::optional<Specialization> load_specialization(const AbelianGroup& g, const Options& o)
{
    if (!o.specialize)
        return std::nullopt;
    return parse_specialization(g, read_file(*o.specialize));
}

inline void emit(std::ostream& out, const Options& o, const std::string& text, const json& doc)
{
    if (o.format == "json")
        out << doc.dump(2) << "\n";
    else
        out << text;
}

template <class T>
const T& need(const std::optional<T>& v, const char* option, const char* command)
{
    if (!v)
        throw ParseError(std::string(command) + " requires " + option);
    return *v;
}

inline int max_beta_index(const ParsedFraction& p)
{
    int top = 0;
    for (const auto& [m, c] : p.num.terms())
        for (const auto& [i, e] : m)
            top = std::max(top, i);
    return top;
}

}  // namespace detail

// ---- subcommands ------------------------------------------------------------

inline int cmd_theta_table(const Options& o, std::ostream& out, bool with_aug)
{
    const AbelianGroup g = AbelianGroup::parse(o.group);
    const Flag flag = detail::resolve_flag(g, o, g.order());
    std::optional<Character> only;
    if (o.alpha)
        only = g.parse_character(*o.alpha);
    auto spec = detail::load_specialization(g, o);
    ThetaTable t = theta_table(flag, spec ? &*spec : nullptr, only);
    detail::emit(out, o, theta_table_text(t, with_aug), theta_table_json(t, with_aug));
    return ok;
}

inline int cmd_present(const Options& o, std::ostream& out)
{
    const Theory theory = parse_theory(detail::need(o.theory, "--theory", "present"));
    const AbelianGroup g = AbelianGroup::parse(o.group);
    Options flag_opts = o;
    flag_opts.truncate.reset();
    const Flag flag = o.flag ? detail::resolve_flag(g, flag_opts, 0)
                             : Flag::standard(g, o.truncate.value_or(g.order()));
    auto spec = detail::load_specialization(g, o);
    Presentation p = build_presentation(theory, flag, o.truncate.value_or(flag.length()),
                                        o.shift.value_or(default_shift(theory)), spec ? &*spec : nullptr);
    detail::emit(out, o, presentation_text(p), presentation_json(p));
    return ok;
}

// beta-fractions go to coordinates (MU, mU) or to reduced form (MUP, mUP);
// coordinate expressions are expanded back into beta-fractions.
inline int cmd_rewrite(const Options& o, std::ostream& out)
{
    const Theory theory = parse_theory(detail::need(o.theory, "--theory", "rewrite"));
    const AbelianGroup g = AbelianGroup::parse(o.group);
    const std::string& text = detail::need(o.expr, "--expr", "rewrite");
    ParsedFraction parsed = parse_fraction(g, text);
    const Flag flag = detail::resolve_flag(g, o, std::max(g.order(), detail::max_beta_index(parsed)));
    auto spec = detail::load_specialization(g, o);
    const LocMode mode = mode_of(theory);
    json doc = {{"theory", to_string(theory)}, {"group", g.to_string()}, {"flag", flag.to_string()}, {"input", text}};

    const bool coordinate_input = parsed.vars == VarFamily::b || parsed.vars == VarFamily::c
                                  || parsed.theta == ThetaFamily::btheta || parsed.theta == ThetaFamily::ctheta;
    if (coordinate_input) {
        if (spec)
            throw PreconditionError("--specialize applies to coordinate outputs; this rewrite produces a beta-fraction");
        LocFraction x = frac_reduce(expand_coords(to_coord_fraction(parsed, flag, mode)));
        doc["output"] = to_json(x);
        detail::emit(out, o, to_text(x) + "\n", doc);
        return ok;
    }

    const int shift = o.shift.value_or(default_shift(theory));
    LocFraction x = to_loc_fraction(parsed, flag, mode, shift);
    if (theory == Theory::MUP || theory == Theory::mUP) {
        if (spec)
            throw PreconditionError("--specialize applies to coordinate outputs (theories MU and mU)");
        LocFraction r = frac_reduce(x);
        doc["output"] = to_json(r);
        detail::emit(out, o, to_text(r) + "\n", doc);
        return ok;
    }
    CoordFraction y = theory == Theory::mU ? mup_normal_form(x)
                      : shift == -2        ? to_b_generators(x)
                                           : to_c_generators(x);
    if (spec) {
        SpecializedCoords s = specialize(y, *spec);
        doc["output"] = to_json(s);
        detail::emit(out, o, to_text(s) + "\n", doc);
    } else {
        doc["output"] = to_json(y);
        detail::emit(out, o, to_text(y) + "\n", doc);
    }
    return ok;
}

inline int cmd_eval(const Options& o, std::ostream& out)
{
    const std::string& check = detail::need(o.check, "--check", "eval");
    const AbelianGroup g = AbelianGroup::parse(o.group);
    const Flag flag = check == "collapse-present" ? Flag::standard(g, 1) : detail::resolve_flag(g, o, g.order());
    auto alpha = [&]() { return g.parse_character(detail::need(o.alpha, "--alpha", check.c_str())); };
    auto expr = [&]() { return parse_fraction(g, detail::need(o.expr, "--expr", check.c_str())); };
    auto fraction = [&](Theory fallback) {
        const Theory t = o.theory ? parse_theory(*o.theory) : fallback;
        return to_loc_fraction(expr(), flag, mode_of(t), o.shift.value_or(default_shift(t)));
    };
    auto polynomial = [&]() {
        LocFraction x = fraction(Theory::MUP);
        if (!x.denom().empty())
            throw ParseError(check + " takes a polynomial in beta[...], not a fraction");
        return x.num();
    };

    Comparison c;
    if (check == "coaug-duality")
        c = compare_coaug_duality(flag, alpha());
    else if (check == "pairing") {
        const std::string& pr = detail::need(o.pair, "--pair", "pairing");
        auto parts = eqhom::detail::split_top_level(pr, ',');
        long long i = 0, j = 0;
        if (parts.size() != 2 || !eqhom::detail::parse_int(parts[0], i) || !eqhom::detail::parse_int(parts[1], j))
            throw ParseError("--pair expects 'i,j', got '" + pr + "'");
        if (i < 0 || j < 0 || i > flag.length() || j > flag.length())
            throw PreconditionError("--pair indices must lie in 0.." + std::to_string(flag.length()));
        c = compare_pairing(flag, static_cast<int>(i), static_cast<int>(j));
    } else if (check == "roundtrip") {
        LocFraction x = fraction(Theory::MU);
        c = compare_roundtrip(x, x.shift() == -2 ? CoordKind::b : CoordKind::c);
    } else if (check == "retract")
        c = compare_retract(flag, polynomial());
    else if (check == "retract-zero")
        c = compare_retract_zero(polynomial());
    else if (check == "collapse-theta")
        c = compare_collapse_theta(flag, alpha());
    else if (check == "collapse-btheta")
        c = compare_collapse_btheta(flag, alpha());
    else if (check == "collapse-rewrite")
        c = compare_collapse_rewrite(fraction(Theory::MU));
    else if (check == "collapse-present") {
        const Theory t = parse_theory(detail::need(o.theory, "--theory", "collapse-present"));
        if (t != Theory::MU && t != Theory::mU)
            throw PreconditionError("collapse-present compares the MU and mU presentations");
        c = compare_collapse_present(t, detail::need(o.truncate, "--truncate", "collapse-present"));
    } else if (check == "periodicity")
        c = compare_periodicity(alpha(), fraction(Theory::MUP));
    else if (check == "injective")
        c = compare_injective(flag, alpha(), polynomial());
    else if (check == "degree") {
        ParsedFraction p = expr();
        c = compare_degree(to_coord_fraction(p, flag, LocMode::MUP));
    } else
        throw ParseError("unknown check '" + check + "'");

    std::string text = "check: " + check + "\nlhs: " + c.lhs + "\nrhs: " + c.rhs + "\nequal: "
                       + (c.equal ? "yes" : "no") + "\n";
    detail::emit(out, o, text, {{"check", check}, {"lhs", c.lhs}, {"rhs", c.rhs}, {"equal", c.equal}});
    return c.equal ? ok : check_failed;
}

inline int cmd_verify(const Options& o, std::ostream& out)
{
    SweepConfig cfg = o.config ? SweepConfig::parse(detail::read_file(*o.config)) : SweepConfig{};
    if (o.seed)
        cfg.rng_seed = *o.seed;
    Report r = run_suite(cfg);
    detail::emit(out, o, report_text(r), report_json(r));
    return r.passed() ? ok : check_failed;
}

// ---- man page ---------------------------------------------------------------

namespace detail {

inline std::string roff_escape(std::string_view s)
{
    std::string out;
    bool line_start = true;
    for (char c : s) {
        if (line_start && (c == '.' || c == '\''))
            out += "\\&";
        if (c == '\\')
            out += "\\e";
        else if (c == '-')
            out += "\\-";
        else
            out += c;
        line_start = c == '\n';
    }
    return out;
}

inline std::string roff_block(std::string_view s) { return ".nf\n" + roff_escape(s) + "\n.fi\n"; }

}  // namespace detail

inline std::string manpage()
{
    std::string m;
    m += ".TH EQHOM 1\n.SH NAME\neqhom \\- exact equivariant bordism homology calculator\n";
    m += ".SH SYNOPSIS\n.B eqhom\n.I command\n[options]\n";
    m += ".SH COMMANDS\n";
    const std::pair<const char*, const char*> commands[] = {
        {"theta-table", "augmentation matrix theta(alpha)(y(V_i)) and coaugmentation classes for a flag"},
        {"thetas", "coaugmentation classes only"},
        {"present", "generators and inverted elements of MUP, mUP, MU or mU"},
        {"rewrite", "beta-fractions to b/c coordinates or reduced form; coordinate expressions back to beta-fractions"},
        {"eval", "run one comparison of the verification suite (reproduces a reported counterexample)"},
        {"verify", "run the verification sweeps"},
    };
    for (const auto& [name, what] : commands)
        m += ".TP\n.B " + std::string(name) + "\n" + detail::roff_escape(what) + "\n";
    m += ".SH OPTIONS\n";
    const std::pair<const char*, const char*> options[] = {
        {"\\-\\-group G", "ambient group, see GROUPS"},
        {"\\-\\-flag F", "flag, see FLAGS; defaults to all characters in lexicographic order, repeated"},
        {"\\-\\-truncate N", "flag length, or generator bound for present"},
        {"\\-\\-theory T", "MUP, mUP, MU or mU"},
        {"\\-\\-shift D", "suspension of the reduced module: \\-2, 0 or 2 (MU/MUP default \\-2, mU/mUP 2)"},
        {"\\-\\-expr X", "expression, see EXPRESSIONS"},
        {"\\-\\-alpha A", "character"},
        {"\\-\\-check C", "eval comparison name"},
        {"\\-\\-pair I,J", "basis indices for eval \\-\\-check pairing"},
        {"\\-\\-specialize FILE", "assignments for the Euler symbols, see SPECIALIZATION"},
        {"\\-\\-config FILE", "verify sweep bounds, see CONFIGURATION"},
        {"\\-\\-seed S", "override the configured random seed"},
        {"\\-\\-format text|json", "output format"},
    };
    for (const auto& [name, what] : options)
        m += ".TP\n.B " + std::string(name) + "\n" + what + "\n";
    m += ".SH EVAL CHECKS\n";
    for (auto c : eval_checks)
        m += detail::roff_escape(c) + "\n.br\n";
    m += ".SH GROUPS AND CHARACTERS\n" + detail::roff_block(AbelianGroup::grammar);
    m += ".SH FLAGS\n" + detail::roff_block(Flag::grammar);
    m += ".SH EXPRESSIONS\n" + detail::roff_block(expression_grammar);
    m += ".SH SPECIALIZATION\n" + detail::roff_block(specialization_format);
    m += ".SH CONFIGURATION\n" + detail::roff_block(sweep_config_format);
    m += ".SH EXIT STATUS\n0 success; 1 a check failed; 2 malformed input; 3 input outside an operation's domain; "
         "4 internal error.\n";
    return m;
}

// ---- entry point ------------------------------------------------------------

inline int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Exact equivariant bordism homology calculator", "eqhom"};
    app.require_subcommand(1);
    Options o;

    auto add_common = [&](CLI::App* sub, bool group_required = true) {
        auto* g = sub->add_option("--group", o.group, "ambient group, e.g. Z2xZ4");
        if (group_required)
            g->required();
        sub->add_option("--format", o.format, "text or json")->check(CLI::IsMember({"text", "json"}));
    };
    auto add_flag = [&](CLI::App* sub) {
        sub->add_option("--flag", o.flag, "comma-joined characters starting with the trivial one");
        sub->add_option("--truncate", o.truncate, "flag length / generator bound");
    };

    auto* theta_table = app.add_subcommand("theta-table", "augmentations and coaugmentation classes");
    auto* thetas = app.add_subcommand("thetas", "coaugmentation classes");
    for (auto* sub : {theta_table, thetas}) {
        add_common(sub);
        add_flag(sub);
        sub->add_option("--alpha", o.alpha, "restrict to one character");
        sub->add_option("--specialize", o.specialize, "Euler symbol assignments file");
    }

    auto* present = app.add_subcommand("present", "ring presentation");
    add_common(present);
    add_flag(present);
    present->add_option("--theory", o.theory, "MUP, mUP, MU or mU")->required();
    present->add_option("--shift", o.shift, "-2, 0 or 2");
    present->add_option("--specialize", o.specialize, "Euler symbol assignments file");

    auto* rewrite = app.add_subcommand("rewrite", "coordinatize or expand an expression");
    add_common(rewrite);
    add_flag(rewrite);
    rewrite->add_option("--theory", o.theory, "MUP, mUP, MU or mU")->required();
    rewrite->add_option("--shift", o.shift, "-2, 0 or 2");
    rewrite->add_option("--expr", o.expr, "expression")->required();
    rewrite->add_option("--specialize", o.specialize, "Euler symbol assignments file");

    auto* eval = app.add_subcommand("eval", "single verification comparison");
    add_common(eval);
    add_flag(eval);
    std::vector<std::string> check_names(std::begin(eval_checks), std::end(eval_checks));
    eval->add_option("--check", o.check, "comparison name")->required()->check(CLI::IsMember(check_names));
    eval->add_option("--theory", o.theory, "MUP, mUP, MU or mU");
    eval->add_option("--shift", o.shift, "-2, 0 or 2");
    eval->add_option("--alpha", o.alpha, "character");
    eval->add_option("--expr", o.expr, "expression");
    eval->add_option("--pair", o.pair, "i,j");

    auto* verify = app.add_subcommand("verify", "verification sweeps");
    verify->add_option("--config", o.config, "sweep config file");
    verify->add_option("--seed", o.seed, "random seed override");
    verify->add_option("--format", o.format, "text or json")->check(CLI::IsMember({"text", "json"}));

    auto* man = app.add_subcommand("manpage", "print the roff man page");
    man->group("");

    try {
        std::reverse(args.begin(), args.end());
        app.parse(args);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return bad_input;
    }

    try {
        if (*theta_table)
            return cmd_theta_table(o, out, true);
        if (*thetas)
            return cmd_theta_table(o, out, false);
        if (*present)
            return cmd_present(o, out);
        if (*rewrite)
            return cmd_rewrite(o, out);
        if (*eval)
            return cmd_eval(o, out);
        if (*verify)
            return cmd_verify(o, out);
        if (*man) {
            out << manpage();
            return ok;
        }
    } catch (const ParseError& e) {
        err << "eqhom: error: " << e.what() << "\n";
        return bad_input;
    } catch (const PreconditionError& e) {
        err << "eqhom: error: " << e.what() << "\n";
        return bad_domain;
    } catch (const std::exception& e) {
        err << "eqhom: internal error: " << e.what() << "\n";
        return internal;
    }
    return internal;
}

inline int run_cli(int argc, char** argv, std::ostream& out = std::cout, std::ostream& err = std::cerr)
{
    return run_cli(std::vector<std::string>(argv + 1, argv + argc), out, err);
}

}  // namespace eqhom::cli
