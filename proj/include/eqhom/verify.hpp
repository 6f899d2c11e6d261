#pragma once

// Brute-force oracles and property sweeps over small groups and flags.
//
// Every check is a pure function of the SweepConfig (seed included); the
// reported wall time is the only field that varies between runs. A failing
// check carries the first counterexample as an `eval` command line that
// reproduces the failing comparison.

#include "eqhom/expr.hpp"
#include "eqhom/render.hpp"

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <functional>
#include <future>
#include <random>
#include <string>
#include <vector>

namespace eqhom {

inline constexpr std::string_view sweep_config_format =
    "Flat key = value lines; \"#\" starts a comment. Keys and defaults:\n"
    "  groups        = 1, Z2, Z4, Z2xZ2\n"
    "  max_flag_len  = 5\n"
    "  max_dimension = 4\n"
    "  max_index     = 5\n"
    "  random_cases  = 200\n"
    "  rng_seed      = 1";

struct SweepConfig {
    std::vector<std::string> groups{"1", "Z2", "Z4", "Z2xZ2"};
    int max_flag_len = 5;
    int max_dimension = 4;
    int max_index = 5;
    int random_cases = 200;
    std::uint64_t rng_seed = 1;

    void validate() const
    {
        if (groups.empty())
            throw PreconditionError("sweep config needs at least one group");
        for (const auto& g : groups)
            AbelianGroup::parse(g);
        if (max_flag_len < 1 || max_dimension < 1 || max_index < 1 || random_cases < 1)
            throw PreconditionError("sweep bounds must all be >= 1");
    }

    // Flat "key = value" document; "#" starts a comment. groups is a
    // comma-separated list of group specs.
    static SweepConfig parse(std::string_view text)
    {
        SweepConfig cfg;
        std::size_t start = 0;
        int line_no = 0;
        while (start <= text.size()) {
            std::size_t end = text.find('\n', start);
            if (end == std::string_view::npos)
                end = text.size();
            std::string_view line = text.substr(start, end - start);
            start = end + 1;
            ++line_no;
            if (auto h = line.find('#'); h != std::string_view::npos)
                line = line.substr(0, h);
            line = detail::trim(line);
            if (line.empty())
                continue;
            auto eq = line.find('=');
            if (eq == std::string_view::npos)
                throw ParseError("config line " + std::to_string(line_no) + ": expected key = value");
            std::string key(detail::trim(line.substr(0, eq)));
            std::string_view value = detail::trim(line.substr(eq + 1));
            auto integer = [&]() {
                long long v = 0;
                if (!detail::parse_int(value, v))
                    throw ParseError("config line " + std::to_string(line_no) + ": '" + std::string(value)
                                     + "' is not an integer");
                return v;
            };
            if (key == "groups") {
                cfg.groups.clear();
                for (auto g : detail::split_top_level(value, ','))
                    cfg.groups.emplace_back(detail::trim(g));
            } else if (key == "max_flag_len")
                cfg.max_flag_len = static_cast<int>(integer());
            else if (key == "max_dimension")
                cfg.max_dimension = static_cast<int>(integer());
            else if (key == "max_index")
                cfg.max_index = static_cast<int>(integer());
            else if (key == "random_cases")
                cfg.random_cases = static_cast<int>(integer());
            else if (key == "rng_seed")
                cfg.rng_seed = static_cast<std::uint64_t>(integer());
            else
                throw ParseError("config line " + std::to_string(line_no) + ": unknown key '" + key + "'");
        }
        for (const auto& g : cfg.groups)
            AbelianGroup::parse(g);
        cfg.validate();
        return cfg;
    }
};

struct CheckResult {
    std::string check;
    bool passed = true;
    std::size_t cases = 0;
    std::size_t failures = 0;
    long long millis = 0;
    std::optional<json> counterexample;
};

struct Report {
    std::vector<CheckResult> checks;

    bool passed() const
    {
        return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
    }
};

namespace detail {

// Accumulates cases and keeps the first counterexample.
class CheckRecorder {
public:
    explicit CheckRecorder(std::string name) : start_(std::chrono::steady_clock::now()) { result_.check = std::move(name); }

    template <class MakePayload>
    void record(bool ok, MakePayload&& payload)
    {
        ++result_.cases;
        if (ok)
            return;
        ++result_.failures;
        result_.passed = false;
        if (!result_.counterexample)
            result_.counterexample = payload();
    }

    CheckResult finish()
    {
        result_.millis = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start_)
                             .count();
        return std::move(result_);
    }

private:
    CheckResult result_;
    std::chrono::steady_clock::time_point start_;
};

inline std::uint64_t salted(std::uint64_t seed, std::uint64_t salt) { return seed * 0x9E3779B97F4A7C15ULL ^ salt; }

// Visits every flag of the given length starting with eps.
inline void for_each_flag(const AbelianGroup& g, int length, const std::function<void(const Flag&)>& visit)
{
    std::vector<int> idx(length, 0);
    for (;;) {
        std::vector<Character> chars;
        chars.reserve(length);
        for (int i : idx)
            chars.push_back(g.from_index(i));
        visit(Flag(g, std::move(chars)));
        int k = length - 1;
        while (k >= 1 && idx[k] == g.order() - 1)
            idx[k--] = 0;
        if (k < 1)
            return;
        ++idx[k];
    }
}

inline std::vector<Character> distinct_steps(const Flag& flag)
{
    std::vector<Character> out = flag.chars();
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

}  // namespace detail

// ---- random generation --------------------------------------------------------

using Rng = std::mt19937_64;

inline int uniform(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

// A random coefficient from {+-1, +-e_gamma, e_gamma e_delta}.
inline CoeffPoly random_coeff(Rng& rng, const AbelianGroup& g)
{
    const int sign = uniform(rng, 0, 1) ? 1 : -1;
    if (g.order() == 1)
        return CoeffPoly::constant(g, sign);
    auto sym = [&]() { return CoeffPoly::symbol(EulerSymbol(g.from_index(uniform(rng, 1, g.order() - 1)))); };
    switch (uniform(rng, 0, 2)) {
    case 0: return CoeffPoly::constant(g, sign);
    case 1: return CoeffPoly::constant(g, sign) * sym();
    default: return sym() * sym();
    }
}

// A random flag of the given length; complete whenever length >= |A|.
inline Flag random_flag(Rng& rng, const AbelianGroup& g, int length)
{
    std::vector<int> rest;
    for (int i = 1; i < g.order(); ++i)
        rest.push_back(i);
    std::shuffle(rest.begin(), rest.end(), rng);
    std::vector<Character> chars{g.identity()};
    for (int i = 1; i < length; ++i) {
        int idx = i - 1 < static_cast<int>(rest.size()) ? rest[i - 1] : uniform(rng, 0, g.order() - 1);
        chars.push_back(g.from_index(idx));
    }
    std::shuffle(chars.begin() + 1, chars.end(), rng);
    return Flag(g, std::move(chars));
}

// Random dimension-homogeneous element of Sym_dim with 1..3 terms.
inline SymPoly random_sym(Rng& rng, const AbelianGroup& g, int shift, int dim, int max_index)
{
    SymPoly::Poly p;
    const int terms = uniform(rng, 1, 3);
    for (int t = 0; t < terms; ++t) {
        std::vector<int> idx(dim);
        for (auto& i : idx)
            i = uniform(rng, 0, max_index);
        std::sort(idx.begin(), idx.end());
        Exponents m;
        for (int i : idx) {
            if (!m.empty() && m.back().first == i)
                ++m.back().second;
            else
                m.emplace_back(i, 1);
        }
        p.add_term(m, random_coeff(rng, g));
    }
    return SymPoly(g, shift, std::move(p));
}

// Random denominator exponents of total dimension p over the characters the
// mode allows and the flag contains.
inline DenomExponents random_denom(Rng& rng, const Flag& flag, LocMode mode, int p)
{
    std::vector<Character> allowed = mode == LocMode::mUP ? std::vector<Character>{flag.group().identity()}
                                                           : detail::distinct_steps(flag);
    DenomExponents d;
    for (int k = 0; k < p; ++k)
        d[allowed[uniform(rng, 0, static_cast<int>(allowed.size()) - 1)]] += 1;
    return d;
}

// Random fraction of dimension degree num_dim - den_dim with a nonzero,
// dimension-homogeneous numerator.
inline LocFraction random_fraction(Rng& rng, const Flag& flag, LocMode mode, int shift, int num_dim, int den_dim,
                                   int max_index)
{
    const int top = std::min(max_index, flag.length());
    for (;;) {
        SymPoly num = random_sym(rng, flag.group(), shift, num_dim, top);
        if (!num.is_zero())
            return LocFraction(flag, mode, std::move(num), random_denom(rng, flag, mode, den_dim));
    }
}

// ---- single comparisons ------------------------------------------------------------
//
// Each check is a loop over compare_* calls; `eqhom eval --check <name>` runs
// the same function on one case, so a recorded counterexample replays with
// identical lhs/rhs text.

struct Comparison {
    std::string lhs;
    std::string rhs;
    bool equal = false;
};

// Closed formula against the per-factor restriction assembled via the pairing.
template <class Twist = DefaultTwist>
Comparison compare_coaug_duality(const Flag& flag, const Character& alpha)
{
    ProjClass closed = coaug<Twist>(flag, alpha);
    ProjClass dual = coaug_via_duality(flag, alpha);
    return {to_text(closed), to_text(dual), closed == dual};
}

// <y(V_i), beta_j> = delta_ij
inline Comparison compare_pairing(const Flag& flag, int i, int j)
{
    const AbelianGroup& g = flag.group();
    CoeffPoly v = pairing(flag, i, ProjClass::basis(g, j));
    CoeffPoly want = i == j ? CoeffPoly::one(g) : CoeffPoly::zero(g);
    return {to_text(v), to_text(want), v == want};
}

// expand(to_coords(x)) against x; in mUP also the normal form agrees.
inline Comparison compare_roundtrip(const LocFraction& x, CoordKind kind)
{
    Comparison out{"", to_text(x), false};
    try {
        CoordFraction y = kind == CoordKind::b ? to_b_generators(x) : to_c_generators(x);
        LocFraction z = expand_coords(y);
        out.lhs = to_text(y) + " -> " + to_text(z);
        bool ok = frac_eq(z, x) && dim_degree(z) == 0;
        if (ok && x.mode() == LocMode::mUP) {
            CoordFraction nf = mup_normal_form(x);
            ok = nf.is_polynomial() && nf.num() == y.num();
        }
        out.equal = ok;
    } catch (const std::exception& e) {
        out.lhs = std::string("error: ") + e.what();
    }
    return out;
}

// retract(vartheta_eps * x) against x for x in Sym_n.
inline Comparison compare_retract(const Flag& flag, const SymPoly& x)
{
    const int n = x.poly().max_total_degree();
    SymPoly back = retract(theta_mul(flag, flag.group().identity(), x), n);
    return {to_text(back), to_text(x), back == x};
}

// retract kills x in Sym_{n+1} when no monomial of x carries beta_0.
inline Comparison compare_retract_zero(const SymPoly& x)
{
    SymPoly r = retract(x, x.poly().max_total_degree() - 1);
    return {to_text(r), "0", r.is_zero()};
}

inline Comparison compare_collapse_theta(const Flag& flag, const Character& alpha)
{
    ProjClass th = specialize(coaug(flag, alpha), Specialization::vanishing(flag.group()));
    return {to_text(th), "beta[0]", th == ProjClass::basis(flag.group(), 0)};
}

inline Comparison compare_collapse_btheta(const Flag& flag, const Character& alpha)
{
    const Specialization zero = Specialization::vanishing(flag.group());
    CoordPoly bt = coord_theta(flag, alpha).map_coeffs([&](const CoeffPoly& c) { return specialize(c, zero); });
    return {coord_text(bt, CoordKind::b), "1", bt == CoordPoly::monomial({}, CoeffPoly::one(flag.group()))};
}

// A dimension-0 MU fraction in b-coordinates loses its denominator under e -> 0.
inline Comparison compare_collapse_rewrite(const LocFraction& x)
{
    SpecializedCoords s = specialize(to_b_generators(x), Specialization::vanishing(x.flag().group()));
    return {to_text(s), "denominator-free", s.is_polynomial()};
}

// The trivial group's MU / mU presentation, with and without e -> 0, is
// polynomial on generators of degree 2i and dimension 0.
inline Comparison compare_collapse_present(Theory t, int n)
{
    const AbelianGroup trivial = AbelianGroup::trivial();
    const Specialization zero = Specialization::vanishing(trivial);
    const Flag flag = Flag::standard(trivial, n);
    Presentation plain = build_presentation(t, flag, n, default_shift(t));
    bool ok = true;
    for (const Presentation& p : {plain, build_presentation(t, flag, n, default_shift(t), &zero)}) {
        ok = ok && p.inverted.empty() && static_cast<int>(p.generators.size()) == n;
        for (std::size_t i = 0; ok && i < p.generators.size(); ++i) {
            const auto& gen = p.generators[i];
            ok = gen.index == static_cast<int>(i) + 1 && gen.degree == 2 * gen.index && gen.dimension == 0;
        }
    }
    return {presentation_text(plain), "polynomial on generators of degree 2i", ok};
}

// vartheta_alpha * (a / vartheta_alpha) against a.
inline Comparison compare_periodicity(const Character& alpha, const LocFraction& a)
{
    LocFraction y = theta_div(alpha, a);
    LocFraction back = theta_mul(alpha, y);
    return {to_text(back), to_text(a), frac_eq(back, a) && dim_degree(y) + 1 == dim_degree(a)};
}

// vartheta_alpha * x = 0 only for x = 0.
inline Comparison compare_injective(const Flag& flag, const Character& alpha, const SymPoly& x)
{
    SymPoly tx = theta_mul(flag, alpha, x);
    return {to_text(tx), x.is_zero() ? "0" : "nonzero", x.is_zero() == tx.is_zero()};
}

// deg of the generator (a single b_i or c_i) from the shifted beta degrees
// and from the expanded fraction.
inline Comparison compare_degree(const CoordFraction& gen)
{
    if (gen.num().size() != 1 || gen.num().leading().first.size() != 1 || !gen.is_polynomial())
        throw PreconditionError("degree check takes a single generator b[i] or c[i]");
    const int i = gen.num().leading().first.front().first;
    const int d = shift_of(gen.kind());
    const int via_shift = SymPoly::beta_degree(i, d) - SymPoly::beta_degree(0, d);
    auto via_fraction = expand_coords(gen).internal_degree();
    return {std::to_string(via_shift) + "/" + (via_fraction ? std::to_string(*via_fraction) : "inhomogeneous"),
            std::to_string(2 * i) + "/" + std::to_string(2 * i),
            via_shift == 2 * i && via_fraction && *via_fraction == 2 * i};
}

// ---- checks ---------------------------------------------------------------------

namespace detail {

inline json payload(std::vector<std::string> argv, const Comparison& c)
{
    return {{"argv", std::move(argv)}, {"lhs", c.lhs}, {"rhs", c.rhs}};
}

inline std::vector<std::string> eval_argv(const char* check, const std::string& group, const Flag& flag)
{
    return {"eval", "--check", check, "--group", group, "--flag", flag.to_string()};
}

inline std::vector<std::string> operator+(std::vector<std::string> a, std::initializer_list<std::string> b)
{
    a.insert(a.end(), b.begin(), b.end());
    return a;
}

}  // namespace detail

// coaug against coaug_via_duality for every flag of length <= max_flag_len
// starting with eps and every character occurring in it (the complete flags
// are among them), plus the dual-basis pairing once per length.
template <class Twist = DefaultTwist>
CheckResult check_coaug_duality(const SweepConfig& cfg)
{
    using detail::operator+;
    detail::CheckRecorder rec("coaug_duality");
    for (const auto& gs : cfg.groups) {
        const AbelianGroup g = AbelianGroup::parse(gs);
        for (int len = 1; len <= cfg.max_flag_len; ++len) {
            const Flag standard = Flag::standard(g, len);
            for (int i = 0; i <= len; ++i)
                for (int j = 0; j <= len; ++j) {
                    Comparison c = compare_pairing(standard, i, j);
                    rec.record(c.equal, [&] {
                        return detail::payload(detail::eval_argv("pairing", gs, standard)
                                                   + std::initializer_list<std::string>{
                                                       "--pair", std::to_string(i) + "," + std::to_string(j)},
                                               c);
                    });
                }
            detail::for_each_flag(g, len, [&](const Flag& flag) {
                for (const auto& alpha : detail::distinct_steps(flag)) {
                    Comparison c = compare_coaug_duality<Twist>(flag, alpha);
                    rec.record(c.equal, [&] {
                        return detail::payload(detail::eval_argv("coaug-duality", gs, flag)
                                                   + std::initializer_list<std::string>{"--alpha", alpha.to_string()},
                                               c);
                    });
                }
            });
        }
    }
    return rec.finish();
}

// expand(to_coords(x)) == x for random dimension-0 fractions, through the
// b-route in MUP and the c-route in MUP and mUP.
inline CheckResult check_rewrite_roundtrip(const SweepConfig& cfg)
{
    using detail::operator+;
    struct Route {
        LocMode mode;
        CoordKind kind;
        const char* theory;
    };
    const Route routes[] = {
        {LocMode::MUP, CoordKind::b, "MU"}, {LocMode::MUP, CoordKind::c, "MUP"}, {LocMode::mUP, CoordKind::c, "mU"}};
    detail::CheckRecorder rec("rewrite_roundtrip");
    Rng rng(detail::salted(cfg.rng_seed, 0x5257));

    auto run = [&](const std::string& gs, const LocFraction& x, const Route& r) {
        Comparison c = compare_roundtrip(x, r.kind);
        rec.record(c.equal, [&] {
            return detail::payload(detail::eval_argv("roundtrip", gs, x.flag())
                                       + std::initializer_list<std::string>{"--theory", r.theory, "--shift",
                                                                            std::to_string(shift_of(r.kind)),
                                                                            "--expr", to_text(x)},
                                   c);
        });
    };

    for (const auto& gs : cfg.groups) {
        const AbelianGroup g = AbelianGroup::parse(gs);
        // x = 1, and beta_1 beta_2 / vartheta_alpha^2 for a non-trivial alpha
        const Flag fixed = Flag::standard(g, std::max(2, std::min(cfg.max_flag_len, g.order())));
        for (const auto& r : routes) {
            const int shift = shift_of(r.kind);
            run(gs, LocFraction(fixed, r.mode, SymPoly::one(g, shift)), r);
            if (r.mode == LocMode::MUP && g.order() > 1 && fixed.contains(g.from_index(1))) {
                SymPoly m = SymPoly::beta(g, shift, 1) * SymPoly::beta(g, shift, 2);
                run(gs, LocFraction(fixed, r.mode, m, {{g.from_index(1), 2}}), r);
            }
        }
        for (int k = 0; k < cfg.random_cases; ++k) {
            const Flag flag = random_flag(rng, g, uniform(rng, 1, cfg.max_flag_len));
            const int p = uniform(rng, 0, cfg.max_dimension);
            for (const auto& r : routes)
                run(gs, random_fraction(rng, flag, r.mode, shift_of(r.kind), p, p, cfg.max_index), r);
        }
    }
    return rec.finish();
}

// retract(vartheta_eps * x) == x on every basis monomial of Sym_n,
// n <= max_dimension, indices <= max_index; retract kills every monomial of
// Sym_{n+1} without a beta_0 factor.
inline CheckResult check_retraction(const SweepConfig& cfg)
{
    using detail::operator+;
    detail::CheckRecorder rec("retraction");
    for (const auto& gs : cfg.groups) {
        const AbelianGroup g = AbelianGroup::parse(gs);
        const Flag flag = Flag::standard(g, cfg.max_index);
        for (int n = 0; n <= cfg.max_dimension; ++n) {
            // weakly increasing index lists of length n over 0..max_index
            std::vector<int> idx(n, 0);
            for (;;) {
                Exponents m;
                for (int i : idx) {
                    if (!m.empty() && m.back().first == i)
                        ++m.back().second;
                    else
                        m.emplace_back(i, 1);
                }
                for (int shift : {-2, 2}) {
                    SymPoly x(g, shift, SymPoly::Poly::monomial(m, CoeffPoly::one(g)));
                    Comparison c = compare_retract(flag, x);
                    rec.record(c.equal, [&] {
                        return detail::payload(detail::eval_argv("retract", gs, flag)
                                                   + std::initializer_list<std::string>{
                                                       "--shift", std::to_string(shift), "--expr", to_text(x)},
                                               c);
                    });
                }
                if (n >= 1 && idx.front() >= 1) {
                    SymPoly x(g, -2, SymPoly::Poly::monomial(m, CoeffPoly::one(g)));
                    Comparison c = compare_retract_zero(x);
                    rec.record(c.equal, [&] {
                        return detail::payload(detail::eval_argv("retract-zero", gs, flag)
                                                   + std::initializer_list<std::string>{"--expr", to_text(x)},
                                               c);
                    });
                }
                int k = n - 1;
                while (k >= 0 && idx[k] == cfg.max_index)
                    --k;
                if (k < 0)
                    break;
                ++idx[k];
                for (int j = k + 1; j < n; ++j)
                    idx[j] = idx[k];
            }
        }
    }
    return rec.finish();
}

// Under e -> 0 every vartheta_alpha is beta_0, every b(vartheta_alpha) is 1,
// every b-coordinatized fraction is denominator-free, and the trivial group's
// MU and mU presentations are polynomial on generators of degree 2i.
inline CheckResult check_specialization_collapse(const SweepConfig& cfg)
{
    using detail::operator+;
    detail::CheckRecorder rec("specialization_collapse");
    Rng rng(detail::salted(cfg.rng_seed, 0x5350));
    for (const auto& gs : cfg.groups) {
        const AbelianGroup g = AbelianGroup::parse(gs);
        const Flag flag = Flag::standard(g, std::max(cfg.max_flag_len, g.order()));
        for (const auto& alpha : all_characters(g)) {
            Comparison c = compare_collapse_theta(flag, alpha);
            rec.record(c.equal, [&] {
                return detail::payload(detail::eval_argv("collapse-theta", gs, flag)
                                           + std::initializer_list<std::string>{"--alpha", alpha.to_string()},
                                       c);
            });
            Comparison b = compare_collapse_btheta(flag, alpha);
            rec.record(b.equal, [&] {
                return detail::payload(detail::eval_argv("collapse-btheta", gs, flag)
                                           + std::initializer_list<std::string>{"--alpha", alpha.to_string()},
                                       b);
            });
        }
        for (int k = 0; k < std::max(1, cfg.random_cases / 4); ++k) {
            const int p = uniform(rng, 0, cfg.max_dimension);
            LocFraction x = random_fraction(rng, flag, LocMode::MUP, -2, p, p, cfg.max_index);
            Comparison c = compare_collapse_rewrite(x);
            rec.record(c.equal, [&] {
                return detail::payload(detail::eval_argv("collapse-rewrite", gs, flag)
                                           + std::initializer_list<std::string>{"--expr", to_text(x)},
                                       c);
            });
        }
    }
    const int n = cfg.max_index;
    for (Theory t : {Theory::MU, Theory::mU}) {
        Comparison c = compare_collapse_present(t, n);
        rec.record(c.equal, [&] {
            return detail::payload({"eval", "--check", "collapse-present", "--theory", to_string(t), "--group", "1",
                                    "--truncate", std::to_string(n)},
                                   c);
        });
    }
    return rec.finish();
}

// a == vartheta_alpha * (a / vartheta_alpha), with the quotient one dimension
// degree lower; vartheta_alpha is a non-zero-divisor on Sym.
inline CheckResult check_periodicity(const SweepConfig& cfg)
{
    using detail::operator+;
    detail::CheckRecorder rec("periodicity");
    Rng rng(detail::salted(cfg.rng_seed, 0x5045));
    for (const auto& gs : cfg.groups) {
        const AbelianGroup g = AbelianGroup::parse(gs);
        for (int k = 0; k < cfg.random_cases; ++k) {
            const Flag flag = random_flag(rng, g, uniform(rng, 1, cfg.max_flag_len));
            const int shift = k % 2 ? 2 : -2;
            const auto steps = detail::distinct_steps(flag);
            const Character alpha = steps[uniform(rng, 0, static_cast<int>(steps.size()) - 1)];
            const int q = uniform(rng, 0, cfg.max_dimension);
            const int p = uniform(rng, 0, cfg.max_dimension);
            LocFraction a = random_fraction(rng, flag, LocMode::MUP, shift, q, p, cfg.max_index);
            const auto tail = std::initializer_list<std::string>{"--theory", "MUP", "--shift", std::to_string(shift),
                                                                 "--alpha", alpha.to_string()};
            Comparison c = compare_periodicity(alpha, a);
            rec.record(c.equal, [&] {
                return detail::payload(detail::eval_argv("periodicity", gs, flag) + tail
                                           + std::initializer_list<std::string>{"--expr", to_text(a)},
                                       c);
            });
            SymPoly x = random_sym(rng, g, shift, q, std::min(cfg.max_index, flag.length()));
            Comparison inj = compare_injective(flag, alpha, x);
            rec.record(inj.equal, [&] {
                return detail::payload(detail::eval_argv("injective", gs, flag) + tail
                                           + std::initializer_list<std::string>{"--expr", to_text(x)},
                                       inj);
            });
        }
        const Flag flag = Flag::standard(g, cfg.max_flag_len);
        Comparison z = compare_injective(flag, g.identity(), SymPoly::zero(g, -2));
        rec.record(z.equal, [&] {
            return detail::payload(detail::eval_argv("injective", gs, flag)
                                       + std::initializer_list<std::string>{"--alpha", g.identity().to_string(),
                                                                            "--expr", "0"},
                                   z);
        });
    }
    return rec.finish();
}

// deg b_i through Sym(R_E[-2]) and deg c_i through Sym(R_E[2]) both equal 2i.
inline CheckResult check_degree_crosscheck(const SweepConfig& cfg)
{
    using detail::operator+;
    detail::CheckRecorder rec("degree_crosscheck");
    const int top = std::max(8, cfg.max_index);
    for (const auto& gs : cfg.groups) {
        const AbelianGroup g = AbelianGroup::parse(gs);
        const Flag flag = Flag::standard(g, top);
        for (int i = 1; i <= top; ++i)
            for (CoordKind kind : {CoordKind::b, CoordKind::c}) {
                CoordFraction gen(flag, LocMode::MUP, kind, CoordPoly::monomial(single_var(i), CoeffPoly::one(g)));
                Comparison c = compare_degree(gen);
                rec.record(c.equal, [&] {
                    return detail::payload(detail::eval_argv("degree", gs, flag)
                                               + std::initializer_list<std::string>{"--expr", to_text(gen)},
                                           c);
                });
            }
    }
    return rec.finish();
}

// Runs every check (concurrently; each check owns its RNG) and sorts the
// results by name.
inline Report run_suite(const SweepConfig& cfg)
{
    cfg.validate();
    using Fn = CheckResult (*)(const SweepConfig&);
    const Fn checks[] = {&check_coaug_duality<DefaultTwist>, &check_rewrite_roundtrip, &check_retraction,
                         &check_specialization_collapse,      &check_periodicity,       &check_degree_crosscheck};
    std::vector<std::future<CheckResult>> running;
    for (Fn f : checks)
        running.push_back(std::async(std::launch::async, f, std::cref(cfg)));
    Report r;
    for (auto& f : running)
        r.checks.push_back(f.get());
    std::sort(r.checks.begin(), r.checks.end(), [](const auto& a, const auto& b) { return a.check < b.check; });
    return r;
}

inline json report_json(const Report& r)
{
    json checks = json::array();
    for (const auto& c : r.checks) {
        json j = {{"check", c.check},
                  {"status", c.passed ? "pass" : "fail"},
                  {"cases", c.cases},
                  {"failures", c.failures},
                  {"millis", c.millis}};
        if (c.counterexample)
            j["counterexample"] = *c.counterexample;
        checks.push_back(j);
    }
    return {{"status", r.passed() ? "pass" : "fail"}, {"checks", checks}};
}

inline std::string shell_quote(const std::string& s)
{
    if (!s.empty() && s.find_first_of(" ()[]*^/+,;'\"$&|<>") == std::string::npos)
        return s;
    std::string out = "'";
    for (char c : s)
        out += c == '\'' ? std::string("'\\''") : std::string(1, c);
    return out + "'";
}

inline std::string report_text(const Report& r)
{
    std::string out;
    for (const auto& c : r.checks) {
        out += std::string(c.passed ? "PASS" : "FAIL") + "  " + c.check + "  cases=" + std::to_string(c.cases)
               + "  failures=" + std::to_string(c.failures) + "  millis=" + std::to_string(c.millis) + "\n";
        if (c.counterexample) {
            std::string cmd = "eqhom";
            for (const auto& a : (*c.counterexample)["argv"])
                cmd += " " + shell_quote(a.get<std::string>());
            out += "  rerun: " + cmd + "\n";
            out += "  lhs: " + (*c.counterexample)["lhs"].get<std::string>() + "\n";
            out += "  rhs: " + (*c.counterexample)["rhs"].get<std::string>() + "\n";
        }
    }
    out += std::string("overall: ") + (r.passed() ? "pass" : "fail") + "\n";
    return out;
}

}  // namespace eqhom
