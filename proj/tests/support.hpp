#pragma once

// Oracles and generators shared by the unit tests. The oracles work on raw
// residue vectors and exponent maps and never call the arithmetic they check.

#include "eqhom/cli.hpp"

#include <map>
#include <random>
#include <sstream>
#include <string>
#include <vector>

namespace oracle {

using Residues = std::vector<int>;

inline Residues add(const Residues& a, const Residues& b, const std::vector<int>& n)
{
    Residues r(a.size());
    for (std::size_t k = 0; k < a.size(); ++k)
        r[k] = (a[k] + b[k]) % n[k];
    return r;
}

inline Residues neg(const Residues& a, const std::vector<int>& n)
{
    Residues r(a.size());
    for (std::size_t k = 0; k < a.size(); ++k)
        r[k] = (n[k] - a[k]) % n[k];
    return r;
}

inline bool trivial(const Residues& a)
{
    for (int x : a)
        if (x)
            return false;
    return true;
}

// Monomial in Euler symbols keyed by residue vector; nullopt means 0.
using Monomial = std::map<Residues, int>;

// e(alpha^{-1} (x) (gamma_1 + ... + gamma_i)) from residues alone.
inline std::optional<Monomial> twisted_euler(const std::vector<Residues>& flag, const Residues& alpha, int i,
                                             const std::vector<int>& n)
{
    Monomial m;
    for (int j = 0; j < i; ++j) {
        Residues t = add(neg(alpha, n), flag[j], n);
        if (trivial(t))
            return std::nullopt;
        ++m[t];
    }
    return m;
}

}  // namespace oracle

namespace support {

using namespace eqhom;

inline const std::vector<std::string>& small_groups()
{
    static const std::vector<std::string> g{"1",     "Z2",    "Z3",       "Z4",    "Z5",    "Z6",
                                            "Z7",    "Z8",    "Z2xZ2",    "Z2xZ3", "Z3xZ2", "Z2xZ4",
                                            "Z4xZ2", "Z3xZ3", "Z2xZ2xZ2", "Z4xZ4", "Z2xZ8", "Z2xZ2xZ4"};
    return g;
}

inline CoeffPoly from_monomial(const AbelianGroup& g, const std::optional<oracle::Monomial>& m)
{
    if (!m)
        return CoeffPoly::zero(g);
    CoeffPoly out = CoeffPoly::one(g);
    for (const auto& [r, k] : *m)
        out = out * CoeffPoly::symbol(EulerSymbol(g.character(r)), k);
    return out;
}

// Random CoeffPoly with up to `terms` terms, small integer coefficients and
// total degree <= 3.
inline CoeffPoly random_coeff_poly(std::mt19937_64& rng, const AbelianGroup& g, int terms = 3)
{
    std::uniform_int_distribution<int> coeff(-3, 3);
    std::uniform_int_distribution<int> count(0, terms);
    std::uniform_int_distribution<int> var(1, std::max(1, g.order() - 1));
    std::uniform_int_distribution<int> deg(0, 3);
    CoeffPoly out = CoeffPoly::zero(g);
    for (int t = count(rng); t > 0; --t) {
        CoeffPoly m = CoeffPoly::constant(g, coeff(rng));
        if (g.order() > 1)
            for (int d = deg(rng); d > 0; --d)
                m = m * CoeffPoly::symbol(EulerSymbol(g.from_index(var(rng))));
        out = out + m;
    }
    return out;
}

struct CliRun {
    int status;
    std::string out;
    std::string err;
};

inline CliRun run(std::vector<std::string> args)
{
    std::ostringstream out, err;
    int st = cli::run_cli(std::move(args), out, err);
    return {st, out.str(), err.str()};
}

}  // namespace support
