// Walks through the library on C4 with the flag (0),(1),(2),(3): theta
// classes, a change of generators, and the collapse under e -> 0.

#include "eqhom/coordinates.hpp"
#include "eqhom/expr.hpp"
#include "eqhom/render.hpp"

#include <iostream>

using namespace eqhom;

int main()
{
    AbelianGroup g = AbelianGroup::parse("Z4");
    Flag flag = Flag::parse(g, "(0),(1),(2),(3)");

    std::cout << "theta classes over " << g.to_string() << ", flag " << flag.to_string() << "\n";
    for (const Character& alpha : all_characters(g)) {
        ProjClass t = coaug(flag, alpha);
        bool agrees = t == coaug_via_duality(flag, alpha);
        std::cout << "  theta[" << alpha.to_string() << "] = " << to_text(t) << (agrees ? "" : "  (duality MISMATCH)")
                  << "\n";
    }

    const char* input = "beta[0]*beta[3]/(theta[(1)]*theta[(2)])";
    LocFraction x = to_loc_fraction(parse_fraction(g, input), flag, LocMode::MUP, -2);
    CoordFraction b = to_b_generators(x);
    std::cout << "\n" << input << "\n  = " << to_text(b) << "\n";
    std::cout << "  back in beta: " << to_text(frac_reduce(expand_b(b))) << "\n";

    Specialization zero = Specialization::vanishing(g);
    std::cout << "  with every e = 0: " << to_text(specialize(b, zero)) << "\n";
    return 0;
}
