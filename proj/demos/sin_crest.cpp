// Tabulates sin, evaluates value and derivatives at one point, then locates
// the crest near pi/2 from the derivative output.

#include "neville/neville.hpp"

#include <cstdio>
#include <numbers>

int main() {
    using namespace neville;

    const TabulatedFunction table =
        sample_function([](double x) { return std::sin(x); }, 0.0, 2.0 * std::numbers::pi,
                        21, "sin");

    const double x = 1.0;
    const DerivativeStack s = interpolate_at(table, x, 5, 2);
    std::printf("at x = %g: value %.12f, slope %.12f, curvature %.12f\n", x, s.values[0],
                s.values[1], s.values[2]);

    const ExtremumResult crest =
        find_extremum(table, 4, 1.4, SolverSettings::defaults_for(table));
    std::printf("crest near pi/2: x = %.12f (%s), value = %.12f\n", crest.x,
                to_string(crest.kind), crest.value);

    const RootResult root = newton_root(table, 5, 0.0, 3.0, SolverSettings::defaults_for(table));
    std::printf("zero crossing near pi: x = %.12f after %d iterations\n", root.x,
                root.iterations);
    return 0;
}
