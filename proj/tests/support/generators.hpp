#ifndef NEVILLE_TESTS_GENERATORS_HPP
#define NEVILLE_TESTS_GENERATORS_HPP

// Deterministic instance generators shared by the property tests and the
// acceptance suite, driven by the library's counter-based sampler.

#include "neville/node_set.hpp"
#include "neville/sampling.hpp"

#include <cstdint>
#include <vector>

namespace neville::testing {

/// Sequential facade over the counter-based generator.
class Draw {
public:
    explicit Draw(std::uint64_t seed) : seed_(seed) {}

    double unit() { return neville::uniform01(seed_, index_++); }
    double in(double a, double b) { return a + unit() * (b - a); }
    int integer(int lo, int hi) { // inclusive bounds
        return lo + static_cast<int>(unit() * (hi - lo + 1));
    }

private:
    std::uint64_t seed_;
    std::uint64_t index_ = 0;
};

/// Random node set of the given degree: abscissas start in [-1, -0.5] with
/// gaps in [0.05, 0.35], ordinates in [-2, 2].
inline std::vector<Node> random_nodes(Draw& draw, int degree) {
    std::vector<Node> nodes;
    double x = -1.0 + draw.unit() * 0.5;
    for (int k = 0; k <= degree; ++k) {
        nodes.push_back({x, draw.in(-2.0, 2.0)});
        x += 0.05 + draw.unit() * 0.3;
    }
    return nodes;
}

/// Polynomial with coefficients in [-2, 2]; evaluates the n-th derivative.
struct RandomPolynomial {
    std::vector<double> coeff;

    static RandomPolynomial make(Draw& draw, int degree) {
        RandomPolynomial p;
        for (int k = 0; k <= degree; ++k)
            p.coeff.push_back(draw.in(-2.0, 2.0));
        return p;
    }

    double derivative(int order, double x) const {
        const int degree = static_cast<int>(coeff.size()) - 1;
        if (order > degree)
            return 0.0;
        double acc = 0.0;
        for (int k = degree; k >= order; --k) {
            double fall = 1.0;
            for (int j = k; j > k - order; --j)
                fall *= j;
            acc = acc * x + coeff[static_cast<std::size_t>(k)] * fall;
        }
        return acc;
    }
};

} // namespace neville::testing

#endif // NEVILLE_TESTS_GENERATORS_HPP
