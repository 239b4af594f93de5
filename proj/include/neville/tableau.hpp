#ifndef NEVILLE_TABLEAU_HPP
#define NEVILLE_TABLEAU_HPP

#include "neville/errors.hpp"
#include "neville/node_set.hpp"

#include <algorithm>
#include <cmath>
#include <span>
#include <vector>

namespace neville {

namespace detail {

// Extended Neville sweep.
//
// Let P[i,j] be the polynomial through nodes i..j, with
//
//   P[i,i](x) = y_i
//   P[i,j](x) = ((x_j - x) P[i,j-1](x) + (x - x_i) P[i+1,j](x)) / (x_j - x_i)
//
// Differentiating the combination step n times (product rule; the weights
// are linear in x) gives
//
//   P^n[i,j] = ((x_j - x) P^n[i,j-1] + (x - x_i) P^n[i+1,j]
//               + n (P^(n-1)[i+1,j] - P^(n-1)[i,j-1])) / (x_j - x_i)
//
// with P^n[i,i] = 0 for n >= 1. One in-place sweep over the antidiagonals
// evaluates value and derivatives together: row i of `tab` carries the
// derivative vector of the current cell in column i. Within a cell, orders
// are updated from highest to lowest so the order-n line still reads the
// children's order-(n-1) values. A cell of m+1 points has zero derivatives
// above order m, so rows stay zero there by construction and outputs above
// the degree are exact zeros.
//
// Preconditions (callers guarantee): nodes non-empty with distinct finite
// abscissas, x finite, out.size() == min(max_order, degree) + 1.
inline void derivative_sweep(std::span<const Node> nodes, double x, std::span<double> out) {
    const std::size_t count = nodes.size();
    const int top = static_cast<int>(out.size()) - 1;
    const std::size_t cols = out.size();

    std::vector<double> tab(count * cols, 0.0);
    for (std::size_t i = 0; i < count; ++i)
        tab[i * cols] = nodes[i].y;

    for (std::size_t m = 1; m < count; ++m) {
        for (std::size_t i = 0; i + m < count; ++i) {
            const double xi = nodes[i].x;
            const double xj = nodes[i + m].x;
            const double den = xj - xi;
            const double wl = xj - x;
            const double wr = x - xi;
            double* cell = &tab[i * cols];
            const double* right = &tab[(i + 1) * cols];
            const int cap = std::min<int>(top, static_cast<int>(m));
            for (int n = cap; n >= 1; --n)
                cell[n] = (wl * cell[n] + wr * right[n] + n * (right[n - 1] - cell[n - 1])) / den;
            cell[0] = (wl * cell[0] + wr * right[0]) / den;
        }
    }
    std::copy_n(tab.begin(), cols, out.begin());
}

} // namespace detail

/// Evaluates the interpolant of `nodes` and its derivatives at `x`.
///
/// values[n] holds the n-th derivative for n = 0..max_order; orders above
/// the node-set degree are exactly zero. values[0] is bit-identical to
/// evaluate() for every max_order (one shared recurrence path). Evaluation
/// outside the node hull is permitted (plain extrapolation).
inline DerivativeStack evaluate_derivatives(const NodeSet& nodes, double x, int max_order) {
    if (!std::isfinite(x))
        throw NonFiniteInput{"evaluation abscissa"};
    if (max_order < 0)
        throw InvalidArgument{"max_order must be >= 0"};

    DerivativeStack stack;
    stack.at = x;
    stack.values.assign(static_cast<std::size_t>(max_order) + 1, 0.0);
    const int computed = std::min(max_order, nodes.degree());
    detail::derivative_sweep(std::span<const Node>(nodes.nodes()), x,
                             std::span<double>(stack.values.data(),
                                               static_cast<std::size_t>(computed) + 1));
    return stack;
}

/// Value of the interpolating polynomial at `x` (order-0 result of the
/// same recurrence as evaluate_derivatives).
inline double evaluate(const NodeSet& nodes, double x) {
    return evaluate_derivatives(nodes, x, 0).values.front();
}

} // namespace neville

#endif // NEVILLE_TABLEAU_HPP
