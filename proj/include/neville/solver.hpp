#ifndef NEVILLE_SOLVER_HPP
#define NEVILLE_SOLVER_HPP

#include "neville/errors.hpp"
#include "neville/table.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace neville {

struct SolverSettings {
    double tol_residual = 1e-10; ///< convergence on |P(x) - target| (or |P'| for extrema)
    double tol_step = 1e-12;     ///< convergence on |dx|
    int max_iter = 50;
    double derivative_floor = 1e-14; ///< minimum usable |P'| (|P''| for extrema)

    /// Defaults with the derivative floor scaled to the table's ordinates.
    static SolverSettings defaults_for(const TabulatedFunction& table) {
        SolverSettings s;
        s.derivative_floor = 1e-14 * std::max(1.0, table.ordinate_scale());
        return s;
    }

    void validate() const {
        if (!(tol_residual > 0.0) || !(tol_step > 0.0) || !(derivative_floor > 0.0))
            throw InvalidArgument{"solver tolerances must be positive"};
        if (max_iter < 1)
            throw InvalidArgument{"max_iter must be >= 1"};
    }
};

struct RootResult {
    double x{};
    double residual{}; ///< |P(x) - target| at the returned abscissa
    int iterations{};
    bool converged{};
};

enum class ExtremumKind { minimum, maximum, degenerate };

inline const char* to_string(ExtremumKind k) noexcept {
    switch (k) {
        case ExtremumKind::minimum: return "minimum";
        case ExtremumKind::maximum: return "maximum";
        default: return "degenerate";
    }
}

struct ExtremumResult {
    double x{};
    double value{}; ///< P(x) at the returned abscissa
    ExtremumKind kind{};
    int iterations{};
    bool converged{};
};

namespace detail {

inline void check_start(const TabulatedFunction& table, double x0) {
    if (!std::isfinite(x0))
        throw NonFiniteInput{"starting abscissa"};
    if (x0 < table.front_x() || x0 > table.back_x())
        throw OutOfDomain{x0, table.front_x(), table.back_x()};
}

} // namespace detail

/// Newton-Raphson on the local interpolant: x <- x - (P(x) - target)/P'(x),
/// with the window re-selected at every iterate and iterates clamped to the
/// table range. Converges when |P(x) - target| <= tol_residual; a vanishing
/// step that leaves the residual above tolerance reports converged = false.
/// When max_iter is exhausted, the best iterate seen (smallest residual) is
/// returned: window re-selection makes the solved function only piecewise
/// polynomial, and Newton can cycle across a window boundary.
inline RootResult newton_root(const TabulatedFunction& table, int degree, double target,
                              double x0, const SolverSettings& settings = {}) {
    settings.validate();
    detail::check_start(table, x0);
    if (!std::isfinite(target))
        throw NonFiniteInput{"target ordinate"};

    const double lo = table.front_x();
    const double hi = table.back_x();

    double x = x0;
    double best_x = x0;
    double best_r = std::numeric_limits<double>::infinity();
    int iterations = 0;

    for (;;) {
        const DerivativeStack s = interpolate_at(table, x, degree, 1);
        const double residual = std::abs(s.values[0] - target);
        if (residual < best_r) {
            best_r = residual;
            best_x = x;
        }
        if (residual <= settings.tol_residual)
            return {x, residual, iterations, true};
        if (iterations >= settings.max_iter)
            return {best_x, best_r, iterations, false};
        if (std::abs(s.values[1]) < settings.derivative_floor)
            throw DerivativeVanished{x, std::abs(s.values[1]), settings.derivative_floor};

        const double next = std::clamp(x - (s.values[0] - target) / s.values[1], lo, hi);
        ++iterations;
        if (std::abs(next - x) <= settings.tol_step) {
            const double r = std::abs(interpolate_at(table, next, degree, 0).values[0] - target);
            if (r <= settings.tol_residual)
                return {next, r, iterations, true};
            if (r < best_r)
                return {next, r, iterations, false};
            return {best_x, best_r, iterations, false};
        }
        x = next;
    }
}

/// Newton-Raphson on P' using P'': locates a stationary point of the local
/// interpolant and classifies it by the sign of P'' (|P''| at or below the
/// derivative floor reports `degenerate`). Same stepping rules as
/// newton_root; convergence criterion is |P'(x)| <= tol_residual.
inline ExtremumResult find_extremum(const TabulatedFunction& table, int degree, double x0,
                                    const SolverSettings& settings = {}) {
    settings.validate();
    detail::check_start(table, x0);
    if (degree < 2)
        throw InvalidArgument{"extremum search needs degree >= 2"};

    const double lo = table.front_x();
    const double hi = table.back_x();

    const auto classify = [&](double x, int iterations, bool converged) {
        const DerivativeStack s = interpolate_at(table, x, degree, 2);
        ExtremumKind kind = ExtremumKind::degenerate;
        if (std::abs(s.values[2]) > settings.derivative_floor)
            kind = s.values[2] > 0.0 ? ExtremumKind::minimum : ExtremumKind::maximum;
        return ExtremumResult{x, s.values[0], kind, iterations, converged};
    };

    double x = x0;
    double best_x = x0;
    double best_slope = std::numeric_limits<double>::infinity();
    int iterations = 0;

    for (;;) {
        const DerivativeStack s = interpolate_at(table, x, degree, 2);
        const double slope = std::abs(s.values[1]);
        if (slope < best_slope) {
            best_slope = slope;
            best_x = x;
        }
        if (slope <= settings.tol_residual)
            return classify(x, iterations, true);
        if (iterations >= settings.max_iter)
            return classify(best_x, iterations, false);
        if (std::abs(s.values[2]) < settings.derivative_floor)
            throw DerivativeVanished{x, std::abs(s.values[2]), settings.derivative_floor};

        const double next = std::clamp(x - s.values[1] / s.values[2], lo, hi);
        ++iterations;
        if (std::abs(next - x) <= settings.tol_step) {
            const double r = std::abs(interpolate_at(table, next, degree, 1).values[1]);
            if (r <= settings.tol_residual)
                return classify(next, iterations, true);
            return classify(r < best_slope ? next : best_x, iterations, false);
        }
        x = next;
    }
}

} // namespace neville

#endif // NEVILLE_SOLVER_HPP
