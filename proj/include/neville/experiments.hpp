#ifndef NEVILLE_EXPERIMENTS_HPP
#define NEVILLE_EXPERIMENTS_HPP

#include "neville/errors.hpp"
#include "neville/sampling.hpp"
#include "neville/stats.hpp"
#include "neville/table.hpp"
#include "neville/tableau.hpp"

#include <chrono>
#include <cmath>
#include <cstdint>
#include <numbers>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace neville {

/// Parameters of one accuracy experiment. Results are bitwise deterministic
/// given (seed, config): sampling is counter-based and accumulation runs in
/// index order.
struct ExperimentConfig {
    std::uint64_t seed = 1;
    std::size_t sample_count = 100000;
    std::size_t table_points = 11;
    std::vector<int> degrees{3};
    int max_order = 3;

    /// Defaults of the cubic experiment: 11-point table on [-1, 1],
    /// local degree 3, derivative orders 0..3.
    static ExperimentConfig polynomial_defaults() { return {}; }

    /// Defaults of the sin experiment: 41-point table on [0, 2*pi],
    /// degrees 2..5, derivative orders up to 5.
    static ExperimentConfig sin_defaults() {
        ExperimentConfig cfg;
        cfg.table_points = 41;
        cfg.degrees = {2, 3, 4, 5};
        cfg.max_order = 5;
        return cfg;
    }

    void validate() const {
        if (sample_count < 1)
            throw InvalidArgument{"sample_count must be >= 1"};
        if (table_points < 2)
            throw InvalidArgument{"table_points must be >= 2"};
        if (degrees.empty())
            throw InvalidArgument{"at least one degree is required"};
        for (int d : degrees)
            if (d < 1 || static_cast<std::size_t>(d) >= table_points)
                throw InvalidArgument{"degree " + std::to_string(d) +
                                      " must be in [1, table_points - 1]"};
        if (max_order < 0)
            throw InvalidArgument{"max_order must be >= 0"};
    }
};

/// Value and derivatives at one abscissa next to their analytic values.
struct SpotCheck {
    double at{};
    std::vector<double> original;
    std::vector<double> calculated;
};

struct ExperimentReport {
    std::string experiment;
    ExperimentConfig config;
    double domain_lo{};
    double domain_hi{};
    /// grid[k][n]: statistics of (interpolant minus analytic) for
    /// config.degrees[k] and derivative order n, n = 0..min(degree, max_order).
    std::vector<std::vector<StatsSummary>> grid;
    std::optional<SpotCheck> spot_check;
    double wall_seconds{};

    const StatsSummary& cell(int degree, int order) const {
        for (std::size_t k = 0; k < config.degrees.size(); ++k)
            if (config.degrees[k] == degree)
                return grid[k].at(static_cast<std::size_t>(order));
        throw InvalidArgument{"degree " + std::to_string(degree) + " not in report"};
    }
};

namespace detail {

// f(x) = 1 + x + x^2 + x^3 and its derivatives.
inline double cubic_derivative(int order, double x) noexcept {
    switch (order) {
        case 0: return 1.0 + x * (1.0 + x * (1.0 + x));
        case 1: return 1.0 + x * (2.0 + 3.0 * x);
        case 2: return 2.0 + 6.0 * x;
        case 3: return 6.0;
        default: return 0.0;
    }
}

inline double sin_derivative(int order, double x) noexcept {
    switch (order & 3) {
        case 0: return std::sin(x);
        case 1: return std::cos(x);
        case 2: return -std::sin(x);
        default: return -std::cos(x);
    }
}

// Shared measurement loop: for every requested degree, interpolate at
// sample_count uniform abscissas in [lo, hi) and accumulate the differences
// against the analytic derivatives, order by order.
template <class AnalyticDerivative>
std::vector<std::vector<StatsSummary>> measure_grid(const TabulatedFunction& table,
                                                    const ExperimentConfig& cfg, double lo,
                                                    double hi,
                                                    AnalyticDerivative&& analytic) {
    std::vector<std::vector<StatsSummary>> grid;
    grid.reserve(cfg.degrees.size());
    for (int degree : cfg.degrees) {
        const int orders = std::min(degree, cfg.max_order);
        std::vector<StatsAccumulator> acc(static_cast<std::size_t>(orders) + 1);
        for (std::size_t i = 0; i < cfg.sample_count; ++i) {
            const double x = uniform_sample(cfg.seed, i, lo, hi);
            const DerivativeStack s = interpolate_at(table, x, degree, orders);
            for (int n = 0; n <= orders; ++n)
                acc[static_cast<std::size_t>(n)].add(s.values[static_cast<std::size_t>(n)] -
                                                     analytic(n, x));
        }
        std::vector<StatsSummary>& row = grid.emplace_back();
        row.reserve(acc.size());
        for (const StatsAccumulator& a : acc)
            row.push_back(a.summary());
    }
    return grid;
}

} // namespace detail

/// Evaluates the full 11-point cubic table at x = 0 for orders 0..3 and
/// pairs the results with the analytic values (1, 1, 2, 6).
inline SpotCheck cubic_spot_check() {
    const TabulatedFunction table =
        sample_function([](double x) { return detail::cubic_derivative(0, x); }, -1.0, 1.0, 11,
                        "cubic");
    const NodeSet nodes{table.samples()};
    const DerivativeStack s = evaluate_derivatives(nodes, 0.0, 3);

    SpotCheck check;
    check.at = 0.0;
    for (int n = 0; n <= 3; ++n) {
        check.original.push_back(detail::cubic_derivative(n, 0.0));
        check.calculated.push_back(s.values[static_cast<std::size_t>(n)]);
    }
    return check;
}

/// Cubic accuracy experiment: tabulates f(x) = 1 + x + x^2 + x^3 at
/// `table_points` equidistant abscissas on [-1, 1], spot-checks value and
/// derivatives at x = 0 against the analytic values, and measures
/// difference statistics (interpolant minus analytic) per derivative order
/// over `sample_count` uniform abscissas in [-1, 1).
inline ExperimentReport run_polynomial_experiment(
    const ExperimentConfig& config = ExperimentConfig::polynomial_defaults()) {
    config.validate();
    const auto t0 = std::chrono::steady_clock::now();

    const double lo = -1.0;
    const double hi = 1.0;
    const TabulatedFunction table =
        sample_function([](double x) { return detail::cubic_derivative(0, x); }, lo, hi,
                        config.table_points, "cubic");

    ExperimentReport report;
    report.experiment = "cubic";
    report.config = config;
    report.domain_lo = lo;
    report.domain_hi = hi;
    report.spot_check = cubic_spot_check();
    report.grid = detail::measure_grid(table, config, lo, hi, detail::cubic_derivative);
    report.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return report;
}

/// Sin accuracy experiment: tabulates sin at `table_points` equidistant
/// abscissas on [0, 2*pi] and measures, per degree and derivative order,
/// the difference statistics against the analytic derivatives over
/// `sample_count` uniform abscissas in [0, 2*pi).
inline ExperimentReport run_sin_experiment(
    const ExperimentConfig& config = ExperimentConfig::sin_defaults()) {
    config.validate();
    const auto t0 = std::chrono::steady_clock::now();

    const double lo = 0.0;
    const double hi = 2.0 * std::numbers::pi;
    const TabulatedFunction table =
        sample_function([](double x) { return std::sin(x); }, lo, hi, config.table_points, "sin");

    ExperimentReport report;
    report.experiment = "sin";
    report.config = config;
    report.domain_lo = lo;
    report.domain_hi = hi;
    report.grid = detail::measure_grid(table, config, lo, hi, detail::sin_derivative);
    report.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return report;
}

} // namespace neville

#endif // NEVILLE_EXPERIMENTS_HPP
