#ifndef NEVILLE_STATS_HPP
#define NEVILLE_STATS_HPP

#include "neville/errors.hpp"

#include <cmath>
#include <cstddef>
#include <span>

namespace neville {

/// Signed mean, root-mean-square and maximum absolute value of a difference
/// population. Always: rms >= |average| and maximum >= rms.
struct StatsSummary {
    double average{};
    double rms{};
    double maximum{};
    std::size_t count{};
};

namespace detail {

// Neumaier-compensated running sum; keeps ~full precision for long sums of
// tiny same-magnitude terms (1e6 terms of ~1e-16 would otherwise lose the
// leading digits to cancellation).
class CompensatedSum {
public:
    void add(double v) noexcept {
        const double t = sum_ + v;
        if (std::abs(sum_) >= std::abs(v))
            comp_ += (sum_ - t) + v;
        else
            comp_ += (v - t) + sum_;
        sum_ = t;
    }

    double value() const noexcept { return sum_ + comp_; }

private:
    double sum_ = 0.0;
    double comp_ = 0.0;
};

} // namespace detail

/// Streaming accumulator for difference statistics; add() in index order
/// gives bitwise-reproducible results.
class StatsAccumulator {
public:
    void add(double diff) noexcept {
        sum_.add(diff);
        sum_sq_.add(diff * diff);
        const double a = std::abs(diff);
        if (a > max_)
            max_ = a;
        ++count_;
    }

    std::size_t count() const noexcept { return count_; }

    StatsSummary summary() const {
        if (count_ == 0)
            throw EmptyPopulation{};
        const double n = static_cast<double>(count_);
        return {sum_.value() / n, std::sqrt(sum_sq_.value() / n), max_, count_};
    }

private:
    detail::CompensatedSum sum_;
    detail::CompensatedSum sum_sq_;
    double max_ = 0.0;
    std::size_t count_ = 0;
};

/// Statistics of a difference population. Throws EmptyPopulation.
inline StatsSummary diff_stats(std::span<const double> differences) {
    StatsAccumulator acc;
    for (double d : differences)
        acc.add(d);
    return acc.summary();
}

} // namespace neville

#endif // NEVILLE_STATS_HPP
