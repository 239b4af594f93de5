#ifndef NEVILLE_REPORT_IO_HPP
#define NEVILLE_REPORT_IO_HPP

#include "neville/experiments.hpp"

#include <json.hpp>

#include <cstdio>
#include <string>

namespace neville {

namespace detail {

inline std::string sci(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.1e", v);
    return buf;
}

inline std::string num(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.16g", v);
    return buf;
}

inline std::string pad(std::string s, std::size_t width) {
    if (s.size() < width)
        s.append(width - s.size(), ' ');
    return s;
}

inline std::string order_label(int n) {
    return n == 0 ? "f(x)" : "f" + std::to_string(n) + "(x)";
}

} // namespace detail

/// Plain-text report: a spot-check block when present, then either
/// average/rms/maximum rows (single degree) or an rms matrix over degrees.
/// Output is a pure function of the report contents (no timing).
inline std::string render_text(const ExperimentReport& report) {
    using detail::order_label;
    using detail::pad;
    std::string out;
    out += "experiment: " + report.experiment + "\n";
    if (!report.grid.empty())
        out += "seed: " + std::to_string(report.config.seed) +
               "  samples: " + std::to_string(report.config.sample_count) + "  ";
    out += "table: " + std::to_string(report.config.table_points) + " points on [" +
           detail::num(report.domain_lo) + ", " + detail::num(report.domain_hi) + "]\n";

    const std::size_t w = 24;
    if (report.spot_check) {
        const SpotCheck& sc = *report.spot_check;
        out += "\nvalue and derivatives at x = " + detail::num(sc.at) + ":\n";
        out += pad("", 14);
        for (std::size_t n = 0; n < sc.original.size(); ++n)
            out += pad(order_label(static_cast<int>(n)), w);
        out += "\n" + pad("  original", 14);
        for (double v : sc.original)
            out += pad(detail::num(v), w);
        out += "\n" + pad("  calculated", 14);
        for (double v : sc.calculated)
            out += pad(detail::num(v), w);
        out += "\n";
    }

    if (report.grid.empty()) {
        // spot-check-only report
    } else if (report.config.degrees.size() == 1) {
        const int degree = report.config.degrees.front();
        out += "\ninterpolant minus analytic, degree " + std::to_string(degree) + ":\n";
        out += pad("", 10) + pad("average", 12) + pad("rms", 12) + pad("maximum", 12) + "\n";
        const auto& row = report.grid.front();
        for (std::size_t n = 0; n < row.size(); ++n) {
            out += pad("  " + order_label(static_cast<int>(n)), 10);
            out += pad(detail::sci(row[n].average), 12);
            out += pad(detail::sci(row[n].rms), 12);
            out += pad(detail::sci(row[n].maximum), 12);
            out += "\n";
        }
    } else {
        out += "\nrms of interpolant minus analytic:\n";
        out += pad("  degree:", 10);
        for (int d : report.config.degrees)
            out += pad(std::to_string(d), 12);
        out += "\n";
        int max_orders = 0;
        for (const auto& row : report.grid)
            max_orders = std::max<int>(max_orders, static_cast<int>(row.size()));
        for (int n = 0; n < max_orders; ++n) {
            out += pad("  " + order_label(n), 10);
            for (std::size_t k = 0; k < report.grid.size(); ++k)
                out += pad(n < static_cast<int>(report.grid[k].size())
                               ? detail::sci(report.grid[k][static_cast<std::size_t>(n)].rms)
                               : "",
                           12);
            out += "\n";
        }
    }
    return out;
}

/// Machine-readable form: config, grid[degree][order] = {average, rms,
/// maximum}, and spot_checks when present.
inline nlohmann::json to_json(const ExperimentReport& report) {
    nlohmann::json j;
    j["experiment"] = report.experiment;
    j["config"] = {{"seed", report.config.seed},
                   {"samples", report.config.sample_count},
                   {"table_points", report.config.table_points},
                   {"degrees", report.config.degrees},
                   {"max_order", report.config.max_order},
                   {"domain", {report.domain_lo, report.domain_hi}}};
    nlohmann::json grid = nlohmann::json::object();
    for (std::size_t k = 0; k < report.grid.size(); ++k) {
        nlohmann::json per_order = nlohmann::json::object();
        for (std::size_t n = 0; n < report.grid[k].size(); ++n) {
            const StatsSummary& s = report.grid[k][n];
            per_order[std::to_string(n)] = {
                {"average", s.average}, {"rms", s.rms}, {"maximum", s.maximum}};
        }
        grid[std::to_string(report.config.degrees[k])] = std::move(per_order);
    }
    j["grid"] = std::move(grid);
    if (report.spot_check) {
        j["spot_checks"] = {{"x", report.spot_check->at},
                            {"original", report.spot_check->original},
                            {"calculated", report.spot_check->calculated}};
    }
    return j;
}

} // namespace neville

#endif // NEVILLE_REPORT_IO_HPP
