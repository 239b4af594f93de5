#include "neville/experiments.hpp"

#include "neville/report_io.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <cmath>

using neville::cubic_spot_check;
using neville::ExperimentConfig;
using neville::ExperimentReport;
using neville::run_polynomial_experiment;
using neville::run_sin_experiment;
using neville::SpotCheck;
using neville::StatsSummary;

namespace {

ExperimentConfig small_cubic() {
    ExperimentConfig cfg = ExperimentConfig::polynomial_defaults();
    cfg.sample_count = 2000;
    return cfg;
}

ExperimentConfig small_sin() {
    ExperimentConfig cfg = ExperimentConfig::sin_defaults();
    cfg.sample_count = 4000;
    return cfg;
}

} // namespace

TEST_CASE("spot check reproduces the analytic cubic at the center") {
    const SpotCheck check = cubic_spot_check();
    REQUIRE(check.original.size() == 4);
    CHECK(check.original == std::vector<double>{1.0, 1.0, 2.0, 6.0});
    for (std::size_t n = 0; n < 4; ++n)
        CHECK(check.calculated[n] == Catch::Approx(check.original[n]).margin(1e-12));
}

TEST_CASE("cubic experiment differences stay at rounding level") {
    const ExperimentReport report = run_polynomial_experiment(small_cubic());
    REQUIRE(report.grid.size() == 1);
    const auto& row = report.grid.front();
    REQUIRE(row.size() == 4);
    CHECK(row[0].maximum < 1e-12);
    CHECK(row[1].maximum < 1e-12);
    CHECK(row[2].maximum < 1e-11);
    CHECK(row[3].maximum < 1e-11);
    CHECK(report.spot_check.has_value());
}

TEST_CASE("grid covers the requested degrees and orders") {
    const ExperimentReport report = run_sin_experiment(small_sin());
    REQUIRE(report.grid.size() == 4);
    for (std::size_t k = 0; k < 4; ++k) {
        const int degree = report.config.degrees[k];
        CHECK(report.grid[k].size() ==
              static_cast<std::size_t>(std::min(degree, report.config.max_order)) + 1);
        for (const StatsSummary& cell : report.grid[k]) {
            CHECK(cell.count == report.config.sample_count);
            CHECK(cell.rms >= std::abs(cell.average));
            CHECK(cell.maximum >= cell.rms);
        }
    }
}

TEST_CASE("sin experiment magnitudes and degree ordering") {
    const ExperimentReport report = run_sin_experiment(small_sin());
    // value-row magnitudes shrink with the degree
    for (std::size_t k = 1; k < 4; ++k)
        CHECK(report.grid[k][0].rms < report.grid[k - 1][0].rms);
    // an order-2 cell at degree 4 pairs with the order-0 cell at degree 2
    const double ratio = report.cell(4, 2).rms / report.cell(2, 0).rms;
    CHECK(ratio > 0.2);
    CHECK(ratio < 20.0);
}

TEST_CASE("reports are bitwise deterministic") {
    const ExperimentReport a = run_sin_experiment(small_sin());
    const ExperimentReport b = run_sin_experiment(small_sin());
    REQUIRE(a.grid.size() == b.grid.size());
    for (std::size_t k = 0; k < a.grid.size(); ++k) {
        REQUIRE(a.grid[k].size() == b.grid[k].size());
        for (std::size_t n = 0; n < a.grid[k].size(); ++n) {
            CHECK(a.grid[k][n].average == b.grid[k][n].average);
            CHECK(a.grid[k][n].rms == b.grid[k][n].rms);
            CHECK(a.grid[k][n].maximum == b.grid[k][n].maximum);
        }
    }
    CHECK(neville::render_text(a) == neville::render_text(b));
    CHECK(neville::to_json(a).dump() == neville::to_json(b).dump());
}

TEST_CASE("different seeds move the statistics") {
    ExperimentConfig other = small_sin();
    other.seed = 2;
    const ExperimentReport a = run_sin_experiment(small_sin());
    const ExperimentReport b = run_sin_experiment(other);
    CHECK(a.grid[0][0].rms != b.grid[0][0].rms);
}

TEST_CASE("json document carries config, grid and spot checks") {
    const auto j = neville::to_json(run_polynomial_experiment(small_cubic()));
    CHECK(j["config"]["seed"] == 1);
    CHECK(j["config"]["samples"] == 2000);
    CHECK(j["grid"].contains("3"));
    CHECK(j["grid"]["3"].contains("0"));
    CHECK(j["grid"]["3"]["0"].contains("rms"));
    CHECK(j["spot_checks"]["original"][3] == 6.0);
}

TEST_CASE("config validation") {
    ExperimentConfig cfg = ExperimentConfig::sin_defaults();
    cfg.sample_count = 0;
    CHECK_THROWS_AS(run_sin_experiment(cfg), neville::InvalidArgument);

    cfg = ExperimentConfig::sin_defaults();
    cfg.degrees = {41};
    CHECK_THROWS_AS(run_sin_experiment(cfg), neville::InvalidArgument);

    cfg = ExperimentConfig::sin_defaults();
    cfg.degrees.clear();
    CHECK_THROWS_AS(run_sin_experiment(cfg), neville::InvalidArgument);
}
