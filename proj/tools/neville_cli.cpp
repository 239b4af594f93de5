// Command-line front end: evaluate tabulated functions with derivatives,
// solve for roots and extrema, and run the bundled accuracy experiments.
//
// Exit codes: 0 success, 1 domain error (one "Code: message" line on
// stderr), 2 usage error.

#include "neville/neville.hpp"
#include "neville/report_io.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>

namespace {

neville::TabulatedFunction load_table_file(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw neville::Error{"FileNotReadable", "cannot open table file '" + path + "'"};
    return neville::load_table(in, path);
}

std::string format_full(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

void print_json(const nlohmann::json& j) {
    std::cout << j.dump(2) << "\n";
}

struct EvalArgs {
    std::string table;
    double x{};
    int degree = 3;
    int order = 0;
    bool strict = false;
    bool json = false;
};

int run_eval(const EvalArgs& args) {
    const auto table = load_table_file(args.table);
    const auto policy = args.strict ? neville::DomainPolicy::strict
                                    : neville::DomainPolicy::allow_extrapolation;
    const neville::DerivativeStack s =
        neville::interpolate_at(table, args.x, args.degree, args.order, policy);

    if (args.json) {
        print_json({{"x", s.at},
                    {"degree", args.degree},
                    {"order", args.order},
                    {"values", s.values}});
        return 0;
    }
    std::cout << "x = " << format_full(s.at) << "  (degree " << args.degree << ")\n";
    for (std::size_t n = 0; n < s.values.size(); ++n) {
        const std::string label = n == 0 ? "f(x)" : "f" + std::to_string(n) + "(x)";
        std::cout << label << " = " << format_full(s.values[n]) << "\n";
    }
    return 0;
}

struct SolveArgs {
    std::string table;
    double target{};
    double x0{};
    int degree = 3;
    double tol = 1e-10;
    int max_iter = 50;
    bool json = false;
};

int run_solve(const SolveArgs& args) {
    const auto table = load_table_file(args.table);
    neville::SolverSettings settings = neville::SolverSettings::defaults_for(table);
    settings.tol_residual = args.tol;
    settings.max_iter = args.max_iter;
    const neville::RootResult r =
        neville::newton_root(table, args.degree, args.target, args.x0, settings);

    if (args.json) {
        print_json({{"x", r.x},
                    {"residual", r.residual},
                    {"iterations", r.iterations},
                    {"converged", r.converged}});
        return 0;
    }
    std::cout << "root x = " << format_full(r.x) << "\n"
              << "residual = " << format_full(r.residual) << "\n"
              << "iterations = " << r.iterations << "\n"
              << "converged = " << (r.converged ? "yes" : "no") << "\n";
    return 0;
}

struct ExtremumArgs {
    std::string table;
    double x0{};
    int degree = 3;
    bool json = false;
};

int run_extremum(const ExtremumArgs& args) {
    const auto table = load_table_file(args.table);
    const neville::ExtremumResult r = neville::find_extremum(
        table, args.degree, args.x0, neville::SolverSettings::defaults_for(table));

    if (args.json) {
        print_json({{"x", r.x},
                    {"value", r.value},
                    {"kind", neville::to_string(r.kind)},
                    {"iterations", r.iterations},
                    {"converged", r.converged}});
        return 0;
    }
    std::cout << "extremum x = " << format_full(r.x) << "\n"
              << "value = " << format_full(r.value) << "\n"
              << "kind = " << neville::to_string(r.kind) << "\n"
              << "iterations = " << r.iterations << "\n"
              << "converged = " << (r.converged ? "yes" : "no") << "\n";
    return 0;
}

struct ReproduceArgs {
    std::string experiment;
    std::size_t samples = 100000;
    std::uint64_t seed = 1;
    bool json = false;
};

int run_reproduce(const ReproduceArgs& args) {
    if (args.experiment == "table1") {
        const neville::SpotCheck check = neville::cubic_spot_check();
        if (args.json) {
            print_json({{"experiment", "table1"},
                        {"spot_checks",
                         {{"x", check.at},
                          {"original", check.original},
                          {"calculated", check.calculated}}}});
            return 0;
        }
        neville::ExperimentReport shell;
        shell.experiment = "cubic";
        shell.config = neville::ExperimentConfig::polynomial_defaults();
        shell.config.degrees = {}; // spot check only
        shell.domain_lo = -1.0;
        shell.domain_hi = 1.0;
        shell.spot_check = check;
        std::cout << neville::render_text(shell);
        return 0;
    }

    neville::ExperimentConfig config = args.experiment == "table2"
                                           ? neville::ExperimentConfig::polynomial_defaults()
                                           : neville::ExperimentConfig::sin_defaults();
    config.seed = args.seed;
    config.sample_count = args.samples;
    const neville::ExperimentReport report = args.experiment == "table2"
                                                 ? neville::run_polynomial_experiment(config)
                                                 : neville::run_sin_experiment(config);
    std::fprintf(stderr, "completed in %.2f s\n", report.wall_seconds);
    if (args.json)
        print_json(neville::to_json(report));
    else
        std::cout << neville::render_text(report);
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"polynomial interpolation with derivatives over tabulated functions"};
    app.require_subcommand(1);

    EvalArgs eval_args;
    CLI::App* eval = app.add_subcommand("eval", "evaluate value and derivatives at a point");
    eval->add_option("--table", eval_args.table, "table file (rows of 'x y')")->required();
    eval->add_option("--x", eval_args.x, "evaluation abscissa")->required();
    eval->add_option("--degree", eval_args.degree, "interpolation degree")
        ->check(CLI::Range(1, 1000000));
    eval->add_option("--order", eval_args.order, "highest derivative order")
        ->check(CLI::Range(0, 1000000));
    eval->add_flag("--strict-domain", eval_args.strict, "refuse extrapolation");
    eval->add_flag("--json", eval_args.json, "machine-readable output");

    SolveArgs solve_args;
    CLI::App* solve = app.add_subcommand("solve", "find x with f(x) = target (Newton-Raphson)");
    solve->add_option("--table", solve_args.table, "table file")->required();
    solve->add_option("--target", solve_args.target, "target ordinate")->required();
    solve->add_option("--x0", solve_args.x0, "starting abscissa")->required();
    solve->add_option("--degree", solve_args.degree, "interpolation degree")
        ->check(CLI::Range(1, 1000000));
    solve->add_option("--tol", solve_args.tol, "residual tolerance")
        ->check(CLI::PositiveNumber);
    solve->add_option("--max-iter", solve_args.max_iter, "iteration limit")
        ->check(CLI::Range(1, 1000000));
    solve->add_flag("--json", solve_args.json, "machine-readable output");

    ExtremumArgs extremum_args;
    CLI::App* extremum =
        app.add_subcommand("extremum", "locate and classify a local extremum");
    extremum->add_option("--table", extremum_args.table, "table file")->required();
    extremum->add_option("--x0", extremum_args.x0, "starting abscissa")->required();
    extremum->add_option("--degree", extremum_args.degree, "interpolation degree (>= 2)")
        ->check(CLI::Range(2, 1000000));
    extremum->add_flag("--json", extremum_args.json, "machine-readable output");

    ReproduceArgs repro_args;
    CLI::App* repro =
        app.add_subcommand("reproduce", "run a bundled accuracy experiment");
    repro->add_option("experiment", repro_args.experiment, "table1 | table2 | table3")
        ->required()
        ->check(CLI::IsMember({"table1", "table2", "table3"}));
    repro->add_option("--samples", repro_args.samples, "number of random abscissas")
        ->check(CLI::Range(std::size_t{1}, std::size_t{1000000000}));
    repro->add_option("--seed", repro_args.seed, "sampling seed");
    repro->add_flag("--json", repro_args.json, "machine-readable output");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        std::cerr << app.help();
        return 2;
    }

    try {
        if (eval->parsed())
            return run_eval(eval_args);
        if (solve->parsed())
            return run_solve(solve_args);
        if (extremum->parsed())
            return run_extremum(extremum_args);
        return run_reproduce(repro_args);
    } catch (const neville::Error& e) {
        std::cerr << e.code() << ": " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "InternalError: " << e.what() << "\n";
        return 1;
    }
}
