#include <cstdio>
#include <fstream>
#include <iostream>
#include <numbers>
#include <string>

#include <CLI11.hpp>

#include "qwlab/cli.hpp"
#include "qwlab/errors.hpp"
#include "qwlab/return_series.hpp"
#include "qwlab/version.hpp"

namespace {

using qwlab::RunConfig;

qwlab::cplx parse_complex(const std::string& text) {
    const auto comma = text.find(',');
    if (comma == std::string::npos) return {std::stod(text), 0.0};
    return {std::stod(text.substr(0, comma)), std::stod(text.substr(comma + 1))};
}

struct ModelFlags {
    std::string model = "one-defect";
    std::string alpha = "1";
    std::string beta = "0";
    bool xi_set = false;
};

void add_model_options(CLI::App* cmd, RunConfig& config, ModelFlags& flags) {
    cmd->add_option("--model", flags.model, "coin field: one-defect, wojcik, hadamard, custom")
        ->check(CLI::IsMember({"one-defect", "wojcik", "hadamard", "custom"}));
    cmd->add_option("--xi", config.xi, "defect angle in radians, in (0, pi/2)")
        ->each([&flags](const std::string&) { flags.xi_set = true; });
    cmd->add_option("--phi", config.phi, "wojcik phase parameter, in (0, 1)");
    cmd->add_option("--coin-file", config.custom_file, "JSON coin table for the custom model");
    cmd->add_option("--alpha", flags.alpha, "left component of the initial qubit, re[,im]");
    cmd->add_option("--beta", flags.beta, "right component of the initial qubit, re[,im]");
}

void add_output_options(CLI::App* cmd, RunConfig& config, std::string& format) {
    cmd->add_option("--format", format, "output format: csv or json")
        ->check(CLI::IsMember({"csv", "json"}));
    cmd->add_option("--out", config.out, "write output to this file instead of stdout");
}

void finalize_config(RunConfig& config, const ModelFlags& flags, const std::string& format) {
    if (flags.model == "one-defect") {
        config.model = RunConfig::Model::OneDefect;
        if (!flags.xi_set) {
            throw std::invalid_argument("the one-defect model requires --xi in (0, pi/2)");
        }
    } else if (flags.model == "wojcik") {
        config.model = RunConfig::Model::Wojcik;
    } else if (flags.model == "hadamard") {
        config.model = RunConfig::Model::Hadamard;
    } else {
        config.model = RunConfig::Model::Custom;
        if (config.custom_file.empty()) {
            throw std::invalid_argument("the custom model requires --coin-file");
        }
    }
    config.alpha = parse_complex(flags.alpha);
    config.beta = parse_complex(flags.beta);
    config.format = format == "json" ? RunConfig::Format::Json : RunConfig::Format::Csv;
}

void emit(const qwlab::Table& table, const RunConfig& config) {
    const std::string text = config.format == RunConfig::Format::Json
                                 ? qwlab::render_json(table, qwlab::run_meta(config))
                                 : qwlab::render_csv(table);
    if (config.out.empty()) {
        std::fputs(text.c_str(), stdout);
    } else {
        std::ofstream out(config.out, std::ios::binary);
        if (!out) throw std::invalid_argument("cannot open output file " + config.out);
        out << text;
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"one-defect quantum walk: simulation and closed-form analysis"};
    app.set_version_flag("--version", QWLAB_VERSION);
    app.require_subcommand(1);

    RunConfig config;
    ModelFlags flags;
    std::string format = "csv";
    bool per_time = false;
    bool prob = false;
    std::string c_text = "1";
    std::string which_series = "rstar";
    int terms = qwlab::kDefaultSeriesTrunc;
    double xi_min = 0.1;
    double xi_max = 1.5;
    int points = 29;

    CLI::App* simulate = app.add_subcommand("simulate", "evolve and print the measure profile");
    add_model_options(simulate, config, flags);
    simulate->add_option("--steps", config.steps, "number of time steps");
    simulate->add_option("--window", config.window, "simulation window half-width");
    simulate->add_option("--xmax", config.xmax, "largest |x| to print");
    simulate->add_flag("--per-time", per_time, "print the profile after every step");
    add_output_options(simulate, config, format);

    CLI::App* cesaro = app.add_subcommand("cesaro", "time-averaged measure over steps times");
    add_model_options(cesaro, config, flags);
    cesaro->add_option("--steps", config.steps, "number of averaged times");
    cesaro->add_option("--xmax", config.xmax, "largest |x| to print");
    add_output_options(cesaro, config, format);

    CLI::App* stationary = app.add_subcommand("stationary", "closed-form stationary measure");
    add_model_options(stationary, config, flags);
    stationary->add_option("--c", c_text, "scale parameter c, re[,im]");
    stationary->add_flag("--prob", prob, "print the normalized probability measure");
    stationary->add_option("--xmax", config.xmax, "largest |x| to print");
    add_output_options(stationary, config, format);

    CLI::App* limit = app.add_subcommand(
        "limit", "time-averaged limit measure: closed form, residue sum, Cesaro column");
    add_model_options(limit, config, flags);
    CLI::Option* limit_steps =
        limit->add_option("--steps", config.steps, "Cesaro horizon for the comparison column");
    limit->add_option("--xmax", config.xmax, "largest |x| to print");
    add_output_options(limit, config, format);

    CLI::App* return_prob = app.add_subcommand("return-prob", "origin return probability table");
    add_model_options(return_prob, config, flags);
    return_prob->add_option("--steps", config.steps, "largest half-time n to print");
    add_output_options(return_prob, config, format);

    CLI::App* series = app.add_subcommand("series", "exact first-return series coefficients");
    series->add_option("--which", which_series, "series name: rstar or first-return")
        ->check(CLI::IsMember({"rstar", "first-return"}));
    series->add_option("--terms", terms, "truncation order");
    series->add_option("--out", config.out, "write output to this file instead of stdout");

    CLI::App* sweep = app.add_subcommand("sweep", "closed-form observables over a xi grid");
    sweep->add_option("--xi-min", xi_min, "lower end of the xi grid");
    sweep->add_option("--xi-max", xi_max, "upper end of the xi grid");
    sweep->add_option("--points", points, "number of grid points");
    sweep->add_option("--out", config.out, "write output to this file instead of stdout");

    CLI::App* verify = app.add_subcommand("verify", "run the library invariant checks");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (simulate->parsed() || cesaro->parsed() || stationary->parsed() || limit->parsed() ||
            return_prob->parsed()) {
            finalize_config(config, flags, format);
        }
        if (limit->parsed() && limit_steps->count() == 0) config.steps = 1000;
        if (simulate->parsed()) {
            emit(qwlab::cmd_simulate(config, per_time), config);
        } else if (cesaro->parsed()) {
            emit(qwlab::cmd_cesaro(config), config);
        } else if (stationary->parsed()) {
            emit(qwlab::cmd_stationary(config, parse_complex(c_text), prob), config);
        } else if (limit->parsed()) {
            emit(qwlab::cmd_limit(config), config);
        } else if (return_prob->parsed()) {
            emit(qwlab::cmd_return_prob(config), config);
        } else if (series->parsed()) {
            config.format = RunConfig::Format::Csv;
            emit(qwlab::cmd_series(which_series, terms), config);
        } else if (sweep->parsed()) {
            config.format = RunConfig::Format::Csv;
            emit(qwlab::cmd_sweep(xi_min, xi_max, points, qwlab::thread_cap()), config);
        } else if (verify->parsed()) {
            std::string report;
            const int failures = qwlab::print_verification_report(qwlab::run_verification(), report);
            std::fputs(report.c_str(), stdout);
            return failures == 0 ? 0 : 1;
        }
    } catch (const std::domain_error& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    } catch (const std::invalid_argument& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "internal error: %s\n", e.what());
        return 3;
    }
    return 0;
}
