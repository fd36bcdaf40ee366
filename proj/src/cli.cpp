#include "qwlab/cli.hpp"

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <numbers>
#include <stdexcept>
#include <thread>

#include <json.hpp>

#include "qwlab/genfun.hpp"
#include "qwlab/pathsum.hpp"
#include "qwlab/return_series.hpp"
#include "qwlab/stationary.hpp"
#include "qwlab/version.hpp"

namespace qwlab {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kSqrt2 = std::numbers::sqrt2;

CoinMatrix coin_from_json(const nlohmann::json& entries) {
    if (!entries.is_array() || entries.size() != 8) {
        throw std::invalid_argument("coin entries must be 8 numbers: re,im per a,b,c,d");
    }
    auto v = [&](size_t i) { return entries[i].get<double>(); };
    return make_coin({v(0), v(1)}, {v(2), v(3)}, {v(4), v(5)}, {v(6), v(7)});
}

// The closed-form commands are specific to the one-defect family; Hadamard is
// the xi = pi/4 member.
double closed_form_xi(const RunConfig& config) {
    if (config.model == RunConfig::Model::OneDefect) return config.xi;
    if (config.model == RunConfig::Model::Hadamard) return kPi / 4;
    throw std::invalid_argument("closed-form tables require the one-defect or hadamard model");
}

int resolved_window(const RunConfig& config) {
    const int w = config.window < 0 ? config.steps + 1 : config.window;
    if (w < config.steps) {
        throw std::invalid_argument("window must be at least the number of steps");
    }
    return w;
}

int resolved_xmax(const RunConfig& config, int fallback, int hard_cap) {
    int xm = config.xmax < 0 ? fallback : config.xmax;
    if (xm < 0) throw std::invalid_argument("xmax must be nonnegative");
    return std::min(xm, hard_cap);
}

}  // namespace

CoinField make_field(const RunConfig& config) {
    switch (config.model) {
        case RunConfig::Model::OneDefect:
            return CoinField::one_defect(config.xi);
        case RunConfig::Model::Wojcik:
            return CoinField::wojcik(config.phi);
        case RunConfig::Model::Hadamard:
            return CoinField::hadamard();
        case RunConfig::Model::Custom: {
            std::ifstream in(config.custom_file);
            if (!in) throw std::invalid_argument("cannot open coin file " + config.custom_file);
            nlohmann::json doc = nlohmann::json::parse(in);
            CoinMatrix background = hadamard_coin();
            if (doc.contains("background")) background = coin_from_json(doc["background"]);
            std::map<int, CoinMatrix> table;
            if (doc.contains("sites")) {
                for (const auto& [key, value] : doc["sites"].items()) {
                    table.emplace(std::stoi(key), coin_from_json(value));
                }
            }
            return CoinField::custom(std::move(table), background);
        }
    }
    throw std::logic_error("unreachable model kind");
}

Amplitude2 make_qubit(const RunConfig& config) {
    const double n = std::sqrt(std::norm(config.alpha) + std::norm(config.beta));
    if (n == 0.0) throw std::invalid_argument("qubit must be nonzero");
    return Amplitude2{config.alpha / n, config.beta / n};
}

Table cmd_simulate(const RunConfig& config, bool per_time) {
    if (config.steps < 1) throw std::invalid_argument("steps must be >= 1");
    const CoinField field = make_field(config);
    const Amplitude2 qubit = make_qubit(config);
    const int window = resolved_window(config);
    const int xm = resolved_xmax(config, config.steps, window);

    Table table;
    table.columns = {"n", "x", "mu"};
    WalkState state = point_mass(qubit, window);
    auto emit = [&](const WalkState& s) {
        const MeasureProfile m = measure(s);
        for (int x = -xm; x <= xm; ++x) {
            table.add_row({static_cast<long long>(s.time), static_cast<long long>(x), m.at(x)});
        }
    };
    if (per_time) emit(state);
    for (int n = 1; n <= config.steps; ++n) {
        state = step(state, field);
        if (per_time || n == config.steps) emit(state);
    }
    return table;
}

Table cmd_cesaro(const RunConfig& config) {
    if (config.steps < 1) throw std::invalid_argument("steps must be >= 1");
    const CoinField field = make_field(config);
    const Amplitude2 qubit = make_qubit(config);
    const MeasureProfile avg = cesaro_average(field, qubit, config.steps);
    const int xm = resolved_xmax(config, config.steps, avg.window);

    Table table;
    table.columns = {"x", "mu_bar"};
    for (int x = -xm; x <= xm; ++x) {
        table.add_row({static_cast<long long>(x), avg.at(x)});
    }
    return table;
}

Table cmd_stationary(const RunConfig& config, cplx c, bool prob) {
    const double xi = closed_form_xi(config);
    const int xm = resolved_xmax(config, 25, 1 << 20);
    Table table;
    table.columns = {"x", "mu"};
    for (int x = -xm; x <= xm; ++x) {
        const double mu = prob ? stationary_prob_measure(xi, x) : stationary_measure(xi, c, x);
        table.add_row({static_cast<long long>(x), mu});
    }
    return table;
}

Table cmd_limit(const RunConfig& config) {
    const double xi = closed_form_xi(config);
    const int cesaro_n = config.steps;
    if (cesaro_n < 1) throw std::invalid_argument("steps must be >= 1");
    const int xm = resolved_xmax(config, 25, cesaro_n);
    const Amplitude2 qubit = make_qubit(config);
    const CoinField field = CoinField::one_defect(xi);
    const MeasureProfile avg = cesaro_average(field, qubit, cesaro_n);
    const bool localized = xi < kPi / 4;

    Table table;
    table.columns = {"x", "mu_bar_closed", "mu_bar_residue", "cesaro_N"};
    double residue_total = 0.0;
    for (int x = -xm; x <= xm; ++x) {
        const double closed = time_averaged_limit_measure(xi, x);
        const double residue = localized ? residue_sum_measure(xi, x, qubit) : 0.0;
        residue_total += residue;
        table.add_row({static_cast<long long>(x), closed, residue, avg.at(x)});
    }
    // analytic tail of the residue column beyond the emitted range
    if (localized) {
        const double s = std::sin(xi);
        const double d = 3.0 - 2.0 * kSqrt2 * s;
        const double head =
            2.0 * (2.0 - kSqrt2 * s) * (1.0 - kSqrt2 * s) * (1.0 - kSqrt2 * s) / (d * d);
        residue_total += 2.0 * head * std::pow(1.0 / d, xm + 1) / (1.0 - 1.0 / d);
    }
    table.add_row({std::string("total"), tal_total_mass(xi), residue_total, avg.total});
    return table;
}

Table cmd_return_prob(const RunConfig& config) {
    const double xi = closed_form_xi(config);
    if (config.steps < 0) throw std::invalid_argument("steps must be >= 0");
    const Amplitude2 qubit = make_qubit(config);
    const auto amps = return_amplitude_genfun_table(xi, qubit, config.steps);
    const double limit = return_prob_limit(xi);

    Table table;
    table.columns = {"n", "psi_l_sq", "psi_r_sq", "r_2n", "r_limit"};
    for (int n = 0; n <= config.steps; ++n) {
        const Amplitude2& a = amps[static_cast<size_t>(n)];
        const double l2 = std::norm(a.left);
        const double r2 = std::norm(a.right);
        table.add_row({static_cast<long long>(n), l2, r2, l2 + r2, limit});
    }
    return table;
}

Table cmd_series(const std::string& which, int terms) {
    if (terms < 1) throw std::invalid_argument("terms must be >= 1");
    RationalSeries series;
    if (which == "rstar") {
        series = rstar_series(terms);
    } else if (which == "first-return") {
        series = first_return_series_plus(terms);
    } else {
        throw std::invalid_argument("unknown series '" + which + "' (rstar, first-return)");
    }
    Table table;
    table.columns = {"n", "numerator", "denominator"};
    for (int n = 0; n <= series.trunc(); ++n) {
        table.add_row({static_cast<long long>(n),
                       boost::multiprecision::numerator(series[n]).str(),
                       boost::multiprecision::denominator(series[n]).str()});
    }
    return table;
}

unsigned thread_cap() {
    if (const char* env = std::getenv("QWLAB_THREADS")) {
        const long v = std::strtol(env, nullptr, 10);
        if (v >= 1) return static_cast<unsigned>(v);
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return hw ? hw : 1;
}

Table cmd_sweep(double xi_min, double xi_max, int points, unsigned threads) {
    if (points < 2) throw std::invalid_argument("sweep needs at least 2 points");
    if (!(xi_min > 0.0 && xi_max < kPi / 2 && xi_min < xi_max)) {
        throw std::domain_error("sweep range must satisfy 0 < xi_min < xi_max < pi/2");
    }
    struct Row {
        double xi, limit, mu0, mass;
    };
    std::vector<Row> slots(static_cast<size_t>(points));
    const unsigned used = std::min<unsigned>(threads ? threads : 1, static_cast<unsigned>(points));
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < used; ++t) {
        pool.emplace_back([&, t]() {
            for (int i = static_cast<int>(t); i < points; i += static_cast<int>(used)) {
                const double xi = xi_min + (xi_max - xi_min) * i / (points - 1);
                slots[static_cast<size_t>(i)] =
                    Row{xi, return_prob_limit(xi), time_averaged_limit_measure(xi, 0),
                        tal_total_mass(xi)};
            }
        });
    }
    for (auto& th : pool) th.join();

    Table table;
    table.columns = {"xi", "return_prob_limit", "mu_bar_0", "total_mass"};
    for (const Row& r : slots) table.add_row({r.xi, r.limit, r.mu0, r.mass});
    return table;
}

std::vector<std::pair<std::string, Cell>> run_meta(const RunConfig& config) {
    std::string model;
    switch (config.model) {
        case RunConfig::Model::OneDefect: model = "one-defect"; break;
        case RunConfig::Model::Wojcik: model = "wojcik"; break;
        case RunConfig::Model::Hadamard: model = "hadamard"; break;
        case RunConfig::Model::Custom: model = "custom"; break;
    }
    const Amplitude2 qubit = make_qubit(config);
    std::vector<std::pair<std::string, Cell>> meta;
    meta.emplace_back("model", model);
    if (config.model == RunConfig::Model::OneDefect) meta.emplace_back("xi", config.xi);
    if (config.model == RunConfig::Model::Wojcik) meta.emplace_back("phi", config.phi);
    meta.emplace_back("alpha_re", qubit.left.real());
    meta.emplace_back("alpha_im", qubit.left.imag());
    meta.emplace_back("beta_re", qubit.right.real());
    meta.emplace_back("beta_im", qubit.right.imag());
    meta.emplace_back("steps", static_cast<long long>(config.steps));
    meta.emplace_back("version", std::string(QWLAB_VERSION));
    return meta;
}

int print_verification_report(const std::vector<CheckResult>& results, std::string& out) {
    int failures = 0;
    for (const auto& r : results) {
        out += r.pass ? "[PASS] " : "[FAIL] ";
        out += r.name;
        if (!r.detail.empty()) {
            out += "  (" + r.detail + ")";
        }
        out += '\n';
        if (!r.pass) ++failures;
    }
    out += std::to_string(results.size() - static_cast<size_t>(failures)) + "/" +
           std::to_string(results.size()) + " checks passed\n";
    return failures;
}

}  // namespace qwlab
