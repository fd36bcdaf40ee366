#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <numbers>

#include <json.hpp>

#include "qwlab/cli.hpp"
#include "qwlab/genfun.hpp"
#include "test_util.hpp"

using namespace qwlab;
using qwtest::close;

namespace {
constexpr double pi = std::numbers::pi;

RunConfig one_defect_config(double xi, int steps) {
    RunConfig config;
    config.model = RunConfig::Model::OneDefect;
    config.xi = xi;
    config.steps = steps;
    return config;
}

double cell_real(const Cell& cell) { return std::get<double>(cell); }

}  // namespace

TEST_CASE("render_cell uses 17 significant digits for reals") {
    CHECK(render_cell(Cell{1.0 / 3.0}) == "0.33333333333333331");
    CHECK(render_cell(Cell{static_cast<long long>(-7)}) == "-7");
    CHECK(render_cell(Cell{std::string("total")}) == "total");
}

TEST_CASE("cmd_simulate: window-wide profile with unit mass") {
    const Table t = cmd_simulate(one_defect_config(0.5235987755982988, 200));
    CHECK(t.columns == std::vector<std::string>{"n", "x", "mu"});
    CHECK(t.rows.size() == 401);
    double total = 0.0;
    for (const auto& row : t.rows) {
        CHECK(std::get<long long>(row[0]) == 200);
        total += cell_real(row[2]);
    }
    CHECK(close(total, 1.0));
}

TEST_CASE("cmd_simulate: identical invocations are byte-identical") {
    const RunConfig config = one_defect_config(pi / 5, 60);
    CHECK(render_csv(cmd_simulate(config)) == render_csv(cmd_simulate(config)));
}

TEST_CASE("cmd_simulate: hadamard model equals one-defect at pi/4 bitwise") {
    RunConfig h;
    h.model = RunConfig::Model::Hadamard;
    h.steps = 100;
    CHECK(render_csv(cmd_simulate(h)) == render_csv(cmd_simulate(one_defect_config(pi / 4, 100))));
}

TEST_CASE("cmd_simulate: odd step count leaves an exact zero at the origin") {
    const Table t = cmd_simulate(one_defect_config(0.9, 41));
    for (const auto& row : t.rows) {
        if (std::get<long long>(row[1]) == 0) CHECK(cell_real(row[2]) == 0.0);
    }
}

TEST_CASE("cmd_simulate: per-time output emits every horizon") {
    RunConfig config = one_defect_config(0.7, 6);
    config.xmax = 2;
    const Table t = cmd_simulate(config, true);
    CHECK(t.rows.size() == 7 * 5);
    CHECK(std::get<long long>(t.rows.front()[0]) == 0);
    CHECK(std::get<long long>(t.rows.back()[0]) == 6);
}

TEST_CASE("cmd_cesaro: unit total over the full window") {
    RunConfig config = one_defect_config(pi / 6, 180);
    const Table t = cmd_cesaro(config);
    CHECK(t.columns == std::vector<std::string>{"x", "mu_bar"});
    double total = 0.0;
    for (const auto& row : t.rows) total += cell_real(row[1]);
    CHECK(close(total, 1.0, 1e-10));
}

TEST_CASE("cmd_stationary: probability profile and domain diagnostics") {
    RunConfig config = one_defect_config(pi / 6, 10);
    config.xmax = 5;
    const Table t = cmd_stationary(config, cplx(1.0, 0.0), true);
    CHECK(t.rows.size() == 11);
    for (const auto& row : t.rows) {
        if (std::get<long long>(row[0]) == 0) CHECK(close(cell_real(row[1]), 0.18469, 1e-4));
    }

    bool names_interval = false;
    try {
        cmd_stationary(one_defect_config(pi / 3, 10), cplx(1.0, 0.0), true);
    } catch (const std::domain_error& e) {
        names_interval = std::string(e.what()).find("(0, pi/4)") != std::string::npos;
    }
    CHECK(names_interval);
}

TEST_CASE("xi outside the model range is rejected with the interval in the message") {
    bool names_interval = false;
    try {
        cmd_simulate(one_defect_config(2.0, 10));
    } catch (const std::domain_error& e) {
        names_interval = std::string(e.what()).find("(0, pi/2)") != std::string::npos;
    }
    CHECK(names_interval);
}

TEST_CASE("cmd_limit: closed form, residue column, and total footer") {
    RunConfig config = one_defect_config(pi / 6, 400);
    config.xmax = 10;
    const Table t = cmd_limit(config);
    CHECK(t.columns ==
          std::vector<std::string>{"x", "mu_bar_closed", "mu_bar_residue", "cesaro_N"});
    CHECK(t.rows.size() == 22);  // 21 sites + footer
    for (size_t i = 0; i + 1 < t.rows.size(); ++i) {
        CHECK(close(cell_real(t.rows[i][1]), cell_real(t.rows[i][2]), 1e-10));
    }
    const auto& footer = t.rows.back();
    CHECK(std::get<std::string>(footer[0]) == "total");
    CHECK(close(cell_real(footer[1]), tal_total_mass(pi / 6), 1e-15));
    CHECK(close(cell_real(footer[2]), tal_total_mass(pi / 6), 1e-10));
    CHECK(close(cell_real(footer[3]), 1.0, 1e-10));
}

TEST_CASE("cmd_limit: hadamard point zeroes both closed-form columns") {
    RunConfig config = one_defect_config(pi / 4, 100);
    config.xmax = 6;
    const Table t = cmd_limit(config);
    for (size_t i = 0; i + 1 < t.rows.size(); ++i) {
        CHECK(cell_real(t.rows[i][1]) == 0.0);
        CHECK(cell_real(t.rows[i][2]) == 0.0);
    }
}

TEST_CASE("cmd_return_prob: initial row and constant limit column") {
    RunConfig config = one_defect_config(pi / 6, 12);
    const Table t = cmd_return_prob(config);
    CHECK(t.rows.size() == 13);
    CHECK(close(cell_real(t.rows[0][3]), 1.0, 1e-15));
    for (const auto& row : t.rows) {
        CHECK(cell_real(row[4]) == cell_real(t.rows[0][4]));
        CHECK(close(cell_real(row[1]) + cell_real(row[2]), cell_real(row[3]), 1e-15));
    }
}

TEST_CASE("cmd_series: exact numerator/denominator table") {
    const Table t = cmd_series("rstar", 8);
    CHECK(t.columns == std::vector<std::string>{"n", "numerator", "denominator"});
    auto row_text = [&](int n) {
        return std::get<std::string>(t.rows[static_cast<size_t>(n)][1]) + "/" +
               std::get<std::string>(t.rows[static_cast<size_t>(n)][2]);
    };
    CHECK(row_text(1) == "-1/1");
    CHECK(row_text(3) == "1/2");
    CHECK(row_text(7) == "-1/8");
    CHECK(row_text(4) == "0/1");
    CHECK_THROWS_AS(cmd_series("unknown", 8), std::invalid_argument);
}

TEST_CASE("cmd_sweep: deterministic across thread counts") {
    const Table a = cmd_sweep(0.2, 1.4, 25, 1);
    const Table b = cmd_sweep(0.2, 1.4, 25, 4);
    CHECK(render_csv(a) == render_csv(b));
    CHECK(a.rows.size() == 25);
    CHECK(close(cell_real(a.rows.front()[0]), 0.2, 1e-15));
    CHECK(close(cell_real(a.rows.back()[0]), 1.4, 1e-15));
    // past the localization threshold every closed-form column vanishes
    for (const auto& row : a.rows) {
        if (cell_real(row[0]) >= pi / 4) {
            CHECK(cell_real(row[1]) == 0.0);
            CHECK(cell_real(row[2]) == 0.0);
            CHECK(cell_real(row[3]) == 0.0);
        }
    }
    CHECK_THROWS_AS(cmd_sweep(0.0, 1.0, 5, 1), std::domain_error);
}

TEST_CASE("thread_cap honors QWLAB_THREADS") {
    setenv("QWLAB_THREADS", "3", 1);
    CHECK(thread_cap() == 3);
    unsetenv("QWLAB_THREADS");
    CHECK(thread_cap() >= 1);
}

TEST_CASE("JSON output mirrors the table under a metadata object") {
    RunConfig config = one_defect_config(pi / 6, 8);
    config.xmax = 3;
    const Table t = cmd_simulate(config);
    const std::string text = render_json(t, run_meta(config));
    const nlohmann::json doc = nlohmann::json::parse(text);
    CHECK(doc["meta"]["model"] == "one-defect");
    CHECK(close(doc["meta"]["xi"].get<double>(), pi / 6, 1e-15));
    CHECK(doc["meta"]["version"].is_string());
    CHECK(doc["columns"].size() == t.columns.size());
    CHECK(doc["rows"].size() == t.rows.size());
    CHECK(doc["rows"][0].size() == t.columns.size());
}

TEST_CASE("make_qubit normalizes and rejects the zero state") {
    RunConfig config = one_defect_config(pi / 6, 4);
    config.alpha = cplx(3.0, 0.0);
    config.beta = cplx(0.0, 4.0);
    const Amplitude2 q = make_qubit(config);
    CHECK(close(norm_sq(q), 1.0, 1e-15));
    CHECK(close(q.left, cplx(0.6, 0.0), 1e-15));

    config.alpha = cplx(0.0, 0.0);
    config.beta = cplx(0.0, 0.0);
    CHECK_THROWS_AS(make_qubit(config), std::invalid_argument);
}

TEST_CASE("run_verification passes on a clean build") {
    const auto results = run_verification();
    for (const auto& r : results) {
        INFO(r.name, ": ", r.detail);
        CHECK(r.pass);
    }
    std::string report;
    CHECK(print_verification_report(results, report) == 0);
    CHECK(report.find("[PASS]") != std::string::npos);
}
