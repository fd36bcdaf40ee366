#pragma once

#include <string>
#include <vector>

#include "qwlab/table.hpp"
#include "qwlab/walk.hpp"

namespace qwlab {

// Shared command configuration; the qubit is normalized on load.
struct RunConfig {
    enum class Model { OneDefect, Wojcik, Hadamard, Custom };
    enum class Format { Csv, Json };

    Model model = Model::OneDefect;
    double xi = 0.0;
    double phi = 0.5;
    std::string custom_file;

    cplx alpha{1.0, 0.0};
    cplx beta{0.0, 0.0};

    int steps = 100;
    int window = -1;  // -1: steps + 1
    int xmax = -1;    // -1: command-specific default
    Format format = Format::Csv;
    std::string out;  // empty: stdout
};

CoinField make_field(const RunConfig& config);
Amplitude2 make_qubit(const RunConfig& config);

// Measure profile rows (n, x, mu) at the final time, or at every time.
Table cmd_simulate(const RunConfig& config, bool per_time = false);

// Cesaro-averaged profile rows (x, mu_bar) over times 0..steps-1.
Table cmd_cesaro(const RunConfig& config);

// Stationary measure rows (x, mu): the |c|-parameterized eigenvector measure,
// or the normalized probability measure when prob is set (xi in (0, pi/4)).
Table cmd_stationary(const RunConfig& config, cplx c, bool prob);

// Time-averaged limit measure rows (x, mu_bar_closed, mu_bar_residue, cesaro_N)
// plus a total-mass footer; steps sets the Cesaro horizon N.
Table cmd_limit(const RunConfig& config);

// Return amplitude table (n, psi_l_sq, psi_r_sq, r_2n, r_limit) for n = 0..steps.
Table cmd_return_prob(const RunConfig& config);

// Exact coefficient table (n, numerator, denominator) of a named series.
Table cmd_series(const std::string& which, int terms);

// Closed-form observables on a uniform xi grid, computed in parallel.
Table cmd_sweep(double xi_min, double xi_max, int points, unsigned threads);

// Parallelism cap: QWLAB_THREADS when set, hardware concurrency otherwise.
unsigned thread_cap();

// Metadata block for the JSON envelope.
std::vector<std::pair<std::string, Cell>> run_meta(const RunConfig& config);

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string detail;
};

// Executable form of the library invariants; all checks must pass on a clean build.
std::vector<CheckResult> run_verification();

// Renders the check list; returns the number of failures.
int print_verification_report(const std::vector<CheckResult>& results, std::string& out);

}  // namespace qwlab
