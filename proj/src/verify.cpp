#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdio>
#include <numbers>
#include <vector>

#include "qwlab/cli.hpp"
#include "qwlab/genfun.hpp"
#include "qwlab/path_oracle.hpp"
#include "qwlab/pathsum.hpp"
#include "qwlab/return_series.hpp"
#include "qwlab/stationary.hpp"

namespace qwlab {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kSqrt2 = std::numbers::sqrt2;

std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.3g", v);
    return buf;
}

const Amplitude2 kQubitGrid[5] = {
    {cplx(1.0, 0.0), cplx(0.0, 0.0)},
    {cplx(0.0, 0.0), cplx(1.0, 0.0)},
    {cplx(1.0 / kSqrt2, 0.0), cplx(0.0, 1.0 / kSqrt2)},
    {cplx(1.0 / kSqrt2, 0.0), cplx(0.0, -1.0 / kSqrt2)},
    {cplx(0.6, 0.0), cplx(0.0, 0.8)},
};

CheckResult check_norm_conservation() {
    double worst = 0.0;
    const Amplitude2 qubit{cplx(1.0 / kSqrt2, 0.0), cplx(0.0, 1.0 / kSqrt2)};
    for (const CoinField& field : {CoinField::one_defect(kPi / 6), CoinField::wojcik(0.3),
                                   CoinField::hadamard()}) {
        WalkState s = point_mass(qubit, 61);
        for (int n = 0; n < 60; ++n) {
            s = step(s, field);
            worst = std::max(worst, std::abs(s.total_norm_sq() - 1.0));
        }
    }
    return {"norm conserved over 60 steps for all coin fields", worst < 1e-12,
            "max |norm-1| = " + fmt(worst)};
}

CheckResult check_light_cone_parity() {
    const Amplitude2 qubit{cplx(0.6, 0.0), cplx(0.0, 0.8)};
    WalkState s = point_mass(qubit, 30);
    bool ok = true;
    for (int n = 1; n <= 25; ++n) {
        s = step(s, CoinField::one_defect(kPi / 5));
        for (int x = -30; x <= 30; ++x) {
            const bool outside = std::abs(x) > n || ((n + x) % 2 != 0);
            if (outside && norm_sq(s.at(x)) != 0.0) ok = false;
        }
    }
    return {"light cone and parity zeros are exact", ok, ""};
}

CheckResult check_defect_free_reduction() {
    const Amplitude2 qubit{cplx(0.8, 0.0), cplx(0.0, -0.6)};
    WalkState a = point_mass(qubit, 41);
    WalkState b = point_mass(qubit, 41);
    bool identical = true;
    for (int n = 0; n < 40; ++n) {
        a = step(a, CoinField::one_defect(kPi / 4));
        b = step(b, CoinField::hadamard());
        for (size_t i = 0; i < a.amps.size(); ++i) {
            if (a.amps[i].left != b.amps[i].left || a.amps[i].right != b.amps[i].right) {
                identical = false;
            }
        }
    }
    return {"one-defect walk at xi=pi/4 equals the homogeneous walk bitwise", identical, ""};
}

CheckResult check_eigen_residual_grid() {
    double worst = 0.0;
    for (double xi : {kPi / 8, kPi / 6, kPi / 5, kPi / 3, 0.4 * kPi, 0.15, 1.45}) {
        for (const EigenBranch& branch : kAllBranches) {
            const EigenSolution sol = eigensolution(xi, branch, cplx(0.3, -0.4));
            worst = std::max(worst, verify_eigen_residual(sol, 50));
        }
    }
    return {"eigenvector residual < 1e-12 on angle/branch grid", worst < 1e-12,
            "max residual = " + fmt(worst)};
}

CheckResult check_perturbed_lambda_rejected() {
    const EigenSolution sol =
        eigensolution(kPi / 6, {BetaSign::minus_i, LambdaSign::plus}, cplx(1.0, 0.0));
    const double res = eigen_residual_with_lambda(sol, sol.lambda * 1.01, 50);
    return {"perturbed eigenvalue rejected by the residual check", res > 1e-3,
            "residual = " + fmt(res)};
}

CheckResult check_stationary_measure_shape() {
    bool ok = true;
    double worst = 0.0;
    for (double xi : {kPi / 8, kPi / 6, 0.2}) {
        const double s = std::sin(xi);
        const double q = 1.0 / (3.0 - 2.0 * kSqrt2 * s);
        const cplx c(0.7, 0.4);
        for (int x = 1; x <= 30; ++x) {
            if (stationary_measure(xi, c, x) != stationary_measure(xi, c, -x)) ok = false;
            worst = std::max(worst, std::abs(stationary_measure(xi, c, x + 1) /
                                                 stationary_measure(xi, c, x) -
                                             q));
        }
        // partial sum plus geometric tail against the closed-form total
        double total = stationary_measure(xi, c, 0);
        for (int x = 1; x <= 200; ++x) total += 2.0 * stationary_measure(xi, c, x);
        total += 2.0 * stationary_measure(xi, c, 200) * q / (1.0 - q);
        if (std::abs(total - stationary_total_mass(xi, c)) > 1e-10) ok = false;

        double prob = stationary_prob_measure(xi, 0);
        for (int x = 1; x <= 60; ++x) prob += 2.0 * stationary_prob_measure(xi, x);
        prob += 2.0 * stationary_prob_measure(xi, 60) * q / (1.0 - q);
        if (std::abs(prob - 1.0) > 1e-10) ok = false;
    }
    return {"stationary measure symmetry, decay ratio, and total mass", ok && worst < 1e-12,
            "max ratio deviation = " + fmt(worst)};
}

CheckResult check_rstar_closed_form() {
    const RationalSeries series = rstar_series(200);
    bool ok = true;
    for (int n = 1; n <= 200; ++n) {
        if (series[n] != rstar_closed(n)) ok = false;
    }
    return {"r* series coefficients match the closed form exactly to order 200", ok, ""};
}

CheckResult check_series_sqrt_roundtrip() {
    RationalSeries a = RationalSeries::constant(1, 64);
    a[1] = 1;
    a[2] = rational(3, 7);
    a[5] = rational(-1, 2);
    const RationalSeries s = ps_sqrt(a);
    return {"series square root squares back exactly", s * s == a, ""};
}

CheckResult check_path_enumeration_oracle() {
    const RationalSeries series = first_return_series_plus(12);
    bool ok = true;
    for (int n = 1; n <= 12; ++n) {
        const QuadraticRational w = first_return_weight_enumerated(n);
        if (w.b != 0 || w.a != series[n]) ok = false;
    }
    return {"first-return coefficients match exhaustive path enumeration (n <= 12)", ok, ""};
}

CheckResult check_triple_oracle() {
    double worst = 0.0;
    const Amplitude2 qubit{cplx(0.6, 0.0), cplx(0.0, 0.8)};
    for (double xi : {kPi / 8, kPi / 6, kPi / 5, kPi / 4, kPi / 3}) {
        const CoinField field = CoinField::one_defect(xi);
        const auto extracted = return_amplitude_genfun_table(xi, qubit, 30);
        WalkState s = point_mass(qubit, 62);
        for (int n = 1; n <= 30; ++n) {
            s = step(step(s, field), field);
            const Amplitude2 sim = s.at(0);
            const Amplitude2 renewal = return_amplitude_renewal(xi, qubit, n);
            const Amplitude2 series = extracted[static_cast<size_t>(n)];
            worst = std::max({worst, std::abs(sim.left - renewal.left),
                              std::abs(sim.right - renewal.right),
                              std::abs(sim.left - series.left),
                              std::abs(sim.right - series.right),
                              std::abs(renewal.left - series.left),
                              std::abs(renewal.right - series.right)});
        }
    }
    return {"return amplitude: simulation, renewal, and series extraction agree", worst < 1e-10,
            "max pairwise deviation = " + fmt(worst)};
}

CheckResult check_odd_time_vanishing() {
    const Amplitude2 qubit{cplx(1.0 / kSqrt2, 0.0), cplx(0.0, 1.0 / kSqrt2)};
    WalkState s = point_mass(qubit, 42);
    bool ok = true;
    for (int n = 1; n <= 41; ++n) {
        s = step(s, CoinField::one_defect(0.4));
        if (n % 2 == 1 && norm_sq(s.at(0)) != 0.0) ok = false;
    }
    return {"origin amplitude vanishes identically at odd times", ok, ""};
}

CheckResult check_return_prob_convergence() {
    const Amplitude2 qubit{cplx(1.0, 0.0), cplx(0.0, 0.0)};
    const Amplitude2 a = return_amplitude_genfun(kPi / 6, qubit, 2000);
    const double r = norm_sq(a);
    const double limit = return_prob_limit(kPi / 6);
    const bool ok_localized = std::abs(r - limit) / limit < 0.02;
    const Amplitude2 b = return_amplitude_genfun(kPi / 4, qubit, 2000);
    const bool ok_flat = norm_sq(b) < 0.01;
    return {"squared return amplitude approaches its closed-form limit", ok_localized && ok_flat,
            "r_4000 = " + fmt(r) + " vs " + fmt(limit)};
}

CheckResult check_cgmv_consistency() {
    double worst = 0.0;
    for (double xi : {0.1, kPi / 8, kPi / 6, kPi / 5, 0.75}) {
        for (const Amplitude2& qubit : kQubitGrid) {
            const double sum = cgmv_limit(xi, qubit, CgmvBranch::M_plus) +
                               cgmv_limit(xi, qubit, CgmvBranch::M_minus);
            worst = std::max(worst, std::abs(sum - return_prob_limit(xi)));
        }
    }
    return {"orthogonal-polynomial branch sum equals the return probability limit",
            worst < 1e-12, "max deviation = " + fmt(worst)};
}

CheckResult check_asymptotic_phase() {
    const Amplitude2 qubit{cplx(0.6, 0.0), cplx(0.0, 0.8)};
    const auto amps = return_amplitude_genfun_table(kPi / 6, qubit, 2001);
    const double angle = theta0(kPi / 6).theta0;
    double worst = 0.0;
    for (int n = 1500; n < 2000; ++n) {
        const Amplitude2& u = amps[static_cast<size_t>(n)];
        const Amplitude2& v = amps[static_cast<size_t>(n + 1)];
        const double nu = std::sqrt(norm_sq(u));
        const double nv = std::sqrt(norm_sq(v));
        const cplx inner = std::conj(u.left) * v.left + std::conj(u.right) * v.right;
        const double cosang = std::clamp(inner.real() / (nu * nv), -1.0, 1.0);
        worst = std::max(worst, std::abs(std::acos(cosang) - angle));
    }
    return {"origin amplitude rotates by theta0 per period at large times", worst < 1e-2,
            "max angle deviation = " + fmt(worst)};
}

CheckResult check_residue_vs_closed_form() {
    double worst = 0.0;
    for (double xi : {kPi / 8, kPi / 6, kPi / 5}) {
        for (const Amplitude2& qubit : kQubitGrid) {
            for (int x = -20; x <= 20; ++x) {
                worst = std::max(worst, std::abs(residue_sum_measure(xi, x, qubit) -
                                                 time_averaged_limit_measure(xi, x)));
            }
        }
    }
    return {"residue sum equals the closed-form time-averaged measure", worst < 1e-10,
            "max deviation = " + fmt(worst)};
}

CheckResult check_qubit_independence() {
    double worst = 0.0;
    for (int x = -20; x <= 20; ++x) {
        const double ref = residue_sum_measure(kPi / 6, x, kQubitGrid[0]);
        for (const Amplitude2& qubit : kQubitGrid) {
            worst = std::max(worst, std::abs(residue_sum_measure(kPi / 6, x, qubit) - ref));
        }
    }
    return {"time-averaged measure is independent of the initial qubit", worst < 1e-10,
            "max spread = " + fmt(worst)};
}

CheckResult check_stationary_link() {
    const double xi = kPi / 6;
    const double s = std::sin(xi);
    const double d = 3.0 - 2.0 * kSqrt2 * s;
    const double mass = 2.0 * (1.0 - kSqrt2 * s) / d;
    const cplx c_param(kSqrt2 * (1.0 - kSqrt2 * s) / d, 0.0);
    double worst = 0.0;
    for (int x = -50; x <= 50; ++x) {
        const double target = time_averaged_limit_measure(xi, x);
        worst = std::max(worst, std::abs(mass * stationary_prob_measure(xi, x) - target));
        worst = std::max(worst, std::abs(stationary_measure(xi, c_param, x) - target));
    }
    return {"stationary measure with matched scale equals the time-averaged measure",
            worst < 1e-12, "max deviation = " + fmt(worst)};
}

CheckResult check_gamma_roots() {
    double worst_gamma = 0.0;
    double worst_f0 = 0.0;
    for (double xi : {kPi / 8, kPi / 6, kPi / 5, 0.2}) {
        const DefectContext ctx(xi);
        for (const GammaRoot& root : gamma_roots(xi)) {
            const cplx z = std::polar(1.0, root.theta);
            worst_gamma = std::max(worst_gamma, std::abs(ctx.gamma(z)));
            worst_f0 = std::max(worst_f0, std::abs(ctx.f0(z) - root.f0_value));
        }
    }
    return {"gamma roots are unimodular zeros with the stated boundary values",
            worst_gamma < 1e-10 && worst_f0 < 1e-10,
            "max |gamma| = " + fmt(worst_gamma) + ", max f0 dev = " + fmt(worst_f0)};
}

CheckResult check_gamma_derivative() {
    double worst = 0.0;
    for (double xi : {kPi / 8, kPi / 6, kPi / 5}) {
        const double c = std::cos(xi);
        const double s = std::sin(xi);
        const double d = 3.0 - 2.0 * kSqrt2 * s;
        const double expected = 4.0 * c * c * d * d / ((1.0 - kSqrt2 * s) * (1.0 - kSqrt2 * s));
        const double theta = gamma_roots(xi)[0].theta;
        // five-point stencil in long double for |d gamma / d theta|^2
        const long double sl = s;
        auto g = [&](long double t) {
            const std::complex<long double> z = std::polar(1.0L, t);
            const std::complex<long double> z2 = z * z;
            const std::complex<long double> f =
                (z2 + 1.0L - std::sqrt(z2 * z2 + 1.0L)) / std::numbers::sqrt2_v<long double>;
            return 1.0L - 2.0L * sl * f + f * f;
        };
        // theta^(1) sits near the branch point at pi/4, so the stencil needs a
        // small step; long double keeps the cancellation error below that.
        const long double h = 1e-5L;
        const std::complex<long double> deriv =
            (-g(theta + 2 * h) + 8.0L * g(theta + h) - 8.0L * g(theta - h) + g(theta - 2 * h)) /
            (12.0L * h);
        worst = std::max(worst, std::abs(static_cast<double>(std::norm(deriv)) - expected));
    }
    return {"gamma derivative magnitude at the roots matches its closed form", worst < 1e-9,
            "max deviation = " + fmt(worst)};
}

CheckResult check_cesaro_convergence() {
    const Amplitude2 qubit{cplx(1.0 / kSqrt2, 0.0), cplx(0.0, 1.0 / kSqrt2)};
    const CoinField field = CoinField::one_defect(kPi / 6);
    bool decreasing = true;
    double final_rel = 0.0;
    std::vector<double> prev;
    for (int n : {250, 500, 1000, 2000}) {
        const MeasureProfile avg = cesaro_average(field, qubit, n);
        std::vector<double> err;
        for (int x : {-2, -1, 0, 1, 2}) {
            err.push_back(std::abs(avg.at(x) - time_averaged_limit_measure(kPi / 6, x)));
        }
        if (!prev.empty()) {
            for (size_t i = 0; i < err.size(); ++i) {
                if (err[i] >= prev[i]) decreasing = false;
            }
        }
        prev = err;
        if (n == 2000) {
            for (int x : {-2, -1, 0, 1, 2}) {
                const double target = time_averaged_limit_measure(kPi / 6, x);
                final_rel = std::max(final_rel, std::abs(avg.at(x) - target) / target);
            }
        }
    }
    return {"Cesaro averages converge toward the closed-form limit measure",
            decreasing && final_rel < 0.05, "relative error at N=2000: " + fmt(final_rel)};
}

}  // namespace

std::vector<CheckResult> run_verification() {
    return {
        check_norm_conservation(),
        check_light_cone_parity(),
        check_defect_free_reduction(),
        check_eigen_residual_grid(),
        check_perturbed_lambda_rejected(),
        check_stationary_measure_shape(),
        check_rstar_closed_form(),
        check_series_sqrt_roundtrip(),
        check_path_enumeration_oracle(),
        check_triple_oracle(),
        check_odd_time_vanishing(),
        check_return_prob_convergence(),
        check_cgmv_consistency(),
        check_asymptotic_phase(),
        check_residue_vs_closed_form(),
        check_qubit_independence(),
        check_stationary_link(),
        check_gamma_roots(),
        check_gamma_derivative(),
        check_cesaro_convergence(),
    };
}

}  // namespace qwlab
