#include "qwlab/stationary.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include <boost/multiprecision/cpp_complex.hpp>

namespace qwlab {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kSqrt2 = std::numbers::sqrt2;

void require_xi_open_half(double xi) {
    if (!(xi > 0.0 && xi < kPi / 2)) {
        throw std::domain_error("xi must lie in the open interval (0, pi/2)");
    }
}

// Branch closed forms over an arbitrary complex scalar. The eigenvector is a
// two-sided geometric sequence, so the residual check below evaluates it in
// 50-digit arithmetic: in double precision the growing branches (xi > pi/4)
// would drown the identity in roundoff proportional to the amplitude.
template <class Complex>
struct BranchForms {
    using Real = typename Complex::value_type;

    Real c, s, sqrt2, rd;
    Complex lambda, theta_s, alpha, beta;

    BranchForms(double xi, EigenBranch branch, cplx alpha_in) {
        using std::cos;
        using std::sin;
        using std::sqrt;
        const Real x = static_cast<Real>(xi);
        c = cos(x);
        s = sin(x);
        sqrt2 = sqrt(Real(2));
        rd = sqrt(Real(3) - 2 * sqrt2 * s);
        const Real sign = branch.lambda_sign == LambdaSign::plus ? Real(1) : Real(-1);
        alpha = Complex(Real(alpha_in.real()), Real(alpha_in.imag()));
        if (branch.beta_sign == BetaSign::minus_i) {
            beta = Complex(Real(0), Real(-1)) * alpha;
            lambda = Complex(sign * c / rd, sign * (sqrt2 - s) / rd);
            theta_s = Complex(Real(0), -sign / rd);
        } else {
            beta = Complex(Real(0), Real(1)) * alpha;
            lambda = Complex(sign * c / rd, -sign * (sqrt2 - s) / rd);
            theta_s = Complex(Real(0), sign / rd);
        }
    }

    Complex left_head() const { return (Real(1) - sqrt2 * s) * alpha + sqrt2 * c * beta; }
    Complex right_head() const { return sqrt2 * c * alpha + (sqrt2 * s - Real(1)) * beta; }

    // Psi(x) for the piecewise geometric closed form.
    std::pair<Complex, Complex> amplitude(int x) const {
        if (x == 0) return {alpha, beta};
        Complex ratio(Real(1), Real(0));
        if (x > 0) {
            for (int i = 0; i < x; ++i) ratio *= -theta_s;
            return {alpha * ratio, left_head() * ratio};
        }
        for (int i = 0; i < -x; ++i) ratio *= theta_s;
        return {right_head() * ratio, beta * ratio};
    }
};

using Complex50 = boost::multiprecision::cpp_complex_50;
using Real50 = Complex50::value_type;

double residual_mp(const EigenSolution& sol, cplx lambda_override, bool use_override,
                   int window) {
    if (window < 2) throw std::invalid_argument("window must be >= 2");
    const BranchForms<Complex50> forms(sol.xi, sol.branch, sol.alpha);
    const Complex50 lambda =
        use_override ? Complex50(Real50(lambda_override.real()), Real50(lambda_override.imag()))
                     : forms.lambda;
    const Real50 inv_sqrt2 = 1 / forms.sqrt2;

    // amplitudes at x = -window .. window
    std::vector<std::pair<Complex50, Complex50>> psi;
    psi.reserve(static_cast<size_t>(2 * window + 1));
    for (int x = -window; x <= window; ++x) psi.push_back(forms.amplitude(x));
    auto at = [&](int x) -> const std::pair<Complex50, Complex50>& {
        return psi[static_cast<size_t>(x + window)];
    };

    Real50 worst(0);
    for (int x = -(window - 1); x <= window - 1; ++x) {
        Complex50 res_l, res_r;
        if (x + 1 == 0) {
            res_l = lambda * at(x).first - (forms.c * at(x + 1).first + forms.s * at(x + 1).second);
        } else {
            res_l = lambda * at(x).first -
                    inv_sqrt2 * (at(x + 1).first + at(x + 1).second);
        }
        if (x - 1 == 0) {
            res_r =
                lambda * at(x).second - (forms.s * at(x - 1).first - forms.c * at(x - 1).second);
        } else {
            res_r = lambda * at(x).second -
                    inv_sqrt2 * (at(x - 1).first - at(x - 1).second);
        }
        const Real50 norm = sqrt(boost::multiprecision::norm(res_l) +
                                 boost::multiprecision::norm(res_r));
        if (norm > worst) worst = norm;
    }
    return worst.convert_to<double>();
}

}  // namespace

EigenSolution eigensolution(double xi, EigenBranch branch, cplx alpha) {
    require_xi_open_half(xi);
    if (alpha == cplx(0.0, 0.0)) throw std::invalid_argument("alpha must be nonzero");

    const BranchForms<std::complex<double>> forms(xi, branch, alpha);
    EigenSolution sol;
    sol.xi = xi;
    sol.branch = branch;
    sol.alpha = alpha;
    sol.beta = forms.beta;
    sol.lambda = forms.lambda;
    sol.theta_s = forms.theta_s;
    return sol;
}

Amplitude2 eval_amplitude(const EigenSolution& sol, int x) {
    const BranchForms<std::complex<double>> forms(sol.xi, sol.branch, sol.alpha);
    const auto [left, right] = forms.amplitude(x);
    return Amplitude2{left, right};
}

double eigen_residual_with_lambda(const EigenSolution& sol, cplx lambda, int window) {
    return residual_mp(sol, lambda, true, window);
}

double verify_eigen_residual(const EigenSolution& sol, int window) {
    return residual_mp(sol, cplx(0.0, 0.0), false, window);
}

double stationary_measure(double xi, cplx c, int x) {
    require_xi_open_half(xi);
    const double s = std::sin(xi);
    const double c2 = std::norm(c);
    if (x == 0) return c2;
    const double d = 3.0 - 2.0 * kSqrt2 * s;
    return (2.0 - kSqrt2 * s) * c2 * std::pow(1.0 / d, std::abs(x));
}

double stationary_total_mass(double xi, cplx c) {
    if (!(xi > 0.0 && xi < kPi / 4)) {
        throw std::domain_error("total mass is finite only for xi in (0, pi/4)");
    }
    const double s = std::sin(xi);
    return (3.0 - 2.0 * kSqrt2 * s) / (1.0 - kSqrt2 * s) * std::norm(c);
}

double stationary_prob_measure(double xi, int x) {
    if (!(xi > 0.0 && xi < kPi / 4)) {
        throw std::domain_error(
            "stationary probability measure requires xi in (0, pi/4); "
            "the unnormalized measure has infinite mass otherwise");
    }
    const double s = std::sin(xi);
    const double d = 3.0 - 2.0 * kSqrt2 * s;
    // normalization recomputed from the total-mass formula
    const double c2 = 1.0 / (d / (1.0 - kSqrt2 * s));
    if (x == 0) return c2;
    return (2.0 - kSqrt2 * s) * c2 * std::pow(1.0 / d, std::abs(x));
}

}  // namespace qwlab
