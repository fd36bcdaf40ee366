#include "qwlab/pathsum.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "qwlab/power_series.hpp"
#include "qwlab/return_series.hpp"

namespace qwlab {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kSqrt2 = std::numbers::sqrt2;

void require_xi_localized(double xi) {
    if (!(xi > 0.0 && xi < kPi / 4)) {
        throw std::domain_error("xi must lie in the open interval (0, pi/4)");
    }
}

void require_unit(const Amplitude2& qubit) {
    if (std::abs(norm_sq(qubit) - 1.0) > 1e-12) {
        throw std::invalid_argument("qubit must be normalized");
    }
}

double rstar_as_double(int n) {
    return rstar_closed(n).convert_to<double>();
}

}  // namespace

XiStarBlock xi_star(double xi, int n) {
    if (n < 2) throw std::invalid_argument("first-return block index must be >= 2");
    XiStarBlock block;
    block.n = n;
    if (n % 2 != 0) return block;  // odd times carry no first return
    const double c = std::cos(xi);
    const double s = std::sin(xi);
    const cplx scale = rstar_as_double(n - 1) / kSqrt2;
    block.matrix = scale * Mat2{-s, c, -c, -s};
    return block;
}

Amplitude2 return_amplitude_renewal(double xi, const Amplitude2& qubit, int n) {
    if (n < 1) throw std::invalid_argument("n must be >= 1");
    require_unit(qubit);
    std::vector<Mat2> blocks(static_cast<size_t>(n) + 1);
    for (int j = 1; j <= n; ++j) blocks[static_cast<size_t>(j)] = xi_star(xi, 2 * j).matrix;

    std::vector<Mat2> g(static_cast<size_t>(n) + 1);
    g[0] = Mat2::identity();
    for (int m = 1; m <= n; ++m) {
        Mat2 acc;
        for (int j = 1; j <= m; ++j) {
            acc = acc + blocks[static_cast<size_t>(j)] * g[static_cast<size_t>(m - j)];
        }
        g[static_cast<size_t>(m)] = acc;
    }
    return g[static_cast<size_t>(n)].apply(qubit);
}

std::vector<Amplitude2> return_amplitude_genfun_table(double xi, const Amplitude2& qubit,
                                                      int nmax) {
    if (nmax < 0) throw std::invalid_argument("nmax must be >= 0");
    if (!(xi > 0.0 && xi < kPi / 2)) {
        throw std::domain_error("xi must lie in the open interval (0, pi/2)");
    }
    using LD = long double;
    using Series = PowerSeries<LD>;
    const LD c = std::cos(static_cast<LD>(xi));
    const LD s = std::sin(static_cast<LD>(xi));
    const LD sqrt2 = std::numbers::sqrt2_v<LD>;

    // Z(w) = -1 - w + sqrt(1 + w^2)
    Series one_plus_w2 = Series::constant(1.0L, nmax);
    if (nmax >= 2) one_plus_w2[2] = 1.0L;
    Series z = ps_sqrt(one_plus_w2);
    z[0] -= 1.0L;
    if (nmax >= 1) z[1] -= 1.0L;

    const Series den = Series::constant(2.0L, nmax) + (2.0L * sqrt2 * s) * z + z * z;
    const Series coef_a = divide(Series::constant(2.0L, nmax) + (sqrt2 * s) * z, den);
    const Series coef_b = divide((sqrt2 * c) * z, den);

    std::vector<Amplitude2> out(static_cast<size_t>(nmax) + 1);
    for (int n = 0; n <= nmax; ++n) {
        const double an = static_cast<double>(coef_a[n]);
        const double bn = static_cast<double>(coef_b[n]);
        out[static_cast<size_t>(n)] =
            Amplitude2{an * qubit.left + bn * qubit.right, an * qubit.right - bn * qubit.left};
    }
    return out;
}

Amplitude2 return_amplitude_genfun(double xi, const Amplitude2& qubit, int n) {
    return return_amplitude_genfun_table(xi, qubit, n).back();
}

AsymptoticParams theta0(double xi) {
    require_xi_localized(xi);
    const double c = std::cos(xi);
    const double s = std::sin(xi);
    const double d = 3.0 - 2.0 * kSqrt2 * s;
    const double cos0 = -(1.0 - kSqrt2 * s) * (1.0 - kSqrt2 * s) / d;
    const double sin0 = 2.0 * (kSqrt2 - s) * c / d;
    AsymptoticParams p;
    p.theta0 = std::atan2(sin0, cos0);
    p.amplitude_factor = 2.0 * (1.0 - kSqrt2 * s) / d;
    p.localized = true;
    return p;
}

Amplitude2 return_amplitude_asymptotic(double xi, const Amplitude2& qubit, int n) {
    const AsymptoticParams p = theta0(xi);
    const double cn = std::cos(n * p.theta0);
    const double sn = std::sin(n * p.theta0);
    const double f = p.amplitude_factor;
    return Amplitude2{f * (cn * qubit.left - sn * qubit.right),
                      f * (cn * qubit.right + sn * qubit.left)};
}

double return_prob_limit(double xi) {
    if (!(xi > 0.0 && xi < kPi / 2)) {
        throw std::domain_error("xi must lie in the open interval (0, pi/2)");
    }
    if (xi >= kPi / 4) return 0.0;
    const double s = std::sin(xi);
    const double d = 3.0 - 2.0 * kSqrt2 * s;
    const double t = 1.0 - kSqrt2 * s;
    return 4.0 * t * t / (d * d);
}

CgmvParams cgmv_params(double xi, const Amplitude2& qubit) {
    const double c = std::cos(xi);
    const double s = std::sin(xi);
    CgmvParams p;
    p.a = cplx(0.0, 1.0 / kSqrt2);
    p.b = cplx(0.0, s);
    p.rho_a = std::sqrt(1.0 - std::norm(p.a));
    p.rho_b = c;
    p.zeta_plus = cplx(c, s);
    p.zeta_minus = cplx(-c, s);
    p.omega = cplx(1.0, 0.0);
    p.sigma1 = 0.0;
    p.sigma2 = kPi;
    p.sigma = p.sigma1 + p.sigma2;
    p.theta = p.sigma / 2.0;
    p.tau1 = 0.0;
    p.tau2 = kPi;
    p.tau = p.tau1 + p.tau2;
    p.alpha_hat = qubit.left;
    // hat(beta) = exp(i((sigma2 - sigma1)/2 + tau2 - sigma2)) beta
    p.beta_hat = std::polar(1.0, (p.sigma2 - p.sigma1) / 2.0 + p.tau2 - p.sigma2) * qubit.right;
    return p;
}

double cgmv_limit(double xi, const Amplitude2& qubit, CgmvBranch branch) {
    require_xi_localized(xi);
    require_unit(qubit);
    const CgmvParams p = cgmv_params(xi, qubit);
    const cplx zeta = branch == CgmvBranch::M_plus ? p.zeta_plus : p.zeta_minus;
    const double prefactor = 1.0 - p.rho_a * p.rho_a / std::norm(zeta - p.a);
    const double numer = (std::norm(p.alpha_hat) - std::norm(p.beta_hat)) * p.b.real() +
                         2.0 * p.rho_b * (std::conj(p.omega * p.alpha_hat) * p.beta_hat).real();
    const double bracket = numer / std::sqrt(1.0 - p.b.imag() * p.b.imag());
    const double sign = branch == CgmvBranch::M_plus ? -1.0 : 1.0;
    return 0.5 * prefactor * prefactor * (1.0 + sign * bracket);
}

}  // namespace qwlab
