#include "qwlab/genfun.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "qwlab/errors.hpp"

namespace qwlab {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kSqrt2 = std::numbers::sqrt2;

void require_disk(cplx z) {
    if (std::abs(z) > 1.0 + 1e-12) {
        throw std::domain_error("z must lie in the closed unit disk");
    }
}

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

void require_nonzero_entries(const CoinMatrix& u, int x) {
    if (u.a == cplx(0.0) || u.b == cplx(0.0) || u.c == cplx(0.0) || u.d == cplx(0.0)) {
        throw std::invalid_argument("coin at x=" + std::to_string(x) +
                                    " has a zero entry; the continued-fraction route needs "
                                    "all entries nonzero");
    }
}

}  // namespace

cplx f0_tilde(cplx z) {
    require_disk(z);
    const cplx z2 = z * z;
    // Re(z^4 + 1) >= 0 on the disk, so the principal root is the analytic branch
    // picked by f0(0) = 0.
    return (z2 + 1.0 - std::sqrt(z2 * z2 + 1.0)) / kSqrt2;
}

cplx f0_on_circle(double theta) {
    const double ct = std::cos(theta);
    const double st = std::sin(theta);
    const double disc = 1.0 - 2.0 * ct * ct;
    if (disc < 0.0) {
        throw branch_ambiguity("the on-circle form of f0 applies only where 1 - 2cos^2 >= 0");
    }
    const double sgn = st > 0.0 ? 1.0 : (st < 0.0 ? -1.0 : 0.0);
    return cplx(ct, st) * cplx(kSqrt2 * ct, sgn * std::sqrt(disc));
}

DefectContext::DefectContext(double xi) : xi_(xi), c_(std::cos(xi)), s_(std::sin(xi)) {
    if (!(xi > 0.0 && xi < kPi / 2)) {
        throw std::domain_error("xi must lie in the open interval (0, pi/2)");
    }
}

cplx DefectContext::f0(cplx z) const { return f0_tilde(z); }

cplx DefectContext::f0_prime(cplx z) const {
    const cplx z2 = z * z;
    return kSqrt2 * (z - z * z2 / std::sqrt(z2 * z2 + 1.0));
}

cplx DefectContext::gamma(cplx z) const {
    const cplx f = f0(z);
    return 1.0 - 2.0 * s_ * f + f * f;
}

cplx DefectContext::gamma_prime(cplx z) const {
    return (2.0 * f0(z) - 2.0 * s_) * f0_prime(z);
}

cplx DefectContext::lambda_plus(cplx z) const { return -z / (kSqrt2 - f0(z)); }

cplx DefectContext::lambda_minus(cplx z) const { return -lambda_plus(z); }

cplx contfrac_f(const CoinField& field, int x, Side side, cplx z, int depth) {
    if (depth < 1) throw std::invalid_argument("depth must be >= 1");
    if (!(std::abs(z) < 1.0)) {
        throw std::domain_error("continued-fraction evaluation requires |z| < 1");
    }

    auto eval = [&](int levels) {
        cplx f(0.0, 0.0);
        if (side == Side::plus) {
            // coins at x+levels down to x+1
            for (int y = x + levels - 1; y >= x; --y) {
                const CoinMatrix& u = field.coin_at(y + 1);
                require_nonzero_entries(u, y + 1);
                f = -(z * z) * u.det / u.c * (1.0 - std::norm(u.a) / (1.0 - u.c * f));
            }
        } else {
            for (int y = x - levels + 1; y <= x; ++y) {
                const CoinMatrix& u = field.coin_at(y - 1);
                require_nonzero_entries(u, y - 1);
                f = -(z * z) * u.det / u.b * (1.0 - std::norm(u.d) / (1.0 - u.b * f));
            }
        }
        return f;
    };

    const cplx here = eval(depth);
    if (depth > 1) {
        const cplx prev = eval(depth - 1);
        if (std::abs(here - prev) > 1e-8) {
            throw divergence_warning("continued fraction has not settled at depth " +
                                     std::to_string(depth));
        }
    }
    return here;
}

GammaDecomposition gamma_and_lambdas(double xi, cplx z) {
    const DefectContext ctx(xi);
    return GammaDecomposition{ctx.gamma(z), ctx.lambda_plus(z), ctx.lambda_minus(z)};
}

std::array<GammaRoot, 4> gamma_roots(double xi) {
    require_xi_localized(xi);
    const DefectContext ctx(xi);
    const double c = ctx.c();
    const double s = ctx.s();
    const double rd = std::sqrt(3.0 - 2.0 * kSqrt2 * s);
    const double ct = c / rd;
    const double st = (kSqrt2 - s) / rd;
    const double t1 = std::atan2(st, ct);

    std::array<GammaRoot, 4> roots = {
        GammaRoot{1, t1, cplx(s, c)},
        GammaRoot{2, t1 - kPi, cplx(s, c)},
        GammaRoot{3, -t1, cplx(s, -c)},
        GammaRoot{4, kPi - t1, cplx(s, -c)},
    };
    // one Newton polish step on gamma(e^{i theta}) along the circle
    for (auto& r : roots) {
        const cplx z = std::polar(1.0, r.theta);
        const cplx dgdtheta = cplx(0.0, 1.0) * z * ctx.gamma_prime(z);
        r.theta -= (ctx.gamma(z) / dgdtheta).real();
    }
    return roots;
}

Amplitude2 xi_tilde_x(double xi, cplx z, int x, const Amplitude2& qubit) {
    require_disk(z);
    const DefectContext ctx(xi);
    const double c = ctx.c();
    const double s = ctx.s();
    const cplx f = ctx.f0(z);
    const cplx g = ctx.gamma(z);
    if (std::abs(g) < 1e-14) throw pole_error("z is a pole of the generating function");

    const cplx alpha = qubit.left;
    const cplx beta = qubit.right;
    if (x == 0) {
        return Amplitude2{((1.0 - s * f) * alpha - c * f * beta) / g,
                          (c * f * alpha + (1.0 - s * f) * beta) / g};
    }
    if (x > 0) {
        const cplx lp = ctx.lambda_plus(z);
        const cplx t = ((s - f) * alpha - c * beta) / g;
        const cplx chain = std::pow(lp, x - 1);
        return Amplitude2{chain * lp * f * t, chain * z * t};
    }
    const cplx lm = ctx.lambda_minus(z);
    const cplx t = (c * alpha + (s - f) * beta) / g;
    const cplx chain = std::pow(lm, -x - 1);
    return Amplitude2{chain * z * t, chain * lm * f * t};
}

Amplitude2 xi_tilde_general(const CoinField& field, cplx z, int x, const Amplitude2& qubit,
                            int depth) {
    require_disk(z);
    const CoinMatrix& u0 = field.coin_at(0);
    require_nonzero_entries(u0, 0);
    const cplx f0p = contfrac_f(field, 0, Side::plus, z, depth);
    const cplx f0m = contfrac_f(field, 0, Side::minus, z, depth);
    const cplx g = 1.0 - u0.c * f0p - u0.b * f0m - u0.det * f0p * f0m;
    if (std::abs(g) < 1e-14) throw pole_error("z is a pole of the generating function");

    const cplx alpha = qubit.left;
    const cplx beta = qubit.right;
    const Amplitude2 at0{((1.0 - u0.b * f0m) * alpha + u0.d * f0p * beta) / g,
                         (u0.a * f0m * alpha + (1.0 - u0.c * f0p) * beta) / g};
    if (x == 0) return at0;
    if (x > 0) {
        cplx chain(1.0, 0.0);
        for (int y = 1; y <= x - 1; ++y) {
            const CoinMatrix& u = field.coin_at(y);
            require_nonzero_entries(u, y);
            chain *= z * u.d / (1.0 - u.c * contfrac_f(field, y, Side::plus, z, depth));
        }
        const CoinMatrix& ux = field.coin_at(x);
        require_nonzero_entries(ux, x);
        const cplx fx = contfrac_f(field, x, Side::plus, z, depth);
        const cplx lx = z * ux.d / (1.0 - ux.c * fx);
        const cplx row = u0.c * at0.left + u0.d * at0.right;
        return Amplitude2{chain * lx * fx * row, chain * z * row};
    }
    cplx chain(1.0, 0.0);
    for (int y = -1; y >= x + 1; --y) {
        const CoinMatrix& u = field.coin_at(y);
        require_nonzero_entries(u, y);
        chain *= z * u.a / (1.0 - u.b * contfrac_f(field, y, Side::minus, z, depth));
    }
    const CoinMatrix& ux = field.coin_at(x);
    require_nonzero_entries(ux, x);
    const cplx fx = contfrac_f(field, x, Side::minus, z, depth);
    const cplx lx = z * ux.a / (1.0 - ux.b * fx);
    const cplx row = u0.a * at0.left + u0.b * at0.right;
    return Amplitude2{chain * z * row, chain * lx * fx * row};
}

double residue_norm_sq(double xi, int x, const Amplitude2& qubit, int k) {
    require_xi_localized(xi);
    if (k < 1 || k > 4) throw std::invalid_argument("root index k must be in 1..4");
    const DefectContext ctx(xi);
    const double c = ctx.c();
    const double s = ctx.s();
    const GammaRoot root = gamma_roots(xi)[static_cast<size_t>(k - 1)];
    const cplx z = std::polar(1.0, root.theta);
    const cplx f = ctx.f0(z);
    const cplx dg = ctx.gamma_prime(z);

    const cplx alpha = qubit.left;
    const cplx beta = qubit.right;
    cplx num_l, num_r;
    if (x == 0) {
        num_l = (1.0 - s * f) * alpha - c * f * beta;
        num_r = c * f * alpha + (1.0 - s * f) * beta;
    } else if (x > 0) {
        const cplx lp = ctx.lambda_plus(z);
        const cplx t = (s - f) * alpha - c * beta;
        const cplx chain = std::pow(lp, x - 1);
        num_l = chain * lp * f * t;
        num_r = chain * z * t;
    } else {
        const cplx lm = ctx.lambda_minus(z);
        const cplx t = c * alpha + (s - f) * beta;
        const cplx chain = std::pow(lm, -x - 1);
        num_l = chain * z * t;
        num_r = chain * lm * f * t;
    }
    const double numeric = (std::norm(num_l) + std::norm(num_r)) / std::norm(dg);

    // closed form of the same residue norm
    const double d = 3.0 - 2.0 * kSqrt2 * s;
    const double t2 = (1.0 - kSqrt2 * s) * (1.0 - kSqrt2 * s) / (2.0 * d * d);
    const double qb = (k <= 2) ? std::norm(alpha - cplx(0.0, 1.0) * beta)
                               : std::norm(alpha + cplx(0.0, 1.0) * beta);
    const double closed =
        (x == 0) ? t2 * qb : (2.0 - kSqrt2 * s) * t2 * std::pow(1.0 / d, std::abs(x)) * qb;

    if (std::abs(numeric - closed) > 1e-9) {
        throw std::logic_error("residue norm routes disagree beyond tolerance");
    }
    return numeric;
}

std::array<ResidueContribution, 4> residue_contributions(double xi, int x,
                                                         const Amplitude2& qubit) {
    std::array<ResidueContribution, 4> out;
    for (int k = 1; k <= 4; ++k) {
        out[static_cast<size_t>(k - 1)] =
            ResidueContribution{x, k, residue_norm_sq(xi, x, qubit, k)};
    }
    return out;
}

double residue_sum_measure(double xi, int x, const Amplitude2& qubit) {
    require_unit(qubit);
    double total = 0.0;
    for (const ResidueContribution& r : residue_contributions(xi, x, qubit)) total += r.norm_sq;
    return total;
}

double time_averaged_limit_measure(double xi, int x) {
    if (!(xi > 0.0 && xi < kPi / 2)) {
        throw std::domain_error("xi must lie in the open interval (0, pi/2)");
    }
    if (xi >= kPi / 4) return 0.0;
    const double s = std::sin(xi);
    const double d = 3.0 - 2.0 * kSqrt2 * s;
    const double t = 1.0 - kSqrt2 * s;
    const double closed = (x == 0)
                              ? 2.0 * t * t / (d * d)
                              : 2.0 * (2.0 - kSqrt2 * s) * t * t / (d * d) *
                                    std::pow(1.0 / d, std::abs(x));
    const double residues = residue_sum_measure(xi, x, Amplitude2{cplx(1.0, 0.0), cplx(0.0, 0.0)});
    if (std::abs(closed - residues) > 1e-10) {
        throw std::logic_error("time-averaged measure routes disagree beyond tolerance");
    }
    return closed;
}

double tal_total_mass(double xi) {
    if (!(xi > 0.0 && xi < kPi / 2)) {
        throw std::domain_error("xi must lie in the open interval (0, pi/2)");
    }
    if (xi >= kPi / 4) return 0.0;
    const double s = std::sin(xi);
    const double d = 3.0 - 2.0 * kSqrt2 * s;
    const double closed = 2.0 * (1.0 - kSqrt2 * s) / d;

    // partial sum over |x| <= 200 plus the exact geometric tail
    double summed = time_averaged_limit_measure(xi, 0);
    for (int x = 1; x <= 200; ++x) summed += 2.0 * time_averaged_limit_measure(xi, x);
    const double q = 1.0 / d;
    const double head = 2.0 * (2.0 - kSqrt2 * s) * (1.0 - kSqrt2 * s) * (1.0 - kSqrt2 * s) / (d * d);
    summed += 2.0 * head * std::pow(q, 201) / (1.0 - q);
    if (std::abs(closed - summed) > 1e-10) {
        throw std::logic_error("total mass routes disagree beyond tolerance");
    }
    return closed;
}

}  // namespace qwlab
