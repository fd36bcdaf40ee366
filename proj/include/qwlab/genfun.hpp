#pragma once

#include <array>

#include "qwlab/walk.hpp"

namespace qwlab {

// Closed-form ingredients of the space-time generating function for the
// one-defect walk, all as functions on the closed unit disk.
class DefectContext {
  public:
    explicit DefectContext(double xi);  // xi in (0, pi/2)

    double xi() const { return xi_; }
    double c() const { return c_; }
    double s() const { return s_; }

    cplx f0(cplx z) const;            // (z^2 + 1 - sqrt(z^4 + 1))/sqrt(2), f0(0) = 0
    cplx f0_prime(cplx z) const;
    cplx gamma(cplx z) const;         // 1 - 2 S f0 + f0^2
    cplx gamma_prime(cplx z) const;
    cplx lambda_plus(cplx z) const;   // -z/(sqrt(2) - f0)
    cplx lambda_minus(cplx z) const;  // -lambda_plus

  private:
    double xi_, c_, s_;
};

// Defect-independent first-return generating function on the closed disk.
cplx f0_tilde(cplx z);

// On-circle form e^{i theta}(sqrt(2) cos(theta) + i sgn(sin(theta)) sqrt(1 - 2 cos^2(theta))).
// Only valid on the arcs where 1 - 2 cos^2(theta) >= 0; throws branch_ambiguity
// elsewhere (the disk formula still applies there).
cplx f0_on_circle(double theta);

enum class Side { plus, minus };

// Truncated continued-fraction evaluation of the one-sided first-return
// generating function of an arbitrary coin field at site x; |z| < 1, depth >= 1.
cplx contfrac_f(const CoinField& field, int x, Side side, cplx z, int depth);

inline constexpr int kDefaultContfracDepth = 80;

struct GammaDecomposition {
    cplx gamma;
    cplx lambda_plus;
    cplx lambda_minus;
};

GammaDecomposition gamma_and_lambdas(double xi, cplx z);

// One of the four unimodular zeros of gamma, in the order k = 1..4, together
// with the value the first-return generating function takes there (S + Ci for
// k = 1,2 and S - Ci for k = 3,4).
struct GammaRoot {
    int k = 0;
    double theta = 0.0;
    cplx f0_value;
};

std::array<GammaRoot, 4> gamma_roots(double xi);  // xi in (0, pi/4)

// Space-time generating function applied to the qubit, Xi_x(z) phi, using the
// one-defect closed forms. Throws pole_error when z is numerically a pole.
Amplitude2 xi_tilde_x(double xi, cplx z, int x, const Amplitude2& qubit);

// Same quantity for an arbitrary coin field via the continued-fraction route.
// Requires all used coin entries nonzero.
Amplitude2 xi_tilde_general(const CoinField& field, cplx z, int x, const Amplitude2& qubit,
                            int depth = kDefaultContfracDepth);

struct ResidueContribution {
    int x = 0;
    int k = 0;
    double norm_sq = 0.0;
};

// Squared residue norm of Xi_x(z) phi at the k-th gamma root, computed from the
// assembled numerator over gamma' and cross-checked against the closed form.
double residue_norm_sq(double xi, int x, const Amplitude2& qubit, int k);

// All four per-root contributions at site x.
std::array<ResidueContribution, 4> residue_contributions(double xi, int x,
                                                         const Amplitude2& qubit);

// Sum of the four residue contributions; qubit must be normalized.
double residue_sum_measure(double xi, int x, const Amplitude2& qubit);

// Closed-form time-averaged limit measure; zero for xi in [pi/4, pi/2). For
// xi in (0, pi/4) the value is cross-checked against the residue sum.
double time_averaged_limit_measure(double xi, int x);

// Closed-form total mass of the time-averaged limit measure, cross-checked
// against partial summation plus the geometric tail.
double tal_total_mass(double xi);

}  // namespace qwlab
