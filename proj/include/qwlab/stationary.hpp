#pragma once

#include "qwlab/walk.hpp"

namespace qwlab {

// The eigenvalue problem has four closed-form solution branches: the qubit
// relation beta = -i alpha or beta = +i alpha, each with two eigenvalue signs.
enum class BetaSign { minus_i, plus_i };
enum class LambdaSign { plus, minus };

struct EigenBranch {
    BetaSign beta_sign = BetaSign::minus_i;
    LambdaSign lambda_sign = LambdaSign::plus;
};

inline constexpr EigenBranch kAllBranches[4] = {
    {BetaSign::minus_i, LambdaSign::plus},
    {BetaSign::minus_i, LambdaSign::minus},
    {BetaSign::plus_i, LambdaSign::plus},
    {BetaSign::plus_i, LambdaSign::minus},
};

// Closed-form generalized eigenvector of the one-defect evolution: unimodular
// eigenvalue lambda and geometric ratio theta_s, anchored by alpha at the origin.
struct EigenSolution {
    double xi = 0.0;
    EigenBranch branch;
    cplx alpha{1.0, 0.0};
    cplx beta{0.0, 0.0};  // derived: -i alpha or +i alpha
    cplx lambda{0.0, 0.0};
    cplx theta_s{0.0, 0.0};
};

// Build the branch solution; xi in (0, pi/2), alpha != 0.
EigenSolution eigensolution(double xi, EigenBranch branch, cplx alpha);

// Piecewise closed form of the eigenvector amplitude at site x.
Amplitude2 eval_amplitude(const EigenSolution& sol, int x);

// max over |x| <= W-1 of || lambda Psi(x) - P_{x+1} Psi(x+1) - Q_{x-1} Psi(x-1) ||,
// with amplitudes from eval_amplitude; optionally check with a perturbed lambda.
double verify_eigen_residual(const EigenSolution& sol, int window);
double eigen_residual_with_lambda(const EigenSolution& sol, cplx lambda, int window);

// mu(x) for the eigenvector family with alpha = c/sqrt(2), beta = +-ci/sqrt(2):
// |c|^2 at the origin, geometric decay with ratio 1/(3 - 2 sqrt(2) S) away from it.
double stationary_measure(double xi, cplx c, int x);

// Normalized version; defined for xi in (0, pi/4) only, where total mass is finite.
double stationary_prob_measure(double xi, int x);

// Closed-form total mass of stationary_measure over all of Z (xi in (0, pi/4)).
double stationary_total_mass(double xi, cplx c);

}  // namespace qwlab
