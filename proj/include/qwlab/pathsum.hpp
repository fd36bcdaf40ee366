#pragma once

#include <vector>

#include "qwlab/walk.hpp"

namespace qwlab {

// Small dense complex 2x2, row major.
struct Mat2 {
    cplx m00{0.0, 0.0}, m01{0.0, 0.0}, m10{0.0, 0.0}, m11{0.0, 0.0};

    friend Mat2 operator*(const Mat2& a, const Mat2& b) {
        return Mat2{a.m00 * b.m00 + a.m01 * b.m10, a.m00 * b.m01 + a.m01 * b.m11,
                    a.m10 * b.m00 + a.m11 * b.m10, a.m10 * b.m01 + a.m11 * b.m11};
    }
    friend Mat2 operator+(const Mat2& a, const Mat2& b) {
        return Mat2{a.m00 + b.m00, a.m01 + b.m01, a.m10 + b.m10, a.m11 + b.m11};
    }
    friend Mat2 operator*(cplx v, const Mat2& a) {
        return Mat2{v * a.m00, v * a.m01, v * a.m10, v * a.m11};
    }
    Amplitude2 apply(const Amplitude2& v) const {
        return Amplitude2{m00 * v.left + m01 * v.right, m10 * v.left + m11 * v.right};
    }
    static Mat2 identity() { return Mat2{1.0, 0.0, 0.0, 1.0}; }
};

// First-return block through the defect at time n: zero for odd n, a scalar
// multiple r*_{n-1}/sqrt(2) of the fixed matrix [[-S,C],[-C,-S]] for even n.
struct XiStarBlock {
    int n = 0;
    Mat2 matrix;
};

XiStarBlock xi_star(double xi, int n);

// Psi_{2n}(0) via the renewal convolution G_m = sum_j XiStar_{2j} G_{m-j}, G_0 = I.
Amplitude2 return_amplitude_renewal(double xi, const Amplitude2& qubit, int n);

// Psi_{2n}(0) for n = 0..nmax by series coefficient extraction from the closed
// generating function in Z(w) = -1 - w + sqrt(1 + w^2).
std::vector<Amplitude2> return_amplitude_genfun_table(double xi, const Amplitude2& qubit,
                                                      int nmax);
Amplitude2 return_amplitude_genfun(double xi, const Amplitude2& qubit, int n);

// Rotation angle and amplitude of the large-n origin oscillation; xi in (0, pi/4).
struct AsymptoticParams {
    double theta0 = 0.0;            // in (pi/2, pi)
    double amplitude_factor = 0.0;  // 2(1 - sqrt(2) S)/(3 - 2 sqrt(2) S)
    bool localized = false;
};

AsymptoticParams theta0(double xi);

// Leading-order Psi_{2n}(0): the factor times the rotation of the qubit by n*theta0.
Amplitude2 return_amplitude_asymptotic(double xi, const Amplitude2& qubit, int n);

// lim r_{2n}(0): 4(1 - sqrt(2) S)^2/(3 - 2 sqrt(2) S)^2 for xi in (0, pi/4), else 0.
double return_prob_limit(double xi);

// Constants of the orthogonal-polynomial route specialized to this walk.
struct CgmvParams {
    cplx a, b;
    double rho_a = 0.0, rho_b = 0.0;
    cplx zeta_plus, zeta_minus;
    cplx omega;
    double sigma1 = 0.0, sigma2 = 0.0, sigma = 0.0, theta = 0.0;
    double tau1 = 0.0, tau2 = 0.0, tau = 0.0;
    cplx alpha_hat, beta_hat;
};

CgmvParams cgmv_params(double xi, const Amplitude2& qubit);

enum class CgmvBranch { M_plus, M_minus };

// Per-branch limit of the return probability from the orthogonal-polynomial
// closed form; the branch sum recovers return_prob_limit. xi in (0, pi/4).
double cgmv_limit(double xi, const Amplitude2& qubit, CgmvBranch branch);

}  // namespace qwlab
