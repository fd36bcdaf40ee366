#include "qwlab/path_oracle.hpp"

#include <array>
#include <stdexcept>

namespace qwlab {

namespace {

using QMat = std::array<QuadraticRational, 4>;  // row major 2x2 over Q[sqrt(2)]

QMat mul(const QMat& x, const QMat& y) {
    return QMat{x[0] * y[0] + x[1] * y[2], x[0] * y[1] + x[1] * y[3],
                x[2] * y[0] + x[3] * y[2], x[2] * y[1] + x[3] * y[3]};
}

QMat add(const QMat& x, const QMat& y) {
    return QMat{x[0] + y[0], x[1] + y[1], x[2] + y[2], x[3] + y[3]};
}

// 1/sqrt(2) = (0 + (1/2) sqrt(2))
const QuadraticRational kInvSqrt2{rational(0), rational(1, 2)};
const QuadraticRational kZero{};

// Hadamard left/right movers: P = (1/sqrt2)[[1,1],[0,0]], Q = (1/sqrt2)[[0,0],[1,-1]].
const QMat kP{kInvSqrt2, kInvSqrt2, kZero, kZero};
const QMat kQ{kZero, kZero, kInvSqrt2, QuadraticRational{rational(0), rational(-1, 2)}};

// Depth-first walk over all step sequences from position 1 that stay >= 1 and
// land on 0 exactly at the last step. `acc` is the product of the matrices of
// the steps taken so far, newest on the left.
void enumerate(int position, int remaining, const QMat& acc, QMat& total) {
    if (remaining == 0) {
        if (position == 0) total = add(total, acc);
        return;
    }
    if (position < 1) return;
    if (position > remaining) return;                  // cannot reach 0 in time
    if ((position + remaining) % 2 != 0) return;       // parity obstruction
    enumerate(position - 1, remaining - 1, mul(kP, acc), total);
    enumerate(position + 1, remaining - 1, mul(kQ, acc), total);
}

}  // namespace

QuadraticRational first_return_weight_enumerated(int n) {
    if (n < 1) throw std::invalid_argument("path length must be >= 1");
    QMat total{};
    enumerate(1, n, QMat{QuadraticRational{rational(1), rational(0)}, kZero, kZero,
                         QuadraticRational{rational(1), rational(0)}},
              total);
    // coefficient of R = (1/sqrt2)[[1,-1],[0,0]] in the trace inner product basis
    return kInvSqrt2 * (total[0] + QuadraticRational{-total[1].a, -total[1].b});
}

}  // namespace qwlab
