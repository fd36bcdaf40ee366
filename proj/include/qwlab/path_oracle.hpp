#pragma once

#include "qwlab/power_series.hpp"

namespace qwlab {

// Element of Q[sqrt(2)], kept exact so path weights can be compared as rationals.
struct QuadraticRational {
    rational a{0};  // rational part
    rational b{0};  // coefficient of sqrt(2)

    friend QuadraticRational operator+(const QuadraticRational& x, const QuadraticRational& y) {
        return {x.a + y.a, x.b + y.b};
    }
    friend QuadraticRational operator*(const QuadraticRational& x, const QuadraticRational& y) {
        return {x.a * y.a + 2 * x.b * y.b, x.a * y.b + x.b * y.a};
    }
    friend bool operator==(const QuadraticRational& x, const QuadraticRational& y) {
        return x.a == y.a && x.b == y.b;
    }
};

// Exact reflection-basis coefficient of the sum over all n-step walk segments
// that start one site right of the origin, stay strictly right of it, and hit
// it for the first time at step n, with Hadamard coins throughout. Computed by
// exhaustive enumeration; independent of the series arithmetic it checks.
QuadraticRational first_return_weight_enumerated(int n);

}  // namespace qwlab
