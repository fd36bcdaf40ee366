#pragma once

#include <vector>

#include "qwlab/coin.hpp"

namespace qwlab {

// Two-component amplitude at one site: left and right chirality.
struct Amplitude2 {
    cplx left{0.0, 0.0};
    cplx right{0.0, 0.0};
};

double norm_sq(const Amplitude2& a);

// Amplitude field on the window x in [-window, window] at a given time.
struct WalkState {
    int time = 0;
    int window = 0;
    std::vector<Amplitude2> amps;  // index x + window

    const Amplitude2& at(int x) const { return amps[static_cast<size_t>(x + window)]; }
    Amplitude2& at(int x) { return amps[static_cast<size_t>(x + window)]; }
    double total_norm_sq() const;
};

// State concentrated at the origin with the given qubit.
WalkState point_mass(const Amplitude2& qubit, int window);

// Nonnegative weight per site plus its sum.
struct MeasureProfile {
    int window = 0;
    std::vector<double> values;  // index x + window
    double total = 0.0;

    double at(int x) const { return values[static_cast<size_t>(x + window)]; }
};

// One time step: new(x) = P_{x+1} old(x+1) + Q_{x-1} old(x-1).
// Throws window_overflow if the support could leave the window.
WalkState step(const WalkState& state, const CoinField& field);

// n iterated steps.
WalkState evolve(const WalkState& state, const CoinField& field, int n);

// mu(x) = |left|^2 + |right|^2.
MeasureProfile measure(const WalkState& state);

// Average of the time-n measures over n = 0..N-1 for the walk started at the
// origin with the given unit qubit. Window is sized internally so evolution is exact.
MeasureProfile cesaro_average(const CoinField& field, const Amplitude2& qubit, int num_times);

}  // namespace qwlab
