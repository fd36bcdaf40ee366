#include "qwlab/walk.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "qwlab/errors.hpp"

namespace qwlab {

double norm_sq(const Amplitude2& a) {
    return std::norm(a.left) + std::norm(a.right);
}

double WalkState::total_norm_sq() const {
    double s = 0.0;
    for (const auto& a : amps) s += norm_sq(a);
    return s;
}

WalkState point_mass(const Amplitude2& qubit, int window) {
    if (window < 1) throw std::invalid_argument("window must be positive");
    WalkState s;
    s.time = 0;
    s.window = window;
    s.amps.assign(static_cast<size_t>(2 * window + 1), Amplitude2{});
    s.at(0) = qubit;
    return s;
}

WalkState step(const WalkState& state, const CoinField& field) {
    const int w = state.window;
    if (state.time + 1 > w) {
        throw window_overflow("step at time " + std::to_string(state.time) +
                              " would overflow window " + std::to_string(w));
    }
    if (norm_sq(state.at(-w)) != 0.0 || norm_sq(state.at(w)) != 0.0) {
        throw window_overflow("amplitude support already touches the window boundary");
    }

    WalkState next;
    next.time = state.time + 1;
    next.window = w;
    next.amps.assign(state.amps.size(), Amplitude2{});
    for (int x = -w; x <= w; ++x) {
        Amplitude2 out;
        if (x + 1 <= w) {
            const CoinMatrix& u = field.coin_at(x + 1);
            const Amplitude2& in = state.at(x + 1);
            out.left += u.a * in.left + u.b * in.right;
        }
        if (x - 1 >= -w) {
            const CoinMatrix& u = field.coin_at(x - 1);
            const Amplitude2& in = state.at(x - 1);
            out.right += u.c * in.left + u.d * in.right;
        }
        next.at(x) = out;
    }
    return next;
}

WalkState evolve(const WalkState& state, const CoinField& field, int n) {
    if (n < 0) throw std::invalid_argument("step count must be nonnegative");
    if (state.time + n > state.window) {
        throw window_overflow("evolving " + std::to_string(n) +
                              " steps would overflow window " + std::to_string(state.window));
    }
    WalkState s = state;
    for (int i = 0; i < n; ++i) s = step(s, field);
    return s;
}

MeasureProfile measure(const WalkState& state) {
    MeasureProfile m;
    m.window = state.window;
    m.values.resize(state.amps.size());
    m.total = 0.0;
    for (size_t i = 0; i < state.amps.size(); ++i) {
        m.values[i] = norm_sq(state.amps[i]);
        m.total += m.values[i];
    }
    return m;
}

MeasureProfile cesaro_average(const CoinField& field, const Amplitude2& qubit, int num_times) {
    if (num_times < 1) throw std::invalid_argument("number of averaged times must be >= 1");
    if (std::abs(norm_sq(qubit) - 1.0) > 1e-12) {
        throw std::invalid_argument("initial qubit must be normalized");
    }
    const int w = num_times + 1;
    WalkState s = point_mass(qubit, w);

    MeasureProfile avg;
    avg.window = w;
    avg.values.assign(s.amps.size(), 0.0);
    for (int n = 0; n < num_times; ++n) {
        if (n > 0) s = step(s, field);
        for (size_t i = 0; i < s.amps.size(); ++i) avg.values[i] += norm_sq(s.amps[i]);
    }
    avg.total = 0.0;
    for (auto& v : avg.values) {
        v /= num_times;
        avg.total += v;
    }
    return avg;
}

}  // namespace qwlab
