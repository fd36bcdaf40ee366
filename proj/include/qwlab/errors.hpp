#pragma once

#include <stdexcept>
#include <string>

namespace qwlab {

// Stepping would push amplitude support past the simulation window.
struct window_overflow : std::runtime_error {
    explicit window_overflow(const std::string& what) : std::runtime_error(what) {}
};

// Series square root requires a unit leading coefficient.
struct bad_leading_coefficient : std::invalid_argument {
    explicit bad_leading_coefficient(const std::string& what) : std::invalid_argument(what) {}
};

// The on-circle closed form for f0 only applies on the arcs where 1 - 2cos^2(theta) >= 0.
struct branch_ambiguity : std::domain_error {
    explicit branch_ambiguity(const std::string& what) : std::domain_error(what) {}
};

// Continued fraction truncation has not settled at the requested depth.
struct divergence_warning : std::runtime_error {
    explicit divergence_warning(const std::string& what) : std::runtime_error(what) {}
};

// Evaluation point is (numerically) a pole of the space-time generating function.
struct pole_error : std::runtime_error {
    explicit pole_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace qwlab
