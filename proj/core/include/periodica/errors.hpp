#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace periodica {

// Problem definition is inconsistent (theta <= 0, bad dimensions, ...).
class InvalidSpecError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// BoundaryPair invariants fail (alpha >= beta somewhere, bad xi, ...).
class InvalidPairError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Array shapes disagree (noise vs grid vs spec dimensions).
class ShapeError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Index / coverage out of range (shift_noise beyond the ensemble, ...).
class RangeError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A path left the finite range during integration.
class IntegrationBlowupError : public std::runtime_error {
public:
    IntegrationBlowupError(std::size_t path, std::size_t step, double t)
        : std::runtime_error("integration blowup: non-finite state on path " +
                             std::to_string(path) + " at step " + std::to_string(step) +
                             " (t=" + std::to_string(t) + ")"),
          path(path), step(step), t(t) {}

    std::size_t path;
    std::size_t step;
    double t;
};

// Poincare iteration hit max_iter without meeting the tolerance.
class NonConvergenceError : public std::runtime_error {
public:
    NonConvergenceError(std::string msg, std::vector<double> residuals)
        : std::runtime_error(std::move(msg)), residual_history(std::move(residuals)) {}

    std::vector<double> residual_history;
};

// Persistent monotonicity failure in the sweep (hypothesis violation or dt too coarse).
class OrderBreakdownError : public std::runtime_error {
public:
    OrderBreakdownError(std::string msg, std::vector<double> fractions)
        : std::runtime_error(std::move(msg)), violation_history(std::move(fractions)) {}

    std::vector<double> violation_history;
};

// Configuration / expression / usage problems (CLI maps these to exit 2).
class ConfigError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace periodica
