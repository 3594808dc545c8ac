#pragma once

#include <functional>
#include <span>
#include <string>

#include "periodica/errors.hpp"

namespace periodica {

// Uniform grid over [t_start, t_end]. Nodes are always computed as
// t_start + k*dt from the same expression, never by accumulation, so a
// wrapped coefficient sees bit-identical times at every refinement level.
struct TimeGrid {
    double t_start = 0.0;
    double t_end = 1.0;
    int n_steps = 1;

    double dt() const { return (t_end - t_start) / n_steps; }
    double time_at(int k) const { return t_start + k * dt(); }

    void validate() const {
        if (n_steps < 1 || !(dt() > 0.0))
            throw InvalidSpecError("TimeGrid: need n_steps >= 1 and t_end > t_start");
    }
};

// Vector-valued drift f(t, x) and diffusion g(t, x). The diffusion writes a
// d x r matrix in row-major order (row i = noise loadings of component i).
using DriftFn = std::function<void(double, std::span<const double>, std::span<double>)>;
using DiffusionFn = std::function<void(double, std::span<const double>, std::span<double>)>;

// The problem: dX = f(t,X) dt + g(t,X) dB on [0, theta].
struct SdeSpec {
    DriftFn drift;
    DiffusionFn diffusion;
    int dim_state = 1;
    int dim_noise = 1;
    double period = 1.0;
    std::string name;
    bool wrapped = false;

    void validate() const {
        if (!(period > 0.0)) throw InvalidSpecError("SdeSpec: period must be positive");
        if (dim_state < 1 || dim_noise < 1)
            throw InvalidSpecError("SdeSpec: dimensions must be positive");
        if (!drift || !diffusion) throw InvalidSpecError("SdeSpec: missing coefficients");
    }
};

// t mod theta with exact multiples mapping to 0, so the wrap is continuous
// at period boundaries.
double wrap_time(double t, double theta);

// Returns a spec whose coefficients are evaluated at t mod theta. Idempotent.
SdeSpec periodic_wrap(const SdeSpec& spec);

} // namespace periodica
