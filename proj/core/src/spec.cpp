#include "periodica/spec.hpp"

#include <cmath>

namespace periodica {

double wrap_time(double t, double theta) {
    double w = t - theta * std::floor(t / theta);
    if (w >= theta) w = 0.0;
    return w;
}

SdeSpec periodic_wrap(const SdeSpec& spec) {
    spec.validate();
    if (spec.wrapped) return spec;
    SdeSpec out = spec;
    const double theta = spec.period;
    DriftFn f = spec.drift;
    DiffusionFn g = spec.diffusion;
    out.drift = [f, theta](double t, std::span<const double> x, std::span<double> fx) {
        f(wrap_time(t, theta), x, fx);
    };
    out.diffusion = [g, theta](double t, std::span<const double> x, std::span<double> gx) {
        g(wrap_time(t, theta), x, gx);
    };
    out.wrapped = true;
    return out;
}

} // namespace periodica
