#pragma once

#include <functional>
#include <optional>

#include "periodica/ensemble.hpp"
#include "periodica/noise.hpp"
#include "periodica/spec.hpp"

namespace periodica {

enum class Scheme { euler_maruyama, exponential_euler };

// Axis-aligned box used to clamp coefficient evaluation arguments. The
// hypotheses only bound f and g inside [alpha, beta]; outside it super-linear
// drifts can blow up raw Euler-Maruyama. Off by default; every clamped
// evaluation is counted into the ensemble provenance.
struct ClampBox {
    std::vector<double> lower;
    std::vector<double> upper;
};

struct IntegratorConfig {
    Scheme scheme = Scheme::euler_maruyama;
    std::optional<ClampBox> clamp_box;

    void validate(int dim) const;
};

// Euler-Maruyama: x_{k+1} = x_k + f(t_k, x_k) dt + g(t_k, x_k) dB_k, with
// diffusion at the left endpoint (Ito convention). init is n_paths x d
// row-major. Throws IntegrationBlowupError naming path and step on any
// non-finite state.
PathEnsemble integrate(const SdeSpec& spec, std::span<const double> init,
                       const NoiseEnsemble& noise, const TimeGrid& grid,
                       const IntegratorConfig& cfg = {});

// Per-path forcing F(p, t, u) for the relaxed equation
// du = (F - M u) dt + g(t, u) dB.
using ForcingFn =
    std::function<void(std::size_t, double, std::span<const double>, std::span<double>)>;

// Exponential Euler for the relaxed equation:
// u_{k+1} = e^{-M dt} u_k + ((1 - e^{-M dt})/M) F(t_k) + e^{-M dt} g(t_k,u_k) dB_k.
// Exact for pure decay and for constant forcing with g == 0.
PathEnsemble integrate_exponential(double relaxation, const ForcingFn& forcing,
                                   const DiffusionFn& diffusion, int dim_state,
                                   std::span<const double> init, const NoiseEnsemble& noise,
                                   const TimeGrid& grid, const IntegratorConfig& cfg = {});

} // namespace periodica
