#include "periodica/integrate.hpp"

#include <atomic>
#include <cmath>
#include <cstring>

#include "periodica/parallel.hpp"

namespace periodica {

namespace {

inline bool all_finite(std::span<const double> x) {
    for (double v : x)
        if (!std::isfinite(v)) return false;
    return true;
}

inline std::uint64_t clamp_into(std::span<const double> x, const ClampBox& box,
                                std::span<double> out) {
    std::uint64_t clamped = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        double v = x[i];
        if (v < box.lower[i]) {
            v = box.lower[i];
            ++clamped;
        } else if (v > box.upper[i]) {
            v = box.upper[i];
            ++clamped;
        }
        out[i] = v;
    }
    return clamped;
}

void check_dims(const NoiseEnsemble& noise, const TimeGrid& grid, int n_init, int dim_noise) {
    if (noise.n_steps != grid.n_steps)
        throw ShapeError("integrate: noise steps do not match grid");
    if (noise.n_paths != n_init)
        throw ShapeError("integrate: noise paths do not match initial conditions");
    if (noise.dim_noise != dim_noise)
        throw ShapeError("integrate: noise dimension does not match spec");
    if (std::abs(noise.dt - grid.dt()) > 1e-12 * std::max(1.0, std::abs(grid.dt())))
        throw ShapeError("integrate: noise dt does not match grid dt");
}

} // namespace

void IntegratorConfig::validate(int dim) const {
    if (!clamp_box) return;
    if (static_cast<int>(clamp_box->lower.size()) != dim ||
        static_cast<int>(clamp_box->upper.size()) != dim)
        throw ShapeError("IntegratorConfig: clamp box dimension mismatch");
    for (int i = 0; i < dim; ++i)
        if (!(clamp_box->lower[i] < clamp_box->upper[i]))
            throw InvalidSpecError("IntegratorConfig: clamp box needs lower < upper");
}

PathEnsemble integrate(const SdeSpec& spec, std::span<const double> init,
                       const NoiseEnsemble& noise, const TimeGrid& grid,
                       const IntegratorConfig& cfg) {
    spec.validate();
    grid.validate();
    cfg.validate(spec.dim_state);
    const int d = spec.dim_state;
    const int r = spec.dim_noise;
    const int n_paths = static_cast<int>(init.size()) / d;
    if (static_cast<int>(init.size()) != n_paths * d)
        throw ShapeError("integrate: init size is not a multiple of dim_state");
    check_dims(noise, grid, n_paths, r);
    if (!all_finite(init)) throw IntegrationBlowupError(0, 0, grid.t_start);

    PathEnsemble out;
    out.allocate(grid, n_paths, d);
    out.provenance = {spec.name, noise.seed, "euler_maruyama", 0};

    const double dt = grid.dt();
    std::atomic<std::uint64_t> clamp_total{0};
    std::atomic<bool> blew_up{false};
    std::atomic<std::size_t> blow_path{0};
    std::atomic<int> blow_step{0};

    parallel_for(static_cast<std::size_t>(n_paths), [&](std::size_t begin, std::size_t end) {
        std::vector<double> x(d), arg(d), fx(d), gx(static_cast<std::size_t>(d) * r);
        std::uint64_t clamped = 0;
        for (std::size_t p = begin; p < end; ++p) {
            std::memcpy(x.data(), init.data() + p * d, sizeof(double) * d);
            std::memcpy(out.state(static_cast<int>(p), 0).data(), x.data(), sizeof(double) * d);
            for (int k = 0; k < grid.n_steps; ++k) {
                const double t = grid.time_at(k);
                std::span<const double> xa(x);
                if (cfg.clamp_box) {
                    clamped += clamp_into(x, *cfg.clamp_box, arg);
                    xa = arg;
                }
                spec.drift(t, xa, fx);
                spec.diffusion(t, xa, gx);
                for (int i = 0; i < d; ++i) {
                    double inc = 0.0;
                    for (int j = 0; j < r; ++j)
                        inc += gx[static_cast<std::size_t>(i) * r + j] *
                               noise.at(static_cast<int>(p), k, j);
                    x[i] += fx[i] * dt + inc;
                }
                if (!all_finite(x)) {
                    blew_up = true;
                    blow_path = p;
                    blow_step = k + 1;
                    return;
                }
                std::memcpy(out.state(static_cast<int>(p), k + 1).data(), x.data(),
                            sizeof(double) * d);
            }
        }
        clamp_total += clamped;
    });

    if (blew_up)
        throw IntegrationBlowupError(blow_path.load(), static_cast<std::size_t>(blow_step.load()),
                                     grid.time_at(blow_step.load()));
    out.provenance.clamped_evals = clamp_total.load();
    return out;
}

PathEnsemble integrate_exponential(double relaxation, const ForcingFn& forcing,
                                   const DiffusionFn& diffusion, int dim_state,
                                   std::span<const double> init, const NoiseEnsemble& noise,
                                   const TimeGrid& grid, const IntegratorConfig& cfg) {
    if (!(relaxation > 0.0))
        throw InvalidSpecError("integrate_exponential: relaxation constant must be positive");
    grid.validate();
    cfg.validate(dim_state);
    const int d = dim_state;
    const int r = noise.dim_noise;
    const int n_paths = static_cast<int>(init.size()) / d;
    if (static_cast<int>(init.size()) != n_paths * d)
        throw ShapeError("integrate_exponential: init size is not a multiple of dim_state");
    check_dims(noise, grid, n_paths, r);

    PathEnsemble out;
    out.allocate(grid, n_paths, d);
    out.provenance = {"", noise.seed, "exponential_euler", 0};

    const double dt = grid.dt();
    const double decay = std::exp(-relaxation * dt);
    const double gain = (1.0 - decay) / relaxation;
    std::atomic<std::uint64_t> clamp_total{0};
    std::atomic<bool> blew_up{false};
    std::atomic<std::size_t> blow_path{0};
    std::atomic<int> blow_step{0};

    parallel_for(static_cast<std::size_t>(n_paths), [&](std::size_t begin, std::size_t end) {
        std::vector<double> x(d), arg(d), F(d), gx(static_cast<std::size_t>(d) * r);
        std::uint64_t clamped = 0;
        for (std::size_t p = begin; p < end; ++p) {
            std::memcpy(x.data(), init.data() + p * d, sizeof(double) * d);
            std::memcpy(out.state(static_cast<int>(p), 0).data(), x.data(), sizeof(double) * d);
            for (int k = 0; k < grid.n_steps; ++k) {
                const double t = grid.time_at(k);
                std::span<const double> xa(x);
                if (cfg.clamp_box) {
                    clamped += clamp_into(x, *cfg.clamp_box, arg);
                    xa = arg;
                }
                forcing(p, t, xa, F);
                diffusion(t, xa, gx);
                for (int i = 0; i < d; ++i) {
                    double inc = 0.0;
                    for (int j = 0; j < r; ++j)
                        inc += gx[static_cast<std::size_t>(i) * r + j] *
                               noise.at(static_cast<int>(p), k, j);
                    x[i] = decay * x[i] + gain * F[i] + decay * inc;
                }
                if (!all_finite(x)) {
                    blew_up = true;
                    blow_path = p;
                    blow_step = k + 1;
                    return;
                }
                std::memcpy(out.state(static_cast<int>(p), k + 1).data(), x.data(),
                            sizeof(double) * d);
            }
        }
        clamp_total += clamped;
    });

    if (blew_up)
        throw IntegrationBlowupError(blow_path.load(), static_cast<std::size_t>(blow_step.load()),
                                     grid.time_at(blow_step.load()));
    out.provenance.clamped_evals = clamp_total.load();
    return out;
}

} // namespace periodica
