#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "periodica/spec.hpp"

namespace periodica {

// Philox4x32-10 counter-based generator. A block of four 32-bit words is a
// pure function of (counter, key), which is what makes every increment a
// pure function of (seed, path, step, coordinate) independent of evaluation
// order and thread count.
std::array<std::uint32_t, 4> philox4x32(std::array<std::uint32_t, 4> counter,
                                        std::array<std::uint32_t, 2> key);

// Standard normal draw keyed by (seed, path, step, coordinate).
double normal_at(std::uint64_t seed, std::uint64_t path, std::uint64_t step,
                 std::uint64_t coordinate);

// Uniform draw in (0,1) keyed the same way but on a separate stream, for
// samplers that must not collide with noise generation.
double uniform_at(std::uint64_t seed, std::uint64_t path, std::uint64_t step,
                  std::uint64_t coordinate);

// Brownian increments shared across comparison runs: increments[p][k][j]
// ~ N(0, dt) i.i.d., regenerable bit-identically from (seed, p, k, j).
struct NoiseEnsemble {
    std::uint64_t seed = 0;
    int n_paths = 0;
    int n_steps = 0;
    int dim_noise = 1;
    double dt = 0.0;
    std::vector<double> increments; // [p][k][j] row-major

    double at(int p, int k, int j) const {
        return increments[(static_cast<std::size_t>(p) * n_steps + k) * dim_noise + j];
    }
    double& at(int p, int k, int j) {
        return increments[(static_cast<std::size_t>(p) * n_steps + k) * dim_noise + j];
    }
};

NoiseEnsemble make_noise(std::uint64_t seed, int n_paths, const TimeGrid& grid, int dim_noise);

// The increment block for [k*theta, (k+1)*theta] re-indexed to [0, theta].
// Requires the parent to cover at least (k_periods+1) periods.
NoiseEnsemble shift_noise(const NoiseEnsemble& noise, int k_periods, int steps_per_period);

// Sums groups of `factor` consecutive increments: the same Brownian path on a
// coarser grid. Used by refinement ladders so every dt level sees one path.
NoiseEnsemble coarsen_noise(const NoiseEnsemble& noise, int factor);

// Cheap splittable sub-seed derivation (for fresh inner-iteration blocks).
std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t salt);

} // namespace periodica
