#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "periodica/spec.hpp"

namespace periodica {

struct Provenance {
    std::string spec_name;
    std::uint64_t noise_seed = 0;
    std::string integrator;
    std::uint64_t clamped_evals = 0;
};

// Simulated trajectories: n_paths x (n_steps+1) x dim, row-major.
struct PathEnsemble {
    TimeGrid grid;
    int n_paths = 0;
    int dim = 1;
    std::vector<double> values; // [p][k][i]
    Provenance provenance;

    double at(int p, int k, int i) const {
        return values[(static_cast<std::size_t>(p) * (grid.n_steps + 1) + k) * dim + i];
    }
    double& at(int p, int k, int i) {
        return values[(static_cast<std::size_t>(p) * (grid.n_steps + 1) + k) * dim + i];
    }
    std::span<const double> state(int p, int k) const {
        return {values.data() + (static_cast<std::size_t>(p) * (grid.n_steps + 1) + k) * dim,
                static_cast<std::size_t>(dim)};
    }
    std::span<double> state(int p, int k) {
        return {values.data() + (static_cast<std::size_t>(p) * (grid.n_steps + 1) + k) * dim,
                static_cast<std::size_t>(dim)};
    }

    void allocate(const TimeGrid& g, int paths, int d) {
        grid = g;
        n_paths = paths;
        dim = d;
        values.assign(static_cast<std::size_t>(paths) * (g.n_steps + 1) * d, 0.0);
    }
};

} // namespace periodica
