#include "periodica/noise.hpp"

#include <cmath>

#include "periodica/parallel.hpp"

namespace periodica {

namespace {

constexpr std::uint32_t kPhiloxM0 = 0xD2511F53u;
constexpr std::uint32_t kPhiloxM1 = 0xCD9E8D57u;
constexpr std::uint32_t kPhiloxW0 = 0x9E3779B9u;
constexpr std::uint32_t kPhiloxW1 = 0xBB67AE85u;

inline void philox_round(std::array<std::uint32_t, 4>& ctr, std::array<std::uint32_t, 2>& key) {
    const std::uint64_t p0 = static_cast<std::uint64_t>(kPhiloxM0) * ctr[0];
    const std::uint64_t p1 = static_cast<std::uint64_t>(kPhiloxM1) * ctr[2];
    const std::array<std::uint32_t, 4> next = {
        static_cast<std::uint32_t>(p1 >> 32) ^ ctr[1] ^ key[0],
        static_cast<std::uint32_t>(p1),
        static_cast<std::uint32_t>(p0 >> 32) ^ ctr[3] ^ key[1],
        static_cast<std::uint32_t>(p0),
    };
    ctr = next;
    key[0] += kPhiloxW0;
    key[1] += kPhiloxW1;
}

constexpr double kTwoPi = 6.283185307179586476925286766559;

// Two uniforms in (0,1) from one block; Box-Muller for the normal stream.
inline void block_uniforms(std::array<std::uint32_t, 4> r, double& u1, double& u2) {
    const std::uint64_t a = (static_cast<std::uint64_t>(r[0]) << 32) | r[1];
    const std::uint64_t b = (static_cast<std::uint64_t>(r[2]) << 32) | r[3];
    u1 = static_cast<double>(a >> 11) * 0x1.0p-53 + 0x1.0p-54;
    u2 = static_cast<double>(b >> 11) * 0x1.0p-53 + 0x1.0p-54;
}

inline std::array<std::uint32_t, 4> block_for(std::uint64_t seed, std::uint64_t path,
                                              std::uint64_t step, std::uint64_t coordinate,
                                              std::uint32_t salt) {
    const std::array<std::uint32_t, 4> ctr = {
        static_cast<std::uint32_t>(step),
        static_cast<std::uint32_t>(step >> 32) ^ salt,
        static_cast<std::uint32_t>(path),
        static_cast<std::uint32_t>((path >> 32) ^ (coordinate << 8)),
    };
    const std::array<std::uint32_t, 2> key = {
        static_cast<std::uint32_t>(seed),
        static_cast<std::uint32_t>(seed >> 32),
    };
    return philox4x32(ctr, key);
}

} // namespace

std::array<std::uint32_t, 4> philox4x32(std::array<std::uint32_t, 4> counter,
                                        std::array<std::uint32_t, 2> key) {
    for (int round = 0; round < 10; ++round) philox_round(counter, key);
    return counter;
}

double normal_at(std::uint64_t seed, std::uint64_t path, std::uint64_t step,
                 std::uint64_t coordinate) {
    double u1, u2;
    block_uniforms(block_for(seed, path, step, coordinate, 0u), u1, u2);
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(kTwoPi * u2);
}

double uniform_at(std::uint64_t seed, std::uint64_t path, std::uint64_t step,
                  std::uint64_t coordinate) {
    double u1, u2;
    block_uniforms(block_for(seed, path, step, coordinate, 0x5EEDu), u1, u2);
    return u1;
}

NoiseEnsemble make_noise(std::uint64_t seed, int n_paths, const TimeGrid& grid, int dim_noise) {
    grid.validate();
    if (n_paths < 1) throw InvalidSpecError("make_noise: n_paths must be >= 1");
    if (dim_noise < 1) throw InvalidSpecError("make_noise: dim_noise must be >= 1");

    NoiseEnsemble out;
    out.seed = seed;
    out.n_paths = n_paths;
    out.n_steps = grid.n_steps;
    out.dim_noise = dim_noise;
    out.dt = grid.dt();
    out.increments.resize(static_cast<std::size_t>(n_paths) * grid.n_steps * dim_noise);

    const double sd = std::sqrt(out.dt);
    parallel_for(static_cast<std::size_t>(n_paths), [&](std::size_t begin, std::size_t end) {
        for (std::size_t p = begin; p < end; ++p)
            for (int k = 0; k < out.n_steps; ++k)
                for (int j = 0; j < dim_noise; ++j)
                    out.at(static_cast<int>(p), k, j) = sd * normal_at(seed, p, k, j);
    });
    return out;
}

NoiseEnsemble shift_noise(const NoiseEnsemble& noise, int k_periods, int steps_per_period) {
    if (k_periods < 0 || steps_per_period < 1)
        throw RangeError("shift_noise: k_periods >= 0 and steps_per_period >= 1 required");
    if (static_cast<std::int64_t>(k_periods + 1) * steps_per_period > noise.n_steps)
        throw RangeError("shift_noise: ensemble covers fewer than (k_periods+1) periods");

    NoiseEnsemble out;
    out.seed = noise.seed;
    out.n_paths = noise.n_paths;
    out.n_steps = steps_per_period;
    out.dim_noise = noise.dim_noise;
    out.dt = noise.dt;
    out.increments.resize(static_cast<std::size_t>(out.n_paths) * steps_per_period * out.dim_noise);
    const int offset = k_periods * steps_per_period;
    for (int p = 0; p < out.n_paths; ++p)
        for (int k = 0; k < steps_per_period; ++k)
            for (int j = 0; j < out.dim_noise; ++j)
                out.at(p, k, j) = noise.at(p, offset + k, j);
    return out;
}

NoiseEnsemble coarsen_noise(const NoiseEnsemble& noise, int factor) {
    if (factor < 1 || noise.n_steps % factor != 0)
        throw RangeError("coarsen_noise: factor must divide n_steps");
    NoiseEnsemble out;
    out.seed = noise.seed;
    out.n_paths = noise.n_paths;
    out.n_steps = noise.n_steps / factor;
    out.dim_noise = noise.dim_noise;
    out.dt = noise.dt * factor;
    out.increments.assign(static_cast<std::size_t>(out.n_paths) * out.n_steps * out.dim_noise, 0.0);
    for (int p = 0; p < out.n_paths; ++p)
        for (int k = 0; k < out.n_steps; ++k)
            for (int f = 0; f < factor; ++f)
                for (int j = 0; j < out.dim_noise; ++j)
                    out.at(p, k, j) += noise.at(p, k * factor + f, j);
    return out;
}

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t salt) {
    std::uint64_t z = seed + 0x9E3779B97F4A7C15ull * (salt + 1);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

} // namespace periodica
