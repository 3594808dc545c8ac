#include "periodica/distribution.hpp"

#include <algorithm>
#include <cmath>
#include <cstring>

#include "periodica/errors.hpp"
#include "periodica/noise.hpp"

namespace periodica {

namespace {

constexpr int kQuantileNodes = 1 << 12;
constexpr int kSlicedProjections = 64;
constexpr std::uint64_t kProjectionSeed = 0x51CEDB01ull;
constexpr double kKs1pct = 1.6276236115189503; // sqrt(-ln(0.005)/2)

double w1_sorted_equal(std::vector<double>& a, std::vector<double>& b) {
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    double acc = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) acc += std::abs(a[i] - b[i]);
    return acc / static_cast<double>(a.size());
}

// Empirical quantile with linear interpolation between order statistics.
double quantile(const std::vector<double>& sorted, double q) {
    const double pos = q * (static_cast<double>(sorted.size()) - 1.0);
    const auto lo = static_cast<std::size_t>(pos);
    const auto hi = std::min(lo + 1, sorted.size() - 1);
    const double w = pos - static_cast<double>(lo);
    return (1.0 - w) * sorted[lo] + w * sorted[hi];
}

double w1_1d(std::vector<double> a, std::vector<double> b) {
    if (a.size() == b.size()) return w1_sorted_equal(a, b);
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    double acc = 0.0;
    for (int i = 0; i < kQuantileNodes; ++i) {
        const double q = (i + 0.5) / kQuantileNodes;
        acc += std::abs(quantile(a, q) - quantile(b, q));
    }
    return acc / kQuantileNodes;
}

void check_compatible(const EmpiricalMeasure& p, const EmpiricalMeasure& q) {
    p.validate();
    q.validate();
    if (p.dim != q.dim) throw ShapeError("wasserstein1: dimension mismatch");
}

double simpson(const std::function<double(double)>& f, double lo, double hi, int intervals) {
    // intervals must be even
    const double h = (hi - lo) / intervals;
    double acc = f(lo) + f(hi);
    for (int i = 1; i < intervals; ++i) acc += f(lo + i * h) * (i % 2 ? 4.0 : 2.0);
    return acc * h / 3.0;
}

// Acklam's rational approximation of the standard normal quantile
// (relative error < 1.15e-9, plenty below every tolerance in play).
double normal_quantile(double u) {
    static const double A[] = {-3.969683028665376e+01, 2.209460984245205e+02,
                               -2.759285104469687e+02, 1.383577518672690e+02,
                               -3.066479806614716e+01, 2.506628277459239e+00};
    static const double B[] = {-5.447609879822406e+01, 1.615858368580409e+02,
                               -1.556989798598866e+02, 6.680131188771972e+01,
                               -1.328068155288572e+01};
    static const double C[] = {-7.784894002430293e-03, -3.223964580411365e-01,
                               -2.400758277161838e+00, -2.549732539343734e+00,
                               4.374664141464968e+00,  2.938163982698783e+00};
    static const double D[] = {7.784695709041462e-03, 3.224671290700398e-01,
                               2.445134137142996e+00, 3.754408661907416e+00};
    const double plow = 0.02425, phigh = 1 - plow;
    if (u < plow) {
        const double r = std::sqrt(-2 * std::log(u));
        return (((((C[0] * r + C[1]) * r + C[2]) * r + C[3]) * r + C[4]) * r + C[5]) /
               ((((D[0] * r + D[1]) * r + D[2]) * r + D[3]) * r + 1);
    }
    if (u <= phigh) {
        const double r = u - 0.5, s = r * r;
        return (((((A[0] * s + A[1]) * s + A[2]) * s + A[3]) * s + A[4]) * s + A[5]) * r /
               (((((B[0] * s + B[1]) * s + B[2]) * s + B[3]) * s + B[4]) * s + 1);
    }
    const double r = std::sqrt(-2 * std::log(1 - u));
    return -(((((C[0] * r + C[1]) * r + C[2]) * r + C[3]) * r + C[4]) * r + C[5]) /
           ((((D[0] * r + D[1]) * r + D[2]) * r + D[3]) * r + 1);
}

} // namespace

std::vector<double> EmpiricalMeasure::column(int j) const {
    const int n = size();
    std::vector<double> out(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) out[i] = at(i, j);
    return out;
}

void EmpiricalMeasure::validate() const {
    if (dim < 1) throw ShapeError("EmpiricalMeasure: dim must be positive");
    if (size() < 2 || static_cast<int>(samples.size()) != size() * dim)
        throw ShapeError("EmpiricalMeasure: need at least 2 samples of matching dim");
    for (double v : samples)
        if (!std::isfinite(v)) throw ShapeError("EmpiricalMeasure: non-finite sample");
}

EmpiricalMeasure marginal(const PathEnsemble& paths, int k) {
    if (k < 0 || k > paths.grid.n_steps) throw RangeError("marginal: grid index out of range");
    EmpiricalMeasure m;
    m.dim = paths.dim;
    m.samples.resize(static_cast<std::size_t>(paths.n_paths) * paths.dim);
    for (int p = 0; p < paths.n_paths; ++p)
        std::memcpy(m.samples.data() + static_cast<std::size_t>(p) * paths.dim,
                    paths.state(p, k).data(), sizeof(double) * paths.dim);
    return m;
}

W1Components wasserstein1_components(const EmpiricalMeasure& p, const EmpiricalMeasure& q) {
    check_compatible(p, q);
    W1Components out;
    for (int j = 0; j < p.dim; ++j)
        out.coordinatewise_max = std::max(out.coordinatewise_max, w1_1d(p.column(j), q.column(j)));
    if (p.dim == 1) {
        out.sliced = out.coordinatewise_max;
        return out;
    }
    const int np = p.size(), nq = q.size();
    std::vector<double> dir(p.dim), pa(np), qa(nq);
    double acc = 0.0;
    for (int s = 0; s < kSlicedProjections; ++s) {
        double norm = 0.0;
        for (int j = 0; j < p.dim; ++j) {
            dir[j] = normal_at(kProjectionSeed, s, j, 0);
            norm += dir[j] * dir[j];
        }
        norm = std::sqrt(norm);
        for (int j = 0; j < p.dim; ++j) dir[j] /= norm;
        for (int i = 0; i < np; ++i) {
            double v = 0.0;
            for (int j = 0; j < p.dim; ++j) v += dir[j] * p.at(i, j);
            pa[i] = v;
        }
        for (int i = 0; i < nq; ++i) {
            double v = 0.0;
            for (int j = 0; j < q.dim; ++j) v += dir[j] * q.at(i, j);
            qa[i] = v;
        }
        acc += w1_1d(pa, qa);
    }
    out.sliced = acc / kSlicedProjections;
    return out;
}

double wasserstein1(const EmpiricalMeasure& p, const EmpiricalMeasure& q) {
    const W1Components c = wasserstein1_components(p, q);
    return std::max(c.coordinatewise_max, c.sliced);
}

double wasserstein2_sq(const EmpiricalMeasure& p, const EmpiricalMeasure& q) {
    check_compatible(p, q);
    if (p.size() != q.size())
        throw ShapeError("wasserstein2_sq: equal sample counts required");
    double acc = 0.0;
    for (int j = 0; j < p.dim; ++j) {
        auto a = p.column(j);
        auto b = q.column(j);
        std::sort(a.begin(), a.end());
        std::sort(b.begin(), b.end());
        for (std::size_t i = 0; i < a.size(); ++i) acc += (a[i] - b[i]) * (a[i] - b[i]);
    }
    return acc / static_cast<double>(p.size());
}

double wasserstein1_gaussian(const EmpiricalMeasure& p, double mean, double variance) {
    p.validate();
    if (p.dim != 1) throw ShapeError("wasserstein1_gaussian: scalar measures only");
    auto a = p.column(0);
    std::sort(a.begin(), a.end());
    const double sd = std::sqrt(std::max(variance, 0.0));
    double acc = 0.0;
    for (int i = 0; i < kQuantileNodes; ++i) {
        const double q = (i + 0.5) / kQuantileNodes;
        acc += std::abs(quantile(a, q) - (mean + sd * normal_quantile(q)));
    }
    return acc / kQuantileNodes;
}

KsResult ks_two_sample(const EmpiricalMeasure& p, const EmpiricalMeasure& q, int coordinate) {
    check_compatible(p, q);
    if (coordinate < 0 || coordinate >= p.dim)
        throw ShapeError("ks_two_sample: coordinate out of range");
    auto a = p.column(coordinate);
    auto b = q.column(coordinate);
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    const std::size_t n = a.size(), m = b.size();
    std::size_t i = 0, j = 0;
    double d = 0.0;
    while (i < n && j < m) {
        const double x = std::min(a[i], b[j]);
        while (i < n && a[i] <= x) ++i;
        while (j < m && b[j] <= x) ++j;
        d = std::max(d, std::abs(static_cast<double>(i) / n - static_cast<double>(j) / m));
    }
    KsResult out;
    out.statistic = d;
    const double threshold =
        kKs1pct * std::sqrt(static_cast<double>(n + m) / (static_cast<double>(n) * m));
    out.accept_at_1pct = d <= threshold;
    return out;
}

std::vector<PeriodicityPoint> periodicity_scan(const PathEnsemble& paths, double theta,
                                               int n_probes) {
    if (n_probes < 1) throw RangeError("periodicity_scan: n_probes must be >= 1");
    const double dt = paths.grid.dt();
    const int steps_per_period = static_cast<int>(std::llround(theta / dt));
    if (steps_per_period < 1 || steps_per_period > paths.grid.n_steps ||
        paths.grid.n_steps < 2 * steps_per_period)
        throw RangeError("periodicity_scan: ensemble must cover at least 2 periods");
    const int k_periods = paths.grid.n_steps / steps_per_period;
    const double horizon = (k_periods - 1) * theta;

    std::vector<PeriodicityPoint> out;
    out.reserve(static_cast<std::size_t>(n_probes));
    for (int i = 0; i < n_probes; ++i) {
        const double t = n_probes == 1 ? 0.0 : horizon * i / (n_probes - 1);
        int k = static_cast<int>(std::llround(t / dt));
        k = std::min(k, paths.grid.n_steps - steps_per_period);
        out.push_back({paths.grid.time_at(k),
                       wasserstein1(marginal(paths, k), marginal(paths, k + steps_per_period))});
    }
    return out;
}

GaussianLaw ou_periodic_law(const OuOracle& oracle, double t) {
    if (!(oracle.a > 0.0)) throw InvalidSpecError("ou_periodic_law: mean reversion must be positive");
    if (!oracle.mu) throw InvalidSpecError("ou_periodic_law: missing forcing");
    if (t < 0.0 || t >= oracle.theta + 1e-12)
        throw RangeError("ou_periodic_law: t outside [0, theta)");
    const double a = oracle.a, theta = oracle.theta;
    constexpr int kNodes = 1 << 14;

    // m(0) = (1 - e^{-a theta})^{-1} int_0^theta e^{-a(theta - s)} mu(s) ds
    const double m0 = simpson([&](double s) { return std::exp(-a * (theta - s)) * oracle.mu(s); },
                              0.0, theta, kNodes) /
                      (1.0 - std::exp(-a * theta));
    GaussianLaw law;
    law.variance = oracle.sigma * oracle.sigma / (2.0 * a);
    if (t <= 0.0) {
        law.mean = m0;
        return law;
    }
    const double integral =
        simpson([&](double s) { return std::exp(a * s) * oracle.mu(s); }, 0.0, t, kNodes);
    law.mean = std::exp(-a * t) * (m0 + integral);
    return law;
}

} // namespace periodica
