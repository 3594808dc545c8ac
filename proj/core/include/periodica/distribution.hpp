#pragma once

#include <functional>
#include <vector>

#include "periodica/ensemble.hpp"

namespace periodica {

// Uniform empirical measure over n samples in R^d.
struct EmpiricalMeasure {
    int dim = 1;
    std::vector<double> samples; // [n][d]

    int size() const { return static_cast<int>(samples.size()) / dim; }
    double at(int i, int j) const { return samples[static_cast<std::size_t>(i) * dim + j]; }
    std::vector<double> column(int j) const;

    void validate() const;
};

// Marginal law of the ensemble at grid index k.
EmpiricalMeasure marginal(const PathEnsemble& paths, int k);

// W1 between empirical measures. d=1: sorted-sample coupling for equal n,
// linear-interpolated quantile functions on 2^12 nodes otherwise. d>1: max of
// the coordinatewise 1-D distances and the sliced distance over 64 fixed-seed
// projections (coordinatewise is interpretable, sliced catches cross-coordinate
// shifts; the max governs pass/fail).
double wasserstein1(const EmpiricalMeasure& p, const EmpiricalMeasure& q);

// Both components for d>1 diagnostics.
struct W1Components {
    double coordinatewise_max = 0.0;
    double sliced = 0.0;
};
W1Components wasserstein1_components(const EmpiricalMeasure& p, const EmpiricalMeasure& q);

// Squared W2 under the 1-D quantile coupling (equal n); coordinatewise sum for
// d>1. Drives the Step-1 contraction diagnostics.
double wasserstein2_sq(const EmpiricalMeasure& p, const EmpiricalMeasure& q);

// W1 against a scalar Gaussian law (quantile nodes), for oracle comparisons.
double wasserstein1_gaussian(const EmpiricalMeasure& p, double mean, double variance);

struct KsResult {
    double statistic = 0.0;
    bool accept_at_1pct = true;
};

// Classical two-sample Kolmogorov-Smirnov on one coordinate, tested at
// significance 0.01 with the asymptotic threshold c(0.01) sqrt((n+m)/(n m)).
KsResult ks_two_sample(const EmpiricalMeasure& p, const EmpiricalMeasure& q, int coordinate = 0);

struct PeriodicityPoint {
    double t = 0.0;
    double w1 = 0.0;
};

// W1(law X(t), law X(t+theta)) at n_probes evenly spaced t in [0, (k-1) theta]
// for an ensemble covering k >= 2 periods.
std::vector<PeriodicityPoint> periodicity_scan(const PathEnsemble& paths, double theta,
                                               int n_probes);

// dx = (mu(t) - a x) dt + sigma dB with theta-periodic mu: the closed-form
// periodic Gaussian law used as the pipeline's analytic reference.
struct OuOracle {
    double a = 1.0;
    double sigma = 1.0;
    std::function<double(double)> mu;
    double theta = 1.0;
};

struct GaussianLaw {
    double mean = 0.0;
    double variance = 0.0;
};

// m(t) = e^{-a t}[m(0) + int_0^t e^{a s} mu(s) ds] with the periodic m(0),
// v(t) = sigma^2/(2a). Composite Simpson at 2^14 nodes.
GaussianLaw ou_periodic_law(const OuOracle& oracle, double t);

} // namespace periodica
