#pragma once

#include <optional>
#include <vector>

#include "periodica/curve.hpp"
#include "periodica/ensemble.hpp"
#include "periodica/integrate.hpp"
#include "periodica/noise.hpp"
#include "periodica/spec.hpp"

namespace periodica {

// Candidate strict lower/upper solutions and the initial offset xi.
struct BoundaryPair {
    Curve alpha;
    Curve beta;
    std::vector<double> xi;
    double theta = 1.0;

    // alpha < beta on the grid, endpoint conditions, 0 < xi < (beta-alpha)/2.
    void validate(const TimeGrid& grid) const;

    // 0.01 * min over grid and components of (beta - alpha).
    static std::vector<double> default_xi(const Curve& alpha, const Curve& beta,
                                          const TimeGrid& grid);
};

struct CheckResult {
    bool ok = false;
    double worst_slack = 0.0;
    std::optional<std::pair<double, double>> witness; // (t, slack) at the argmin when not ok
    bool endpoint_ok = false;
};

// Strict differential inequalities of Definition 2.1 at every grid point,
// zero tolerance; the slack is reported so callers can judge robustness.
CheckResult check_lower_solution(const SdeSpec& spec, const Curve& alpha, const TimeGrid& grid);
CheckResult check_upper_solution(const SdeSpec& spec, const Curve& beta, const TimeGrid& grid);

struct Violation {
    double t = 0.0;
    std::vector<double> x;
    std::string quantity;
    double value = 0.0;
};

struct HypothesisReport {
    double M = 0.0;      // Lipschitz / one-sided constant for f on the box
    double L = 0.0;      // squared-Lipschitz constant for g on the box
    double margin = 0.0; // M - L - ln(2)/(2 theta)
    bool strict_lower_ok = false;
    bool strict_upper_ok = false;
    double worst_slack_lower = 0.0;
    double worst_slack_upper = 0.0;
    bool quasimonotone_ok = true; // meaningful for d > 1 only
    std::vector<Violation> violations;
};

// Samples (t, x, y) pairs in the moving box [alpha(t), beta(t)] from a
// deterministic stream (sample s depends only on s, so enlarging n_samples
// never decreases the estimates). Near-diagonal probes capture the
// directional-derivative suprema that well-separated pairs miss.
HypothesisReport estimate_constants(const SdeSpec& spec, const BoundaryPair& pair,
                                    const TimeGrid& grid, int n_samples);

enum class BetaDriftSign { minus, plus };

// Stochastic envelopes: d(env) = [bound' -/+ M(env - bound)] dt + g(t, env) dB
// with env(0) = bound(0) +/- xi, both on the same noise. Integrated in offset
// coordinates v = env - bound so the exponential step is exact when g == 0.
struct Envelopes {
    PathEnsemble alpha_tilde;
    PathEnsemble beta_tilde;
};

Envelopes build_envelopes(const SdeSpec& spec, const BoundaryPair& pair,
                          const NoiseEnsemble& noise, double M, const TimeGrid& grid,
                          BetaDriftSign beta_sign = BetaDriftSign::minus,
                          const IntegratorConfig& cfg = {});

// Fraction of (path, grid point, component) triples violating
// alpha <= alpha~ <= beta~ <= beta, plus the per-inequality split.
struct OrderViolation {
    double chain = 0.0;
    double below_alpha = 0.0;
    double above_beta = 0.0;
    double mid = 0.0; // alpha~ > beta~
};

OrderViolation envelope_order_violation(const Envelopes& env, const BoundaryPair& pair);

} // namespace periodica
