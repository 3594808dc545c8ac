#include "periodica/curve.hpp"

#include <algorithm>
#include <memory>

#include "periodica/errors.hpp"

namespace periodica {

CubicSpline::CubicSpline(std::vector<double> xs, std::vector<double> ys)
    : xs_(std::move(xs)), ys_(std::move(ys)) {
    const std::size_t n = xs_.size();
    if (n < 2 || ys_.size() != n) throw InvalidSpecError("CubicSpline: need >= 2 nodes");
    for (std::size_t i = 1; i < n; ++i)
        if (!(xs_[i] > xs_[i - 1]))
            throw InvalidSpecError("CubicSpline: nodes must be strictly increasing");

    // Natural boundary: m_0 = m_{n-1} = 0; Thomas algorithm on the interior.
    m_.assign(n, 0.0);
    if (n == 2) return;
    std::vector<double> diag(n - 2), rhs(n - 2), upper(n - 2);
    for (std::size_t i = 1; i + 1 < n; ++i) {
        const double h0 = xs_[i] - xs_[i - 1];
        const double h1 = xs_[i + 1] - xs_[i];
        diag[i - 1] = 2.0 * (h0 + h1);
        upper[i - 1] = h1;
        rhs[i - 1] = 6.0 * ((ys_[i + 1] - ys_[i]) / h1 - (ys_[i] - ys_[i - 1]) / h0);
    }
    for (std::size_t i = 1; i < diag.size(); ++i) {
        const double h0 = xs_[i + 1] - xs_[i]; // sub-diagonal entry for row i
        const double w = h0 / diag[i - 1];
        diag[i] -= w * upper[i - 1];
        rhs[i] -= w * rhs[i - 1];
    }
    for (std::size_t i = diag.size(); i-- > 0;) {
        double v = rhs[i];
        if (i + 1 < diag.size()) v -= upper[i] * m_[i + 2];
        m_[i + 1] = v / diag[i];
    }
}

std::size_t CubicSpline::interval(double x) const {
    auto it = std::upper_bound(xs_.begin(), xs_.end(), x);
    std::size_t i = static_cast<std::size_t>(it - xs_.begin());
    if (i == 0) return 0;
    if (i >= xs_.size()) return xs_.size() - 2;
    return i - 1;
}

double CubicSpline::value(double x) const {
    const std::size_t i = interval(x);
    const double h = xs_[i + 1] - xs_[i];
    const double a = (xs_[i + 1] - x) / h;
    const double b = (x - xs_[i]) / h;
    return a * ys_[i] + b * ys_[i + 1] +
           ((a * a * a - a) * m_[i] + (b * b * b - b) * m_[i + 1]) * h * h / 6.0;
}

double CubicSpline::deriv(double x) const {
    const std::size_t i = interval(x);
    const double h = xs_[i + 1] - xs_[i];
    const double a = (xs_[i + 1] - x) / h;
    const double b = (x - xs_[i]) / h;
    return (ys_[i + 1] - ys_[i]) / h +
           ((1.0 - 3.0 * a * a) * m_[i] + (3.0 * b * b - 1.0) * m_[i + 1]) * h / 6.0;
}

Curve Curve::from_callables(int dim, VectorFn value, VectorFn deriv) {
    if (dim < 1 || !value || !deriv) throw InvalidSpecError("Curve: bad callables");
    Curve c;
    c.dim_ = dim;
    c.value_ = std::move(value);
    c.deriv_ = std::move(deriv);
    return c;
}

Curve Curve::from_samples(int dim, std::span<const double> ts, std::span<const double> values) {
    if (dim < 1 || ts.size() < 2 || values.size() != ts.size() * static_cast<std::size_t>(dim))
        throw InvalidSpecError("Curve: sample shape mismatch");
    auto splines = std::make_shared<std::vector<CubicSpline>>();
    splines->reserve(static_cast<std::size_t>(dim));
    std::vector<double> xs(ts.begin(), ts.end());
    for (int j = 0; j < dim; ++j) {
        std::vector<double> col(ts.size());
        for (std::size_t i = 0; i < ts.size(); ++i) col[i] = values[i * dim + j];
        splines->emplace_back(xs, std::move(col));
    }
    Curve c;
    c.dim_ = dim;
    c.value_ = [splines](double t, std::span<double> out) {
        for (std::size_t j = 0; j < splines->size(); ++j) out[j] = (*splines)[j].value(t);
    };
    c.deriv_ = [splines](double t, std::span<double> out) {
        for (std::size_t j = 0; j < splines->size(); ++j) out[j] = (*splines)[j].deriv(t);
    };
    return c;
}

void Curve::value(double t, std::span<double> out) const { value_(t, out); }
void Curve::deriv(double t, std::span<double> out) const { deriv_(t, out); }

double Curve::value1(double t) const {
    double v;
    value_(t, {&v, 1});
    return v;
}

double Curve::deriv1(double t) const {
    double v;
    deriv_(t, {&v, 1});
    return v;
}

} // namespace periodica
