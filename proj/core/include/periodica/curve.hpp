#pragma once

#include <functional>
#include <span>
#include <vector>

namespace periodica {

// C^1 curve [0, theta] -> R^d with an evaluable derivative. Either closed-form
// callables or a natural cubic spline through samples (derivative taken from
// the spline, as Definition-2.1-style checks need alpha').
class Curve {
public:
    using VectorFn = std::function<void(double, std::span<double>)>;

    Curve() = default;

    static Curve from_callables(int dim, VectorFn value, VectorFn deriv);

    // ts strictly increasing; values is ts.size() x dim row-major.
    static Curve from_samples(int dim, std::span<const double> ts,
                              std::span<const double> values);

    int dim() const { return dim_; }
    void value(double t, std::span<double> out) const;
    void deriv(double t, std::span<double> out) const;

    double value1(double t) const;
    double deriv1(double t) const;

private:
    int dim_ = 0;
    VectorFn value_;
    VectorFn deriv_;
};

// Natural cubic spline on arbitrary strictly-increasing nodes.
class CubicSpline {
public:
    CubicSpline() = default;
    CubicSpline(std::vector<double> xs, std::vector<double> ys);

    double value(double x) const;
    double deriv(double x) const;

private:
    std::vector<double> xs_, ys_, m_; // m_: second derivatives at nodes
    std::size_t interval(double x) const;
};

} // namespace periodica
