// Core types shared across the library: intervals, error types, and the
// finite-difference helpers used when a profile has no analytic derivatives.
#pragma once

#include <cmath>
#include <functional>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

namespace warpsol {

// Points where |h'(t)| drops below this are treated as genuine metric
// singularities and reported, never regularized.
inline constexpr double kZeroWarpEps = 1e-12;

class DomainError : public std::runtime_error {
public:
    explicit DomainError(const std::string& what) : std::runtime_error(what) {}
};

// A zero of the warp function inside an evaluation.
class SingularWarpError : public std::runtime_error {
public:
    SingularWarpError(const std::string& what, double where)
        : std::runtime_error(what), t(where) {}
    double t;
};

// Quadrature / ODE / recursion failures.
class NumericsError : public std::runtime_error {
public:
    explicit NumericsError(const std::string& what) : std::runtime_error(what) {}
};

template <class Real = double>
class Interval {
public:
    constexpr Interval(Real lo, Real hi) : lo_(lo), hi_(hi) {}

    static constexpr Interval all() {
        return {-std::numeric_limits<Real>::infinity(),
                std::numeric_limits<Real>::infinity()};
    }
    static constexpr Interval positive() {
        return {Real(0), std::numeric_limits<Real>::infinity()};
    }

    constexpr Real lo() const { return lo_; }
    constexpr Real hi() const { return hi_; }

    // Open-interval membership with an optional safety margin.
    constexpr bool contains(Real t, Real margin = Real(0)) const {
        return t > lo_ + margin && t < hi_ - margin;
    }

private:
    Real lo_, hi_;
};

template <class Real>
std::vector<Real> linspace(Real lo, Real hi, int count) {
    if (count < 2) throw DomainError("linspace: need at least 2 points");
    std::vector<Real> out(static_cast<std::size_t>(count));
    const Real step = (hi - lo) / Real(count - 1);
    for (int i = 0; i < count; ++i) out[static_cast<std::size_t>(i)] = lo + Real(i) * step;
    out.back() = hi;
    return out;
}

namespace fd {

// Central differences, O(step^2).
template <class Real, class F>
Real d1(F&& f, Real t, Real step) {
    return (f(t + step) - f(t - step)) / (Real(2) * step);
}

template <class Real, class F>
Real d2(F&& f, Real t, Real step) {
    return (f(t + step) - Real(2) * f(t) + f(t - step)) / (step * step);
}

// Five-point central difference, O(step^4). Used where 1e-10 scale
// agreement is asserted against analytic Jacobians.
template <class Real, class F>
Real d1_rich(F&& f, Real t, Real step) {
    return (Real(8) * (f(t + step) - f(t - step)) - (f(t + Real(2) * step) - f(t - Real(2) * step))) /
           (Real(12) * step);
}

} // namespace fd

} // namespace warpsol
