// Adaptive-subdivision quadrature: Romberg extrapolation per segment with
// bisection of segments that fail to converge.  Works in any floating type;
// nodes are dyadic so nothing depends on tabulated constants.
#pragma once

#include <cmath>
#include <cstddef>
#include <string>
#include <vector>

#include "warpsol/core.hpp"

namespace warpsol {

inline constexpr const char* kQuadratureMethod = "adaptive-romberg";

namespace detail {

template <class Real, class F>
struct RombergResult {
    Real value;
    Real err;
    bool converged;
};

template <class Real, class F>
RombergResult<Real, F> romberg_segment(F&& f, Real a, Real b, Real abs_tol, Real rel_tol,
                                       int max_level) {
    // R[j] holds the current Richardson row.
    std::vector<Real> row(static_cast<std::size_t>(max_level) + 1);
    std::vector<Real> prev(static_cast<std::size_t>(max_level) + 1);

    const Real width = b - a;
    Real trap = width / Real(2) * (f(a) + f(b));
    prev[0] = trap;
    Real err = std::numeric_limits<Real>::infinity();

    std::size_t n_panels = 1;
    for (int k = 1; k <= max_level; ++k) {
        // refine the trapezoid sum with the midpoints of the current panels
        Real sum = Real(0);
        const Real hstep = width / Real(static_cast<long>(n_panels));
        for (std::size_t i = 0; i < n_panels; ++i)
            sum += f(a + hstep * (Real(static_cast<long>(i)) + Real(0.5)));
        trap = Real(0.5) * trap + Real(0.5) * hstep * sum;
        n_panels *= 2;

        row[0] = trap;
        Real pow4 = Real(1);
        for (int j = 1; j <= k; ++j) {
            pow4 *= Real(4);
            row[static_cast<std::size_t>(j)] =
                row[static_cast<std::size_t>(j - 1)] +
                (row[static_cast<std::size_t>(j - 1)] - prev[static_cast<std::size_t>(j - 1)]) /
                    (pow4 - Real(1));
        }
        const Real diag = row[static_cast<std::size_t>(k)];
        err = std::abs(diag - prev[static_cast<std::size_t>(k - 1)]);
        if (k >= 3 && err <= std::max(abs_tol, rel_tol * std::abs(diag)))
            return {diag, err, true};
        std::swap(row, prev);
    }
    return {prev[static_cast<std::size_t>(max_level)], err, false};
}

} // namespace detail

// Integral of f over [a, b] with error <= max(abs_tol, rel_tol*|value|).
// Throws NumericsError when the subdivision budget is exhausted.
template <class Real, class F>
Real quadrature(F&& f, Real a, Real b, Real abs_tol, Real rel_tol) {
    if (abs_tol <= Real(0) || rel_tol <= Real(0))
        throw DomainError("quadrature: tolerances must be positive");
    if (a == b) return Real(0);
    if (a > b) return -quadrature(f, b, a, abs_tol, rel_tol);

    struct Segment {
        Real a, b, tol;
    };
    constexpr int kMaxLevel = 11; // 2048 panels per segment before splitting
    constexpr int kMaxSegments = 4000;

    std::vector<Segment> stack{{a, b, abs_tol}};
    Real total = Real(0);
    int processed = 0;
    while (!stack.empty()) {
        if (++processed > kMaxSegments)
            throw NumericsError("quadrature: subdivision budget exhausted on [" +
                                std::to_string(static_cast<double>(a)) + ", " +
                                std::to_string(static_cast<double>(b)) + "]");
        const Segment seg = stack.back();
        stack.pop_back();
        auto r = detail::romberg_segment<Real>(f, seg.a, seg.b, seg.tol, rel_tol, kMaxLevel);
        if (r.converged) {
            total += r.value;
            continue;
        }
        const Real mid = (seg.a + seg.b) / Real(2);
        if (!(mid > seg.a && mid < seg.b))
            throw NumericsError("quadrature: segment underflow (non-integrable point?)");
        stack.push_back({seg.a, mid, seg.tol / Real(2)});
        stack.push_back({mid, seg.b, seg.tol / Real(2)});
    }
    return total;
}

} // namespace warpsol
