// Zero scanning: sign-change bracketing on a uniform grid followed by
// bisection.  Used to locate warp zeros before residual scans.
#pragma once

#include <cmath>
#include <vector>

#include "warpsol/core.hpp"

namespace warpsol {

// Roots of f on [lo, hi], bracketed with `samples` subintervals and bisected
// to |interval| <= tol.  Returns sorted root locations; no sign change means
// an empty list (tangential zeros are not hunted).
template <class Real, class F>
std::vector<Real> scan_zeros(F&& f, Real lo, Real hi, int samples, Real tol = Real(1e-12)) {
    if (samples < 1) throw DomainError("scan_zeros: resolution must be positive");
    std::vector<Real> roots;
    const Real step = (hi - lo) / Real(samples);
    Real t_prev = lo;
    Real f_prev = f(t_prev);
    for (int i = 1; i <= samples; ++i) {
        const Real t_cur = (i == samples) ? hi : lo + Real(i) * step;
        const Real f_cur = f(t_cur);
        if (f_prev == Real(0)) {
            if (roots.empty() || std::abs(roots.back() - t_prev) > tol) roots.push_back(t_prev);
        } else if (std::isfinite(f_prev) && std::isfinite(f_cur) &&
                   ((f_prev < Real(0)) != (f_cur < Real(0)))) {
            Real a = t_prev, b = t_cur, fa = f_prev;
            while (b - a > tol) {
                const Real m = a + (b - a) / Real(2);
                if (m <= a || m >= b) break;
                const Real fm = f(m);
                if (fm == Real(0)) {
                    a = b = m;
                    break;
                }
                if ((fa < Real(0)) != (fm < Real(0)))
                    b = m;
                else {
                    a = m;
                    fa = fm;
                }
            }
            roots.push_back(a + (b - a) / Real(2));
        }
        t_prev = t_cur;
        f_prev = f_cur;
    }
    if (f_prev == Real(0) && (roots.empty() || std::abs(roots.back() - hi) > tol))
        roots.push_back(hi);
    return roots;
}

} // namespace warpsol
