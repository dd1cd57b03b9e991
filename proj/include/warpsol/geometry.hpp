// Closed-form curvature of the warped product  ds^2 = dt^2 + h'(t)^2 ds_*^2.
//
// Sign conventions, fixed once for the whole library:
//   Ric(dt,dt)          = -(n-1) h'''/h'
//   Ric(X,X) per g-unit = [lambda_* - (n-2) h''^2 - h' h'''] / h'^2
//   Ric_* = lambda_* g_*   (unit (n-1)-sphere: lambda_* = n-2)
#pragma once

#include "warpsol/warp_profile.hpp"

namespace warpsol {

template <class Real>
Real ricci_tt(const WarpProfile<Real>& h, const SolitonParams<Real>& p, Real t) {
    p.validate();
    const Real w = h.checked_value(t);
    return -Real(p.n - 1) * h.d2(t) / w;
}

template <class Real>
Real ricci_orthogonal(const WarpProfile<Real>& h, const SolitonParams<Real>& p, Real t) {
    p.validate();
    const Real w = h.checked_value(t);
    const Real w1 = h.d1(t);
    const Real w2 = h.d2(t);
    return (p.lambda_star - Real(p.n - 2) * w1 * w1 - w * w2) / (w * w);
}

// Trace of the Ricci tensor: ricci_tt + (n-1) * ricci_orthogonal, expanded.
template <class Real>
Real scalar_curvature(const WarpProfile<Real>& h, const SolitonParams<Real>& p, Real t) {
    p.validate();
    const Real w = h.checked_value(t);
    const Real w1 = h.d1(t);
    const Real w2 = h.d2(t);
    return -Real(2 * (p.n - 1)) * w2 / w +
           Real(p.n - 1) * (p.lambda_star - Real(p.n - 2) * w1 * w1) / (w * w);
}

// Eigenvalues of Hess(f): f'' along dt and f' h''/h' in every direction
// orthogonal to dt.
template <class Real>
std::pair<Real, Real> hessian_components(const Potential<Real>& f, const WarpProfile<Real>& h,
                                         Real t) {
    const Real w = h.checked_value(t);
    const auto [f1, f2] = f.values(t);
    return {f2, f1 * h.d1(t) / w};
}

template <class Real>
Real laplacian_f(const Potential<Real>& f, const WarpProfile<Real>& h,
                 const SolitonParams<Real>& p, Real t) {
    p.validate();
    const Real w = h.checked_value(t);
    const auto [f1, f2] = f.values(t);
    return f2 + Real(p.n - 1) * f1 * h.d1(t) / w;
}

} // namespace warpsol
