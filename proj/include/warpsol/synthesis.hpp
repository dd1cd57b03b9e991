// Potential synthesis and residual certification.
//
// Given a warp profile h' with no zeros on the working interval, the master
// equation
//
//     a(n-2)[h''^2 - h'h'''] + b h'[f''h' - f'h''] = lambda_* a
//
// determines (f'/h')' pointwise, so f' = h' * (C + integral) by quadrature.
// The integrand is formed from h', h'', h''' only; f'' follows analytically
// from the same integral value, never by differentiating the quadrature.
#pragma once

#include <algorithm>
#include <cmath>
#include <optional>
#include <utility>
#include <vector>

#include "warpsol/geometry.hpp"
#include "warpsol/quadrature.hpp"
#include "warpsol/roots.hpp"

namespace warpsol {

template <class Real = double>
struct QuadratureSpec {
    Real abs_tol = Real(1e-10);
    Real rel_tol = Real(1e-10);
    Real base_point = Real(0);  // where the integration constants anchor
    Real const_inner = Real(0); // C: value of f'/h' at the base point
    Real const_outer = Real(0); // D: value of f at the base point
    const char* method = kQuadratureMethod;

    void validate(const WarpProfile<Real>& h) const {
        if (abs_tol <= Real(0) || rel_tol <= Real(0))
            throw DomainError("QuadratureSpec: tolerances must be positive");
        if (!h.domain().contains(base_point))
            throw DomainError("QuadratureSpec: base point outside profile domain");
    }
};

// (f'/h')'(t) from the master equation.
template <class Real>
Real synthesis_integrand(const WarpProfile<Real>& h, const SolitonParams<Real>& p, Real t) {
    const Real w = h.checked_value(t);
    const Real w1 = h.d1(t);
    const Real w2 = h.d2(t);
    return (p.lambda_star * p.a - p.a * Real(p.n - 2) * (w1 * w1 - w * w2)) / (p.b * w * w * w);
}

template <class Real>
Potential<Real> synthesize_potential(const WarpProfile<Real>& h, const SolitonParams<Real>& p,
                                     const QuadratureSpec<Real>& q) {
    p.validate();
    q.validate(h);
    if (p.b == Real(0))
        throw DomainError("synthesize_potential: b = 0 has no potential to synthesize "
                          "(Einstein branch)");

    auto integrand = [h, p](Real s) { return synthesis_integrand(h, p, s); };
    auto values = [h, p, q, integrand](Real t) {
        const Real w = h.checked_value(t);
        const Real ratio =
            q.const_inner + quadrature(integrand, q.base_point, t, q.abs_tol, q.rel_tol);
        const Real f1 = w * ratio;
        const Real f2 = h.d1(t) * ratio + w * synthesis_integrand(h, p, t);
        return std::pair<Real, Real>(f1, f2);
    };
    return Potential<Real>(values, Potential<Real>::Provenance::Quadrature,
                           {{"const_inner", q.const_inner}, {"base_point", q.base_point}});
}

// f(t) itself, on request: one more quadrature anchored by const_outer.
template <class Real>
Real potential_antiderivative(const Potential<Real>& f, const QuadratureSpec<Real>& q, Real t) {
    auto fprime = [&f](Real s) { return f.value(s); };
    return q.const_outer + quadrature(fprime, q.base_point, t, q.abs_tol, q.rel_tol);
}

// c(t) = -(a S + b Laplacian f)/n, the function making a Ric + b Hess f + c g
// traceless.
template <class Real>
Real induced_c(const WarpProfile<Real>& h, const Potential<Real>& f, const SolitonParams<Real>& p,
               Real t) {
    return -(p.a * scalar_curvature(h, p, t) + p.b * laplacian_f(f, h, p, t)) / Real(p.n);
}

template <class Real = double>
struct ResidualReport {
    std::vector<Real> grid; // points actually evaluated
    std::vector<Real> res_tangential;
    std::vector<Real> res_orthogonal;
    std::vector<Real> res_master;
    std::vector<Real> c_values;

    struct MaxAbs {
        Real tangential = Real(0);
        Real orthogonal = Real(0);
        Real master = Real(0);
    } max_abs;

    std::vector<Real> singularities; // warp zeros detected in the scanned range
};

namespace detail {

// grid points within this distance of a detected warp zero are skipped
template <class Real>
inline constexpr Real kSingularityMargin = Real(1e-6);

template <class Real>
struct PointResiduals {
    Real tangential, orthogonal, master, c;
};

template <class Real>
PointResiduals<Real> residuals_at(const WarpProfile<Real>& h, const Potential<Real>& f,
                                  const SolitonParams<Real>& p, Real t) {
    const Real w = h.checked_value(t);
    const Real w1 = h.d1(t);
    const Real w2 = h.d2(t);
    const auto [f1, f2] = f.values(t);
    const Real c = induced_c(h, f, p, t);
    PointResiduals<Real> r;
    r.c = c;
    r.tangential = -Real(p.n - 1) * p.a * w2 / w + p.b * f2 + c;
    r.orthogonal = p.a * Real(p.n - 2) * w1 * w1 + p.a * w * w2 - p.b * f1 * w * w1 - c * w * w -
                   p.lambda_star * p.a;
    r.master = p.a * Real(p.n - 2) * (w1 * w1 - w * w2) + p.b * w * (f2 * w - f1 * w1) -
               p.lambda_star * p.a;
    return r;
}

} // namespace detail

// Evaluates all three residuals on the grid with c = induced_c.  Grid points
// sitting on (or within 1e-6 of) a warp zero are recorded and skipped.
template <class Real>
ResidualReport<Real> residual_report(const WarpProfile<Real>& h, const Potential<Real>& f,
                                     const SolitonParams<Real>& p, const std::vector<Real>& grid) {
    p.validate();
    if (grid.empty()) throw DomainError("residual_report: empty grid");

    ResidualReport<Real> rep;
    const Real lo = *std::min_element(grid.begin(), grid.end());
    const Real hi = *std::max_element(grid.begin(), grid.end());
    if (lo < hi) {
        auto warp = [&h](Real s) { return h.value(s); };
        const int res = std::max<int>(4 * static_cast<int>(grid.size()), 256);
        rep.singularities = scan_zeros(warp, lo, hi, res);
    }

    for (Real t : grid) {
        bool near_zero = false;
        for (Real z : rep.singularities)
            if (std::abs(t - z) < detail::kSingularityMargin<Real>) near_zero = true;
        if (!near_zero && std::abs(h.value(t)) < Real(kZeroWarpEps)) {
            rep.singularities.push_back(t);
            near_zero = true;
        }
        if (near_zero) continue;

        const auto r = detail::residuals_at(h, f, p, t);
        rep.grid.push_back(t);
        rep.res_tangential.push_back(r.tangential);
        rep.res_orthogonal.push_back(r.orthogonal);
        rep.res_master.push_back(r.master);
        rep.c_values.push_back(r.c);
        rep.max_abs.tangential = std::max(rep.max_abs.tangential, std::abs(r.tangential));
        rep.max_abs.orthogonal = std::max(rep.max_abs.orthogonal, std::abs(r.orthogonal));
        rep.max_abs.master = std::max(rep.max_abs.master, std::abs(r.master));
    }
    std::sort(rep.singularities.begin(), rep.singularities.end());
    return rep;
}

// Certifies the traceless condition (a Ric + b Hess f)^o = 0 on the interval.
// For a = b = 1 success means a gradient Ricci almost soliton with
// lambda(t) = induced_c(t).
template <class Real>
std::pair<bool, ResidualReport<Real>> check_almost_soliton(const WarpProfile<Real>& h,
                                                           const Potential<Real>& f,
                                                           const SolitonParams<Real>& p,
                                                           Interval<Real> interval, Real tol,
                                                           int grid_points = 200) {
    auto rep = residual_report(h, f, p, linspace(interval.lo(), interval.hi(), grid_points));
    return {rep.max_abs.master <= tol, std::move(rep)};
}

// n = 2 check: f' = gamma h' and  -a h''' + b gamma h' h'' + c h' = 0.
template <class Real>
bool check_n2_system(const WarpProfile<Real>& h, const Potential<Real>& f, Real gamma, Real c,
                     const std::vector<Real>& grid, Real a = Real(1), Real b = Real(1),
                     Real tol = Real(1e-8)) {
    if (grid.empty()) throw DomainError("check_n2_system: empty grid");
    for (Real t : grid) {
        const Real w = h.checked_value(t);
        const Real f1 = f.value(t);
        if (std::abs(f1 - gamma * w) > tol) return false;
        if (std::abs(-a * h.d2(t) + b * gamma * w * h.d1(t) + c * w) > tol) return false;
    }
    return true;
}

} // namespace warpsol
