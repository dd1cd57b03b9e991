// Power-series solution of the coupled soliton equations (a = b = 1,
// constant c) under the odd ansatz h' = sum a_i t^i, f' = sum b_j t^j.
//
// Both equations are used with denominators cleared, since a_0 = 0 forbids
// dividing series by h':
//   A (odd orders):  -(n-1) h''' + f'' h' + c h' = 0
//   B (even orders): (n-2) h''^2 + h' h''' - f' h' h'' - c h'^2 - lambda_* = 0
// Order t^0 of B pins the seeds ((n-2) a_1^2 = lambda_*), order t^1 of A
// determines a_3, order t^2 of B is an automatic compatibility check, and
// each following odd order k gives a 2x2 linear system for (a_{k+2}, b_k)
// with determinant a_1^2 (k+2)(1-k)(n+k-1), nonsingular whenever a_1 != 0.
#pragma once

#include <cmath>
#include <string>
#include <vector>

#include "warpsol/core.hpp"

namespace warpsol {

template <class Real = double>
struct SeriesParams {
    int n = 3;
    Real c = Real(-1);
    Real lambda_star = Real(1);
    Real a1 = Real(1);
    Real b1 = Real(1);
};

template <class Real = double>
struct SeriesState {
    // coefficient index = power of t; even entries stay zero (odd ansatz).
    // coeffs_a reaches order+2: the final 2x2 solve determines it for free.
    std::vector<Real> coeffs_a;
    std::vector<Real> coeffs_b;
    int order = 0; // truncation N
    SeriesParams<Real> params;
};

namespace detail {

template <class Real>
Real coeff(const std::vector<Real>& v, int i) {
    return (i >= 0 && i < static_cast<int>(v.size())) ? v[static_cast<std::size_t>(i)] : Real(0);
}

// coefficient of t^m in  -(n-1)h''' + f''h' + ch'   (h''' = (h')'' termwise)
template <class Real>
Real series_eq_tangential(const std::vector<Real>& a, const std::vector<Real>& b, int n, Real c,
                          int m) {
    Real s = -Real(n - 1) * Real(m + 2) * Real(m + 1) * coeff(a, m + 2);
    for (int j = 1; j <= m; ++j) s += Real(j) * coeff(b, j) * coeff(a, m + 1 - j);
    s += c * coeff(a, m);
    return s;
}

// coefficient of t^m in  (n-2)h''^2 + h'h''' - f'h'h'' - ch'^2 - lambda_*
template <class Real>
Real series_eq_orthogonal(const std::vector<Real>& a, const std::vector<Real>& b, int n, Real c,
                          Real lambda_star, int m) {
    Real s = Real(0);
    for (int i = 1; i <= m + 1; ++i) {
        const int ip = m + 2 - i;
        if (ip < 1) continue;
        s += (Real(n - 2) * Real(i) * Real(ip) + Real(ip) * Real(ip - 1)) * coeff(a, i) *
             coeff(a, ip);
    }
    for (int j = 1; j <= m - 1; ++j)
        for (int i = 1; i <= m - j; ++i) {
            const int ip = m + 1 - j - i;
            if (ip < 1) continue;
            s -= Real(ip) * coeff(b, j) * coeff(a, i) * coeff(a, ip);
        }
    for (int i = 1; i <= m - 1; ++i) s -= c * coeff(a, i) * coeff(a, m - i);
    if (m == 0) s -= lambda_star;
    return s;
}

} // namespace detail

// Determines a_i (i <= N+2) and b_j (j <= N) from the seeds.  Throws
// NumericsError naming the order when the system is inconsistent or
// degenerate there.
template <class Real>
SeriesState<Real> series_recursion(const SeriesParams<Real>& p, int N) {
    if (N < 1) throw DomainError("series_recursion: order N >= 1 required");
    if (p.n < 2) throw DomainError("series_recursion: n >= 2 required");

    SeriesState<Real> st;
    st.order = N;
    st.params = p;
    st.coeffs_a.assign(static_cast<std::size_t>(N) + 3, Real(0));
    st.coeffs_b.assign(static_cast<std::size_t>(N) + 1, Real(0));
    st.coeffs_a[1] = p.a1;
    st.coeffs_b[1] = p.b1;

    // order 0 of B constrains the seeds
    const Real seed = Real(p.n - 2) * p.a1 * p.a1 - p.lambda_star;
    if (std::abs(seed) > Real(1e-12) * std::max(Real(1), std::abs(p.lambda_star)))
        throw NumericsError("series_recursion: inconsistent at order 0 "
                            "((n-2) a1^2 != lambda_*)");
    if (N == 1) return st;

    if (p.a1 == Real(0))
        throw NumericsError("series_recursion: degenerate at order 3 (a1 = 0)");

    // A at order 1: a_3 from the seeds
    st.coeffs_a[3] = p.a1 * (p.b1 + p.c) / (Real(6) * Real(p.n - 1));

    // B at order 2 is implied; verify it rather than assume
    const Real scale2 = std::max(Real(1), std::abs(p.a1) + std::abs(p.b1) + std::abs(p.c));
    if (std::abs(detail::series_eq_orthogonal(st.coeffs_a, st.coeffs_b, p.n, p.c, p.lambda_star,
                                              2)) > Real(1e-10) * scale2 * scale2 * scale2)
        throw NumericsError("series_recursion: inconsistent at order 2");

    for (int k = 3; k <= N; k += 2) {
        // unknowns (a_{k+2}, b_k); both coefficient slots are still zero, so
        // the full-order sums yield exactly the known parts.
        const Real rA = -detail::series_eq_tangential(st.coeffs_a, st.coeffs_b, p.n, p.c, k);
        const Real rB = -detail::series_eq_orthogonal(st.coeffs_a, st.coeffs_b, p.n, p.c,
                                                      p.lambda_star, k + 1);
        const Real m11 = -Real(p.n - 1) * Real(k + 2) * Real(k + 1);
        const Real m12 = Real(k) * p.a1;
        const Real m21 = p.a1 * Real(k + 2) * Real(2 * p.n + k - 3);
        const Real m22 = -p.a1 * p.a1;
        const Real det = m11 * m22 - m12 * m21;
        const Real det_scale = std::max({std::abs(m11 * m22), std::abs(m12 * m21), Real(1)});
        if (std::abs(det) <= Real(1e-14) * det_scale)
            throw NumericsError("series_recursion: degenerate at order " + std::to_string(k));
        st.coeffs_a[static_cast<std::size_t>(k) + 2] = (rA * m22 - m12 * rB) / det;
        st.coeffs_b[static_cast<std::size_t>(k)] = (m11 * rB - rA * m21) / det;
    }
    return st;
}

template <class Real>
Real series_eval(const std::vector<Real>& coeffs, Real t) {
    Real s = Real(0);
    for (std::size_t i = coeffs.size(); i-- > 0;) s = s * t + coeffs[i];
    return s;
}

// Residual coefficients of the cleared tangential equation for the computed
// coefficients; entries 0..order vanish for a successful recursion.
template <class Real>
std::vector<Real> series_tangential_residual(const SeriesState<Real>& st) {
    std::vector<Real> out(static_cast<std::size_t>(st.order) + 1);
    for (int m = 0; m <= st.order; ++m)
        out[static_cast<std::size_t>(m)] =
            detail::series_eq_tangential(st.coeffs_a, st.coeffs_b, st.params.n, st.params.c, m);
    return out;
}

template <class Real>
std::vector<Real> series_orthogonal_residual(const SeriesState<Real>& st) {
    std::vector<Real> out(static_cast<std::size_t>(st.order) + 2);
    for (int m = 0; m <= st.order + 1; ++m)
        out[static_cast<std::size_t>(m)] = detail::series_eq_orthogonal(
            st.coeffs_a, st.coeffs_b, st.params.n, st.params.c, st.params.lambda_star, m);
    return out;
}

} // namespace warpsol
