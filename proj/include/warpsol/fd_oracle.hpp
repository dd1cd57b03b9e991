// Independent curvature oracle.
//
// Assembles the full n x n coordinate metric of dt^2 + h'(t)^2 ds_*^2 for a
// flat or round-sphere fibre chart and computes the Ricci tensor from nothing
// but metric samples: Christoffel symbols and their derivatives are taken by
// second-order central differences.  Only h'(t) itself is ever evaluated, so
// agreement with the closed forms cross-validates h'', h''' and the curvature
// formulas at once.
#pragma once

#include <array>
#include <cmath>
#include <numbers>
#include <string>

#include "warpsol/warp_profile.hpp"

namespace warpsol {

enum class FibreModel {
    Flat,        // Cartesian fibre coordinates, lambda_* = 0, n in {2,3,4}
    RoundSphere, // polar fibre coordinates on S^{n-1}, lambda_* = n-2, n in {3,4}
};

template <class Real = double>
struct SmallMatrix {
    int dim = 0;
    std::array<std::array<Real, 4>, 4> m{};

    Real& at(int i, int j) { return m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]; }
    Real at(int i, int j) const {
        return m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
    }

    Real max_abs() const {
        Real s = Real(0);
        for (int i = 0; i < dim; ++i)
            for (int j = 0; j < dim; ++j) s = std::max(s, std::abs(at(i, j)));
        return s;
    }
};

namespace detail {

template <class Real>
SmallMatrix<Real> invert(const SmallMatrix<Real>& g) {
    const int n = g.dim;
    std::array<std::array<Real, 8>, 4> w{};
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) w[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = g.at(i, j);
        w[static_cast<std::size_t>(i)][static_cast<std::size_t>(n + i)] = Real(1);
    }
    for (int col = 0; col < n; ++col) {
        int piv = col;
        for (int r = col + 1; r < n; ++r)
            if (std::abs(w[static_cast<std::size_t>(r)][static_cast<std::size_t>(col)]) >
                std::abs(w[static_cast<std::size_t>(piv)][static_cast<std::size_t>(col)]))
                piv = r;
        if (w[static_cast<std::size_t>(piv)][static_cast<std::size_t>(col)] == Real(0))
            throw NumericsError("fd_oracle: degenerate metric");
        std::swap(w[static_cast<std::size_t>(piv)], w[static_cast<std::size_t>(col)]);
        const Real d = w[static_cast<std::size_t>(col)][static_cast<std::size_t>(col)];
        for (int j = 0; j < 2 * n; ++j) w[static_cast<std::size_t>(col)][static_cast<std::size_t>(j)] /= d;
        for (int r = 0; r < n; ++r) {
            if (r == col) continue;
            const Real fac = w[static_cast<std::size_t>(r)][static_cast<std::size_t>(col)];
            if (fac == Real(0)) continue;
            for (int j = 0; j < 2 * n; ++j)
                w[static_cast<std::size_t>(r)][static_cast<std::size_t>(j)] -=
                    fac * w[static_cast<std::size_t>(col)][static_cast<std::size_t>(j)];
        }
    }
    SmallMatrix<Real> inv;
    inv.dim = n;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            inv.at(i, j) = w[static_cast<std::size_t>(i)][static_cast<std::size_t>(n + j)];
    return inv;
}

template <class Real>
using Coords = std::array<Real, 4>;

// Christoffel symbols Gamma^k_{ij} at x from central differences of the metric.
template <class Real, class Metric>
std::array<SmallMatrix<Real>, 4> christoffel(const Metric& metric, const Coords<Real>& x, int n,
                                             Real step) {
    std::array<SmallMatrix<Real>, 4> dg; // dg[l] = d g / d x^l
    for (int l = 0; l < n; ++l) {
        Coords<Real> xp = x, xm = x;
        xp[static_cast<std::size_t>(l)] += step;
        xm[static_cast<std::size_t>(l)] -= step;
        const SmallMatrix<Real> gp = metric(xp);
        const SmallMatrix<Real> gm = metric(xm);
        dg[static_cast<std::size_t>(l)].dim = n;
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                dg[static_cast<std::size_t>(l)].at(i, j) =
                    (gp.at(i, j) - gm.at(i, j)) / (Real(2) * step);
    }
    const SmallMatrix<Real> ginv = invert(metric(x));
    std::array<SmallMatrix<Real>, 4> gam;
    for (int k = 0; k < n; ++k) gam[static_cast<std::size_t>(k)].dim = n;
    for (int k = 0; k < n; ++k)
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                Real s = Real(0);
                for (int l = 0; l < n; ++l)
                    s += ginv.at(k, l) * (dg[static_cast<std::size_t>(i)].at(j, l) +
                                          dg[static_cast<std::size_t>(j)].at(i, l) -
                                          dg[static_cast<std::size_t>(l)].at(i, j));
                gam[static_cast<std::size_t>(k)].at(i, j) = s / Real(2);
            }
    return gam;
}

} // namespace detail

// Coordinate Ricci tensor of the warped metric at base coordinate t, computed
// purely by finite differences of metric samples.
//
// Fibre chart angles (round sphere) may be overridden; defaults sit away from
// the poles.  Throws on chart singularities and fails an internal symmetry
// check when the step is too coarse for the local metric variation.
template <class Real>
SmallMatrix<Real> oracle_ricci(const WarpProfile<Real>& h, const SolitonParams<Real>& p,
                               FibreModel fibre, Real t, Real step,
                               std::array<Real, 2> angles = {Real(1.1), Real(1.3)}) {
    p.validate();
    const int n = p.n;
    if (n < 2 || n > 4) throw DomainError("fd_oracle: supported dimensions are n in {2,3,4}");
    if (fibre == FibreModel::RoundSphere && n == 2)
        throw DomainError("fd_oracle: round-sphere fibre needs n >= 3");
    if (step <= Real(0)) throw DomainError("fd_oracle: step must be positive");
    // the nested differences reach +-2*step in every coordinate
    if (!h.domain().contains(t, Real(2) * step))
        throw DomainError("fd_oracle: stencil leaves the profile domain");
    if (fibre == FibreModel::RoundSphere) {
        for (int i = 0; i < n - 2; ++i) {
            const Real ang = angles[static_cast<std::size_t>(i)];
            if (std::sin(ang) < Real(16) * step)
                throw DomainError("fd_oracle: fibre chart too close to a pole");
        }
    }

    auto metric = [&](const detail::Coords<Real>& x) {
        SmallMatrix<Real> g;
        g.dim = n;
        const Real w = h.value(x[0]);
        const Real w2 = w * w;
        g.at(0, 0) = Real(1);
        if (fibre == FibreModel::Flat) {
            for (int i = 1; i < n; ++i) g.at(i, i) = w2;
        } else if (n == 3) {
            g.at(1, 1) = w2;
            const Real s = std::sin(x[1]);
            g.at(2, 2) = w2 * s * s;
        } else {
            g.at(1, 1) = w2;
            const Real s1 = std::sin(x[1]);
            g.at(2, 2) = w2 * s1 * s1;
            const Real s2 = std::sin(x[2]);
            g.at(3, 3) = w2 * s1 * s1 * s2 * s2;
        }
        return g;
    };

    detail::Coords<Real> x{t, Real(0), Real(0), Real(0)};
    if (fibre == FibreModel::RoundSphere)
        for (int i = 0; i < n - 2; ++i) x[static_cast<std::size_t>(i + 1)] = angles[static_cast<std::size_t>(i)];

    // Gamma at the shifted points for the outer derivative.
    const auto gam0 = detail::christoffel(metric, x, n, step);
    std::array<std::array<SmallMatrix<Real>, 4>, 4> gp, gm;
    for (int l = 0; l < n; ++l) {
        detail::Coords<Real> xp = x, xm = x;
        xp[static_cast<std::size_t>(l)] += step;
        xm[static_cast<std::size_t>(l)] -= step;
        gp[static_cast<std::size_t>(l)] = detail::christoffel(metric, xp, n, step);
        gm[static_cast<std::size_t>(l)] = detail::christoffel(metric, xm, n, step);
    }
    auto dgam = [&](int l, int k, int i, int j) {
        return (gp[static_cast<std::size_t>(l)][static_cast<std::size_t>(k)].at(i, j) -
                gm[static_cast<std::size_t>(l)][static_cast<std::size_t>(k)].at(i, j)) /
               (Real(2) * step);
    };

    SmallMatrix<Real> ric;
    ric.dim = n;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            Real s = Real(0);
            for (int k = 0; k < n; ++k) {
                s += dgam(k, k, i, j) - dgam(j, k, i, k);
                for (int l = 0; l < n; ++l)
                    s += gam0[static_cast<std::size_t>(k)].at(k, l) *
                             gam0[static_cast<std::size_t>(l)].at(i, j) -
                         gam0[static_cast<std::size_t>(k)].at(j, l) *
                             gam0[static_cast<std::size_t>(l)].at(i, k);
            }
            ric.at(i, j) = s;
        }

    // Ricci from this formula is symmetric up to finite-difference error;
    // gross asymmetry means the step is too large for the local variation.
    Real asym = Real(0);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) asym = std::max(asym, std::abs(ric.at(i, j) - ric.at(j, i)));
    if (asym > Real(1e-3) * (Real(1) + ric.max_abs()))
        throw NumericsError("fd_oracle: consistency check failed, step too large");
    return ric;
}

template <class Real = double>
struct OracleComponents {
    Real tt;         // Ric(dt, dt)
    Real orthogonal; // Ric(X, X) per g-unit fibre direction
};

// The two distinct eigenvalues of the coordinate Ricci matrix, normalized
// against the metric.
template <class Real>
OracleComponents<Real> oracle_components(const WarpProfile<Real>& h, const SolitonParams<Real>& p,
                                         FibreModel fibre, Real t, Real step,
                                         std::array<Real, 2> angles = {Real(1.1), Real(1.3)}) {
    const SmallMatrix<Real> ric = oracle_ricci(h, p, fibre, t, step, angles);
    const Real w = h.checked_value(t);
    return {ric.at(0, 0), ric.at(1, 1) / (w * w)};
}

} // namespace warpsol
