// Explicit embedded Runge-Kutta 5(4) (Dormand-Prince) with adaptive steps,
// for the scalar first-order problems arising from the classification ODE
// u' = B u^{2-n} + D u.  Fully deterministic for fixed inputs.
#pragma once

#include <cmath>
#include <string>
#include <vector>

#include "warpsol/core.hpp"

namespace warpsol {

template <class Real = double>
struct ODESpec {
    std::function<Real(Real, Real)> rhs; // (t, u) -> u'
    Real t0 = Real(0);
    Real u0 = Real(0);
    Real abs_tol = Real(1e-9);
    Real rel_tol = Real(1e-9);
    Real initial_step = Real(0); // 0 = choose automatically
    // Trajectories must stay above this value; crossing it is reported as a
    // singularity (the u -> 0 breakdown of the D = 0 branch).
    Real floor = Real(0);
};

template <class Real = double>
struct Trajectory {
    std::vector<Real> t;
    std::vector<Real> u;

    Real final_t() const { return t.back(); }
    Real final_u() const { return u.back(); }
    std::size_t size() const { return t.size(); }
};

template <class Real>
Trajectory<Real> integrate_ode(const ODESpec<Real>& spec, Real t_end) {
    if (spec.abs_tol <= Real(0) || spec.rel_tol <= Real(0))
        throw DomainError("integrate_ode: tolerances must be positive");
    if (!std::isfinite(spec.rhs(spec.t0, spec.u0)))
        throw DomainError("integrate_ode: rhs not finite at the initial point");

    // Dormand-Prince coefficients.
    static const Real c2 = Real(1) / 5, c3 = Real(3) / 10, c4 = Real(4) / 5, c5 = Real(8) / 9;
    static const Real a21 = Real(1) / 5;
    static const Real a31 = Real(3) / 40, a32 = Real(9) / 40;
    static const Real a41 = Real(44) / 45, a42 = Real(-56) / 15, a43 = Real(32) / 9;
    static const Real a51 = Real(19372) / 6561, a52 = Real(-25360) / 2187,
                      a53 = Real(64448) / 6561, a54 = Real(-212) / 729;
    static const Real a61 = Real(9017) / 3168, a62 = Real(-355) / 33, a63 = Real(46732) / 5247,
                      a64 = Real(49) / 176, a65 = Real(-5103) / 18656;
    static const Real b1 = Real(35) / 384, b3 = Real(500) / 1113, b4 = Real(125) / 192,
                      b5 = Real(-2187) / 6784, b6 = Real(11) / 84;
    static const Real e1 = Real(5179) / 57600, e3 = Real(7571) / 16695, e4 = Real(393) / 640,
                      e5 = Real(-92097) / 339200, e6 = Real(187) / 2100, e7 = Real(1) / 40;

    const Real dir = (t_end >= spec.t0) ? Real(1) : Real(-1);
    const Real span = std::abs(t_end - spec.t0);
    if (span == Real(0)) return {{spec.t0}, {spec.u0}};

    Real h = spec.initial_step > Real(0) ? spec.initial_step : span / Real(100);
    h = std::min(h, span);

    Trajectory<Real> traj;
    traj.t.push_back(spec.t0);
    traj.u.push_back(spec.u0);

    Real t = spec.t0;
    Real u = spec.u0;
    Real k1 = spec.rhs(t, u);
    const Real h_min = Real(1e-14);
    long steps = 0;

    while (dir * (t_end - t) > Real(0)) {
        if (++steps > 1000000) throw NumericsError("integrate_ode: step budget exhausted");
        h = std::min(h, std::abs(t_end - t));
        const Real hs = dir * h;

        const Real k2 = spec.rhs(t + c2 * hs, u + hs * a21 * k1);
        const Real k3 = spec.rhs(t + c3 * hs, u + hs * (a31 * k1 + a32 * k2));
        const Real k4 = spec.rhs(t + c4 * hs, u + hs * (a41 * k1 + a42 * k2 + a43 * k3));
        const Real k5 = spec.rhs(t + c5 * hs, u + hs * (a51 * k1 + a52 * k2 + a53 * k3 + a54 * k4));
        const Real k6 =
            spec.rhs(t + hs, u + hs * (a61 * k1 + a62 * k2 + a63 * k3 + a64 * k4 + a65 * k5));
        const Real u5 = u + hs * (b1 * k1 + b3 * k3 + b4 * k4 + b5 * k5 + b6 * k6);
        const Real k7 = spec.rhs(t + hs, u5);
        const Real u4 = u + hs * (e1 * k1 + e3 * k3 + e4 * k4 + e5 * k5 + e6 * k6 + e7 * k7);

        const Real sc = spec.abs_tol + spec.rel_tol * std::max(std::abs(u), std::abs(u5));
        const Real err = std::abs(u5 - u4) / sc;

        if (!std::isfinite(u5) || !std::isfinite(err)) {
            h /= Real(2);
            if (h < h_min)
                throw NumericsError("integrate_ode: rhs became non-finite near t = " +
                                    std::to_string(static_cast<double>(t)));
            continue;
        }

        if (err <= Real(1)) {
            t += hs;
            u = u5;
            k1 = k7; // FSAL
            traj.t.push_back(t);
            traj.u.push_back(u);
            if (u <= spec.floor)
                throw NumericsError("integrate_ode: solution reached the floor (u = " +
                                    std::to_string(static_cast<double>(u)) + " at t = " +
                                    std::to_string(static_cast<double>(t)) + ")");
        }

        const Real factor =
            (err == Real(0)) ? Real(5)
                             : std::clamp(Real(0.9) * std::pow(err, Real(-0.2)), Real(0.2), Real(5));
        h *= factor;
        if (h < h_min && dir * (t_end - t) > Real(0))
            throw NumericsError("integrate_ode: step underflow at t = " +
                                std::to_string(static_cast<double>(t)));
    }
    return traj;
}

} // namespace warpsol
