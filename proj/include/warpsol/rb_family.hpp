// Steady Ricci-Bourguignon solitons over a Ricci-flat fibre (rho = 1/n).
//
// The classification reduces to  u' = B u^{2-n} + D u  for u = h' > 0 with
// B = nC/((n-1)(n-2)), solved in closed form by
//     u^{n-1}(t) = [B/D + E^{n-1}] e^{(n-1)Dt} - B/D      (D != 0)
//     u^{n-1}(t) = B(n-1) t + E^{n-1}                     (D  = 0)
// and f' = C u^{1-n}.  Complete metrics are exactly D < 0 with
// E^{n-1} > -B/D; the boundary value gives constant u (product metric) and is
// flagged separately.
#pragma once

#include <cmath>
#include <numbers>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "warpsol/warp_profile.hpp"

namespace warpsol {

namespace detail {

template <class Real>
Real ipow(Real x, int k) {
    Real r = Real(1);
    for (int i = 0; i < k; ++i) r *= x;
    return r;
}

} // namespace detail

template <class Real = double>
struct RBFamilyParams {
    int n = 3;
    Real B = Real(0); // nC/((n-1)(n-2))
    Real C = Real(0);
    Real D = Real(0);
    Real E = Real(0); // h'(0)

    static RBFamilyParams from_C(int n, Real C, Real D, Real E) {
        RBFamilyParams rb;
        rb.n = n;
        rb.C = C;
        rb.D = D;
        rb.E = E;
        rb.B = Real(n) * C / (Real(n - 1) * Real(n - 2));
        rb.validate();
        return rb;
    }

    void validate() const {
        if (n < 3) throw DomainError("RBFamilyParams: n >= 3 required");
        if (!(C > Real(0)) || !(B > Real(0)))
            throw DomainError("RBFamilyParams: B and C must be positive");
        if (!(E > Real(0)))
            throw DomainError("RBFamilyParams: E = h'(0) must be positive");
        if (B != Real(n) * C / (Real(n - 1) * Real(n - 2)))
            throw DomainError("RBFamilyParams: B must equal nC/((n-1)(n-2))");
    }
};

// u^{n-1}(t); needs only (n, B, D, E).
template <class Real>
Real rb_radicand(int n, Real B, Real D, Real E, Real t) {
    const Real En1 = detail::ipow(E, n - 1);
    if (D == Real(0)) return B * Real(n - 1) * t + En1;
    const Real coef = B / D + En1;
    if (coef == Real(0)) return En1; // constant-warp boundary
    return coef * std::exp(Real(n - 1) * D * t) - B / D;
}

template <class Real>
Real rb_profile_raw(int n, Real B, Real D, Real E, Real t) {
    const Real v = rb_radicand(n, B, D, E, t);
    if (!(v > Real(0))) {
        std::ostringstream os;
        os << "rb_profile: radicand " << static_cast<double>(v) << " <= 0 at t = "
           << static_cast<double>(t) << " (outside the solution domain)";
        throw DomainError(os.str());
    }
    return std::pow(v, Real(1) / Real(n - 1));
}

template <class Real>
Real rb_profile(const RBFamilyParams<Real>& rb, Real t) {
    rb.validate();
    return rb_profile_raw(rb.n, rb.B, rb.D, rb.E, t);
}

template <class Real>
Real rb_potential(const RBFamilyParams<Real>& rb, Real t) {
    rb.validate();
    const Real u = rb_profile_raw(rb.n, rb.B, rb.D, rb.E, t);
    return rb.C / detail::ipow(u, rb.n - 1);
}

template <class Real = double>
struct RBVerdict {
    bool complete = false;
    bool constant_warp = false;       // boundary E^{n-1} = -B/D
    std::optional<Real> zero_t = {};  // warp zero for the incomplete branches
    std::string reason;
};

template <class Real>
RBVerdict<Real> rb_classify(const RBFamilyParams<Real>& rb) {
    rb.validate();
    RBVerdict<Real> v;
    const Real En1 = detail::ipow(rb.E, rb.n - 1);
    std::ostringstream os;

    if (rb.D == Real(0)) {
        v.zero_t = -En1 / (rb.B * Real(rb.n - 1));
        os << "incomplete: D = 0, h' vanishes at t0 = " << static_cast<double>(*v.zero_t);
        v.reason = os.str();
        return v;
    }

    const Real coef = En1 + rb.B / rb.D;
    // detect the constant-warp boundary up to roundoff in E^{n-1}
    const Real boundary_eps =
        Real(8) * std::numeric_limits<Real>::epsilon() * std::max(std::abs(rb.B / rb.D), En1);
    if (std::abs(coef) <= boundary_eps) {
        v.constant_warp = true;
        v.reason = "incomplete flag: constant h' (boundary E^{n-1} = -B/D, product metric)";
        return v;
    }

    if (rb.D < Real(0) && coef > Real(0)) {
        v.complete = true;
        v.reason = "complete: D < 0 and E^{n-1} > -B/D";
        return v;
    }

    // remaining branches have a warp zero at finite t0
    const Real ratio = (rb.B / rb.D) / coef;
    v.zero_t = std::log(ratio) / (Real(rb.n - 1) * rb.D);
    os << "incomplete: h' vanishes at t0 = " << static_cast<double>(*v.zero_t)
       << (rb.D > Real(0) ? " (D > 0)" : " (E^{n-1} < -B/D)");
    v.reason = os.str();
    return v;
}

template <class Real>
bool rb_is_complete(const RBFamilyParams<Real>& rb) {
    return rb_classify(rb).complete;
}

// Largest open interval on which h' is defined and positive.
template <class Real>
Interval<Real> rb_domain(const RBFamilyParams<Real>& rb) {
    const auto v = rb_classify(rb);
    if (v.zero_t) return {*v.zero_t, std::numeric_limits<Real>::infinity()};
    return Interval<Real>::all();
}

// WarpProfile with analytic derivatives taken from the ODE itself:
// h'' = B u^{2-n} + D u,  h''' = h'' ((2-n) B u^{1-n} + D).
template <class Real>
WarpProfile<Real> rb_warp_profile(const RBFamilyParams<Real>& rb) {
    rb.validate();
    const int n = rb.n;
    const Real B = rb.B, D = rb.D, E = rb.E;
    auto value = [n, B, D, E](Real t) { return rb_profile_raw(n, B, D, E, t); };
    auto d1 = [n, B, D, E](Real t) {
        const Real u = rb_profile_raw(n, B, D, E, t);
        return B / detail::ipow(u, n - 2) + D * u;
    };
    auto d2 = [n, B, D, E](Real t) {
        const Real u = rb_profile_raw(n, B, D, E, t);
        const Real u1 = B / detail::ipow(u, n - 2) + D * u;
        return u1 * (Real(2 - n) * B / detail::ipow(u, n - 1) + D);
    };
    std::ostringstream label;
    label << "rb-steady(n=" << n << ",C=" << static_cast<double>(rb.C)
          << ",D=" << static_cast<double>(D) << ",E=" << static_cast<double>(E) << ")";
    return WarpProfile<Real>(label.str(), rb_domain(rb), value, d1, d2);
}

template <class Real>
Potential<Real> rb_potential_fn(const RBFamilyParams<Real>& rb) {
    rb.validate();
    const int n = rb.n;
    const Real B = rb.B, C = rb.C, D = rb.D, E = rb.E;
    auto values = [n, B, C, D, E](Real t) {
        const Real u = rb_profile_raw(n, B, D, E, t);
        const Real v = detail::ipow(u, n - 1);
        const Real f1 = C / v;
        const Real f2 = Real(1 - n) * C * (B / (v * v) + D / v);
        return std::pair<Real, Real>(f1, f2);
    };
    return Potential<Real>(values, Potential<Real>::Provenance::ClosedForm, {{"C", C}});
}

template <class Real = double>
struct DLimitRecord {
    std::vector<Real> D_values;
    std::vector<Real> errors; // |h'_D(t) - h'_{D=0}(t)|
    bool monotone_decreasing = false;
};

// Pointwise D -> 0 convergence of the D != 0 closed form to the D = 0 one.
template <class Real>
DLimitRecord<Real> rb_limit_D_to_zero(Real B, Real E, int n, Real t,
                                      const std::vector<Real>& D_sequence) {
    if (n < 3 || !(B > Real(0)) || !(E > Real(0)))
        throw DomainError("rb_limit_D_to_zero: need n >= 3, B > 0, E > 0");
    if (!(rb_radicand(n, B, Real(0), E, t) > Real(0)))
        throw DomainError("rb_limit_D_to_zero: t outside the D = 0 branch domain");
    DLimitRecord<Real> rec;
    const Real base = rb_profile_raw(n, B, Real(0), E, t);
    for (Real D : D_sequence) {
        rec.D_values.push_back(D);
        rec.errors.push_back(std::abs(rb_profile_raw(n, B, D, E, t) - base));
    }
    rec.monotone_decreasing = true;
    for (std::size_t i = 1; i < rec.errors.size(); ++i)
        if (!(rec.errors[i] < rec.errors[i - 1])) rec.monotone_decreasing = false;
    return rec;
}

template <class Real = double>
struct CigarPoint {
    Real x, y;
    Real conformal_factor; // 1/(1+x^2+y^2)
    Real f_value;          // -log(1+x^2+y^2)
};

// Cartesian form of the cigar metric: (t,u) -> (sinh t sin u, sinh t cos u),
// ds^2 = (dx^2+dy^2)/(1+x^2+y^2).  Checks the identity 1+x^2+y^2 = cosh^2 t.
template <class Real>
CigarPoint<Real> cigar_cartesian(Real t, Real u) {
    if (t < Real(0)) throw DomainError("cigar_cartesian: t >= 0 required");
    if (u < Real(0) || u >= Real(2) * std::numbers::pi_v<Real>)
        throw DomainError("cigar_cartesian: u in [0, 2*pi) required");
    CigarPoint<Real> pt;
    const Real sh = std::sinh(t);
    pt.x = sh * std::sin(u);
    pt.y = sh * std::cos(u);
    const Real w = Real(1) + pt.x * pt.x + pt.y * pt.y;
    const Real ch = std::cosh(t);
    if (std::abs(w - ch * ch) > Real(64) * std::numeric_limits<Real>::epsilon() * ch * ch)
        throw NumericsError("cigar_cartesian: identity 1+x^2+y^2 = cosh^2 t violated");
    pt.conformal_factor = Real(1) / w;
    pt.f_value = -std::log(w);
    return pt;
}

} // namespace warpsol
