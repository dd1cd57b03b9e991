// Warp profiles h'(t) and soliton potentials f(t).
//
// A warped-product metric dt^2 + h'(t)^2 ds_*^2 is described entirely by the
// scalar function h' together with its first two derivatives h'', h'''.  The
// potential enters the soliton equations only through f' and f'', so the
// Potential type evaluates that pair jointly (one call, shared intermediate
// values; this keeps the combination f''h' - f'h'' free of uncorrelated
// rounding between the two components).
#pragma once

#include <map>
#include <string>
#include <utility>

#include "warpsol/core.hpp"

namespace warpsol {

template <class Real = double>
class WarpProfile {
public:
    using Fn = std::function<Real(Real)>;

    WarpProfile(std::string label, Interval<Real> domain, Fn value, Fn d1, Fn d2)
        : label_(std::move(label)),
          domain_(domain),
          value_(std::move(value)),
          d1_(std::move(d1)),
          d2_(std::move(d2)) {}

    // Profile with derivatives taken by central finite differences of the
    // value callable (O(step^2), default step 1e-5). Analytic derivatives are
    // preferred whenever available.
    static WarpProfile with_fd_derivatives(std::string label, Interval<Real> domain, Fn value,
                                           Real step = Real(1e-5)) {
        Fn d1 = [value, step](Real t) { return fd::d1(value, t, step); };
        Fn d2 = [value, step](Real t) { return fd::d2(value, t, step); };
        return WarpProfile(std::move(label), domain, std::move(value), std::move(d1), std::move(d2));
    }

    Real value(Real t) const { return value_(t); } // h'
    Real d1(Real t) const { return d1_(t); }       // h''
    Real d2(Real t) const { return d2_(t); }       // h'''

    const Interval<Real>& domain() const { return domain_; }
    const std::string& label() const { return label_; }

    // h'(t) after the domain and zero-warp checks every curvature formula
    // requires (all of them divide by h').
    Real checked_value(Real t) const {
        if (!domain_.contains(t))
            throw DomainError(label_ + ": t = " + std::to_string(static_cast<double>(t)) +
                              " outside profile domain");
        const Real w = value_(t);
        if (std::abs(w) < Real(kZeroWarpEps))
            throw SingularWarpError(label_ + ": zero warp at t = " +
                                        std::to_string(static_cast<double>(t)),
                                    static_cast<double>(t));
        return w;
    }

private:
    std::string label_;
    Interval<Real> domain_;
    Fn value_, d1_, d2_;
};

template <class Real = double>
class Potential {
public:
    enum class Provenance { ClosedForm, Quadrature };

    // Joint evaluator returning (f'(t), f''(t)).
    using PairFn = std::function<std::pair<Real, Real>(Real)>;

    Potential(PairFn values, Provenance prov, std::map<std::string, Real> constants = {})
        : values_(std::move(values)), provenance_(prov), constants_(std::move(constants)) {}

    static Potential from_fns(std::function<Real(Real)> f1, std::function<Real(Real)> f2,
                              std::map<std::string, Real> constants = {}) {
        PairFn pair = [f1 = std::move(f1), f2 = std::move(f2)](Real t) {
            return std::pair<Real, Real>(f1(t), f2(t));
        };
        return Potential(std::move(pair), Provenance::ClosedForm, std::move(constants));
    }

    static Potential zero() {
        return from_fns([](Real) { return Real(0); }, [](Real) { return Real(0); });
    }

    std::pair<Real, Real> values(Real t) const { return values_(t); }
    Real value(Real t) const { return values_(t).first; } // f'
    Real d1(Real t) const { return values_(t).second; }   // f''

    Provenance provenance() const { return provenance_; }
    const std::map<std::string, Real>& constants() const { return constants_; }

private:
    PairFn values_;
    Provenance provenance_;
    std::map<std::string, Real> constants_;
};

// Dimension and coefficients of  a Ric + b Hess(f) + c g = 0,  together with
// the normalized Einstein constant of the fibre (Ric_* = lambda_* g_*, so
// lambda_* = n-2 for the unit (n-1)-sphere).
template <class Real = double>
struct SolitonParams {
    int n = 3;
    Real a = Real(1);
    Real b = Real(1);
    Real lambda_star = Real(0);

    void validate() const {
        if (n < 2) throw DomainError("SolitonParams: dimension n must be >= 2");
        // A 1-dimensional fibre is Ricci-flat; any other lambda_* is meaningless.
        if (n == 2 && lambda_star != Real(0))
            throw DomainError("SolitonParams: n = 2 requires lambda_star = 0");
    }
};

} // namespace warpsol
