// Catalog of the explicit soliton families, each carrying a warp profile with
// analytic derivatives, a potential (closed form where one exists, quadrature
// synthesis otherwise), the expected coefficients, and completeness metadata.
#pragma once

#include <numbers>
#include <optional>
#include <sstream>
#include <vector>

#include "warpsol/rb_family.hpp"
#include "warpsol/synthesis.hpp"

namespace warpsol {

template <class Real = double>
struct FamilyEntry {
    std::string name;
    WarpProfile<Real> profile;
    Potential<Real> potential;
    SolitonParams<Real> params;
    std::optional<Real> expected_c; // constant c when the entry is an exact soliton
    std::optional<Real> gamma;      // n = 2 entries: f' = gamma h'
    Interval<Real> sample_domain;   // bounded interval used for residual scans
    bool complete = false;
    std::string notes;
};

namespace detail {

template <class Real>
FamilyEntry<Real> einstein_entry(const std::string& name, int n,
                                 typename WarpProfile<Real>::Fn v,
                                 typename WarpProfile<Real>::Fn d1,
                                 typename WarpProfile<Real>::Fn d2, Interval<Real> dom,
                                 Interval<Real> sample, Real lambda_star, Real c, bool complete,
                                 std::string notes) {
    FamilyEntry<Real> e{name,
                        WarpProfile<Real>(name, dom, std::move(v), std::move(d1), std::move(d2)),
                        Potential<Real>::zero(),
                        {n, Real(1), Real(1), lambda_star},
                        c,
                        {},
                        sample,
                        complete,
                        std::move(notes)};
    return e;
}

// n = 2 exact solitons with f' = gamma h' and constant c = 0.
template <class Real>
FamilyEntry<Real> n2_entry(const std::string& name, typename WarpProfile<Real>::Fn v,
                           typename WarpProfile<Real>::Fn d1, typename WarpProfile<Real>::Fn d2,
                           Interval<Real> dom, Interval<Real> sample, Real gamma, bool complete,
                           std::string notes) {
    WarpProfile<Real> prof(name, dom, v, d1, d2);
    auto pot = Potential<Real>::from_fns([v, gamma](Real t) { return gamma * v(t); },
                                         [d1, gamma](Real t) { return gamma * d1(t); },
                                         {{"gamma", gamma}});
    FamilyEntry<Real> e{name, std::move(prof), std::move(pot),   {2, Real(1), Real(1), Real(0)},
                        Real(0), gamma,        sample,           complete,
                        std::move(notes)};
    return e;
}

template <class Real>
Potential<Real> arctan_closed_potential(int n, Real lambda_star, Real a, Real b, Real C) {
    auto values = [n, lambda_star, a, b, C](Real t) {
        const Real t2 = t * t;
        const Real q = t2 + Real(1);
        const Real poly = t2 * t2 * t2 * t / Real(7) + Real(3) * t2 * t2 * t / Real(5) + t2 * t + t;
        const Real P = a * lambda_star / b * poly +
                       a * Real(n - 2) / b * (Real(2) * t - Real(4) * std::atan(t) + C);
        const Real Pp = a * lambda_star / b * q * q * q +
                        a * Real(n - 2) / b * Real(2) * (t2 - Real(1)) / q;
        const Real f1 = P / q;
        const Real f2 = (Pp - Real(2) * t * f1) / q;
        return std::pair<Real, Real>(f1, f2);
    };
    return Potential<Real>(values, Potential<Real>::Provenance::ClosedForm, {{"const_inner", C}});
}

} // namespace detail

// Parametric construction of a named family.  `n` and `lambda_star` apply to
// the families that admit them; fixed-dimension entries reject overrides.
template <class Real = double>
FamilyEntry<Real> make_family(const std::string& name, std::optional<int> n_opt = {},
                              std::optional<Real> lambda_opt = {}, Real a = Real(1),
                              Real b = Real(1)) {
    using std::cos;
    using std::cosh;
    using std::exp;
    using std::sin;
    using std::sinh;
    using std::tan;
    using std::tanh;
    const Real pi = std::numbers::pi_v<Real>;
    const Real inf = std::numeric_limits<Real>::infinity();

    auto require_n2 = [&](const char* who) {
        if ((n_opt && *n_opt != 2) || (lambda_opt && *lambda_opt != Real(0)) || a != Real(1) ||
            b != Real(1))
            throw DomainError(std::string(who) + ": fixed n = 2 entry (a = b = 1, lambda_* = 0)");
    };

    if (name == "sin" || name == "cos" || name == "sinh" || name == "cosh" || name == "exp" ||
        name == "linear") {
        const int n = n_opt.value_or(3);
        if (n < 2) throw DomainError("make_family: n >= 2 required");
        if (lambda_opt) throw DomainError(name + ": lambda_* is determined by the profile");
        if (a != Real(1) || b != Real(1))
            throw DomainError(name + ": Einstein entry is cataloged with a = b = 1");
        if (name == "sin")
            return detail::einstein_entry<Real>(
                name, n, [](Real t) { return sin(t); }, [](Real t) { return cos(t); },
                [](Real t) { return -sin(t); }, {Real(0), pi},
                {Real(0.05), pi - Real(0.05)}, Real(n - 2), -Real(n - 1), false,
                "round sphere minus the poles; completes by adding two points");
        if (name == "cos")
            return detail::einstein_entry<Real>(
                name, n, [](Real t) { return cos(t); }, [](Real t) { return -sin(t); },
                [](Real t) { return -cos(t); }, {-pi / 2, pi / 2},
                {-pi / 2 + Real(0.05), pi / 2 - Real(0.05)}, Real(n - 2), -Real(n - 1), false,
                "round sphere in equatorial parametrization; warp vanishes at the ends");
        if (name == "sinh")
            return detail::einstein_entry<Real>(
                name, n, [](Real t) { return sinh(t); }, [](Real t) { return cosh(t); },
                [](Real t) { return sinh(t); }, {Real(0), inf}, {Real(0.05), Real(5)},
                Real(n - 2), Real(n - 1), false,
                "hyperbolic space minus a point (polar form)");
        if (name == "cosh")
            return detail::einstein_entry<Real>(
                name, n, [](Real t) { return cosh(t); }, [](Real t) { return sinh(t); },
                [](Real t) { return cosh(t); }, Interval<Real>::all(), {Real(-5), Real(5)},
                -Real(n - 2), Real(n - 1), true, "hyperbolic space over a fibre of curvature -1");
        if (name == "exp")
            return detail::einstein_entry<Real>(
                name, n, [](Real t) { return exp(t); }, [](Real t) { return exp(t); },
                [](Real t) { return exp(t); }, Interval<Real>::all(), {Real(-5), Real(5)},
                Real(0), Real(n - 1), true, "hyperbolic space in horospherical coordinates");
        return detail::einstein_entry<Real>(
            name, n, [](Real t) { return t; }, [](Real) { return Real(1); },
            [](Real) { return Real(0); }, {Real(0), inf}, {Real(0.05), Real(5)}, Real(n - 2),
            Real(0), true, "Euclidean space in polar coordinates; smooth at the origin");
    }

    if (name == "gaussian") {
        const int n = n_opt.value_or(3);
        if (n < 2) throw DomainError("gaussian: n >= 2 required");
        if (lambda_opt && *lambda_opt != Real(n - 2))
            throw DomainError("gaussian: lambda_* is n-2 (round-sphere fibre)");
        WarpProfile<Real> prof(name, {Real(0), inf}, [](Real t) { return t; },
                               [](Real) { return Real(1); }, [](Real) { return Real(0); });
        auto pot = Potential<Real>::from_fns([](Real t) { return t; },
                                             [](Real) { return Real(1); });
        return {name,    std::move(prof), std::move(pot), {n, a, b, Real(n - 2)},
                Real(-1), {},             {Real(0.1), Real(5)}, true,
                "flat space with f = |x|^2/2 in polar form; origin is a chart point"};
    }

    if (name == "cigar") {
        require_n2("cigar");
        return detail::n2_entry<Real>(
            name, [](Real t) { return tanh(t); },
            [](Real t) { const Real c = cosh(t); return Real(1) / (c * c); },
            [](Real t) { const Real c = cosh(t); return Real(-2) * tanh(t) / (c * c); },
            {Real(0), inf}, {Real(0.1), Real(5)}, Real(-2), true,
            "steady soliton, complete metric on R^2; Cartesian form via cigar_cartesian");
    }
    if (name == "tan") {
        require_n2("tan");
        return detail::n2_entry<Real>(
            name, [](Real t) { return tan(t); },
            [](Real t) { const Real c = cos(t); return Real(1) / (c * c); },
            [](Real t) { const Real c = cos(t); return Real(2) * tan(t) / (c * c); },
            {Real(0), pi / 2}, {Real(0.05), Real(1.45)}, Real(2), false,
            "blows up at t = pi/2; not complete");
    }
    if (name == "coth") {
        require_n2("coth");
        return detail::n2_entry<Real>(
            name, [](Real t) { return cosh(t) / sinh(t); },
            [](Real t) { const Real s = sinh(t); return Real(-1) / (s * s); },
            [](Real t) {
                const Real s = sinh(t);
                return Real(2) * cosh(t) / (s * s * s);
            },
            {Real(0), inf}, {Real(0.1), Real(5)}, Real(-2), false, "pole at t = 0; not complete");
    }
    if (name == "inv-t") {
        require_n2("inv-t");
        return detail::n2_entry<Real>(
            name, [](Real t) { return Real(1) / t; }, [](Real t) { return Real(-1) / (t * t); },
            [](Real t) { return Real(2) / (t * t * t); }, {Real(0), inf}, {Real(0.1), Real(5)},
            Real(-2), false, "pole at t = 0; not complete");
    }

    if (name == "arctan" || name == "cubic" || name == "trumpet") {
        const int n = n_opt.value_or(name == "trumpet" ? 4 : 3);
        if (n < 3) throw DomainError(name + ": n >= 3 required (fibre Einstein constant)");
        const Real lam = lambda_opt.value_or(Real(0));
        if (b == Real(0)) throw DomainError(name + ": b must be nonzero");
        SolitonParams<Real> params{n, a, b, lam};

        if (name == "arctan") {
            WarpProfile<Real> prof(
                name, Interval<Real>::all(),
                [](Real t) { return Real(1) / (t * t + Real(1)); },
                [](Real t) {
                    const Real q = t * t + Real(1);
                    return Real(-2) * t / (q * q);
                },
                [](Real t) {
                    const Real q = t * t + Real(1);
                    return (Real(6) * t * t - Real(2)) / (q * q * q);
                });
            return {name,
                    std::move(prof),
                    detail::arctan_closed_potential<Real>(n, lam, a, b, Real(0)),
                    params,
                    {},
                    {},
                    {Real(-5), Real(5)},
                    true,
                    "h = arctan t; deformed infinite cylinder, almost soliton for any lambda_*"};
        }

        WarpProfile<Real> prof =
            name == "cubic"
                ? WarpProfile<Real>(
                      name, Interval<Real>::all(), [](Real t) { return t * t + Real(1); },
                      [](Real t) { return Real(2) * t; }, [](Real) { return Real(2); })
                : WarpProfile<Real>(
                      name, Interval<Real>::all(),
                      [](Real t) { return (t * t + Real(2) * t + Real(2)) * exp(t); },
                      [](Real t) {
                          const Real s = t + Real(2);
                          return s * s * exp(t);
                      },
                      [](Real t) { return (t * t + Real(6) * t + Real(8)) * exp(t); });
        QuadratureSpec<Real> q; // base point 0, C = 0
        Potential<Real> pot = synthesize_potential(prof, params, q);
        return {name,
                std::move(prof),
                std::move(pot),
                params,
                {},
                {},
                {Real(-5), Real(5)},
                true,
                name == "cubic"
                    ? "h = t^3/3 + t; deformed hyperboloid, almost soliton for any lambda_*"
                    : "h = (t^2+2)e^t; deformed trumpet, almost soliton for any lambda_*"};
    }

    if (name == "rb-steady") {
        if (n_opt || lambda_opt || a != Real(1) || b != Real(1))
            throw DomainError("rb-steady: canonical instance is fixed; use RBFamilyParams for "
                              "other parameters");
        const auto rb = RBFamilyParams<Real>::from_C(3, Real(1), Real(-1), Real(2));
        return {name,
                rb_warp_profile(rb),
                rb_potential_fn(rb),
                {rb.n, Real(1), Real(1), Real(0)},
                {},
                {},
                {Real(0), Real(20)},
                true,
                "steady Ricci-Bourguignon soliton, canonical instance n=3, C=1, D=-1, E=2"};
    }

    throw DomainError("make_family: unknown family '" + name + "'");
}

template <class Real = double>
std::vector<FamilyEntry<Real>> catalog() {
    std::vector<FamilyEntry<Real>> entries;
    for (const char* name : {"sin", "cos", "sinh", "cosh", "exp", "linear", "gaussian", "cigar",
                             "tan", "coth", "inv-t", "arctan", "cubic", "trumpet", "rb-steady"})
        entries.push_back(make_family<Real>(name));
    return entries;
}

template <class Real>
const FamilyEntry<Real>* find_family(const std::vector<FamilyEntry<Real>>& entries,
                                     const std::string& name) {
    for (const auto& e : entries)
        if (e.name == name) return &e;
    return nullptr;
}

} // namespace warpsol
