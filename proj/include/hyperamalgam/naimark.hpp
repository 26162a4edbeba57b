#pragma once

#include <cmath>

#include "hyperamalgam/errors.hpp"

/*
 * Hyperbolic half-line structure with Haar weight sinh(x)^2 and the
 * spherical characters chi_a(x) = sinh(r x) / (r sinh x), r = sqrt(-a).
 * For a < -9 these characters grow so fast relative to the window masses
 * that no global amalgam bound on the transform side can hold; the lower
 * bound witnessing that blow-up is computed here in closed form.
 */
namespace hyperamalgam::naimark {

inline double haar_weight(double x) {
    if (x < 0) throw DomainError("naimark haar: x < 0");
    double s = std::sinh(x);
    return s * s;
}

namespace detail {

// log(sinh t) without overflow: t - log 2 + log1p(-exp(-2t)) for t > 0.
inline double log_sinh(double t) {
    if (t <= 0) throw DomainError("log_sinh: t <= 0");
    if (t < 20.0) return std::log(std::sinh(t));
    return t - 0.6931471805599453 + std::log1p(-std::exp(-2.0 * t));
}

} // namespace detail

// chi_a(x) = sinh(r x) / (r sinh x) with r = sqrt(-a); chi(0) = 1.
// Evaluated in log space so large r x does not overflow.
inline double character(double a, double x) {
    if (!(a < 0)) throw DomainError("naimark character: need a < 0");
    if (x < 0) throw DomainError("naimark character: x < 0");
    double r = std::sqrt(-a);
    if (x == 0.0) return 1.0;
    double lg = detail::log_sinh(r * x) - detail::log_sinh(x) - std::log(r);
    return std::exp(lg);
}

// Invariant mass of [x0, x1]: int sinh^2 = [ (sinh(2t) - 2t) / 4 ].
inline double interval_mass(double x0, double x1) {
    if (x0 < 0 || x1 < x0) throw DomainError("naimark interval_mass: bad interval");
    auto F = [](double t) { return (std::sinh(2.0 * t) - 2.0 * t) / 4.0; };
    return F(x1) - F(x0);
}

struct LowerBoundResult {
    double a = 0.0;
    double p = 1.0;
    double x = 0.0;
    double character_value = 0.0;  // chi_a(x - 1)
    double window_mass = 0.0;      // mass of [x-1, x+1]
    double bound = 0.0;
};

/*
 * Lower bound for the transform's mixed norm produced by the bump
 * g = chi_a on [x-1, x+1]: with c = mass([0, 1]) = (sinh 2 - 2)/4,
 *
 *   bound = chi_a(x-1) * (c / (2 mass(J_x))) * (c / 2)^(1/p),
 *
 * which diverges as x grows whenever a < -9. A transform bound of
 * Hausdorff-Young type would force this to stay bounded, so divergence
 * certifies there is none for these parameters.
 */
inline LowerBoundResult counterexample_lower_bound(double a, double p, double x) {
    if (!(a < -9.0)) throw DomainError("counterexample_lower_bound: need a < -9");
    if (!(p >= 1.0)) throw DomainError("counterexample_lower_bound: need p >= 1");
    if (!(x > 1.0)) throw DomainError("counterexample_lower_bound: need x > 1");
    LowerBoundResult r;
    r.a = a;
    r.p = p;
    r.x = x;
    double c = (std::sinh(2.0) - 2.0) / 4.0;
    r.character_value = character(a, x - 1.0);
    r.window_mass = interval_mass(x - 1.0, x + 1.0);
    r.bound = r.character_value * (c / (2.0 * r.window_mass)) * std::pow(c / 2.0, 1.0 / p);
    return r;
}

} // namespace hyperamalgam::naimark
