#pragma once

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

#include "hyperamalgam/bessel_kingman.hpp"
#include "hyperamalgam/errors.hpp"
#include "hyperamalgam/numerics.hpp"

/*
 * Mixed-norm spaces on the motion-case half-line (Haar weight x^2),
 * built from the unit cells I_n = [n-1, n). Two gauges are implemented:
 * a discrete one from per-cell averages and a continuous one from the
 * moving window tau_y 1_[0,1]; they are equivalent with explicit constants.
 */
namespace hyperamalgam::motion {

inline constexpr double kInf = std::numeric_limits<double>::infinity();

struct AmalgamParams {
    double p = 2.0;
    double q = 2.0;
};

inline void check_exponent(double p) {
    if (!(p >= 1.0)) throw DomainError("amalgam: exponents must satisfy p >= 1");
}

// Invariant mass of the cell I_n: n^2 - n + 1/3.
inline double interval_mass(int n) {
    if (n < 1) throw DomainError("interval_mass: cells are indexed from 1");
    double dn = n;
    return dn * dn - dn + 1.0 / 3.0;
}

namespace detail {

inline GridFunction abs_pow(const GridFunction& f, double p) {
    auto rule = [f, p](double x) { return std::pow(std::abs(f(x)), p); };
    return GridFunction(rule, f.x_max(), f.breakpoints(), f.support_bound());
}

inline double haar_w(double x) { return x * x; }

} // namespace detail

/*
 * Discrete amalgam norm over the first N_max cells:
 *   ( sum_n w_n * ( w_n^-1 int_{I_n} |f|^p dHaar )^(q/p) )^(1/q),
 * with the usual sup degenerations at p, q = inf. Requires the support of
 * f to sit inside [0, N_max].
 */
inline double discrete_norm(const GridFunction& f, AmalgamParams pq, int n_max,
                            const QuadratureConfig& cfg = {}) {
    check_exponent(pq.p);
    check_exponent(pq.q);
    if (n_max < 1) throw DomainError("discrete_norm: need n_max >= 1");
    if (f.support_bound() > static_cast<double>(n_max) * (1 + 1e-12))
        throw DomainError("discrete_norm: support exceeds the cell window");
    const bool pinf = std::isinf(pq.p), qinf = std::isinf(pq.q);
    if (pinf && qinf) return sup_on_interval(f, 0.0, std::min(f.x_max(), double(n_max)));
    GridFunction fp;
    if (!pinf) fp = detail::abs_pow(f, pq.p);
    double acc = 0.0, best = 0.0;
    for (int n = 1; n <= n_max; ++n) {
        const double a = n - 1.0, b = n;
        const double wn = interval_mass(n);
        if (pinf) {
            double s = sup_on_interval(f, a, std::min(b, f.x_max()));
            acc += wn * std::pow(s, pq.q);
            continue;
        }
        double cell = integrate(fp, a, std::min(b, f.x_max()), detail::haar_w, cfg);
        double avg = std::max(cell, 0.0) / wn;
        if (qinf)
            best = std::max(best, std::pow(avg, 1.0 / pq.p));
        else
            acc += wn * std::pow(avg, pq.q / pq.p);
    }
    if (qinf) return best;
    return std::pow(acc, 1.0 / pq.q);
}

// Sample set {0} u {n + 1/2 : 1 <= n <= n_max}: the offsets at which the
// moving window provably dominates a fixed fraction of every cell.
inline std::vector<double> default_sample_set(int n_max) {
    std::vector<double> ys{0.0};
    for (int n = 1; n <= n_max; ++n) ys.push_back(n + 0.5);
    return ys;
}

/*
 * Continuous gauge: max over sampled window offsets y of
 *   ( int |f|^p tau_y 1_[0,1] dHaar )^(1/p),
 * a certified lower bound of the sup over all offsets. p = inf reduces to
 * the global sup exactly.
 */
inline double continuous_norm(const GridFunction& f, double p, const std::vector<double>& ys,
                              const QuadratureConfig& cfg = {}) {
    check_exponent(p);
    if (std::isinf(p)) return sup_on_interval(f, 0.0, f.x_max());
    if (ys.empty()) throw DomainError("continuous_norm: empty sample set");
    GridFunction fp = detail::abs_pow(f, p);
    double best = 0.0;
    for (double y : ys) {
        if (y < 0) throw DomainError("continuous_norm: negative window offset");
        double lo = std::max(0.0, y - 1.0);
        double hi = std::min(y + 1.0, f.support_bound());
        if (hi <= lo) continue;
        std::vector<double> cuts = f.breakpoints();
        for (double c : {1.0 - y, y - 1.0, y + 1.0})
            if (c > 0) cuts.push_back(c);
        auto integrand = GridFunction(
            [fp, y](double x) {
                return fp(x) * bessel::translate_indicator(y, x) * detail::haar_w(x);
            },
            f.x_max(), std::move(cuts), f.support_bound());
        double v = integrate(integrand, lo, hi, cfg);
        best = std::max(best, std::max(v, 0.0));
    }
    return std::pow(best, 1.0 / p);
}

struct EquivalenceReport {
    double p = 2.0;
    double discrete = 0.0;
    double continuous = 0.0;
    double c_lower = 0.0;  // discrete <= c_lower * continuous
    double c_upper = 0.0;  // continuous <= c_upper * discrete
    bool pass = false;
};

/*
 * Two-sided comparison of the gauges with the provable constants
 *   c_lower = (32/3)^(1/p),
 *   c_upper = max(1 + 3^(1/p) + 7^(1/p), 3^(1 + 1/p)),
 * collapsing to 1 at p = inf where both gauges equal the sup norm.
 */
inline EquivalenceReport verify_equivalence(const GridFunction& f, double p,
                                            const QuadratureConfig& cfg = {},
                                            double slack = 1e-9) {
    check_exponent(p);
    EquivalenceReport r;
    r.p = p;
    int n_max = std::max(1, static_cast<int>(std::ceil(f.support_bound() - 1e-12)));
    r.discrete = discrete_norm(f, {p, kInf}, n_max, cfg);
    r.continuous = continuous_norm(f, p, default_sample_set(n_max), cfg);
    if (std::isinf(p)) {
        r.c_lower = 1.0;
        r.c_upper = 1.0;
    } else {
        r.c_lower = std::pow(32.0 / 3.0, 1.0 / p);
        r.c_upper = std::max(1.0 + std::pow(3.0, 1.0 / p) + std::pow(7.0, 1.0 / p),
                             3.0 * std::pow(3.0, 1.0 / p));
    }
    bool lower_ok = r.discrete <= r.c_lower * r.continuous + slack;
    bool upper_ok = r.continuous <= r.c_upper * r.discrete + slack;
    r.pass = lower_ok && upper_ok;
    return r;
}

/*
 * Operator gauge of the translate on the (sup, sum) amalgam:
 * || tau_y 1_{I_n} ||_(inf,1) / || 1_{I_n} ||_(inf,1). The numerator's
 * kinks are forced as breakpoints so the sampled cell sups are attained.
 */
inline double translation_ratio(int n, double y, const QuadratureConfig& cfg = {}) {
    if (n < 1) throw DomainError("translation_ratio: cells are indexed from 1");
    if (y < 0) throw DomainError("translation_ratio: y < 0");
    const double a = n - 1.0, b = n;
    if (y == 0.0) return 1.0;
    double top = y + b;
    std::vector<double> cuts;
    for (double c : {y - b, y + b, y - a, y + a, a - y, b - y})
        if (c > 0 && c < top) cuts.push_back(std::abs(c));
    auto tau = GridFunction(
        [a, b, y](double x) { return bessel::translate_indicator_interval(a, b, y, x); },
        top + 1.0, std::move(cuts), top);
    int n_max = static_cast<int>(std::ceil(top - 1e-12)) + 1;
    double num = discrete_norm(tau, {kInf, 1.0}, n_max, cfg);
    double den = interval_mass(n);
    return num / den;
}

struct YoungReport {
    double p = 1.0, q = 1.0;
    double norm_conv = 0.0;
    double norm_f = 0.0;
    double norm_g = 0.0;
    double ratio = 0.0;
};

namespace detail {

inline double conjugate_combine(double e1, double e2) {
    double r1 = std::isinf(e1) ? 0.0 : 1.0 / e1;
    double r2 = std::isinf(e2) ? 0.0 : 1.0 / e2;
    double r = r1 + r2 - 1.0;
    if (r < -1e-15 || r > 1.0 + 1e-15)
        throw DomainError("young: exponent combination leaves [1, inf]");
    r = std::clamp(r, 0.0, 1.0);
    return r == 0.0 ? kInf : 1.0 / r;
}

} // namespace detail

/*
 * Convolution bound record: || f*g ||_(p,q) against
 * || f ||_(p1,q1) * || g ||_(p2,q2) at the conjugate-combined exponents.
 * The constant in the bound is not explicit, so only the ratio is reported.
 */
inline YoungReport young_check(const GridFunction& f, const GridFunction& g,
                               AmalgamParams fq, AmalgamParams gq,
                               const QuadratureConfig& cfg = {}) {
    YoungReport r;
    r.p = detail::conjugate_combine(fq.p, gq.p);
    r.q = detail::conjugate_combine(fq.q, gq.q);
    auto conv = bessel::convolve(f, g, cfg);
    int n_conv = std::max(1, static_cast<int>(std::ceil(conv.support_bound() - 1e-12)));
    int n_f = std::max(1, static_cast<int>(std::ceil(f.support_bound() - 1e-12)));
    int n_g = std::max(1, static_cast<int>(std::ceil(g.support_bound() - 1e-12)));
    QuadratureConfig outer = cfg;
    outer.abs_tol = std::max(cfg.abs_tol, 1e-8);  // conv values carry inner noise
    r.norm_conv = discrete_norm(conv, {r.p, r.q}, n_conv, outer);
    r.norm_f = discrete_norm(f, fq, n_f, cfg);
    r.norm_g = discrete_norm(g, gq, n_g, cfg);
    double denom = r.norm_f * r.norm_g;
    r.ratio = denom > 0 ? r.norm_conv / denom : (r.norm_conv == 0 ? 0.0 : kInf);
    return r;
}

// Scale a profile pointwise.
inline GridFunction scale(const GridFunction& f, double s) {
    return GridFunction([f, s](double x) { return s * f(x); }, f.x_max(), f.breakpoints(),
                        f.support_bound());
}

/*
 * Smoothed cell bump: 3 * (1_{I_1} convolved with 1_{[n-2, n+1)}),
 * identically 1 on I_n and supported in [n-3, n+2]. The n = 1 witness uses
 * the window [0, 2).
 */
inline GridFunction hy_witness(int n, const QuadratureConfig& cfg = {}) {
    if (n < 1) throw DomainError("hy_witness: n >= 1");
    auto unit = GridFunction::indicator(0.0, 1.0, 2.0);
    double lo = n == 1 ? 0.0 : n - 2.0;
    double hi = n == 1 ? 2.0 : n + 1.0;
    lo = std::max(lo, 0.0);
    auto window = GridFunction::indicator(lo, hi, hi + 1.0);
    return scale(bessel::convolve(unit, window, cfg), 3.0);
}

struct TransformsReport {
    double near_identity_l2 = 0.0;  // L2 mass of f on [0, 1]
    double dual_l1l2 = 0.0;         // (1,2)-amalgam of the transform, truncated
    double global_l2linf = 0.0;     // (2, inf)-amalgam of f
    double lambda_max = 0.0;
    bool all_finite = false;
};

/*
 * For f = g * g the three quantities tied together by the square-
 * integrability theorem, all finite together. The transform of f is
 * computed as the square of the transform of g.
 */
inline TransformsReport check_transforms_theorem(const GridFunction& g, double lambda_max = 16.0,
                                                 const QuadratureConfig& cfg = {}) {
    if (!(lambda_max >= 1.0)) throw DomainError("check_transforms_theorem: lambda_max >= 1");
    TransformsReport r;
    r.lambda_max = lambda_max;
    auto f = bessel::convolve(g, g, cfg);
    QuadratureConfig outer = cfg;
    outer.abs_tol = std::max(cfg.abs_tol, 1e-8);
    auto f2 = GridFunction([f](double x) { double v = f(x); return v * v; },
                           f.x_max(), f.breakpoints(), f.support_bound());
    r.near_identity_l2 = std::sqrt(std::max(
        0.0, integrate(f2, 0.0, std::min(1.0, f.support_bound()), detail::haar_w, outer)));
    auto fhat = GridFunction(
        [g, cfg](double lam) {
            double v = bessel::motion_fourier(g, lam, cfg);
            return v * v;
        },
        lambda_max, {}, lambda_max);
    r.dual_l1l2 = discrete_norm(fhat, {1.0, 2.0}, static_cast<int>(lambda_max), outer);
    int n_max = std::max(1, static_cast<int>(std::ceil(f.support_bound() - 1e-12)));
    r.global_l2linf = discrete_norm(f, {2.0, kInf}, n_max, outer);
    r.all_finite = std::isfinite(r.near_identity_l2) && std::isfinite(r.dual_l1l2) &&
                   std::isfinite(r.global_l2linf);
    return r;
}

struct HYEndpointReport {
    double dual_norm = 0.0;     // (inf,2)-amalgam of the transform on [0, L]
    double primal_norm = 0.0;   // (2,1)-amalgam of f
    double ratio = 0.0;
    double lambda_max = 0.0;
};

// Endpoint transform bound record on the truncated dual window.
inline HYEndpointReport hy_endpoint(const GridFunction& f, double lambda_max = 16.0,
                                    const QuadratureConfig& cfg = {}) {
    if (!(lambda_max >= 1.0)) throw DomainError("hy_endpoint: lambda_max >= 1");
    HYEndpointReport r;
    r.lambda_max = lambda_max;
    auto fhat = GridFunction(
        [f, cfg](double lam) { return bessel::motion_fourier(f, lam, cfg); }, lambda_max, {},
        lambda_max);
    QuadratureConfig outer = cfg;
    outer.abs_tol = std::max(cfg.abs_tol, 1e-8);
    r.dual_norm = discrete_norm(fhat, {kInf, 2.0}, static_cast<int>(lambda_max), outer);
    int n_max = std::max(1, static_cast<int>(std::ceil(f.support_bound() - 1e-12)));
    r.primal_norm = discrete_norm(f, {2.0, 1.0}, n_max, cfg);
    r.ratio = r.primal_norm > 0 ? r.dual_norm / r.primal_norm
                                : (r.dual_norm == 0 ? 0.0 : kInf);
    return r;
}

} // namespace hyperamalgam::motion
