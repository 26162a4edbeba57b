#pragma once

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <vector>

#include "hyperamalgam/errors.hpp"
#include "hyperamalgam/numerics.hpp"

/*
 * One-parameter family of convolutions on the half-line, parameter
 * alpha > -1/2. Haar measure is x^(2*alpha+1) dx; the point convolution of
 * x and y is an absolutely continuous probability measure on
 * [|x-y|, x+y] with an explicit kernel. alpha = 1/2 is the special case
 * whose kernel collapses to 1/(2xyz) and whose characters are sin(t)/t;
 * that case gets closed-form fast paths throughout ("motion" routines).
 */
namespace hyperamalgam::bessel {

struct BKParams {
    double alpha = 0.5;
};

inline void check_alpha(double alpha) {
    if (!(alpha > -0.5)) throw DomainError("bessel: need alpha > -1/2");
}

// Density of the invariant measure against Lebesgue.
inline double haar_weight(double alpha, double x) {
    check_alpha(alpha);
    if (x < 0) throw DomainError("haar_weight: x < 0");
    return std::pow(x, 2.0 * alpha + 1.0);
}

/*
 * Convolution kernel K(x, y, z): density on the open interval
 * (|x-y|, x+y) against the Haar weight. Zero outside the closed interval.
 * On the boundary: zero for alpha > 1/2; the interior limit 1/(2xyz) at
 * alpha = 1/2; unbounded (returned as +inf) for alpha < 1/2.
 */
inline double kernel(double alpha, double x, double y, double z) {
    check_alpha(alpha);
    if (!(x > 0) || !(y > 0)) throw DomainError("kernel: need x, y > 0");
    if (z < 0) return 0.0;
    const double lo = std::abs(x - y), hi = x + y;
    if (z < lo || z > hi) return 0.0;
    if (alpha == 0.5) return 1.0 / (2.0 * x * y * z);
    if (z == lo || z == hi)
        return alpha > 0.5 ? 0.0 : std::numeric_limits<double>::infinity();
    const double c = std::tgamma(alpha + 1.0) /
                     (std::sqrt(M_PI) * std::tgamma(alpha + 0.5) * std::exp2(2.0 * alpha - 1.0));
    double bracket = (z * z - lo * lo) * (hi * hi - z * z);
    if (bracket <= 0.0) return alpha > 0.5 ? 0.0 : std::numeric_limits<double>::infinity();
    return c * std::pow(bracket, alpha - 0.5) / std::pow(x * y * z, 2.0 * alpha);
}

struct JAlphaResult {
    double value;
    // Set when cancellation in the power series may exceed ~1e-9 and no
    // closed form is available for this alpha.
    bool degraded;
};

/*
 * Normalized oscillatory profile: value 1 at 0, power series
 * sum_k (-1)^k Gamma(a+1) / (4^k k! Gamma(a+k+1)) x^(2k).
 * Closed forms at a = 1/2 (sin x / x) and a = 3/2.
 */
inline JAlphaResult j_alpha_ex(double alpha, double x) {
    check_alpha(alpha);
    x = std::abs(x);  // even function
    if (x == 0.0) return {1.0, false};
    if (alpha == 0.5) return {std::sin(x) / x, false};
    if (alpha == 1.5 && x >= 0.5)
        return {3.0 * (std::sin(x) - x * std::cos(x)) / (x * x * x), false};
    double term = 1.0, sum = 1.0, comp = 0.0;
    const double x2 = x * x;
    for (int k = 0; k < 10000; ++k) {
        term *= -x2 / (4.0 * (k + 1.0) * (alpha + k + 1.0));
        double y = term - comp;
        double t = sum + y;
        comp = (t - sum) - y;
        sum = t;
        if (2.0 * (k + 1) >= x && std::abs(term) <= 1e-17 * std::max(1.0, std::abs(sum)))
            return {sum, x > 30.0};
    }
    throw NonConvergence("j_alpha: series did not converge in 10^4 terms");
}

inline double j_alpha(double alpha, double x) { return j_alpha_ex(alpha, x).value; }

/*
 * (f convolved at the pair (x, y)) = integral of f against the point
 * convolution. x = 0 or y = 0 degenerates to evaluation. Needs
 * x + y <= f.x_max so the full support of the convolution is visible.
 */
inline double convolve_points(double alpha, double x, double y, const GridFunction& f,
                              const QuadratureConfig& cfg = {}) {
    check_alpha(alpha);
    if (x < 0 || y < 0) throw DomainError("convolve_points: need x, y >= 0");
    if (x == 0.0) return f(y);
    if (y == 0.0) return f(x);
    if (x + y > f.x_max() * (1 + 1e-12))
        throw DomainError("convolve_points: x + y exceeds the evaluation window");
    const double lo = std::abs(x - y), hi = x + y;
    if (alpha == 0.5) {
        double v = integrate(f, lo, hi, [](double z) { return z; }, cfg);
        return v / (2.0 * x * y);
    }
    const double c = std::tgamma(alpha + 1.0) /
                     (std::sqrt(M_PI) * std::tgamma(alpha + 0.5) * std::exp2(2.0 * alpha - 1.0));
    const double denom = std::pow(x * y, 2.0 * alpha);
    auto w = [=](double z) {
        double bracket = (z * z - lo * lo) * (hi * hi - z * z);
        if (bracket <= 0.0) return 0.0;
        // K * z^(2a+1) with the z^(-2a) of the kernel cancelled analytically.
        return c * std::pow(bracket, alpha - 0.5) * z / denom;
    };
    return integrate(f, lo, hi, w, cfg);
}

// |chi(x) chi(y) - (chi convolved at (x, y))| for the character of frequency
// lambda; zero in exact arithmetic for every hypergroup parameter.
inline double character_product_residual(double alpha, double lambda, double x, double y,
                                         const QuadratureConfig& cfg = {}) {
    check_alpha(alpha);
    if (lambda < 0) throw DomainError("character_product_residual: lambda < 0");
    if (!(x > 0) || !(y > 0)) throw DomainError("character_product_residual: need x, y > 0");
    auto chi = GridFunction::from_rule(
        [alpha, lambda](double z) { return j_alpha(alpha, lambda * z); }, x + y + 1.0);
    double lhs = j_alpha(alpha, lambda * x) * j_alpha(alpha, lambda * y);
    double rhs = convolve_points(alpha, x, y, chi, cfg);
    return std::abs(lhs - rhs);
}

/*
 * Unit-indicator translate in the motion case, closed three-branch form:
 *   1                          if x + y <= 1
 *   (1 - (x - y)^2) / (4xy)    if x + y > 1 and |x - y| < 1
 *   0                          if |x - y| >= 1
 */
inline double translate_indicator(double y, double x) {
    if (x < 0 || y < 0) throw DomainError("translate_indicator: need x, y >= 0");
    if (x + y <= 1.0) return 1.0;
    double d = std::abs(x - y);
    if (d >= 1.0) return 0.0;
    return (1.0 - (x - y) * (x - y)) / (4.0 * x * y);
}

// Same closed form for a general cell [a, b); degenerate arguments reduce
// to point evaluation of the indicator.
inline double translate_indicator_interval(double a, double b, double y, double x) {
    if (x < 0 || y < 0) throw DomainError("translate_indicator_interval: need x, y >= 0");
    if (!(a >= 0) || !(b > a)) throw DomainError("translate_indicator_interval: need 0 <= a < b");
    if (y == 0.0) return (x >= a && x < b) ? 1.0 : 0.0;
    if (x == 0.0) return (y >= a && y < b) ? 1.0 : 0.0;
    double lo = std::max(std::abs(x - y), a);
    double hi = std::min(x + y, b);
    if (hi <= lo) return 0.0;
    return (hi * hi - lo * lo) / (4.0 * x * y);
}

/*
 * Motion-case translate of a general profile:
 * (tau_y f)(x) = (1 / 2xy) * integral of f(t) t dt over [|x-y|, x+y].
 */
inline GridFunction motion_translate(double y, const GridFunction& f,
                                     const QuadratureConfig& cfg = {}) {
    if (y < 0) throw DomainError("motion_translate: y < 0");
    if (y == 0.0) return f;
    auto rule = [f, y, cfg](double x) -> double {
        if (x == 0.0) return f(y);
        double lo = std::abs(x - y);
        double hi = std::min(x + y, f.support_bound());
        if (hi <= lo) return 0.0;
        double v = integrate(f, lo, hi, [](double t) { return t; }, cfg);
        return v / (2.0 * x * y);
    };
    std::vector<double> bps;
    std::vector<double> src = f.breakpoints();
    src.push_back(0.0);
    src.push_back(f.support_bound());
    for (double b : src) {
        bps.push_back(std::abs(b - y));
        bps.push_back(b + y);
    }
    return GridFunction(rule, f.x_max() + y, std::move(bps),
                        std::min(f.support_bound() + y, f.x_max() + y));
}

/*
 * Motion-case transform at frequency lambda:
 *   lambda > 0: (1/lambda) * integral of f(x) sin(lambda x) x dx,
 *   lambda = 0: integral of f(x) x^2 dx.
 */
inline double motion_fourier(const GridFunction& f, double lambda,
                             const QuadratureConfig& cfg = {}) {
    if (lambda < 0) throw DomainError("motion_fourier: lambda < 0");
    double b = f.support_bound();
    if (b == 0.0) return 0.0;
    if (lambda == 0.0) return integrate(f, 0.0, b, [](double x) { return x * x; }, cfg);
    double v = integrate(f, 0.0, b, [lambda](double x) { return std::sin(lambda * x) * x; }, cfg);
    return v / lambda;
}

/*
 * Motion-case convolution of two profiles:
 * (f * g)(x) = integral over y of (tau_x f)(y) g(y) y^2 dy.
 * Each evaluation runs a nested quadrature; kinks of the inner translate
 * are forced as outer breakpoints.
 */
inline GridFunction convolve(const GridFunction& f, const GridFunction& g,
                             const QuadratureConfig& cfg = {}) {
    const double fs = f.support_bound(), gs = g.support_bound();
    auto edgesf = f.breakpoints();
    edgesf.push_back(0.0);
    edgesf.push_back(fs);
    auto rule = [f, g, cfg, fs, gs, edgesf](double x) -> double {
        if (x == 0.0) {
            if (std::min(fs, gs) == 0.0) return 0.0;
            // Breakpoints of both factors drive the split.
            std::vector<double> cuts = f.breakpoints();
            for (double b : g.breakpoints()) cuts.push_back(b);
            auto h = GridFunction([&f, &g](double y) { return f(y) * g(y) * y * y; },
                                  std::min(f.x_max(), g.x_max()), cuts, std::min(fs, gs));
            return integrate(h, 0.0, std::min(fs, gs), cfg);
        }
        double lo = std::max(0.0, x - fs);
        double hi = std::min(gs, x + fs);
        if (hi <= lo) return 0.0;
        auto tauf = [&](double y) -> double {
            if (y == 0.0) return f(x);
            double a = std::abs(x - y);
            double b = std::min(x + y, fs);
            if (b <= a) return 0.0;
            return integrate(f, a, b, [](double t) { return t; }, cfg) / (2.0 * x * y);
        };
        std::vector<double> cuts = g.breakpoints();
        for (double b : edgesf) {
            cuts.push_back(std::abs(x - b));
            cuts.push_back(x + b);
        }
        auto h = GridFunction([&](double y) { return tauf(y) * g(y) * y * y; },
                              std::max(hi, 1e-300), cuts, hi);
        return integrate(h, lo, hi, cfg);
    };
    std::vector<double> bf = f.breakpoints(), bg = g.breakpoints();
    bf.push_back(0.0);
    bf.push_back(fs);
    bg.push_back(0.0);
    bg.push_back(gs);
    std::vector<double> bps;
    for (double a : bf)
        for (double b : bg) {
            bps.push_back(a + b);
            bps.push_back(std::abs(a - b));
        }
    return GridFunction(rule, f.x_max() + g.x_max(), std::move(bps),
                        std::min(fs + gs, f.x_max() + g.x_max()));
}

// Nonnegative spectral atoms (frequency, weight): the data of a finite
// positive measure on the dual half-line.
struct SpectralAtoms {
    std::vector<double> lambdas;
    std::vector<double> weights;
};

} // namespace hyperamalgam::bessel
