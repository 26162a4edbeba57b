#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <functional>
#include <limits>
#include <queue>
#include <utility>
#include <vector>

#include "hyperamalgam/errors.hpp"

namespace hyperamalgam {

struct QuadratureConfig {
    double abs_tol = 1e-10;
    double rel_tol = 1e-8;
    std::size_t max_subdivisions = 1u << 14;
};

/*
 * Piecewise-smooth function on [0, x_max].
 *
 * Invariants: 0 < x_max; support_bound <= x_max; breakpoints sorted and
 * inside [0, x_max]; evaluation beyond support_bound returns exactly 0.
 * Breakpoints mark kinks/jumps so the integrator can split cells there.
 */
class GridFunction {
public:
    GridFunction() = default;
    GridFunction(std::function<double(double)> rule, double x_max,
                 std::vector<double> breakpoints, double support_bound)
        : rule_(std::move(rule)),
          x_max_(x_max),
          support_bound_(support_bound),
          breakpoints_(std::move(breakpoints)) {
        if (!(x_max_ > 0) || !std::isfinite(x_max_))
            throw DomainError("GridFunction: x_max must be positive and finite");
        if (support_bound_ < 0 || support_bound_ > x_max_)
            throw DomainError("GridFunction: support_bound outside [0, x_max]");
        std::sort(breakpoints_.begin(), breakpoints_.end());
        breakpoints_.erase(
            std::remove_if(breakpoints_.begin(), breakpoints_.end(),
                           [&](double b) { return b < 0.0 || b > x_max_; }),
            breakpoints_.end());
    }

    static GridFunction from_rule(std::function<double(double)> rule, double x_max,
                                  std::vector<double> breakpoints = {}) {
        return GridFunction(std::move(rule), x_max, std::move(breakpoints), x_max);
    }

    // Half-open indicator of [a, b).
    static GridFunction indicator(double a, double b, double x_max) {
        if (!(a >= 0) || !(b > a)) throw DomainError("indicator: need 0 <= a < b");
        return GridFunction([a, b](double x) { return (x >= a && x < b) ? 1.0 : 0.0; },
                            x_max, {a, b}, std::min(b, x_max));
    }

    // Tent supported on [a, b], peak h at the midpoint.
    static GridFunction hat(double a, double b, double h, double x_max) {
        if (!(a >= 0) || !(b > a)) throw DomainError("hat: need 0 <= a < b");
        double m = 0.5 * (a + b);
        auto rule = [a, b, m, h](double x) {
            if (x <= a || x >= b) return 0.0;
            return x <= m ? h * (x - a) / (m - a) : h * (b - x) / (b - m);
        };
        return GridFunction(rule, x_max, {a, m, b}, std::min(b, x_max));
    }

    double operator()(double x) const {
        if (x < 0) throw DomainError("GridFunction: evaluation at negative x");
        if (x > support_bound_) return 0.0;
        return rule_(x);
    }

    double x_max() const { return x_max_; }
    double support_bound() const { return support_bound_; }
    const std::vector<double>& breakpoints() const { return breakpoints_; }

private:
    std::function<double(double)> rule_;
    double x_max_ = 1.0;
    double support_bound_ = 1.0;
    std::vector<double> breakpoints_;
};

namespace detail {

// Gauss 7 / Kronrod 15 nodes and weights on [-1, 1].
inline constexpr std::array<double, 8> kGK15Nodes = {
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144838258730,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.000000000000000000000000000000000};
inline constexpr std::array<double, 8> kK15Weights = {
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714};
inline constexpr std::array<double, 4> kG7Weights = {
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327};

struct CellEstimate {
    double value;
    double error;
};

template <class F>
CellEstimate gk15(const F& g, double a, double b) {
    const double c = 0.5 * (a + b);
    const double h = 0.5 * (b - a);
    double fc = g(c);
    double kron = kK15Weights[7] * fc;
    double gauss = kG7Weights[3] * fc;
    for (int i = 0; i < 7; ++i) {
        double x = h * kGK15Nodes[i];
        double fsum = g(c - x) + g(c + x);
        kron += kK15Weights[i] * fsum;
        if (i % 2 == 1) gauss += kG7Weights[i / 2] * fsum;
    }
    kron *= h;
    gauss *= h;
    return {kron, std::abs(kron - gauss)};
}

struct Segment {
    double a, b, value, error;
    bool operator<(const Segment& o) const { return error < o.error; }
};

// Globally adaptive integration of g over the cells delimited by `cuts`.
template <class F>
double adaptive(const F& g, const std::vector<double>& cuts, const QuadratureConfig& cfg) {
    std::priority_queue<Segment> heap;
    double total = 0.0;
    double err = 0.0;
    std::size_t cells = 0;
    for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
        if (!(cuts[i + 1] > cuts[i])) continue;
        auto e = gk15(g, cuts[i], cuts[i + 1]);
        heap.push({cuts[i], cuts[i + 1], e.value, e.error});
        total += e.value;
        err += e.error;
        ++cells;
    }
    auto within = [&] { return err <= std::max(cfg.abs_tol, cfg.rel_tol * std::abs(total)); };
    while (!heap.empty() && !within()) {
        if (cells >= cfg.max_subdivisions)
            throw NonConvergence("integrate: subdivision budget exhausted");
        Segment s = heap.top();
        heap.pop();
        double m = 0.5 * (s.a + s.b);
        if (!(m > s.a && m < s.b)) {
            // Cell is at floating point resolution; accept its estimate.
            err -= s.error;
            continue;
        }
        auto l = gk15(g, s.a, m);
        auto r = gk15(g, m, s.b);
        total += l.value + r.value - s.value;
        err += l.error + r.error - s.error;
        heap.push({s.a, m, l.value, l.error});
        heap.push({m, s.b, r.value, r.error});
        ++cells;
    }
    return total;
}

inline std::vector<double> cell_cuts(const GridFunction& f, double a, double b) {
    std::vector<double> cuts;
    cuts.push_back(a);
    for (double bp : f.breakpoints())
        if (bp > a && bp < b) cuts.push_back(bp);
    if (f.support_bound() > a && f.support_bound() < b) cuts.push_back(f.support_bound());
    cuts.push_back(b);
    std::sort(cuts.begin(), cuts.end());
    cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());
    return cuts;
}

} // namespace detail

/*
 * Integral of f(x) * weight(x) over [a, b], subdividing at f's breakpoints
 * and support edge. The returned value satisfies
 * err <= max(abs_tol, rel_tol * |result|) or NonConvergence is thrown.
 */
inline double integrate(const GridFunction& f, double a, double b,
                        const std::function<double(double)>& weight,
                        const QuadratureConfig& cfg = {}) {
    if (!(a >= 0) || !(b >= a)) throw DomainError("integrate: need 0 <= a <= b");
    if (b > f.x_max() * (1 + 1e-12)) throw DomainError("integrate: b beyond x_max");
    b = std::min(b, f.x_max());
    if (a == b) return 0.0;
    // Nothing beyond the support contributes.
    b = std::min(b, std::max(a, f.support_bound()));
    if (a >= b) return 0.0;
    auto g = [&](double x) { return f(x) * weight(x); };
    return detail::adaptive(g, detail::cell_cuts(f, a, b), cfg);
}

inline double integrate(const GridFunction& f, double a, double b,
                        const QuadratureConfig& cfg = {}) {
    return integrate(f, a, b, [](double) { return 1.0; }, cfg);
}

/*
 * Sampled sup of |f| over [a, b]: max over breakpoints, the support edge,
 * the endpoints and a uniform grid. This is a certified lower bound for the
 * true sup (exact when the max is attained on the sample set).
 */
inline double sup_on_interval(const GridFunction& f, double a, double b,
                              std::size_t samples = 257) {
    if (!(a >= 0) || !(b >= a)) throw DomainError("sup_on_interval: need 0 <= a <= b");
    if (b > f.x_max() * (1 + 1e-12)) throw DomainError("sup_on_interval: b beyond x_max");
    b = std::min(b, f.x_max());
    if (samples < 2) throw DomainError("sup_on_interval: need at least 2 samples");
    double best = 0.0;
    auto consider = [&](double x) {
        if (x < a || x > b) return;
        best = std::max(best, std::abs(f(x)));
    };
    consider(a);
    consider(b);
    for (double bp : f.breakpoints()) {
        consider(bp);
        // A breakpoint may carry a jump; probe both flanks.
        consider(std::nextafter(bp, a));
        consider(std::nextafter(bp, b));
    }
    consider(f.support_bound());
    consider(std::nextafter(f.support_bound(), a));
    const double h = (b - a) / static_cast<double>(samples - 1);
    for (std::size_t k = 1; k + 1 < samples; ++k) consider(a + h * static_cast<double>(k));
    return best;
}

} // namespace hyperamalgam
