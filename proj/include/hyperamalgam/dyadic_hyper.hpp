#pragma once

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <optional>
#include <type_traits>
#include <vector>

#include "hyperamalgam/dyadic.hpp"
#include "hyperamalgam/errors.hpp"

/*
 * Two countable commutative structures on integer ladders plus a point at
 * infinity, which acts as the identity:
 *
 *   Space::Half  points 0, 1, 2, ... and inf
 *   Space::Full  all integers and inf
 *
 * Convolution of two point masses at distinct finite points sits at the
 * minimum; a point convolved with itself spreads geometrically upward:
 *   eps_n * eps_n = sum_{k>=1} 2^-k eps_{n+k}.
 * The invariant weight is 2^-(n+1) at n and 0 at inf. Everything here is
 * exact dyadic arithmetic; geometric tails are summed in closed form.
 */
namespace hyperamalgam::dyadic_hyper {

enum class Space { Half, Full };

struct Point {
    int n = 0;
    bool at_inf = false;
    static Point at(int m) { return {m, false}; }
    static Point infinity() { return {0, true}; }
    friend bool operator==(const Point& a, const Point& b) {
        return a.at_inf == b.at_inf && (a.at_inf || a.n == b.n);
    }
    friend bool operator<(const Point& a, const Point& b) {
        if (a.at_inf != b.at_inf) return b.at_inf;  // inf sorts last
        return a.n < b.n;
    }
};

inline void check_point(Space sp, int n) {
    if (sp == Space::Half && n < 0)
        throw DomainError("half-ladder points are indexed from 0");
}

namespace detail {

template <typename T>
T two_pow(int e) {
    if constexpr (std::is_same_v<T, Dyadic>)
        return Dyadic::pow2(e);
    else
        return std::ldexp(1.0, e);
}

template <typename T>
T abs_of(const T& x) {
    if constexpr (std::is_same_v<T, Dyadic>)
        return abs(x);
    else
        return std::abs(x);
}

template <typename T>
T int_pow(const T& x, unsigned p) {
    if constexpr (std::is_same_v<T, Dyadic>) {
        return x.pow(p);
    } else {
        T r = 1;
        for (unsigned i = 0; i < p; ++i) r *= x;
        return r;
    }
}

} // namespace detail

/*
 * Eventually-constant function on a ladder: explicit values on
 * [low, low + vals.size()), the constant `tail` above that and at inf,
 * and the constant `head` below (head is only meaningful on Space::Full;
 * most operations require it to vanish).
 */
template <typename T>
struct DiscreteFn {
    int low = 0;
    std::vector<T> vals;
    T tail{};
    T head{};

    int high() const { return low + static_cast<int>(vals.size()) - 1; }
    T value_at(int m) const {
        if (m < low) return head;
        if (m > high()) return tail;
        return vals[static_cast<size_t>(m - low)];
    }
    T value_at(Point x) const { return x.at_inf ? tail : value_at(x.n); }
};

using DyadicFn = DiscreteFn<Dyadic>;
using RealFn = DiscreteFn<double>;

template <typename T>
void check_fn(Space sp, const DiscreteFn<T>& f) {
    if (sp == Space::Half) {
        if (f.low < 0) throw DomainError("half-ladder function starts below 0");
        if (!(f.head == T{})) throw DomainError("half-ladder function has no head");
    }
}

inline RealFn to_real(const DyadicFn& f) {
    RealFn r;
    r.low = f.low;
    r.vals.reserve(f.vals.size());
    for (const auto& v : f.vals) r.vals.push_back(v.to_double());
    r.tail = f.tail.to_double();
    r.head = f.head.to_double();
    return r;
}

// Invariant weight 2^-(n+1); no mass at inf.
inline Dyadic haar(Space sp, int n) {
    check_point(sp, n);
    return Dyadic::pow2(-(n + 1));
}
inline Dyadic haar(Space sp, Point x) { return x.at_inf ? Dyadic{} : haar(sp, x.n); }

/*
 * Measure with finitely many named atoms, an optional atom at inf, and an
 * optional unit-mass geometric spread sum_{k>=1} 2^-k eps_{base+k}.
 */
struct DiscreteMeasure {
    std::map<int, Dyadic> atoms;
    Dyadic at_inf{};
    std::optional<int> spread_base;

    Dyadic total_mass() const {
        Dyadic m = at_inf;
        for (const auto& [n, w] : atoms) m += w;
        if (spread_base) m += Dyadic(1);
        return m;
    }
    static DiscreteMeasure point(Point x) {
        DiscreteMeasure mu;
        if (x.at_inf)
            mu.at_inf = Dyadic(1);
        else
            mu.atoms[x.n] = Dyadic(1);
        return mu;
    }
};

inline DiscreteMeasure convolve_points(Space sp, Point a, Point b) {
    if (!a.at_inf) check_point(sp, a.n);
    if (!b.at_inf) check_point(sp, b.n);
    if (a.at_inf) return DiscreteMeasure::point(b);  // inf is the identity
    if (b.at_inf) return DiscreteMeasure::point(a);
    if (a.n != b.n) return DiscreteMeasure::point(Point::at(std::min(a.n, b.n)));
    DiscreteMeasure mu;
    mu.spread_base = a.n;
    return mu;
}

// chi_c(m) = 0 below c-1, -1 at c-1, +1 from c on and at inf.
inline int character(Space sp, int c, Point m) {
    check_point(sp, c);
    if (m.at_inf) return 1;
    check_point(sp, m.n);
    if (m.n >= c) return 1;
    if (m.n == c - 1) return -1;
    return 0;
}

inline DyadicFn character_fn(Space sp, int c) {
    check_point(sp, c);
    DyadicFn f;
    if (sp == Space::Half && c == 0) {
        f.low = 0;
        f.vals = {Dyadic(1)};
        f.tail = Dyadic(1);
        return f;
    }
    f.low = c - 1;
    f.vals = {Dyadic(-1), Dyadic(1)};
    f.tail = Dyadic(1);
    return f;
}

// Dual weight: 2^(n-1), except that the constant character of the
// half-ladder carries weight 1.
inline Dyadic plancherel(Space sp, int n) {
    check_point(sp, n);
    if (sp == Space::Half && n == 0) return Dyadic(1);
    return Dyadic::pow2(n - 1);
}

// Pointwise product, exact on the merged representation.
template <typename T>
DiscreteFn<T> multiply(const DiscreteFn<T>& f, const DiscreteFn<T>& g) {
    DiscreteFn<T> r;
    r.low = std::min(f.low, g.low);
    int hi = std::max(f.high(), g.high());
    r.vals.reserve(static_cast<size_t>(std::max(0, hi - r.low + 1)));
    for (int m = r.low; m <= hi; ++m) r.vals.push_back(f.value_at(m) * g.value_at(m));
    r.tail = f.tail * g.tail;
    r.head = f.head * g.head;
    return r;
}

// sum_m f(m) w(m), with the tail summed in closed form. Requires a
// vanishing head on the full ladder (the weight grows downward).
template <typename T>
T integral(Space sp, const DiscreteFn<T>& f) {
    check_fn(sp, f);
    if (sp == Space::Full && !(f.head == T{}))
        throw DomainError("integral diverges: nonzero head on the full ladder");
    T acc{};
    for (int m = f.low; m <= f.high(); ++m)
        acc += f.value_at(m) * detail::two_pow<T>(-(m + 1));
    acc += f.tail * detail::two_pow<T>(-(f.high() + 1));
    return acc;
}

// Geometric spread of f seen from n: sum_{k>=1} 2^-k f(n+k).
template <typename T>
T spread_value(const DiscreteFn<T>& f, int n) {
    T s{};
    int kmax = f.high() - n;
    for (int k = 1; k <= kmax; ++k) s += detail::two_pow<T>(-k) * f.value_at(n + k);
    s += f.tail * detail::two_pow<T>(-std::max(kmax, 0));
    return s;
}

/*
 * Translate by the point n: values below n are untouched, the value at n
 * becomes the geometric spread, and everything above n (inf included)
 * freezes at the old f(n).
 */
template <typename T>
DiscreteFn<T> translate(Space sp, int n, const DiscreteFn<T>& f) {
    check_point(sp, n);
    check_fn(sp, f);
    DiscreteFn<T> r;
    r.low = std::min(f.low, n);
    r.vals.reserve(static_cast<size_t>(n - r.low + 1));
    for (int m = r.low; m < n; ++m) r.vals.push_back(f.value_at(m));
    r.vals.push_back(spread_value(f, n));
    r.tail = f.value_at(n);
    r.head = f.head;
    return r;
}

/*
 * Transform table: hat f(c) = -f(c-1) w(c-1) + sum_{m>=c} f(m) w(m).
 * It vanishes above hi = high + 1 and is the constant `below` (the full
 * integral of f) at indices < lo.
 */
template <typename T>
struct DualFn {
    int lo = 0;
    int hi = -1;
    std::vector<T> vals;
    T below{};

    T value_at(int n) const {
        if (n < lo) return below;
        if (n > hi) return T{};
        return vals[static_cast<size_t>(n - lo)];
    }
};

template <typename T>
DualFn<T> fourier(Space sp, const DiscreteFn<T>& f) {
    check_fn(sp, f);
    if (!(f.head == T{}))
        throw DomainError("transform needs a vanishing head");
    const int low = f.low, high = f.high();
    // suffix sums R[m] = sum_{k>=m} f(k) w(k), tail in closed form
    std::vector<T> R(static_cast<size_t>(high - low + 2));
    R[static_cast<size_t>(high - low + 1)] = f.tail * detail::two_pow<T>(-(high + 1));
    for (int m = high; m >= low; --m)
        R[static_cast<size_t>(m - low)] =
            f.value_at(m) * detail::two_pow<T>(-(m + 1)) + R[static_cast<size_t>(m - low + 1)];
    DualFn<T> d;
    d.lo = low;
    d.hi = high + 1;
    d.below = R[0];
    d.vals.reserve(static_cast<size_t>(d.hi - d.lo + 1));
    for (int c = d.lo; c <= d.hi; ++c) {
        T r_prev = c - 1 >= low ? f.value_at(c - 1) * detail::two_pow<T>(-c) : T{};
        T suffix = c <= high ? R[static_cast<size_t>(c - low)]
                             : f.tail * detail::two_pow<T>(-std::max(c, high + 1));
        d.vals.push_back(suffix - r_prev);
    }
    return d;
}

// Dual mass below index lo: sum of plancherel weights, in closed form.
inline Dyadic plancherel_mass_below(Space sp, int lo) {
    if (sp == Space::Half) {
        if (lo <= 0) return Dyadic{};
        return Dyadic::pow2(lo - 1);  // 1 + sum_{n=1}^{lo-1} 2^(n-1)
    }
    return Dyadic::pow2(lo - 1);  // sum_{n <= lo-1} 2^(n-1)
}

// | sum f^2 w  -  sum (hat f)^2 pi |, exactly zero on this function class.
inline Dyadic parseval_residual(Space sp, const DyadicFn& f) {
    auto d = fourier(sp, f);
    Dyadic lhs{};
    for (int m = f.low; m <= f.high(); ++m)
        lhs += f.value_at(m).pow(2) * Dyadic::pow2(-(m + 1));
    lhs += f.tail.pow(2) * Dyadic::pow2(-(f.high() + 1));
    Dyadic rhs = d.below.pow(2) * plancherel_mass_below(sp, d.lo);
    for (int c = d.lo; c <= d.hi; ++c) rhs += d.value_at(c).pow(2) * plancherel(sp, c);
    return abs(lhs - rhs);
}

/*
 * Positive type: the transform is nonnegative on every dual index. For a
 * function with vanishing head this reduces to the tail criterion
 *   f(m) w(m) <= sum_{k>m} f(k) w(k)  for every m in [low-1, high];
 * a nonzero head is split off as a multiple of the constant function,
 * whose transform mass sits at the limit of the dual, so it just needs
 * head >= 0.
 */
inline bool is_positive_type(Space sp, const DyadicFn& f) {
    check_fn(sp, f);
    if (f.head.sign() < 0) return false;
    const int low = f.low, high = f.high();
    Dyadic T_suffix = (f.tail - f.head) * Dyadic::pow2(-(high + 1));
    // walk m = high down to low-1, maintaining T(m) = sum_{k>m} r(k)
    Dyadic r_high = (f.value_at(high) - f.head) * Dyadic::pow2(-(high + 1));
    if (r_high > T_suffix) return false;
    for (int m = high - 1; m >= low - 1; --m) {
        T_suffix += (f.value_at(m + 1) - f.head) * Dyadic::pow2(-(m + 2));
        Dyadic r = m >= low ? (f.value_at(m) - f.head) * Dyadic::pow2(-(m + 1)) : Dyadic{};
        if (r > T_suffix) return false;
    }
    return true;
}

inline bool is_positive_type(Space sp, const RealFn& f, double slack = 1e-12) {
    check_fn(sp, f);
    if (f.head < -slack) return false;
    const int low = f.low, high = f.high();
    double T_suffix = (f.tail - f.head) * std::ldexp(1.0, -(high + 1));
    double r_high = (f.value_at(high) - f.head) * std::ldexp(1.0, -(high + 1));
    if (r_high > T_suffix + slack) return false;
    for (int m = high - 1; m >= low - 1; --m) {
        T_suffix += (f.value_at(m + 1) - f.head) * std::ldexp(1.0, -(m + 2));
        double r = m >= low ? (f.value_at(m) - f.head) * std::ldexp(1.0, -(m + 1)) : 0.0;
        if (r > T_suffix + slack) return false;
    }
    return true;
}

/*
 * Nonnegative combination of characters: f = sum_i a_i chi_{n_i} comes out
 * as f(m) = sum_{n_i <= m} a_i - a_{m+1}, which is positive type by
 * construction.
 */
inline DyadicFn synthesize_pd(Space sp, const std::map<int, Dyadic>& atoms) {
    if (atoms.empty()) throw DomainError("synthesize_pd: no atoms");
    for (const auto& [n, a] : atoms) {
        check_point(sp, n);
        if (a.sign() < 0) throw DomainError("synthesize_pd: negative weight");
    }
    int minidx = atoms.begin()->first;
    int maxidx = atoms.rbegin()->first;
    DyadicFn f;
    f.low = sp == Space::Half ? std::max(0, minidx - 1) : minidx - 1;
    Dyadic prefix{};
    auto weight_at = [&atoms](int n) {
        auto it = atoms.find(n);
        return it == atoms.end() ? Dyadic{} : it->second;
    };
    for (int m = f.low; m <= maxidx; ++m) {
        prefix += weight_at(m);
        f.vals.push_back(prefix - weight_at(m + 1));
    }
    for (const auto& [n, a] : atoms) f.tail += a;
    return f;
}

// |f|^p pointwise, exact for integer exponents.
inline DyadicFn pointwise_power(const DyadicFn& f, unsigned p) {
    if (p == 0) throw DomainError("pointwise_power: p >= 1");
    DyadicFn r;
    r.low = f.low;
    r.vals.reserve(f.vals.size());
    for (const auto& v : f.vals) r.vals.push_back(abs(v).pow(p));
    r.tail = abs(f.tail).pow(p);
    r.head = abs(f.head).pow(p);
    return r;
}

inline RealFn pointwise_power(const RealFn& f, double p) {
    if (!(p >= 1.0)) throw DomainError("pointwise_power: p >= 1");
    RealFn r;
    r.low = f.low;
    r.vals.reserve(f.vals.size());
    for (double v : f.vals) r.vals.push_back(std::pow(std::abs(v), p));
    r.tail = std::pow(std::abs(f.tail), p);
    r.head = std::pow(std::abs(f.head), p);
    return r;
}

// A half-ladder function read as a full-ladder function (zero below 0).
inline DyadicFn extend_by_zero(const DyadicFn& f) {
    check_fn(Space::Half, f);
    return f;
}

struct WienerReport {
    Dyadic lhs;
    Dyadic rhs;
    bool holds = false;
    bool positive_type = false;
};

/*
 * Localization inequality with constant one: for positive-type f, any
 * probability measure mu, and the upper set U_N = {m >= N} u {inf},
 *   sum_x mu(x) int (tau_x |f|^p) 1_{U_N} dw  <=  int |f|^p 1_{U_N} dw.
 * Translates by x > high(f) reproduce the right side exactly, which is
 * how the geometric part of mu is summed in closed form. With
 * enforce=false a non-positive-type f is allowed through so that the
 * failure of the inequality can be observed.
 */
inline WienerReport wiener_inequality_check(Space sp, const DyadicFn& f,
                                            const DiscreteMeasure& mu, int N, unsigned p = 1,
                                            bool enforce = true) {
    check_fn(sp, f);
    check_point(sp, N);
    for (const auto& [x, w] : mu.atoms) {
        check_point(sp, x);
        if (w.sign() < 0) throw DomainError("wiener: negative atom");
    }
    if (mu.spread_base) check_point(sp, *mu.spread_base);
    if (!(mu.total_mass() == Dyadic(1)))
        throw DomainError("wiener: probability measure required");
    WienerReport rep;
    rep.positive_type = is_positive_type(sp, f);
    if (enforce && !rep.positive_type)
        throw PositivityViolation("wiener: f is not of positive type");
    DyadicFn g = pointwise_power(f, p);
    const int high = g.high();
    auto r_of = [&g](int m) { return g.value_at(m) * Dyadic::pow2(-(m + 1)); };
    // rhs = sum_{m >= N} g(m) w(m)
    Dyadic rhs{};
    for (int m = N; m <= high; ++m) rhs += r_of(m);
    rhs += g.tail * Dyadic::pow2(-std::max(N, high + 1));
    auto I_of = [&](int x) -> Dyadic {
        if (x > high) return rhs;  // tau_x g agrees with g on U_N
        if (x < N) return g.value_at(x) * Dyadic::pow2(-N);
        Dyadic acc{};
        for (int m = N; m < x; ++m) acc += r_of(m);
        acc += spread_value(g, x) * Dyadic::pow2(-(x + 1));
        acc += g.value_at(x) * Dyadic::pow2(-(x + 1));
        return acc;
    };
    Dyadic lhs = mu.at_inf * rhs;
    for (const auto& [x, w] : mu.atoms) lhs += w * I_of(x);
    if (mu.spread_base) {
        int b = *mu.spread_base;
        int kmax = std::max(0, high - b);
        for (int k = 1; k <= kmax; ++k) lhs += Dyadic::pow2(-k) * I_of(b + k);
        lhs += Dyadic::pow2(-kmax) * rhs;
    }
    rep.lhs = lhs;
    rep.rhs = rhs;
    rep.holds = !(lhs > rhs);
    return rep;
}

/*
 * Exact ingredients of the mixed norms on the full ladder, split at 0:
 * U_0 = {m >= 0} u {inf} carries total weight 1, while each m < 0 is its
 * own window of weight 2^-(m+1) > 1/2.
 */
inline Dyadic sup_abs_below(const DyadicFn& f) {
    Dyadic best = abs(f.head);
    for (int m = f.low; m <= std::min(f.high(), -1); ++m)
        best = max(best, abs(f.value_at(m)));
    if (f.high() <= -2) best = max(best, abs(f.tail));
    return best;
}

inline Dyadic local_power_mass(const DyadicFn& f, unsigned p) {
    if (p == 0) throw DomainError("local_power_mass: p >= 1");
    Dyadic acc{};
    if (f.low > 0) acc += abs(f.head).pow(p) * (Dyadic(1) - Dyadic::pow2(-f.low));
    for (int m = std::max(f.low, 0); m <= f.high(); ++m)
        acc += abs(f.value_at(m)).pow(p) * Dyadic::pow2(-(m + 1));
    acc += abs(f.tail).pow(p) * Dyadic::pow2(-std::max(f.high() + 1, 0));
    return acc;
}

inline Dyadic sup_local(const DyadicFn& f) {
    Dyadic best = abs(f.tail);
    for (int m = std::max(f.low, 0); m <= f.high(); ++m)
        best = max(best, abs(f.value_at(m)));
    if (f.low > 0) best = max(best, abs(f.head));
    return best;
}

struct StarNormResult {
    double value = 0.0;
    bool divergent = false;
};

/*
 * Mixed (p,q) norm on the full ladder: local p-norm over U_0, q-sum with
 * weight w(m) over the windows m < 0. Nonzero head makes the q-sum
 * diverge for finite q.
 */
inline StarNormResult star_norm(Space sp, const DyadicFn& f, double p, double q) {
    if (sp != Space::Full) throw DomainError("star_norm: full ladder only");
    if (!(p >= 1.0) || !(q >= 1.0)) throw DomainError("star_norm: exponents >= 1");
    const bool pinf = std::isinf(p), qinf = std::isinf(q);
    double local;
    if (pinf) {
        local = sup_local(f).to_double();
    } else {
        double mass = 0.0;
        if (f.low > 0)
            mass += std::pow(std::abs(f.head.to_double()), p) *
                    (1.0 - std::ldexp(1.0, -f.low));
        for (int m = std::max(f.low, 0); m <= f.high(); ++m)
            mass += std::pow(std::abs(f.value_at(m).to_double()), p) *
                    std::ldexp(1.0, -(m + 1));
        mass += std::pow(std::abs(f.tail.to_double()), p) *
                std::ldexp(1.0, -std::max(f.high() + 1, 0));
        local = std::pow(mass, 1.0 / p);
    }
    StarNormResult res;
    if (qinf) {
        res.value = std::max(sup_abs_below(f).to_double(), local);
        return res;
    }
    if (!(f.head == Dyadic{})) {
        res.value = std::numeric_limits<double>::infinity();
        res.divergent = true;
        return res;
    }
    double acc = 0.0;
    for (int m = f.low; m <= std::min(f.high(), -1); ++m)
        acc += std::ldexp(1.0, -(m + 1)) * std::pow(std::abs(f.value_at(m).to_double()), q);
    if (f.high() <= -2)
        acc += std::pow(std::abs(f.tail.to_double()), q) *
               (std::ldexp(1.0, -(f.high() + 1)) - 1.0);
    res.value = std::pow(acc + std::pow(local, q), 1.0 / q);
    return res;
}

/*
 * Dual mixed norm: local a-norm against the dual weight over indices
 * <= 0 (their total dual mass is 1), b-sum over indices > 0.
 */
inline double dual_star_norm(const DualFn<Dyadic>& d, double a, double b) {
    if (!(a >= 1.0) || !(b >= 1.0)) throw DomainError("dual_star_norm: exponents >= 1");
    auto val = [&d](int n) { return std::abs(d.value_at(n).to_double()); };
    double local;
    if (std::isinf(a)) {
        local = std::abs(d.below.to_double());
        for (int n = d.lo; n <= std::min(d.hi, 0); ++n) local = std::max(local, val(n));
    } else {
        double mass = std::pow(std::abs(d.below.to_double()), a) *
                      std::ldexp(1.0, std::min(d.lo - 1, 0));
        for (int n = d.lo; n <= std::min(d.hi, 0); ++n)
            mass += std::ldexp(1.0, n - 1) * std::pow(val(n), a);
        local = std::pow(mass, 1.0 / a);
    }
    if (std::isinf(b)) {
        double best = local;
        for (int n = std::max(d.lo, 1); n <= d.hi; ++n) best = std::max(best, val(n));
        if (d.lo > 1) best = std::max(best, std::abs(d.below.to_double()));
        return best;
    }
    double acc = 0.0;
    for (int n = std::max(d.lo, 1); n <= d.hi; ++n)
        acc += std::ldexp(1.0, n - 1) * std::pow(val(n), b);
    if (d.lo > 1)
        acc += std::pow(std::abs(d.below.to_double()), b) * (std::ldexp(1.0, d.lo - 1) - 1.0);
    return std::pow(acc + std::pow(local, b), 1.0 / b);
}

struct HYReport {
    double lhs = 0.0;  // dual norm of the transform at the conjugate pair
    double rhs = 0.0;  // primal mixed norm
    bool holds = false;
};

inline double conjugate_exponent(double t) {
    if (!(t >= 1.0)) throw DomainError("conjugate_exponent: t >= 1");
    if (t == 1.0) return std::numeric_limits<double>::infinity();
    if (std::isinf(t)) return 1.0;
    return t / (t - 1.0);
}

// Transform bound with constant one between the mixed norms:
// the (q', p') dual norm of hat f against the (p, q) norm of f.
inline HYReport hausdorff_young_check(const DyadicFn& f, double p, double q) {
    HYReport rep;
    auto d = fourier(Space::Full, f);
    rep.lhs = dual_star_norm(d, conjugate_exponent(q), conjugate_exponent(p));
    rep.rhs = star_norm(Space::Full, f, p, q).value;
    rep.holds = rep.lhs <= rep.rhs * (1.0 + 1e-12) + 1e-15;
    return rep;
}

} // namespace hyperamalgam::dyadic_hyper
