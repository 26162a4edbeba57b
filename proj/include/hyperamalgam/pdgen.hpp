#pragma once

#include <cmath>
#include <cstdint>
#include <map>
#include <random>
#include <vector>

#include "hyperamalgam/bessel_kingman.hpp"
#include "hyperamalgam/dyadic_hyper.hpp"
#include "hyperamalgam/errors.hpp"
#include "hyperamalgam/numerics.hpp"

/*
 * Generators of positive-type profiles: nonnegative spectral combinations
 * on the half-line, convolution squares, an L1-bounded profile whose
 * value at the origin grows without bound, and seeded dyadic examples on
 * the ladders. All randomness is drawn raw from mt19937_64 so the output
 * is identical across platforms.
 */
namespace hyperamalgam::pdgen {

/*
 * Nonnegative combination of the half-line characters sin(l x)/(l x),
 * truncated to the window [0, x_max] for norm work. Positive type by
 * construction since every spectral weight is nonnegative.
 */
inline GridFunction bochner_motion(const bessel::SpectralAtoms& atoms, double x_max = 64.0) {
    if (atoms.lambdas.size() != atoms.weights.size() || atoms.lambdas.empty())
        throw DomainError("bochner_motion: atom lists empty or mismatched");
    for (size_t i = 0; i < atoms.lambdas.size(); ++i) {
        if (atoms.lambdas[i] < 0) throw DomainError("bochner_motion: negative frequency");
        if (atoms.weights[i] < 0) throw DomainError("bochner_motion: negative weight");
    }
    if (!(x_max > 0)) throw DomainError("bochner_motion: x_max > 0");
    auto rule = [atoms](double x) {
        double acc = 0.0;
        for (size_t i = 0; i < atoms.lambdas.size(); ++i)
            acc += atoms.weights[i] * bessel::j_alpha(0.5, atoms.lambdas[i] * x);
        return acc;
    };
    return GridFunction(rule, x_max, {}, x_max);
}

// f = g * g has nonnegative transform: the square of the transform of g.
inline GridFunction convolution_square(const GridFunction& g,
                                       const QuadratureConfig& cfg = {}) {
    return bessel::convolve(g, g, cfg);
}

/*
 * sum_{n=1}^{N} c_n (1_{U_n} * 1_{U_n}) with U_n = [0, 2^-n] and
 * c_n = 3 * 8^n / n: each summand contributes exactly 1/n at the origin
 * (the convolution square at 0 is the window mass 2^-3n / 3), so the
 * value at 0 is the N-th harmonic number, while the L1 mass stays below
 * sum 8^-n / (3n) < 1/20. Positive type, integrable, unbounded in N.
 */
inline GridFunction unbounded_positive_type(int n_terms, const QuadratureConfig& cfg = {}) {
    if (n_terms < 1) throw DomainError("unbounded_positive_type: n_terms >= 1");
    struct Term {
        double eps;
        double coeff;
    };
    std::vector<Term> terms;
    std::vector<double> cuts;
    for (int n = 1; n <= n_terms; ++n) {
        double eps = std::ldexp(1.0, -n);
        terms.push_back({eps, 3.0 * std::ldexp(1.0, 3 * n) / n});
        cuts.push_back(eps);
        cuts.push_back(2.0 * eps);
    }
    auto rule = [terms, cfg](double x) {
        double acc = 0.0;
        for (const auto& t : terms) {
            if (x >= 2.0 * t.eps) continue;
            auto window = GridFunction(
                [t, x](double y) { return bessel::translate_indicator_interval(0.0, t.eps, x, y); },
                4.0, {t.eps, x > t.eps ? x - t.eps : t.eps - x, x + t.eps}, t.eps);
            acc += t.coeff * integrate(window, 0.0, t.eps,
                                       [](double y) { return y * y; }, cfg);
        }
        return acc;
    };
    return GridFunction(rule, 2.0, std::move(cuts), 1.0);
}

// Uniform dyadic k/2^j with k in [0,16), j in [0,7), from raw draws.
inline Dyadic random_dyadic_weight(std::mt19937_64& rng) {
    auto k = static_cast<long long>(rng() % 16);
    int j = static_cast<int>(rng() % 7);
    return Dyadic(k) * Dyadic::pow2(-j);
}

/*
 * Seeded positive-type function on a ladder: a handful of dual atoms with
 * small dyadic weights, at indices up to max_index in absolute value
 * (nonnegative indices on the half ladder). Same seed, same function.
 */
inline dyadic_hyper::DyadicFn random_pd_discrete(dyadic_hyper::Space sp, uint64_t seed,
                                                 int max_index = 10) {
    if (max_index < 0) throw DomainError("random_pd_discrete: max_index >= 0");
    std::mt19937_64 rng(seed);
    int count = 1 + static_cast<int>(rng() % 4);
    std::map<int, Dyadic> atoms;
    for (int i = 0; i < count; ++i) {
        int idx;
        if (sp == dyadic_hyper::Space::Half)
            idx = static_cast<int>(rng() % (max_index + 1));
        else
            idx = static_cast<int>(rng() % (2 * max_index + 1)) - max_index;
        atoms[idx] += random_dyadic_weight(rng);
    }
    // ensure the combination is not identically zero
    bool all_zero = true;
    for (const auto& [n, a] : atoms) all_zero = all_zero && a.is_zero();
    if (all_zero) atoms.begin()->second = Dyadic(1);
    return dyadic_hyper::synthesize_pd(sp, atoms);
}

// Seeded spectral atoms for the half-line: dyadic frequencies in
// [0, lambda_max) and positive dyadic weights.
inline bessel::SpectralAtoms random_bochner_atoms(uint64_t seed, int max_terms = 4,
                                                  double lambda_max = 8.0) {
    if (max_terms < 1) throw DomainError("random_bochner_atoms: max_terms >= 1");
    if (!(lambda_max > 0)) throw DomainError("random_bochner_atoms: lambda_max > 0");
    std::mt19937_64 rng(seed);
    int count = 1 + static_cast<int>(rng() % max_terms);
    bessel::SpectralAtoms atoms;
    for (int i = 0; i < count; ++i) {
        // frequency on a 1/16 grid, weight in (0, 2] on a 1/8 grid
        double lam = lambda_max * static_cast<double>(rng() % 128) / 128.0;
        double w = static_cast<double>(1 + rng() % 16) / 8.0;
        atoms.lambdas.push_back(lam);
        atoms.weights.push_back(w);
    }
    return atoms;
}

} // namespace hyperamalgam::pdgen
