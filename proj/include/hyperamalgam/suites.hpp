#pragma once

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <limits>
#include <random>
#include <string>
#include <thread>
#include <vector>

#include "hyperamalgam/dyadic_hyper.hpp"
#include "hyperamalgam/motion_amalgam.hpp"
#include "hyperamalgam/naimark.hpp"
#include "hyperamalgam/pdgen.hpp"
#include "hyperamalgam/report.hpp"

/*
 * Named check suites behind the command line. Each suite fills a
 * SuiteReport with one row per checked instance; a row's `pass` is what
 * the exit code aggregates. Ratio-style suites (no provable constant)
 * assert only that their quantities are finite.
 */
namespace hyperamalgam::harness {

struct RunConfig {
    uint64_t seed = 42;
    double p = 2.0;
    int nmax = 12;
    double xmax = 32.0;
    double tol_abs = 1e-9;
    double tol_rel = 1e-8;
    int trials = 20;
    int threads = 4;
};

namespace detail {

inline QuadratureConfig quad_of(const RunConfig& cfg) {
    return QuadratureConfig{cfg.tol_abs, cfg.tol_rel, 1 << 14};
}

// Index-sliced worker pool; each task writes only its own slot, so the
// assembled result does not depend on scheduling.
template <typename F>
void parallel_for(int n, int threads, F&& body) {
    threads = std::max(1, std::min(threads, n));
    if (threads <= 1) {
        for (int i = 0; i < n; ++i) body(i);
        return;
    }
    std::atomic<int> next{0};
    std::vector<std::thread> pool;
    pool.reserve(static_cast<size_t>(threads));
    for (int t = 0; t < threads; ++t)
        pool.emplace_back([&body, &next, n] {
            for (int i; (i = next.fetch_add(1)) < n;) body(i);
        });
    for (auto& th : pool) th.join();
}

inline std::vector<double> with_exponent(std::vector<double> base, double extra) {
    bool found = false;
    for (double b : base) found = found || b == extra;
    if (!found && extra >= 1.0) base.push_back(extra);
    return base;
}

struct NamedProfile {
    std::string name;
    GridFunction fn;
};

inline std::vector<NamedProfile> motion_profiles(uint64_t seed, int spectral_count,
                                                 double window) {
    std::vector<NamedProfile> ps;
    ps.push_back({"unit-cell", GridFunction::indicator(0.0, 1.0, window)});
    ps.push_back({"offset-block", GridFunction::indicator(2.0, 5.0, window)});
    ps.push_back({"tent", GridFunction::hat(1.0, 3.0, 2.0, window)});
    ps.push_back({"two-bumps", GridFunction(
                                   [](double x) {
                                       double a = x < 1.0 ? 1.0 : 0.0;
                                       double b = (x >= 3.0 && x < 4.0) ? 2.0 : 0.0;
                                       return a + b;
                                   },
                                   window, {1.0, 3.0, 4.0}, 4.0)});
    for (int i = 0; i < spectral_count; ++i)
        ps.push_back({"spectral-" + std::to_string(i),
                      pdgen::bochner_motion(pdgen::random_bochner_atoms(seed + i), window)});
    return ps;
}

inline SuiteReport base_report(const std::string& suite, const RunConfig& cfg) {
    SuiteReport rep;
    rep.suite = suite;
    rep.seed = cfg.seed;
    rep.tol_abs = cfg.tol_abs;
    rep.tol_rel = cfg.tol_rel;
    return rep;
}

// ---- motion-side suites ----------------------------------------------

inline SuiteReport suite_equivalence_motion(const RunConfig& cfg) {
    auto rep = base_report("equivalence-motion", cfg);
    auto qc = quad_of(cfg);
    auto profiles = motion_profiles(cfg.seed, 4, 8.0);
    auto ps = with_exponent({1.0, 2.0, 3.0}, cfg.p);
    int n = static_cast<int>(profiles.size() * ps.size());
    rep.cases.resize(static_cast<size_t>(n));
    parallel_for(n, cfg.threads, [&](int i) {
        const auto& prof = profiles[static_cast<size_t>(i) / ps.size()];
        double p = ps[static_cast<size_t>(i) % ps.size()];
        auto r = motion::verify_equivalence(prof.fn, p, qc);
        CaseResult c;
        c.id = prof.name + "-p" + std::to_string(p).substr(0, 4);
        c.inputs = {{"profile", prof.name}, {"p", p}};
        c.lhs = num(r.discrete);
        c.rhs = num(r.continuous);
        c.constant = {{"lower", num(r.c_lower)}, {"upper", num(r.c_upper)}};
        c.pass = r.pass;
        rep.cases[static_cast<size_t>(i)] = std::move(c);
    });
    return rep;
}

inline SuiteReport suite_translation_bound(const RunConfig& cfg) {
    auto rep = base_report("translation-bound", cfg);
    auto qc = quad_of(cfg);
    int nmax = std::clamp(cfg.nmax, 1, 30);
    std::vector<std::pair<int, double>> grid;
    for (int n = 1; n <= nmax; ++n)
        for (double y = 0.0; y <= 16.0; y += 0.5) grid.emplace_back(n, y);
    rep.cases.resize(grid.size());
    parallel_for(static_cast<int>(grid.size()), cfg.threads, [&](int i) {
        auto [n, y] = grid[static_cast<size_t>(i)];
        double ratio = motion::translation_ratio(n, y, qc);
        CaseResult c;
        c.id = "n" + std::to_string(n) + "-y" + std::to_string(y).substr(0, 4);
        c.inputs = {{"n", n}, {"y", y}};
        c.lhs = num(ratio);
        c.rhs = num(122.0);
        c.constant = num(122.0);
        c.pass = std::isfinite(ratio) && ratio <= 122.0;
        rep.cases[static_cast<size_t>(i)] = std::move(c);
    });
    return rep;
}

inline SuiteReport suite_hy_motion(const RunConfig& cfg) {
    auto rep = base_report("hausdorff-young-motion", cfg);
    auto qc = quad_of(cfg);
    auto profiles = motion_profiles(cfg.seed, 2, 8.0);
    rep.cases.resize(profiles.size());
    parallel_for(static_cast<int>(profiles.size()), cfg.threads, [&](int i) {
        const auto& prof = profiles[static_cast<size_t>(i)];
        auto r = motion::hy_endpoint(prof.fn, 8.0, qc);
        CaseResult c;
        c.id = prof.name;
        c.inputs = {{"profile", prof.name}, {"lambda_max", r.lambda_max}};
        c.lhs = num(r.dual_norm);
        c.rhs = num(r.primal_norm);
        c.constant = num(r.ratio);
        c.pass = std::isfinite(r.dual_norm) && std::isfinite(r.primal_norm) &&
                 r.dual_norm >= 0 && r.primal_norm >= 0;
        rep.cases[static_cast<size_t>(i)] = std::move(c);
    });
    return rep;
}

inline SuiteReport suite_transforms_theorem(const RunConfig& cfg) {
    auto rep = base_report("transforms-theorem", cfg);
    auto qc = quad_of(cfg);
    std::vector<NamedProfile> gs;
    gs.push_back({"unit-cell", GridFunction::indicator(0.0, 1.0, 4.0)});
    gs.push_back({"tent", GridFunction::hat(0.0, 1.0, 1.0, 4.0)});
    gs.push_back({"shifted", GridFunction::indicator(0.5, 1.5, 4.0)});
    gs.push_back({"narrow", GridFunction::indicator(0.0, 0.5, 4.0)});
    rep.cases.resize(gs.size());
    parallel_for(static_cast<int>(gs.size()), cfg.threads, [&](int i) {
        const auto& prof = gs[static_cast<size_t>(i)];
        auto r = motion::check_transforms_theorem(prof.fn, 8.0, qc);
        CaseResult c;
        c.id = prof.name;
        c.inputs = {{"profile", prof.name}, {"lambda_max", r.lambda_max}};
        c.lhs = num(r.dual_l1l2);
        c.rhs = num(r.global_l2linf);
        c.constant = num(r.near_identity_l2);
        c.pass = r.all_finite;
        rep.cases[static_cast<size_t>(i)] = std::move(c);
    });
    return rep;
}

inline SuiteReport suite_naimark(const RunConfig& cfg) {
    auto rep = base_report("naimark", cfg);
    for (double a : {-16.0, -25.0}) {
        for (double p : {1.0, 2.0, 4.0}) {
            bool monotone = true;
            double prev = 0.0;
            for (double x : {5.0, 10.0, 15.0, 20.0}) {
                double b = naimark::counterexample_lower_bound(a, p, x).bound;
                monotone = monotone && b > prev;
                prev = b;
            }
            double lo = naimark::counterexample_lower_bound(a, p, 5.0).bound;
            double hi = naimark::counterexample_lower_bound(a, p, 20.0).bound;
            CaseResult c;
            c.id = "a" + std::to_string(int(a)) + "-p" + std::to_string(p).substr(0, 3);
            c.inputs = {{"a", a}, {"p", p}, {"x", {5.0, 10.0, 15.0, 20.0}}};
            c.lhs = num(hi);
            c.rhs = num(lo);
            c.constant = num(1e3);
            c.pass = monotone && hi / lo >= 1e3;
            rep.cases.push_back(std::move(c));
        }
    }
    return rep;
}

// ---- ladder-side suites ----------------------------------------------

inline dyadic_hyper::DyadicFn seeded_ladder_fn(dyadic_hyper::Space sp, std::mt19937_64& rng) {
    int low = sp == dyadic_hyper::Space::Half ? static_cast<int>(rng() % 5)
                                              : static_cast<int>(rng() % 9) - 4;
    dyadic_hyper::DyadicFn f;
    f.low = low;
    int n = 1 + static_cast<int>(rng() % 6);
    for (int i = 0; i < n; ++i)
        f.vals.push_back(Dyadic(static_cast<long long>(rng() % 17) - 8) * Dyadic::pow2(-3));
    f.tail = Dyadic(static_cast<long long>(rng() % 7) - 3) * Dyadic::pow2(-3);
    return f;
}

inline SuiteReport suite_discrete_exact(const RunConfig& cfg) {
    using dyadic_hyper::Space;
    using dyadic_hyper::Point;
    namespace dh = dyadic_hyper;
    auto rep = base_report("discrete-exact", cfg);
    auto spaces = {Space::Half, Space::Full};
    auto space_name = [](Space sp) {
        return sp == Space::Half ? std::string("half") : std::string("full");
    };

    {
        dh::DyadicFn one;
        one.low = 0;
        one.tail = Dyadic(1);
        Dyadic mass = dh::integral(Space::Half, one);
        CaseResult c;
        c.id = "haar-mass-half";
        c.inputs = json::object();
        c.lhs = dyadic_json(mass);
        c.rhs = dyadic_json(Dyadic(1));
        c.constant = nullptr;
        c.pass = mass == Dyadic(1);
        rep.cases.push_back(std::move(c));
    }

    for (Space sp : spaces) {
        int lo = sp == Space::Half ? 0 : -8;
        int mismatches = 0, checked = 0;
        for (int a = lo; a <= 8; ++a)
            for (int b = lo; b <= 8; ++b) {
                auto prod = dh::multiply(dh::character_fn(sp, a), dh::character_fn(sp, b));
                Dyadic got = dh::integral(sp, prod);
                Dyadic expect =
                    a == b ? (sp == Space::Half && a == 0 ? Dyadic(1) : Dyadic::pow2(1 - a))
                           : Dyadic();
                ++checked;
                if (!(got == expect)) ++mismatches;
            }
        CaseResult c;
        c.id = "orthogonality-" + space_name(sp);
        c.inputs = {{"index_range", {lo, 8}}, {"pairs", checked}};
        c.lhs = json(mismatches);
        c.rhs = json(0);
        c.constant = nullptr;
        c.pass = mismatches == 0;
        rep.cases.push_back(std::move(c));
    }

    for (Space sp : spaces) {
        int lo = sp == Space::Half ? 0 : -6;
        int mismatches = 0, checked = 0;
        for (int a = lo; a <= 6; ++a) {
            for (int b = lo; b <= 6; ++b) {
                if (a == b) continue;
                auto prod = dh::multiply(dh::character_fn(sp, a), dh::character_fn(sp, b));
                auto expect = dh::character_fn(sp, std::max(a, b));
                for (int m = lo; m <= 12; ++m) {
                    ++checked;
                    if (!(prod.value_at(m) == expect.value_at(m))) ++mismatches;
                }
                if (!(prod.tail == expect.tail)) ++mismatches;
            }
            // squared characters: geometric expansion down the index
            auto chi = dh::character_fn(sp, a);
            for (int m = lo; m <= 12; ++m) {
                Dyadic lhs = chi.value_at(m).pow(2);
                int kmax = std::max(1, a - m);
                if (sp == Space::Half) kmax = std::min(kmax, a);
                Dyadic rhs;
                for (int k = 1; k <= kmax; ++k)
                    rhs += Dyadic::pow2(-k) * dh::character_fn(sp, a - k).value_at(m);
                rhs += Dyadic::pow2(-kmax);
                ++checked;
                if (!(lhs == rhs)) ++mismatches;
            }
        }
        CaseResult c;
        c.id = "character-products-" + space_name(sp);
        c.inputs = {{"index_range", {lo, 6}}, {"evaluations", checked}};
        c.lhs = json(mismatches);
        c.rhs = json(0);
        c.constant = nullptr;
        c.pass = mismatches == 0;
        rep.cases.push_back(std::move(c));
    }

    for (Space sp : spaces) {
        std::mt19937_64 rng(cfg.seed);
        Dyadic worst;
        int trials = std::max(cfg.trials, 5);
        for (int t = 0; t < trials; ++t) {
            auto f = seeded_ladder_fn(sp, rng);
            worst = max(worst, dh::parseval_residual(sp, f));
        }
        CaseResult c;
        c.id = "energy-identity-" + space_name(sp);
        c.inputs = {{"trials", trials}};
        c.lhs = dyadic_json(worst);
        c.rhs = dyadic_json(Dyadic());
        c.constant = nullptr;
        c.pass = worst == Dyadic();
        rep.cases.push_back(std::move(c));
    }

    {
        int disagreements = 0;
        for (long long t : {0LL, 1LL, -1LL}) {
            for (int code = 0; code < 243; ++code) {
                int cc = code;
                dh::DyadicFn f;
                f.low = 0;
                for (int i = 0; i < 5; ++i, cc /= 3)
                    f.vals.push_back(Dyadic((cc % 3) - 1) * Dyadic::pow2(-1));
                f.tail = Dyadic(t) * Dyadic::pow2(-1);
                auto d = dh::fourier(Space::Full, f);
                bool nonneg = d.below.sign() >= 0;
                for (const auto& v : d.vals) nonneg = nonneg && v.sign() >= 0;
                if (dh::is_positive_type(Space::Full, f) != nonneg) ++disagreements;
            }
        }
        CaseResult c;
        c.id = "tail-criterion-vs-transform";
        c.inputs = {{"patterns", 3 * 243}};
        c.lhs = json(disagreements);
        c.rhs = json(0);
        c.constant = nullptr;
        c.pass = disagreements == 0;
        rep.cases.push_back(std::move(c));
    }

    for (Space sp : spaces) {
        std::mt19937_64 rng(cfg.seed + 1);
        int lo = sp == Space::Half ? 0 : -4;
        int mismatches = 0;
        for (int t = 0; t < std::max(cfg.trials / 2, 5); ++t) {
            auto f = seeded_ladder_fn(sp, rng);
            Dyadic total = dh::integral(sp, f);
            for (int n = lo; n <= 6; ++n)
                if (!(dh::integral(sp, dh::translate(sp, n, f)) == total)) ++mismatches;
        }
        CaseResult c;
        c.id = "translate-invariance-" + space_name(sp);
        c.inputs = {{"trials", std::max(cfg.trials / 2, 5)}};
        c.lhs = json(mismatches);
        c.rhs = json(0);
        c.constant = nullptr;
        c.pass = mismatches == 0;
        rep.cases.push_back(std::move(c));
    }

    {
        // translating from inside the upper set reproduces the local mass
        int mismatches = 0;
        for (uint64_t s = 1; s <= 10; ++s) {
            auto f = pdgen::random_pd_discrete(Space::Full, cfg.seed + s, 6);
            int N = static_cast<int>(s % 3);
            int x = std::max(N, f.high());  // any site >= N gives equality
            auto repx = dh::wiener_inequality_check(
                Space::Full, f, dh::DiscreteMeasure::point(Point::at(x)), N, 2);
            if (!(repx.lhs == repx.rhs)) ++mismatches;
        }
        CaseResult c;
        c.id = "localization-equality-inside";
        c.inputs = {{"trials", 10}};
        c.lhs = json(mismatches);
        c.rhs = json(0);
        c.constant = nullptr;
        c.pass = mismatches == 0;
        rep.cases.push_back(std::move(c));
    }

    {
        auto chi = dh::character_fn(Space::Full, 0);
        bool ok = dh::sup_abs_below(chi) == Dyadic(1);
        for (unsigned p : {1u, 2u, 3u}) ok = ok && dh::local_power_mass(chi, p) == Dyadic(1);
        CaseResult c;
        c.id = "mixed-norm-closed-form";
        c.inputs = {{"function", "character-0"}};
        c.lhs = dyadic_json(dh::local_power_mass(chi, 2));
        c.rhs = dyadic_json(Dyadic(1));
        c.constant = nullptr;
        c.pass = ok;
        rep.cases.push_back(std::move(c));
    }

    return rep;
}

inline SuiteReport suite_wiener_discrete(const RunConfig& cfg) {
    using dyadic_hyper::Space;
    using dyadic_hyper::Point;
    namespace dh = dyadic_hyper;
    auto rep = base_report("wiener-discrete", cfg);
    int trials = std::max(cfg.trials, 5);
    for (int t = 0; t < trials; ++t) {
        uint64_t s = cfg.seed + static_cast<uint64_t>(t);
        auto f = pdgen::random_pd_discrete(Space::Full, s, 8);
        std::mt19937_64 rng(s ^ 0x9e3779b97f4a7c15ULL);
        int j = static_cast<int>(rng() % 13) - 6;
        for (int which = 0; which < 2; ++which) {
            auto mu = which == 0 ? dh::DiscreteMeasure::point(Point::at(j))
                                 : dh::convolve_points(Space::Full, Point::at(j), Point::at(j));
            for (int N : {0, 2}) {
                for (unsigned p : {1u, 2u}) {
                    auto r = dh::wiener_inequality_check(Space::Full, f, mu, N, p);
                    CaseResult c;
                    c.id = "seed" + std::to_string(s) + (which == 0 ? "-point" : "-square") +
                           "-N" + std::to_string(N) + "-p" + std::to_string(p);
                    c.inputs = {{"seed", s},
                                {"measure", which == 0 ? "point" : "square"},
                                {"at", j},
                                {"N", N},
                                {"p", p}};
                    c.lhs = dyadic_json(r.lhs);
                    c.rhs = dyadic_json(r.rhs);
                    c.constant = num(1.0);
                    c.pass = r.holds && r.positive_type;
                    rep.cases.push_back(std::move(c));
                }
            }
        }
    }
    {
        // without positivity the inequality must be seen to fail
        int N = 3;
        dh::DyadicFn bad;
        bad.low = N - 1;
        bad.vals = {Dyadic(1)};
        auto r = dh::wiener_inequality_check(Space::Full, bad,
                                             dh::DiscreteMeasure::point(Point::at(N - 1)), N,
                                             1, /*enforce=*/false);
        CaseResult c;
        c.id = "negative-control";
        c.inputs = {{"N", N}, {"measure", "point"}, {"at", N - 1}};
        c.lhs = dyadic_json(r.lhs);
        c.rhs = dyadic_json(r.rhs);
        c.constant = num(1.0);
        c.pass = !r.holds && !r.positive_type;  // the violation is the expectation
        rep.cases.push_back(std::move(c));
    }
    return rep;
}

inline SuiteReport suite_wiener_motion(const RunConfig& cfg) {
    auto rep = base_report("wiener-motion", cfg);
    auto qc = quad_of(cfg);
    double domain = std::max(8.0, cfg.xmax);
    // sample windows must stay inside the evaluation domain
    int cells = std::clamp(cfg.nmax, 4, static_cast<int>(domain) - 1);
    int profiles = std::max(4, cfg.trials / 4);
    auto ps = with_exponent({2.0, 4.0}, cfg.p);
    std::vector<CaseResult> cases(static_cast<size_t>(profiles) * ps.size());
    parallel_for(static_cast<int>(cases.size()), cfg.threads, [&](int i) {
        int prof = i / static_cast<int>(ps.size());
        double p = ps[static_cast<size_t>(i) % ps.size()];
        auto atoms = pdgen::random_bochner_atoms(cfg.seed + static_cast<uint64_t>(prof));
        auto f = pdgen::bochner_motion(atoms, domain);
        double cont =
            motion::continuous_norm(f, p, motion::default_sample_set(cells), qc);
        auto fp = GridFunction([f, p](double x) { return std::pow(std::abs(f(x)), p); },
                               f.x_max(), f.breakpoints(), f.support_bound());
        double local = std::pow(
            std::max(0.0, integrate(fp, 0.0, 1.0, [](double x) { return x * x; }, qc)),
            1.0 / p);
        double ratio = local > 0 ? cont / local : std::numeric_limits<double>::infinity();
        CaseResult c;
        c.id = "spectral" + std::to_string(prof) + "-p" + std::to_string(p).substr(0, 3);
        c.inputs = {{"profile", prof}, {"p", p}, {"windows", cells}, {"domain", domain}};
        c.lhs = num(cont);
        c.rhs = num(local);
        c.constant = num(ratio);
        c.pass = std::isfinite(cont) && std::isfinite(local) && local > 0 &&
                 std::isfinite(ratio);
        cases[static_cast<size_t>(i)] = std::move(c);
    });
    rep.cases = std::move(cases);
    return rep;
}

} // namespace detail

inline SuiteReport run_suite(const std::string& name, const RunConfig& cfg) {
    auto started = std::chrono::steady_clock::now();
    SuiteReport rep;
    if (name == "equivalence-motion")
        rep = detail::suite_equivalence_motion(cfg);
    else if (name == "translation-bound")
        rep = detail::suite_translation_bound(cfg);
    else if (name == "hausdorff-young-motion")
        rep = detail::suite_hy_motion(cfg);
    else if (name == "transforms-theorem")
        rep = detail::suite_transforms_theorem(cfg);
    else if (name == "naimark")
        rep = detail::suite_naimark(cfg);
    else if (name == "discrete-exact")
        rep = detail::suite_discrete_exact(cfg);
    else if (name == "wiener-discrete")
        rep = detail::suite_wiener_discrete(cfg);
    else if (name == "wiener-motion")
        rep = detail::suite_wiener_motion(cfg);
    else if (name == "all") {
        rep = detail::base_report("all", cfg);
        for (const char* sub :
             {"discrete-exact", "wiener-discrete", "naimark", "equivalence-motion",
              "translation-bound", "hausdorff-young-motion", "transforms-theorem",
              "wiener-motion"}) {
            auto part = run_suite(sub, cfg);
            for (auto& c : part.cases) {
                c.id = std::string(sub) + "/" + c.id;
                rep.cases.push_back(std::move(c));
            }
        }
    } else {
        throw UnknownSuite("unknown suite: " + name);
    }
    rep.wall_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                      std::chrono::steady_clock::now() - started)
                      .count();
    return rep;
}

} // namespace hyperamalgam::harness
