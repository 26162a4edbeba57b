#include "doctest.h"

#include <cmath>

#include "hyperamalgam/pdgen.hpp"

using hyperamalgam::Dyadic;
using hyperamalgam::DomainError;
using hyperamalgam::GridFunction;
using hyperamalgam::QuadratureConfig;
namespace bessel = hyperamalgam::bessel;
namespace dh = hyperamalgam::dyadic_hyper;
namespace pdgen = hyperamalgam::pdgen;

TEST_CASE("spectral combinations on the half-line") {
    bessel::SpectralAtoms atoms;
    atoms.lambdas = {0.0, 1.0, 2.5};
    atoms.weights = {0.5, 1.0, 0.25};
    auto f = pdgen::bochner_motion(atoms, 16.0);

    SUBCASE("pointwise values") {
        CHECK(f(0.0) == doctest::Approx(1.75));  // sum of weights
        for (double x : {0.3, 1.0, 2.0, 7.5}) {
            double expect = 0.5 + std::sin(x) / x + 0.25 * std::sin(2.5 * x) / (2.5 * x);
            CHECK(f(x) == doctest::Approx(expect).epsilon(1e-13));
        }
    }

    SUBCASE("origin dominates") {
        for (double x = 0.25; x <= 16.0; x += 0.25) CHECK(std::abs(f(x)) <= f(0.0) + 1e-13);
    }

    SUBCASE("bad atoms rejected") {
        bessel::SpectralAtoms neg;
        neg.lambdas = {1.0};
        neg.weights = {-1.0};
        CHECK_THROWS_AS(pdgen::bochner_motion(neg), DomainError);
        bessel::SpectralAtoms mismatch;
        mismatch.lambdas = {1.0, 2.0};
        mismatch.weights = {1.0};
        CHECK_THROWS_AS(pdgen::bochner_motion(mismatch), DomainError);
    }
}

TEST_CASE("convolution squares have nonnegative transform") {
    QuadratureConfig cfg{1e-9, 1e-8, 1 << 14};
    auto g = GridFunction::hat(0.0, 1.0, 1.0, 4.0);
    auto f = pdgen::convolution_square(g, cfg);
    QuadratureConfig loose{1e-7, 1e-6, 1 << 14};
    for (double lam : {0.0, 0.5, 1.5, 4.0, 9.0}) {
        double ghat = bessel::motion_fourier(g, lam, cfg);
        double fhat = bessel::motion_fourier(f, lam, loose);
        CHECK(fhat >= -1e-6);
        CHECK(fhat == doctest::Approx(ghat * ghat).epsilon(1e-4).scale(1.0));
    }
}

TEST_CASE("integrable but unbounded at the origin") {
    QuadratureConfig cfg{1e-10, 1e-9, 1 << 14};

    SUBCASE("origin value is the harmonic number") {
        double H = 0.0;
        for (int n = 1; n <= 5; ++n) {
            H += 1.0 / n;
            auto f = pdgen::unbounded_positive_type(n, cfg);
            CHECK(f(0.0) == doctest::Approx(H).epsilon(1e-8));
        }
    }

    SUBCASE("L1 mass stays small while the peak grows") {
        auto f = pdgen::unbounded_positive_type(6, cfg);
        double mass = hyperamalgam::integrate(f, 0.0, 1.0,
                                              [](double x) { return x * x; }, cfg);
        double expect = 0.0;
        for (int n = 1; n <= 6; ++n) expect += std::ldexp(1.0, -3 * n) / (3.0 * n);
        CHECK(mass == doctest::Approx(expect).epsilon(1e-6));
        CHECK(mass < 0.05);
        CHECK(f(0.0) > 2.4);
    }

    SUBCASE("pointwise nonnegative with nonnegative transform") {
        auto f = pdgen::unbounded_positive_type(3, cfg);
        for (double x = 0.0; x <= 1.0; x += 0.05) CHECK(f(x) >= -1e-12);
        QuadratureConfig loose{1e-7, 1e-6, 1 << 14};
        for (double lam : {0.0, 1.0, 3.0, 8.0})
            CHECK(bessel::motion_fourier(f, lam, loose) >= -1e-6);
    }

    CHECK_THROWS_AS(pdgen::unbounded_positive_type(0, cfg), DomainError);
}

TEST_CASE("seeded ladder examples") {
    SUBCASE("deterministic and positive type") {
        for (auto sp : {dh::Space::Half, dh::Space::Full}) {
            for (uint64_t seed = 1; seed <= 100; ++seed) {
                auto f = pdgen::random_pd_discrete(sp, seed);
                auto g = pdgen::random_pd_discrete(sp, seed);
                CHECK(f.low == g.low);
                CHECK(f.vals == g.vals);
                CHECK(f.tail == g.tail);
                CHECK(dh::is_positive_type(sp, f));
            }
        }
    }

    SUBCASE("respects the index window") {
        for (uint64_t seed = 1; seed <= 50; ++seed) {
            auto f = pdgen::random_pd_discrete(dh::Space::Full, seed, 6);
            CHECK(f.low >= -7);
            CHECK(f.high() <= 7);
            auto h = pdgen::random_pd_discrete(dh::Space::Half, seed, 6);
            CHECK(h.low >= 0);
        }
    }

    SUBCASE("distinct seeds give distinct functions eventually") {
        int distinct = 0;
        auto base = pdgen::random_pd_discrete(dh::Space::Full, 1);
        for (uint64_t seed = 2; seed <= 20; ++seed) {
            auto f = pdgen::random_pd_discrete(dh::Space::Full, seed);
            if (!(f.vals == base.vals) || f.low != base.low) ++distinct;
        }
        CHECK(distinct >= 15);
    }
}

TEST_CASE("seeded spectral atoms") {
    for (uint64_t seed = 1; seed <= 30; ++seed) {
        auto atoms = pdgen::random_bochner_atoms(seed);
        REQUIRE(!atoms.lambdas.empty());
        CHECK(atoms.lambdas.size() <= 4);
        for (double l : atoms.lambdas) {
            CHECK(l >= 0.0);
            CHECK(l < 8.0);
        }
        for (double w : atoms.weights) CHECK(w > 0.0);
        auto again = pdgen::random_bochner_atoms(seed);
        CHECK(atoms.lambdas == again.lambdas);
        CHECK(atoms.weights == again.weights);
        // the combination itself evaluates and peaks at the origin
        auto f = pdgen::bochner_motion(atoms, 32.0);
        CHECK(std::abs(f(5.0)) <= f(0.0) + 1e-12);
    }
}
