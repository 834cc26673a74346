// test_hill.cpp — period map against closed forms, exact transfer products,
// dense Bloch eigenvalues, and internal structure identities.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>
#include <random>
#include <vector>

#include "doctest.h"
#include "hj/hill.hpp"
#include "hj/potential.hpp"
#include "oracles.hpp"

using hj::lyapunov;
using hj::monodromy;
using hj::monodromy_data;
using hj::potential;

namespace {
const potential kKP =
    potential::make_piecewise({0.0, 0.25, 0.75}, {0.0, 30.0, 0.0});
const potential kCos2 = potential::make_fourier(0.0, {{1, 2.0, 0.0}});
const std::vector<double> kBr = {0.0, 0.25, 0.75};
const std::vector<double> kVl = {0.0, 30.0, 0.0};
}  // namespace

TEST_CASE("constant potential matches closed forms across the energy range") {
    for (double c : {0.0, 5.0}) {
        const potential p = potential::make_constant(c);
        for (double lam = -10.0; lam <= 200.0; lam += 7.3) {
            const oracle::mono ref = oracle::const_monodromy(c, lam);
            const monodromy_data md = monodromy(p, lam, 0.59);  // t immaterial
            CHECK(md.theta1 == doctest::Approx(ref.theta1).epsilon(1e-9));
            CHECK(md.theta1_x == doctest::Approx(ref.theta1_x).epsilon(1e-9));
            CHECK(md.phi1 == doctest::Approx(ref.phi1).epsilon(1e-9));
            CHECK(md.phi1_x == doctest::Approx(ref.phi1_x).epsilon(1e-9));
        }
    }
}

TEST_CASE("piecewise potential matches the exact transfer product") {
    for (double t : {0.0, 0.13, 0.25, 0.49, 0.77}) {
        for (double lam : {-6.0, 4.0, 17.9, 31.0, 55.5, 120.0, 199.0}) {
            const oracle::mono ref = oracle::pw_monodromy(kBr, kVl, lam, t);
            const monodromy_data md = monodromy(kKP, lam, t);
            const double scale =
                1.0 + std::abs(ref.theta1) + std::abs(ref.theta1_x) +
                std::abs(ref.phi1) + std::abs(ref.phi1_x);
            CHECK(std::abs(md.theta1 - ref.theta1) / scale < 1e-11);
            CHECK(std::abs(md.theta1_x - ref.theta1_x) / scale < 1e-11);
            CHECK(std::abs(md.phi1 - ref.phi1) / scale < 1e-11);
            CHECK(std::abs(md.phi1_x - ref.phi1_x) / scale < 1e-11);
        }
    }
}

TEST_CASE("cosine discriminant hits +-1 exactly at dense-matrix eigenvalues") {
    // Bloch eigenvalues from an independent plane-wave matrix: Delta = +1 on
    // the periodic spectrum, -1 on the antiperiodic one.
    const auto per = oracle::trig_bloch_eigs(0.0, {2.0}, false, 40, 5);
    for (double lam : per)
        CHECK(lyapunov(kCos2, lam, 0.0).delta ==
              doctest::Approx(1.0).epsilon(1e-8));
    const auto anti = oracle::trig_bloch_eigs(0.0, {2.0}, true, 40, 4);
    for (double lam : anti)
        CHECK(lyapunov(kCos2, lam, 0.0).delta ==
              doctest::Approx(-1.0).epsilon(1e-8));
}

TEST_CASE("unimodularity and shift invariance of the discriminant") {
    std::mt19937 rng(7);
    std::uniform_real_distribution<double> ul(-10.0, 200.0), ut(0.0, 1.0);
    for (const potential& p : {kKP, kCos2}) {
        for (int i = 0; i < 25; ++i) {
            const double lam = ul(rng), t = ut(rng);
            const monodromy_data md = monodromy(p, lam, t);
            CHECK(std::abs(md.wronskian_defect()) < 1e-9);
            const double d0 = lyapunov(p, lam, 0.0).delta;
            CHECK(lyapunov(p, lam, t).delta ==
                  doctest::Approx(d0).epsilon(1e-8));
        }
    }
}

TEST_CASE("quadratic identity ties a, Delta, and the off-diagonal product") {
    // a^2 + 1 - Delta^2 = -phi(1) theta_x(1) pointwise in (lambda, t)
    std::mt19937 rng(11);
    std::uniform_real_distribution<double> ul(-8.0, 150.0), ut(0.0, 1.0);
    for (const potential& p : {kKP, kCos2}) {
        for (int i = 0; i < 25; ++i) {
            const double lam = ul(rng), t = ut(rng);
            const monodromy_data md = monodromy(p, lam, t);
            const hj::lyapunov_data ld = lyapunov(p, lam, t);
            const double lhs = ld.a * ld.a + 1.0 - ld.delta * ld.delta;
            const double rhs = -md.phi1 * md.theta1_x;
            CHECK(lhs == doctest::Approx(rhs).epsilon(1e-8));
        }
    }
}

TEST_CASE("lambda derivatives agree with closed-form differences") {
    // central differences of the exact transfer product, h = 1e-5
    const double h = 1e-5;
    for (double t : {0.0, 0.3}) {
        for (double lam : {-4.0, 12.0, 40.0, 90.0}) {
            const monodromy_data md = monodromy(kKP, lam, t);
            const oracle::mono up = oracle::pw_monodromy(kBr, kVl, lam + h, t);
            const oracle::mono dn = oracle::pw_monodromy(kBr, kVl, lam - h, t);
            CHECK(md.d_theta1 ==
                  doctest::Approx((up.theta1 - dn.theta1) / (2 * h)).epsilon(1e-6));
            CHECK(md.d_phi1 ==
                  doctest::Approx((up.phi1 - dn.phi1) / (2 * h)).epsilon(1e-6));
            CHECK(md.d_theta1_x ==
                  doctest::Approx((up.theta1_x - dn.theta1_x) / (2 * h))
                      .epsilon(1e-6));
            CHECK(md.d_phi1_x ==
                  doctest::Approx((up.phi1_x - dn.phi1_x) / (2 * h)).epsilon(1e-6));
        }
    }
}

TEST_CASE("lyapunov data is consistent with the period map") {
    for (double lam : {-5.0, 8.0, 33.0, 77.0}) {
        const monodromy_data md = monodromy(kCos2, lam, 0.21);
        const hj::lyapunov_data ld = lyapunov(kCos2, lam, 0.21);
        CHECK(ld.delta ==
              doctest::Approx(0.5 * (md.theta1 + md.phi1_x)).epsilon(1e-12));
        CHECK(ld.a ==
              doctest::Approx(0.5 * (md.phi1_x - md.theta1)).epsilon(1e-12));
        CHECK(ld.delta_prime ==
              doctest::Approx(0.5 * (md.d_theta1 + md.d_phi1_x)).epsilon(1e-12));
        CHECK(ld.a_prime ==
              doctest::Approx(0.5 * (md.d_phi1_x - md.d_theta1)).epsilon(1e-12));
    }
}

TEST_CASE("interior solutions glue to the period map") {
    for (const potential& p : {kKP, kCos2}) {
        for (double lam : {3.0, 26.0}) {
            const hj::solution_sample end = hj::solution_at(p, lam, 0.4, 1.0);
            const monodromy_data md = monodromy(p, lam, 0.4);
            CHECK(end.theta == doctest::Approx(md.theta1).epsilon(1e-10));
            CHECK(end.phi == doctest::Approx(md.phi1).epsilon(1e-10));
            const hj::solution_sample mid = hj::solution_at(p, lam, 0.4, 0.63);
            CHECK(std::abs(mid.wronskian_defect()) < 1e-10);
        }
    }
}

TEST_CASE("solution grid equals pointwise evaluation") {
    const int n = 9;
    const auto grid = hj::solution_grid(kCos2, 14.0, 0.1, n);
    REQUIRE(static_cast<int>(grid.size()) == n);
    CHECK(grid.front().x == doctest::Approx(0.0));
    CHECK(grid.back().x == doctest::Approx(1.0));
    for (const auto& s : grid) {
        const hj::solution_sample direct =
            hj::solution_at(kCos2, 14.0, 0.1, s.x);
        CHECK(s.theta == doctest::Approx(direct.theta).epsilon(1e-9));
        CHECK(s.phi == doctest::Approx(direct.phi).epsilon(1e-9));
        CHECK(s.theta_x == doctest::Approx(direct.theta_x).epsilon(1e-9));
        CHECK(s.phi_x == doctest::Approx(direct.phi_x).epsilon(1e-9));
    }
}

TEST_CASE("large lambda keeps the free leading order") {
    // phi(1) ~ sin(sqrt(lambda))/sqrt(lambda) with O(1/lambda) envelope error
    for (double lam : {2000.0, 20000.0}) {
        const monodromy_data md = monodromy(kKP, lam, 0.0);
        const double k = std::sqrt(lam);
        CHECK(std::abs(md.phi1 - std::sin(k) / k) < 20.0 * 30.0 / lam);
    }
}
