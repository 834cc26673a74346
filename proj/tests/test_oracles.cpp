// test_oracles.cpp — internal consistency of the reference oracles.
//
// The oracles must stand on their own: closed forms against each other,
// dense eigensolvers against free-problem formulas, and the shooting box
// against exactly solvable cases.  Nothing here touches the library.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>
#include <vector>

#include "doctest.h"
#include "oracles.hpp"

using namespace oracle;

TEST_CASE("constant monodromy equals one-piece product") {
    for (double c : {0.0, 5.0, -3.0}) {
        for (double lam : {-8.0, 0.5, 4.9, 5.1, 40.0, 199.0}) {
            const mono a = const_monodromy(c, lam);
            const mono b = pw_monodromy({0.0}, {c}, lam, 0.37);
            CHECK(a.theta1 == doctest::Approx(b.theta1).epsilon(1e-12));
            CHECK(a.phi1 == doctest::Approx(b.phi1).epsilon(1e-12));
            CHECK(a.theta1_x == doctest::Approx(b.theta1_x).epsilon(1e-12));
            CHECK(a.phi1_x == doctest::Approx(b.phi1_x).epsilon(1e-12));
            CHECK(a.delta() == doctest::Approx(const_delta(c, lam)).epsilon(1e-13));
        }
    }
}

TEST_CASE("constant discriminant derivative matches finite differences") {
    for (double c : {0.0, 5.0}) {
        for (double lam : {-4.0, 1.3, 17.0, 90.0}) {
            const double h = 1e-5;
            const double fd =
                (const_delta(c, lam + h) - const_delta(c, lam - h)) / (2 * h);
            CHECK(const_delta_dlambda(c, lam) ==
                  doctest::Approx(fd).epsilon(1e-8));
        }
    }
}

TEST_CASE("two-piece discriminant against the textbook formula") {
    // bump of height V on [0, w]: Delta = cos k2(1-w) cosh k1 w
    //   + ((k1^2 - k2^2) / (2 k1 k2)) sinh(k1 w) sin(k2 (1-w)) for lambda < V
    const double V = 30.0, w = 0.5;
    for (double lam : {3.0, 11.0, 22.0, 29.0}) {
        const double k1 = std::sqrt(V - lam), k2 = std::sqrt(lam);
        const double direct =
            std::cos(k2 * (1 - w)) * std::cosh(k1 * w) +
            (k1 * k1 - k2 * k2) / (2 * k1 * k2) * std::sinh(k1 * w) *
                std::sin(k2 * (1 - w));
        CHECK(pw_delta({0.0, w}, {V, 0.0}, lam) ==
              doctest::Approx(direct).epsilon(1e-12));
    }
}

TEST_CASE("discriminant is invariant under the shift") {
    const std::vector<double> br = {0.0, 0.25, 0.75};
    const std::vector<double> vl = {0.0, 30.0, 0.0};
    for (double lam : {-2.0, 20.0, 55.0, 140.0}) {
        const double d0 = pw_monodromy(br, vl, lam, 0.0).delta();
        for (double t : {0.1, 0.25, 0.5, 0.93})
            CHECK(pw_monodromy(br, vl, lam, t).delta() ==
                  doctest::Approx(d0).epsilon(1e-12));
    }
}

TEST_CASE("free Bloch eigenvalues from the plane-wave matrix") {
    const auto per = trig_bloch_eigs(0.0, {}, false, 12, 5);
    const double pi2 = 4.0 * M_PI * M_PI;
    CHECK(per[0] == doctest::Approx(0.0).epsilon(1e-12));
    CHECK(per[1] == doctest::Approx(pi2).epsilon(1e-12));
    CHECK(per[2] == doctest::Approx(pi2).epsilon(1e-12));
    CHECK(per[3] == doctest::Approx(4 * pi2).epsilon(1e-12));
    const auto anti = trig_bloch_eigs(0.0, {}, true, 12, 4);
    CHECK(anti[0] == doctest::Approx(M_PI * M_PI).epsilon(1e-12));
    CHECK(anti[1] == doctest::Approx(M_PI * M_PI).epsilon(1e-12));
    CHECK(anti[2] == doctest::Approx(9 * M_PI * M_PI).epsilon(1e-12));
}

TEST_CASE("free Dirichlet and Neumann eigenvalues from the basis matrices") {
    const auto mu = trig_dirichlet_eigs(0.0, {}, 0.63, 40, 4);
    for (int j = 1; j <= 4; ++j)
        CHECK(mu[j - 1] == doctest::Approx(M_PI * M_PI * j * j).epsilon(1e-12));
    const auto nu = trig_neumann_eigs(0.0, {}, 0.63, 40, 4);
    CHECK(nu[0] == doctest::Approx(0.0).epsilon(1e-12));
    for (int j = 1; j <= 3; ++j)
        CHECK(nu[j] == doctest::Approx(M_PI * M_PI * j * j).epsilon(1e-12));
}

TEST_CASE("constant-plus-cosine matrices reduce to shifted free ones") {
    // amp = {} with mean c shifts every eigenvalue by c exactly
    const double c = 7.25;
    const auto mu = trig_dirichlet_eigs(c, {}, 0.2, 30, 3);
    for (int j = 1; j <= 3; ++j)
        CHECK(mu[j - 1] ==
              doctest::Approx(M_PI * M_PI * j * j + c).epsilon(1e-12));
}

TEST_CASE("shooting box on the free potential") {
    auto zero = [](double) { return 0.0; };
    const double L = 6.0;
    const box_oracle box =
        make_box(zero, {0.0}, {0.0}, zero, {0.0}, {0.0}, 0.0, L, 64);
    // Dirichlet eigenvalues (pi k / 2L)^2, k = 1, 2, ...
    for (int k = 1; k <= 5; ++k) {
        const double exact = std::pow(M_PI * k / (2 * L), 2);
        const double got = box.eigenvalue(k - 1, -1.0, 10.0);
        CHECK(got == doctest::Approx(exact).epsilon(1e-10));
    }
    CHECK(box.count_below(std::pow(M_PI * 5.5 / (2 * L), 2)) == 5);
}

TEST_CASE("shooting box counts match for exact and sampled grids") {
    // same Kronig-Penney arrangement built two ways
    const std::vector<double> br = {0.0, 0.25, 0.75};
    const std::vector<double> vl = {0.0, 30.0, 0.0};
    auto pw = [&](double x) {
        double u = x - std::floor(x);
        return (u >= 0.25 && u < 0.75) ? 30.0 : 0.0;
    };
    const box_oracle exact = make_box(pw, br, vl, pw, br, vl, 0.3, 8.0, 0);
    const box_oracle fine = make_box(pw, {}, {}, pw, {}, {}, 0.3, 8.0, 4096);
    for (double E : {5.0, 14.5, 25.0, 33.0, 55.0, 80.0})
        CHECK(exact.count_below(E) == fine.count_below(E));
}

TEST_CASE("shooting box eigenvalue for the square well limit") {
    // deep-well sanity: left and right at V = 50, well of width 1 at 0 from
    // shifting the right side half a period -- ground state below 50 exists
    // and sits above the one-well variational bound.
    const std::vector<double> br = {0.0, 0.5};
    const std::vector<double> vl = {0.0, 50.0};
    auto pw = [&](double x) {
        double u = x - std::floor(x);
        return (u >= 0.5) ? 50.0 : 0.0;
    };
    const box_oracle box = make_box(pw, br, vl, pw, br, vl, 0.0, 10.0, 0);
    CHECK(box.count_below(0.0) == 0);
    CHECK(box.count_below(49.9) > 0);
}

TEST_CASE("log-log slope recovers power laws") {
    std::vector<double> t, e15, e2;
    for (double x = 1e-3; x <= 0.1; x *= 1.6) {
        t.push_back(x);
        e15.push_back(3.0 * std::pow(x, 1.5));
        e2.push_back(0.2 * x * x);
    }
    CHECK(loglog_slope(t, e15) == doctest::Approx(1.5).epsilon(1e-9));
    CHECK(loglog_slope(t, e2) == doctest::Approx(2.0).epsilon(1e-9));
}
