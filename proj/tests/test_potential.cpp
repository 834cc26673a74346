// test_potential.cpp — the four potential representations, shifts, parity,
// and serialization round trips.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>
#include <vector>

#include "doctest.h"
#include "hj/common.hpp"
#include "hj/config.hpp"
#include "hj/potential.hpp"

using hj::potential;

TEST_CASE("constant potential") {
    const potential p = potential::make_constant(5.0);
    CHECK(p(0.0) == 5.0);
    CHECK(p(17.31) == 5.0);
    CHECK(p(-2.6) == 5.0);
    CHECK(p.period() == 1.0);
    CHECK(p.kind() == hj::potential_kind::constant);
    CHECK(p.is_even());
    CHECK(p.mean_value() == doctest::Approx(5.0));
    CHECK(p.min_value() == doctest::Approx(5.0));
    CHECK(p.max_value() == doctest::Approx(5.0));
    CHECK(!p.needs_integrator());
}

TEST_CASE("piecewise values, wrap, and exact periodicity") {
    const potential p =
        potential::make_piecewise({0.0, 0.25, 0.75}, {0.0, 30.0, 0.0});
    CHECK(p(0.1) == 0.0);
    CHECK(p(0.25) == 30.0);
    CHECK(p(0.5) == 30.0);
    CHECK(p(0.75) == 0.0);
    CHECK(p(0.9) == 0.0);
    for (double x : {0.01, 0.3, 0.62, 0.99}) {
        CHECK(p(x + 1.0) == p(x));
        CHECK(p(x - 5.0) == p(x));
    }
    CHECK(p.is_even());  // bump centred at 1/2
    CHECK(p.mean_value() == doctest::Approx(15.0));
    CHECK(p.min_value() == 0.0);
    CHECK(p.max_value() == 30.0);
}

TEST_CASE("piecewise constructor validation") {
    CHECK_THROWS_AS(potential::make_piecewise({0.1, 0.5}, {1.0, 2.0}),
                    hj::error);  // must start at 0
    CHECK_THROWS_AS(potential::make_piecewise({0.0, 0.5, 0.4}, {1.0, 2.0, 3.0}),
                    hj::error);  // not ascending
    CHECK_THROWS_AS(potential::make_piecewise({0.0, 1.0}, {1.0, 2.0}),
                    hj::error);  // breakpoint at period
    CHECK_THROWS_AS(potential::make_piecewise({0.0, 0.5}, {1.0}),
                    hj::error);  // size mismatch
}

TEST_CASE("fourier evaluation against the defining sum") {
    const potential p =
        potential::make_fourier(1.5, {{1, 2.0, 0.0}, {3, 0.0, -0.7}});
    for (double x : {0.0, 0.21, 0.73, -0.4, 5.37}) {
        const double direct = 1.5 + 2.0 * std::cos(2 * M_PI * x) -
                              0.7 * std::sin(6 * M_PI * x);
        CHECK(p(x) == doctest::Approx(direct).epsilon(1e-14));
    }
    CHECK(p.mean_value() == doctest::Approx(1.5));
    CHECK(!p.is_even());  // sine term breaks parity
    CHECK(potential::make_fourier(0.0, {{1, 2.0, 0.0}}).is_even());
    CHECK(p.needs_integrator());
}

TEST_CASE("samples interpolation hits the nodes and stays periodic") {
    std::vector<double> vals;
    for (int k = 0; k < 16; ++k)
        vals.push_back(std::sin(2 * M_PI * k / 16.0) + 0.3);
    const potential p = potential::make_samples(vals);
    for (int k = 0; k < 16; ++k)
        CHECK(p(k / 16.0) == doctest::Approx(vals[k]).epsilon(1e-12));
    for (double x : {0.03, 0.41, 0.88})
        CHECK(p(x + 3.0) == doctest::Approx(p(x)).epsilon(1e-12));
    CHECK_THROWS_AS(potential::make_samples({1.0, 2.0}), hj::error);  // N >= 4
}

TEST_CASE("shifts compose exactly and preserve structure") {
    const potential p =
        potential::make_piecewise({0.0, 0.25, 0.75}, {0.0, 30.0, 0.0});
    const potential q = p.shifted(0.37).shifted(-1.22);
    const potential r = p.shifted(-0.85);
    for (double x : {0.0, 0.13, 0.5, 0.74, 0.99})
        CHECK(q(x) == r(x));
    for (double x : {0.0, 0.2, 0.6})
        CHECK(p.shifted(0.4)(x) == p(x + 0.4));
    CHECK(q.period() == 1.0);
    CHECK(q.kind() == hj::potential_kind::piecewise);
}

TEST_CASE("segments of a shifted piecewise potential") {
    const potential p =
        potential::make_piecewise({0.0, 0.25, 0.75}, {0.0, 30.0, 0.0});
    std::vector<double> br, vl;
    p.shifted(0.25).segments(br, vl);
    REQUIRE(br.size() == vl.size());
    // shifted bump occupies [0, 0.5)
    for (std::size_t i = 0; i < br.size(); ++i) {
        const double mid =
            0.5 * (br[i] + (i + 1 < br.size() ? br[i + 1] : 1.0));
        CHECK(vl[i] == (mid < 0.5 ? 30.0 : 0.0));
    }
    std::vector<double> fb, fv;
    const potential four = potential::make_fourier(0.0, {{1, 1.0, 0.0}});
    CHECK_THROWS_AS(four.segments(fb, fv), hj::error);
}

TEST_CASE("non-unit periods") {
    const potential p = potential::make_constant(2.0, 0.5);
    CHECK(p.period() == 0.5);
    const potential f = potential::make_fourier(0.0, {{1, 1.0, 0.0}}, 2.0);
    CHECK(f(0.3) == doctest::Approx(std::cos(M_PI * 0.3)).epsilon(1e-14));
    CHECK(f(0.3 + 2.0) == doctest::Approx(f(0.3)).epsilon(1e-14));
}

TEST_CASE("serialize round-trips through the config parser") {
    const std::vector<potential> ps = {
        potential::make_constant(5.0),
        potential::make_piecewise({0.0, 0.25, 0.75}, {0.0, 30.0, 0.0}),
        potential::make_fourier(1.0, {{1, 2.0, 0.0}, {2, 0.0, 0.5}}),
    };
    for (const potential& p : ps) {
        const potential q = hj::parse_potential_text(p.serialize());
        CHECK(q.kind() == p.kind());
        CHECK(q.period() == doctest::Approx(p.period()).epsilon(1e-15));
        for (double x : {0.0, 0.11, 0.47, 0.93})
            CHECK(q(x) == doctest::Approx(p(x)).epsilon(1e-12));
    }
}

TEST_CASE("describe names the representation") {
    CHECK(potential::make_constant(5.0).describe().find("constant") !=
          std::string::npos);
    CHECK(potential::make_piecewise({0.0, 0.5}, {1.0, 0.0})
              .describe()
              .find("piecewise") != std::string::npos);
}
