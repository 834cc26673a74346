// detail.hpp — internal numeric helpers shared by the library sources
// (not installed; tests use the public headers only).

#pragma once

#include <gsl/gsl_errno.h>
#include <gsl/gsl_roots.h>

#include <algorithm>
#include <cmath>
#include <functional>
#include <utility>
#include <vector>

#include "hj/common.hpp"

namespace hj::detail {

// Brent root bracketing on [a, b] (f(a), f(b) of opposite sign) via GSL.
// Converges to |interval| <= xtol_abs + xtol_rel*|x|.  Throws on failure.
inline double brent_root(const std::function<double(double)>& f, double a,
                         double b, double fa, double fb,
                         double xtol_abs = 1e-13, double xtol_rel = 1e-13) {
    if (fa == 0.0) return a;
    if (fb == 0.0) return b;
    if ((fa > 0) == (fb > 0))
        fail(status::numeric,
             strfmt("brent_root: endpoints do not bracket (f(%.6g)=%.3g, "
                    "f(%.6g)=%.3g)", a, fa, b, fb));
    struct shim {
        const std::function<double(double)>* fn;
        static double call(double x, void* params) {
            return (*static_cast<shim*>(params)->fn)(x);
        }
    } s{&f};
    gsl_function gf{&shim::call, &s};
    gsl_root_fsolver* solver = gsl_root_fsolver_alloc(gsl_root_fsolver_brent);
    if (!solver) fail(status::internal, "brent_root: solver allocation failed");
    if (gsl_root_fsolver_set(solver, &gf, a, b) != GSL_SUCCESS) {
        gsl_root_fsolver_free(solver);
        fail(status::numeric, "brent_root: bracket rejected");
    }
    double root = 0.5 * (a + b);
    int rc = GSL_CONTINUE;
    for (int it = 0; it < 200 && rc == GSL_CONTINUE; ++it) {
        rc = gsl_root_fsolver_iterate(solver);
        if (rc != GSL_SUCCESS) break;
        root = gsl_root_fsolver_root(solver);
        double lo = gsl_root_fsolver_x_lower(solver);
        double hi = gsl_root_fsolver_x_upper(solver);
        rc = gsl_root_test_interval(lo, hi, xtol_abs, xtol_rel);
    }
    gsl_root_fsolver_free(solver);
    if (rc != GSL_SUCCESS)
        fail(status::numeric, "brent_root: no convergence in 200 iterations");
    return root;
}

// Same, but evaluates the endpoints itself.
inline double brent_root_at(const std::function<double(double)>& f, double a,
                            double b, double xtol_abs = 1e-13,
                            double xtol_rel = 1e-13) {
    return brent_root(f, a, b, f(a), f(b), xtol_abs, xtol_rel);
}

// Composite Simpson rule over pre-computed uniform samples (odd count).
inline double simpson(const std::vector<double>& y, double h) {
    if (y.size() < 3 || y.size() % 2 == 0)
        fail(status::invalid_argument, "simpson: need an odd sample count >= 3");
    double s = y.front() + y.back();
    for (std::size_t i = 1; i + 1 < y.size(); ++i) s += y[i] * ((i % 2) ? 4.0 : 2.0);
    return s * h / 3.0;
}

// Adaptive composite Simpson of f over [a, b] with fixed 2^k refinement:
// doubles the panel count until two successive estimates agree to rtol
// (or 4096 panels).  Integrands here are smooth or piecewise-smooth.
inline double integrate(const std::function<double(double)>& f, double a,
                        double b, double rtol = 1e-10) {
    if (a == b) return 0.0;
    int n = 16;
    auto comp = [&](int panels) {
        const double h = (b - a) / panels;
        double s = f(a) + f(b);
        for (int i = 1; i < panels; ++i) s += f(a + h * i) * ((i % 2) ? 4.0 : 2.0);
        return s * h / 3.0;
    };
    double prev = comp(n);
    for (n = 32; n <= 4096; n *= 2) {
        double cur = comp(n);
        if (std::fabs(cur - prev) <= rtol * (1.0 + std::fabs(cur))) return cur;
        prev = cur;
    }
    return prev;
}

// Result of a pole-aware bracketed root scan: simple sign-change roots plus
// "grazes" — local minima of |f| below graze_tol that do not change sign
// (tangential near-zeros a caller may report but must not count).
struct scan_result {
    std::vector<double> roots;
    std::vector<std::pair<double, double>> grazes;  // (x, |f| at minimum)
};

// Scan f over [a, b] excluding guard intervals around the listed poles.
// grid_total points are distributed over the pole-free subintervals in
// proportion to their length (at least 33 each).  Non-finite samples are
// skipped; roots are deduplicated to 1e-9 relative spacing.
inline scan_result scan_for_roots(const std::function<double(double)>& f,
                                  double a, double b,
                                  std::vector<double> poles, int grid_total,
                                  double graze_tol) {
    scan_result out;
    if (!(a < b)) return out;
    std::sort(poles.begin(), poles.end());
    std::vector<std::pair<double, double>> spans;
    double cursor = a;
    for (double c : poles) {
        const double guard = 1e-8 * (1.0 + std::fabs(c));
        if (c - guard > cursor) spans.push_back({cursor, c - guard});
        cursor = std::max(cursor, c + guard);
    }
    if (cursor < b) spans.push_back({cursor, b});
    double total = 0.0;
    for (const auto& sp : spans) total += sp.second - sp.first;
    if (total <= 0.0) return out;

    for (const auto& [sa, sb] : spans) {
        int m = static_cast<int>(grid_total * (sb - sa) / total);
        m = std::max(m, 33);
        const double h = (sb - sa) / (m - 1);
        std::vector<double> xs(m), ys(m);
        for (int i = 0; i < m; ++i) {
            xs[i] = sa + h * i;
            ys[i] = f(xs[i]);
        }
        for (int i = 0; i + 1 < m; ++i) {
            if (!std::isfinite(ys[i]) || !std::isfinite(ys[i + 1])) continue;
            if (ys[i] == 0.0) {
                out.roots.push_back(xs[i]);
                continue;
            }
            if (ys[i + 1] == 0.0) continue;  // handled as next left endpoint
            if (ys[i] * ys[i + 1] < 0.0)
                out.roots.push_back(
                    brent_root(f, xs[i], xs[i + 1], ys[i], ys[i + 1]));
        }
        if (std::isfinite(ys[m - 1]) && ys[m - 1] == 0.0)
            out.roots.push_back(xs[m - 1]);
        for (int i = 1; i + 1 < m; ++i) {
            if (!std::isfinite(ys[i - 1]) || !std::isfinite(ys[i]) ||
                !std::isfinite(ys[i + 1]))
                continue;
            if (ys[i - 1] * ys[i + 1] <= 0.0) continue;
            if (std::fabs(ys[i]) >= std::fabs(ys[i - 1]) ||
                std::fabs(ys[i]) >= std::fabs(ys[i + 1]))
                continue;
            double ta = xs[i - 1], tb = xs[i + 1];
            for (int it = 0; it < 60; ++it) {
                const double u = ta + (tb - ta) / 3.0;
                const double v = tb - (tb - ta) / 3.0;
                if (std::fabs(f(u)) <= std::fabs(f(v)))
                    tb = v;
                else
                    ta = u;
            }
            const double x0 = 0.5 * (ta + tb);
            const double r = std::fabs(f(x0));
            if (r < graze_tol) {
                bool near_root = false;
                for (double rt : out.roots)
                    if (std::fabs(rt - x0) < 2.0 * h) near_root = true;
                if (!near_root) out.grazes.push_back({x0, r});
            }
        }
    }
    std::sort(out.roots.begin(), out.roots.end());
    std::vector<double> dedup;
    for (double r : out.roots)
        if (dedup.empty() ||
            std::fabs(r - dedup.back()) > 1e-9 * (1.0 + std::fabs(r)))
            dedup.push_back(r);
    out.roots = std::move(dedup);
    std::sort(out.grazes.begin(), out.grazes.end());
    return out;
}

}  // namespace hj::detail
