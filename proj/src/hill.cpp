// hill.cpp — monodromy of the Hill equation: exact segment propagators for
// piecewise-constant potentials, adaptive Runge–Kutta for smooth ones, both
// with the variational λ-derivative carried alongside.

#include "hj/hill.hpp"

#include <gsl/gsl_errno.h>
#include <gsl/gsl_odeiv2.h>

#include <algorithm>
#include <array>
#include <cmath>
#include <mutex>

namespace hj {

namespace {

// ---------------------------------------------------------------------------
// exact propagator for one constant segment
// ---------------------------------------------------------------------------
//
// On a segment of length h with constant potential v, write w = λ - v.  The
// transfer matrix in the (y, y') basis is
//     P = [[ C,  S ],
//          [ w S', C ]]          with  C = cos(√w h), S = sin(√w h)/√w
// for w > 0 (S' = -S up to the sign folded below), and the hyperbolic analog
// for w < 0.  Both branches are entire in w; near w = 0 we evaluate C and S
// by their power series to avoid cancellation.  The w-derivatives dC/dw and
// dS/dw (needed for the λ-derivative flow) are likewise entire:
//     dC/dw = -h S / 2,
//     dS/dw = (h C - S) / (2 w)   (series for small |w| h²).

struct segment_matrix {
    // P = [[c, s], [sp, c]] with sp = -w s (trig) / +|w| s (hyperbolic),
    // plus entrywise d/dλ (= d/dw, since w = λ - v).
    double c, s, sp;
    double dc, ds, dsp;
};

segment_matrix segment_propagator(double w, double h) {
    segment_matrix m;
    const double z = w * h * h;  // dimensionless branch discriminant
    if (std::fabs(z) < 1e-6) {
        // Series in z: C = 1 - z/2 + z²/24 - z³/720, S = h(1 - z/6 + z²/120 - z³/5040).
        const double z2 = z * z, z3 = z2 * z;
        m.c = 1.0 - z / 2.0 + z2 / 24.0 - z3 / 720.0;
        m.s = h * (1.0 - z / 6.0 + z2 / 120.0 - z3 / 5040.0);
        // dC/dw = h²·dC/dz, dS/dw = h³·dS/dz/h = h³·(-1/6 + z/60 - z²/1680).
        m.dc = h * h * (-0.5 + z / 12.0 - z2 / 240.0);
        m.ds = h * h * h * (-1.0 / 6.0 + z / 60.0 - z2 / 1680.0);
    } else if (w > 0) {
        const double r = std::sqrt(w), rh = r * h;
        m.c = std::cos(rh);
        m.s = std::sin(rh) / r;
        m.dc = -0.5 * h * m.s;
        m.ds = (h * m.c - m.s) / (2.0 * w);
    } else {
        const double r = std::sqrt(-w), rh = r * h;
        m.c = std::cosh(rh);
        m.s = std::sinh(rh) / r;
        m.dc = -0.5 * h * m.s;
        m.ds = (h * m.c - m.s) / (2.0 * w);
    }
    // Lower-left entry: y'' = -w y  ⇒  P₂₁ = -w S; and d(-wS)/dw = -S - w dS/dw.
    m.sp = -w * m.s;
    m.dsp = -m.s - w * m.ds;
    return m;
}

// Accumulate M ← P·M and dM ← dP·M + P·dM  (block lower-triangular product,
// so the λ-derivative of an N-segment product costs O(N)).
struct flow_state {
    // Columns: (θ, θ') and (φ, φ'), plus λ-derivative columns.
    double th, thx, ph, phx;
    double dth, dthx, dph, dphx;

    void init() {
        th = 1.0; thx = 0.0; ph = 0.0; phx = 1.0;
        dth = dthx = dph = dphx = 0.0;
    }
    void apply(const segment_matrix& m) {
        auto mul = [&](double& y, double& yx, double& dy, double& dyx) {
            const double ny = m.c * y + m.s * yx;
            const double nyx = m.sp * y + m.c * yx;
            const double ndy = m.dc * y + m.ds * yx + m.c * dy + m.s * dyx;
            const double ndyx = m.dsp * y + m.dc * yx + m.sp * dy + m.c * dyx;
            y = ny; yx = nyx; dy = ndy; dyx = ndyx;
        };
        mul(th, thx, dth, dthx);
        mul(ph, phx, dph, dphx);
    }
};

// Propagate the piecewise-constant flow from 0 to x_end (≤ period) for the
// shifted potential p(· + t).
flow_state piecewise_flow(const potential& p, double lambda, double t, double x_end) {
    std::vector<double> breaks, vals;
    p.shifted(t).segments(breaks, vals);
    flow_state f;
    f.init();
    double x = 0.0;
    for (std::size_t i = 0; i < breaks.size() && x < x_end; ++i) {
        const double lo = breaks[i];
        const double hi = (i + 1 < breaks.size()) ? breaks[i + 1] : p.period();
        if (hi <= x) continue;
        const double h = std::min(hi, x_end) - std::max(lo, x);
        if (h <= 0) continue;
        f.apply(segment_propagator(lambda - vals[i], h));
        x += h;
    }
    return f;
}

// ---------------------------------------------------------------------------
// smooth potentials: adaptive RK on the augmented 8-dimensional system
// ---------------------------------------------------------------------------
//
//   y0..y3:  θ, θ', φ, φ'
//   y4..y7:  ∂λθ, ∂λθ', ∂λφ, ∂λφ'   with   u'' = (p-λ)u - y  (zero initial data)

struct ode_params {
    const potential* p;
    double lambda;
    double t;
};

int rhs(double x, const double y[], double dy[], void* params) {
    const ode_params* q = static_cast<const ode_params*>(params);
    const double v = (*q->p)(x + q->t) - q->lambda;
    dy[0] = y[1];
    dy[1] = v * y[0];
    dy[2] = y[3];
    dy[3] = v * y[2];
    dy[4] = y[5];
    dy[5] = v * y[4] - y[0];
    dy[6] = y[7];
    dy[7] = v * y[6] - y[2];
    return GSL_SUCCESS;
}

std::once_flag gsl_handler_once;

void integrate_smooth(const potential& p, double lambda, double t, double x_end,
                      double y[8]) {
    std::call_once(gsl_handler_once, [] { gsl_set_error_handler_off(); });
    ode_params q{&p, lambda, t};
    gsl_odeiv2_system sys{rhs, nullptr, 8, &q};
    // Relative tolerance 1e-11 per period: band-edge and effective-mass data
    // need ~1e-9 absolute accuracy in the discriminant.
    gsl_odeiv2_driver* drv = gsl_odeiv2_driver_alloc_y_new(
        &sys, gsl_odeiv2_step_rk8pd, 1e-4, 1e-14, 1e-11);
    if (!drv) fail(status::internal, "hill: integrator allocation failed");
    y[0] = 1.0; y[1] = 0.0; y[2] = 0.0; y[3] = 1.0;
    y[4] = y[5] = y[6] = y[7] = 0.0;
    double x = 0.0;
    int rc = gsl_odeiv2_driver_apply(drv, &x, x_end, y);
    gsl_odeiv2_driver_free(drv);
    if (rc != GSL_SUCCESS)
        fail(status::numeric,
             strfmt("hill: integrator failed at lambda=%.6g, t=%.6g (gsl: %s), "
                    "reached x=%.6g of %.6g",
                    lambda, t, gsl_strerror(rc), x, x_end));
    for (int i = 0; i < 8; ++i)
        if (!std::isfinite(y[i]))
            fail(status::numeric,
                 strfmt("hill: non-finite solution entry at lambda=%.6g, t=%.6g",
                        lambda, t));
}

}  // namespace

// ---------------------------------------------------------------------------
// public entry points
// ---------------------------------------------------------------------------

monodromy_data monodromy(const potential& p, double lambda, double t) {
    if (!std::isfinite(lambda) || !std::isfinite(t))
        fail(status::invalid_argument, "monodromy: lambda and t must be finite");
    monodromy_data md;
    md.lambda = lambda;
    md.t = t;
    if (!p.needs_integrator()) {
        flow_state f = piecewise_flow(p, lambda, t, p.period());
        md.theta1 = f.th;  md.theta1_x = f.thx;
        md.phi1 = f.ph;    md.phi1_x = f.phx;
        md.d_theta1 = f.dth;  md.d_theta1_x = f.dthx;
        md.d_phi1 = f.dph;    md.d_phi1_x = f.dphx;
    } else {
        double y[8];
        integrate_smooth(p, lambda, t, p.period(), y);
        md.theta1 = y[0];  md.theta1_x = y[1];
        md.phi1 = y[2];    md.phi1_x = y[3];
        md.d_theta1 = y[4];  md.d_theta1_x = y[5];
        md.d_phi1 = y[6];    md.d_phi1_x = y[7];
    }
    return md;
}

solution_sample solution_at(const potential& p, double lambda, double t, double x) {
    if (!std::isfinite(lambda) || !std::isfinite(t) || !std::isfinite(x))
        fail(status::invalid_argument, "solution_at: arguments must be finite");
    if (x < 0.0 || x > p.period())
        fail(status::domain,
             strfmt("solution_at: x=%.6g outside [0, period=%.6g]; compose with "
                    "monodromy powers for longer spans", x, p.period()));
    solution_sample out;
    out.x = x;
    if (x == 0.0) return out;
    if (!p.needs_integrator()) {
        flow_state f = piecewise_flow(p, lambda, t, x);
        out.theta = f.th;  out.theta_x = f.thx;
        out.phi = f.ph;    out.phi_x = f.phx;
    } else {
        double y[8];
        integrate_smooth(p, lambda, t, x, y);
        out.theta = y[0];  out.theta_x = y[1];
        out.phi = y[2];    out.phi_x = y[3];
    }
    return out;
}

std::vector<solution_sample> solution_grid(const potential& p, double lambda,
                                           double t, int n_points) {
    if (n_points < 2)
        fail(status::invalid_argument, "solution_grid: need at least 2 points");
    const double tau = p.period();
    std::vector<solution_sample> out(static_cast<std::size_t>(n_points));
    auto fill = [&](std::size_t k, double x, const double y[4]) {
        out[k].x = x;
        out[k].theta = y[0];
        out[k].theta_x = y[1];
        out[k].phi = y[2];
        out[k].phi_x = y[3];
    };
    if (!p.needs_integrator()) {
        for (int k = 0; k < n_points; ++k) {
            double x = tau * k / (n_points - 1);
            flow_state f = piecewise_flow(p, lambda, t, x);
            double y[4] = {f.th, f.thx, f.ph, f.phx};
            fill(static_cast<std::size_t>(k), x, y);
        }
        return out;
    }
    std::call_once(gsl_handler_once, [] { gsl_set_error_handler_off(); });
    ode_params q{&p, lambda, t};
    gsl_odeiv2_system sys{rhs, nullptr, 8, &q};
    gsl_odeiv2_driver* drv = gsl_odeiv2_driver_alloc_y_new(
        &sys, gsl_odeiv2_step_rk8pd, 1e-4, 1e-14, 1e-11);
    if (!drv) fail(status::internal, "hill: integrator allocation failed");
    double y[8] = {1, 0, 0, 1, 0, 0, 0, 0};
    double x = 0.0;
    fill(0, 0.0, y);
    for (int k = 1; k < n_points; ++k) {
        double xk = tau * k / (n_points - 1);
        int rc = gsl_odeiv2_driver_apply(drv, &x, xk, y);
        if (rc != GSL_SUCCESS) {
            gsl_odeiv2_driver_free(drv);
            fail(status::numeric,
                 strfmt("hill: grid integration failed at lambda=%.6g (gsl: %s)",
                        lambda, gsl_strerror(rc)));
        }
        fill(static_cast<std::size_t>(k), xk, y);
    }
    gsl_odeiv2_driver_free(drv);
    return out;
}

lyapunov_data lyapunov(const potential& p, double lambda, double t) {
    monodromy_data md = monodromy(p, lambda, t);
    lyapunov_data ld;
    ld.delta = 0.5 * (md.phi1_x + md.theta1);
    ld.delta_prime = 0.5 * (md.d_phi1_x + md.d_theta1);
    ld.a = 0.5 * (md.phi1_x - md.theta1);
    ld.a_prime = 0.5 * (md.d_phi1_x - md.d_theta1);
    return ld;
}

}  // namespace hj
