// weyl.cpp — one-sided Weyl functions, ζ, and decaying Bloch solutions.

#include "hj/weyl.hpp"

#include <cmath>
#include <limits>

namespace hj {

namespace {

bool flip_for(side_t side, int sheet) {
    switch (sheet) {
        case 1: return false;
        case 2: return true;                       // both sides flipped
        case 3: return side == side_t::left;       // left side only
        case 4: return side == side_t::right;      // right side only
        default:
            fail(status::invalid_argument,
                 strfmt("weyl: sheet must be 1..4 (got %d)", sheet));
    }
}

}  // namespace

m_value weyl_m(const potential& p, const band_structure& bands, double lambda,
               double t, side_t side, int sheet) {
    int gap = 0;
    double b = gap_branch_b(p, bands, lambda, &gap);  // domain error in bands
    if (flip_for(side, sheet)) b = -b;

    monodromy_data md = monodromy(p, lambda, t);
    const double a = 0.5 * (md.phi1_x - md.theta1);

    m_value mv;
    mv.gap = gap;
    mv.phi1 = md.phi1;
    // Base superscript from the side: + decays rightward (numerator a - b),
    // − decays leftward (numerator a + b).
    mv.numerator = (side == side_t::right) ? (a - b) : (a + b);
    mv.pole = std::fabs(md.phi1) < pole_tol(lambda);
    mv.value = mv.pole ? std::numeric_limits<double>::infinity()
                       : mv.numerator / md.phi1;
    return mv;
}

m_value zeta(const potential& p, const band_structure& bands, double lambda,
             double t) {
    // ζ is defined wherever φ(1,λ,t) ≠ 0, on bands as well; no gap lookup.
    (void)bands;
    monodromy_data md = monodromy(p, lambda, t);
    const double a = 0.5 * (md.phi1_x - md.theta1);
    m_value mv;
    mv.gap = -1;
    mv.phi1 = md.phi1;
    mv.numerator = a;
    mv.pole = std::fabs(md.phi1) < pole_tol(lambda);
    mv.value = mv.pole ? std::numeric_limits<double>::infinity() : a / md.phi1;
    return mv;
}

bloch_value bloch_psi(const potential& p, const band_structure& bands,
                      double lambda, double t, side_t side, double x,
                      int sheet) {
    const double tau = p.period();
    if (std::fabs(x) > 8.0 * tau)
        fail(status::domain,
             strfmt("bloch_psi: |x|=%.6g beyond 8 periods; extend via the "
                    "Floquet multiplier explicitly", x));
    m_value m = weyl_m(p, bands, lambda, t, side, sheet);
    if (m.pole)
        fail(status::domain,
             strfmt("bloch_psi: lambda=%.9g is a Dirichlet point of this side "
                    "(phi(1)=%.3g); psi is not normalizable by theta + m phi",
                    lambda, m.phi1));

    // Reduce x = x_r + k·τ with x_r ∈ [0, τ); the Floquet multiplier of the
    // chosen solution is ρ = Δ - b_eff (right-decaying) or Δ + b_eff.
    double k = std::floor(x / tau);
    double xr = x - k * tau;
    if (xr >= tau) { xr -= tau; k += 1.0; }

    lyapunov_data l = lyapunov(p, lambda, t);
    double b = gap_branch_b(p, bands, lambda);
    if (flip_for(side, sheet)) b = -b;
    const double rho = (side == side_t::right) ? (l.delta - b) : (l.delta + b);

    solution_sample ss = solution_at(p, lambda, t, xr);
    bloch_value bv;
    double factor = 1.0;
    if (k != 0.0) {
        factor = std::pow(rho, k);
        if (!std::isfinite(factor) || factor == 0.0)
            fail(status::numeric,
                 strfmt("bloch_psi: Floquet factor rho^k overflowed (rho=%.6g, "
                        "k=%.0f)", rho, k));
    }
    bv.psi = factor * (ss.theta + m.value * ss.phi);
    bv.psi_x = factor * (ss.theta_x + m.value * ss.phi_x);
    return bv;
}

}  // namespace hj
