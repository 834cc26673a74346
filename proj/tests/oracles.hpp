// oracles.hpp — independent reference computations for the test suites.
//
// Everything here is deliberately built on different numerics than the
// library: closed-form transfer matrices for piecewise-constant potentials,
// dense symmetric eigensolvers (Eigen) for trigonometric ones, and a
// renormalized shooting/oscillation counter on a large Dirichlet box.  No
// hj/ solver code is reused beyond the potential callable itself.

#pragma once

#include <functional>
#include <utility>
#include <vector>

namespace oracle {

// ---------------------------------------------------------------- exact 2x2

// Fundamental solutions of -y'' + v y = lambda y across one constant piece
// of width w: column-major [theta, theta_x; phi, phi_x] update.
struct mat2 {
    double a = 1.0, b = 0.0;  // [ a  b ]   y(x1)   = a y(x0) + b y'(x0)
    double c = 0.0, d = 1.0;  // [ c  d ]   y'(x1)  = c y(x0) + d y'(x0)
};

mat2 piece_step(double v, double lambda, double w);
mat2 mul(const mat2& second, const mat2& first);

struct mono {
    double theta1 = 1.0, theta1_x = 0.0;
    double phi1 = 0.0, phi1_x = 1.0;
    double delta() const { return 0.5 * (theta1 + phi1_x); }
};

// Constant potential, closed form over one unit period.
mono const_monodromy(double c, double lambda);
double const_delta(double c, double lambda);
double const_delta_dlambda(double c, double lambda);
// Weyl functions for lambda strictly below c.
double const_m_plus(double c, double lambda);
double const_m_minus(double c, double lambda);

// Piecewise-constant potential of unit period: exact monodromy of the
// shifted potential p(. + t).  breaks must start at 0 and stay below 1.
mono pw_monodromy(const std::vector<double>& breaks,
                  const std::vector<double>& vals, double lambda, double t);
double pw_delta(const std::vector<double>& breaks,
                const std::vector<double>& vals, double lambda);

// --------------------------------------------------- trigonometric (Eigen)

// p(x) = mean + sum_m amp[m] * cos(2 pi m x)  (even trigonometric polynomial;
// amp is 1-based: amp[0] multiplies cos 2 pi x).

// Sorted lowest eigenvalues of the periodic (antiperiodic = true flips the
// boundary condition) problem over one period; plane-wave truncation K.
std::vector<double> trig_bloch_eigs(double mean, const std::vector<double>& amp,
                                    bool antiperiodic, int K, int count);

// Sorted lowest Dirichlet (sine basis) / Neumann (cosine basis) eigenvalues
// of p(. + t) on [0, 1]; truncation K basis functions.
std::vector<double> trig_dirichlet_eigs(double mean, const std::vector<double>& amp,
                                        double t, int K, int count);
std::vector<double> trig_neumann_eigs(double mean, const std::vector<double>& amp,
                                      double t, int K, int count);

// -------------------------------------------------------- shooting oracle

// Dirichlet box [-L, L] for the interface operator
//     q(x) = left(x)        for x < 0
//     q(x) = right(x + t)   for x >= 0
// discretized into cells that are exact for piecewise-constant sides and
// Simpson-averaged for smooth ones.  Eigenvalues of the box converge to the
// interface operator's bound states exponentially fast in L.
class box_oracle {
  public:
    // cell boundaries xs[0] = -L .. xs.back() = L, vs[i] on (xs[i], xs[i+1])
    std::vector<double> xs;
    std::vector<double> vs;

    // number of Dirichlet eigenvalues strictly below E (oscillation count)
    int count_below(double E) const;
    // k-th eigenvalue (0-based), bracketed by count_below and bisected
    double eigenvalue(int k, double lo, double hi) const;
    // all eigenvalues in (lo, hi), each refined to ~1e-12 (1 + |E|)
    std::vector<double> eigs_in(double lo, double hi) const;
};

// Assemble the box from two potential callables of unit period.  Pass the
// exact piece grid for a piecewise side via left_breaks/left_vals (empty =>
// sample the callable); cells_per_unit controls the sampled resolution.
box_oracle make_box(const std::function<double(double)>& left,
                    const std::vector<double>& left_breaks,
                    const std::vector<double>& left_vals,
                    const std::function<double(double)>& right,
                    const std::vector<double>& right_breaks,
                    const std::vector<double>& right_vals, double t, double L,
                    int cells_per_unit);

// ------------------------------------------------------------------- misc

// Least-squares slope of log|err| against log t (only finite, nonzero errs).
double loglog_slope(const std::vector<double>& t, const std::vector<double>& err);

}  // namespace oracle
