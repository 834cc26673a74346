// hill.hpp — fundamental solutions of the Hill equation
//
//     -y'' + p(x + t) y = λ y,        x ∈ [0, period],
//
// with the standard normalized pair θ, φ:
//     θ(0) = 1, θ'(0) = 0,   φ(0) = 0, φ'(0) = 1.
//
// monodromy() returns the period map entries and their λ-derivatives; the
// derivatives solve the variational equation y_λ'' = (p - λ) y_λ - y with
// zero initial data and are integrated alongside (never finite-differenced),
// which keeps them accurate at band edges where Δ'(λ) → 0 matters.
//
// Piecewise-constant potentials use exact per-segment propagators
// (trigonometric / hyperbolic / near-degenerate series); smooth potentials
// use an adaptive high-order embedded Runge–Kutta step from GSL.

#pragma once

#include "hj/potential.hpp"

namespace hj {

struct monodromy_data {
    double lambda = 0.0;
    double t = 0.0;
    // Values at x = period.
    double theta1 = 1.0;
    double theta1_x = 0.0;
    double phi1 = 0.0;
    double phi1_x = 1.0;
    // λ-derivatives of the four entries above.
    double d_theta1 = 0.0;
    double d_theta1_x = 0.0;
    double d_phi1 = 0.0;
    double d_phi1_x = 0.0;

    // θ(1)φ'(1) − θ'(1)φ(1) − 1; identically 0 for the exact flow.
    double wronskian_defect() const {
        return theta1 * phi1_x - theta1_x * phi1 - 1.0;
    }
};

struct solution_sample {
    double x = 0.0;
    double theta = 1.0;
    double theta_x = 0.0;
    double phi = 0.0;
    double phi_x = 1.0;
    double wronskian_defect() const { return theta * phi_x - theta_x * phi - 1.0; }
};

struct lyapunov_data {
    double delta = 0.0;        // Δ(λ) = (φ'(1) + θ(1)) / 2
    double delta_prime = 0.0;  // dΔ/dλ
    double a = 0.0;            // a(λ,t) = (φ'(1) − θ(1)) / 2
    double a_prime = 0.0;      // da/dλ
};

// Period map of -y'' + p(x+t) y = λ y with λ-derivatives.
monodromy_data monodromy(const potential& p, double lambda, double t);

// Solution values at interior x ∈ [0, period].
solution_sample solution_at(const potential& p, double lambda, double t, double x);

// Discriminant Δ, its λ-derivative, and the antisymmetric entry a(λ,t).
lyapunov_data lyapunov(const potential& p, double lambda, double t);

// Solution values on n_points uniform abscissae spanning [0, period]
// (endpoints included).  One integrator pass with forced stops for smooth
// potentials, so it is much cheaper than n_points calls to solution_at.
std::vector<solution_sample> solution_grid(const potential& p, double lambda,
                                           double t, int n_points);

}  // namespace hj
