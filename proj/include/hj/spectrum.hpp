// spectrum.hpp — band/gap structure of the periodic operator -d²/dx² + p.
//
// The spectrum is ∪ₙ [α⁺_{n-1}, α⁻_n] with Δ(α_n±) = (-1)ⁿ; the n-th gap is
// γ_n = (α_n⁻, α_n⁺) and γ₀ = (-∞, α₀⁺).  Each closed gap [α_n⁻, α_n⁺] traps
// exactly one Dirichlet point μ_n (zero of φ(1,·,t)) and one Neumann point
// ν_n (zero of θ'(1,·,t)); ν₀ sits below α₀⁺.  Open-gap edges carry effective
// masses M_n± = -Δ(α_n±)Δ'(α_n±) with ±M_n± > 0, and real periodic (n even)
// or antiperiodic (n odd) edge eigenfunctions Ψ(·, α_n±), normalized to
// ∫₀¹ Ψ² = 1.

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hj/hill.hpp"
#include "hj/potential.hpp"

namespace hj {

struct gap_info {
    int n = 0;                 // gap index (1-based; the semi-infinite gap is
                               // carried separately as alpha0/nu0/mass0_plus)
    double alpha_minus = 0.0;  // lower edge α_n⁻
    double alpha_plus = 0.0;   // upper edge α_n⁺
    bool closed = false;       // width below gap_tol: edges coincide
    double mu = 0.0;           // Dirichlet point μ_n(t) ∈ [α_n⁻, α_n⁺]
    double nu = 0.0;           // Neumann point ν_n(t) ∈ [α_n⁻, α_n⁺]
    double mass_minus = 0.0;   // M_n⁻ < 0 (NaN when closed)
    double mass_plus = 0.0;    // M_n⁺ > 0 (NaN when closed)

    double width() const { return alpha_plus - alpha_minus; }
    bool open() const { return !closed; }
};

struct band_structure {
    double t = 0.0;          // shift at which μ/ν were computed (edges are
                             // shift-independent)
    double alpha0 = 0.0;     // α₀⁺: bottom of the spectrum
    double nu0 = 0.0;        // ν₀ ≤ α₀⁺
    double mass0_plus = 0.0; // effective mass at α₀⁺ (always > 0)
    std::vector<gap_info> gaps;  // gaps 1..n_max in order
    int n_max = 0;
    double lambda_max = 0.0;  // scan ceiling actually used
    bool complete = true;     // false if the ceiling cut the scan short
    std::vector<std::string> warnings;

    const gap_info& gap(int n) const;  // 1-based accessor with range check
};

// Scan the discriminant and assemble the full band picture.
//   n_max      number of gaps requested (≥ 0)
//   lambda_max optional scan ceiling; default (π(n_max+2)/τ)² + max|p|
//   tol        root tolerance for edge refinement (|Δ∓1| target 1e-11 is
//              always enforced on top of it)
// Gap clusters narrower than gap_tol = 1e-9 are reported closed, centred.
band_structure compute_bands(const potential& p, int n_max,
                             std::optional<double> lambda_max, double tol,
                             double t = 0.0);

// Dirichlet/Neumann points of the shifted potential p(·+t) inside each gap
// closure of a previously computed band structure (plus ν₀(t) below α₀⁺).
struct dirichlet_neumann_points {
    double nu0;
    std::vector<double> mu;  // per gap 1..n_max
    std::vector<double> nu;
};
dirichlet_neumann_points dirichlet_neumann(const potential& p,
                                           const band_structure& bands,
                                           double t);

// Branch of b(λ) = (-1)ⁿ √(Δ² - 1) on the closure of gap n: positive on
// even-index gaps (including γ₀, n = 0), negative on odd ones.  λ must lie
// in a gap closure; a point strictly inside a band is a domain error.
// Returns b and the gap index through *gap_out when non-null.
double gap_branch_b(const potential& p, const band_structure& bands,
                    double lambda, int* gap_out = nullptr);

// Real normalized edge eigenfunction Ψ(·, α) at an open-gap edge: periodic
// for even n, antiperiodic for odd n, ∫₀^τ Ψ² = 1.  Carries exact evaluation
// (monodromy eigenvector) plus a uniform sample grid for quadratures.
struct edge_eigenfunction {
    int n = 0;            // gap index (0 = bottom edge α₀⁺)
    bool upper = false;   // true: α_n⁺, false: α_n⁻ (n = 0 is always upper)
    double alpha = 0.0;   // edge energy
    int parity = +1;      // +1 periodic, -1 antiperiodic
    double v_theta = 0.0, v_phi = 0.0;  // Ψ = v_theta·θ + v_phi·φ  (normalized)
    std::vector<double> values;  // Ψ on 2049 uniform points over [0, τ]
    std::vector<double> derivs;  // Ψ' on the same grid

    // Exact Ψ(x), Ψ'(x) for any real x (periodicity applied).
    void eval(const potential& p, double x, double* psi, double* psi_x) const;
};
edge_eigenfunction edge_eigenfunction_at(const potential& p,
                                         const band_structure& bands, int n,
                                         bool upper);

// Relative truncation residual of the Dirichlet product representation
//   φ(1,λ,t) ≈ Π_{n≤N} (μ_n(t) - λ)/(πn)²  ×  (analytic free tail),
// with the tail folded in through sin√z/√z at z = λ - mean(p).
double trubowitz_residual(const potential& p, const band_structure& bands,
                          double lambda, double t, int N);

// Absolute residual of the N-term trace formula
//   p(t) = α₀⁺ + Σ_{n≤N} (α_n⁻ + α_n⁺ - 2 μ_n(t)).
double trace_formula_residual(const potential& p, const band_structure& bands,
                              double t, int N);

}  // namespace hj
