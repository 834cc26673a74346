// halfsolid.hpp — the half-solid operator T^s_t = −d²/dx² + q on the line,
// with q = s (a constant "solid" level) on x < 0 and the shifted periodic
// potential p(· + t) on x > 0.  The essential spectrum is [s,∞) ∪ σ(H_p);
// discrete states live in the truncated gaps γ_n ∩ (−∞, s) and are zeros of
// the interface Wronskians
//
//     w¹ = m⁺(λ,t) − √(s−λ),        w² = m⁻(λ,t) + √(s−λ),
//     w³ = m⁺(λ,t) + √(s−λ),        w⁴ = m⁻(λ,t) − √(s−λ),
//
// (sheet 1 physical: eigenvalues; 2,3,4: resonance sheets, flipping the
// periodic side, the solid side, or both).  The module also carries the
// seam-matching roots Ψ'(y,α) = √(s−α) Ψ(y,α) at a gap edge α < s, the
// small-t laws for the states these shed,
//
//     z(t) = √(2|M_n±|) ∫₀ᵗ L(y+τ, α_n±) dτ,   λ = α_n± ∓ z²
//
// (z > 0 eigenvalue, z < 0 sheet-4 resonance), the interior shedding points
// m⁺(s,y) = 0 with z(t) = ∫₀ᵗ [p(y+τ) − s] dτ and λ = s − z² (z < 0: sheet-3
// resonance), and the ground-state threshold: exactly one state below the
// whole spectrum iff m₀ = ζ(α₀⁺,t) > 0 and ν₀(t) < s < α₀⁺ + m₀².

#pragma once

#include "hj/dislocation.hpp"

namespace hj {

struct half_solid {
    potential p;           // periodic half, occupies x > 0 (shift per-op)
    double s = 0.0;        // solid level on x < 0
    band_structure bands;  // band/gap data of p at shift 0
    double tol = 1e-9;
};

// Validates and precomputes.  The level s must not coincide with a band edge
// or with ν₀ of the unshifted potential (degenerate thresholds): domain error.
half_solid make_half_solid(potential p, double s, int n_max,
                           std::optional<double> lambda_max, double tol);

// Interface Wronskian on sheet ∈ {1,2,3,4}; λ > s is a domain error.  At a
// Dirichlet pole of the periodic side the signed infinity is returned.
double hs_wronskian(const half_solid& hs, double lambda, double t, int sheet);

// Truncated gap components γ_n ∩ (−∞, s), lowest first; index 0 is the
// ground component (−∞, min(α₀⁺, s)), always present.
struct hs_component {
    double lo = 0.0;          // −∞ encoded by lo_infinite
    double hi = 0.0;
    int gap_index = 0;
    bool lo_infinite = false;
    bool hi_is_s = false;     // the component is cut off by the solid level
};
std::vector<hs_component> hs_components(const half_solid& hs);

// All Wronskian zeros of one sheet inside one component at shift t.
std::vector<gap_state> hs_find_states(const half_solid& hs, int comp_index,
                                      int sheet, double t,
                                      double root_tol = 1e-8);

// Per-component state counts on all four sheets at shift t (borderline roots
// are not counted).
struct hs_count_row {
    int comp_index = 0;
    int gap_index = 0;
    int n_sheet[4] = {0, 0, 0, 0};  // sheets 1..4
};
std::vector<hs_count_row> hs_counts(const half_solid& hs, double t);

// Seam-matching roots y ∈ [0,τ) at an open-gap edge α < s (gap_index 0
// refers to the edge α₀⁺ and requires upper = true): solutions of
// Ψ'(y,α) = √(s−α) Ψ(y,α).
std::vector<double> hs_matching_roots(const half_solid& hs, int gap_index,
                                      bool upper);

// Small-t law for the state shed at shift y + t from the edge where y is a
// seam-matching root; z > 0 eigenvalue, z < 0 sheet-4 resonance, λ = α ∓ z².
edge_prediction hs_edge_asymptote(const half_solid& hs, int gap_index,
                                  bool upper, double y, double t);

// Interior shedding points: roots y ∈ [0,τ) of m⁺(s,y) = 0 (s must lie in a
// gap closure of p).  Dirichlet-degenerate roots (φ(1,s,y) ≈ 0) are dropped.
std::vector<double> hs_interior_roots(const half_solid& hs);

// Small-t law for the state shed at shift y + t from λ = s where y is an
// interior shedding point; z > 0 eigenvalue, z < 0 sheet-3 resonance,
// λ = s − z².
edge_prediction hs_interior_asymptote(const half_solid& hs, double y,
                                      double t);

// Ground-state threshold data at shift t.
struct ground_threshold {
    double m0 = 0.0;      // ζ(α₀⁺, t)
    double s_star = 0.0;  // α₀⁺ + m₀²
    double nu0 = 0.0;     // ν₀(t)
    int predicted = 0;    // 1 iff m₀ > 0 and ν₀(t) < s < s*
};
ground_threshold hs_ground_threshold(const half_solid& hs, double t);

// Actual number of sheet-1 states in the ground component at shift t.
int hs_ground_count(const half_solid& hs, double t);

}  // namespace hj
