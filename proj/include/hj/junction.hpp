// junction.hpp — interface operator built from two periodic half-line
// potentials:
//
//     T_t:  -y'' + q_t y,   q_t = χ₋ p₁ + χ₊ p₂(· + t),
//
// self-adjoint on the whole line.  Off the common spectrum its bound states
// are the zeros of the interface Wronskian
//
//     w(λ) = m₂⁺(λ, t) − m₁⁻(λ, 0)
//
// on sheet 1; sheets 2–4 of the energy surface flip the sign of the √(Δ²−1)
// branch on both/left/right sides, and their real zeros inside the gaps of
// T_t are the antibound/resonance states.  Gap components of T_t are the
// pairwise intersections of the one-sided gaps.  Eigenvalue counts per gap
// obey #(T_t, γ_n) ≤ 2, and for even sides at t = 0 the count is decided by
// the relative position of the one-sided Dirichlet/Neumann points.

#pragma once

#include "hj/weyl.hpp"

namespace hj {

struct junction {
    potential left;   // p₁ (occupies x < 0)
    potential right;  // p₂ (occupies x > 0, used at shift t)
    double t = 0.0;
    double tol = 1e-9;
    band_structure bands_left;   // μ/ν at shift 0
    band_structure bands_right;  // μ/ν at shift t
};

junction make_junction(const potential& left, const potential& right, double t,
                       int n_max, std::optional<double> lambda_max, double tol);

// The swapped operator: left and right exchanged (the shift is folded into
// the new left potential).  Sheet-2 zeros of the original are exactly the
// sheet-1 eigenvalues of the swap, with w(λ, sheet 2) = -w_swapped(λ, sheet 1).
junction swapped(const junction& j);

// One component of the gap set of T_t.
struct gap_interval {
    double lo = 0.0;          // -inf for the ground component
    double hi = 0.0;
    int left_gap = 0;         // per-side gap index (0 = semi-infinite gap)
    int right_gap = 0;
    bool lo_infinite = false;
    double width() const { return hi - lo; }
};

// All gap components in ascending order (index 0 is the ground component,
// which always exists).
std::vector<gap_interval> junction_gaps(const junction& j);

struct w_value {
    double value = 0.0;
    bool pole = false;  // a one-sided Dirichlet point: w has a pole here
};

// Interface Wronskian on a sheet; λ must lie in the gap closure of both
// sides (domain error otherwise).
w_value wronskian(const junction& j, double lambda, int sheet);

enum class state_kind { eigenvalue, resonance, borderline };

struct gap_state {
    double lambda = 0.0;
    int sheet = 1;
    state_kind kind = state_kind::eigenvalue;
    double residual = 0.0;  // |w| at the reported point
    int gap_index = 0;      // index into junction_gaps(j)
};

// All zeros of w(·, sheet) strictly inside gap component gap_index.
// Pole-aware bracketed search; > 2 sign-change roots raise an inconsistency
// error (violated count bound).  Local minima of |w| below root_tol that do
// not change sign are reported as state_kind::borderline and are not counted
// against the bound.
std::vector<gap_state> find_gap_states(const junction& j, int gap_index,
                                       int sheet, double root_tol = 1e-8);

// Eigenvalue-count prediction for even sides at t = 0 from the relative
// Dirichlet/Neumann positions (finite/finite and finite/infinite gap cases;
// configurations outside the covered cases return indeterminate).
enum class count_prediction { zero, one, indeterminate };
count_prediction count_predict_even(const junction& j, int gap_index);

// Ground-component rule for a general (not necessarily even) junction:
// no states at or below ν⁰ = min of the one-sided ν₀; if w > 0 at the top of
// the ground component, exactly one eigenvalue sits in it.
struct ground_state_info {
    double nu_floor = 0.0;    // ν⁰
    double gamma0_top = 0.0;  // min(α₀⁺ left, α₀⁺ right)
    double w_at_top = 0.0;    // sheet-1 w there
    int predicted = -1;       // 1 when w_at_top > 0, else -1 (rule silent)
};
ground_state_info ground_state_rules(const junction& j);

// Resolvent kernel R(x, x'; λ) of T_t at real λ in a gap component (λ not an
// eigenvalue).  |x|, |x'| ≤ 3 periods of the respective side.
double resolvent_kernel(const junction& j, double lambda, double x, double xp);

// For every sheet-1 eigenvalue of T in the given gap component, the swapped
// operator has a sheet-2 Wronskian zero at the same λ.  Returns the largest
// |λ_e − λ̃_r| over matched pairs (0 when the component holds no eigenvalue);
// an eigenvalue with no swapped partner raises an inconsistency error.
double swap_duality_check(const junction& j, int gap_index);

// Small-shift predictor for the state emerging from one end of a gap
// component when the interface Wronskian vanishes there at the base shift.
// The growth-rate function depends on which side's band edge forms the
// component end: the strictly interior side's edge binds with its own edge
// eigenfunction; equal edges mix the two sides.
struct edge_predictor {
    int gap_index = 0;
    bool upper = false;      // predicts from the hi end when true
    double alpha = 0.0;      // the component end
    int binding = 0;         // 0 = equal edges, 1 = left edge, 2 = right edge
    int resonance_sheet = 2; // sheet of the z<0 continuation (2, 3, or 4)
    double match_residual = 0.0;  // |w(alpha)| at the base shift
};

// Classify the component end and verify the matching condition
// m₂⁺(α, t) = m₁⁻(α); domain error when the end does not emit a state
// (matching fails) or a Dirichlet point of either side degenerates onto it.
edge_predictor make_edge_predictor(const junction& j, int gap_index,
                                   bool upper);

// Predicted root displacement z(dt) for the junction at shift t + dt:
// λ = α + z² (lower end) or α − z² (upper end); z > 0 is an eigenvalue,
// z < 0 a resonance on predictor.resonance_sheet.
double edge_predict_z(const junction& j, const edge_predictor& ep, double dt);

}  // namespace hj
