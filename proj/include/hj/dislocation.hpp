// dislocation.hpp — the equal-sides junction q_t = χ₋ p + χ₊ p(· + t):
// interface Wronskian w(λ,t) = m⁺(λ,t) − m⁻(λ,0), its pole-free companion
//
//     Φ(λ,t) = b(λ)[θ_x(1,λ,t) + θ_x(1,λ,0)]
//              + a(λ,t) θ_x(1,λ,0) − a(λ,0) θ_x(1,λ,t),
//
// trajectory tracing of the in-gap states over the shift t, unit-shift
// periodicity checks (even gaps translate, odd gaps reflect through the gap
// midpoint with the sheets exchanged), and the small-t edge asymptotics
//
//     z(t) = √(|M_n±|/2) ∫₀ᵗ L(s, α_n±) ds + O(t^{3/2}),
//     L(s, λ) = ∓[Ψ'(s,λ)² − (p(s)−λ) Ψ(s,λ)²]   (− at α⁺, + at α⁻),
//
// with λ = α_n± ∓ z²; z > 0 is an eigenvalue, z < 0 a sheet-2 resonance.
// When the Dirichlet point sits on the edge the expansion degenerates to
// z(t) = ±t √(|M_n±|/2) Ψ'(0, α_n±)² + O(t²).

#pragma once

#include "hj/junction.hpp"

namespace hj {

// Interface Wronskian of the dislocated pair at shift t.  Sheet 1 is
// m⁺(λ,t) − m⁻(λ,0); sheet 2 swaps both superscripts.  At a Dirichlet pole
// of either factor the (signed) infinity is returned.
double dislocation_wronskian(const potential& p, const band_structure& bands,
                             double lambda, double t, int sheet);

// Pole-free companion (b → −b on sheet 2).  Vanishes at every root of the
// same-sheet Wronskian and is regular across Dirichlet points; it may also
// vanish where a single m-function numerator does, so roots must be
// cross-checked before they are classified.
double phi_polefree(const potential& p, const band_structure& bands,
                    double lambda, double t, int sheet = 1);

struct trajectory_sample {
    double t = 0.0;
    double lambda = 0.0;
    int sheet = 1;
    state_kind kind = state_kind::eigenvalue;
    bool edge_event = false;  // this root took part in an edge crossing
};

struct trajectory {
    int gap_index = 0;
    double alpha_minus = 0.0;
    double alpha_plus = 0.0;
    std::vector<trajectory_sample> samples;    // all roots, every grid t
    std::vector<double> edge_events;           // t where a root crossed an edge
    std::vector<std::string> diagnostics;      // lost tracks, collisions, ...
};

// Dense re-search of both sheets of one open gap over the given shifts.
// Roots are found on the pole-free companion (switching to the local
// z = √(±(α−λ)) variable near the edges) and classified onto sheets by the
// (a ∓ b)-numerator residuals.
trajectory trace_trajectories(const potential& p, const band_structure& bands,
                              int gap_index,
                              const std::vector<double>& t_grid);

// Max unit-shift residual over all grid pairs (t, t+1), comparing same-sheet
// root multisets: the shift by one period maps the operator to itself, so the
// state set recurs in place.  On even gaps every branch returns to its own
// position (translation); on odd gaps the two branch labels have swapped
// after a half-integer number of revolutions (reflection of the labels),
// which the recorded edge events expose.  Roots without a partner are
// charged their distance to the nearest edge (an edge transit in progress).
double periodicity_check(const trajectory& traj, const band_structure& bands);

struct edge_prediction {
    double z = 0.0;
    double lambda = 0.0;      // α ∓ z²
    int sheet = 1;            // 1 when z > 0, else 2
    bool degenerate = false;  // Dirichlet point on the edge: linear-in-t law
};

// Small-t prediction for the root emerging from one edge of an open gap.
// `bands` must carry the Dirichlet data of the base (unshifted) potential.
edge_prediction edge_asymptote(const potential& p, const band_structure& bands,
                               int gap_index, bool upper, double t);

// The edge growth-rate function L(x, α) for a sampled edge eigenfunction
// (sign bound to the edge the eigenfunction belongs to).
double edge_L(const potential& p, const edge_eigenfunction& ef, double x);

}  // namespace hj
