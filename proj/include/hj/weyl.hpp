// weyl.hpp — Weyl functions and decaying Bloch solutions off the spectrum.
//
// For λ in a gap closure the two Weyl functions of the operator with
// potential p(·+t) are
//     m±(λ,t) = (a(λ,t) ∓ b(λ)) / φ(1,λ,t),
// where a = (φ'(1)−θ(1))/2 and b is the gap-resolved branch of √(Δ²−1)
// (positive on even-index gaps, negative on odd ones).  ψ± = θ + m± φ decay
// at ±∞.  The only feature that distinguishes the four sheets of the
// interface energy surface is the sign chosen for b on each half-line, so
// this module exposes exactly that: a side (which half-line the potential
// occupies, hence which of m± is the decaying choice) and a sheet that
// selects whether the side's b is flipped — sheet 1 flips nothing, sheet 2
// flips both sides, sheet 3 only the left, sheet 4 only the right.  The
// interface Wronskians compose these per side; weyl itself stays one-sided.

#pragma once

#include "hj/spectrum.hpp"

namespace hj {

enum class side_t { left = -1, right = +1 };

struct m_value {
    double value = 0.0;     // m(λ,t); meaningless when pole is true
    bool pole = false;      // |φ(1,λ,t)| below pole_tol: λ is a Dirichlet point
    double numerator = 0.0; // a ∓ b (finite even at poles)
    double phi1 = 0.0;      // φ(1,λ,t)
    int gap = 0;            // gap index containing λ
};

// Pole detection scale: |φ(1,λ,t)| < pole_tol(λ) flags a Dirichlet pole.
inline double pole_tol(double lambda) { return 1e-9 * (1.0 + std::fabs(lambda)); }

// One-sided Weyl function on sheet ∈ {1,2,3,4} (see header comment).
//   side_t::right → base superscript +(decays at +∞),
//   side_t::left  → base superscript −(decays at −∞).
// λ must lie in a gap closure of p (domain error inside open bands).
m_value weyl_m(const potential& p, const band_structure& bands, double lambda,
               double t, side_t side, int sheet = 1);

// ζ(λ,t) = φ̇(1,λ,t)/(2φ) = a/φ; at open-gap edges m± = ζ = Ψ'(t)/Ψ(t).
m_value zeta(const potential& p, const band_structure& bands, double lambda,
             double t);

// Decaying Bloch solution ψ_side(x) = θ(x) + m_side φ(x), extended beyond one
// period through its Floquet multiplier (Δ − b for the right solution,
// Δ + b for the left one).  |x| ≤ 8 periods.
struct bloch_value {
    double psi = 0.0;
    double psi_x = 0.0;
};
bloch_value bloch_psi(const potential& p, const band_structure& bands,
                      double lambda, double t, side_t side, double x,
                      int sheet = 1);

}  // namespace hj
