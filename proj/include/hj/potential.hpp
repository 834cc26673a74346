// potential.hpp — 1-periodic (or τ-periodic) real potentials.
//
// A potential is one of four representations:
//   constant   p(x) = v
//   piecewise  piecewise-constant over one period (breakpoints + values)
//   fourier    mean + finite sum of a_n cos(2πnx/τ) + b_n sin(2πnx/τ)
//   samples    uniform samples over one period, periodic cubic interpolation
//
// All representations carry an exact accumulated shift: shifted(t) composes
// shifts without loss, so shift(shift(p,a),b) ≡ shift(p,a+b) identically.
// Objects are immutable after construction and freely shareable across
// threads.

#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "hj/common.hpp"

namespace hj {

enum class potential_kind { constant, piecewise, fourier, samples };

// One Fourier term: a*cos(2πnx/period) + b*sin(2πnx/period).
struct harmonic {
    int n;
    double a;
    double b;
};

class potential {
  public:
    // --- constructors -----------------------------------------------------
    static potential make_constant(double value, double period = 1.0);

    // breakpoints: strictly increasing, breakpoints[0] == 0, all < period;
    // values[i] holds on [breakpoints[i], breakpoints[i+1]) (cyclically).
    static potential make_piecewise(std::vector<double> breakpoints,
                                    std::vector<double> values,
                                    double period = 1.0);

    static potential make_fourier(double mean, std::vector<harmonic> terms,
                                  double period = 1.0);

    // samples: values at x = k*period/N, k = 0..N-1 (N >= 4); interpolated
    // with a periodic cubic spline.
    static potential make_samples(std::vector<double> samples,
                                  double period = 1.0);

    // --- evaluation -------------------------------------------------------
    double operator()(double x) const;  // p(x), exactly periodic
    double period() const;
    potential_kind kind() const;

    // p(· + t); period preserved, shifts compose exactly.
    potential shifted(double t) const;
    double shift_offset() const;  // accumulated shift (mod period)

    // Parity about the period midpoint: max_x |p(x) - p(period - x)| <= tol,
    // checked on a 4096-point grid (catches Fourier modes up to index 2048).
    bool is_even(double tol = 1e-10) const;

    // Optional constructor-supplied parity hint (cross-checked by callers).
    std::optional<bool> even_hint;

    // --- structure queries (used by the propagator and the scanners) ------
    // True if monodromy should integrate the ODE (fourier/samples); false if
    // exact segment propagators apply (constant/piecewise).
    bool needs_integrator() const;

    // For constant/piecewise kinds: canonical segment grid of the *shifted*
    // function on [0, period): ascending breakpoints starting at 0, and the
    // value on each segment.  Throws domain error for other kinds.
    void segments(std::vector<double>& breaks, std::vector<double>& vals) const;

    double min_value() const;   // exact for constant/piecewise, grid otherwise
    double max_value() const;
    double mean_value() const;  // (1/τ)∫ p; exact except for samples (grid)

    std::string describe() const;    // short human-readable summary
    std::string serialize() const;   // config-section body; parse round-trips

  private:
    struct rep;
    std::shared_ptr<const rep> rep_;
    double offset_ = 0.0;  // evaluate rep at wrap(x + offset)
    potential() = default;
};

}  // namespace hj
