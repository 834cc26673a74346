// potential.cpp — periodic potential representations and evaluation.

#include "hj/potential.hpp"

#include <gsl/gsl_errno.h>
#include <gsl/gsl_interp.h>
#include <gsl/gsl_spline.h>

#include <algorithm>
#include <cmath>
#include <sstream>

namespace hj {

// ---------------------------------------------------------------------------
// internal representation
// ---------------------------------------------------------------------------

struct potential::rep {
    potential_kind kind;
    double period = 1.0;

    // constant
    double value = 0.0;

    // piecewise
    std::vector<double> breaks;  // ascending, breaks[0] == 0, all < period
    std::vector<double> vals;

    // fourier
    double mean = 0.0;
    std::vector<harmonic> terms;

    // samples (periodic cubic spline over [0, period])
    std::vector<double> samples;
    std::shared_ptr<gsl_spline> spline;  // with wrap point appended

    double eval(double u) const {  // u in [0, period)
        switch (kind) {
            case potential_kind::constant:
                return value;
            case potential_kind::piecewise: {
                // last breakpoint <= u
                auto it = std::upper_bound(breaks.begin(), breaks.end(), u);
                std::size_t i = static_cast<std::size_t>(it - breaks.begin());
                return vals[i == 0 ? vals.size() - 1 : i - 1];
            }
            case potential_kind::fourier: {
                double s = mean;
                const double w0 = 2.0 * pi / period;
                for (const harmonic& h : terms) {
                    double w = w0 * h.n;
                    s += h.a * std::cos(w * u) + h.b * std::sin(w * u);
                }
                return s;
            }
            case potential_kind::samples: {
                gsl_interp_accel acc = {};  // stateless lookup: thread-safe
                return gsl_spline_eval(spline.get(), u, &acc);
            }
        }
        fail(status::internal, "potential: unknown kind");
    }
};

// ---------------------------------------------------------------------------
// constructors
// ---------------------------------------------------------------------------

namespace {

void check_period(double period) {
    if (!(period > 0.0) || !std::isfinite(period))
        fail(status::invalid_argument,
             strfmt("potential: period must be positive and finite (got %g)", period));
}

void check_finite(const std::vector<double>& v, const char* what) {
    for (double x : v)
        if (!std::isfinite(x))
            fail(status::invalid_argument,
                 strfmt("potential: non-finite %s entry", what));
}

}  // namespace

potential potential::make_constant(double value, double period) {
    check_period(period);
    if (!std::isfinite(value))
        fail(status::invalid_argument, "potential: constant value must be finite");
    auto r = std::make_shared<rep>();
    r->kind = potential_kind::constant;
    r->period = period;
    r->value = value;
    potential p;
    p.rep_ = std::move(r);
    return p;
}

potential potential::make_piecewise(std::vector<double> breakpoints,
                                    std::vector<double> values, double period) {
    check_period(period);
    if (breakpoints.empty() || breakpoints.size() != values.size())
        fail(status::invalid_argument,
             "potential: piecewise needs equal, nonzero breakpoint/value counts");
    check_finite(breakpoints, "breakpoint");
    check_finite(values, "value");
    if (breakpoints.front() != 0.0)
        fail(status::invalid_argument,
             "potential: first breakpoint must be 0 (segments cover one period)");
    for (std::size_t i = 0; i + 1 < breakpoints.size(); ++i)
        if (!(breakpoints[i] < breakpoints[i + 1]))
            fail(status::invalid_argument,
                 strfmt("potential: breakpoints must increase strictly "
                        "(violated at index %zu)", i + 1));
    if (!(breakpoints.back() < period))
        fail(status::invalid_argument,
             "potential: breakpoints must lie inside [0, period)");
    auto r = std::make_shared<rep>();
    r->kind = potential_kind::piecewise;
    r->period = period;
    r->breaks = std::move(breakpoints);
    r->vals = std::move(values);
    potential p;
    p.rep_ = std::move(r);
    return p;
}

potential potential::make_fourier(double mean, std::vector<harmonic> terms,
                                  double period) {
    check_period(period);
    if (!std::isfinite(mean))
        fail(status::invalid_argument, "potential: fourier mean must be finite");
    for (const harmonic& h : terms) {
        if (h.n <= 0)
            fail(status::invalid_argument,
                 strfmt("potential: harmonic index must be >= 1 (got %d)", h.n));
        if (!std::isfinite(h.a) || !std::isfinite(h.b))
            fail(status::invalid_argument,
                 "potential: fourier coefficients must be finite");
    }
    auto r = std::make_shared<rep>();
    r->kind = potential_kind::fourier;
    r->period = period;
    r->mean = mean;
    r->terms = std::move(terms);
    potential p;
    p.rep_ = std::move(r);
    return p;
}

potential potential::make_samples(std::vector<double> samples, double period) {
    check_period(period);
    if (samples.size() < 4)
        fail(status::invalid_argument,
             "potential: sampled representation needs at least 4 points");
    check_finite(samples, "sample");
    auto r = std::make_shared<rep>();
    r->kind = potential_kind::samples;
    r->period = period;
    r->samples = samples;

    // Periodic cubic spline on the closed interval with the wrap point
    // appended, so evaluation covers [0, period] seamlessly.
    const std::size_t n = samples.size();
    std::vector<double> xs(n + 1), ys(n + 1);
    for (std::size_t k = 0; k <= n; ++k) {
        xs[k] = period * static_cast<double>(k) / static_cast<double>(n);
        ys[k] = samples[k % n];
    }
    gsl_spline* sp = gsl_spline_alloc(gsl_interp_cspline_periodic, n + 1);
    if (!sp) fail(status::internal, "potential: spline allocation failed");
    if (gsl_spline_init(sp, xs.data(), ys.data(), n + 1) != GSL_SUCCESS) {
        gsl_spline_free(sp);
        fail(status::numeric, "potential: periodic spline setup failed");
    }
    r->spline = std::shared_ptr<gsl_spline>(sp, gsl_spline_free);
    potential p;
    p.rep_ = std::move(r);
    return p;
}

// ---------------------------------------------------------------------------
// evaluation and queries
// ---------------------------------------------------------------------------

double potential::operator()(double x) const {
    return rep_->eval(wrap(x + offset_, rep_->period));
}

double potential::period() const { return rep_->period; }
potential_kind potential::kind() const { return rep_->kind; }
double potential::shift_offset() const { return offset_; }

potential potential::shifted(double t) const {
    potential p(*this);
    p.offset_ = wrap(offset_ + t, rep_->period);
    return p;
}

bool potential::is_even(double tol) const {
    if (!(tol > 0)) fail(status::invalid_argument, "is_even: tol must be positive");
    const double tau = rep_->period;
    const int grid = 4096;
    double worst = 0.0;
    for (int k = 0; k < grid; ++k) {
        double x = tau * (k + 0.5) / grid;
        worst = std::max(worst, std::fabs((*this)(x) - (*this)(tau - x)));
    }
    return worst <= tol;
}

bool potential::needs_integrator() const {
    return rep_->kind == potential_kind::fourier ||
           rep_->kind == potential_kind::samples;
}

void potential::segments(std::vector<double>& breaks,
                         std::vector<double>& vals) const {
    const rep& r = *rep_;
    if (r.kind == potential_kind::constant) {
        breaks = {0.0};
        vals = {r.value};
        return;
    }
    if (r.kind != potential_kind::piecewise)
        fail(status::domain, "segments: potential is not piecewise-constant");
    // Re-chop the shifted function: the new breakpoints are the original ones
    // moved by -offset (mod period); values are looked up at segment midpoints.
    std::vector<double> b;
    b.reserve(r.breaks.size());
    for (double x : r.breaks) b.push_back(wrap(x - offset_, r.period));
    std::sort(b.begin(), b.end());
    b.erase(std::unique(b.begin(), b.end()), b.end());
    if (b.empty() || b.front() != 0.0) b.insert(b.begin(), 0.0);
    breaks.clear();
    vals.clear();
    for (std::size_t i = 0; i < b.size(); ++i) {
        double lo = b[i];
        double hi = (i + 1 < b.size()) ? b[i + 1] : r.period;
        if (!(hi > lo)) continue;
        breaks.push_back(lo);
        vals.push_back(rep_->eval(wrap(0.5 * (lo + hi) + offset_, r.period)));
    }
}

double potential::min_value() const {
    const rep& r = *rep_;
    switch (r.kind) {
        case potential_kind::constant:
            return r.value;
        case potential_kind::piecewise:
            return *std::min_element(r.vals.begin(), r.vals.end());
        default: {
            double m = (*this)(0.0);
            for (int k = 1; k < 4096; ++k)
                m = std::min(m, (*this)(r.period * k / 4096.0));
            return m;
        }
    }
}

double potential::max_value() const {
    const rep& r = *rep_;
    switch (r.kind) {
        case potential_kind::constant:
            return r.value;
        case potential_kind::piecewise:
            return *std::max_element(r.vals.begin(), r.vals.end());
        default: {
            double m = (*this)(0.0);
            for (int k = 1; k < 4096; ++k)
                m = std::max(m, (*this)(r.period * k / 4096.0));
            return m;
        }
    }
}

double potential::mean_value() const {
    const rep& r = *rep_;
    switch (r.kind) {
        case potential_kind::constant:
            return r.value;
        case potential_kind::fourier:
            return r.mean;  // harmonics integrate to zero over a period
        case potential_kind::piecewise: {
            double s = 0.0;
            for (std::size_t i = 0; i < r.breaks.size(); ++i) {
                double hi = (i + 1 < r.breaks.size()) ? r.breaks[i + 1] : r.period;
                s += r.vals[i] * (hi - r.breaks[i]);
            }
            return s / r.period;
        }
        case potential_kind::samples: {
            // Uniform samples of a periodic function: the trapezoid rule is
            // spectrally accurate, and here it reduces to the plain mean.
            double s = 0.0;
            for (double v : r.samples) s += v;
            return s / static_cast<double>(r.samples.size());
        }
    }
    fail(status::internal, "potential: unknown kind");
}

std::string potential::describe() const {
    const rep& r = *rep_;
    std::string head;
    switch (r.kind) {
        case potential_kind::constant:
            head = strfmt("constant %g", r.value);
            break;
        case potential_kind::piecewise:
            head = strfmt("piecewise (%zu segments)", r.breaks.size());
            break;
        case potential_kind::fourier:
            head = strfmt("fourier (mean %g, %zu harmonics)", r.mean, r.terms.size());
            break;
        case potential_kind::samples:
            head = strfmt("samples (%zu points)", r.samples.size());
            break;
    }
    if (offset_ != 0.0) head += strfmt(" shifted by %g", offset_);
    if (r.period != 1.0) head += strfmt(", period %g", r.period);
    return head;
}

std::string potential::serialize() const {
    const rep& r = *rep_;
    std::ostringstream os;
    switch (r.kind) {
        case potential_kind::constant:
            os << "kind = constant\n";
            os << "value = " << fmt17(r.value) << "\n";
            break;
        case potential_kind::piecewise: {
            // Serialize the shifted function so round-trips are pointwise.
            std::vector<double> b, v;
            segments(b, v);
            os << "kind = piecewise\n";
            os << "breakpoints = [";
            for (std::size_t i = 0; i < b.size(); ++i)
                os << (i ? ", " : "") << fmt17(b[i]);
            os << "]\n";
            os << "values = [";
            for (std::size_t i = 0; i < v.size(); ++i)
                os << (i ? ", " : "") << fmt17(v[i]);
            os << "]\n";
            break;
        }
        case potential_kind::fourier: {
            os << "kind = fourier\n";
            os << "mean = " << fmt17(r.mean) << "\n";
            os << "coefficients = [";
            // Fold the accumulated shift into the coefficients: the shifted
            // series has a'_n = a cos(wt)+b sin(wt), b'_n = b cos(wt)-a sin(wt).
            for (std::size_t i = 0; i < r.terms.size(); ++i) {
                const harmonic& h = r.terms[i];
                double w = 2.0 * pi * h.n / r.period;
                double c = std::cos(w * offset_), s = std::sin(w * offset_);
                os << (i ? ", " : "") << "[" << h.n << ", "
                   << fmt17(h.a * c + h.b * s) << ", "
                   << fmt17(h.b * c - h.a * s) << "]";
            }
            os << "]\n";
            break;
        }
        case potential_kind::samples: {
            os << "kind = samples\n";
            os << "samples = [";
            // Re-sample the shifted spline at the original grid points.
            const std::size_t n = r.samples.size();
            for (std::size_t k = 0; k < n; ++k)
                os << (k ? ", " : "")
                   << fmt17((*this)(r.period * static_cast<double>(k) /
                                    static_cast<double>(n)));
            os << "]\n";
            break;
        }
    }
    if (r.period != 1.0) os << "period = " << fmt17(r.period) << "\n";
    return os.str();
}

}  // namespace hj
