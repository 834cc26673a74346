// junction.cpp — gap components, interface Wronskians, bound/antibound state
// search, even-case counting rules, and the resolvent kernel of the glued
// operator T_t = -d²/dx² + χ₋ p₁ + χ₊ p₂(· + t).

#include "hj/junction.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "detail.hpp"

namespace hj {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// One-sided list of open gap intervals, semi-infinite gap first.
struct side_gap {
    double lo, hi;
    int index;  // 0 for the semi-infinite gap, else the gap number
};

std::vector<side_gap> side_gaps(const band_structure& b) {
    std::vector<side_gap> out;
    out.push_back({-kInf, b.alpha0, 0});
    for (const auto& g : b.gaps)
        if (g.open()) out.push_back({g.alpha_minus, g.alpha_plus, g.n});
    return out;
}

}  // namespace

junction make_junction(const potential& left, const potential& right, double t,
                       int n_max, std::optional<double> lambda_max,
                       double tol) {
    junction j{left, right, t, tol,
               compute_bands(left, n_max, lambda_max, tol, 0.0),
               compute_bands(right, n_max, lambda_max, tol, t)};
    return j;
}

junction swapped(const junction& j) {
    // T̃_t glues the shifted right potential on the negative axis and the
    // unshifted left potential on the positive axis, with zero extra shift.
    // μ/ν of the new left side at shift 0 coincide with the old right side at
    // shift t; edges are shift-independent, so the band data carries over.
    junction s{j.right.shifted(j.t), j.left, 0.0, j.tol, j.bands_right,
               j.bands_left};
    s.bands_left.t = 0.0;
    return s;
}

std::vector<gap_interval> junction_gaps(const junction& j) {
    const auto gl = side_gaps(j.bands_left);
    const auto gr = side_gaps(j.bands_right);
    std::vector<gap_interval> out;
    for (const auto& L : gl) {
        for (const auto& R : gr) {
            const double lo = std::max(L.lo, R.lo);
            const double hi = std::min(L.hi, R.hi);
            if (std::isinf(lo)) {
                gap_interval g;
                g.lo = -kInf;
                g.hi = hi;
                g.left_gap = L.index;
                g.right_gap = R.index;
                g.lo_infinite = true;
                out.push_back(g);
                continue;
            }
            if (hi - lo <= 1e-12 * (1.0 + std::fabs(lo))) continue;
            gap_interval g;
            g.lo = lo;
            g.hi = hi;
            g.left_gap = L.index;
            g.right_gap = R.index;
            g.lo_infinite = false;
            out.push_back(g);
        }
    }
    std::sort(out.begin(), out.end(),
              [](const gap_interval& a, const gap_interval& b) {
                  if (a.lo_infinite != b.lo_infinite) return a.lo_infinite;
                  return a.lo < b.lo;
              });
    return out;
}

w_value wronskian(const junction& j, double lambda, int sheet) {
    if (sheet < 1 || sheet > 4)
        fail(status::invalid_argument, "sheet must be 1..4");
    const m_value m2 =
        weyl_m(j.right, j.bands_right, lambda, j.t, side_t::right, sheet);
    const m_value m1 =
        weyl_m(j.left, j.bands_left, lambda, 0.0, side_t::left, sheet);
    w_value w;
    if (m2.pole || m1.pole) {
        w.pole = true;
        w.value = kInf;
        return w;
    }
    w.value = m2.value - m1.value;
    return w;
}

std::vector<gap_state> find_gap_states(const junction& j, int gap_index,
                                       int sheet, double root_tol) {
    const auto comps = junction_gaps(j);
    if (gap_index < 0 || gap_index >= static_cast<int>(comps.size()))
        fail(status::invalid_argument,
             strfmt("gap_index %d out of range (have %zu gap components)",
                    gap_index, comps.size()));
    const gap_interval& comp = comps[static_cast<std::size_t>(gap_index)];

    double lo = comp.lo;
    double hi = comp.hi;
    if (comp.lo_infinite) {
        // Every bound state lies above the infimum of the potential; pad by
        // half a unit for bracketing room.
        lo = std::min(j.left.min_value(), j.right.min_value()) - 0.5;
        if (lo >= hi) lo = hi - 1.0;
    }
    const double eps_lo = 1e-10 * (1.0 + std::fabs(lo));
    const double eps_hi = 1e-10 * (1.0 + std::fabs(hi));
    double a = lo + (comp.lo_infinite ? 0.0 : eps_lo);
    double b = hi - eps_hi;
    if (!(a < b)) return {};

    // Interior poles of w: the one-sided Dirichlet points inside the span.
    std::vector<double> cuts;
    if (comp.left_gap >= 1) {
        const double mu = j.bands_left.gap(comp.left_gap).mu;
        if (mu > a && mu < b) cuts.push_back(mu);
    }
    if (comp.right_gap >= 1) {
        const double mu = j.bands_right.gap(comp.right_gap).mu;
        if (mu > a && mu < b) cuts.push_back(mu);
    }
    std::sort(cuts.begin(), cuts.end());

    const auto weval = [&](double lam) {
        const w_value w = wronskian(j, lam, sheet);
        return w.pole ? kInf : w.value;
    };
    const auto scan = detail::scan_for_roots(weval, a, b, cuts, 401, root_tol);

    if (scan.roots.size() > 2)
        fail(status::inconsistent,
             strfmt("gap component %d sheet %d: found %zu interface roots; "
                    "the per-gap bound allows at most 2",
                    gap_index, sheet, scan.roots.size()));

    std::vector<gap_state> out;
    const state_kind root_kind =
        sheet == 1 ? state_kind::eigenvalue : state_kind::resonance;
    for (double r : scan.roots) {
        gap_state st;
        st.lambda = r;
        st.sheet = sheet;
        st.kind = root_kind;
        st.residual = std::fabs(weval(r));
        st.gap_index = gap_index;
        out.push_back(st);
    }
    for (const auto& [lam, r] : scan.grazes) {
        gap_state st;
        st.lambda = lam;
        st.sheet = sheet;
        st.kind = state_kind::borderline;
        st.residual = r;
        st.gap_index = gap_index;
        out.push_back(st);
    }
    std::sort(out.begin(), out.end(),
              [](const gap_state& x, const gap_state& y) {
                  return x.lambda < y.lambda;
              });
    return out;
}

count_prediction count_predict_even(const junction& j, int gap_index) {
    if (!j.left.is_even() || !j.right.is_even())
        fail(status::domain,
             "counting rule requires both potentials to be even");
    const double tau2 = j.right.period();
    const double tw = wrap(j.t, tau2);
    if (std::min(tw, tau2 - tw) > 1e-12)
        fail(status::domain, "counting rule requires zero dislocation shift");

    const auto comps = junction_gaps(j);
    if (gap_index < 0 || gap_index >= static_cast<int>(comps.size()))
        fail(status::invalid_argument,
             strfmt("gap_index %d out of range", gap_index));
    const gap_interval& comp = comps[static_cast<std::size_t>(gap_index)];
    const int l = comp.left_gap;
    const int r = comp.right_gap;

    const auto gap_sep = [](const band_structure& b, int n, double& d) {
        const gap_info& g = b.gap(n);
        if (g.closed || !std::isfinite(g.mu) || !std::isfinite(g.nu))
            return false;
        d = g.mu - g.nu;
        return true;
    };
    const double scale = 1.0 + std::fabs(comp.hi);
    const double dtol = 1e-10 * scale;

    if (l >= 1 && r >= 1) {
        double d1 = 0.0, d2 = 0.0;
        if (!gap_sep(j.bands_left, l, d1) || !gap_sep(j.bands_right, r, d2))
            return count_prediction::indeterminate;
        if (std::fabs(d1) <= dtol || std::fabs(d2) <= dtol)
            return count_prediction::indeterminate;
        return d1 * d2 > 0.0 ? count_prediction::zero : count_prediction::one;
    }
    if (l == 0 && r == 0) return count_prediction::zero;

    // One side contributes its semi-infinite gap; the other a finite gap.
    const band_structure& fin = (l >= 1) ? j.bands_left : j.bands_right;
    const int n_fin = (l >= 1) ? l : r;
    const double top_inf =
        (l >= 1) ? j.bands_right.alpha0 : j.bands_left.alpha0;
    double d = 0.0;
    if (!gap_sep(fin, n_fin, d)) return count_prediction::indeterminate;
    const gap_info& g = fin.gap(n_fin);
    if (d < -dtol) return count_prediction::zero;  // μ below ν
    if (d > dtol && g.mu <= top_inf + dtol) return count_prediction::one;
    return count_prediction::indeterminate;
}

ground_state_info ground_state_rules(const junction& j) {
    ground_state_info info;
    info.nu_floor = std::min(j.bands_left.nu0, j.bands_right.nu0);
    info.gamma0_top = std::min(j.bands_left.alpha0, j.bands_right.alpha0);
    const w_value w = wronskian(j, info.gamma0_top, 1);
    if (w.pole)
        fail(status::numeric,
             "interface Wronskian has a pole at the ground-gap top");
    info.w_at_top = w.value;
    info.predicted = w.value > 0.0 ? 1 : -1;
    return info;
}

double resolvent_kernel(const junction& j, double lambda, double x,
                        double xp) {
    const double lim_l = 3.0 * j.left.period() + 1e-12;
    const double lim_r = 3.0 * j.right.period() + 1e-12;
    for (double v : {x, xp}) {
        const double lim = v < 0.0 ? lim_l : lim_r;
        if (std::fabs(v) > lim)
            fail(status::domain,
                 strfmt("resolvent argument %g exceeds the supported range "
                        "of 3 periods",
                        v));
    }

    const m_value m1m =
        weyl_m(j.left, j.bands_left, lambda, 0.0, side_t::left, 1);
    const m_value m1p =
        weyl_m(j.left, j.bands_left, lambda, 0.0, side_t::left, 3);
    const m_value m2p =
        weyl_m(j.right, j.bands_right, lambda, j.t, side_t::right, 1);
    const m_value m2m =
        weyl_m(j.right, j.bands_right, lambda, j.t, side_t::right, 4);
    if (m1m.pole || m1p.pole || m2p.pole || m2m.pole)
        fail(status::domain,
             strfmt("lambda = %.17g is a one-sided Dirichlet point; the "
                    "resolvent formula degenerates there",
                    lambda));

    const double w = m2p.value - m1m.value;
    const double w1 = m1p.value - m1m.value;
    const double w2 = m2p.value - m2m.value;
    const double ptol = pole_tol(lambda);
    if (std::fabs(w) < ptol)
        fail(status::domain,
             strfmt("lambda = %.17g is an eigenvalue of the glued operator "
                    "(interface Wronskian %.3g)",
                    lambda, w));
    if (std::fabs(w1) < ptol || std::fabs(w2) < ptol)
        fail(status::domain,
             strfmt("lambda = %.17g sits at a one-sided band edge; the "
                    "resolvent splitting degenerates there",
                    lambda));

    // Weyl solutions decaying at +inf / -inf, continued across the seam.
    const auto psi_plus = [&](double v) {
        if (v >= 0.0) {
            const auto s =
                bloch_psi(j.right, j.bands_right, lambda, j.t, side_t::right,
                          v, 1);
            return s.psi;
        }
        const auto sm =
            bloch_psi(j.left, j.bands_left, lambda, 0.0, side_t::left, v, 1);
        const auto sp =
            bloch_psi(j.left, j.bands_left, lambda, 0.0, side_t::left, v, 3);
        return ((w1 - w) / w1) * sm.psi + (w / w1) * sp.psi;
    };
    const auto psi_minus = [&](double v) {
        if (v <= 0.0) {
            const auto s =
                bloch_psi(j.left, j.bands_left, lambda, 0.0, side_t::left, v,
                          1);
            return s.psi;
        }
        const auto sp =
            bloch_psi(j.right, j.bands_right, lambda, j.t, side_t::right, v,
                      1);
        const auto sm =
            bloch_psi(j.right, j.bands_right, lambda, j.t, side_t::right, v,
                      4);
        return ((w2 - w) / w2) * sp.psi + (w / w2) * sm.psi;
    };

    const double hi = std::max(x, xp);
    const double lo2 = std::min(x, xp);
    return -psi_plus(hi) * psi_minus(lo2) / w;
}

double swap_duality_check(const junction& j, int gap_index) {
    std::vector<gap_state> eigen;
    for (const auto& st : find_gap_states(j, gap_index, 1))
        if (st.kind == state_kind::eigenvalue) eigen.push_back(st);
    if (eigen.empty()) return 0.0;

    const auto comps = junction_gaps(j);
    const gap_interval& comp = comps[static_cast<std::size_t>(gap_index)];
    const junction js = swapped(j);
    const auto comps_s = junction_gaps(js);
    int k = -1;
    const double mid =
        comp.lo_infinite ? comp.hi - 1.0 : 0.5 * (comp.lo + comp.hi);
    for (std::size_t i = 0; i < comps_s.size(); ++i) {
        const double lo = comps_s[i].lo_infinite
                              ? -std::numeric_limits<double>::infinity()
                              : comps_s[i].lo;
        if (mid >= lo && mid <= comps_s[i].hi) k = static_cast<int>(i);
    }
    if (k < 0)
        fail(status::inconsistent,
             "swapped operator lost the gap component (the two gap sets must "
             "coincide)");

    std::vector<gap_state> res;
    for (const auto& st : find_gap_states(js, k, 2))
        if (st.kind == state_kind::resonance) res.push_back(st);

    double worst = 0.0;
    for (const auto& e : eigen) {
        double best = kInf;
        for (const auto& r : res) best = std::min(best, std::fabs(e.lambda - r.lambda));
        if (best > 1e-6 * (1.0 + std::fabs(e.lambda)))
            fail(status::inconsistent,
                 strfmt("duality violation: eigenvalue %.17g has no sheet-2 "
                        "partner in the swapped operator (nearest %.3g away)",
                        e.lambda, best));
        worst = std::max(worst, best);
    }
    return worst;
}

namespace {

// Edge of side gap k facing the given component end (k = 0 is the
// semi-infinite gap: upper end α₀⁺, no finite lower end).
double side_end(const band_structure& b, int k, bool upper) {
    if (k == 0) return upper ? b.alpha0 : -kInf;
    const gap_info& g = b.gap(k);
    return upper ? g.alpha_plus : g.alpha_minus;
}

double side_edge_mass(const band_structure& b, int k, bool upper) {
    if (k == 0) return b.mass0_plus;
    const gap_info& g = b.gap(k);
    return upper ? g.mass_plus : g.mass_minus;
}

}  // namespace

edge_predictor make_edge_predictor(const junction& j, int gap_index,
                                   bool upper) {
    const auto comps = junction_gaps(j);
    if (gap_index < 0 || gap_index >= static_cast<int>(comps.size()))
        fail(status::invalid_argument,
             strfmt("gap_index %d out of range", gap_index));
    const gap_interval& comp = comps[static_cast<std::size_t>(gap_index)];
    if (!upper && comp.lo_infinite)
        fail(status::domain,
             "the ground component has no finite lower end to predict from");

    edge_predictor ep;
    ep.gap_index = gap_index;
    ep.upper = upper;
    ep.alpha = upper ? comp.hi : comp.lo;

    const double e_l = side_end(j.bands_left, comp.left_gap, upper);
    const double e_r = side_end(j.bands_right, comp.right_gap, upper);
    const double tol_eq = 1e-9 * (1.0 + std::fabs(ep.alpha));
    if (std::fabs(e_l - e_r) <= tol_eq) {
        ep.binding = 0;
        ep.resonance_sheet = 2;
    } else {
        // The component end is the more restrictive side's edge: the larger
        // lower edge, or the smaller upper edge.
        const bool left_binds = upper ? (e_l < e_r) : (e_l > e_r);
        ep.binding = left_binds ? 1 : 2;
        ep.resonance_sheet = left_binds ? 3 : 4;
    }

    // A Dirichlet point sitting on the end makes 1/φ singular there; the
    // expansion machinery does not apply.
    const double degtol = 1e-8 * (1.0 + std::fabs(ep.alpha));
    if (comp.left_gap >= 1 &&
        std::fabs(j.bands_left.gap(comp.left_gap).mu - ep.alpha) < degtol)
        fail(status::domain,
             "left Dirichlet point degenerates onto the component end");
    if (comp.right_gap >= 1 &&
        std::fabs(j.bands_right.gap(comp.right_gap).mu - ep.alpha) < degtol)
        fail(status::domain,
             "right Dirichlet point degenerates onto the component end");

    const m_value m1 =
        weyl_m(j.left, j.bands_left, ep.alpha, 0.0, side_t::left, 1);
    const m_value m2 =
        weyl_m(j.right, j.bands_right, ep.alpha, j.t, side_t::right, 1);
    if (m1.pole || m2.pole)
        fail(status::domain, "Weyl pole at the component end");
    ep.match_residual = std::fabs(m2.value - m1.value);
    if (ep.match_residual >
        1e-6 * (1.0 + std::fabs(m1.value) + std::fabs(m2.value)))
        fail(status::domain,
             strfmt("no state emerges from this end: matching residual "
                    "|m2+ - m1-| = %.3g at lambda = %.17g",
                    ep.match_residual, ep.alpha));
    return ep;
}

double edge_predict_z(const junction& j, const edge_predictor& ep, double dt) {
    if (dt == 0.0) return 0.0;
    const auto comps = junction_gaps(j);
    const gap_interval& comp = comps[static_cast<std::size_t>(ep.gap_index)];
    const double alpha = ep.alpha;
    const double sgn = ep.upper ? -1.0 : 1.0;  // edge-orientation sign of L

    const potential p2s = j.right.shifted(j.t);

    std::function<double(double)> rate;
    if (ep.binding == 2) {
        const double mass =
            side_edge_mass(j.bands_right, comp.right_gap, ep.upper);
        const double amp = std::sqrt(2.0 * std::fabs(mass));
        const auto ef = edge_eigenfunction_at(p2s, j.bands_right,
                                              comp.right_gap, ep.upper);
        rate = [=, &p2s](double x) {
            double ps, psx;
            ef.eval(p2s, x, &ps, &psx);
            return amp * sgn * (psx * psx - (p2s(x) - alpha) * ps * ps);
        };
    } else if (ep.binding == 1) {
        const double mass =
            side_edge_mass(j.bands_left, comp.left_gap, ep.upper);
        const double amp = std::sqrt(2.0 * std::fabs(mass));
        const auto ef =
            edge_eigenfunction_at(j.left, j.bands_left, comp.left_gap,
                                  ep.upper);
        double ps0, psx0;
        ef.eval(j.left, 0.0, &ps0, &psx0);
        const double d2 = psx0 * psx0, v2 = ps0 * ps0;
        rate = [=, &p2s](double x) {
            return amp * sgn * (d2 - (p2s(x) - alpha) * v2);
        };
    } else {
        const double mass_l =
            side_edge_mass(j.bands_left, comp.left_gap, ep.upper);
        const double mass_r =
            side_edge_mass(j.bands_right, comp.right_gap, ep.upper);
        const double amp = std::sqrt(2.0 * std::fabs(mass_r));
        const double mix = std::sqrt(std::fabs(mass_r / mass_l));
        const auto ef2 = edge_eigenfunction_at(p2s, j.bands_right,
                                               comp.right_gap, ep.upper);
        const auto ef1 = edge_eigenfunction_at(j.left, j.bands_left,
                                               comp.left_gap, ep.upper);
        rate = [=, &p2s, &j](double x) {
            double p2v, p2x, p1v, p1x;
            ef2.eval(p2s, x, &p2v, &p2x);
            ef1.eval(j.left, x, &p1v, &p1x);
            const double l2 =
                sgn * (p2x * p2x - (p2s(x) - alpha) * p2v * p2v);
            if (p1v * p1v < 1e-14 * (1.0 + p2v * p2v)) return 0.0;
            const double r = 1.0 + mix * (p2v * p2v) / (p1v * p1v);
            return amp * l2 / r;
        };
    }
    return detail::integrate(rate, 0.0, dt, 1e-9);
}

}  // namespace hj
