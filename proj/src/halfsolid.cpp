// halfsolid.cpp — half-solid interface Wronskians on the four sheets,
// truncated gap components, state location and counting, seam-matching
// roots, and the small-t shedding laws (edge and interior).

#include "hj/halfsolid.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "detail.hpp"

namespace hj {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

double signed_pole(const m_value& m) {
    const double sg = (m.phi1 == 0.0) ? 1.0 : (m.phi1 > 0 ? 1.0 : -1.0);
    return std::copysign(kInf, m.numerator == 0.0 ? sg : m.numerator * sg);
}

// Solid-side contribution: the left Weyl function is +√(s−λ) on sheets 1, 4
// and −√(s−λ) on sheets 2, 3.
double solid_m(double s, double lambda, int sheet) {
    const double r = std::sqrt(s - lambda);
    return (sheet == 1 || sheet == 4) ? r : -r;
}

// The periodic side supplies m⁺ on sheets 1, 3 and m⁻ on sheets 2, 4; in the
// one-sided Weyl module those are the right-side sheets 1 and 4.
int periodic_sheet(int sheet) { return (sheet == 1 || sheet == 3) ? 1 : 4; }

}  // namespace

half_solid make_half_solid(potential p, double s, int n_max,
                           std::optional<double> lambda_max, double tol) {
    band_structure bands = compute_bands(p, n_max, lambda_max, tol, 0.0);
    half_solid hs{std::move(p), s, std::move(bands), tol};

    const double dtol = 1e-9 * (1.0 + std::abs(s));
    auto degenerate = [&](double edge, const char* what) {
        if (std::abs(s - edge) <= dtol)
            fail(status::domain,
                 strfmt("half-solid level s=%.12g coincides with %s=%.12g "
                        "(degenerate threshold)", s, what, edge));
    };
    degenerate(hs.bands.alpha0, "the band bottom edge");
    degenerate(hs.bands.nu0, "the Neumann point below the spectrum");
    for (const gap_info& g : hs.bands.gaps) {
        if (!g.open()) continue;
        degenerate(g.alpha_minus, "a band edge");
        degenerate(g.alpha_plus, "a band edge");
    }
    return hs;
}

double hs_wronskian(const half_solid& hs, double lambda, double t, int sheet) {
    if (sheet < 1 || sheet > 4)
        fail(status::domain,
             strfmt("half-solid sheet must be in 1..4, got %d", sheet));
    if (lambda > hs.s)
        fail(status::domain,
             strfmt("lambda=%.12g exceeds the solid level s=%.12g", lambda,
                    hs.s));
    const m_value m = weyl_m(hs.p, hs.bands, lambda, t, side_t::right,
                             periodic_sheet(sheet));
    if (m.pole) return signed_pole(m);
    return m.value - solid_m(hs.s, lambda, sheet);
}

std::vector<hs_component> hs_components(const half_solid& hs) {
    std::vector<hs_component> out;
    hs_component ground;
    ground.lo = -kInf;
    ground.lo_infinite = true;
    ground.hi = std::min(hs.bands.alpha0, hs.s);
    ground.hi_is_s = hs.s < hs.bands.alpha0;
    ground.gap_index = 0;
    out.push_back(ground);
    for (const gap_info& g : hs.bands.gaps) {
        if (!g.open() || g.alpha_minus >= hs.s) continue;
        hs_component c;
        c.lo = g.alpha_minus;
        c.hi = std::min(g.alpha_plus, hs.s);
        c.hi_is_s = hs.s < g.alpha_plus;
        c.gap_index = g.n;
        if (c.hi - c.lo > 1e-12 * (1.0 + std::abs(c.lo))) out.push_back(c);
    }
    return out;
}

std::vector<gap_state> hs_find_states(const half_solid& hs, int comp_index,
                                      int sheet, double t, double root_tol) {
    if (sheet < 1 || sheet > 4)
        fail(status::domain,
             strfmt("half-solid sheet must be in 1..4, got %d", sheet));
    const std::vector<hs_component> comps = hs_components(hs);
    if (comp_index < 0 || comp_index >= static_cast<int>(comps.size()))
        fail(status::domain,
             strfmt("component index %d out of range (have %zu)", comp_index,
                    comps.size()));
    const hs_component& c = comps[comp_index];

    double a = c.lo, b = c.hi;
    if (c.lo_infinite)
        a = std::min(hs.p.min_value(), hs.s) - 0.5;
    else
        a += 1e-10 * (1.0 + std::abs(c.lo));
    b -= 1e-10 * (1.0 + std::abs(c.hi));
    if (!(a < b)) return {};

    // Dirichlet points of the shifted periodic side are the only interior
    // poles the Wronskian can have.
    std::vector<double> poles;
    if (c.gap_index >= 1) {
        const dirichlet_neumann_points dn = dirichlet_neumann(hs.p, hs.bands,
                                                              t);
        const double mu = dn.mu[c.gap_index - 1];
        if (mu > a && mu < b) poles.push_back(mu);
    }

    auto weval = [&](double lambda) {
        return hs_wronskian(hs, lambda, t, sheet);
    };
    const detail::scan_result sr =
        detail::scan_for_roots(weval, a, b, poles, 401, root_tol);

    std::vector<gap_state> out;
    for (double r : sr.roots) {
        gap_state s;
        s.lambda = r;
        s.sheet = sheet;
        s.kind = sheet == 1 ? state_kind::eigenvalue : state_kind::resonance;
        s.residual = std::abs(weval(r));
        s.gap_index = c.gap_index;
        out.push_back(s);
    }
    for (const auto& gz : sr.grazes) {
        gap_state s;
        s.lambda = gz.first;
        s.sheet = sheet;
        s.kind = state_kind::borderline;
        s.residual = gz.second;
        s.gap_index = c.gap_index;
        out.push_back(s);
    }
    std::sort(out.begin(), out.end(),
              [](const gap_state& x, const gap_state& y) {
                  return x.lambda < y.lambda;
              });
    return out;
}

std::vector<hs_count_row> hs_counts(const half_solid& hs, double t) {
    const std::vector<hs_component> comps = hs_components(hs);
    std::vector<hs_count_row> out;
    for (std::size_t ci = 0; ci < comps.size(); ++ci) {
        hs_count_row row;
        row.comp_index = static_cast<int>(ci);
        row.gap_index = comps[ci].gap_index;
        for (int sheet = 1; sheet <= 4; ++sheet) {
            const auto states = hs_find_states(hs, static_cast<int>(ci),
                                               sheet, t);
            int n = 0;
            for (const gap_state& s : states)
                if (s.kind != state_kind::borderline) ++n;
            row.n_sheet[sheet - 1] = n;
        }
        out.push_back(row);
    }
    return out;
}

std::vector<double> hs_matching_roots(const half_solid& hs, int gap_index,
                                      bool upper) {
    double alpha = 0.0;
    if (gap_index == 0) {
        if (!upper)
            fail(status::domain,
                 "the ground component has only the upper edge alpha0+");
        alpha = hs.bands.alpha0;
    } else {
        if (gap_index < 1 || gap_index > static_cast<int>(hs.bands.gaps.size()))
            fail(status::domain,
                 strfmt("gap index %d out of range", gap_index));
        const gap_info& g = hs.bands.gap(gap_index);
        if (!g.open())
            fail(status::domain, strfmt("gap %d is closed", gap_index));
        alpha = upper ? g.alpha_plus : g.alpha_minus;
    }
    if (!(alpha < hs.s - 1e-9 * (1.0 + std::abs(hs.s))))
        fail(status::domain,
             strfmt("edge alpha=%.12g is not below the solid level s=%.12g",
                    alpha, hs.s));

    const edge_eigenfunction ef = edge_eigenfunction_at(hs.p, hs.bands,
                                                        gap_index, upper);
    const double c = std::sqrt(hs.s - alpha);
    const double tau = hs.p.period();
    auto f = [&](double y) {
        double ps = 0.0, px = 0.0;
        ef.eval(hs.p, y, &ps, &px);
        return px - c * ps;
    };

    const int kGrid = 512;
    std::vector<double> fv(kGrid + 1);
    for (int j = 0; j <= kGrid; ++j) fv[j] = f(tau * j / kGrid);
    std::vector<double> roots;
    for (int j = 0; j < kGrid; ++j) {
        const double yl = tau * j / kGrid, yr = tau * (j + 1) / kGrid;
        if (fv[j] == 0.0) {
            roots.push_back(yl);
        } else if (fv[j] * fv[j + 1] < 0.0) {
            roots.push_back(detail::brent_root(f, yl, yr, fv[j], fv[j + 1]));
        }
    }
    for (double& y : roots)
        if (y >= tau - 1e-12) y = 0.0;
    std::sort(roots.begin(), roots.end());
    roots.erase(std::unique(roots.begin(), roots.end(),
                            [&](double x, double y) {
                                return std::abs(x - y) <= 1e-11 * tau;
                            }),
                roots.end());
    return roots;
}

edge_prediction hs_edge_asymptote(const half_solid& hs, int gap_index,
                                  bool upper, double y, double t) {
    double alpha = 0.0, mass = 0.0;
    if (gap_index == 0) {
        if (!upper)
            fail(status::domain,
                 "the ground component has only the upper edge alpha0+");
        alpha = hs.bands.alpha0;
        mass = hs.bands.mass0_plus;
    } else {
        if (gap_index < 1 || gap_index > static_cast<int>(hs.bands.gaps.size()))
            fail(status::domain,
                 strfmt("gap index %d out of range", gap_index));
        const gap_info& g = hs.bands.gap(gap_index);
        if (!g.open())
            fail(status::domain, strfmt("gap %d is closed", gap_index));
        alpha = upper ? g.alpha_plus : g.alpha_minus;
        mass = upper ? g.mass_plus : g.mass_minus;
    }
    if (!(alpha < hs.s))
        fail(status::domain, "edge is not below the solid level");

    const edge_eigenfunction ef = edge_eigenfunction_at(hs.p, hs.bands,
                                                        gap_index, upper);
    const double amp = std::sqrt(2.0 * std::abs(mass));
    edge_prediction out;
    out.z = amp * detail::integrate(
                      [&](double u) { return edge_L(hs.p, ef, y + u); }, 0.0,
                      t, 1e-9);
    out.sheet = out.z < 0 ? 4 : 1;
    const double sgn = upper ? -1.0 : +1.0;
    out.lambda = alpha + sgn * out.z * out.z;
    return out;
}

std::vector<double> hs_interior_roots(const half_solid& hs) {
    const double b = gap_branch_b(hs.p, hs.bands, hs.s);
    const double tau = hs.p.period();
    auto f = [&](double y) {
        const monodromy_data md = monodromy(hs.p, hs.s, y);
        return 0.5 * (md.phi1_x - md.theta1) - b;
    };
    auto phi1 = [&](double y) {
        return monodromy(hs.p, hs.s, y).phi1;
    };

    const int kGrid = 512;
    std::vector<double> fv(kGrid + 1);
    for (int j = 0; j <= kGrid; ++j) fv[j] = f(tau * j / kGrid);
    std::vector<double> roots;
    for (int j = 0; j < kGrid; ++j) {
        const double yl = tau * j / kGrid, yr = tau * (j + 1) / kGrid;
        if (fv[j] == 0.0) {
            roots.push_back(yl);
        } else if (fv[j] * fv[j + 1] < 0.0) {
            roots.push_back(detail::brent_root(f, yl, yr, fv[j], fv[j + 1]));
        }
    }
    for (double& y : roots)
        if (y >= tau - 1e-12) y = 0.0;
    std::sort(roots.begin(), roots.end());
    roots.erase(std::unique(roots.begin(), roots.end(),
                            [&](double x, double y) {
                                return std::abs(x - y) <= 1e-11 * tau;
                            }),
                roots.end());
    // m⁺(s,y) = 0 needs a genuine zero of the numerator, not a Dirichlet
    // degeneracy of the whole quotient.
    roots.erase(std::remove_if(roots.begin(), roots.end(),
                               [&](double y) {
                                   return std::abs(phi1(y)) <=
                                          pole_tol(hs.s);
                               }),
                roots.end());
    return roots;
}

edge_prediction hs_interior_asymptote(const half_solid& hs, double y,
                                      double t) {
    edge_prediction out;
    out.z = detail::integrate([&](double u) { return hs.p(y + u) - hs.s; },
                              0.0, t, 1e-9);
    out.sheet = out.z < 0 ? 3 : 1;
    out.lambda = hs.s - out.z * out.z;
    return out;
}

ground_threshold hs_ground_threshold(const half_solid& hs, double t) {
    ground_threshold out;
    const m_value z = zeta(hs.p, hs.bands, hs.bands.alpha0, t);
    if (z.pole)
        fail(status::numeric, "zeta has a pole at the band bottom edge");
    out.m0 = z.value;
    out.s_star = hs.bands.alpha0 + out.m0 * out.m0;
    out.nu0 = dirichlet_neumann(hs.p, hs.bands, t).nu0;
    out.predicted =
        (out.m0 > 0.0 && out.nu0 < hs.s && hs.s < out.s_star) ? 1 : 0;
    return out;
}

int hs_ground_count(const half_solid& hs, double t) {
    const auto states = hs_find_states(hs, 0, 1, t);
    int n = 0;
    for (const gap_state& s : states)
        if (s.kind != state_kind::borderline) ++n;
    return n;
}

}  // namespace hj
