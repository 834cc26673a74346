// spectrum.cpp — discriminant scan, band edges, gap data, edge eigenfunctions,
// product and trace representations.

#include "hj/spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "detail.hpp"

namespace hj {

namespace {

constexpr double gap_tol = 1e-9;       // edge pairs closer than this: closed gap
constexpr double edge_ftol = 1e-11;    // required |Δ ∓ 1| at refined edges

double nan_value() { return std::numeric_limits<double>::quiet_NaN(); }

// One refined discriminant root: Δ(lambda) = target (±1).
struct edge_root {
    double lambda;
    int target;  // +1 or -1
};

// ---------------------------------------------------------------------------
// discriminant march
// ---------------------------------------------------------------------------
//
// Edges are roots of Δ(λ) = ±1.  We march in u = √(λ - λ_floor), where
// consecutive bands have near-uniform width ≈ π/τ, sampling Δ and Δ'.
// Between consecutive samples we look for
//   * sign changes of Δ-1 and Δ+1        → transversal edges,
//   * sign changes of Δ'                 → a discriminant extremum, which is
//     either the hump of an open gap (|Δ*| > 1: refine the two crossings on
//     the subintervals) or the tangency of a closed gap (|Δ*| ≈ 1),
//   * a sign change of Δ with |Δ| > 1 at both samples → a whole band was
//     stepped over: re-march the interval at 8× resolution.

struct march_state {
    const potential* p;
    double t;
    std::vector<edge_root> roots;
    std::vector<std::pair<double, int>> tangencies;  // closed gaps: (λ*, target)
    std::vector<std::string>* warnings;
};

void scan_interval(march_state& st, double la, const lyapunov_data& da,
                   double lb, const lyapunov_data& db, int depth) {
    const potential& p = *st.p;
    auto delta_at = [&](double x) { return lyapunov(p, x, st.t); };

    // Whole band missed?  (Δ jumps from one gap's sign to the other's.)
    if (std::fabs(da.delta) > 1.0 && std::fabs(db.delta) > 1.0 &&
        (da.delta > 0) != (db.delta > 0)) {
        if (depth >= 6) {
            st.warnings->push_back(
                strfmt("band scan: unresolved band near lambda=%.9g", 0.5 * (la + lb)));
            return;
        }
        double prev_x = la;
        lyapunov_data prev = da;
        for (int k = 1; k <= 8; ++k) {
            double x = la + (lb - la) * k / 8.0;
            lyapunov_data cur = (k == 8) ? db : delta_at(x);
            scan_interval(st, prev_x, prev, x, cur, depth + 1);
            prev_x = x;
            prev = cur;
        }
        return;
    }

    // Split at a discriminant extremum if Δ' changes sign.
    double split = nan_value();
    if ((da.delta_prime > 0) != (db.delta_prime > 0) &&
        da.delta_prime != 0.0) {
        split = detail::brent_root(
            [&](double x) { return delta_at(x).delta_prime; }, la, lb,
            da.delta_prime, db.delta_prime, 1e-13, 1e-13);
        double dstar = delta_at(split).delta;
        if (std::fabs(dstar) <= 1.0) {
            // Tangency from inside the band: a closed (or sub-resolution) gap.
            int target = (dstar > 0) ? +1 : -1;
            if (std::fabs(dstar) < 1.0 - 1e-6)
                st.warnings->push_back(strfmt(
                    "band scan: interior discriminant extremum |Delta|=%.12g < 1 "
                    "at lambda=%.9g treated as a closed gap", std::fabs(dstar), split));
            st.tangencies.emplace_back(split, target);
            // Transversal crossings, if any, are still collected below.
        }
    }

    // Collect transversal crossings of both targets on each sub-interval.
    std::vector<std::pair<double, lyapunov_data>> pts;
    pts.emplace_back(la, da);
    if (std::isfinite(split)) pts.emplace_back(split, delta_at(split));
    pts.emplace_back(lb, db);
    for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
        for (int target = -1; target <= 1; target += 2) {
            double fa = pts[i].second.delta - target;
            double fb = pts[i + 1].second.delta - target;
            // A zero exactly at the left endpoint was counted by the previous
            // (sub)interval.
            if (fa == 0.0) continue;
            if ((fa > 0) != (fb > 0) || fb == 0.0) {
                double r = detail::brent_root(
                    [&](double x) { return delta_at(x).delta - target; },
                    pts[i].first, pts[i + 1].first, fa, fb, 1e-14, 1e-13);
                // Polish the function value check.
                double resid = std::fabs(delta_at(r).delta - target);
                if (resid > edge_ftol)
                    st.warnings->push_back(
                        strfmt("band scan: edge at lambda=%.9g refined to "
                               "|Delta-(%+d)|=%.3g only", r, target, resid));
                st.roots.push_back({r, target});
            }
        }
    }
}

// ---------------------------------------------------------------------------
// Dirichlet / Neumann points
// ---------------------------------------------------------------------------

double dirichlet_in(const potential& p, double t, double lo, double hi) {
    // Exactly one simple zero of φ(period,·,t) lies in [lo, hi]; widen a trace
    // beyond the edges so the sign change is visible even when the zero sits
    // exactly on an edge (even potentials at t = 0).
    const double delta = 1e-7 * (1.0 + std::fabs(lo) + std::fabs(hi));
    const double a = lo - delta, b = hi + delta;
    auto f = [&](double x) { return monodromy(p, x, t).phi1; };
    return detail::brent_root_at(f, a, b, 1e-14, 1e-14);
}

double neumann_in(const potential& p, double t, double lo, double hi) {
    const double delta = 1e-7 * (1.0 + std::fabs(lo) + std::fabs(hi));
    const double a = lo - delta, b = hi + delta;
    auto f = [&](double x) { return monodromy(p, x, t).theta1_x; };
    return detail::brent_root_at(f, a, b, 1e-14, 1e-14);
}

}  // namespace

const gap_info& band_structure::gap(int n) const {
    if (n < 1 || n > static_cast<int>(gaps.size()))
        fail(status::invalid_argument,
             strfmt("band_structure: gap index %d outside 1..%zu", n, gaps.size()));
    return gaps[static_cast<std::size_t>(n - 1)];
}

// ---------------------------------------------------------------------------
// compute_bands
// ---------------------------------------------------------------------------

band_structure compute_bands(const potential& p, int n_max,
                             std::optional<double> lambda_max, double tol,
                             double t) {
    if (n_max < 0)
        fail(status::invalid_argument, "compute_bands: n_max must be >= 0");
    if (!(tol > 0))
        fail(status::invalid_argument, "compute_bands: tol must be positive");

    band_structure bs;
    bs.t = t;
    bs.n_max = n_max;
    const double tau = p.period();
    const double vmin = p.min_value();
    const double vmax = p.max_value();
    const double lambda_floor = vmin - 1.0;
    double lmax = lambda_max
                      ? *lambda_max
                      : std::pow(pi * (n_max + 2) / tau, 2.0) +
                            std::max(std::fabs(vmin), std::fabs(vmax));
    if (lmax < lambda_floor + 10.0) lmax = lambda_floor + 10.0;
    bs.lambda_max = lmax;

    // March in u-space: bands are ~π/τ wide in u = √(λ - λ_floor).
    march_state st;
    st.p = &p;
    st.t = t;
    st.warnings = &bs.warnings;
    const double u_max = std::sqrt(lmax - lambda_floor);
    const double du = (pi / tau) / 12.0;
    double ua = 0.0;
    double la = lambda_floor;
    lyapunov_data da = lyapunov(p, la, t);
    if (da.delta <= 1.0)
        bs.warnings.push_back(
            strfmt("band scan: Delta(lambda_floor=%.6g)=%.6g <= 1; floor assumption "
                   "violated", la, da.delta));
    // The default ceiling leaves ~2 spare bands above gap n_max, so marching
    // the whole window is cheap and avoids any early-stop bookkeeping.
    while (ua < u_max) {
        double ub = std::min(ua + du, u_max);
        double lb = lambda_floor + ub * ub;
        lyapunov_data db_ = lyapunov(p, lb, t);
        scan_interval(st, la, da, lb, db_, 0);
        ua = ub;
        la = lb;
        da = db_;
    }

    // Merge tangencies (closed gaps) into the root list as coincident pairs.
    // Crossings already found transversally around the extremum count toward
    // the pair (a narrow open gap yields two, an exact tangency may yield one
    // when the refined extremum lands on |Δ| = 1 to the last bit).
    for (const auto& [lstar, target] : st.tangencies) {
        int nearby = 0;
        for (const edge_root& r : st.roots)
            if (r.target == target &&
                std::fabs(r.lambda - lstar) < 1e-6 * (1 + std::fabs(lstar)))
                ++nearby;
        for (int k = nearby; k < 2; ++k) st.roots.push_back({lstar, target});
    }
    std::sort(st.roots.begin(), st.roots.end(),
              [](const edge_root& x, const edge_root& y) { return x.lambda < y.lambda; });

    // Assemble: first root must be Δ=+1 (bottom of the spectrum), then pairs
    // of alternating target sign: gap n has Δ(α_n±) = (-1)ⁿ.
    if (st.roots.empty())
        fail(status::numeric, "compute_bands: no spectrum found below the ceiling");
    if (st.roots.front().target != +1)
        fail(status::inconsistent,
             strfmt("compute_bands: lowest discriminant root has Delta=-1 "
                    "(lambda=%.9g); scan floor too high?", st.roots.front().lambda));
    bs.alpha0 = st.roots.front().lambda;

    std::size_t i = 1;
    for (int n = 1; n <= n_max; ++n) {
        int target = (n % 2 == 0) ? +1 : -1;
        if (i + 1 >= st.roots.size()) break;  // not enough roots for a pair
        const edge_root& r1 = st.roots[i];
        const edge_root& r2 = st.roots[i + 1];
        if (r1.target != target || r2.target != target)
            fail(status::inconsistent,
                 strfmt("compute_bands: edge parity broken at gap %d "
                        "(lambda=%.9g,%.9g target %+d)", n, r1.lambda, r2.lambda,
                        target));
        gap_info g;
        g.n = n;
        g.alpha_minus = r1.lambda;
        g.alpha_plus = r2.lambda;
        if (g.alpha_plus - g.alpha_minus < gap_tol) {
            double mid = 0.5 * (g.alpha_minus + g.alpha_plus);
            g.alpha_minus = g.alpha_plus = mid;
            g.closed = true;
        }
        bs.gaps.push_back(g);
        i += 2;
    }
    if (static_cast<int>(bs.gaps.size()) < n_max) {
        bs.complete = false;
        bs.warnings.push_back(
            strfmt("band scan: ceiling lambda_max=%.6g reached after %zu of %d gaps",
                   lmax, bs.gaps.size(), n_max));
    }

    // Dirichlet/Neumann points and ν₀ at the requested shift.
    dirichlet_neumann_points dn = dirichlet_neumann(p, bs, t);
    bs.nu0 = dn.nu0;
    for (std::size_t k = 0; k < bs.gaps.size(); ++k) {
        bs.gaps[k].mu = dn.mu[k];
        bs.gaps[k].nu = dn.nu[k];
    }

    // Effective masses at open-gap edges: M = -Δ(α)Δ'(α).
    {
        lyapunov_data l0 = lyapunov(p, bs.alpha0, t);
        bs.mass0_plus = -l0.delta * l0.delta_prime;
        if (!(bs.mass0_plus > 0))
            bs.warnings.push_back(
                strfmt("effective mass at the spectral bottom is not positive "
                       "(%.3g): numerically degenerate", bs.mass0_plus));
    }
    for (gap_info& g : bs.gaps) {
        if (g.closed) {
            g.mass_minus = nan_value();
            g.mass_plus = nan_value();
            continue;
        }
        lyapunov_data lm = lyapunov(p, g.alpha_minus, t);
        lyapunov_data lp = lyapunov(p, g.alpha_plus, t);
        g.mass_minus = -lm.delta * lm.delta_prime;
        g.mass_plus = -lp.delta * lp.delta_prime;
        if (!(g.mass_minus < 0) || !(g.mass_plus > 0))
            bs.warnings.push_back(
                strfmt("gap %d: effective masses (%.3g, %.3g) violate the sign "
                       "law; edges may be numerically degenerate",
                       g.n, g.mass_minus, g.mass_plus));
    }
    return bs;
}

// ---------------------------------------------------------------------------
// Dirichlet / Neumann data
// ---------------------------------------------------------------------------

dirichlet_neumann_points dirichlet_neumann(const potential& p,
                                           const band_structure& bands,
                                           double t) {
    dirichlet_neumann_points out;
    // ν₀: the single Neumann point at or below the spectral bottom.  The
    // quadratic form bounds it below by min p.
    out.nu0 = neumann_in(p, t, p.min_value() - 1.0, bands.alpha0);
    for (const gap_info& g : bands.gaps) {
        out.mu.push_back(dirichlet_in(p, t, g.alpha_minus, g.alpha_plus));
        out.nu.push_back(neumann_in(p, t, g.alpha_minus, g.alpha_plus));
    }
    return out;
}

// ---------------------------------------------------------------------------
// gap-resolved branch of b(λ)
// ---------------------------------------------------------------------------

double gap_branch_b(const potential& p, const band_structure& bands,
                    double lambda, int* gap_out) {
    const double btol = 1e-9 * (1.0 + std::fabs(lambda));
    int n = -1;
    if (lambda <= bands.alpha0 + btol) {
        n = 0;
    } else {
        for (const gap_info& g : bands.gaps) {
            if (lambda >= g.alpha_minus - btol && lambda <= g.alpha_plus + btol) {
                n = g.n;
                break;
            }
        }
    }
    if (n < 0) {
        double top = bands.gaps.empty() ? bands.alpha0 : bands.gaps.back().alpha_plus;
        if (lambda > top + btol)
            fail(status::domain,
                 strfmt("gap_branch_b: lambda=%.9g beyond the computed gaps "
                        "(last edge %.9g); raise n_max", lambda, top));
        fail(status::domain,
             strfmt("gap_branch_b: lambda=%.9g lies inside a band; b is not real "
                    "there", lambda));
    }
    if (gap_out) *gap_out = n;
    lyapunov_data l = lyapunov(p, lambda, bands.t);
    double disc = l.delta * l.delta - 1.0;
    if (disc < 0) {
        if (disc < -1e-8 * (1 + l.delta * l.delta))
            fail(status::domain,
                 strfmt("gap_branch_b: lambda=%.9g has |Delta|<1 (inside a band)",
                        lambda));
        disc = 0.0;  // rounding at an edge
    }
    double root = std::sqrt(disc);
    return (n % 2 == 0) ? root : -root;
}

// ---------------------------------------------------------------------------
// edge eigenfunctions
// ---------------------------------------------------------------------------

void edge_eigenfunction::eval(const potential& p, double x, double* psi,
                              double* psi_x) const {
    const double tau = p.period();
    double k = std::floor(x / tau);
    double xr = x - k * tau;
    if (xr >= tau) { xr -= tau; k += 1.0; }
    solution_sample ss = solution_at(p, alpha, 0.0, xr);
    // parity = ±1: Ψ(x + τ) = parity · Ψ(x); integer powers alternate.
    double factor = (parity == 1) ? 1.0
                                  : (std::fmod(std::fabs(k), 2.0) < 0.5 ? 1.0 : -1.0);
    if (psi) *psi = factor * (v_theta * ss.theta + v_phi * ss.phi);
    if (psi_x) *psi_x = factor * (v_theta * ss.theta_x + v_phi * ss.phi_x);
}

edge_eigenfunction edge_eigenfunction_at(const potential& p,
                                         const band_structure& bands, int n,
                                         bool upper) {
    edge_eigenfunction ef;
    if (n == 0) {
        ef.alpha = bands.alpha0;
        upper = true;
    } else {
        const gap_info& g = bands.gap(n);
        if (g.closed)
            fail(status::domain,
                 strfmt("edge_eigenfunction: gap %d is closed; edge states are "
                        "defined at open-gap edges", n));
        ef.alpha = upper ? g.alpha_plus : g.alpha_minus;
    }
    ef.n = n;
    ef.upper = upper;
    ef.parity = (n % 2 == 0) ? +1 : -1;

    // Monodromy eigenvector for the multiplier ρ = (-1)ⁿ: the edge solution is
    // the (anti)periodic direction v with (M - ρ)v = 0.
    monodromy_data md = monodromy(p, ef.alpha, 0.0);
    const double rho = static_cast<double>(ef.parity);
    const double r1[2] = {md.theta1 - rho, md.phi1};
    const double r2[2] = {md.theta1_x, md.phi1_x - rho};
    const double n1 = std::hypot(r1[0], r1[1]);
    const double n2 = std::hypot(r2[0], r2[1]);
    double v[2];
    if (n1 >= n2) {
        v[0] = r1[1];
        v[1] = -r1[0];
    } else {
        v[0] = r2[1];
        v[1] = -r2[0];
    }
    double vn = std::hypot(v[0], v[1]);
    if (vn < 1e-12 * (1 + std::fabs(rho)))
        fail(status::numeric,
             strfmt("edge_eigenfunction: monodromy at lambda=%.9g is too close to "
                    "±identity to pick the edge direction (closed gap?)", ef.alpha));
    v[0] /= vn;
    v[1] /= vn;

    // Sample on 2049 points, normalize ∫₀^τ Ψ² = 1 by Simpson.
    const int grid = 2049;
    std::vector<solution_sample> ss = solution_grid(p, ef.alpha, 0.0, grid);
    std::vector<double> vals(grid), ders(grid), sq(grid);
    for (int k = 0; k < grid; ++k) {
        vals[k] = v[0] * ss[k].theta + v[1] * ss[k].phi;
        ders[k] = v[0] * ss[k].theta_x + v[1] * ss[k].phi_x;
        sq[k] = vals[k] * vals[k];
    }
    const double h = p.period() / (grid - 1);
    double norm2 = detail::simpson(sq, h);
    if (!(norm2 > 0))
        fail(status::numeric, "edge_eigenfunction: vanishing normalization");
    double scale = 1.0 / std::sqrt(norm2);
    // Deterministic sign: make the first sample of visible size positive.
    double peak = 0.0;
    for (double x : vals) peak = std::max(peak, std::fabs(x));
    for (int k = 0; k < grid; ++k)
        if (std::fabs(vals[k]) > 0.1 * peak) {
            if (vals[k] < 0) scale = -scale;
            break;
        }
    ef.v_theta = v[0] * scale;
    ef.v_phi = v[1] * scale;
    ef.values.resize(grid);
    ef.derivs.resize(grid);
    for (int k = 0; k < grid; ++k) {
        ef.values[k] = vals[k] * scale;
        ef.derivs[k] = ders[k] * scale;
    }

    // (Anti)periodicity check: Ψ(τ) = ρ Ψ(0).
    double defect = std::max(std::fabs(ef.values.back() - rho * ef.values.front()),
                             std::fabs(ef.derivs.back() - rho * ef.derivs.front()));
    double mag = std::max({1.0, std::fabs(ef.values.front()), std::fabs(ef.derivs.front())});
    if (defect > 1e-6 * mag)
        fail(status::numeric,
             strfmt("edge_eigenfunction: (anti)periodicity defect %.3g at "
                    "lambda=%.9g; edge not refined enough", defect, ef.alpha));
    return ef;
}

// ---------------------------------------------------------------------------
// product and trace representations
// ---------------------------------------------------------------------------

namespace {

// First N Dirichlet points of p(·+t): the zeros of φ(period,·,t) in order.
std::vector<double> dirichlet_points(const potential& p, double t, int N) {
    std::vector<double> mu;
    const double tau = p.period();
    const double floor_ = p.min_value() - 1.0;
    double ua = 0.0;
    const double du = (pi / tau) / 6.0;  // zeros are ~π/τ apart in u
    auto phi1 = [&](double x) { return monodromy(p, x, t).phi1; };
    double la = floor_;
    double fa = phi1(la);
    while (static_cast<int>(mu.size()) < N) {
        double ub = ua + du;
        double lb = floor_ + ub * ub;
        double fb = phi1(lb);
        if ((fa > 0) != (fb > 0))
            mu.push_back(detail::brent_root(phi1, la, lb, fa, fb, 1e-14, 1e-14));
        ua = ub;
        la = lb;
        fa = fb;
        if (ua > pi * (N + 4) / tau)  // safety: far beyond where μ_N must lie
            fail(status::numeric,
                 strfmt("dirichlet_points: found only %zu of %d zeros below "
                        "lambda=%.6g", mu.size(), N, la));
    }
    return mu;
}

// sin(√z τ)/√z, entire in z (hyperbolic for z < 0, series near 0).
double sinc_tau(double z, double tau) {
    const double w = z * tau * tau;
    if (std::fabs(w) < 1e-8) return tau * (1.0 - w / 6.0 + w * w / 120.0);
    if (z > 0) return std::sin(std::sqrt(z) * tau) / std::sqrt(z);
    return std::sinh(std::sqrt(-z) * tau) / std::sqrt(-z);
}

}  // namespace

double trubowitz_residual(const potential& p, const band_structure& bands,
                          double lambda, double t, int N) {
    (void)bands;  // the product needs only the Dirichlet points themselves
    if (N < 1) fail(status::invalid_argument, "trubowitz_residual: N must be >= 1");
    const double tau = p.period();
    const double c0 = p.mean_value();
    std::vector<double> mu = dirichlet_points(p, t, N);
    // φ(τ,λ,t) = sinc_τ(λ-c₀) · Π_{n≤N} (μ_n - λ)/((πn/τ)² + c₀ - λ) · tail,
    // where the omitted tail Π_{n>N} (μ_n-λ)/((πn/τ)²+c₀-λ) → 1.
    double approx = sinc_tau(lambda - c0, tau);
    for (int n = 1; n <= N; ++n) {
        double freen = std::pow(pi * n / tau, 2.0) + c0;
        approx *= (mu[static_cast<std::size_t>(n - 1)] - lambda) / (freen - lambda);
    }
    double exact = monodromy(p, lambda, t).phi1;
    if (exact == 0.0)
        fail(status::domain,
             "trubowitz_residual: lambda is a Dirichlet point; relative residual "
             "undefined");
    return std::fabs(approx - exact) / std::fabs(exact);
}

double trace_formula_residual(const potential& p, const band_structure& bands,
                              double t, int N) {
    if (N < 1) fail(status::invalid_argument, "trace_formula_residual: N >= 1");
    // Need edges for gaps 1..N; recompute deeper if the given structure is
    // too shallow.
    const band_structure* use = &bands;
    band_structure deeper;
    if (static_cast<int>(bands.gaps.size()) < N) {
        deeper = compute_bands(p, N, std::nullopt, 1e-9, t);
        use = &deeper;
    }
    dirichlet_neumann_points dn = dirichlet_neumann(p, *use, t);
    double sum = use->alpha0;
    for (int n = 1; n <= N; ++n) {
        const gap_info& g = use->gaps[static_cast<std::size_t>(n - 1)];
        sum += g.alpha_minus + g.alpha_plus - 2.0 * dn.mu[static_cast<std::size_t>(n - 1)];
    }
    return std::fabs(p(t) - sum);
}

}  // namespace hj
