// verify.cpp — run-time invariant suite.
//
// Checks are grouped by module and parametrized over a potential instance
// where they are generic; instance-specific rules (counting laws, thresholds,
// winding numbers) run on fixed built-in potentials so the suite's coverage
// is independent of the configuration.  Everything is deterministic: fixed
// seeds, fixed orders, fixed tolerances.

#include "hj/verify.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "hj/halfsolid.hpp"
#include "hj/hill.hpp"
#include "hj/junction.hpp"
#include "hj/weyl.hpp"

namespace hj {
namespace {

constexpr unsigned kSeed = 20250818u;

struct suite {
    std::vector<check_result>& out;

    void add(const std::string& name, double residual, double tolerance,
             const std::string& detail) {
        out.push_back({name, residual <= tolerance, residual, tolerance,
                       detail});
    }
    void add_flag(const std::string& name, bool ok, double residual,
                  const std::string& detail) {
        out.push_back({name, ok, residual, 0.0, detail});
    }
};

struct instance {
    std::string label;
    potential p;
    band_structure bands;  // shift 0
};

std::string tag(const std::string& check, const std::string& label) {
    return check + "[" + label + "]";
}

// ---------------------------------------------------------------- potential

void check_potential(suite& s, const instance& in) {
    std::mt19937 rng(kSeed);
    std::uniform_real_distribution<double> ux(-3.0, 3.0);
    const double tau = in.p.period();

    double worst = 0.0;
    for (int i = 0; i < 1000; ++i) {
        const double x = ux(rng);
        const double v = in.p(x);
        worst = std::max(worst, std::abs(v - in.p(x + 1.0 * tau)));
        worst = std::max(worst, std::abs(v - in.p(x - 3.0 * tau)));
    }
    s.add(tag("potential.periodicity", in.label), worst, 1e-12,
          "1000 points, offsets {+1,-3} periods");

    const potential q1 = in.p.shifted(0.37).shifted(-1.22);
    const potential q2 = in.p.shifted(0.37 - 1.22);
    worst = 0.0;
    for (int i = 0; i < 200; ++i) {
        const double x = ux(rng);
        worst = std::max(worst, std::abs(q1(x) - q2(x)));
    }
    s.add(tag("potential.shift-composition", in.label), worst, 1e-12,
          "shift(shift(p,0.37),-1.22) vs shift(p,-0.85)");

    if (in.p.even_hint.has_value()) {
        const bool agree = in.p.is_even() == *in.p.even_hint;
        s.add_flag(tag("potential.parity-hint", in.label), agree,
                   agree ? 0.0 : 1.0, "is_even() vs supplied hint");
    }
}

// --------------------------------------------------------------------- hill

void check_hill(suite& s, const instance& in) {
    std::mt19937 rng(kSeed + 1);
    std::uniform_real_distribution<double> ul(-10.0, 150.0);
    std::uniform_real_distribution<double> ut(0.0, 1.0);

    double worst = 0.0;
    for (int i = 0; i < 40; ++i) {
        const double lam = ul(rng);
        for (double t : {0.0, 0.37}) {
            const monodromy_data md = monodromy(in.p, lam, t);
            worst = std::max(worst, std::abs(md.wronskian_defect()));
        }
    }
    s.add(tag("hill.unimodularity", in.label), worst, 1e-10,
          "40 random lambda, shifts {0, 0.37}");

    worst = 0.0;
    for (int i = 0; i < 20; ++i) {
        const double lam = ul(rng);
        const lyapunov_data l0 = lyapunov(in.p, lam, 0.0);
        const lyapunov_data l1 = lyapunov(in.p, lam, 0.37);
        worst = std::max(worst, std::abs(l0.delta - l1.delta));
    }
    s.add(tag("hill.lyapunov-shift-invariance", in.label), worst, 1e-9,
          "Delta(lambda) at shifts 0 vs 0.37");

    // lambda-derivatives against central finite differences
    worst = 0.0;
    const double h = 1e-4;
    for (int i = 0; i < 10; ++i) {
        const double lam = ul(rng);
        const double t = ut(rng);
        const monodromy_data mc = monodromy(in.p, lam, t);
        const monodromy_data mp = monodromy(in.p, lam + h, t);
        const monodromy_data mm = monodromy(in.p, lam - h, t);
        const double scale =
            std::max({1.0, std::abs(mc.theta1), std::abs(mc.phi1_x),
                      std::abs(mc.theta1_x), std::abs(mc.phi1)});
        const double fd[4] = {(mp.theta1 - mm.theta1) / (2 * h),
                              (mp.theta1_x - mm.theta1_x) / (2 * h),
                              (mp.phi1 - mm.phi1) / (2 * h),
                              (mp.phi1_x - mm.phi1_x) / (2 * h)};
        const double an[4] = {mc.d_theta1, mc.d_theta1_x, mc.d_phi1,
                              mc.d_phi1_x};
        for (int k = 0; k < 4; ++k)
            worst = std::max(worst,
                             std::abs(fd[k] - an[k]) / (std::abs(an[k]) + scale));
        (void)scale;
    }
    s.add(tag("hill.lambda-derivative", in.label), worst, 1e-6,
          "integrated derivatives vs central differences, h=1e-4");

    // quadratic identity a^2 + 1 - Delta^2 = -phi(1) thx(1)
    worst = 0.0;
    for (int i = 0; i < 60; ++i) {
        const double lam = ul(rng);
        const double t = ut(rng);
        const monodromy_data md = monodromy(in.p, lam, t);
        const double delta = 0.5 * (md.theta1 + md.phi1_x);
        const double a = 0.5 * (md.phi1_x - md.theta1);
        const double lhs = a * a + 1.0 - delta * delta;
        const double rhs = -md.phi1 * md.theta1_x;
        const double scale =
            1.0 + a * a + delta * delta + std::abs(md.phi1 * md.theta1_x);
        worst = std::max(worst, std::abs(lhs - rhs) / scale);
    }
    s.add(tag("hill.quadratic-identity", in.label), worst, 1e-8,
          "60 random (lambda, t)");

    // shift flow: d/dt of (phi(1), a, thx(1)) via central differences must
    // match the first-order system (second-order consistency: halving the
    // step shrinks the defect by ~4)
    double worst_ratio = 0.0, worst_abs = 0.0;
    for (int i = 0; i < 12; ++i) {
        const double lam = std::uniform_real_distribution<double>(-5.0, 60.0)(rng);
        const double t = ut(rng);
        auto defect = [&](double hh) {
            const monodromy_data mp = monodromy(in.p, lam, t + hh);
            const monodromy_data mm = monodromy(in.p, lam, t - hh);
            const monodromy_data mc = monodromy(in.p, lam, t);
            const double phi = mc.phi1, a = 0.5 * (mc.phi1_x - mc.theta1),
                         thx = mc.theta1_x;
            const double dphi = (mp.phi1 - mm.phi1) / (2 * hh);
            const double da =
                (0.5 * (mp.phi1_x - mp.theta1) - 0.5 * (mm.phi1_x - mm.theta1)) /
                (2 * hh);
            const double dthx = (mp.theta1_x - mm.theta1_x) / (2 * hh);
            const double pt = in.p(t);
            const double scale = 1.0 + std::abs(lam) + std::abs(phi) +
                                 std::abs(a) + std::abs(thx);
            double d = std::abs(dphi - 2.0 * a);
            d = std::max(d, std::abs(da - (-thx - (lam - pt) * phi)));
            d = std::max(d, std::abs(dthx - (lam - pt) * dphi));
            return d / scale;
        };
        const double d1 = defect(1e-3);
        const double d2 = defect(5e-4);
        worst_abs = std::max(worst_abs, d1);
        if (d2 > 1e-9)  // above the roundoff floor: demand the h^2 rate
            worst_ratio = std::max(worst_ratio, d2 / std::max(d1, 1e-300));
    }
    const bool flow_ok = worst_abs <= 1e-4 && worst_ratio <= 0.4;
    s.add_flag(tag("hill.shift-riccati", in.label), flow_ok,
               std::max(worst_abs, worst_ratio),
               "first-order shift system, h^2 consistency at h=1e-3/5e-4");

    // large-lambda asymptotics of phi(1, lambda)
    const double pmax = std::max(std::abs(in.p.min_value()),
                                 std::abs(in.p.max_value()));
    const double C = 2.0 * (1.0 + pmax) * (1.0 + pmax);
    worst = 0.0;
    for (double lam : {1e3, 1e4}) {
        const monodromy_data md = monodromy(in.p, lam, 0.21);
        const double sq = std::sqrt(lam);
        const double free_phi = std::sin(sq) / sq;
        worst = std::max(worst, std::abs(md.phi1 - free_phi) * lam / C);
    }
    s.add(tag("hill.large-lambda", in.label), worst, 1.0,
          strfmt("|phi(1)-sin(sqrt)/sqrt| * lambda / C, C=%.3g", C));
}

// ----------------------------------------------------------------- spectrum

void check_spectrum_structure(suite& s, const instance& in) {
    const band_structure& b = in.bands;
    double worst = 0.0;
    std::string bad;

    if (!(b.nu0 <= b.alpha0 + 1e-12)) bad = "nu0 above alpha0";
    if (b.mass0_plus <= 0) bad = "mass at alpha0 not positive";
    double prev_hi = b.alpha0;
    for (const gap_info& g : b.gaps) {
        if (!(prev_hi <= g.alpha_minus + 1e-12)) bad = "band ordering broken";
        prev_hi = g.alpha_plus;
        if (!(g.alpha_minus <= g.mu + 1e-9 && g.mu <= g.alpha_plus + 1e-9))
            bad = strfmt("mu outside gap %d closure", g.n);
        if (!(g.alpha_minus <= g.nu + 1e-9 && g.nu <= g.alpha_plus + 1e-9))
            bad = strfmt("nu outside gap %d closure", g.n);
        if (g.open()) {
            if (!(g.mass_minus < 0.0 && g.mass_plus > 0.0))
                bad = strfmt("mass signs wrong in gap %d", g.n);
            for (int e = 0; e < 2; ++e) {
                const double alpha = e ? g.alpha_plus : g.alpha_minus;
                const lyapunov_data l = lyapunov(in.p, alpha, 0.0);
                const double target = (g.n % 2 == 0) ? 1.0 : -1.0;
                worst = std::max(worst, std::abs(l.delta - target));
            }
        } else if (g.width() > 1e-8) {
            bad = strfmt("closed gap %d too wide", g.n);
        }
    }
    s.add_flag(tag("spectrum.structure", in.label), bad.empty() && worst <= 1e-7,
               worst, bad.empty() ? "ordering, membership, masses, edge Delta"
                                  : bad);
}

void check_dirichlet_asymptotics(suite& s, const instance& cos2) {
    // smooth p: mu_n(t) = (pi n)^2 + mean(p) - <p(.+t), cos 2 pi n x> + O(1/n);
    // for a pure first harmonic every projection with n >= 2 vanishes.
    const band_structure wide = compute_bands(cos2.p, 40, std::nullopt, 1e-9);
    const dirichlet_neumann_points dn = dirichlet_neumann(cos2.p, wide, 0.3);
    double worst = 0.0;
    for (int n = 20; n <= 40; ++n) {
        const double target = pi * pi * n * n + cos2.p.mean_value();
        worst = std::max(worst, std::abs(dn.mu[n - 1] - target) * n);
    }
    s.add(tag("spectrum.dirichlet-asymptotics", cos2.label), worst, 0.5,
          "n in [20,40]: |mu_n - (pi n)^2 - mean| * n");
}

void check_dirichlet_winding(suite& s, const instance& kp) {
    // mu_n(t) crosses the midpoint of open gap n exactly 2n times per period
    std::string detail;
    bool ok = true;
    double resid = 0.0;
    for (int n = 1; n <= 2; ++n) {
        const gap_info& g = kp.bands.gap(n);
        if (!g.open()) continue;
        const double mid = 0.5 * (g.alpha_minus + g.alpha_plus);
        const int N = 2000;
        int crossings = 0;
        double prev = 0.0;
        for (int i = 0; i <= N; ++i) {
            const double t = static_cast<double>(i) / N;
            const dirichlet_neumann_points dn =
                dirichlet_neumann(kp.p, kp.bands, t);
            const double d = dn.mu[n - 1] - mid;
            if (i > 0 && prev * d < 0.0) ++crossings;
            prev = d;
        }
        detail += strfmt("gap %d: %d crossings (want %d); ", n, crossings, 2 * n);
        if (crossings != 2 * n) {
            ok = false;
            resid = std::abs(crossings - 2 * n);
        }
    }
    s.add_flag(tag("spectrum.dirichlet-winding", kp.label), ok, resid, detail);
}

void check_edge_curvature(suite& s, const instance& kp) {
    // at t0 with mu_n(t0) = alpha: d^2 mu/dt^2 = -4 M / (d phi(1)/d lambda)^2
    double worst = 0.0;
    std::string detail;
    const double h = 4e-3;
    for (int n = 1; n <= 2; ++n) {
        const gap_info& g = kp.bands.gap(n);
        if (!g.open()) continue;
        // even potential: at t0 = 0 the Dirichlet point sits on an edge
        const bool upper = std::abs(g.mu - g.alpha_plus) <
                           std::abs(g.mu - g.alpha_minus);
        const double alpha = upper ? g.alpha_plus : g.alpha_minus;
        if (std::abs(g.mu - alpha) > 1e-6) continue;  // not pinned: skip gap
        const double mass = upper ? g.mass_plus : g.mass_minus;
        const dirichlet_neumann_points dp =
            dirichlet_neumann(kp.p, kp.bands, h);
        const dirichlet_neumann_points dm =
            dirichlet_neumann(kp.p, kp.bands, -h);
        const double fd2 =
            (dp.mu[n - 1] - 2.0 * g.mu + dm.mu[n - 1]) / (h * h);
        const monodromy_data md = monodromy(kp.p, alpha, 0.0);
        const double pred = -4.0 * mass / (md.d_phi1 * md.d_phi1);
        const double rel = std::abs(fd2 - pred) / std::abs(pred);
        worst = std::max(worst, rel);
        detail += strfmt("gap %d: fd=%.6g pred=%.6g; ", n, fd2, pred);
    }
    s.add(tag("spectrum.edge-curvature", kp.label), worst, 0.05, detail);
}

// --------------------------------------------------------------------- weyl

void check_weyl(suite& s, const instance& in) {
    std::mt19937 rng(kSeed + 2);
    std::uniform_real_distribution<double> ut(0.0, 1.0);

    // Collect probe points strictly inside open gaps (plus the ground gap),
    // keeping only well-conditioned ones: where Delta^2 - 1 is below 1e-4
    // the branch root is hostage to the last bits of the integrator, and in
    // such micro-gaps the Dirichlet pole of m is never more than a whisker
    // away in t either.
    std::vector<double> probes;
    for (double lam : {in.bands.alpha0 - 1.0, in.bands.alpha0 - 6.0})
        probes.push_back(lam);
    for (const gap_info& g : in.bands.gaps)
        if (g.open()) {
            probes.push_back(g.alpha_minus + 0.27 * g.width());
            probes.push_back(g.alpha_minus + 0.71 * g.width());
        }
    std::erase_if(probes, [&](double lam) {
        const lyapunov_data ld = lyapunov(in.p, lam, 0.0);
        return ld.delta * ld.delta - 1.0 < 1e-4;
    });

    // product identity m+ m- = -thx/phi
    double worst = 0.0;
    int used = 0;
    for (double lam : probes) {
        for (double t : {0.0, 0.43}) {
            const m_value mp = weyl_m(in.p, in.bands, lam, t, side_t::right, 1);
            const m_value mm = weyl_m(in.p, in.bands, lam, t, side_t::left, 1);
            if (mp.pole || mm.pole) continue;
            const monodromy_data md = monodromy(in.p, lam, t);
            const double lhs = mp.value * mm.value;
            const double rhs = -md.theta1_x / md.phi1;
            worst = std::max(worst,
                             std::abs(lhs - rhs) / (1.0 + std::abs(rhs)));
            ++used;
        }
    }
    s.add(tag("weyl.product-identity", in.label), worst, 1e-8,
          strfmt("%d well-conditioned gap points", used));

    // Weyl-function shift flow: dm/dt = (p(t) - lambda) - m^2.  Central
    // difference at h = 1e-4; keep the probe shift away from the jumps of a
    // piecewise potential, where the derivative itself is discontinuous.
    std::vector<double> kinks, kink_vals;
    if (in.p.kind() == potential_kind::piecewise)
        in.p.segments(kinks, kink_vals);
    auto near_kink = [&](double t) {
        for (double c : kinks) {
            const double d = std::abs(t - c - std::round(t - c));
            if (d < 0.02) return true;
        }
        return false;
    };
    double worst_flow = 0.0;
    int flows = 0;
    for (double lam : probes) {
        double t = ut(rng);
        for (int k = 0; k < 50 && near_kink(t); ++k) t = ut(rng);
        if (near_kink(t)) continue;
        const m_value m0 = weyl_m(in.p, in.bands, lam, t, side_t::right, 1);
        if (m0.pole || std::abs(m0.value) > 20.0) continue;
        const double h = 1e-4;
        const m_value mp = weyl_m(in.p, in.bands, lam, t + h, side_t::right, 1);
        const m_value mm = weyl_m(in.p, in.bands, lam, t - h, side_t::right, 1);
        if (mp.pole || mm.pole) continue;
        const double fd = (mp.value - mm.value) / (2 * h);
        const double rhs = (in.p(t) - lam) - m0.value * m0.value;
        const double defect = std::abs(fd - rhs) /
                              (1.0 + std::abs(lam) + m0.value * m0.value);
        worst_flow = std::max(worst_flow, defect);
        ++flows;
    }
    s.add(tag("weyl.riccati-flow", in.label), worst_flow, 1e-5,
          strfmt("%d pole-free points, h=1e-4", flows));

    // sign rule below nu0(t): +-m(+-) < 0.  The lowest Neumann point moves
    // with the shift, so it has to be recomputed per t.
    bool signs_ok = true;
    for (double t : {0.0, 0.3}) {
        const double nu0_t = dirichlet_neumann(in.p, in.bands, t).nu0;
        for (double off : {0.5, 2.5, 10.0}) {
            const double lam = nu0_t - off;
            const m_value mp = weyl_m(in.p, in.bands, lam, t, side_t::right, 1);
            const m_value mm = weyl_m(in.p, in.bands, lam, t, side_t::left, 1);
            if (!(mp.value < 0.0 && mm.value > 0.0)) signs_ok = false;
        }
    }
    s.add_flag(tag("weyl.sign-below-nu0", in.label), signs_ok,
               signs_ok ? 0.0 : 1.0, "m+ < 0 < m- below nu0(t), t in {0, 0.3}");

    // ground sum rules: integral of zeta vanishes below the spectrum;
    // integral of zeta^2 at the spectral bottom gives mean(p) - alpha0
    const int N = 1024;  // composite Simpson over one period
    auto simpson = [&](auto&& f) {
        double acc = f(0.0) + f(1.0);
        for (int i = 1; i < N; ++i)
            acc += f(static_cast<double>(i) / N) * ((i % 2) ? 4.0 : 2.0);
        return acc / (3.0 * N);
    };
    const double lam_low = in.bands.alpha0 - 2.0;
    const double i1 = simpson([&](double t) {
        return zeta(in.p, in.bands, lam_low, t).value;
    });
    const double i2 = simpson([&](double t) {
        const double z = zeta(in.p, in.bands, in.bands.alpha0, t).value;
        return z * z;
    });
    const double target2 = in.p.mean_value() - in.bands.alpha0;
    const double resid =
        std::max(std::abs(i1), std::abs(i2 - target2) / (1.0 + std::abs(target2)));
    s.add(tag("weyl.ground-sum-rule", in.label), resid, 1e-5,
          strfmt("int zeta = %.3g, int zeta^2 - target = %.3g", i1,
                 i2 - target2));
}

// ----------------------------------------------------------------- junction

void check_junction(suite& s, const instance& a, const instance& b) {
    const std::string pl = a.label + "+" + b.label;
    const junction j = make_junction(a.p, b.p, 0.0, 5, std::nullopt, 1e-9);
    const std::vector<gap_interval> comps = junction_gaps(j);

    // count bound on every component and sheet
    int worst_count = 0;
    bool scan_ok = true;
    std::vector<std::vector<gap_state>> sheet1_states(comps.size());
    for (std::size_t c = 0; c < comps.size(); ++c) {
        for (int sheet = 1; sheet <= 4; ++sheet) {
            std::vector<gap_state> st;
            try {
                st = find_gap_states(j, static_cast<int>(c), sheet);
            } catch (const error&) {
                scan_ok = false;
                continue;
            }
            int counted = 0;
            for (const gap_state& g : st)
                if (g.kind != state_kind::borderline) ++counted;
            worst_count = std::max(worst_count, counted);
            if (sheet == 1) sheet1_states[c] = std::move(st);
        }
    }
    s.add_flag(tag("junction.count-bound", pl), scan_ok && worst_count <= 2,
               worst_count, strfmt("%zu components, sheets 1-4", comps.size()));

    // even-sides counting rule (both built-ins are even, shift 0)
    int compared = 0, mismatches = 0;
    for (std::size_t c = 1; c < comps.size(); ++c) {
        const count_prediction cp = count_predict_even(j, static_cast<int>(c));
        if (cp == count_prediction::indeterminate) continue;
        int counted = 0;
        for (const gap_state& g : sheet1_states[c])
            if (g.kind != state_kind::borderline) ++counted;
        ++compared;
        if ((cp == count_prediction::one) != (counted == 1)) ++mismatches;
    }
    s.add_flag(tag("junction.even-count-rule", pl), mismatches == 0, mismatches,
               strfmt("%d determinate components", compared));

    // sheet-2 duality against the swapped junction
    const junction js = swapped(j);
    double worst_w = 0.0, worst_root = 0.0;
    for (std::size_t c = 0; c < comps.size(); ++c) {
        const gap_interval& gi = comps[c];
        const double lo = gi.lo_infinite ? gi.hi - 5.0 : gi.lo;
        for (int k = 1; k <= 20; ++k) {
            const double lam = lo + (gi.hi - lo) * k / 21.0;
            const w_value w2 = wronskian(j, lam, 2);
            const w_value w1 = wronskian(js, lam, 1);
            if (w2.pole || w1.pole) continue;
            const double scale =
                1.0 + std::abs(w2.value) + std::abs(w1.value);
            worst_w = std::max(worst_w, std::abs(w2.value + w1.value) / scale);
        }
        worst_root =
            std::max(worst_root, swap_duality_check(j, static_cast<int>(c)));
    }
    s.add(tag("junction.swap-duality", pl), std::max(worst_w, worst_root / 1e2),
          1e-10, "w on sheet 2 vs swapped sheet 1 (20 pts/component)");

    // no sheet-1 roots at or below the nu floor
    const ground_state_info gs = ground_state_rules(j);
    bool below_ok = true;
    double prev = 0.0;
    for (int i = 0; i <= 400; ++i) {
        const double lam = gs.nu_floor - 20.0 + 20.0 * i / 400.0;
        const w_value w = wronskian(j, lam, 1);
        if (i > 0 && prev * w.value < 0.0) below_ok = false;
        if (!w.pole) prev = w.value;
    }
    for (const auto& st : sheet1_states[0])
        if (st.lambda <= gs.nu_floor) below_ok = false;
    s.add_flag(tag("junction.no-roots-below-nu0", pl), below_ok,
               below_ok ? 0.0 : 1.0,
               strfmt("scan of (nu0-20, nu0], nu0=%.6g", gs.nu_floor));
}

// -------------------------------------------------------------- dislocation

void check_dislocation(suite& s, const instance& kp) {
    const std::string& L = kp.label;
    std::vector<double> t_grid;
    for (int i = 0; i <= 40; ++i) t_grid.push_back(2.0 * i / 40.0);

    int worst_sheet = 0, worst_gap = 0;
    double worst_period = 0.0;
    double worst_wres = 0.0;
    int cross_checked = 0;
    for (int n = 1; n <= 2; ++n) {
        if (!kp.bands.gap(n).open()) continue;
        const trajectory tr = trace_trajectories(kp.p, kp.bands, n, t_grid);
        // per-shift counts
        for (std::size_t i = 0; i < tr.samples.size();) {
            std::size_t jx = i;
            int per_sheet[3] = {0, 0, 0};
            while (jx < tr.samples.size() &&
                   tr.samples[jx].t == tr.samples[i].t) {
                if (tr.samples[jx].kind != state_kind::borderline)
                    ++per_sheet[tr.samples[jx].sheet];
                ++jx;
            }
            worst_sheet = std::max({worst_sheet, per_sheet[1], per_sheet[2]});
            worst_gap = std::max(worst_gap, per_sheet[1] + per_sheet[2]);
            i = jx;
        }
        worst_period = std::max(worst_period, periodicity_check(tr, kp.bands));
        // zero-set agreement: the Wronskian itself vanishes at traced roots
        for (const trajectory_sample& sm : tr.samples) {
            if (sm.kind == state_kind::borderline) continue;
            const double w = dislocation_wronskian(kp.p, kp.bands, sm.lambda,
                                                   sm.t, sm.sheet);
            if (!std::isfinite(w)) continue;
            const double d = std::min(sm.lambda - kp.bands.gap(n).alpha_minus,
                                      kp.bands.gap(n).alpha_plus - sm.lambda);
            if (d < 1e-4) continue;  // edge neighborhood: w loses accuracy
            worst_wres = std::max(worst_wres, std::abs(w));
            ++cross_checked;
        }
    }
    s.add_flag(tag("dislocation.count-bound", L),
               worst_sheet <= 2 && worst_gap <= 4,
               std::max(worst_sheet, worst_gap), "per-sheet <= 2, per-gap <= 4");
    s.add(tag("dislocation.periodicity", L), worst_period, 1e-6,
          "unit-shift recurrence of the root set, gaps 1-2");
    s.add(tag("dislocation.phi-wronskian-zeros", L), worst_wres, 1e-8,
          strfmt("|w| at %d traced interior roots", cross_checked));

    // swap duality at a fixed shift: sheet-2 roots of the dislocation are
    // sheet-1 roots of the reversed dislocation
    const double t0 = 0.3;
    const junction jd = make_junction(kp.p, kp.p, t0, 4, std::nullopt, 1e-9);
    const junction jr = swapped(jd);
    double worst_pair = 0.0;
    int paired = 0;
    const std::vector<gap_interval> comps = junction_gaps(jd);
    for (std::size_t c = 1; c < comps.size(); ++c) {
        const auto fwd = find_gap_states(jd, static_cast<int>(c), 2);
        const auto rev = find_gap_states(jr, static_cast<int>(c), 1);
        for (const gap_state& f : fwd) {
            if (f.kind == state_kind::borderline) continue;
            double best = 1e300;
            for (const gap_state& r : rev)
                best = std::min(best, std::abs(r.lambda - f.lambda));
            worst_pair = std::max(worst_pair, best);
            ++paired;
        }
    }
    s.add(tag("dislocation.swap-duality", L), worst_pair, 1e-8,
          strfmt("%d sheet-2 roots matched to the reversed operator", paired));

    // edge growth identity: phi(1,alpha,t) * dzeta/dt = -(-1)^n * 2 M *
    // [psi_x^2 - (p - alpha) psi^2]; the edge dependence sits entirely in
    // the sign of the effective mass M.
    double worst_rel = 0.0;
    std::string detail;
    const double h = 1e-4;
    for (int n = 1; n <= 2; ++n) {
        const gap_info& g = kp.bands.gap(n);
        if (!g.open()) continue;
        for (int e = 0; e < 2; ++e) {
            const bool upper = e == 1;
            const double alpha = upper ? g.alpha_plus : g.alpha_minus;
            const double mass = upper ? g.mass_plus : g.mass_minus;
            const double t = 0.3;
            const dirichlet_neumann_points dn =
                dirichlet_neumann(kp.p, kp.bands, t);
            if (std::abs(dn.mu[n - 1] - alpha) < 1e-3) continue;  // mu on edge
            const monodromy_data md = monodromy(kp.p, alpha, t);
            const double zp = zeta(kp.p, kp.bands, alpha, t + h).value;
            const double zm = zeta(kp.p, kp.bands, alpha, t - h).value;
            const double lhs = md.phi1 * (zp - zm) / (2 * h);
            const edge_eigenfunction ef =
                edge_eigenfunction_at(kp.p, kp.bands, n, upper);
            double psi = 0.0, psix = 0.0;
            ef.eval(kp.p, t, &psi, &psix);
            const double core =
                psix * psix - (kp.p(t) - alpha) * psi * psi;
            const double sign = (n % 2) ? 1.0 : -1.0;
            const double rhs = sign * 2.0 * mass * core;
            const double rel = std::abs(lhs - rhs) /
                               std::max(std::abs(rhs), 1e-12);
            worst_rel = std::max(worst_rel, rel);
            detail += strfmt("g%d%c %.3g/%.3g; ", n, upper ? '+' : '-', lhs,
                             rhs);
        }
    }
    s.add(tag("dislocation.edge-growth-identity", L), worst_rel, 0.05, detail);
}

// --------------------------------------------------------------- half-solid

void check_halfsolid(suite& s, const instance& kp) {
    const std::string& L = kp.label;

    // a level above the second gap: both finite gaps are fully below s
    const gap_info& g2 = kp.bands.gap(2);
    const double s_high = g2.alpha_plus + 5.0123;
    const half_solid hs = make_half_solid(kp.p, s_high, 4, std::nullopt, 1e-9);

    // gap rule: components are exactly the truncated gap intersections
    const std::vector<hs_component> comps = hs_components(hs);
    bool rule_ok = !comps.empty() && comps[0].lo_infinite &&
                   comps[0].hi == std::min(kp.bands.alpha0, s_high);
    for (const hs_component& c : comps) {
        if (c.lo_infinite) continue;
        const gap_info& g = kp.bands.gap(c.gap_index);
        const double lo = g.alpha_minus, hi = std::min(g.alpha_plus, s_high);
        if (std::abs(c.lo - lo) > 1e-12 || std::abs(c.hi - hi) > 1e-12 ||
            (hi < g.alpha_plus) != c.hi_is_s)
            rule_ok = false;
    }
    s.add_flag(tag("halfsolid.gap-rule", L), rule_ok, rule_ok ? 0.0 : 1.0,
               strfmt("%zu components below s=%.6g", comps.size(), s_high));

    // even-potential sum rule: sheet-4 count + sheet-1 count = 1 on every
    // open gap entirely below s (shift 0)
    const std::vector<hs_count_row> counts = hs_counts(hs, 0.0);
    int bad_rows = 0, counted_rows = 0;
    for (const hs_count_row& row : counts) {
        if (row.gap_index < 1) continue;
        const gap_info& g = kp.bands.gap(row.gap_index);
        if (!g.open() || g.alpha_plus >= s_high) continue;
        ++counted_rows;
        if (row.n_sheet[0] + row.n_sheet[3] != 1) ++bad_rows;
    }
    s.add_flag(tag("halfsolid.even-sum-rule", L), bad_rows == 0, bad_rows,
               strfmt("%d open gaps below s", counted_rows));

    // sheet distinction: above the first band the four sheets are genuinely
    // different continuations
    const gap_info& g1 = kp.bands.gap(1);
    const double lam_mid = 0.5 * (g1.alpha_minus + g1.alpha_plus);
    const double w3 = hs_wronskian(hs, lam_mid, 0.3, 3);
    const double w4 = hs_wronskian(hs, lam_mid, 0.3, 4);
    s.add_flag(tag("halfsolid.sheet-distinction", L),
               std::abs(w3 - w4) > 1e-6, std::abs(w3 - w4),
               strfmt("w3=%.6g w4=%.6g mid-gap-1", w3, w4));

    // ground-state threshold: pick shifts with negative / positive seam slope
    double t_neg = -1.0, t_pos = -1.0, m_pos = 0.0;
    for (int i = 0; i < 64; ++i) {
        const double t = static_cast<double>(i) / 64.0;
        const double z = zeta(kp.p, kp.bands, kp.bands.alpha0, t).value;
        if (z < -0.05 && t_neg < 0) t_neg = t;
        if (z > 0.05 && t_pos < 0) {
            t_pos = t;
            m_pos = z;
        }
    }

    if (t_neg >= 0) {
        const double s_low = kp.bands.alpha0 - 1.0123;
        const half_solid hs_low =
            make_half_solid(kp.p, s_low, 4, std::nullopt, 1e-9);
        const int cnt = hs_ground_count(hs_low, t_neg);
        s.add_flag(tag("halfsolid.ground-absence", L), cnt == 0, cnt,
                   strfmt("m+(bottom)=%.4g at t=%.4g, s=%.6g",
                          zeta(kp.p, kp.bands, kp.bands.alpha0, t_neg).value,
                          t_neg, s_low));
    }

    if (t_pos >= 0) {
        const ground_threshold th =
            hs_ground_threshold(make_half_solid(kp.p, kp.bands.alpha0 - 2.0123,
                                                4, std::nullopt, 1e-9),
                                t_pos);
        // sweep 20 levels across the threshold s* = alpha0 + m0^2
        const double lo = th.nu0, hi = th.s_star;
        int flips_ok = 1;
        std::string detail =
            strfmt("m0=%.4g s*=%.8g nu0=%.6g t=%.4g: ", m_pos, th.s_star,
                   th.nu0, t_pos);
        for (int k = 0; k < 20; ++k) {
            // 10 below the threshold (inside (nu0, s*)), 10 above
            const bool below = k < 10;
            const double frac = (k % 10 + 0.5) / 10.0;
            const double sv = below ? lo + (hi - lo) * (0.2 + 0.78 * frac)
                                    : hi + (0.02 + frac) * std::max(1.0, hi - lo);
            half_solid hsk = make_half_solid(kp.p, sv, 4, std::nullopt, 1e-9);
            const int cnt = hs_ground_count(hsk, t_pos);
            if (cnt != (below ? 1 : 0)) {
                flips_ok = 0;
                detail += strfmt("s=%.8g -> %d states; ", sv, cnt);
            }
        }
        s.add_flag(tag("halfsolid.ground-threshold", L), flips_ok == 1,
                   flips_ok ? 0.0 : 1.0, detail);
    }
}

// ------------------------------------------------------------------- report

void check_report(suite& s) {
    report r;
    r.columns = {"x", "n", "flag", "text", "none"};
    r.add_meta("alpha", "1");
    r.add_meta("beta", "two");
    r.add_row({0.1 + 0.2, static_cast<long long>(-3), true,
               std::string("a,\"b\"\n"), std::monostate{}});
    const bool same_csv = r.to_csv() == r.to_csv();
    const bool same_json = r.to_json() == r.to_json();
    s.add_flag("report.determinism", same_csv && same_json,
               same_csv && same_json ? 0.0 : 1.0,
               "double render of CSV and JSON is byte-identical");
}

}  // namespace

std::vector<check_result> run_verify_suite(const run_config& cfg) {
    std::vector<check_result> results;
    suite s{results};

    // built-in instances
    potential kp_p =
        potential::make_piecewise({0.0, 0.25, 0.75}, {0.0, 30.0, 0.0});
    kp_p.even_hint = true;
    potential cos_p = potential::make_fourier(0.0, {{1, 2.0, 0.0}});
    cos_p.even_hint = true;
    potential const_p = potential::make_constant(5.0);
    const_p.even_hint = true;

    std::vector<instance> core;
    core.push_back({"kp", kp_p, compute_bands(kp_p, 4, std::nullopt, 1e-9)});
    core.push_back({"cos2", cos_p, compute_bands(cos_p, 4, std::nullopt, 1e-9)});
    core.push_back(
        {"const5", const_p, compute_bands(const_p, 4, std::nullopt, 1e-9)});

    // configured potentials join the generic checks (deduplicated against
    // the built-ins by their serialized form)
    std::vector<instance> generic = core;
    auto add_cfg = [&](const std::optional<potential>& p,
                       const std::string& label) {
        if (!p) return;
        for (const instance& in : generic)
            if (in.p.serialize() == p->serialize()) return;
        generic.push_back(
            {label, *p,
             compute_bands(*p, std::min(cfg.n_max, 6), std::nullopt, cfg.tol)});
    };
    add_cfg(cfg.right, "config-right");
    add_cfg(cfg.left, "config-left");

    for (const instance& in : generic) {
        check_potential(s, in);
        check_hill(s, in);
        check_spectrum_structure(s, in);
        check_weyl(s, in);
    }

    const instance& kp = core[0];
    const instance& cos2 = core[1];

    check_dirichlet_asymptotics(s, cos2);
    check_dirichlet_winding(s, kp);
    check_edge_curvature(s, kp);
    check_junction(s, kp, cos2);
    check_dislocation(s, kp);
    check_halfsolid(s, kp);
    check_report(s);

    return results;
}

std::string verify_text(const std::vector<check_result>& results) {
    std::string out;
    int failed = 0;
    for (const check_result& r : results) {
        if (!r.passed) ++failed;
        out += r.passed ? "ok   " : "FAIL ";
        out += r.name;
        out += strfmt("  residual=%s tol=%s", fmt17(r.residual).c_str(),
                      fmt17(r.tolerance).c_str());
        if (!r.detail.empty()) out += "  (" + r.detail + ")";
        out += '\n';
    }
    if (failed == 0)
        out += strfmt("verify: PASS (%zu checks)\n", results.size());
    else
        out += strfmt("verify: FAIL (%d of %zu failed)\n", failed,
                      results.size());
    return out;
}

report verify_report(const run_config& cfg,
                     const std::vector<check_result>& results) {
    report r;
    r.columns = {"name", "passed", "residual", "tolerance", "detail"};
    r.add_meta("subcommand", "verify");
    r.add_meta("tol", fmt17(cfg.tol));
    int failed = 0;
    for (const check_result& c : results) {
        if (!c.passed) ++failed;
        r.add_row({c.name, c.passed, c.residual, c.tolerance, c.detail});
    }
    r.add_meta("checks", std::to_string(results.size()));
    r.add_meta("failed", std::to_string(failed));
    return r;
}

}  // namespace hj
