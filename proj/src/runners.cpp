// runners.cpp — subcommand implementations: config in, report out.

#include "hj/runners.hpp"

#include <algorithm>
#include <cmath>

#include "hj/halfsolid.hpp"
#include "hj/verify.hpp"

namespace hj {
namespace {

const char* kind_name(state_kind k) {
    switch (k) {
        case state_kind::eigenvalue: return "eigenvalue";
        case state_kind::resonance: return "resonance";
        case state_kind::borderline: return "borderline";
    }
    return "?";
}

report::cell num_or_empty(double x) {
    if (!std::isfinite(x)) return std::monostate{};
    return x;
}

void common_meta(report& r, const run_config& cfg, const char* subcommand) {
    r.add_meta("tool", "hj");
    r.add_meta("version", "1.0.0");
    r.add_meta("defaults", "1");
    r.add_meta("subcommand", subcommand);
    if (cfg.left) r.add_meta("potential_left", cfg.left->describe());
    if (cfg.right) r.add_meta("potential_right", cfg.right->describe());
    r.add_meta("nmax", std::to_string(cfg.n_max));
    r.add_meta("lambda_max",
               cfg.lambda_max ? fmt17(*cfg.lambda_max) : std::string("auto"));
    r.add_meta("tol", fmt17(cfg.tol));
}

std::vector<double> shift_grid(const run_config& cfg) {
    std::vector<double> t_grid;
    const int n = std::max(cfg.t_steps, 2);
    for (int i = 0; i < n; ++i)
        t_grid.push_back(cfg.t_range_lo + (cfg.t_range_hi - cfg.t_range_lo) *
                                              i / (n - 1.0));
    return t_grid;
}

}  // namespace

report run_bands(const run_config& cfg) {
    const potential& p = cfg.primary();
    const band_structure bands =
        compute_bands(p, cfg.n_max, cfg.lambda_max, cfg.tol, cfg.t);

    report r;
    r.columns = {"n",    "alpha_minus", "alpha_plus", "gap_width",
                 "mu_n", "nu_n",        "M_minus",    "M_plus"};
    common_meta(r, cfg, "bands");
    r.add_meta("t", fmt17(cfg.t));
    if (!bands.complete) r.add_meta("complete", "false");
    for (const std::string& w : bands.warnings) r.add_meta("warning", w);

    r.add_row({static_cast<long long>(0), std::monostate{}, bands.alpha0,
               std::monostate{}, std::monostate{}, bands.nu0,
               std::monostate{}, bands.mass0_plus});
    for (const gap_info& g : bands.gaps)
        r.add_row({static_cast<long long>(g.n), g.alpha_minus, g.alpha_plus,
                   g.width(), g.mu, g.nu, num_or_empty(g.mass_minus),
                   num_or_empty(g.mass_plus)});
    return r;
}

report run_junction_scan(const run_config& cfg) {
    const junction j = make_junction(cfg.left_side(), cfg.right_side(), cfg.t,
                                     cfg.n_max, cfg.lambda_max, cfg.tol);
    report r;
    r.columns = {"gap_index", "sheet", "lambda", "kind", "residual"};
    common_meta(r, cfg, "junction-scan");
    r.add_meta("t", fmt17(cfg.t));

    const std::vector<gap_interval> comps = junction_gaps(j);
    for (std::size_t c = 0; c < comps.size(); ++c)
        for (int sheet = 1; sheet <= 4; ++sheet)
            for (const gap_state& st :
                 find_gap_states(j, static_cast<int>(c), sheet,
                                 std::max(cfg.tol, 1e-10)))
                r.add_row({static_cast<long long>(c),
                           static_cast<long long>(sheet), st.lambda,
                           std::string(kind_name(st.kind)), st.residual});
    return r;
}

report run_dislocation_trace(const run_config& cfg) {
    const potential& p = cfg.primary();
    const band_structure bands =
        compute_bands(p, cfg.n_max, cfg.lambda_max, cfg.tol);
    const std::vector<double> t_grid = shift_grid(cfg);

    report r;
    r.columns = {"t", "gap_index", "sheet", "lambda", "kind", "edge_event"};
    common_meta(r, cfg, "dislocation-trace");
    r.add_meta("t_steps", std::to_string(cfg.t_steps));
    r.add_meta("t_range", fmt17(cfg.t_range_lo) + ".." + fmt17(cfg.t_range_hi));

    struct row_t {
        double t;
        int gap;
        const trajectory_sample* s;
    };
    std::vector<trajectory> traces;
    for (const gap_info& g : bands.gaps) {
        if (!g.open()) continue;
        traces.push_back(trace_trajectories(p, bands, g.n, t_grid));
        const trajectory& tr = traces.back();
        std::string events;
        for (double te : tr.edge_events) {
            if (!events.empty()) events += ",";
            events += fmt17(te);
        }
        r.add_meta(strfmt("edge_events.gap%d", g.n), events);
        for (const std::string& d : tr.diagnostics)
            r.add_meta(strfmt("diagnostic.gap%d", g.n), d);
    }
    // rows sorted by (t, gap, lambda): merge the per-gap traces
    std::vector<row_t> rows;
    for (const trajectory& tr : traces)
        for (const trajectory_sample& s : tr.samples)
            rows.push_back({s.t, tr.gap_index, &s});
    std::stable_sort(rows.begin(), rows.end(),
                     [](const row_t& x, const row_t& y) {
                         if (x.t != y.t) return x.t < y.t;
                         if (x.gap != y.gap) return x.gap < y.gap;
                         return x.s->lambda < y.s->lambda;
                     });
    for (const row_t& row : rows)
        r.add_row({row.t, static_cast<long long>(row.gap),
                   static_cast<long long>(row.s->sheet), row.s->lambda,
                   std::string(kind_name(row.s->kind)), row.s->edge_event});
    return r;
}

report run_half_solid_scan(const run_config& cfg) {
    if (!cfg.s)
        fail(status::invalid_argument,
             "half-solid-scan requires the solid level s");
    const half_solid hs = make_half_solid(cfg.primary(), *cfg.s, cfg.n_max,
                                          cfg.lambda_max, cfg.tol);
    report r;
    r.columns = {"s", "t", "gap_index", "sheet", "lambda", "kind"};
    common_meta(r, cfg, "half-solid-scan");
    r.add_meta("s", fmt17(*cfg.s));
    r.add_meta("t", fmt17(cfg.t));

    const std::vector<hs_component> comps = hs_components(hs);
    for (std::size_t c = 0; c < comps.size(); ++c)
        for (int sheet = 1; sheet <= 4; ++sheet)
            for (const gap_state& st :
                 hs_find_states(hs, static_cast<int>(c), sheet, cfg.t,
                                std::max(cfg.tol, 1e-10)))
                r.add_row({*cfg.s, cfg.t,
                           static_cast<long long>(comps[c].gap_index),
                           static_cast<long long>(sheet), st.lambda,
                           std::string(kind_name(st.kind))});
    return r;
}

std::string run_rendered(const run_config& cfg, const std::string& subcommand,
                         int* verify_failed) {
    if (verify_failed) *verify_failed = 0;
    if (subcommand == "bands") return run_bands(cfg).render(cfg.format);
    if (subcommand == "junction-scan")
        return run_junction_scan(cfg).render(cfg.format);
    if (subcommand == "dislocation-trace")
        return run_dislocation_trace(cfg).render(cfg.format);
    if (subcommand == "half-solid-scan")
        return run_half_solid_scan(cfg).render(cfg.format);
    if (subcommand == "verify") {
        const std::vector<check_result> results = run_verify_suite(cfg);
        int failed = 0;
        for (const check_result& c : results)
            if (!c.passed) ++failed;
        if (verify_failed) *verify_failed = failed;
        return verify_text(results);
    }
    fail(status::invalid_argument, "unknown subcommand: " + subcommand);
}

}  // namespace hj
