// runners.hpp — the batch analyses behind the command-line subcommands:
// each one turns a run_config into a tabular report (or, for the verify
// suite, a text listing).

#pragma once

#include <string>

#include "hj/config.hpp"
#include "hj/report.hpp"

namespace hj {

// `bands`: band/gap table of the primary potential.
// Columns: n, alpha_minus, alpha_plus, gap_width, mu_n, nu_n, M_minus, M_plus.
// Row n = 0 carries the semi-infinite gap (alpha_plus = bottom of the
// spectrum, nu_n = nu0, M_plus = bottom effective mass); cells that do not
// exist for a row (Dirichlet point of the ground gap, masses of a closed
// gap) are empty.
report run_bands(const run_config& cfg);

// `junction-scan`: states of the two-potential interface operator at the
// configured shift, all gap components, sheets 1..4.
// Columns: gap_index, sheet, lambda, kind, residual.
report run_junction_scan(const run_config& cfg);

// `dislocation-trace`: trajectories of all open gaps of the primary
// potential over the configured shift grid.
// Columns: t, gap_index, sheet, lambda, kind, edge_event.
report run_dislocation_trace(const run_config& cfg);

// `half-solid-scan`: states of the half-solid operator at the configured
// (s, t), all components, sheets 1..4.
// Columns: s, t, gap_index, sheet, lambda, kind.
report run_half_solid_scan(const run_config& cfg);

// Dispatch by subcommand name; returns the rendered output document
// (CSV/JSON per cfg.format; the verify listing is plain text).  For
// "verify", *verify_failed receives the number of failed checks (0 for the
// data subcommands).  Unknown names raise invalid_argument.
std::string run_rendered(const run_config& cfg, const std::string& subcommand,
                         int* verify_failed);

}  // namespace hj
