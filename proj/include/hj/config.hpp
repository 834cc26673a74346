// config.hpp — run configuration: INI-style text sections describing the
// potentials and run parameters for the command-line front-end.
//
// Schema (all sections optional unless a subcommand needs them):
//
//   [potential.left] / [potential.right] / [potential]   (bare = right)
//     kind = constant | piecewise | fourier | samples
//     period = 1.0
//     value = 5.0                          (constant)
//     breakpoints = [0, 0.25, 0.75]        (piecewise)
//     values = [0, 30, 0]
//     mean = 0.0                           (fourier)
//     coefficients = [[1, 2.0, 0.0]]       (fourier triples [n, a_n, b_n])
//     samples = [ ... ]                    (samples, uniform over a period)
//     even = true                          (optional parity hint)
//
//   [run]
//     mode = junction | dislocation | half-solid
//     nmax = 8
//     lambda_max = 250.0
//     t = 0.0              junction shift / half-solid shift
//     tsteps = 201         dislocation trace resolution
//     trange = [0, 2]      dislocation trace window
//     s = 5.0              half-solid vacuum level
//     tol = 1e-9           global root tolerance
//     format = csv | json
//     output = path.csv
//
// Parse errors carry line and key diagnostics.

#pragma once

#include <optional>
#include <string>

#include "hj/potential.hpp"

namespace hj {

struct run_config {
    std::optional<potential> left;
    std::optional<potential> right;
    std::string mode;  // "", "junction", "dislocation", "half-solid"
    int n_max = 8;
    std::optional<double> lambda_max;
    double t = 0.0;
    int t_steps = 201;
    double t_range_lo = 0.0;
    double t_range_hi = 2.0;
    std::optional<double> s;
    double tol = 1e-9;
    std::string format = "csv";
    std::string output;

    // The potential a single-potential subcommand should use.
    const potential& primary() const;
    // Both sides for junction-type subcommands (throws if one is missing).
    const potential& left_side() const;
    const potential& right_side() const;
};

// Parse a full config file.  Throws hj::error(status::invalid_argument) with
// line/key diagnostics on malformed input.
run_config parse_config(const std::string& text);

// Parse just a potential section body (the key=value lines, no header).
potential parse_potential_text(const std::string& body);

}  // namespace hj
