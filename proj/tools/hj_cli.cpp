// hj_cli.cpp — command-line front-end over the C API (include/hj.h).
//
// Subcommands: bands, junction-scan, dislocation-trace, half-solid-scan,
// verify.  Exit codes: 0 success, 1 verification/computation failure,
// 2 configuration or usage error.

#include <cstdio>
#include <cstring>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "hj.h"

namespace {

struct flag_values {
    std::string config_path;
    int nmax = 8;
    double lambda_max = 0.0;
    int t_steps = 201;
    double s = 0.0;
    double t = 0.0;
    double tol = 1e-9;
    std::string output;
    std::string format;
};

// Attach the common flag set to a subcommand; returns the option pointers so
// the driver can tell which ones the user actually passed.
struct flag_opts {
    CLI::Option* config = nullptr;
    CLI::Option* nmax = nullptr;
    CLI::Option* lambda_max = nullptr;
    CLI::Option* t_steps = nullptr;
    CLI::Option* s = nullptr;
    CLI::Option* t = nullptr;
    CLI::Option* tol = nullptr;
    CLI::Option* output = nullptr;
    CLI::Option* format = nullptr;
};

flag_opts add_flags(CLI::App* cmd, flag_values& v) {
    flag_opts o;
    o.config = cmd->add_option("--config", v.config_path, "config file path");
    o.nmax = cmd->add_option("--nmax", v.nmax, "number of gaps (default 8)");
    o.lambda_max =
        cmd->add_option("--lambda-max", v.lambda_max, "energy scan ceiling");
    o.t_steps = cmd->add_option("--t-steps", v.t_steps,
                                "trace resolution (default 201)");
    o.s = cmd->add_option("--s", v.s, "half-solid level");
    o.t = cmd->add_option("--t", v.t, "interface shift");
    o.tol = cmd->add_option("--tol", v.tol, "root tolerance (default 1e-9)");
    o.output = cmd->add_option("--output", v.output, "output file (default stdout)");
    o.format = cmd->add_option("--format", v.format, "csv | json")
                   ->check(CLI::IsMember({"csv", "json"}));
    return o;
}

int fail_with(const char* stage, hj_status st) {
    std::fprintf(stderr, "hj: %s: %s\n", stage, hj_last_error());
    return st == HJ_EINVAL || st == HJ_EIO ? 2 : 1;
}

int run_subcommand(const std::string& name, const flag_values& v,
                   const flag_opts& o) {
    std::string config_text;
    if (!v.config_path.empty()) {
        std::ifstream f(v.config_path, std::ios::binary);
        if (!f) {
            std::fprintf(stderr, "hj: cannot read config file: %s\n",
                         v.config_path.c_str());
            return 2;
        }
        std::ostringstream ss;
        ss << f.rdbuf();
        config_text = ss.str();
    }

    hj_config* cfg = nullptr;
    if (hj_status st = hj_config_parse(config_text.c_str(), &cfg))
        return fail_with("config", st);
    std::unique_ptr<hj_config, decltype(&hj_config_free)> guard(
        cfg, &hj_config_free);

    auto apply = [&](CLI::Option* opt, const char* key,
                     const std::string& val) -> hj_status {
        if (!opt || opt->count() == 0) return HJ_OK;
        return hj_config_set(cfg, key, val.c_str());
    };
    auto num = [](double x) {
        char buf[40];
        std::snprintf(buf, sizeof buf, "%.17g", x);
        return std::string(buf);
    };
    hj_status st = HJ_OK;
    if ((st = apply(o.nmax, "nmax", std::to_string(v.nmax)))) return fail_with("flags", st);
    if ((st = apply(o.lambda_max, "lambda_max", num(v.lambda_max)))) return fail_with("flags", st);
    if ((st = apply(o.t_steps, "tsteps", std::to_string(v.t_steps)))) return fail_with("flags", st);
    if ((st = apply(o.s, "s", num(v.s)))) return fail_with("flags", st);
    if ((st = apply(o.t, "t", num(v.t)))) return fail_with("flags", st);
    if ((st = apply(o.tol, "tol", num(v.tol)))) return fail_with("flags", st);
    if ((st = apply(o.output, "output", v.output))) return fail_with("flags", st);
    if ((st = apply(o.format, "format", v.format))) return fail_with("flags", st);

    char* doc = nullptr;
    int verify_failed = 0;
    if ((st = hj_run(cfg, name.c_str(), &doc, &verify_failed)))
        return fail_with(name.c_str(), st);
    std::unique_ptr<char, decltype(&hj_string_free)> doc_guard(
        doc, &hj_string_free);

    char* out_path = nullptr;
    if ((st = hj_config_get(cfg, "output", &out_path)))
        return fail_with("output", st);
    std::unique_ptr<char, decltype(&hj_string_free)> path_guard(
        out_path, &hj_string_free);

    if (out_path && out_path[0]) {
        std::ofstream f(out_path, std::ios::binary);
        if (!f) {
            std::fprintf(stderr, "hj: cannot open output file: %s\n", out_path);
            return 2;
        }
        f << doc;
        if (!f) {
            std::fprintf(stderr, "hj: write failed: %s\n", out_path);
            return 2;
        }
    } else {
        std::fwrite(doc, 1, std::strlen(doc), stdout);
        std::fflush(stdout);
    }
    return verify_failed > 0 ? 1 : 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "hj — band structure, Weyl functions, and interface bound states of "
        "one-dimensional periodic Schrödinger operators"};
    app.require_subcommand(1);
    app.set_help_all_flag("--help-all", "print help for all subcommands");

    const char* names[5] = {"bands", "junction-scan", "dislocation-trace",
                            "half-solid-scan", "verify"};
    const char* descs[5] = {
        "band edges, gaps, Dirichlet/Neumann points, effective masses",
        "interface states of a two-potential junction (all sheets)",
        "in-gap state trajectories of the dislocated potential over the shift",
        "states of a solid/periodic interface at a fixed level and shift",
        "run the full invariant suite and report pass/fail per check"};

    flag_values vals[5];
    flag_opts opts[5];
    std::string chosen;
    for (int i = 0; i < 5; ++i) {
        CLI::App* cmd = app.add_subcommand(names[i], descs[i]);
        opts[i] = add_flags(cmd, vals[i]);
        const std::string name = names[i];
        cmd->callback([&chosen, name] { chosen = name; });
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);  // --help: usage text, exit 0
    } catch (const CLI::ParseError& e) {
        app.exit(e);  // prints the error and usage hint
        std::cout << app.help() << std::flush;
        return 2;
    }

    for (int i = 0; i < 5; ++i)
        if (chosen == names[i]) return run_subcommand(chosen, vals[i], opts[i]);
    std::cout << app.help() << std::flush;
    return 2;
}
