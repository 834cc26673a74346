// capi.cpp — the extern "C" boundary: opaque handles over the C++ core,
// exceptions translated to status codes plus a thread-local message.

#include "hj.h"

#include <cstring>
#include <new>
#include <string>

#include "hj/config.hpp"
#include "hj/runners.hpp"
#include "hj/spectrum.hpp"
#include "hj/weyl.hpp"

namespace {

thread_local std::string g_last_error;

hj_status set_error(hj::status code, const char* what) {
    g_last_error = what ? what : "";
    return static_cast<hj_status>(code);
}

// Run fn inside the exception barrier.
template <typename F>
hj_status guarded(F&& fn) {
    try {
        fn();
        g_last_error.clear();
        return HJ_OK;
    } catch (const hj::error& e) {
        return set_error(e.code(), e.what());
    } catch (const std::bad_alloc&) {
        return set_error(hj::status::internal, "out of memory");
    } catch (const std::exception& e) {
        return set_error(hj::status::internal, e.what());
    } catch (...) {
        return set_error(hj::status::internal, "unknown error");
    }
}

hj_status require(bool cond, const char* what) {
    if (cond) return HJ_OK;
    return set_error(hj::status::invalid_argument, what);
}

char* dup_string(const std::string& s) {
    char* out = new char[s.size() + 1];
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

}  // namespace

struct hj_potential {
    hj::potential p;
};
struct hj_bands {
    hj::band_structure b;
};
struct hj_config {
    hj::run_config c;
};

extern "C" {

const char* hj_last_error(void) { return g_last_error.c_str(); }

void hj_string_free(char* s) { delete[] s; }

/* ----------------------------------------------------------- potentials -- */

hj_status hj_potential_parse(const char* text, hj_potential** out) {
    if (hj_status st = require(text && out, "null argument")) return st;
    return guarded([&] {
        *out = new hj_potential{hj::parse_potential_text(text)};
    });
}

hj_status hj_potential_constant(double value, double period,
                                hj_potential** out) {
    if (hj_status st = require(out != nullptr, "null argument")) return st;
    return guarded([&] {
        *out = new hj_potential{hj::potential::make_constant(value, period)};
    });
}

hj_status hj_potential_eval(const hj_potential* p, double x, double* out) {
    if (hj_status st = require(p && out, "null argument")) return st;
    return guarded([&] { *out = p->p(x); });
}

hj_status hj_potential_shift(const hj_potential* p, double t,
                             hj_potential** out) {
    if (hj_status st = require(p && out, "null argument")) return st;
    return guarded([&] { *out = new hj_potential{p->p.shifted(t)}; });
}

void hj_potential_free(hj_potential* p) { delete p; }

/* ------------------------------------------------------- band structure -- */

hj_status hj_bands_compute(const hj_potential* p, int n_max, double lambda_max,
                           double tol, hj_bands** out) {
    if (hj_status st = require(p && out, "null argument")) return st;
    return guarded([&] {
        std::optional<double> ceiling;
        if (lambda_max > 0) ceiling = lambda_max;
        *out = new hj_bands{hj::compute_bands(p->p, n_max, ceiling, tol)};
    });
}

hj_status hj_bands_ground(const hj_bands* b, double* alpha0, double* nu0,
                          double* mass0_plus) {
    if (hj_status st = require(b != nullptr, "null argument")) return st;
    return guarded([&] {
        if (alpha0) *alpha0 = b->b.alpha0;
        if (nu0) *nu0 = b->b.nu0;
        if (mass0_plus) *mass0_plus = b->b.mass0_plus;
    });
}

hj_status hj_bands_gap_count(const hj_bands* b, int* out) {
    if (hj_status st = require(b && out, "null argument")) return st;
    return guarded([&] { *out = static_cast<int>(b->b.gaps.size()); });
}

hj_status hj_bands_gap(const hj_bands* b, int n, double* alpha_minus,
                       double* alpha_plus, double* mu, double* nu,
                       double* mass_minus, double* mass_plus, int* closed) {
    if (hj_status st = require(b != nullptr, "null argument")) return st;
    return guarded([&] {
        const hj::gap_info& g = b->b.gap(n);
        if (alpha_minus) *alpha_minus = g.alpha_minus;
        if (alpha_plus) *alpha_plus = g.alpha_plus;
        if (mu) *mu = g.mu;
        if (nu) *nu = g.nu;
        if (mass_minus) *mass_minus = g.mass_minus;
        if (mass_plus) *mass_plus = g.mass_plus;
        if (closed) *closed = g.closed ? 1 : 0;
    });
}

void hj_bands_free(hj_bands* b) { delete b; }

/* ------------------------------------------------------ pointwise tools -- */

hj_status hj_discriminant(const hj_potential* p, double lambda, double* delta,
                          double* delta_prime) {
    if (hj_status st = require(p != nullptr, "null argument")) return st;
    return guarded([&] {
        const hj::lyapunov_data l = hj::lyapunov(p->p, lambda, 0.0);
        if (delta) *delta = l.delta;
        if (delta_prime) *delta_prime = l.delta_prime;
    });
}

hj_status hj_weyl_m(const hj_potential* p, const hj_bands* b, double lambda,
                    double t, int side, int sheet, double* value, int* pole) {
    if (hj_status st = require(p && b, "null argument")) return st;
    if (hj_status st = require(side == -1 || side == +1, "side must be -1 or +1"))
        return st;
    return guarded([&] {
        const hj::m_value m =
            hj::weyl_m(p->p, b->b, lambda, t,
                       side < 0 ? hj::side_t::left : hj::side_t::right, sheet);
        if (value) *value = m.value;
        if (pole) *pole = m.pole ? 1 : 0;
    });
}

/* ------------------------------------------------------------ run plans -- */

hj_status hj_config_parse(const char* text, hj_config** out) {
    if (hj_status st = require(text && out, "null argument")) return st;
    return guarded([&] { *out = new hj_config{hj::parse_config(text)}; });
}

hj_status hj_config_set(hj_config* c, const char* key, const char* value) {
    if (hj_status st = require(c && key && value, "null argument")) return st;
    return guarded([&] {
        hj::run_config& rc = c->c;
        const std::string k = key, v = value;
        auto num = [&] {
            std::size_t pos = 0;
            const double x = std::stod(v, &pos);
            if (pos != v.size())
                hj::fail(hj::status::invalid_argument,
                         "bad numeric value for " + k + ": " + v);
            return x;
        };
        if (k == "nmax") rc.n_max = static_cast<int>(num());
        else if (k == "lambda_max") rc.lambda_max = num();
        else if (k == "t") rc.t = num();
        else if (k == "tsteps") rc.t_steps = static_cast<int>(num());
        else if (k == "trange_lo") rc.t_range_lo = num();
        else if (k == "trange_hi") rc.t_range_hi = num();
        else if (k == "s") rc.s = num();
        else if (k == "tol") rc.tol = num();
        else if (k == "format") {
            if (v != "csv" && v != "json")
                hj::fail(hj::status::invalid_argument,
                         "format must be csv or json");
            rc.format = v;
        } else if (k == "output") rc.output = v;
        else hj::fail(hj::status::invalid_argument, "unknown run key: " + k);
    });
}

hj_status hj_config_get(const hj_config* c, const char* key, char** value) {
    if (hj_status st = require(c && key && value, "null argument")) return st;
    return guarded([&] {
        const hj::run_config& rc = c->c;
        const std::string k = key;
        std::string v;
        if (k == "nmax") v = std::to_string(rc.n_max);
        else if (k == "lambda_max")
            v = rc.lambda_max ? hj::fmt17(*rc.lambda_max) : "";
        else if (k == "t") v = hj::fmt17(rc.t);
        else if (k == "tsteps") v = std::to_string(rc.t_steps);
        else if (k == "trange_lo") v = hj::fmt17(rc.t_range_lo);
        else if (k == "trange_hi") v = hj::fmt17(rc.t_range_hi);
        else if (k == "s") v = rc.s ? hj::fmt17(*rc.s) : "";
        else if (k == "tol") v = hj::fmt17(rc.tol);
        else if (k == "format") v = rc.format;
        else if (k == "output") v = rc.output;
        else if (k == "mode") v = rc.mode;
        else hj::fail(hj::status::invalid_argument, "unknown run key: " + k);
        *value = dup_string(v);
    });
}

void hj_config_free(hj_config* c) { delete c; }

hj_status hj_run(const hj_config* c, const char* subcommand, char** output,
                 int* verify_failed) {
    if (hj_status st = require(c && subcommand && output, "null argument"))
        return st;
    return guarded([&] {
        int failed = 0;
        const std::string doc = hj::run_rendered(c->c, subcommand, &failed);
        if (verify_failed) *verify_failed = failed;
        *output = dup_string(doc);
    });
}

} /* extern "C" */
