/* hj.h — C interface to the hj library.
 *
 * Spectral analysis of one-dimensional Schrödinger operators glued from two
 * periodic half-line potentials: Hill discriminants and band/gap structure,
 * Weyl functions on the four-sheet interface energy surface, and the bound
 * states / resonances of junction, dislocation, and half-solid operators.
 *
 * Conventions:
 *   - Every function returns an hj_status; results go out through pointers.
 *   - On any nonzero status, hj_last_error() returns a thread-local message
 *     describing the failure (valid until the next hj call on that thread).
 *   - Objects are created through hj_*_new/parse/compute constructors and
 *     released with the matching hj_*_free; handles are opaque.
 *   - Strings returned through char** are heap-allocated; release them with
 *     hj_string_free.
 */

#ifndef HJ_H
#define HJ_H

#ifdef __cplusplus
extern "C" {
#endif

typedef enum hj_status {
    HJ_OK = 0,
    HJ_EINVAL = 1,        /* bad argument or malformed input */
    HJ_EDOMAIN = 2,       /* outside the mathematical domain */
    HJ_ENUMERIC = 3,      /* tolerance not reached / solver failure */
    HJ_EINCONSISTENT = 4, /* structural invariant violated */
    HJ_EIO = 5,           /* file / format problem */
    HJ_EINTERNAL = 6      /* internal error */
} hj_status;

/* Thread-local message for the most recent failing call. */
const char* hj_last_error(void);

void hj_string_free(char* s);

/* ----------------------------------------------------------- potentials -- */

typedef struct hj_potential hj_potential;

/* Parse a potential section body: the key = value lines documented for the
 * [potential] config section (kind, period, value, breakpoints, values,
 * mean, coefficients, samples, even). */
hj_status hj_potential_parse(const char* text, hj_potential** out);

hj_status hj_potential_constant(double value, double period,
                                hj_potential** out);

hj_status hj_potential_eval(const hj_potential* p, double x, double* out);

/* p(. + t); a new handle. */
hj_status hj_potential_shift(const hj_potential* p, double t,
                             hj_potential** out);

void hj_potential_free(hj_potential* p);

/* ------------------------------------------------------- band structure -- */

typedef struct hj_bands hj_bands;

/* lambda_max <= 0 selects the automatic ceiling. */
hj_status hj_bands_compute(const hj_potential* p, int n_max, double lambda_max,
                           double tol, hj_bands** out);

/* Bottom of the spectrum, nu0, and the bottom effective mass. */
hj_status hj_bands_ground(const hj_bands* b, double* alpha0, double* nu0,
                          double* mass0_plus);

hj_status hj_bands_gap_count(const hj_bands* b, int* out);

/* 1-based gap accessor; any output pointer may be NULL.  *closed is 1 for a
 * collapsed gap (masses are then not available and return NaN). */
hj_status hj_bands_gap(const hj_bands* b, int n, double* alpha_minus,
                       double* alpha_plus, double* mu, double* nu,
                       double* mass_minus, double* mass_plus, int* closed);

void hj_bands_free(hj_bands* b);

/* ------------------------------------------------------ pointwise tools -- */

/* Discriminant Delta(lambda) and its lambda-derivative. */
hj_status hj_discriminant(const hj_potential* p, double lambda, double* delta,
                          double* delta_prime);

/* One-sided Weyl function m(lambda, t) for side -1 (left, decays at -inf)
 * or +1 (right, decays at +inf) on sheet 1..4.  *pole is set to 1 when
 * lambda is a Dirichlet point of the side (value is then meaningless). */
hj_status hj_weyl_m(const hj_potential* p, const hj_bands* b, double lambda,
                    double t, int side, int sheet, double* value, int* pole);

/* ------------------------------------------------------------ run plans -- */

typedef struct hj_config hj_config;

/* Parse a full config file (sections [potential.left], [potential.right],
 * [potential], [run]); text may be empty for an all-defaults config. */
hj_status hj_config_parse(const char* text, hj_config** out);

/* Override one [run] key (nmax, lambda_max, t, tsteps, trange_lo, trange_hi,
 * s, tol, format, output) with a textual value. */
hj_status hj_config_set(hj_config* c, const char* key, const char* value);

/* Read back a [run] key as text (keys as in hj_config_set). */
hj_status hj_config_get(const hj_config* c, const char* key, char** value);

void hj_config_free(hj_config* c);

/* Run one subcommand: "bands", "junction-scan", "dislocation-trace",
 * "half-solid-scan", or "verify".  *output receives the rendered document
 * (CSV or JSON per the config's format key; the verify listing is plain
 * text).  For "verify", *verify_failed (may be NULL) receives the number of
 * failed checks. */
hj_status hj_run(const hj_config* c, const char* subcommand, char** output,
                 int* verify_failed);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* HJ_H */
