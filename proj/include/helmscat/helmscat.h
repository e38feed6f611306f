/* helmscat — 1-D Helmholtz forward scattering and reflection-to-transmission
 * recovery. C API of the shared library: opaque handles, status codes, and
 * caller-owned output buffers. All functions are thread-safe for concurrent
 * use on distinct handles; a profile handle is immutable and may be shared.
 */
#ifndef HELMSCAT_H
#define HELMSCAT_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define HELMSCAT_API __declspec(dllexport)
#else
#define HELMSCAT_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum helmscat_status {
  HELMSCAT_OK = 0,
  HELMSCAT_ERR_INVALID_ARG = 1,
  HELMSCAT_ERR_PARSE = 2,
  HELMSCAT_ERR_VALIDATION = 3,
  HELMSCAT_ERR_SOLVER = 4,
  HELMSCAT_ERR_IO = 5,
  HELMSCAT_ERR_INTERNAL = 6
} helmscat_status;

/* Opaque wave-speed profile. */
typedef struct helmscat_profile helmscat_profile;

/* Message for the last error on this thread (valid until the next call). */
HELMSCAT_API const char* helmscat_last_error(void);

/* Solver knobs; zero-initialize and override what you need.
 * Zero values mean library defaults. */
typedef struct helmscat_options {
  double ode_tol;   /* relative ODE tolerance (default 1e-12) */
  double quad_tol;  /* quadrature tolerance (default 1e-12) */
  int jobs;         /* parallel workers; 0 = hardware concurrency */
} helmscat_options;

/* -- profiles ----------------------------------------------------------- */

HELMSCAT_API helmscat_status helmscat_profile_from_json(
    const char* json_text, helmscat_profile** out);
HELMSCAT_API helmscat_status helmscat_profile_from_file(
    const char* path, helmscat_profile** out);
HELMSCAT_API void helmscat_profile_free(helmscat_profile* p);

/* JSON form of the profile; free with helmscat_string_free. */
HELMSCAT_API helmscat_status helmscat_profile_to_json(
    const helmscat_profile* p, char** out);
HELMSCAT_API void helmscat_string_free(char* s);

/* c(x), q(x) = 1 - 1/c^2, Q(x) = 1 - 1/c; any output may be NULL. */
HELMSCAT_API helmscat_status helmscat_profile_eval(
    const helmscat_profile* p, double x, double* c, double* q, double* Q);

/* gamma(x) = int_x^inf |q|, chi(x) and its inverse
 * (variant 0: x + int_x^inf Q, variant 1: x - int_{-inf}^x Q). */
HELMSCAT_API helmscat_status helmscat_profile_gamma(
    const helmscat_profile* p, double x, double* out);
HELMSCAT_API helmscat_status helmscat_profile_chi(
    const helmscat_profile* p, double x, int variant, double* out);
HELMSCAT_API helmscat_status helmscat_profile_chi_inv(
    const helmscat_profile* p, double y, int variant, double* out);

/* int q, int Q, int Q^2, sup|q|, int |c'/c| (or TV log c when flagged). */
typedef struct helmscat_functionals {
  double int_q;
  double int_Q;
  double int_Q2;
  double gamma0;
  double bv_log_mu;
  int bv_is_total_variation;
  double support_min;
  double support_max;
  double c0;
  double cM;
} helmscat_functionals;
HELMSCAT_API helmscat_status helmscat_profile_functionals(
    const helmscat_profile* p, helmscat_functionals* out);

/* -- forward solves ------------------------------------------------------ */

/* Reduced Jost function m1 (which = 1) or m2 (which = 2) and derivative at n
 * ascending points for k = k_re + i k_im (Im k >= 0). Output arrays of
 * length n. */
HELMSCAT_API helmscat_status helmscat_jost_solve(
    const helmscat_profile* p, double k_re, double k_im, int which,
    const double* xs, size_t n, const helmscat_options* opt, double* m_re,
    double* m_im, double* mp_re, double* mp_im);

/* Riccati-type fields: which = 0 -> r, 1 -> w, 2 -> w_minus, 3 -> rho. */
HELMSCAT_API helmscat_status helmscat_riccati_solve(
    const helmscat_profile* p, double k_re, double k_im, int which,
    const double* xs, size_t n, const helmscat_options* opt, double* v_re,
    double* v_im);

/* Scattering coefficients over a sorted real k-grid (0 excluded). Output
 * arrays of length n; unitarity holds to solver accuracy. */
HELMSCAT_API helmscat_status helmscat_forward_grid(
    const helmscat_profile* p, const double* ks, size_t n,
    const helmscat_options* opt, double* T_re, double* T_im, double* R1_re,
    double* R1_im, double* R2_re, double* R2_im, double* unitarity_residual);

/* Transfer-matrix oracle for piecewise-constant profiles. */
HELMSCAT_API helmscat_status helmscat_oracle_grid(
    const helmscat_profile* p, const double* ks, size_t n, double* T_re,
    double* T_im, double* R1_re, double* R1_im, double* R2_re, double* R2_im);

/* -- recovery and verification ------------------------------------------ */

/* Recovery chain from R2 samples alone; truth may be NULL (no comparisons).
 * The JSON report is allocated; free with helmscat_string_free. */
HELMSCAT_API helmscat_status helmscat_recover(
    const double* ks, const double* R2_re, const double* R2_im, size_t n,
    const helmscat_profile* truth, const helmscat_options* opt,
    char** json_report);

/* Full invariant checklist. profile_json may be NULL (built-in suite only);
 * all_passed receives 1/0. Report is deterministic byte-for-byte. */
HELMSCAT_API helmscat_status helmscat_verify(
    const char* profile_json, uint64_t seed, const helmscat_options* opt,
    char** json_report, int* all_passed);

#ifdef __cplusplus
}
#endif

#endif /* HELMSCAT_H */
