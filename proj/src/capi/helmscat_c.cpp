#include "helmscat/helmscat.h"

#include <cstring>
#include <new>
#include <string>

#include "core/errors.hpp"
#include "core/io/profile_json.hpp"
#include "core/jost.hpp"
#include "core/oracle.hpp"
#include "core/recover.hpp"
#include "core/riccati.hpp"
#include "core/scatter.hpp"
#include "core/verify.hpp"

using namespace helmscat;

struct helmscat_profile {
  Profile impl;
};

namespace {

thread_local std::string g_last_error;

helmscat_status fail(helmscat_status st, const char* msg) {
  g_last_error = msg;
  return st;
}

// Maps C++ exceptions from `body` onto status codes.
template <typename F>
helmscat_status guarded(F&& body) {
  try {
    return body();
  } catch (const ParseError& e) {
    return fail(HELMSCAT_ERR_PARSE, e.what());
  } catch (const ValidationError& e) {
    return fail(HELMSCAT_ERR_VALIDATION, e.what());
  } catch (const SolverError& e) {
    return fail(HELMSCAT_ERR_SOLVER, e.what());
  } catch (const QuadratureError& e) {
    return fail(HELMSCAT_ERR_SOLVER, e.what());
  } catch (const Error& e) {
    return fail(HELMSCAT_ERR_INTERNAL, e.what());
  } catch (const std::bad_alloc&) {
    return fail(HELMSCAT_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(HELMSCAT_ERR_INTERNAL, e.what());
  }
}

SolveOptions to_solve_options(const helmscat_options* opt) {
  SolveOptions s;
  if (opt) {
    if (opt->ode_tol > 0.0) s.ode.rtol = opt->ode_tol;
    if (opt->quad_tol > 0.0) s.quad_tol = opt->quad_tol;
    s.jobs = opt->jobs;
  }
  return s;
}

char* dup_string(const std::string& s) {
  char* out = new char[s.size() + 1];
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

}  // namespace

extern "C" {

const char* helmscat_last_error(void) { return g_last_error.c_str(); }

helmscat_status helmscat_profile_from_json(const char* json_text,
                                           helmscat_profile** out) {
  if (!json_text || !out)
    return fail(HELMSCAT_ERR_INVALID_ARG, "null argument");
  return guarded([&] {
    *out = new helmscat_profile{io::profile_from_json(json_text)};
    return HELMSCAT_OK;
  });
}

helmscat_status helmscat_profile_from_file(const char* path,
                                           helmscat_profile** out) {
  if (!path || !out) return fail(HELMSCAT_ERR_INVALID_ARG, "null argument");
  return guarded([&] {
    *out = new helmscat_profile{io::profile_from_file(path)};
    return HELMSCAT_OK;
  });
}

void helmscat_profile_free(helmscat_profile* p) { delete p; }

helmscat_status helmscat_profile_to_json(const helmscat_profile* p,
                                         char** out) {
  if (!p || !out) return fail(HELMSCAT_ERR_INVALID_ARG, "null argument");
  return guarded([&] {
    *out = dup_string(io::profile_to_json(p->impl));
    return HELMSCAT_OK;
  });
}

void helmscat_string_free(char* s) { delete[] s; }

helmscat_status helmscat_profile_eval(const helmscat_profile* p, double x,
                                      double* c, double* q, double* Q) {
  if (!p) return fail(HELMSCAT_ERR_INVALID_ARG, "null profile");
  return guarded([&] {
    if (c) *c = p->impl.c(x);
    if (q) *q = p->impl.q(x);
    if (Q) *Q = p->impl.Q(x);
    return HELMSCAT_OK;
  });
}

helmscat_status helmscat_profile_gamma(const helmscat_profile* p, double x,
                                       double* out) {
  if (!p || !out) return fail(HELMSCAT_ERR_INVALID_ARG, "null argument");
  return guarded([&] {
    *out = p->impl.gamma(x);
    return HELMSCAT_OK;
  });
}

helmscat_status helmscat_profile_chi(const helmscat_profile* p, double x,
                                     int variant, double* out) {
  if (!p || !out) return fail(HELMSCAT_ERR_INVALID_ARG, "null argument");
  return guarded([&] {
    *out = p->impl.chi(x, variant == 0 ? ChiVariant::RightTail
                                       : ChiVariant::LeftTail);
    return HELMSCAT_OK;
  });
}

helmscat_status helmscat_profile_chi_inv(const helmscat_profile* p, double y,
                                         int variant, double* out) {
  if (!p || !out) return fail(HELMSCAT_ERR_INVALID_ARG, "null argument");
  return guarded([&] {
    *out = p->impl.chi_inv(y, variant == 0 ? ChiVariant::RightTail
                                           : ChiVariant::LeftTail);
    return HELMSCAT_OK;
  });
}

helmscat_status helmscat_profile_functionals(const helmscat_profile* p,
                                             helmscat_functionals* out) {
  if (!p || !out) return fail(HELMSCAT_ERR_INVALID_ARG, "null argument");
  return guarded([&] {
    const ScalarFunctionals f = p->impl.functionals();
    out->int_q = f.int_q;
    out->int_Q = f.int_Q;
    out->int_Q2 = f.int_Q2;
    out->gamma0 = f.gamma0;
    out->bv_log_mu = f.bv_log_mu;
    out->bv_is_total_variation = f.bv_is_total_variation ? 1 : 0;
    out->support_min = p->impl.support_min();
    out->support_max = p->impl.support_max();
    out->c0 = p->impl.c0();
    out->cM = p->impl.cM();
    return HELMSCAT_OK;
  });
}

helmscat_status helmscat_jost_solve(const helmscat_profile* p, double k_re,
                                    double k_im, int which, const double* xs,
                                    size_t n, const helmscat_options* opt,
                                    double* m_re, double* m_im, double* mp_re,
                                    double* mp_im) {
  if (!p || !xs || !m_re || !m_im || !mp_re || !mp_im || n == 0)
    return fail(HELMSCAT_ERR_INVALID_ARG, "null argument");
  if (which != 1 && which != 2)
    return fail(HELMSCAT_ERR_INVALID_ARG, "which must be 1 (m1) or 2 (m2)");
  return guarded([&] {
    const SolveOptions s = to_solve_options(opt);
    const Cplx k{k_re, k_im};
    const std::span<const double> grid(xs, n);
    const ComplexField f = which == 1 ? solve_m1(p->impl, k, grid, s.ode)
                                      : solve_m2(p->impl, k, grid, s.ode);
    for (size_t i = 0; i < n; ++i) {
      m_re[i] = f.m[i].real();
      m_im[i] = f.m[i].imag();
      mp_re[i] = f.m_prime[i].real();
      mp_im[i] = f.m_prime[i].imag();
    }
    return HELMSCAT_OK;
  });
}

helmscat_status helmscat_riccati_solve(const helmscat_profile* p, double k_re,
                                       double k_im, int which,
                                       const double* xs, size_t n,
                                       const helmscat_options* opt,
                                       double* v_re, double* v_im) {
  if (!p || !xs || !v_re || !v_im || n == 0)
    return fail(HELMSCAT_ERR_INVALID_ARG, "null argument");
  if (which < 0 || which > 3)
    return fail(HELMSCAT_ERR_INVALID_ARG,
                "which must be 0 (r), 1 (w), 2 (w_minus) or 3 (rho)");
  return guarded([&] {
    const SolveOptions s = to_solve_options(opt);
    const Cplx k{k_re, k_im};
    const std::span<const double> grid(xs, n);
    RiccatiField f;
    switch (which) {
      case 0: f = solve_r(p->impl, k, grid, s); break;
      case 1: f = solve_w(p->impl, k, grid, s); break;
      case 2: f = solve_w_minus(p->impl, k, grid, s); break;
      default:
        if (k_im != 0.0)
          throw ValidationError("rho field needs real k");
        f = rho_field(p->impl, k_re, grid, s);
        break;
    }
    for (size_t i = 0; i < n; ++i) {
      v_re[i] = f.values[i].real();
      v_im[i] = f.values[i].imag();
    }
    return HELMSCAT_OK;
  });
}

helmscat_status helmscat_forward_grid(const helmscat_profile* p,
                                      const double* ks, size_t n,
                                      const helmscat_options* opt,
                                      double* T_re, double* T_im,
                                      double* R1_re, double* R1_im,
                                      double* R2_re, double* R2_im,
                                      double* unitarity_residual) {
  if (!p || !ks || n == 0 || !T_re || !T_im || !R1_re || !R1_im || !R2_re ||
      !R2_im)
    return fail(HELMSCAT_ERR_INVALID_ARG, "null argument");
  return guarded([&] {
    const ScatterGrid g =
        scattering_grid(p->impl, std::span<const double>(ks, n),
                        to_solve_options(opt));
    for (size_t i = 0; i < n; ++i) {
      T_re[i] = g.points[i].T.real();
      T_im[i] = g.points[i].T.imag();
      R1_re[i] = g.points[i].R1.real();
      R1_im[i] = g.points[i].R1.imag();
      R2_re[i] = g.points[i].R2.real();
      R2_im[i] = g.points[i].R2.imag();
      if (unitarity_residual)
        unitarity_residual[i] = g.points[i].unitarity_residual;
    }
    return HELMSCAT_OK;
  });
}

helmscat_status helmscat_oracle_grid(const helmscat_profile* p,
                                     const double* ks, size_t n, double* T_re,
                                     double* T_im, double* R1_re,
                                     double* R1_im, double* R2_re,
                                     double* R2_im) {
  if (!p || !ks || n == 0 || !T_re || !T_im || !R1_re || !R1_im || !R2_re ||
      !R2_im)
    return fail(HELMSCAT_ERR_INVALID_ARG, "null argument");
  return guarded([&] {
    const LayerStack stack = LayerStack::from_profile(p->impl);
    for (size_t i = 0; i < n; ++i) {
      const ScatterPoint pt = transfer_scattering(stack, ks[i]);
      T_re[i] = pt.T.real();
      T_im[i] = pt.T.imag();
      R1_re[i] = pt.R1.real();
      R1_im[i] = pt.R1.imag();
      R2_re[i] = pt.R2.real();
      R2_im[i] = pt.R2.imag();
    }
    return HELMSCAT_OK;
  });
}

helmscat_status helmscat_recover(const double* ks, const double* R2_re,
                                 const double* R2_im, size_t n,
                                 const helmscat_profile* truth,
                                 const helmscat_options* opt,
                                 char** json_report) {
  if (!ks || !R2_re || !R2_im || !json_report || n == 0)
    return fail(HELMSCAT_ERR_INVALID_ARG, "null argument");
  return guarded([&] {
    RecoveryInput in;
    in.ks.assign(ks, ks + n);
    in.R2.reserve(n);
    for (size_t i = 0; i < n; ++i) in.R2.emplace_back(R2_re[i], R2_im[i]);
    const RecoveryReport rep = run_recovery(
        in, truth ? &truth->impl : nullptr, to_solve_options(opt));
    *json_report = dup_string(recovery_report_to_json(rep));
    return HELMSCAT_OK;
  });
}

helmscat_status helmscat_verify(const char* profile_json, uint64_t seed,
                                const helmscat_options* opt,
                                char** json_report, int* all_passed) {
  if (!json_report) return fail(HELMSCAT_ERR_INVALID_ARG, "null argument");
  return guarded([&] {
    VerifyOptions vo;
    vo.seed = seed;
    vo.solve = to_solve_options(opt);
    if (profile_json) vo.extra_profile = io::profile_from_json(profile_json);
    const VerifyReport rep = run_verify(vo);
    *json_report = dup_string(rep.to_json());
    if (all_passed) *all_passed = rep.all_passed ? 1 : 0;
    return HELMSCAT_OK;
  });
}

}  // extern "C"
