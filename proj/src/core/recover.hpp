#pragma once

#include <complex>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "halfplane.hpp"
#include "profile.hpp"
#include "scatter_types.hpp"

namespace helmscat {

using Cplx = std::complex<double>;

// Reflection samples on a real k-grid (ascending, symmetric about 0, without
// 0). The recovery pipeline reads nothing else.
struct RecoveryInput {
  std::vector<double> ks;
  std::vector<Cplx> R2;
};

struct RecoveredScalar {
  double value = 0.0;
  double error_bar = 0.0;
};

// |T| = sqrt(1 - |R2|^2) pointwise; rejects |R2| > 1.
std::vector<double> modulus_T(const RecoveryInput& in);

// ∫q = -2 lim_{k->0} Im R2(k)/k by extrapolation from the small-k samples.
RecoveredScalar recover_int_q(const RecoveryInput& in);

struct IntQ2Result {
  RecoveredScalar primary;        // closed-limit path -(1/pi) ∫ h
  double kappa_path = 0.0;        // Poisson extension + kappa extrapolation
  double path_disagreement = 0.0;
  bool flagged = false;           // tail-dominated uncertainty
};
// h(k) = log(1 - |R2(k)|^2)/k^2; both the closed limit and the
// kappa-extrapolated Poisson path are computed and cross-checked.
IntQ2Result recover_int_Q2(const RecoveryInput& in);

inline double recover_int_Q(double int_q, double int_Q2) {
  return 0.5 * (int_q + int_Q2);
}

// T_rec(k) = Theta_F(k) e^{-ik int_Q}: modulus from the data (the outer
// construction preserves it), phase from the boundary trace of Theta_F.
std::vector<Cplx> recover_T(const RecoveryInput& in, double int_Q,
                            std::span<const double> k_eval);

struct QuantityComparison {
  std::string name;
  double recovered = 0.0;
  double truth = 0.0;
  double abs_err = 0.0;
  double rel_err = 0.0;
};

struct RecoveryReport {
  RecoveredScalar int_q_rec, int_Q2_rec, int_Q_rec;
  double int_Q2_kappa_path = 0.0;
  double int_Q2_path_disagreement = 0.0;
  bool int_Q2_flagged = false;

  std::vector<double> T_ks;  // where T_rec is evaluated
  std::vector<Cplx> T_rec;
  // k-points where the boundary trace failed; dropped from T_ks, flagged here
  std::vector<double> T_dropped_ks;

  bool has_truth = false;
  std::vector<QuantityComparison> comparisons;
  Cplx gamma_unimodular{1.0, 0.0};
  double T_sup_error = 0.0;  // sup_k |T_rec - T_forward| when truth given
};

// Full chain from R2 samples; when truth is supplied the report carries
// forward-solve comparisons and the unimodular constant of the outer
// factorization (expected 1).
RecoveryReport run_recovery(const RecoveryInput& in,
                            const Profile* truth = nullptr,
                            const SolveOptions& opts = {});

std::string recovery_report_to_json(const RecoveryReport& rep);

struct UniquenessReport {
  double r2_separation = 0.0;
  bool matched = false;
  double eps_match = 1e-8;
  // populated when matched:
  double m1_max_diff = 0.0;
  double m2_max_diff = 0.0;
  double c_agreement_max_diff = 0.0;
  double difference_identity_residual = 0.0;  // difference-field version
  // always populated (per-profile tilde-coordinate bilinear identity):
  double tilde_identity_residual_p1 = 0.0;
  double tilde_identity_residual_p2 = 0.0;
};

// Discrimination harness over the given k-grid: either reports the R2 separation or, for matched pairs,
// verifies that the chi_j-normalized M fields coincide.
UniquenessReport uniqueness_harness(const Profile& p1, const Profile& p2,
                                    std::span<const double> ks,
                                    double eps_match = 1e-8,
                                    const SolveOptions& opts = {});

// Per-profile residual of the tilde/chi-coordinate bilinear identity
// (eq-4003 algebra + unitarity) at one k over a y-grid.
double tilde_identity_residual(const Profile& p, double k,
                               std::span<const double> ys,
                               const SolveOptions& opts = {});

}  // namespace helmscat
