#pragma once

#include <complex>
#include <span>
#include <vector>

#include "profile.hpp"
#include "scatter_types.hpp"

namespace helmscat {

using Cplx = std::complex<double>;

enum class RiccatiWhich { W, WMinus, R, Rho };

// Samples of r, w, w_minus or rho on an ascending x-grid at one wavenumber.
struct RiccatiField {
  Cplx k;
  std::vector<double> xs;
  std::vector<Cplx> values;
  RiccatiWhich which = RiccatiWhich::R;
};

// r' = -2ik r + (ikq/2)(1+r)^2 integrated right-to-left from r = 0 at the
// right support edge (exact, q vanishes there). Aborts if |r| reaches
// 1 - 1e-12 (blow-up guard; |r| < 1 is an invariant).
RiccatiField solve_r(const Profile& p, Cplx k, std::span<const double> xs,
                     const SolveOptions& opts = {});

// e^{2ik x_min} r(x_min, k); exact for compactly supported q.
Cplx r_to_R2(const RiccatiField& field);

// w' = ik/c^2 - ik w^2 from w = 1 at the right support edge (w = u1'/(ik u1));
// w_minus mirrored from the left edge (w_minus = -u2'/(ik u2)).
RiccatiField solve_w(const Profile& p, Cplx k, std::span<const double> xs,
                     const SolveOptions& opts = {});
RiccatiField solve_w_minus(const Profile& p, Cplx k,
                           std::span<const double> xs,
                           const SolveOptions& opts = {});

// max over x of |(1 - |r|^2) - exp(k ∫_x^∞ q Im r dy)| (energy identity),
// accumulated alongside the r integration. Also returns the left-edge
// exponential for the 1 - |R2|^2 comparison.
struct EnergyIdentityResult {
  double max_residual = 0.0;
  double left_edge_value = 1.0;  // exp(k ∫_R q Im r dy)
};
EnergyIdentityResult energy_identity(const Profile& p, double k,
                                     std::span<const double> xs,
                                     const SolveOptions& opts = {});

// ∫ q(x) r(x, i kappa) dx; converges to ∫Q^2 as kappa -> ∞.
double qr_integral(const Profile& p, double kappa,
                   const SolveOptions& opts = {});

// L1 stability of w under perturbations of q: returns (lhs, rhs) of
// ||(w1-w2)(., i kappa)||_L1 <= (1/alpha) ||q1-q2||_L1.
struct StabilityCheck {
  double lhs = 0.0;
  double rhs = 0.0;
};
StabilityCheck w_stability_check(const Profile& p1, const Profile& p2,
                                 double kappa, const SolveOptions& opts = {});

// rho(chi(x), k) = (ik u1 - c u1')/(ik u1 + c u1') sampled over the x-grid;
// requires c' in L^1 ∩ L^2 (smooth profile kinds).
RiccatiField rho_field(const Profile& p, double k, std::span<const double> xs,
                       const SolveOptions& opts = {});

}  // namespace helmscat
