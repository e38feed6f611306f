#pragma once

#include <complex>
#include <span>

#include "jost.hpp"
#include "profile.hpp"
#include "scatter_types.hpp"

namespace helmscat {

// Scattering coefficients at one real k != 0. Primary values come from the
// integral formulas 1/T = 1 - (k/2i)∫ q m1 and R2/T = (k/2i)∫ e^{2ikt} q m1
// on the support; the Wronskian route (everything evaluated at the left
// support edge, where u2 is an exact plane wave) is computed as a cross-check
// and its disagreement recorded.
ScatterPoint scattering_at(const Profile& p, double k,
                           const SolveOptions& opts = {});

ScatterGrid scattering_grid(const Profile& p, std::span<const double> ks,
                            const SolveOptions& opts = {});

// Richardson-extrapolated limit of R2(k)/k from the small-|k| grid samples;
// equals (1/2i)∫q in the k -> 0 limit.
Cplx low_k_slope(const ScatterGrid& grid);

// T(k) for Im k > 0 via the analytically continued integral formula.
Cplx transmission_upper(const Profile& p, Cplx k,
                        const SolveOptions& opts = {});

// T1 computed from the mirrored integral 1/T1 = 1 - (k/2i)∫ q m2; equals T
// by reciprocity.
Cplx transmission_from_left(const Profile& p, double k,
                            const SolveOptions& opts = {});

// max over the x-grid of |2 Re(T m1 m2) - |T m1|^2 - |T m2|^2|.
double bilinear_identity_residual(const Profile& p, double k,
                                  std::span<const double> xs,
                                  const SolveOptions& opts = {});

// Symmetric log-spaced grid: ±[lo, hi], n points per sign, 0 excluded.
std::vector<double> log_k_grid(double lo, double hi, std::size_t n_per_sign);

}  // namespace helmscat
