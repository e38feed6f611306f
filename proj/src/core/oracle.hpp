#pragma once

#include <complex>
#include <span>
#include <vector>

#include "profile.hpp"
#include "scatter_types.hpp"

namespace helmscat {

// Piecewise-constant wave speed: layer j in (interfaces[j-1], interfaces[j]),
// outermost speeds exactly 1. Ground truth for every numeric forward path.
struct LayerStack {
  std::vector<double> interfaces;  // ascending, size m
  std::vector<double> speeds;      // size m + 1, first and last == 1

  static LayerStack from_profile(const Profile& p);
};

// Closed-form scattering of a layer stack at real k != 0: march the
// plane-wave coefficients through interface continuity of (u, u').
ScatterPoint transfer_scattering(const LayerStack& stack, double k);

struct OracleDeviation {
  double dT = 0.0;
  double dR1 = 0.0;
  double dR2 = 0.0;
};

// Max deviation over the grid between the ODE forward solve and the oracle.
OracleDeviation oracle_compare(const Profile& p, std::span<const double> ks,
                               const struct SolveOptions& opts);

}  // namespace helmscat
