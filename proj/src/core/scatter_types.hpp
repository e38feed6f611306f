#pragma once

#include <complex>
#include <vector>

#include "num/rk45.hpp"

namespace helmscat {

enum class ScatterMethod { WronskianPath, IntegralPath };

// Scattering coefficients at one wavenumber plus diagnostics.
struct ScatterPoint {
  std::complex<double> k;
  std::complex<double> T;
  std::complex<double> R1;
  std::complex<double> R2;
  // max of |1 - |T|^2 - |R_j|^2| and the two forward paths' disagreement
  double unitarity_residual = 0.0;
  double path_disagreement = 0.0;
  ScatterMethod method = ScatterMethod::IntegralPath;
};

// Solver knobs shared by the forward paths.
struct SolveOptions {
  num::OdeOptions ode;
  double quad_tol = 1e-12;
  int min_panels = 24;
  int jobs = 0;  // 0 = hardware concurrency
};

// Per-k results on a real grid symmetric about 0 (0 excluded); the k -> 0
// limits T(0) = 1, R2(0) = 0 are stored, never computed.
struct ScatterGrid {
  std::vector<double> ks;
  std::vector<ScatterPoint> points;
  std::complex<double> T_at_zero{1.0, 0.0};
  std::complex<double> R2_at_zero{0.0, 0.0};
};

}  // namespace helmscat
