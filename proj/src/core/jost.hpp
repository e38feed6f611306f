#pragma once

#include <complex>
#include <span>
#include <vector>

#include "num/rk45.hpp"
#include "profile.hpp"

namespace helmscat {

using Cplx = std::complex<double>;

enum class Direction { FromRight, FromLeft };

// Samples of a reduced Jost function m (and m') on an ascending x-grid for
// one wavenumber k in the closed upper half-plane.
struct ComplexField {
  Cplx k;
  std::vector<double> xs;
  std::vector<Cplx> m;
  std::vector<Cplx> m_prime;
  Direction direction = Direction::FromRight;
};

// m1'' + 2ik m1' = k^2 q m1 with m1 -> 1, m1' -> 0 at the right support edge
// (exact there since q = 0 outside). Integration splits at the profile's
// breakpoints so discontinuous q never crosses a step.
ComplexField solve_m1(const Profile& p, Cplx k, std::span<const double> xs,
                      const num::OdeOptions& opt = {});

// m2'' - 2ik m2' = k^2 q m2 with terminal data at the left support edge.
ComplexField solve_m2(const Profile& p, Cplx k, std::span<const double> xs,
                      const num::OdeOptions& opt = {});

struct NonvanishingReport {
  bool ok = false;
  double min_abs = 0.0;
  double argmin_x = 0.0;
};

// u1 (equivalently m1) must never vanish on the grid.
NonvanishingReport jost_nonvanishing_check(const ComplexField& field);

// u = e^{+ikx} m (FromRight) or e^{-ikx} m (FromLeft), with the derivative.
Cplx jost_u(const ComplexField& f, std::size_t i);
Cplx jost_u_prime(const ComplexField& f, std::size_t i);

// Uniform grid covering the support with the given margin on both sides.
std::vector<double> default_x_grid(const Profile& p, std::size_t n = 401,
                                   double margin = 0.5);

}  // namespace helmscat
