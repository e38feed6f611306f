#pragma once

#include <complex>
#include <span>
#include <vector>

namespace helmscat {

enum class TailModel { Zero, PowerLaw };

// Real boundary data on a finite grid of the real line with a model for the
// behaviour beyond the grid. For log|F|^2 data the values are <= 0.
struct BoundaryData {
  std::vector<double> ks;      // ascending
  std::vector<double> values;  // finite

  TailModel tail = TailModel::Zero;
  double tail_exponent = 0.0;   // |t|^{-p}
  double tail_amp_pos = 0.0;    // amplitude (signed) fitted on the right
  double tail_amp_neg = 0.0;    // and on the left

  BoundaryData() = default;
  BoundaryData(std::vector<double> ks_, std::vector<double> values_,
               TailModel tail_ = TailModel::Zero);

  // Fits a one-exponent power tail on the outermost decade of each side.
  static BoundaryData with_power_tail(std::vector<double> ks,
                                      std::vector<double> values);

  // Linear interpolation inside the grid, tail model outside.
  double eval(double t) const;
};

// Poisson harmonic extension (1/pi) ∫ Im z / ((t - Re z)^2 + Im z^2) b(t) dt.
// Direct t-domain panel quadrature with refinement near t = Re z.
double poisson_extend(const BoundaryData& b, std::complex<double> z);

// Outer function from boundary modulus data b = log|F(k)|^2:
// Theta_F(z) = exp( -(i/2pi) ∫ (1/(k-z) - k/(k^2+1)) b(k) dk ), Im z > 0.
// Evaluated through the half-angle substitution t = x + y tan(theta), an
// independent quadrature route from poisson_extend.
std::complex<double> outer_function(const BoundaryData& log_F2,
                                    std::complex<double> z);

// Boundary value at k0 by Richardson extrapolation of Theta(k0 + i eps).
// Throws when the extrapolation does not settle; the extrapolated modulus is
// checked against exp(b(k0)/2).
struct BoundaryTrace {
  std::complex<double> value;
  double modulus_mismatch;  // | |value| - exp(b(k0)/2) |
};
BoundaryTrace boundary_trace(const BoundaryData& log_F2, double k0,
                             std::span<const double> eps_sequence = {});

// Plain integral of the boundary data over the real line (grid + tails).
double boundary_integral(const BoundaryData& b);

}  // namespace helmscat
