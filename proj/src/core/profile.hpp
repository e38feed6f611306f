#pragma once

#include <memory>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "num/cumint.hpp"
#include "num/interp.hpp"

namespace helmscat {

enum class ProfileKind {
  Constant,
  Slab,
  Bump,
  PiecewiseLinear,
  Samples,
  PiecewiseConstant,
};

// Which coordinate transform variant: chi(x) = x + ∫_x^∞ Q (RightTail) or
// chi(x) = x - ∫_{-∞}^x Q (LeftTail). They differ by the constant ∫_R Q.
enum class ChiVariant { RightTail, LeftTail };

struct ScalarFunctionals {
  double int_q = 0.0;
  double int_Q = 0.0;
  double int_Q2 = 0.0;
  double gamma0 = 0.0;
  double bv_log_mu = 0.0;
  // Set when the profile is discontinuous and bv_log_mu falls back to the
  // total variation of log c.
  bool bv_is_total_variation = false;
};

// Immutable wave-speed profile c(x) with c -> 1 off a bounded support,
// plus all scalar functionals of c the downstream solvers use. Construction
// validates positivity/bounds and precomputes the cumulative integrals of
// |q| and Q. Values semantics: copies share the immutable caches.
class Profile {
public:
  static Profile constant();
  static Profile slab(double c_s, double x_left, double x_right,
                      double tail_tol = 1e-12);
  static Profile bump(double amplitude, double center, double width,
                      double tail_tol = 1e-12);
  static Profile piecewise_linear(std::vector<std::pair<double, double>> knots,
                                  double tail_tol = 1e-12);
  static Profile samples(std::vector<double> xs, std::vector<double> cs,
                         double tail_tol = 1e-12);
  static Profile piecewise_constant(std::vector<double> interfaces,
                                    std::vector<double> speeds,
                                    double tail_tol = 1e-12);

  double c(double x) const { return shape_.c(x); }
  double q(double x) const { return shape_.q(x); }  // 1 - 1/c^2
  double Q(double x) const { return shape_.Q(x); }  // 1 - 1/c
  // dc/dx; only meaningful when has_derivative().
  double c_prime(double x) const { return shape_.c_prime(x); }
  bool has_derivative() const { return shape_.has_derivative(); }

  ProfileKind kind() const { return shape_.kind; }
  double c0() const { return c0_; }
  double cM() const { return cM_; }
  double gamma0() const { return gamma0_; }
  double tail_tol() const { return tail_tol_; }
  double decay_const() const { return decay_const_; }
  double decay_rate() const { return decay_rate_; }
  double support_min() const { return support_min_; }
  double support_max() const { return support_max_; }
  // Edges of smooth pieces inside the support (support edges included).
  const std::vector<double>& breakpoints() const { return breakpoints_; }

  double gamma(double x) const;  // ∫_x^∞ |q|
  double eta(double x) const;    // ∫_{-∞}^x |q|
  double int_abs_q() const;

  double int_Q_right(double x) const;  // ∫_x^∞ Q
  double int_Q_left(double x) const;   // ∫_{-∞}^x Q
  double int_Q_total() const;

  double chi(double x, ChiVariant v = ChiVariant::RightTail) const;
  double chi_inv(double y, ChiVariant v = ChiVariant::RightTail) const;

  ScalarFunctionals functionals() const;

  // Parameter access for serialization / the transfer-matrix oracle.
  const std::vector<double>& layer_interfaces() const {
    return shape_.interfaces;
  }
  const std::vector<double>& layer_speeds() const { return shape_.speeds; }
  const std::vector<std::pair<double, double>>& knots() const {
    return shape_.knots;
  }
  double bump_amplitude() const { return shape_.amp; }
  double bump_center() const { return shape_.center; }
  double bump_width() const { return shape_.width; }
  const std::vector<double>& sample_xs() const { return shape_.sample_xs; }
  const std::vector<double>& sample_cs() const { return shape_.sample_cs; }

private:
  // Self-contained wave-speed shape: everything needed to evaluate c(x).
  // The cumulative-integral caches capture a copy, so Profile objects can be
  // copied and moved freely.
  struct Shape {
    ProfileKind kind = ProfileKind::Constant;
    std::vector<double> interfaces, speeds;       // Slab / PiecewiseConstant
    std::vector<std::pair<double, double>> knots;  // PiecewiseLinear
    double amp = 0.0, center = 0.0, width = 1.0;   // Bump
    std::vector<double> sample_xs, sample_cs;      // Samples
    num::MonotoneCubic interp;

    double c(double x) const;
    double q(double x) const {
      const double cc = c(x);
      return 1.0 - 1.0 / (cc * cc);
    }
    double Q(double x) const { return 1.0 - 1.0 / c(x); }
    double c_prime(double x) const;
    bool has_derivative() const;
  };

  Profile() = default;
  void finalize();  // validation + caches; fills everything derived

  Shape shape_;
  double tail_tol_ = 1e-12;

  // derived
  double c0_ = 1.0, cM_ = 1.0, gamma0_ = 0.0;
  double decay_const_ = 0.0, decay_rate_ = 1.0;
  double support_min_ = 0.0, support_max_ = 0.0;
  std::vector<double> breakpoints_;
  std::shared_ptr<const num::CumulativeIntegral> cum_abs_q_, cum_Q_;
};

}  // namespace helmscat
