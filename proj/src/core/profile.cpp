#include "profile.hpp"

#include <algorithm>
#include <cmath>

#include "errors.hpp"
#include "num/gl16.hpp"

namespace helmscat {

namespace {

// Smooth compactly supported bump shape: phi(0) = 1, phi = 0 for |t| >= 1.
double bump_shape(double t) {
  const double s = 1.0 - t * t;
  if (s <= 0.0) return 0.0;
  return std::exp(1.0 - 1.0 / s);
}

double bump_shape_deriv(double t) {
  const double s = 1.0 - t * t;
  if (s <= 0.0) return 0.0;
  return bump_shape(t) * (-2.0 * t / (s * s));
}

}  // namespace

double Profile::Shape::c(double x) const {
  switch (kind) {
    case ProfileKind::Constant:
      return 1.0;
    case ProfileKind::Slab:
    case ProfileKind::PiecewiseConstant: {
      auto it = std::upper_bound(interfaces.begin(), interfaces.end(), x);
      return speeds[(std::size_t)(it - interfaces.begin())];
    }
    case ProfileKind::Bump:
      return 1.0 + amp * bump_shape((x - center) / width);
    case ProfileKind::PiecewiseLinear: {
      if (x <= knots.front().first) return knots.front().second;
      if (x >= knots.back().first) return knots.back().second;
      auto it = std::upper_bound(
          knots.begin(), knots.end(), x,
          [](double v, const std::pair<double, double>& kn) {
            return v < kn.first;
          });
      const auto& hi = *it;
      const auto& lo = *(it - 1);
      const double t = (x - lo.first) / (hi.first - lo.first);
      return lo.second + t * (hi.second - lo.second);
    }
    case ProfileKind::Samples:
      if (x <= sample_xs.front() || x >= sample_xs.back()) return 1.0;
      return interp(x);
  }
  return 1.0;
}

bool Profile::Shape::has_derivative() const {
  return kind == ProfileKind::Constant || kind == ProfileKind::Bump ||
         kind == ProfileKind::PiecewiseLinear || kind == ProfileKind::Samples;
}

double Profile::Shape::c_prime(double x) const {
  switch (kind) {
    case ProfileKind::Constant:
      return 0.0;
    case ProfileKind::Bump:
      return amp * bump_shape_deriv((x - center) / width) / width;
    case ProfileKind::PiecewiseLinear: {
      if (x <= knots.front().first || x >= knots.back().first) return 0.0;
      auto it = std::upper_bound(
          knots.begin(), knots.end(), x,
          [](double v, const std::pair<double, double>& kn) {
            return v < kn.first;
          });
      const auto& hi = *it;
      const auto& lo = *(it - 1);
      return (hi.second - lo.second) / (hi.first - lo.first);
    }
    case ProfileKind::Samples:
      if (x <= sample_xs.front() || x >= sample_xs.back()) return 0.0;
      return interp.derivative(x);
    default:
      throw ValidationError("profile kind has no pointwise derivative");
  }
}

Profile Profile::constant() {
  Profile p;
  p.shape_.kind = ProfileKind::Constant;
  p.finalize();
  return p;
}

Profile Profile::slab(double c_s, double x_left, double x_right,
                      double tail_tol) {
  Profile p;
  p.shape_.kind = ProfileKind::Slab;
  p.shape_.interfaces = {x_left, x_right};
  p.shape_.speeds = {1.0, c_s, 1.0};
  p.tail_tol_ = tail_tol;
  p.finalize();
  return p;
}

Profile Profile::bump(double amplitude, double center, double width,
                      double tail_tol) {
  Profile p;
  p.shape_.kind = ProfileKind::Bump;
  p.shape_.amp = amplitude;
  p.shape_.center = center;
  p.shape_.width = width;
  p.tail_tol_ = tail_tol;
  p.finalize();
  return p;
}

Profile Profile::piecewise_linear(std::vector<std::pair<double, double>> knots,
                                  double tail_tol) {
  Profile p;
  p.shape_.kind = ProfileKind::PiecewiseLinear;
  p.shape_.knots = std::move(knots);
  p.tail_tol_ = tail_tol;
  p.finalize();
  return p;
}

Profile Profile::samples(std::vector<double> xs, std::vector<double> cs,
                         double tail_tol) {
  Profile p;
  p.shape_.kind = ProfileKind::Samples;
  p.shape_.sample_xs = std::move(xs);
  p.shape_.sample_cs = std::move(cs);
  p.tail_tol_ = tail_tol;
  p.finalize();
  return p;
}

Profile Profile::piecewise_constant(std::vector<double> interfaces,
                                    std::vector<double> speeds,
                                    double tail_tol) {
  Profile p;
  p.shape_.kind = ProfileKind::PiecewiseConstant;
  p.shape_.interfaces = std::move(interfaces);
  p.shape_.speeds = std::move(speeds);
  p.tail_tol_ = tail_tol;
  p.finalize();
  return p;
}

void Profile::finalize() {
  Shape& s = shape_;
  switch (s.kind) {
    case ProfileKind::Constant:
      support_min_ = support_max_ = 0.0;
      breakpoints_ = {0.0};
      break;
    case ProfileKind::Slab:
    case ProfileKind::PiecewiseConstant: {
      if (s.interfaces.size() + 1 != s.speeds.size())
        throw ValidationError(
            "piecewise-constant profile needs one more speed than interfaces");
      if (s.interfaces.empty())
        throw ValidationError(
            "piecewise-constant profile needs at least one interface");
      for (std::size_t i = 1; i < s.interfaces.size(); ++i)
        if (!(s.interfaces[i] > s.interfaces[i - 1]))
          throw ValidationError("interfaces must be strictly increasing");
      for (double sp : s.speeds)
        if (!(sp > 0.0))
          throw ValidationError("layer speeds must be positive ([H1])");
      if (s.speeds.front() != 1.0 || s.speeds.back() != 1.0)
        throw ValidationError("outermost speeds must equal 1");
      support_min_ = s.interfaces.front();
      support_max_ = s.interfaces.back();
      breakpoints_ = s.interfaces;
      break;
    }
    case ProfileKind::Bump: {
      if (!(s.width > 0.0))
        throw ValidationError("bump width must be positive");
      if (!(1.0 + s.amp > 0.0))
        throw ValidationError("bump amplitude must keep c positive ([H1])");
      support_min_ = s.center - s.width;
      support_max_ = s.center + s.width;
      breakpoints_ = {support_min_, s.center, support_max_};
      break;
    }
    case ProfileKind::PiecewiseLinear: {
      if (s.knots.size() < 2)
        throw ValidationError("piecewise-linear profile needs >= 2 knots");
      for (std::size_t i = 1; i < s.knots.size(); ++i)
        if (!(s.knots[i].first > s.knots[i - 1].first))
          throw ValidationError("knots must have strictly increasing x");
      for (const auto& kn : s.knots)
        if (!(kn.second > 0.0))
          throw ValidationError("knot speeds must be positive ([H1])");
      if (std::abs(s.knots.front().second - 1.0) > tail_tol_ ||
          std::abs(s.knots.back().second - 1.0) > tail_tol_)
        throw ValidationError(
            "end knots must have c = 1 (q must vanish outside the support)");
      s.knots.front().second = 1.0;
      s.knots.back().second = 1.0;
      support_min_ = s.knots.front().first;
      support_max_ = s.knots.back().first;
      for (const auto& kn : s.knots) breakpoints_.push_back(kn.first);
      break;
    }
    case ProfileKind::Samples: {
      if (s.sample_xs.size() < 4 || s.sample_xs.size() != s.sample_cs.size())
        throw ValidationError("samples profile needs >= 4 matching samples");
      for (std::size_t i = 1; i < s.sample_xs.size(); ++i)
        if (!(s.sample_xs[i] > s.sample_xs[i - 1]))
          throw ValidationError("sample grid must be strictly increasing");
      for (double cv : s.sample_cs)
        if (!(cv > 0.0))
          throw ValidationError("sampled c must be positive ([H1])");
      if (std::abs(s.sample_cs.front() - 1.0) > tail_tol_ ||
          std::abs(s.sample_cs.back() - 1.0) > tail_tol_)
        throw ValidationError(
            "end samples must have c = 1 (q must vanish outside the support)");
      s.sample_cs.front() = 1.0;
      s.sample_cs.back() = 1.0;
      s.interp = num::MonotoneCubic(s.sample_xs, s.sample_cs);
      support_min_ = s.sample_xs.front();
      support_max_ = s.sample_xs.back();
      breakpoints_ = {support_min_, support_max_};
      break;
    }
  }

  // [H1] bounds and gamma0 = sup |q|. The monotone interpolant keeps Samples
  // within the data range, so extremes sit at data points for every kind.
  c0_ = 1.0;
  cM_ = 1.0;
  auto absorb = [&](double cv) {
    c0_ = std::min(c0_, cv);
    cM_ = std::max(cM_, cv);
  };
  switch (s.kind) {
    case ProfileKind::Constant:
      break;
    case ProfileKind::Slab:
    case ProfileKind::PiecewiseConstant:
      for (double sp : s.speeds) absorb(sp);
      break;
    case ProfileKind::Bump:
      absorb(1.0 + s.amp);
      break;
    case ProfileKind::PiecewiseLinear:
      for (const auto& kn : s.knots) absorb(kn.second);
      break;
    case ProfileKind::Samples:
      for (double cv : s.sample_cs) absorb(cv);
      break;
  }
  if (!(c0_ > 0.0)) throw ValidationError("profile violates [H1]: inf c <= 0");
  const double q_lo = 1.0 - 1.0 / (c0_ * c0_);
  const double q_hi = 1.0 - 1.0 / (cM_ * cM_);
  gamma0_ = std::max(std::abs(q_lo), std::abs(q_hi));

  // [H2] metadata: the smallest C with |c(x)-1| <= C (1+x^2)^{-(1+delta)/2}
  // over the sampled support, at the default rate delta = 1.
  decay_rate_ = 1.0;
  decay_const_ = 0.0;
  if (support_max_ > support_min_) {
    const int ns = 2048;
    for (int i = 0; i <= ns; ++i) {
      const double x = support_min_ + (support_max_ - support_min_) * i / ns;
      const double w = std::pow(1.0 + x * x, 0.5 * (1.0 + decay_rate_));
      decay_const_ = std::max(decay_const_, std::abs(s.c(x) - 1.0) * w);
    }
    decay_const_ *= 1.0 + 1e-4;  // sampled sup, padded to a true bound
  }

  if (gamma0_ > 0.0) {
    // The lambdas capture the shape by value: the caches stay valid across
    // profile copies and moves.
    cum_abs_q_ = std::make_shared<const num::CumulativeIntegral>(
        [sh = s](double x) { return std::abs(sh.q(x)); }, breakpoints_);
    cum_Q_ = std::make_shared<const num::CumulativeIntegral>(
        [sh = s](double x) { return sh.Q(x); }, breakpoints_);
  }
}

double Profile::int_abs_q() const {
  return cum_abs_q_ ? cum_abs_q_->total() : 0.0;
}

double Profile::gamma(double x) const {
  if (!cum_abs_q_) return 0.0;
  return cum_abs_q_->total() - cum_abs_q_->value(x);
}

double Profile::eta(double x) const {
  return cum_abs_q_ ? cum_abs_q_->value(x) : 0.0;
}

double Profile::int_Q_total() const { return cum_Q_ ? cum_Q_->total() : 0.0; }

double Profile::int_Q_right(double x) const {
  if (!cum_Q_) return 0.0;
  return cum_Q_->total() - cum_Q_->value(x);
}

double Profile::int_Q_left(double x) const {
  return cum_Q_ ? cum_Q_->value(x) : 0.0;
}

double Profile::chi(double x, ChiVariant v) const {
  if (v == ChiVariant::RightTail) return x + int_Q_right(x);
  return x - int_Q_left(x);
}

double Profile::chi_inv(double y, ChiVariant v) const {
  // chi is strictly increasing with chi' = 1/c in [1/cM, 1/c0]. Outside the
  // support chi(x) = x + const, inverted exactly; inside, safeguarded Newton.
  const double iq = int_Q_total();
  if (v == ChiVariant::RightTail) {
    if (y >= support_max_) return y;            // chi(x) = x on the right
    if (y <= support_min_ + iq) return y - iq;  // chi(x) = x + ∫Q on the left
  } else {
    if (y <= support_min_) return y;            // chi(x) = x on the left
    if (y >= support_max_ - iq) return y + iq;  // chi(x) = x - ∫Q right
  }

  double lo = support_min_, hi = support_max_;
  double x = std::clamp(y, lo, hi);
  for (int it = 0; it < 100; ++it) {
    const double fx = chi(x, v) - y;
    if (std::abs(fx) < 1e-14 * (1.0 + std::abs(y))) return x;
    if (fx > 0)
      hi = x;
    else
      lo = x;
    double step = fx * c(x);  // Newton with chi' = 1/c
    double xn = x - step;
    if (!(xn > lo && xn < hi)) xn = 0.5 * (lo + hi);
    if (xn == x) return x;
    x = xn;
  }
  throw SolverError("chi_inv root-find failed (non-monotone data?)", y);
}

ScalarFunctionals Profile::functionals() const {
  ScalarFunctionals f;
  f.gamma0 = gamma0_;
  if (gamma0_ == 0.0) return f;

  const auto& bp = breakpoints_;
  f.int_q = num::panel_integrate(
      [this](double x) { return q(x); },
      num::panel_edges(support_min_, support_max_, bp, 0.0, 8));
  f.int_Q = int_Q_total();
  f.int_Q2 = num::panel_integrate(
      [this](double x) {
        const double v = Q(x);
        return v * v;
      },
      num::panel_edges(support_min_, support_max_, bp, 0.0, 8));

  if (has_derivative()) {
    f.bv_log_mu = num::panel_integrate(
        [this](double x) { return std::abs(c_prime(x)) / c(x); },
        num::panel_edges(support_min_, support_max_, bp, 0.0, 64));
  } else {
    // Total variation of log c for discontinuous kinds.
    double tv = 0.0;
    for (std::size_t i = 1; i < shape_.speeds.size(); ++i)
      tv += std::abs(std::log(shape_.speeds[i]) -
                     std::log(shape_.speeds[i - 1]));
    f.bv_log_mu = tv;
    f.bv_is_total_variation = true;
  }
  return f;
}

}  // namespace helmscat
