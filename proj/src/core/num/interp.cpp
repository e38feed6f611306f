#include "interp.hpp"

#include <algorithm>
#include <cmath>

#include "../errors.hpp"

namespace helmscat::num {

MonotoneCubic::MonotoneCubic(std::vector<double> xs, std::vector<double> ys)
    : xs_(std::move(xs)), ys_(std::move(ys)) {
  const std::size_t n = xs_.size();
  if (n < 2 || ys_.size() != n)
    throw ValidationError("interpolant needs >= 2 matching samples");
  for (std::size_t i = 1; i < n; ++i)
    if (!(xs_[i] > xs_[i - 1]))
      throw ValidationError("interpolant grid must be strictly increasing");

  std::vector<double> h(n - 1), delta(n - 1);
  for (std::size_t i = 0; i + 1 < n; ++i) {
    h[i] = xs_[i + 1] - xs_[i];
    delta[i] = (ys_[i + 1] - ys_[i]) / h[i];
  }

  d_.assign(n, 0.0);
  // Parabolic (three-point) slope estimates.
  for (std::size_t i = 1; i + 1 < n; ++i)
    d_[i] = (h[i] * delta[i - 1] + h[i - 1] * delta[i]) / (h[i - 1] + h[i]);
  d_[0] = delta[0] + (delta[0] - (n > 2 ? d_[1] : delta[0]));
  d_[n - 1] =
      delta[n - 2] + (delta[n - 2] - (n > 2 ? d_[n - 2] : delta[n - 2]));

  // Fritsch-Carlson safeguard: zero slope at data extrema, and clamp into
  // [0, 3*min(|delta|)] (signed) inside monotone runs.
  auto limit = [](double d, double dl, double dr) {
    if (dl * dr <= 0.0) return 0.0;
    const double cap = 3.0 * std::min(std::abs(dl), std::abs(dr));
    const double s = dl > 0 ? 1.0 : -1.0;
    if (d * s <= 0.0) return 0.0;
    return s * std::min(std::abs(d), cap);
  };
  for (std::size_t i = 1; i + 1 < n; ++i)
    d_[i] = limit(d_[i], delta[i - 1], delta[i]);
  d_[0] = limit(d_[0], delta[0], delta[0]);
  d_[n - 1] = limit(d_[n - 1], delta[n - 2], delta[n - 2]);
}

std::size_t MonotoneCubic::interval(double x) const {
  auto it = std::upper_bound(xs_.begin(), xs_.end(), x);
  std::size_t i = (it == xs_.begin()) ? 0 : (std::size_t)(it - xs_.begin()) - 1;
  return std::min(i, xs_.size() - 2);
}

double MonotoneCubic::operator()(double x) const {
  if (x <= xs_.front()) return ys_.front();
  if (x >= xs_.back()) return ys_.back();
  const std::size_t i = interval(x);
  const double h = xs_[i + 1] - xs_[i];
  const double t = (x - xs_[i]) / h;
  const double t2 = t * t, t3 = t2 * t;
  return ys_[i] * (2 * t3 - 3 * t2 + 1) + h * d_[i] * (t3 - 2 * t2 + t) +
         ys_[i + 1] * (-2 * t3 + 3 * t2) + h * d_[i + 1] * (t3 - t2);
}

double MonotoneCubic::derivative(double x) const {
  if (x <= xs_.front() || x >= xs_.back()) return 0.0;
  const std::size_t i = interval(x);
  const double h = xs_[i + 1] - xs_[i];
  const double t = (x - xs_[i]) / h;
  const double t2 = t * t;
  return (ys_[i] * (6 * t2 - 6 * t) / h + d_[i] * (3 * t2 - 4 * t + 1) +
          ys_[i + 1] * (-6 * t2 + 6 * t) / h + d_[i + 1] * (3 * t2 - 2 * t));
}

LinearInterp::LinearInterp(std::vector<double> xs, std::vector<double> ys)
    : xs_(std::move(xs)), ys_(std::move(ys)) {
  if (xs_.size() < 2 || ys_.size() != xs_.size())
    throw ValidationError("linear interpolant needs >= 2 matching samples");
  for (std::size_t i = 1; i < xs_.size(); ++i)
    if (!(xs_[i] > xs_[i - 1]))
      throw ValidationError("linear interpolant grid must be increasing");
}

double LinearInterp::operator()(double x) const {
  if (x <= xs_.front()) return ys_.front();
  if (x >= xs_.back()) return ys_.back();
  auto it = std::upper_bound(xs_.begin(), xs_.end(), x);
  const std::size_t i = (std::size_t)(it - xs_.begin()) - 1;
  const double t = (x - xs_[i]) / (xs_[i + 1] - xs_[i]);
  return ys_[i] + t * (ys_[i + 1] - ys_[i]);
}

}  // namespace helmscat::num
