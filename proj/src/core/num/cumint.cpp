#include "cumint.hpp"

#include <algorithm>
#include <cmath>

#include "../errors.hpp"
#include "gl16.hpp"

namespace helmscat::num {

CumulativeIntegral::CumulativeIntegral(std::function<double(double)> f,
                                       std::vector<double> breakpoints,
                                       int nodes_per_piece)
    : f_(std::move(f)) {
  if (breakpoints.size() < 2)
    throw QuadratureError("cumulative integral needs a nonempty domain");
  std::sort(breakpoints.begin(), breakpoints.end());
  breakpoints.erase(std::unique(breakpoints.begin(), breakpoints.end()),
                    breakpoints.end());

  nodes_.push_back(breakpoints.front());
  for (std::size_t p = 0; p + 1 < breakpoints.size(); ++p) {
    const double a = breakpoints[p], b = breakpoints[p + 1];
    const int n = std::max(2, nodes_per_piece);
    for (int j = 1; j < n; ++j) nodes_.push_back(a + (b - a) * j / (n - 1));
  }

  cum_.assign(nodes_.size(), 0.0);
  for (std::size_t i = 1; i < nodes_.size(); ++i)
    cum_[i] = cum_[i - 1] + gl16(f_, nodes_[i - 1], nodes_[i]);
  total_ = cum_.back();
}

double CumulativeIntegral::value(double x) const {
  if (nodes_.empty()) return 0.0;
  if (x <= nodes_.front()) return 0.0;
  if (x >= nodes_.back()) return total_;
  auto it = std::upper_bound(nodes_.begin(), nodes_.end(), x);
  const std::size_t i = (std::size_t)(it - nodes_.begin()) - 1;
  if (x == nodes_[i]) return cum_[i];
  return cum_[i] + gl16(f_, nodes_[i], x);
}

}  // namespace helmscat::num
