#pragma once

#include <functional>
#include <vector>

namespace helmscat::num {

// Cumulative integral F(x) = ∫_{lo}^{x} f of a piecewise-smooth function.
// Breakpoints mark the smooth pieces; within each piece the antiderivative is
// tabulated on a uniform node grid with per-subinterval Gauss panels, and an
// evaluation finishes with one Gauss panel from the nearest node, so accuracy
// is that of the 16-point rule on a sub-node interval.
class CumulativeIntegral {
public:
  CumulativeIntegral() = default;
  CumulativeIntegral(std::function<double(double)> f,
                     std::vector<double> breakpoints, int nodes_per_piece = 257);

  double value(double x) const;  // ∫_{lo}^{max(lo,min(x,hi))} f
  double total() const { return total_; }
  double lo() const { return nodes_.front(); }
  double hi() const { return nodes_.back(); }

private:
  std::function<double(double)> f_;
  std::vector<double> nodes_;  // ascending, includes all breakpoints
  std::vector<double> cum_;    // cumulative value at each node
  double total_ = 0.0;
};

}  // namespace helmscat::num
