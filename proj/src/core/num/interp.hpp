#pragma once

#include <cstddef>
#include <vector>

namespace helmscat::num {

// Monotonicity-preserving C^1 cubic interpolant on a strictly increasing
// grid. Node slopes come from three-point parabolic estimates and are then
// clamped with the Fritsch-Carlson safeguard, so the interpolant never
// overshoots the data in monotone runs and is flat at data extrema.
class MonotoneCubic {
public:
  MonotoneCubic() = default;
  MonotoneCubic(std::vector<double> xs, std::vector<double> ys);

  double operator()(double x) const;
  double derivative(double x) const;

  double x_front() const { return xs_.front(); }
  double x_back() const { return xs_.back(); }
  std::size_t size() const { return xs_.size(); }

private:
  std::size_t interval(double x) const;

  std::vector<double> xs_, ys_, d_;
};

// Piecewise-linear interpolant; evaluates to the edge value outside the grid.
class LinearInterp {
public:
  LinearInterp() = default;
  LinearInterp(std::vector<double> xs, std::vector<double> ys);

  double operator()(double x) const;
  double x_front() const { return xs_.front(); }
  double x_back() const { return xs_.back(); }
  const std::vector<double>& xs() const { return xs_; }
  const std::vector<double>& ys() const { return ys_; }

private:
  std::vector<double> xs_, ys_;
};

}  // namespace helmscat::num
