#pragma once

#include <array>
#include <cmath>
#include <complex>
#include <cstddef>
#include <vector>

namespace helmscat::num {

// 16-point Gauss-Legendre rule on [-1,1], positive half (rule is symmetric).
inline constexpr std::array<double, 8> kGl16Nodes = {
    0.0950125098376374401853193, 0.2816035507792589132304605,
    0.4580167776572273863424194, 0.6178762444026437484466718,
    0.7554044083550030338951012, 0.8656312023878317438804679,
    0.9445750230732325760779884, 0.9894009349916499325961542,
};
inline constexpr std::array<double, 8> kGl16Weights = {
    0.1894506104550684962853967, 0.1826034150449235888667637,
    0.1691565193950025381893121, 0.1495959888165767320815017,
    0.1246289712555338720524763, 0.0951585116824927848099251,
    0.0622535239386478928628438, 0.0271524594117540948517806,
};

// Nodes/weights of the 16-point rule mapped to [a,b], in ascending order.
inline void gl16_points(double a, double b, std::array<double, 16>& xs,
                        std::array<double, 16>& ws) {
  const double mid = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  for (std::size_t i = 0; i < 8; ++i) {
    xs[7 - i] = mid - half * kGl16Nodes[i];
    xs[8 + i] = mid + half * kGl16Nodes[i];
    ws[7 - i] = half * kGl16Weights[i];
    ws[8 + i] = half * kGl16Weights[i];
  }
}

template <typename F>
auto gl16(F&& f, double a, double b) {
  std::array<double, 16> xs, ws;
  gl16_points(a, b, xs, ws);
  auto acc = ws[0] * f(xs[0]);
  for (std::size_t i = 1; i < 16; ++i) acc += ws[i] * f(xs[i]);
  return acc;
}

// Panel edges over [a,b]: split at the interior breakpoints, then subdivide
// each piece so no panel exceeds max_width, with at least min_panels total.
inline std::vector<double> panel_edges(double a, double b,
                                       const std::vector<double>& breakpoints,
                                       double max_width, int min_panels) {
  std::vector<double> edges;
  edges.push_back(a);
  for (double t : breakpoints)
    if (t > a && t < b) edges.push_back(t);
  edges.push_back(b);

  if (min_panels > 0) {
    double w = (b - a) / min_panels;
    if (max_width <= 0 || w < max_width) max_width = w;
  }
  std::vector<double> out;
  out.push_back(edges.front());
  for (std::size_t i = 0; i + 1 < edges.size(); ++i) {
    const double lo = edges[i], hi = edges[i + 1];
    int n = 1;
    if (max_width > 0) n = std::max(1, (int)std::ceil((hi - lo) / max_width));
    for (int j = 1; j <= n; ++j) out.push_back(lo + (hi - lo) * j / n);
  }
  return out;
}

// Composite 16-point rule over the given panel edges.
template <typename F>
auto panel_integrate(F&& f, const std::vector<double>& edges) {
  auto acc = gl16(f, edges[0], edges[1]);
  for (std::size_t i = 1; i + 1 < edges.size(); ++i)
    acc += gl16(f, edges[i], edges[i + 1]);
  return acc;
}

}  // namespace helmscat::num
