#include "scatter.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "errors.hpp"
#include "num/extrap.hpp"
#include "num/gl16.hpp"
#include "util/parallel.hpp"

namespace helmscat {

namespace {

constexpr Cplx kI{0.0, 1.0};

// Quadrature nodes over the support: split at profile breakpoints and cap
// panels at one oscillation period of e^{2ikt}.
std::vector<double> support_panels(const Profile& p, double abs_k,
                                   int min_panels) {
  const double period = std::numbers::pi / std::max(abs_k, 1e-6);
  return num::panel_edges(p.support_min(), p.support_max(), p.breakpoints(),
                          period, min_panels);
}

struct QuadNodes {
  std::vector<double> xs;
  std::vector<double> ws;
};

QuadNodes panel_nodes(const std::vector<double>& edges) {
  QuadNodes out;
  out.xs.reserve(16 * (edges.size() - 1));
  out.ws.reserve(16 * (edges.size() - 1));
  std::array<double, 16> xs, ws;
  for (std::size_t i = 0; i + 1 < edges.size(); ++i) {
    num::gl16_points(edges[i], edges[i + 1], xs, ws);
    for (int j = 0; j < 16; ++j) {
      out.xs.push_back(xs[j]);
      out.ws.push_back(ws[j]);
    }
  }
  return out;
}

struct IntegralPathResult {
  Cplx inv_T;
  Cplx R2_over_T;
  ComplexField m1;  // includes the left support edge as final point
};

IntegralPathResult integral_path(const Profile& p, Cplx k,
                                 const SolveOptions& opts) {
  const auto edges = support_panels(p, std::abs(k), opts.min_panels);
  QuadNodes nodes = panel_nodes(edges);
  nodes.xs.insert(nodes.xs.begin(), p.support_min());
  nodes.ws.insert(nodes.ws.begin(), 0.0);

  IntegralPathResult res;
  res.m1 = solve_m1(p, k, nodes.xs, opts.ode);

  Cplx s0{0.0, 0.0}, s2{0.0, 0.0};
  for (std::size_t i = 1; i < nodes.xs.size(); ++i) {
    const double x = nodes.xs[i];
    const Cplx qm = p.q(x) * res.m1.m[i];
    s0 += nodes.ws[i] * qm;
    s2 += nodes.ws[i] * std::exp(2.0 * kI * k * x) * qm;
  }
  res.inv_T = 1.0 - k / (2.0 * kI) * s0;
  res.R2_over_T = k / (2.0 * kI) * s2;
  return res;
}

}  // namespace

ScatterPoint scattering_at(const Profile& p, double k,
                           const SolveOptions& opts) {
  if (k == 0.0)
    throw ValidationError("scattering_at needs k != 0 (the k = 0 limit is stored, not computed)");

  ScatterPoint pt;
  pt.k = k;
  pt.method = ScatterMethod::IntegralPath;
  if (p.gamma0() == 0.0) {
    pt.T = 1.0;
    pt.R1 = pt.R2 = 0.0;
    return pt;
  }

  const IntegralPathResult ip = integral_path(p, k, opts);
  if (std::abs(ip.inv_T) < 1e-12)
    throw SolverError("1/T collapsed to zero; 2ik/T cannot vanish, so the forward solve failed");
  pt.T = 1.0 / ip.inv_T;
  pt.R2 = pt.T * ip.R2_over_T;
  // R1 T(-k) + R2(-k) T(k) = 0 with conjugation symmetry at real k.
  pt.R1 = -std::conj(pt.R2) * pt.T / std::conj(pt.T);

  // Wronskian route at the left support edge: u2 = e^{-ikx} exactly there.
  const double a = p.support_min();
  const Cplx u1 = jost_u(ip.m1, 0);
  const Cplx u1p = jost_u_prime(ip.m1, 0);
  const Cplx e_m = std::exp(-kI * k * a);  // u2(a)
  // [u1, u2] = u1' u2 - u1 u2' = 2ik/T
  const Cplx T_w = 2.0 * kI * k / (u1p * e_m + u1 * kI * k * e_m);
  // [u2(.,-k), u1] = 2ik R2/T with u2(a,-k) = e^{ika}
  const Cplx e_p = std::exp(kI * k * a);
  const Cplx R2_w = T_w * (kI * k * e_p * u1 - e_p * u1p) / (2.0 * kI * k);
  const Cplx R1_w = T_w *
                    (std::conj(u1) * (-kI) * k * e_m - std::conj(u1p) * e_m) /
                    (2.0 * kI * k);

  pt.path_disagreement = std::max(
      {std::abs(pt.T - T_w), std::abs(pt.R2 - R2_w), std::abs(pt.R1 - R1_w)});
  const double un2 = std::abs(1.0 - std::norm(pt.T) - std::norm(pt.R2));
  const double un1 = std::abs(1.0 - std::norm(pt.T) - std::norm(pt.R1));
  pt.unitarity_residual = std::max({un1, un2, pt.path_disagreement});
  return pt;
}

ScatterGrid scattering_grid(const Profile& p, std::span<const double> ks,
                            const SolveOptions& opts) {
  ScatterGrid grid;
  grid.ks.assign(ks.begin(), ks.end());
  if (!std::is_sorted(grid.ks.begin(), grid.ks.end()))
    throw ValidationError("k-grid must be sorted");
  for (double k : grid.ks)
    if (k == 0.0) throw ValidationError("k-grid must exclude 0");

  grid.points.resize(grid.ks.size());
  util::parallel_for(grid.ks.size(), opts.jobs, [&](std::size_t i) {
    try {
      grid.points[i] = scattering_at(p, grid.ks[i], opts);
    } catch (const Error& e) {
      throw SolverError("k-grid point " + std::to_string(i) + " (k = " +
                            std::to_string(grid.ks[i]) + "): " + e.what(),
                        grid.ks[i]);
    }
  });
  return grid;
}

Cplx low_k_slope(const ScatterGrid& grid) {
  // Smallest positive ks, ascending; R2(k)/k extends continuously through 0.
  std::vector<double> hs;
  std::vector<Cplx> ys;
  for (std::size_t i = 0; i < grid.ks.size(); ++i) {
    if (grid.ks[i] > 0.0 && grid.ks[i] <= 0.1) {
      hs.push_back(grid.ks[i]);
      ys.push_back(grid.points[i].R2 / grid.ks[i]);
    }
  }
  if (hs.size() < 2)
    throw SolverError("low_k_slope needs at least two grid points with 0 < k <= 0.1");
  if (hs.size() > 6) {
    hs.resize(6);
    ys.resize(6);
  }
  return num::neville_at_zero<Cplx>(hs, ys).value;
}

Cplx transmission_upper(const Profile& p, Cplx k, const SolveOptions& opts) {
  if (!(k.imag() > 0.0))
    throw ValidationError("transmission_upper needs Im k > 0");
  if (p.gamma0() == 0.0) return {1.0, 0.0};
  const IntegralPathResult ip = integral_path(p, k, opts);
  if (std::abs(ip.inv_T) < 1e-300)
    throw SolverError("transmission integral did not converge");
  return 1.0 / ip.inv_T;
}

Cplx transmission_from_left(const Profile& p, double k,
                            const SolveOptions& opts) {
  if (k == 0.0) throw ValidationError("transmission_from_left needs k != 0");
  if (p.gamma0() == 0.0) return {1.0, 0.0};
  const auto edges = support_panels(p, std::abs(k), opts.min_panels);
  QuadNodes nodes = panel_nodes(edges);
  const ComplexField m2 = solve_m2(p, k, nodes.xs, opts.ode);
  Cplx s0{0.0, 0.0};
  for (std::size_t i = 0; i < nodes.xs.size(); ++i)
    s0 += nodes.ws[i] * p.q(nodes.xs[i]) * m2.m[i];
  const Cplx inv_T = 1.0 - k / (2.0 * kI) * s0;
  return 1.0 / inv_T;
}

double bilinear_identity_residual(const Profile& p, double k,
                                  std::span<const double> xs,
                                  const SolveOptions& opts) {
  const ScatterPoint pt = scattering_at(p, k, opts);
  const ComplexField f1 = solve_m1(p, k, xs, opts.ode);
  const ComplexField f2 = solve_m2(p, k, xs, opts.ode);
  double worst = 0.0;
  for (std::size_t i = 0; i < f1.m.size(); ++i) {
    const Cplx tm1 = pt.T * f1.m[i];
    const Cplx tm2 = pt.T * f2.m[i];
    const double lhs = 2.0 * std::real(pt.T * f1.m[i] * f2.m[i]);
    const double rhs = std::norm(tm1) + std::norm(tm2);
    worst = std::max(worst, std::abs(lhs - rhs));
  }
  return worst;
}

std::vector<double> log_k_grid(double lo, double hi, std::size_t n_per_sign) {
  if (!(lo > 0.0) || !(hi > lo) || n_per_sign < 2)
    throw ValidationError("log k-grid needs 0 < lo < hi and >= 2 points");
  std::vector<double> pos(n_per_sign);
  const double la = std::log(lo), lb = std::log(hi);
  for (std::size_t i = 0; i < n_per_sign; ++i)
    pos[i] = std::exp(la + (lb - la) * i / (n_per_sign - 1));
  std::vector<double> ks;
  ks.reserve(2 * n_per_sign);
  for (std::size_t i = n_per_sign; i-- > 0;) ks.push_back(-pos[i]);
  for (std::size_t i = 0; i < n_per_sign; ++i) ks.push_back(pos[i]);
  return ks;
}

}  // namespace helmscat
