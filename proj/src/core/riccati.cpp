#include "riccati.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "errors.hpp"
#include "jost.hpp"
#include "num/gl16.hpp"
#include "num/rk45.hpp"

namespace helmscat {

namespace {

constexpr Cplx kI{0.0, 1.0};

void check_k(Cplx k) {
  if (k.imag() < -1e-12)
    throw ValidationError("wavenumber must lie in the closed upper half-plane");
}

// Generic right-to-left (or mirrored) march of a scalar Riccati field over
// the smooth pieces of the profile, landing on the requested grid points.
// guard(value, x) may throw on invalid states.
template <typename Rhs, typename Guard>
RiccatiField march_scalar(const Profile& p, Cplx k,
                          std::span<const double> xs, RiccatiWhich which,
                          Cplx terminal, bool from_right, Rhs&& rhs,
                          Guard&& guard, const num::OdeOptions& opt) {
  RiccatiField out;
  out.k = k;
  out.which = which;
  out.xs.assign(xs.begin(), xs.end());
  if (!std::is_sorted(out.xs.begin(), out.xs.end()))
    throw ValidationError("riccati grid must be ascending");
  out.values.assign(out.xs.size(), terminal);

  const double a = p.support_min(), b = p.support_max();
  using Solver = num::Rk45<1>;
  Solver::State y = {terminal};

  // Evaluate the coefficients a hair inside the current smooth piece; RK
  // stages touch segment endpoints where a discontinuous q(x) would give the
  // wrong one-sided value. Infinite bounds leave that side unclamped.
  double seg_lo = a, seg_hi = b;
  auto f = [&](double x, const Solver::State& s, Solver::State& d) {
    double xe = x;
    if (std::isfinite(seg_lo))
      xe = std::max(xe, seg_lo + 1e-12 * (1.0 + std::abs(seg_lo)));
    if (std::isfinite(seg_hi))
      xe = std::min(xe, seg_hi - 1e-12 * (1.0 + std::abs(seg_hi)));
    d[0] = rhs(xe, s[0]);
  };

  std::vector<std::size_t> inside;
  for (std::size_t i = 0; i < out.xs.size(); ++i)
    if (out.xs[i] > a && out.xs[i] < b) inside.push_back(i);
  std::vector<double> pieces = p.breakpoints();
  if (from_right) {
    std::reverse(inside.begin(), inside.end());
    std::reverse(pieces.begin(), pieces.end());
  }

  std::size_t next = 0;
  for (std::size_t seg = 0; seg + 1 < pieces.size(); ++seg) {
    const double x0 = pieces[seg], x1 = pieces[seg + 1];
    seg_lo = std::min(x0, x1);
    seg_hi = std::max(x0, x1);
    std::vector<double> sinks;
    while (next < inside.size()) {
      const double xq = out.xs[inside[next]];
      const bool in_seg =
          from_right ? (xq <= x0 && xq >= x1) : (xq >= x0 && xq <= x1);
      if (!in_seg) break;
      sinks.push_back(xq);
      ++next;
    }
    std::size_t emit = next - sinks.size();
    y = Solver::integrate(
        f, y, x0, x1, sinks,
        [&](double x, const Solver::State& s) {
          guard(s[0], x);
          out.values[inside[emit++]] = s[0];
        },
        opt);
    guard(y[0], x1);
  }

  // Points beyond the far edge: evolve the free (q = 0, c = 1) equation
  // analytically where possible; the caller-side formulas only need the
  // support-edge value, so continue numerically piece-free otherwise.
  for (std::size_t i = 0; i < out.xs.size(); ++i) {
    const double x = out.xs[i];
    if (from_right && x <= a) {
      if (which == RiccatiWhich::R) {
        // free r equation: r' = -2ik r  =>  phase rotation
        out.values[i] = y[0] * std::exp(-2.0 * kI * k * (x - a));
      } else {
        seg_lo = -std::numeric_limits<double>::infinity();
        seg_hi = a;
        Solver::State z = y;
        if (x < a) z = Solver::integrate(f, z, a, x, {}, [](double, auto&) {}, opt);
        out.values[i] = z[0];
      }
    } else if (!from_right && x >= b) {
      seg_lo = b;
      seg_hi = std::numeric_limits<double>::infinity();
      Solver::State z = y;
      if (x > b) z = Solver::integrate(f, z, b, x, {}, [](double, auto&) {}, opt);
      out.values[i] = z[0];
    }
  }
  return out;
}

}  // namespace

RiccatiField solve_r(const Profile& p, Cplx k, std::span<const double> xs,
                     const SolveOptions& opts) {
  check_k(k);
  if (k == 0.0 || p.gamma0() == 0.0) {
    // w = 1, r = 0 exactly (k = 0 branch of the definition).
    RiccatiField out;
    out.k = k;
    out.which = RiccatiWhich::R;
    out.xs.assign(xs.begin(), xs.end());
    out.values.assign(out.xs.size(), Cplx{0.0, 0.0});
    return out;
  }
  auto rhs = [&](double x, Cplx r) {
    const Cplx one_plus = 1.0 + r;
    return -2.0 * kI * k * r + kI * k * p.q(x) / 2.0 * one_plus * one_plus;
  };
  auto guard = [&](Cplx r, double x) {
    if (std::abs(r) >= 1.0 - 1e-12)
      throw SolverError("|r| reached 1: Riccati blow-up (invalid state)", x);
  };
  return march_scalar(p, k, xs, RiccatiWhich::R, Cplx{0.0, 0.0}, true, rhs,
                      guard, opts.ode);
}

Cplx r_to_R2(const RiccatiField& field) {
  if (field.which != RiccatiWhich::R)
    throw ValidationError("r_to_R2 needs an r field");
  if (field.xs.empty()) throw ValidationError("empty field");
  const double x = field.xs.front();
  return std::exp(2.0 * kI * field.k * x) * field.values.front();
}

RiccatiField solve_w(const Profile& p, Cplx k, std::span<const double> xs,
                     const SolveOptions& opts) {
  check_k(k);
  if (k == 0.0 || p.gamma0() == 0.0) {
    RiccatiField out;
    out.k = k;
    out.which = RiccatiWhich::W;
    out.xs.assign(xs.begin(), xs.end());
    out.values.assign(out.xs.size(), Cplx{1.0, 0.0});
    return out;
  }
  auto rhs = [&](double x, Cplx w) {
    const double c = p.c(x);
    return kI * k / (c * c) - kI * k * w * w;
  };
  auto guard = [&](Cplx w, double x) {
    if (std::abs(1.0 + w) <= 1.0)
      throw SolverError("|1 + w| <= 1: Re w > 0 violated (solver bug)", x);
  };
  return march_scalar(p, k, xs, RiccatiWhich::W, Cplx{1.0, 0.0}, true, rhs,
                      guard, opts.ode);
}

RiccatiField solve_w_minus(const Profile& p, Cplx k,
                           std::span<const double> xs,
                           const SolveOptions& opts) {
  check_k(k);
  if (k == 0.0 || p.gamma0() == 0.0) {
    RiccatiField out;
    out.k = k;
    out.which = RiccatiWhich::WMinus;
    out.xs.assign(xs.begin(), xs.end());
    out.values.assign(out.xs.size(), Cplx{1.0, 0.0});
    return out;
  }
  auto rhs = [&](double x, Cplx w) {
    const double c = p.c(x);
    return kI * k * w * w - kI * k / (c * c);
  };
  auto guard = [&](Cplx w, double x) {
    if (std::abs(1.0 + w) <= 1.0)
      throw SolverError("|1 + w_minus| <= 1: Re w_minus > 0 violated (solver bug)", x);
  };
  return march_scalar(p, k, xs, RiccatiWhich::WMinus, Cplx{1.0, 0.0}, false,
                      rhs, guard, opts.ode);
}

EnergyIdentityResult energy_identity(const Profile& p, double k,
                                     std::span<const double> xs,
                                     const SolveOptions& opts) {
  if (k == 0.0) throw ValidationError("energy identity needs real k != 0");
  EnergyIdentityResult res;
  if (p.gamma0() == 0.0) return res;

  // Augmented state (r, I) with I(x) = k ∫_x^∞ q Im r dy, so that
  // 1 - |r(x)|^2 = e^{I(x)} is the flow invariant being checked.
  using Solver = num::Rk45<2>;
  const double a = p.support_min(), b = p.support_max();
  double seg_lo = a, seg_hi = b;
  auto rhs = [&](double x, const Solver::State& s, Solver::State& d) {
    const double el = 1e-12 * (1.0 + std::abs(seg_lo));
    const double eh = 1e-12 * (1.0 + std::abs(seg_hi));
    const double q = p.q(std::clamp(x, seg_lo + el, seg_hi - eh));
    const Cplx r = s[0];
    const Cplx one_plus = 1.0 + r;
    d[0] = -2.0 * kI * k * r + kI * k * q / 2.0 * one_plus * one_plus;
    d[1] = -k * q * r.imag();
  };

  std::vector<double> sinks(xs.begin(), xs.end());
  std::erase_if(sinks, [&](double x) { return x <= a || x >= b; });
  std::sort(sinks.begin(), sinks.end(), std::greater<>());

  std::vector<double> pieces = p.breakpoints();
  std::reverse(pieces.begin(), pieces.end());
  Solver::State y = {Cplx{0.0, 0.0}, Cplx{0.0, 0.0}};
  auto visit = [&](const Solver::State& s) {
    const double lhs = 1.0 - std::norm(s[0]);
    const double rhs_v = std::exp(s[1].real());
    res.max_residual = std::max(res.max_residual, std::abs(lhs - rhs_v));
  };
  std::size_t next = 0;
  for (std::size_t seg = 0; seg + 1 < pieces.size(); ++seg) {
    const double x0 = pieces[seg], x1 = pieces[seg + 1];
    seg_lo = x1;
    seg_hi = x0;
    std::vector<double> seg_sinks;
    while (next < sinks.size() && sinks[next] <= x0 && sinks[next] >= x1)
      seg_sinks.push_back(sinks[next++]);
    y = Solver::integrate(
        rhs, y, x0, x1, seg_sinks,
        [&](double x, const Solver::State& s) {
          if (std::abs(s[0]) >= 1.0 - 1e-12)
            throw SolverError("|r| reached 1: Riccati blow-up (invalid state)", x);
          visit(s);
        },
        opts.ode);
  }
  visit(y);
  res.left_edge_value = std::exp(y[1].real());
  return res;
}

double qr_integral(const Profile& p, double kappa, const SolveOptions& opts) {
  if (!(kappa > 0.0)) throw ValidationError("qr_integral needs kappa > 0");
  if (p.gamma0() == 0.0) return 0.0;
  const auto edges = num::panel_edges(p.support_min(), p.support_max(),
                                      p.breakpoints(), 0.0, opts.min_panels);
  std::array<double, 16> gx, gw;
  std::vector<double> nodes;
  std::vector<double> weights;
  for (std::size_t i = 0; i + 1 < edges.size(); ++i) {
    num::gl16_points(edges[i], edges[i + 1], gx, gw);
    nodes.insert(nodes.end(), gx.begin(), gx.end());
    weights.insert(weights.end(), gw.begin(), gw.end());
  }
  const RiccatiField r = solve_r(p, Cplx{0.0, kappa}, nodes, opts);
  double acc = 0.0;
  for (std::size_t i = 0; i < nodes.size(); ++i)
    acc += weights[i] * p.q(nodes[i]) * r.values[i].real();
  return acc;
}

StabilityCheck w_stability_check(const Profile& p1, const Profile& p2,
                                 double kappa, const SolveOptions& opts) {
  if (!(kappa > 0.0)) throw ValidationError("w_stability_check needs kappa > 0");
  StabilityCheck chk;

  const double alpha = 2.0 / (2.0 + p1.cM() * p1.cM() * p1.gamma0()) +
                       2.0 / (2.0 + p2.cM() * p2.cM() * p2.gamma0());

  const double b = std::max(p1.support_max(), p2.support_max());
  double a = std::min(p1.support_min(), p2.support_min());
  if (!(b > a)) return chk;

  // Right of b both w's equal 1 exactly. Left of a the difference decays at
  // rate ~2*kappa; extend the domain until it is negligible.
  const Cplx k{0.0, kappa};
  const double ext = 40.0 * std::max(p1.cM(), p2.cM()) / (2.0 * kappa);
  const double lo = a - std::min(ext, 1e4);

  std::vector<double> bps;
  for (double t : p1.breakpoints()) bps.push_back(t);
  for (double t : p2.breakpoints()) bps.push_back(t);
  bps.push_back(lo);
  bps.push_back(b);
  std::sort(bps.begin(), bps.end());
  const auto edges = num::panel_edges(lo, b, bps, (b - lo) / 64.0, 64);

  std::array<double, 16> gx, gw;
  std::vector<double> nodes, weights;
  for (std::size_t i = 0; i + 1 < edges.size(); ++i) {
    num::gl16_points(edges[i], edges[i + 1], gx, gw);
    nodes.insert(nodes.end(), gx.begin(), gx.end());
    weights.insert(weights.end(), gw.begin(), gw.end());
  }

  const RiccatiField w1 = solve_w(p1, k, nodes, opts);
  const RiccatiField w2 = solve_w(p2, k, nodes, opts);
  double lhs = 0.0, rhs = 0.0;
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    lhs += weights[i] * std::abs(w1.values[i] - w2.values[i]);
    rhs += weights[i] * std::abs(p1.q(nodes[i]) - p2.q(nodes[i]));
  }
  chk.lhs = lhs;
  chk.rhs = rhs / alpha;
  return chk;
}

RiccatiField rho_field(const Profile& p, double k, std::span<const double> xs,
                       const SolveOptions& opts) {
  if (!p.has_derivative())
    throw ValidationError("rho field needs a profile with c' in L1 ∩ L2");
  RiccatiField out;
  out.k = k;
  out.which = RiccatiWhich::Rho;
  out.xs.assign(xs.begin(), xs.end());
  out.values.assign(out.xs.size(), Cplx{0.0, 0.0});
  if (k == 0.0 || p.gamma0() == 0.0) return out;

  const ComplexField m1 = solve_m1(p, k, xs, opts.ode);
  for (std::size_t i = 0; i < out.xs.size(); ++i) {
    const Cplx u1 = jost_u(m1, i);
    const Cplx u1p = jost_u_prime(m1, i);
    const double c = p.c(out.xs[i]);
    out.values[i] = (kI * k * u1 - c * u1p) / (kI * k * u1 + c * u1p);
  }
  return out;
}

}  // namespace helmscat
