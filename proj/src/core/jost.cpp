#include "jost.hpp"

#include <algorithm>
#include <cmath>

#include "errors.hpp"

namespace helmscat {

namespace {

constexpr Cplx kI{0.0, 1.0};

void check_k(Cplx k) {
  if (k.imag() < -1e-12)
    throw ValidationError("wavenumber must lie in the closed upper half-plane");
}

// Free propagation of (m, m') across a q = 0 region, for the m1 equation
// m'' + 2ik m' = 0:  m'(x) = m'_0 e^{-2ik(x-x0)}.
void free_step_m1(Cplx k, double x0, double x, Cplx& m, Cplx& mp) {
  if (k == 0.0) {
    m += mp * (x - x0);
    return;
  }
  const Cplx e = std::exp(-2.0 * kI * k * (x - x0));
  m += mp * (1.0 - e) / (2.0 * kI * k);
  mp *= e;
}

// For the m2 equation m'' - 2ik m' = 0:  m'(x) = m'_0 e^{+2ik(x-x0)}.
void free_step_m2(Cplx k, double x0, double x, Cplx& m, Cplx& mp) {
  if (k == 0.0) {
    m += mp * (x - x0);
    return;
  }
  const Cplx e = std::exp(2.0 * kI * k * (x - x0));
  m += mp * (e - 1.0) / (2.0 * kI * k);
  mp *= e;
}

ComplexField solve_reduced(const Profile& p, Cplx k,
                           std::span<const double> xs, Direction dir,
                           const num::OdeOptions& opt) {
  check_k(k);
  ComplexField out;
  out.k = k;
  out.direction = dir;
  out.xs.assign(xs.begin(), xs.end());
  if (!std::is_sorted(out.xs.begin(), out.xs.end()))
    throw ValidationError("jost grid must be ascending");
  const std::size_t n = out.xs.size();
  out.m.assign(n, Cplx{1.0, 0.0});
  out.m_prime.assign(n, Cplx{0.0, 0.0});

  // q == 0 or k == 0 forces m == 1, m' == 0 exactly.
  if (p.gamma0() == 0.0 || k == 0.0) return out;

  const double a = p.support_min(), b = p.support_max();
  const bool from_right = (dir == Direction::FromRight);

  // March through the support from the asymptotic side, splitting at profile
  // breakpoints; land on every requested grid point inside. RK stages touch
  // the segment endpoints, so q is evaluated a hair inside the current smooth
  // piece (its value exactly at a discontinuity is the wrong one-sided limit
  // for one of the two directions).
  using Solver = num::Rk45<2>;
  Solver::State y = {Cplx{1.0, 0.0}, Cplx{0.0, 0.0}};

  double seg_lo = a, seg_hi = b;
  auto rhs = [&](double x, const Solver::State& s, Solver::State& d) {
    const double eps = 1e-12 * (1.0 + std::abs(seg_lo) + std::abs(seg_hi));
    const double xe = std::clamp(x, seg_lo + eps, seg_hi - eps);
    d[0] = s[1];
    if (from_right)
      d[1] = k * k * p.q(xe) * s[0] - 2.0 * kI * k * s[1];
    else
      d[1] = k * k * p.q(xe) * s[0] + 2.0 * kI * k * s[1];
  };

  // Indices of grid points inside [a, b], in travel order.
  std::vector<std::size_t> inside;
  for (std::size_t i = 0; i < n; ++i)
    if (out.xs[i] > a && out.xs[i] < b) inside.push_back(i);
  if (from_right) std::reverse(inside.begin(), inside.end());

  std::vector<double> pieces = p.breakpoints();
  if (from_right) std::reverse(pieces.begin(), pieces.end());

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
        rhs, y, x0, x1, sinks,
        [&](double, const Solver::State& s) {
          const std::size_t idx = inside[emit++];
          out.m[idx] = s[0];
          out.m_prime[idx] = s[1];
        },
        opt);
  }

  // Fill points at/beyond the far side analytically (free propagation), and
  // points on the asymptotic side keep the exact terminal values.
  const Cplx m_end = y[0], mp_end = y[1];
  for (std::size_t i = 0; i < n; ++i) {
    const double x = out.xs[i];
    if (from_right && x <= a) {
      Cplx m = m_end, mp = mp_end;
      free_step_m1(k, a, x, m, mp);
      out.m[i] = m;
      out.m_prime[i] = mp;
    } else if (!from_right && x >= b) {
      Cplx m = m_end, mp = mp_end;
      free_step_m2(k, b, x, m, mp);
      out.m[i] = m;
      out.m_prime[i] = mp;
    }
  }
  return out;
}

}  // namespace

ComplexField solve_m1(const Profile& p, Cplx k, std::span<const double> xs,
                      const num::OdeOptions& opt) {
  return solve_reduced(p, k, xs, Direction::FromRight, opt);
}

ComplexField solve_m2(const Profile& p, Cplx k, std::span<const double> xs,
                      const num::OdeOptions& opt) {
  return solve_reduced(p, k, xs, Direction::FromLeft, opt);
}

NonvanishingReport jost_nonvanishing_check(const ComplexField& field) {
  NonvanishingReport rep;
  if (field.m.empty()) return rep;
  rep.min_abs = std::abs(field.m[0]);
  rep.argmin_x = field.xs[0];
  for (std::size_t i = 1; i < field.m.size(); ++i) {
    const double a = std::abs(field.m[i]);
    if (a < rep.min_abs) {
      rep.min_abs = a;
      rep.argmin_x = field.xs[i];
    }
  }
  rep.ok = rep.min_abs > 0.0;
  return rep;
}

Cplx jost_u(const ComplexField& f, std::size_t i) {
  const Cplx phase = (f.direction == Direction::FromRight)
                         ? std::exp(kI * f.k * f.xs[i])
                         : std::exp(-kI * f.k * f.xs[i]);
  return phase * f.m[i];
}

Cplx jost_u_prime(const ComplexField& f, std::size_t i) {
  if (f.direction == Direction::FromRight) {
    const Cplx phase = std::exp(kI * f.k * f.xs[i]);
    return phase * (f.m_prime[i] + kI * f.k * f.m[i]);
  }
  const Cplx phase = std::exp(-kI * f.k * f.xs[i]);
  return phase * (f.m_prime[i] - kI * f.k * f.m[i]);
}

std::vector<double> default_x_grid(const Profile& p, std::size_t n,
                                   double margin) {
  double a = p.support_min() - margin, b = p.support_max() + margin;
  if (b <= a) {
    a = -1.0;
    b = 1.0;
  }
  std::vector<double> xs(n);
  for (std::size_t i = 0; i < n; ++i) xs[i] = a + (b - a) * i / (n - 1);
  return xs;
}

}  // namespace helmscat
