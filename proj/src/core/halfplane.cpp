#include "halfplane.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "errors.hpp"
#include "num/extrap.hpp"
#include "num/gl16.hpp"

namespace helmscat {

namespace {
constexpr std::complex<double> kJ{0.0, 1.0};
using Cplx = std::complex<double>;
}  // namespace

BoundaryData::BoundaryData(std::vector<double> ks_, std::vector<double> values_,
                           TailModel tail_)
    : ks(std::move(ks_)), values(std::move(values_)), tail(tail_) {
  if (ks.size() < 2 || ks.size() != values.size())
    throw ValidationError("boundary data needs >= 2 matching samples");
  for (std::size_t i = 1; i < ks.size(); ++i)
    if (!(ks[i] > ks[i - 1]))
      throw ValidationError("boundary grid must be strictly increasing");
  for (double v : values)
    if (!std::isfinite(v))
      throw ValidationError("boundary values must be finite");
}

BoundaryData BoundaryData::with_power_tail(std::vector<double> ks,
                                           std::vector<double> values) {
  BoundaryData b(std::move(ks), std::move(values), TailModel::PowerLaw);

  // Least-squares slope of log|v| vs log|t| over the outer decade of one
  // side; the amplitude is anchored at the grid edge afterwards.
  auto fit_exponent = [&](bool right) -> double {
    const double edge = right ? b.ks.back() : -b.ks.front();
    if (!(edge > 0.0)) return 0.0;
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    int n = 0;
    double sign = 0.0;
    for (std::size_t i = 0; i < b.ks.size(); ++i) {
      const double t = right ? b.ks[i] : -b.ks[i];
      if (t < edge / 10.0 || t > edge) continue;
      const double v = b.values[i];
      if (std::abs(v) < 1e-300) continue;
      if (sign == 0.0) sign = v > 0 ? 1.0 : -1.0;
      if (v * sign <= 0.0) continue;  // mixed signs: no clean power law
      const double lx = std::log(t), ly = std::log(std::abs(v));
      sx += lx;
      sy += ly;
      sxx += lx * lx;
      sxy += lx * ly;
      ++n;
    }
    if (n < 3) return 0.0;
    const double denom = n * sxx - sx * sx;
    if (std::abs(denom) < 1e-30) return 0.0;
    const double p = -(n * sxy - sx * sy) / denom;
    return p > 0.0 ? p : 0.0;  // non-decaying data: flat tail would diverge
  };

  const double pp = fit_exponent(true);
  const double pn = fit_exponent(false);
  if (pp <= 0.0 && pn <= 0.0) {
    b.tail = TailModel::Zero;
    return b;
  }
  b.tail_exponent = std::max(pp, pn);
  // Amplitudes chosen so the tail is continuous at the grid edges.
  b.tail_amp_pos = b.values.back() * std::pow(b.ks.back(), b.tail_exponent);
  b.tail_amp_neg = b.values.front() * std::pow(-b.ks.front(), b.tail_exponent);
  return b;
}

double BoundaryData::eval(double t) const {
  if (t >= ks.front() && t <= ks.back()) {
    auto it = std::upper_bound(ks.begin(), ks.end(), t);
    std::size_t i = (it == ks.begin()) ? 0 : (std::size_t)(it - ks.begin()) - 1;
    i = std::min(i, ks.size() - 2);
    const double u = (t - ks[i]) / (ks[i + 1] - ks[i]);
    return values[i] + u * (values[i + 1] - values[i]);
  }
  if (tail == TailModel::Zero) return 0.0;
  const double a = t > 0 ? tail_amp_pos : tail_amp_neg;
  return a * std::pow(std::abs(t), -tail_exponent);
}

namespace {

// Panel edges for the t-integration: data grid refined near t0 (kernel peak
// of width y) and geometric tail panels out to where the decay kills the
// integrand.
std::vector<double> t_panels(const BoundaryData& b, double t0, double y) {
  std::vector<double> edges;
  const double K_lo = b.ks.front(), K_hi = b.ks.back();

  // Tail panels on the left.
  const double far = std::max({1e7, 1e3 * std::abs(t0), 1e3 * y});
  if (b.tail != TailModel::Zero) {
    std::vector<double> tail_edges;
    for (double t = std::abs(K_lo); t < far; t *= 2.0) tail_edges.push_back(-t);
    tail_edges.push_back(-far);
    std::sort(tail_edges.begin(), tail_edges.end());
    edges.insert(edges.end(), tail_edges.begin(), tail_edges.end());
    edges.pop_back();  // K_lo itself added below
  }

  for (double t : b.ks) edges.push_back(t);

  if (b.tail != TailModel::Zero)
    for (double t = std::abs(K_hi); t < far; t *= 2.0) edges.push_back(t);

  // Refine near the kernel peak.
  std::vector<double> refined;
  const double w = 12.0 * y;
  for (std::size_t i = 0; i + 1 < edges.size(); ++i) {
    refined.push_back(edges[i]);
    const double lo = edges[i], hi = edges[i + 1];
    if (hi < t0 - w || lo > t0 + w) continue;
    const double width = hi - lo;
    const int n = std::min(256, (int)std::ceil(width / std::max(y / 2, 1e-9)));
    for (int j = 1; j < n; ++j) refined.push_back(lo + width * j / n);
  }
  refined.push_back(edges.back());
  std::sort(refined.begin(), refined.end());
  refined.erase(std::unique(refined.begin(), refined.end()), refined.end());
  return refined;
}

}  // namespace

double poisson_extend(const BoundaryData& b, Cplx z) {
  const double x = z.real(), y = z.imag();
  if (!(y > 0.0)) throw ValidationError("poisson_extend needs Im z > 0");
  const auto edges = t_panels(b, x, y);
  auto f = [&](double t) {
    const double d = t - x;
    return y / (d * d + y * y) * b.eval(t);
  };
  double acc = num::panel_integrate(f, edges);

  // Uncovered tails (Zero model contributes nothing; PowerLaw beyond the
  // last geometric panel is below double precision by construction).
  return acc / std::numbers::pi;
}

namespace {

// theta-domain quadrature of ∫ b(t)/(t - z) dt with t = x + y tan(theta):
// integrand (tan(theta) + i) b(x + y tan(theta)); panels split at the data
// kinks so the piecewise-linear interpolant is smooth inside every panel.
Cplx cauchy_kernel_integral(const BoundaryData& b, Cplx z) {
  const double x = z.real(), y = z.imag();
  std::vector<double> thetas;
  thetas.reserve(b.ks.size() + 64);
  for (double t : b.ks) thetas.push_back(std::atan((t - x) / y));

  // Uniform fill so wide gaps (and the tails) are still resolved.
  const double th_lo = -std::numbers::pi / 2, th_hi = std::numbers::pi / 2;
  const int fill = 64;
  for (int i = 0; i <= fill; ++i)
    thetas.push_back(th_lo + (th_hi - th_lo) * i / fill);
  std::sort(thetas.begin(), thetas.end());
  thetas.erase(std::unique(thetas.begin(), thetas.end()), thetas.end());

  // For Zero tails the integrand vanishes outside the data range.
  if (b.tail == TailModel::Zero) {
    const double ta = std::atan((b.ks.front() - x) / y);
    const double tb = std::atan((b.ks.back() - x) / y);
    std::erase_if(thetas, [&](double th) { return th < ta || th > tb; });
  }

  auto f = [&](double th) -> Cplx {
    const double tn = std::tan(th);
    return (tn + kJ) * b.eval(x + y * tn);
  };
  Cplx acc{0.0, 0.0};
  for (std::size_t i = 0; i + 1 < thetas.size(); ++i)
    acc += num::gl16(f, thetas[i], thetas[i + 1]);
  return acc;
}

// z-independent part ∫ k b(k)/(k^2+1) dk.
double second_kernel_integral(const BoundaryData& b) {
  std::vector<double> edges(b.ks.begin(), b.ks.end());
  if (b.tail != TailModel::Zero) {
    const double far = 1e8;
    std::vector<double> all;
    for (double t = std::abs(b.ks.front()); t < far; t *= 2.0) all.push_back(-t);
    std::sort(all.begin(), all.end());
    all.insert(all.end(), edges.begin(), edges.end());
    for (double t = std::abs(b.ks.back()); t < far; t *= 2.0) all.push_back(t);
    edges = std::move(all);
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  }
  auto f = [&](double t) { return t * b.eval(t) / (t * t + 1.0); };
  return num::panel_integrate(f, edges);
}

}  // namespace

Cplx outer_function(const BoundaryData& log_F2, Cplx z) {
  if (!(z.imag() > 0.0)) throw ValidationError("outer_function needs Im z > 0");
  const Cplx cauchy = cauchy_kernel_integral(log_F2, z);
  const double second = second_kernel_integral(log_F2);
  return std::exp(-kJ / (2.0 * std::numbers::pi) * (cauchy - second));
}

BoundaryTrace boundary_trace(const BoundaryData& log_F2, double k0,
                             std::span<const double> eps_sequence) {
  static constexpr double kDefaultEps[] = {1e-2, 5e-3, 2.5e-3};
  std::span<const double> eps =
      eps_sequence.empty() ? std::span<const double>(kDefaultEps)
                           : eps_sequence;

  std::vector<double> hs(eps.begin(), eps.end());
  std::vector<Cplx> ys;
  ys.reserve(hs.size());
  for (double e : hs) ys.push_back(outer_function(log_F2, {k0, e}));
  const auto ex = num::neville_at_zero<Cplx>(hs, ys);

  // The final correction must be small, otherwise the limit did not settle.
  if (ex.err > 1e-3 * (1.0 + std::abs(ex.value)))
    throw SolverError("boundary trace extrapolation did not converge at k0 = " +
                      std::to_string(k0));

  BoundaryTrace out;
  out.value = ex.value;
  out.modulus_mismatch =
      std::abs(std::abs(ex.value) - std::exp(log_F2.eval(k0) / 2.0));
  if (out.modulus_mismatch > 1e-2)
    throw SolverError("boundary trace modulus does not match |F| at k0 = " +
                      std::to_string(k0));
  return out;
}

double boundary_integral(const BoundaryData& b) {
  // Trapezoid on the data grid (the data is the piecewise-linear function)
  // plus the analytic tail-model contribution.
  double acc = 0.0;
  for (std::size_t i = 0; i + 1 < b.ks.size(); ++i)
    acc += 0.5 * (b.values[i] + b.values[i + 1]) * (b.ks[i + 1] - b.ks[i]);
  if (b.tail == TailModel::PowerLaw && b.tail_exponent > 1.0) {
    const double p = b.tail_exponent;
    acc += b.tail_amp_pos * std::pow(b.ks.back(), 1.0 - p) / (p - 1.0);
    acc += b.tail_amp_neg * std::pow(-b.ks.front(), 1.0 - p) / (p - 1.0);
  }
  return acc;
}

}  // namespace helmscat
