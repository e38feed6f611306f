#include "oracle.hpp"

#include <cmath>

#include "errors.hpp"
#include "scatter.hpp"

namespace helmscat {

namespace {
constexpr Cplx kI{0.0, 1.0};

// Plane-wave coefficients (A, B) of u = A e^{ik_j x} + B e^{-ik_j x} in the
// layer on the other side of interface b, matching u and u' there.
void cross_interface(double b, double k_from, double k_to, Cplx& A, Cplx& B) {
  const Cplx ef = std::exp(kI * k_from * b);
  const Cplx value = A * ef + B / ef;
  const Cplx deriv = kI * k_from * (A * ef - B / ef);
  const Cplx et = std::exp(kI * k_to * b);
  A = 0.5 * (value + deriv / (kI * k_to)) / et;
  B = 0.5 * (value - deriv / (kI * k_to)) * et;
}
}  // namespace

LayerStack LayerStack::from_profile(const Profile& p) {
  if (p.kind() != ProfileKind::Slab &&
      p.kind() != ProfileKind::PiecewiseConstant &&
      p.kind() != ProfileKind::Constant)
    throw ValidationError("profile is not representable as a layer stack");
  LayerStack s;
  if (p.kind() == ProfileKind::Constant) {
    s.interfaces = {0.0};
    s.speeds = {1.0, 1.0};
  } else {
    s.interfaces = p.layer_interfaces();
    s.speeds = p.layer_speeds();
  }
  return s;
}

ScatterPoint transfer_scattering(const LayerStack& stack, double k) {
  if (k == 0.0) throw ValidationError("transfer_scattering needs k != 0");
  const std::size_t m = stack.interfaces.size();
  if (stack.speeds.size() != m + 1 || m == 0)
    throw ValidationError("layer stack needs one more speed than interfaces");
  if (stack.speeds.front() != 1.0 || stack.speeds.back() != 1.0)
    throw ValidationError("outermost layer speeds must equal 1");

  std::vector<double> kj(m + 1);
  for (std::size_t j = 0; j <= m; ++j) kj[j] = k / stack.speeds[j];

  ScatterPoint pt;
  pt.k = k;
  pt.method = ScatterMethod::WronskianPath;

  // u1 = e^{ikx} in the rightmost layer; march left.
  {
    Cplx A{1.0, 0.0}, B{0.0, 0.0};
    for (std::size_t j = m; j-- > 0;)
      cross_interface(stack.interfaces[j], kj[j + 1], kj[j], A, B);
    // u1 = (1/T2) e^{ikx} + (R2/T2) e^{-ikx} on the left
    pt.T = 1.0 / A;
    pt.R2 = B / A;
  }
  // u2 = e^{-ikx} in the leftmost layer; march right.
  {
    Cplx A{0.0, 0.0}, B{1.0, 0.0};
    for (std::size_t j = 0; j < m; ++j)
      cross_interface(stack.interfaces[j], kj[j], kj[j + 1], A, B);
    // u2 = (R1/T1) e^{ikx} + (1/T1) e^{-ikx} on the right
    const Cplx T1 = 1.0 / B;
    pt.R1 = A / B;
    pt.path_disagreement = std::abs(T1 - pt.T);
  }

  const double u2 = std::abs(1.0 - std::norm(pt.T) - std::norm(pt.R2));
  const double u1 = std::abs(1.0 - std::norm(pt.T) - std::norm(pt.R1));
  pt.unitarity_residual = std::max({u1, u2, pt.path_disagreement});
  return pt;
}

OracleDeviation oracle_compare(const Profile& p, std::span<const double> ks,
                               const SolveOptions& opts) {
  const LayerStack stack = LayerStack::from_profile(p);
  OracleDeviation dev;
  const ScatterGrid grid = scattering_grid(p, ks, opts);
  for (std::size_t i = 0; i < grid.ks.size(); ++i) {
    const ScatterPoint ref = transfer_scattering(stack, grid.ks[i]);
    const ScatterPoint& got = grid.points[i];
    dev.dT = std::max(dev.dT, std::abs(got.T - ref.T));
    dev.dR1 = std::max(dev.dR1, std::abs(got.R1 - ref.R1));
    dev.dR2 = std::max(dev.dR2, std::abs(got.R2 - ref.R2));
  }
  return dev;
}

}  // namespace helmscat
