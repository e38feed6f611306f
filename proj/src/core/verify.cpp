#include "verify.hpp"

#include <cmath>
#include <random>

#include "errors.hpp"
#include "halfplane.hpp"
#include "io/profile_json.hpp"
#include "jost.hpp"
#include "num/gl16.hpp"
#include "oracle.hpp"
#include "recover.hpp"
#include "riccati.hpp"
#include "scatter.hpp"
#include "util/format.hpp"

namespace helmscat {

namespace {

constexpr Cplx kJ{0.0, 1.0};

Profile slab_profile() { return Profile::slab(2.0, 0.0, 1.0); }
Profile stack3_profile() {
  return Profile::piecewise_constant({0.0, 0.5, 1.1, 1.8},
                                     {1.0, 1.7, 0.75, 1.3, 1.0});
}
Profile bump_profile() { return Profile::bump(0.5, 0.0, 2.0); }
Profile dip_profile() { return Profile::bump(-0.3, 0.5, 1.5); }

std::vector<Profile> sweep_profiles(const VerifyOptions& o) {
  std::vector<Profile> ps;
  ps.push_back(Profile::constant());
  ps.push_back(slab_profile());
  ps.push_back(stack3_profile());
  ps.push_back(bump_profile());
  ps.push_back(dip_profile());
  if (o.extra_profile) ps.push_back(*o.extra_profile);
  return ps;
}

std::vector<double> sweep_k_grid() { return log_k_grid(1e-3, 50.0, 40); }

double uniform(std::mt19937_64& rng, double a, double b) {
  return a + (b - a) * ((rng() >> 11) * 0x1.0p-53);
}

CheckResult make(const std::string& name, double residual, double threshold) {
  return {name, residual < threshold, residual, threshold};
}

}  // namespace

namespace checks {

CheckResult identity_profile(const VerifyOptions& o) {
  const Profile p = Profile::constant();
  double worst = 0.0;
  for (double k : log_k_grid(1e-3, 50.0, 20)) {
    if (k <= 0) continue;
    const ScatterPoint pt = scattering_at(p, k, o.solve);
    worst = std::max({worst, std::abs(pt.T - 1.0), std::abs(pt.R1),
                      std::abs(pt.R2)});
    const auto xs = default_x_grid(p, 41);
    const RiccatiField r = solve_r(p, k, xs, o.solve);
    const RiccatiField w = solve_w(p, k, xs, o.solve);
    for (const Cplx& v : r.values) worst = std::max(worst, std::abs(v));
    for (const Cplx& v : w.values) worst = std::max(worst, std::abs(v - 1.0));
  }
  return make("identity_profile", worst, 1e-12);
}

namespace {
CheckResult oracle_check(const VerifyOptions& o, const Profile& p,
                         const std::string& name) {
  const auto ks = log_k_grid(1e-3, 50.0, 200);
  std::vector<double> positive;
  for (double k : ks)
    if (k > 0) positive.push_back(k);
  const OracleDeviation dev = oracle_compare(p, positive, o.solve);
  return make(name, std::max(dev.dT, dev.dR2), 1e-8);
}
}  // namespace

CheckResult oracle_slab(const VerifyOptions& o) {
  return oracle_check(o, slab_profile(), "oracle_agreement_slab");
}

CheckResult oracle_stack3(const VerifyOptions& o) {
  return oracle_check(o, stack3_profile(), "oracle_agreement_stack3");
}

CheckResult unitarity(const VerifyOptions& o) {
  double worst = 0.0;
  for (const Profile& p : sweep_profiles(o)) {
    const ScatterGrid g = scattering_grid(p, sweep_k_grid(), o.solve);
    for (const auto& pt : g.points) {
      worst = std::max(worst,
                       std::abs(std::norm(pt.T) + std::norm(pt.R2) - 1.0));
      worst = std::max(worst,
                       std::abs(std::norm(pt.T) + std::norm(pt.R1) - 1.0));
    }
  }
  return make("unitarity", worst, 1e-8);
}

CheckResult conjugation_symmetry(const VerifyOptions& o) {
  double worst = 0.0;
  for (const Profile& p : sweep_profiles(o)) {
    const ScatterGrid g = scattering_grid(p, sweep_k_grid(), o.solve);
    const std::size_t n = g.ks.size();
    for (std::size_t i = 0; i < n / 2; ++i) {
      const auto& neg = g.points[i];
      const auto& pos = g.points[n - 1 - i];
      worst = std::max(worst, std::abs(std::conj(pos.T) - neg.T));
      worst = std::max(worst, std::abs(std::conj(pos.R1) - neg.R1));
      worst = std::max(worst, std::abs(std::conj(pos.R2) - neg.R2));
    }
  }
  return make("conjugation_symmetry", worst, 1e-8);
}

CheckResult reciprocity(const VerifyOptions& o) {
  double worst = 0.0;
  for (const Profile& p : sweep_profiles(o)) {
    for (double k : {0.3, 1.7, 9.0, 42.0}) {
      const ScatterPoint pt = scattering_at(p, k, o.solve);
      const Cplx t1 = transmission_from_left(p, k, o.solve);
      worst = std::max(worst, std::abs(t1 - pt.T) / std::abs(pt.T));
    }
  }
  return make("reciprocity_T1_T2", worst, 1e-8);
}

CheckResult reflection_relation(const VerifyOptions& o) {
  double worst = 0.0;
  for (const Profile& p : sweep_profiles(o)) {
    for (double k : {0.2, 1.1, 6.5, 30.0}) {
      const ScatterPoint pos = scattering_at(p, k, o.solve);
      const ScatterPoint neg = scattering_at(p, -k, o.solve);
      worst = std::max(worst, std::abs(pos.R1 * neg.T + neg.R2 * pos.T));
    }
  }
  return make("reflection_cross_relation", worst, 1e-8);
}

CheckResult wronskian_constancy(const VerifyOptions& o) {
  double worst = 0.0;
  for (const Profile& p : sweep_profiles(o)) {
    for (double k : {0.5, 2.0, 15.0}) {
      const auto xs = default_x_grid(p, 101);
      const ComplexField f = solve_m1(p, k, xs, o.solve.ode);
      for (std::size_t i = 0; i < xs.size(); ++i) {
        const Cplx u = jost_u(f, i), up = jost_u_prime(f, i);
        const Cplx wr = up * std::conj(u) - u * std::conj(up);
        worst = std::max(worst,
                         std::abs(wr - 2.0 * kJ * k) / (2.0 * std::abs(k)));
      }
    }
  }
  return make("wronskian_constancy", worst, 1e-8);
}

CheckResult jost_bounds(const VerifyOptions& o) {
  // Envelope estimates |m1 - 1| <= |k| gamma e^{|k| gamma} and the derivative analogue;
  // residual is the worst relative excess over the bound.
  double worst = 0.0;
  for (const Profile& p : sweep_profiles(o)) {
    const double q1 = p.int_abs_q();
    for (Cplx k : {Cplx{0.7, 0.0}, Cplx{4.0, 0.0}, Cplx{0.0, 2.0}, Cplx{1.5, 1.5}}) {
      const auto xs = default_x_grid(p, 81);
      const ComplexField f = solve_m1(p, k, xs, o.solve.ode);
      const double ak = std::abs(k);
      for (std::size_t i = 0; i < xs.size(); ++i) {
        const double g = p.gamma(xs[i]);
        const double b1 = ak * g * std::exp(ak * g);
        const double b2 =
            ak * ak * g * (1.0 + ak * q1 * std::exp(ak * q1));
        worst = std::max(worst, (std::abs(f.m[i] - 1.0) - b1) / (1.0 + b1));
        worst = std::max(worst, (std::abs(f.m_prime[i]) - b2) / (1.0 + b2));
      }
    }
  }
  return make("jost_envelope_bounds", std::max(worst, 0.0), 1e-10);
}

CheckResult jost_nonvanishing(const VerifyOptions& o) {
  double min_abs = 1e300;
  for (const Profile& p : sweep_profiles(o)) {
    for (Cplx k : {Cplx{5.0, 0.0}, Cplx{0.0, 3.0}, Cplx{2.0, 1.0}}) {
      const auto xs = default_x_grid(p, 81);
      const auto rep = jost_nonvanishing_check(solve_m1(p, k, xs, o.solve.ode));
      if (!rep.ok) min_abs = 0.0;
      min_abs = std::min(min_abs, rep.min_abs);
    }
  }
  // residual = 1 if any vanished, else 0
  return make("jost_nonvanishing", min_abs > 0.0 ? 0.0 : 1.0, 0.5);
}

CheckResult two_path_r2(const VerifyOptions& o) {
  double worst = 0.0;
  for (const Profile& p : sweep_profiles(o)) {
    if (p.gamma0() == 0.0) continue;
    for (double k : sweep_k_grid()) {
      if (k < 0) continue;
      const ScatterPoint pt = scattering_at(p, k, o.solve);
      const double edge = p.support_min();
      const std::vector<double> xs = {edge};
      const RiccatiField r = solve_r(p, k, xs, o.solve);
      const Cplx r2 = r_to_R2(r);
      worst = std::max(worst,
                       std::abs(r2 - pt.R2) / std::max(std::abs(pt.R2), 1e-12));
    }
  }
  return make("two_path_r2", worst, 1e-6);
}

CheckResult low_k_law(const VerifyOptions& o) {
  double worst = 0.0;
  for (const Profile& p : {slab_profile(), bump_profile()}) {
    const auto ks = log_k_grid(1e-3, 0.1, 12);
    const ScatterGrid g = scattering_grid(p, ks, o.solve);
    const Cplx slope = low_k_slope(g);
    const double int_q = p.functionals().int_q;
    const Cplx want = int_q / (2.0 * kJ);
    worst = std::max(worst, std::abs(slope - want) / std::abs(want));
  }
  return make("low_k_reflection_slope", worst, 1e-3);
}

CheckResult r_strictly_contractive(const VerifyOptions& o) {
  double sup = 0.0;
  for (const Profile& p : sweep_profiles(o)) {
    for (Cplx k : {Cplx{0.4, 0.0}, Cplx{3.0, 0.0}, Cplx{25.0, 0.0},
                   Cplx{0.0, 1.0}, Cplx{1.0, 2.0}}) {
      const auto xs = default_x_grid(p, 201);
      const RiccatiField r = solve_r(p, k, xs, o.solve);
      for (const Cplx& v : r.values) sup = std::max(sup, std::abs(v));
    }
  }
  return make("r_bound", sup, 1.0);
}

CheckResult w_positive_real_part(const VerifyOptions& o) {
  double min_re = 1e300;
  for (const Profile& p : sweep_profiles(o)) {
    for (Cplx k : {Cplx{0.4, 0.0}, Cplx{3.0, 0.0}, Cplx{0.0, 1.0},
                   Cplx{1.0, 2.0}}) {
      const auto xs = default_x_grid(p, 201);
      const RiccatiField w = solve_w(p, k, xs, o.solve);
      const RiccatiField wm = solve_w_minus(p, k, xs, o.solve);
      for (const Cplx& v : w.values) min_re = std::min(min_re, v.real());
      for (const Cplx& v : wm.values) min_re = std::min(min_re, v.real());
    }
  }
  return make("w_positive_real_part", min_re > 0.0 ? 0.0 : 1.0, 0.5);
}

CheckResult w_real_axis_identity(const VerifyOptions& o) {
  double worst = 0.0;
  for (const Profile& p : sweep_profiles(o)) {
    for (double k : {0.6, 2.4, 12.0}) {
      const auto xs = default_x_grid(p, 101);
      const RiccatiField w = solve_w(p, k, xs, o.solve);
      const ComplexField m1 = solve_m1(p, k, xs, o.solve.ode);
      for (std::size_t i = 0; i < xs.size(); ++i) {
        const double u2 = std::norm(jost_u(m1, i));
        worst = std::max(worst, std::abs(w.values[i].real() * u2 - 1.0));
      }
    }
  }
  return make("w_inverse_modulus_identity", worst, 1e-7);
}

CheckResult imaginary_axis_w_bounds(const VerifyOptions& o) {
  double excess = 0.0;
  for (const Profile& p : sweep_profiles(o)) {
    const double lo = 2.0 / (2.0 + p.cM() * p.cM() * p.gamma0());
    const double hi = 1.0 + p.gamma0() / 2.0;
    for (double kappa : {0.1, 1.0, 10.0, 100.0}) {
      const auto xs = default_x_grid(p, 101);
      const RiccatiField w = solve_w(p, Cplx{0.0, kappa}, xs, o.solve);
      for (const Cplx& v : w.values) {
        excess = std::max(excess, lo - v.real());
        excess = std::max(excess, v.real() - hi);
        excess = std::max(excess, std::abs(v.imag()));
      }
    }
  }
  return make("imaginary_axis_w_envelope", std::max(excess, 0.0), 1e-9);
}

CheckResult stability_inequality(const VerifyOptions& o) {
  std::mt19937_64 rng(o.seed ^ 0x5eedc0deULL);
  double worst = 0.0;
  for (int t = 0; t < 20; ++t) {
    const Profile p1 = Profile::bump(uniform(rng, -0.35, 0.9),
                                     uniform(rng, -1.0, 1.0),
                                     uniform(rng, 0.6, 2.0));
    const Profile p2 = Profile::bump(uniform(rng, -0.35, 0.9),
                                     uniform(rng, -1.0, 1.0),
                                     uniform(rng, 0.6, 2.0));
    const double kappa = uniform(rng, 0.4, 5.0);
    const StabilityCheck chk = w_stability_check(p1, p2, kappa, o.solve);
    worst = std::max(worst, (chk.lhs - chk.rhs) / std::max(chk.rhs, 1e-300));
  }
  // slab vs perturbed slab as a fixed deterministic pair
  const StabilityCheck chk =
      w_stability_check(slab_profile(), Profile::slab(1.9, 0.05, 1.0), 5.0,
                        o.solve);
  worst = std::max(worst, (chk.lhs - chk.rhs) / std::max(chk.rhs, 1e-300));
  return make("w_l1_stability", std::max(worst, 0.0), 1e-6);
}

CheckResult transmission_bound_upper(const VerifyOptions& o) {
  double excess = 0.0;
  for (const Profile& p : sweep_profiles(o)) {
    const double iq = p.int_Q_total();
    for (double kappa : {0.1, 0.5, 2.0, 10.0, 40.0, 100.0}) {
      const Cplx T = transmission_upper(p, {0.0, kappa}, o.solve);
      excess = std::max(excess, std::abs(T) * std::exp(-kappa * iq) - 1.0);
      excess = std::max(excess, std::abs(T.imag()));  // real on i R_+
      if (!(T.real() > 0.0)) excess = std::max(excess, 1.0);
    }
  }
  return make("transmission_halfplane_bound", std::max(excess, 0.0), 1e-9);
}

CheckResult m1_growth_inequality(const VerifyOptions& o) {
  double short_by = 0.0;
  // m1 decays to ~e^{-kappa ∫Q} on the imaginary axis; relative control only
  num::OdeOptions ode = o.solve.ode;
  ode.atol = 0.0;
  for (const Profile& p : sweep_profiles(o)) {
    for (double kappa : {0.1, 1.0, 10.0, 100.0}) {
      const auto xs = default_x_grid(p, 101);
      const ComplexField m1 = solve_m1(p, {0.0, kappa}, xs, ode);
      for (std::size_t i = 0; i < xs.size(); ++i) {
        const double m = m1.m[i].real();
        const double mp = m1.m_prime[i].real();
        const double lhs = (2.0 * kappa * m - mp) *
                           std::exp(kappa * p.int_Q_right(xs[i]));
        short_by = std::max(short_by, (2.0 * kappa - lhs) / (2.0 * kappa));
        // m1 real positive with m1' < kappa m1 on the imaginary axis
        short_by = std::max(short_by, std::abs(m1.m[i].imag()));
        if (!(m > 0.0) || !(mp < kappa * m + 1e-12)) short_by = 1.0;
      }
    }
  }
  return make("m1_decay_inequality", std::max(short_by, 0.0), 1e-8);
}

CheckResult transmission_product_identity(const VerifyOptions& o) {
  // Product identity T e^{ik∫Q} = exp((ik/2) ∫ (Q^2 - q r)).
  double worst = 0.0;
  for (const Profile& p : sweep_profiles(o)) {
    if (p.gamma0() == 0.0) continue;
    for (double k : {0.5, 1.2, 4.0}) {
      const ScatterPoint pt = scattering_at(p, k, o.solve);
      const auto edges = num::panel_edges(p.support_min(), p.support_max(),
                                          p.breakpoints(),
                                          3.14159 / std::max(k, 1.0), 24);
      std::array<double, 16> gx, gw;
      std::vector<double> nodes, weights;
      for (std::size_t i = 0; i + 1 < edges.size(); ++i) {
        num::gl16_points(edges[i], edges[i + 1], gx, gw);
        nodes.insert(nodes.end(), gx.begin(), gx.end());
        weights.insert(weights.end(), gw.begin(), gw.end());
      }
      const RiccatiField r = solve_r(p, k, nodes, o.solve);
      Cplx integral{0.0, 0.0};
      for (std::size_t i = 0; i < nodes.size(); ++i) {
        const double Q = p.Q(nodes[i]);
        integral += weights[i] * (Q * Q - p.q(nodes[i]) * r.values[i]);
      }
      const Cplx lhs = pt.T * std::exp(kJ * k * p.int_Q_total());
      const Cplx rhs = std::exp(kJ * k / 2.0 * integral);
      worst = std::max(worst, std::abs(lhs - rhs));
    }
  }
  return make("transmission_product_identity", worst, 1e-8);
}

CheckResult energy_identity_interior(const VerifyOptions& o) {
  double worst = 0.0;
  for (const Profile& p : sweep_profiles(o)) {
    for (double k : {0.3, 1.0, 5.0}) {
      const auto xs = default_x_grid(p, 201);
      const EnergyIdentityResult res = energy_identity(p, k, xs, o.solve);
      worst = std::max(worst, res.max_residual);
    }
  }
  return make("energy_identity_interior", worst, 1e-8);
}

CheckResult energy_identity_left_edge(const VerifyOptions& o) {
  double worst = 0.0;
  for (const Profile& p : sweep_profiles(o)) {
    if (p.gamma0() == 0.0) continue;
    for (double k : {0.3, 1.0, 5.0}) {
      const auto xs = default_x_grid(p, 11);
      const EnergyIdentityResult res = energy_identity(p, k, xs, o.solve);
      const ScatterPoint pt = scattering_at(p, k, o.solve);
      worst = std::max(worst, std::abs((1.0 - std::norm(pt.R2)) -
                                       res.left_edge_value));
    }
  }
  return make("energy_identity_left_edge", worst, 1e-8);
}

CheckResult bilinear_identity(const VerifyOptions& o) {
  double worst = 0.0;
  for (const Profile& p : sweep_profiles(o)) {
    for (double k : {0.3, 1.0, 7.0}) {
      const auto xs = default_x_grid(p, 101);
      worst = std::max(worst, bilinear_identity_residual(p, k, xs, o.solve));
    }
  }
  return make("bilinear_identity", worst, 1e-8);
}

CheckResult tilde_bilinear_identity(const VerifyOptions& o) {
  double worst = 0.0;
  for (const Profile& p : sweep_profiles(o)) {
    if (p.gamma0() == 0.0) continue;
    std::vector<double> ys(41);
    const double lo = p.chi(p.support_min() - 0.5, ChiVariant::LeftTail);
    const double hi = p.chi(p.support_max() + 0.5, ChiVariant::LeftTail);
    for (std::size_t i = 0; i < ys.size(); ++i)
      ys[i] = lo + (hi - lo) * (double)i / (ys.size() - 1);
    for (double k : {0.4, 1.3, 6.0})
      worst = std::max(worst, tilde_identity_residual(p, k, ys, o.solve));
  }
  return make("tilde_bilinear_identity", worst, 1e-8);
}

CheckResult sylvester_bound(const VerifyOptions& o) {
  double excess = 0.0;
  for (const Profile& p : {bump_profile(), dip_profile()}) {
    const ScalarFunctionals f = p.functionals();
    const double bound = 1.0 - std::exp(-f.bv_log_mu);
    for (double k : {0.5, 1.0, 5.0, 20.0}) {
      const auto xs = default_x_grid(p, 201);
      const RiccatiField rho = rho_field(p, k, xs, o.solve);
      for (const Cplx& v : rho.values)
        excess = std::max(excess, std::abs(v) - bound);
    }
  }
  return make("sylvester_bound", std::max(excess, 0.0), 1e-9);
}

CheckResult poisson_summability(const VerifyOptions& o) {
  // (1+k^2)^{-1} Re (w + w_-)^{-1} must be positive and summable; also
  // cross-checks T m1 m2 = 2/(w + w_-).
  double min_re = 1e300;
  double integral = 0.0;
  double cross = 0.0;
  const Profile p = bump_profile();
  const auto ks = log_k_grid(1e-2, 30.0, 24);
  const double x0 = 0.3;
  const std::vector<double> xs = {x0};
  double prev_k = 0.0;
  for (double k : ks) {
    if (k <= 0) continue;
    const RiccatiField w = solve_w(p, k, xs, o.solve);
    const RiccatiField wm = solve_w_minus(p, k, xs, o.solve);
    const Cplx denom = w.values[0] + wm.values[0];
    const double re_inv = std::real(1.0 / denom);
    min_re = std::min(min_re, re_inv);
    if (prev_k > 0.0)
      integral += (k - prev_k) * re_inv / (1.0 + k * k);
    prev_k = k;

    const ScatterPoint pt = scattering_at(p, k, o.solve);
    const ComplexField m1 = solve_m1(p, k, xs, o.solve.ode);
    const ComplexField m2 = solve_m2(p, k, xs, o.solve.ode);
    cross = std::max(cross, std::abs(pt.T * m1.m[0] * m2.m[0] - 2.0 / denom));
  }
  const bool ok = min_re > 0.0 && integral > 0.0 && std::isfinite(integral);
  return make("poisson_summability", ok ? cross : 1.0, 1e-7);
}

namespace {
CheckResult recovery_check(const VerifyOptions& o, const Profile& p,
                           const std::string& name) {
  const auto ks = log_k_grid(1e-3, 200.0, 400);
  const ScatterGrid g = scattering_grid(p, ks, o.solve);
  RecoveryInput in;
  in.ks = g.ks;
  for (const auto& pt : g.points) in.R2.push_back(pt.R2);
  const RecoveryReport rep = run_recovery(in, &p, o.solve);

  double worst = 0.0;
  for (const auto& c : rep.comparisons) {
    const double limit = (c.name == "int_q") ? 1e-3 : 2e-2;
    worst = std::max(worst, c.rel_err / limit);
  }
  worst = std::max(worst, rep.T_sup_error / 1e-2);
  worst = std::max(worst, std::abs(std::abs(rep.gamma_unimodular) - 1.0) / 1e-2);
  // scaled so the combined threshold is 1
  return make(name, worst, 1.0);
}
}  // namespace

CheckResult recovery_slab(const VerifyOptions& o) {
  return recovery_check(o, slab_profile(), "recovery_chain_slab");
}

CheckResult recovery_bump(const VerifyOptions& o) {
  return recovery_check(o, bump_profile(), "recovery_chain_bump");
}

CheckResult validation_negative(const VerifyOptions&) {
  bool rejected = false;
  try {
    io::profile_from_json(R"({"kind": "slab", "c": -2.0, "x_left": 0, "x_right": 1})");
  } catch (const ValidationError&) {
    rejected = true;
  } catch (const ParseError&) {
    rejected = true;
  }
  bool bad_schema_rejected = false;
  try {
    io::profile_from_json(R"({"kind": "slab", "c": 2.0, "x_left": 1, "x_right": 0})");
  } catch (const ParseError&) {
    bad_schema_rejected = true;
  } catch (const ValidationError&) {
    bad_schema_rejected = true;
  }
  return make("validation_negative", rejected && bad_schema_rejected ? 0.0 : 1.0,
              0.5);
}

CheckResult profile_roundtrip(const VerifyOptions&) {
  const Profile truth = bump_profile();
  std::vector<double> xs, cs;
  for (double x = -2.0; x <= 2.0 + 1e-9; x += 0.01) {
    xs.push_back(x);
    cs.push_back(truth.c(x));
  }
  const Profile p = Profile::samples(xs, cs);
  const Profile back = io::profile_from_json(io::profile_to_json(p));
  double worst = 0.0;
  for (double x = -2.5; x <= 2.5; x += 0.003)
    worst = std::max(worst, std::abs(p.c(x) - back.c(x)));
  return make("profile_json_roundtrip", worst, 1e-12);
}

}  // namespace checks

VerifyReport run_verify(const VerifyOptions& o) {
  VerifyReport rep;
  using Fn = CheckResult (*)(const VerifyOptions&);
  const Fn fns[] = {
      checks::identity_profile,
      checks::oracle_slab,
      checks::oracle_stack3,
      checks::unitarity,
      checks::conjugation_symmetry,
      checks::reciprocity,
      checks::reflection_relation,
      checks::wronskian_constancy,
      checks::jost_bounds,
      checks::jost_nonvanishing,
      checks::two_path_r2,
      checks::low_k_law,
      checks::r_strictly_contractive,
      checks::w_positive_real_part,
      checks::w_real_axis_identity,
      checks::imaginary_axis_w_bounds,
      checks::stability_inequality,
      checks::transmission_bound_upper,
      checks::m1_growth_inequality,
      checks::transmission_product_identity,
      checks::energy_identity_interior,
      checks::energy_identity_left_edge,
      checks::bilinear_identity,
      checks::tilde_bilinear_identity,
      checks::sylvester_bound,
      checks::poisson_summability,
      checks::recovery_slab,
      checks::recovery_bump,
      checks::validation_negative,
      checks::profile_roundtrip,
  };
  rep.all_passed = true;
  for (Fn fn : fns) {
    CheckResult r;
    try {
      r = fn(o);
    } catch (const Error& e) {
      r.name = std::string("exception: ") + e.what();
      r.passed = false;
      r.residual = 1.0;
      r.threshold = 0.0;
    }
    rep.all_passed = rep.all_passed && r.passed;
    rep.checks.push_back(std::move(r));
  }
  return rep;
}

std::string VerifyReport::to_json() const {
  using util::shortest;
  std::string s = "{\n  \"checks\": [\n";
  for (std::size_t i = 0; i < checks.size(); ++i) {
    const auto& c = checks[i];
    s += "    {\"name\": \"" + c.name + "\", \"passed\": " +
         (c.passed ? "true" : "false") +
         ", \"residual\": " + shortest(c.residual) +
         ", \"threshold\": " + shortest(c.threshold) + "}";
    s += (i + 1 < checks.size()) ? ",\n" : "\n";
  }
  s += "  ],\n  \"all_passed\": ";
  s += all_passed ? "true" : "false";
  s += "\n}\n";
  return s;
}

}  // namespace helmscat
