#include "recover.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "errors.hpp"
#include "jost.hpp"
#include "num/extrap.hpp"
#include "scatter.hpp"
#include "util/format.hpp"

namespace helmscat {

namespace {

constexpr Cplx kJ{0.0, 1.0};

void validate_input(const RecoveryInput& in) {
  if (in.ks.size() < 8 || in.ks.size() != in.R2.size())
    throw ValidationError("recovery needs >= 8 matching R2 samples");
  if (!std::is_sorted(in.ks.begin(), in.ks.end()))
    throw ValidationError("recovery k-grid must be ascending");
  for (std::size_t i = 0; i < in.ks.size(); ++i) {
    if (in.ks[i] == 0.0)
      throw ValidationError("recovery k-grid must exclude 0");
    if (std::abs(in.R2[i]) > 1.0 + 1e-12)
      throw ValidationError("|R2| > 1 in the input data (invalid reflection)");
  }
}

// log(1 - |R2|^2) samples with an exact node at k = 0 (R2(0) = 0).
BoundaryData log_F2_data(const RecoveryInput& in) {
  std::vector<double> ks, vals;
  ks.reserve(in.ks.size() + 1);
  bool zero_inserted = false;
  for (std::size_t i = 0; i < in.ks.size(); ++i) {
    if (!zero_inserted && in.ks[i] > 0.0) {
      ks.push_back(0.0);
      vals.push_back(0.0);
      zero_inserted = true;
    }
    const double m2 = std::min(std::norm(in.R2[i]), 1.0 - 1e-300);
    ks.push_back(in.ks[i]);
    vals.push_back(std::log1p(-m2));
  }
  return BoundaryData::with_power_tail(std::move(ks), std::move(vals));
}

}  // namespace

std::vector<double> modulus_T(const RecoveryInput& in) {
  validate_input(in);
  std::vector<double> out(in.ks.size());
  for (std::size_t i = 0; i < in.ks.size(); ++i)
    out[i] = std::sqrt(std::max(0.0, 1.0 - std::norm(in.R2[i])));
  return out;
}

RecoveredScalar recover_int_q(const RecoveryInput& in) {
  validate_input(in);
  std::vector<double> hs;
  std::vector<double> ys;
  for (std::size_t i = 0; i < in.ks.size(); ++i) {
    if (in.ks[i] > 0.0 && in.ks[i] <= 0.1) {
      hs.push_back(in.ks[i]);
      ys.push_back(in.R2[i].imag() / in.ks[i]);
    }
  }
  if (hs.size() < 3)
    throw SolverError("recover_int_q needs at least three samples with 0 < k <= 0.1");
  if (hs.size() > 6) {
    hs.erase(hs.begin() + 6, hs.end());
    ys.erase(ys.begin() + 6, ys.end());
  }
  const auto ex = num::neville_at_zero<double>(hs, ys);
  return {-2.0 * ex.value, 2.0 * ex.err};
}

IntQ2Result recover_int_Q2(const RecoveryInput& in) {
  validate_input(in);
  const RecoveredScalar iq = recover_int_q(in);

  // h(k) = log(1 - |R2|^2)/k^2, extended through 0 by its limit -(∫q/2)^2.
  std::vector<double> ks, vals;
  bool zero_inserted = false;
  for (std::size_t i = 0; i < in.ks.size(); ++i) {
    if (!zero_inserted && in.ks[i] > 0.0) {
      ks.push_back(0.0);
      vals.push_back(-0.25 * iq.value * iq.value);
      zero_inserted = true;
    }
    const double m2 = std::min(std::norm(in.R2[i]), 1.0 - 1e-300);
    ks.push_back(in.ks[i]);
    vals.push_back(std::log1p(-m2) / (in.ks[i] * in.ks[i]));
  }
  const BoundaryData h = BoundaryData::with_power_tail(std::move(ks), std::move(vals));

  IntQ2Result res;

  // Closed-limit path: ∫Q^2 = -(1/pi) ∫ h(t) dt.
  const double grid_part = [&] {
    double acc = 0.0;
    for (std::size_t i = 0; i + 1 < h.ks.size(); ++i)
      acc += 0.5 * (h.values[i] + h.values[i + 1]) * (h.ks[i + 1] - h.ks[i]);
    return acc;
  }();
  const double full = boundary_integral(h);
  const double tail_part = full - grid_part;
  res.primary.value = -full / std::numbers::pi;
  res.primary.error_bar = 0.5 * std::abs(tail_part) / std::numbers::pi;

  // kappa path: -kappa * h(i kappa) with an empirically fitted rate.
  const double kappas[] = {10, 20, 40, 80, 160};
  std::vector<double> g;
  for (double kp : kappas) g.push_back(-kp * poisson_extend(h, {0.0, kp}));
  const double d1 = g[3] - g[2], d2 = g[4] - g[3];
  double ginf = g[4];
  if (d1 != 0.0 && d2 != 0.0 && d1 / d2 > 1.0) {
    const double beta = std::log2(std::abs(d1 / d2));
    if (beta > 0.1 && beta < 6.0) ginf = g[4] + d2 / (std::pow(2.0, beta) - 1.0);
  }
  res.kappa_path = ginf;
  res.path_disagreement = std::abs(res.kappa_path - res.primary.value);

  const double scale = std::max(std::abs(res.primary.value), 1e-12);
  res.flagged = res.primary.error_bar > 0.1 * scale;
  return res;
}

std::vector<Cplx> recover_T(const RecoveryInput& in, double int_Q,
                            std::span<const double> k_eval) {
  validate_input(in);
  const BoundaryData b = log_F2_data(in);
  std::vector<Cplx> out;
  out.reserve(k_eval.size());
  for (double k : k_eval) {
    const BoundaryTrace tr = boundary_trace(b, k);
    // Modulus is |F| by construction of the outer function; only the phase
    // needs the extrapolated trace.
    const double mod = std::exp(b.eval(k) / 2.0);
    const double phase = std::arg(tr.value);
    out.push_back(mod * std::exp(kJ * phase) * std::exp(-kJ * k * int_Q));
  }
  return out;
}

RecoveryReport run_recovery(const RecoveryInput& in, const Profile* truth,
                            const SolveOptions& opts) {
  validate_input(in);
  RecoveryReport rep;
  rep.int_q_rec = recover_int_q(in);
  const IntQ2Result q2 = recover_int_Q2(in);
  rep.int_Q2_rec = q2.primary;
  rep.int_Q2_kappa_path = q2.kappa_path;
  rep.int_Q2_path_disagreement = q2.path_disagreement;
  rep.int_Q2_flagged = q2.flagged;
  rep.int_Q_rec.value = recover_int_Q(rep.int_q_rec.value, rep.int_Q2_rec.value);
  rep.int_Q_rec.error_bar =
      0.5 * (rep.int_q_rec.error_bar + rep.int_Q2_rec.error_bar);

  // A boundary-trace failure at an isolated k drops that point with a flag.
  const BoundaryData trace_data = log_F2_data(in);
  for (double k : in.ks) {
    if (k < 0.05 || k > 20.0) continue;
    try {
      const BoundaryTrace tr = boundary_trace(trace_data, k);
      const double mod = std::exp(trace_data.eval(k) / 2.0);
      rep.T_ks.push_back(k);
      rep.T_rec.push_back(mod * std::exp(kJ * std::arg(tr.value)) *
                          std::exp(-kJ * k * rep.int_Q_rec.value));
    } catch (const SolverError&) {
      rep.T_dropped_ks.push_back(k);
    }
  }

  if (truth) {
    rep.has_truth = true;
    const ScalarFunctionals f = truth->functionals();
    auto cmp = [&](const std::string& name, double rec, double tru) {
      QuantityComparison c;
      c.name = name;
      c.recovered = rec;
      c.truth = tru;
      c.abs_err = std::abs(rec - tru);
      c.rel_err = c.abs_err / std::max(std::abs(tru), 1e-300);
      rep.comparisons.push_back(c);
    };
    cmp("int_q", rep.int_q_rec.value, f.int_q);
    cmp("int_Q2", rep.int_Q2_rec.value, f.int_Q2);
    cmp("int_Q", rep.int_Q_rec.value, f.int_Q);

    double sup = 0.0;
    for (std::size_t i = 0; i < rep.T_ks.size(); ++i) {
      const ScatterPoint pt = scattering_at(*truth, rep.T_ks[i], opts);
      sup = std::max(sup, std::abs(rep.T_rec[i] - pt.T));
    }
    rep.T_sup_error = sup;

    // gamma of the outer factorization at z = i: F(i)/Theta_F(i) with
    // F(i) = T(i) e^{-∫Q} from the forward solve.
    const Cplx theta_i = outer_function(trace_data, {0.0, 1.0});
    const Cplx F_i = transmission_upper(*truth, {0.0, 1.0}, opts) *
                     std::exp(-truth->int_Q_total());
    rep.gamma_unimodular = F_i / theta_i;
  }
  return rep;
}

std::string recovery_report_to_json(const RecoveryReport& rep) {
  using util::shortest;
  std::string s = "{\n";
  auto scalar = [&](const char* name, const RecoveredScalar& v) {
    s += std::string("  \"") + name + "\": {\"value\": " + shortest(v.value) +
         ", \"error_bar\": " + shortest(v.error_bar) + "},\n";
  };
  scalar("int_q_rec", rep.int_q_rec);
  scalar("int_Q2_rec", rep.int_Q2_rec);
  scalar("int_Q_rec", rep.int_Q_rec);
  s += "  \"int_Q2_kappa_path\": " + shortest(rep.int_Q2_kappa_path) + ",\n";
  s += "  \"int_Q2_path_disagreement\": " +
       shortest(rep.int_Q2_path_disagreement) + ",\n";
  s += std::string("  \"int_Q2_flagged\": ") +
       (rep.int_Q2_flagged ? "true" : "false") + ",\n";
  s += "  \"gamma_unimodular\": {\"re\": " + shortest(rep.gamma_unimodular.real()) +
       ", \"im\": " + shortest(rep.gamma_unimodular.imag()) + "},\n";
  s += "  \"T_rec\": [";
  for (std::size_t i = 0; i < rep.T_ks.size(); ++i) {
    if (i) s += ", ";
    s += "{\"k\": " + shortest(rep.T_ks[i]) +
         ", \"re\": " + shortest(rep.T_rec[i].real()) +
         ", \"im\": " + shortest(rep.T_rec[i].imag()) + "}";
  }
  s += "],\n";
  s += "  \"T_dropped_ks\": [";
  for (std::size_t i = 0; i < rep.T_dropped_ks.size(); ++i) {
    if (i) s += ", ";
    s += shortest(rep.T_dropped_ks[i]);
  }
  s += "],\n";
  s += "  \"comparisons\": [";
  for (std::size_t i = 0; i < rep.comparisons.size(); ++i) {
    const auto& c = rep.comparisons[i];
    if (i) s += ", ";
    s += "{\"name\": \"" + c.name + "\", \"recovered\": " + shortest(c.recovered) +
         ", \"truth\": " + shortest(c.truth) +
         ", \"abs_err\": " + shortest(c.abs_err) +
         ", \"rel_err\": " + shortest(c.rel_err) + "}";
  }
  s += "],\n";
  s += "  \"T_sup_error\": " + shortest(rep.T_sup_error) + ",\n";
  s += std::string("  \"has_truth\": ") + (rep.has_truth ? "true" : "false") +
       "\n}\n";
  return s;
}

namespace {

// M fields of the uniqueness machinery for one profile at one k:
// M_1(y) = e^{-ik ∫_x^∞ Q} m1(x), M_2(y) = e^{-ik ∫_{-∞}^x Q} m2(x) at
// x = chi^{-1}(y) with chi(x) = x - ∫_{-∞}^x Q.
struct MFields {
  std::vector<Cplx> M1, M2;
  Cplx T_tilde;
};

MFields m_fields(const Profile& p, double k, std::span<const double> ys,
                 const SolveOptions& opts) {
  MFields out;
  std::vector<double> xs(ys.size());
  for (std::size_t i = 0; i < ys.size(); ++i)
    xs[i] = p.chi_inv(ys[i], ChiVariant::LeftTail);
  const ComplexField m1 = solve_m1(p, k, xs, opts.ode);
  const ComplexField m2 = solve_m2(p, k, xs, opts.ode);
  out.M1.resize(ys.size());
  out.M2.resize(ys.size());
  for (std::size_t i = 0; i < ys.size(); ++i) {
    out.M1[i] = std::exp(-kJ * k * p.int_Q_right(xs[i])) * m1.m[i];
    out.M2[i] = std::exp(-kJ * k * p.int_Q_left(xs[i])) * m2.m[i];
  }
  const ScatterPoint pt = scattering_at(p, k, opts);
  out.T_tilde = pt.T * std::exp(kJ * k * p.int_Q_total());
  return out;
}

double tilde_residual(const MFields& f) {
  double worst = 0.0;
  for (std::size_t i = 0; i < f.M1.size(); ++i) {
    const double lhs = 2.0 * std::real(f.T_tilde * f.M1[i] * f.M2[i]);
    const double rhs =
        std::norm(f.T_tilde * f.M1[i]) + std::norm(f.T_tilde * f.M2[i]);
    worst = std::max(worst, std::abs(lhs - rhs));
  }
  return worst;
}

std::vector<double> harness_y_grid(const Profile& p1, const Profile& p2,
                                   std::size_t n = 41) {
  const double lo = std::min(p1.chi(p1.support_min(), ChiVariant::LeftTail),
                             p2.chi(p2.support_min(), ChiVariant::LeftTail));
  const double hi = std::max(p1.chi(p1.support_max(), ChiVariant::LeftTail),
                             p2.chi(p2.support_max(), ChiVariant::LeftTail));
  std::vector<double> ys(n);
  for (std::size_t i = 0; i < n; ++i)
    ys[i] = lo + (hi - lo) * (double)i / (n - 1);
  return ys;
}

}  // namespace

double tilde_identity_residual(const Profile& p, double k,
                               std::span<const double> ys,
                               const SolveOptions& opts) {
  return tilde_residual(m_fields(p, k, ys, opts));
}

UniquenessReport uniqueness_harness(const Profile& p1, const Profile& p2,
                                    std::span<const double> ks,
                                    double eps_match,
                                    const SolveOptions& opts) {
  UniquenessReport rep;
  rep.eps_match = eps_match;

  for (double k : ks) {
    const ScatterPoint a = scattering_at(p1, k, opts);
    const ScatterPoint b = scattering_at(p2, k, opts);
    rep.r2_separation = std::max(rep.r2_separation, std::abs(a.R2 - b.R2));
  }
  rep.matched = rep.r2_separation < eps_match;

  const std::vector<double> ys = harness_y_grid(p1, p2);
  for (double k : ks) {
    const MFields f1 = m_fields(p1, k, ys, opts);
    const MFields f2 = m_fields(p2, k, ys, opts);
    rep.tilde_identity_residual_p1 =
        std::max(rep.tilde_identity_residual_p1, tilde_residual(f1));
    rep.tilde_identity_residual_p2 =
        std::max(rep.tilde_identity_residual_p2, tilde_residual(f2));

    if (rep.matched) {
      for (std::size_t i = 0; i < ys.size(); ++i) {
        rep.m1_max_diff =
            std::max(rep.m1_max_diff, std::abs(f1.M1[i] - f2.M1[i]));
        rep.m2_max_diff =
            std::max(rep.m2_max_diff, std::abs(f1.M2[i] - f2.M2[i]));
        // difference fields scaled by 1/k
        const Cplx M1d = (f1.M1[i] - f2.M1[i]) / k;
        const Cplx M2d = (f1.M2[i] - f2.M2[i]) / k;
        const Cplx Tt = f1.T_tilde;
        const double lhs = std::real(Tt * M1d * M2d);
        const double rhs = 0.5 * (std::norm(Tt * M1d) + std::norm(Tt * M2d));
        rep.difference_identity_residual =
            std::max(rep.difference_identity_residual, std::abs(lhs - rhs));
      }
    }
  }

  if (rep.matched) {
    for (double y : harness_y_grid(p1, p2, 101)) {
      const double c1 = p1.c(p1.chi_inv(y, ChiVariant::LeftTail));
      const double c2 = p2.c(p2.chi_inv(y, ChiVariant::LeftTail));
      rep.c_agreement_max_diff =
          std::max(rep.c_agreement_max_diff, std::abs(c1 - c2));
    }
  }
  return rep;
}

}  // namespace helmscat
