#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <complex>
#include <random>
#include <vector>

#include "core/jost.hpp"
#include "core/num/gl16.hpp"
#include "core/profile.hpp"
#include "core/riccati.hpp"
#include "core/scatter.hpp"

using namespace helmscat;
using namespace std::complex_literals;

namespace {
const Profile kSlab = Profile::slab(2.0, 0.0, 1.0);
const Profile kBump = Profile::bump(0.5, 0.0, 2.0);

std::vector<double> uniform_grid(double a, double b, int n) {
  std::vector<double> xs(n);
  for (int i = 0; i < n; ++i) xs[i] = a + (b - a) * i / (n - 1);
  return xs;
}
}  // namespace

TEST_CASE("trivial cases") {
  const auto xs = uniform_grid(-2, 2, 21);
  const RiccatiField r0 = solve_r(Profile::constant(), 1.0, xs);
  for (const auto& v : r0.values) CHECK(v == Cplx{0.0, 0.0});
  const RiccatiField rk0 = solve_r(kBump, 0.0, xs);
  for (const auto& v : rk0.values) CHECK(v == Cplx{0.0, 0.0});
  const RiccatiField w0 = solve_w(kBump, 0.0, xs);
  for (const auto& v : w0.values) CHECK(v == Cplx{1.0, 0.0});
}

TEST_CASE("left of the support e^{2ikx} r is constant and equals R2") {
  const double k = 1.0;
  const auto xs = uniform_grid(-3.0, -0.5, 9);  // entirely left of support [0,1]
  const RiccatiField r = solve_r(kSlab, k, xs);
  const Cplx ref = std::exp(2.0i * k * xs[0]) * r.values[0];
  for (std::size_t i = 1; i < xs.size(); ++i)
    CHECK(std::abs(std::exp(2.0i * k * xs[i]) * r.values[i] - ref) < 1e-10);
  const ScatterPoint pt = scattering_at(kSlab, k);
  CHECK(std::abs(ref - pt.R2) < 1e-7);
}

TEST_CASE("r_to_R2 equals the scatter-path R2") {
  for (const Profile* p : {&kSlab, &kBump}) {
    for (double k : {0.5, 1.0, 6.0, 30.0}) {
      const std::vector<double> xs = {p->support_min()};
      const Cplx r2 = r_to_R2(solve_r(*p, k, xs));
      const ScatterPoint pt = scattering_at(*p, k);
      CHECK(std::abs(r2 - pt.R2) <= 1e-7 * std::max(1.0, std::abs(pt.R2)));
    }
  }
}

TEST_CASE("|r| < 1 on 10^3 random (profile, k) draws") {
  std::mt19937_64 rng(2024);
  auto uniform = [&](double a, double b) {
    return a + (b - a) * ((rng() >> 11) * 0x1.0p-53);
  };
  const auto xs = uniform_grid(-3, 3, 21);
  SolveOptions fast;
  fast.ode.rtol = 1e-9;
  fast.ode.atol = 1e-12;
  std::vector<Profile> pool;
  for (int t = 0; t < 40; ++t)
    pool.push_back(Profile::bump(uniform(-0.35, 0.9), uniform(-1, 1),
                                 uniform(0.5, 2.0)));
  double sup = 0.0;
  for (int t = 0; t < 1000; ++t) {
    const Profile& p = pool[(std::size_t)(uniform(0, 40))];
    const Cplx k{uniform(-20.0, 20.0), uniform(0.0, 5.0)};
    if (std::abs(k) < 1e-3) continue;
    const RiccatiField r = solve_r(p, k, xs, fast);
    for (const auto& v : r.values) sup = std::max(sup, std::abs(v));
  }
  CHECK(sup < 1.0);
}

TEST_CASE("w on the real axis: Re w = 1/|u1|^2") {
  const auto xs = uniform_grid(-2.2, 2.2, 61);
  for (double k : {0.7, 2.5, 11.0}) {
    const RiccatiField w = solve_w(kBump, k, xs);
    const ComplexField m1 = solve_m1(kBump, k, xs);
    for (std::size_t i = 0; i < xs.size(); ++i) {
      const double u2 = std::norm(jost_u(m1, i));
      CHECK(std::abs(w.values[i].real() - 1.0 / u2) < 1e-7);
      CHECK(w.values[i].real() > 0.0);
    }
  }
}

TEST_CASE("w in the upper half-plane: energy-flux integral formula") {
  const Cplx k{1.0, 0.5};
  const auto xs = uniform_grid(-1.5, 1.5, 7);  // every point on the fine grid
  const RiccatiField w = solve_w(kBump, k, xs);

  // Simpson quadrature of (|k|^2 |u1|^2 / c^2 + |u1'|^2) from x to the
  // support edge, then the exact plane-wave tail beyond it.
  const double b = kBump.support_max();
  const double tau = k.imag();
  const double ak2 = std::norm(k);
  const int per_xs = 200;  // fine intervals between consecutive xs points
  const auto fine = uniform_grid(-1.5, b, 7 * per_xs + 1);
  const double h = fine[1] - fine[0];
  const ComplexField m1 = solve_m1(kBump, k, fine);
  auto integrand = [&](std::size_t i) {
    const double c = kBump.c(fine[i]);
    return ak2 * std::norm(jost_u(m1, i)) / (c * c) +
           std::norm(jost_u_prime(m1, i));
  };
  for (std::size_t j = 0; j < xs.size(); ++j) {
    const std::size_t start = j * per_xs;  // fine[start] == xs[j]
    double acc = 0.0;
    for (std::size_t i = start; i + 2 < fine.size(); i += 2)
      acc += h / 3.0 * (integrand(i) + 4.0 * integrand(i + 1) + integrand(i + 2));
    acc += 2.0 * ak2 * std::exp(-2.0 * tau * b) / (2.0 * tau);  // tail
    const double u2 = std::norm(jost_u(m1, start));
    const double want = tau / (ak2 * u2) * acc;
    CHECK(std::abs(w.values[j].real() - want) < 1e-6 * (1.0 + want));
  }
}

TEST_CASE("imaginary-axis envelope for w") {
  for (const Profile* p : {&kSlab, &kBump}) {
    const double lo = 2.0 / (2.0 + p->cM() * p->cM() * p->gamma0());
    const double hi = 1.0 + p->gamma0() / 2.0;
    for (double kappa : {0.1, 1.0, 10.0, 100.0}) {
      const auto xs = uniform_grid(-2.5, 2.5, 81);
      const RiccatiField w = solve_w(*p, Cplx{0.0, kappa}, xs);
      for (const auto& v : w.values) {
        CHECK(std::abs(v.imag()) < 1e-10);
        CHECK(v.real() >= lo - 1e-9);
        CHECK(v.real() <= hi + 1e-9);
      }
    }
  }
}

TEST_CASE("energy identity along the flow and at the left edge") {
  SUBCASE("identity profile: exactly zero") {
    const auto res = energy_identity(Profile::constant(), 1.0, uniform_grid(-1, 1, 5));
    CHECK(res.max_residual == 0.0);
    CHECK(res.left_edge_value == 1.0);
  }
  SUBCASE("bump: residual below 1e-8 and left edge matches 1 - |R2|^2") {
    for (double k : {0.4, 1.0, 4.0}) {
      const auto res = energy_identity(kBump, k, uniform_grid(-2, 2, 101));
      CHECK(res.max_residual < 1e-8);
      const ScatterPoint pt = scattering_at(kBump, k);
      CHECK(std::abs(res.left_edge_value - (1.0 - std::norm(pt.R2))) < 1e-8);
    }
  }
}

TEST_CASE("qr_integral converges to ∫Q^2 at large kappa") {
  CHECK(qr_integral(Profile::constant(), 10.0) == 0.0);
  const double int_Q2 = kBump.functionals().int_Q2;
  const double v100 = qr_integral(kBump, 100.0);
  CHECK(std::abs(v100 - int_Q2) / int_Q2 < 0.05);
  // Cauchy behaviour along kappa = 10, 20, 40, 80
  double d_prev = 1e300;
  double prev = qr_integral(kBump, 10.0);
  for (double kappa : {20.0, 40.0, 80.0}) {
    const double cur = qr_integral(kBump, kappa);
    const double d = std::abs(cur - prev);
    CHECK(d < d_prev);
    d_prev = d;
    prev = cur;
  }
}

TEST_CASE("L1 stability inequality for w") {
  SUBCASE("identical profiles: 0 <= 0") {
    const auto chk = w_stability_check(kBump, kBump, 1.0);
    CHECK(chk.lhs <= chk.rhs * (1.0 + 1e-6) + 1e-15);
    CHECK(chk.lhs < 1e-12);
  }
  SUBCASE("two nearby bumps at kappa = 1") {
    const Profile p2 = Profile::bump(0.45, 0.1, 2.0);
    const auto chk = w_stability_check(kBump, p2, 1.0);
    CHECK(chk.lhs <= chk.rhs * (1.0 + 1e-6));
    CHECK(chk.lhs > 0.0);
  }
  SUBCASE("slab vs perturbed slab at kappa = 5") {
    const Profile p2 = Profile::slab(1.9, 0.05, 1.0);
    const auto chk = w_stability_check(kSlab, p2, 5.0);
    CHECK(chk.lhs <= chk.rhs * (1.0 + 1e-6));
  }
}

TEST_CASE("rho field and the sylvester bound") {
  SUBCASE("identity: rho = 0 with zero bound") {
    const auto xs = uniform_grid(-1, 1, 11);
    const RiccatiField rho = rho_field(Profile::constant(), 1.0, xs);
    for (const auto& v : rho.values) CHECK(std::abs(v) == 0.0);
  }
  SUBCASE("bump: bound with quadrature right side") {
    const auto f = kBump.functionals();
    const double bound = 1.0 - std::exp(-f.bv_log_mu);
    const auto xs = uniform_grid(-2.5, 2.5, 201);
    for (double k : {0.5, 1.0, 5.0, 20.0}) {
      const RiccatiField rho = rho_field(kBump, k, xs);
      for (const auto& v : rho.values) CHECK(std::abs(v) <= bound + 1e-9);
    }
  }
  SUBCASE("pointwise consistency with the w field") {
    const auto xs = uniform_grid(-1.8, 1.8, 41);
    const double k = 1.3;
    const RiccatiField rho = rho_field(kBump, k, xs);
    const RiccatiField w = solve_w(kBump, k, xs);
    for (std::size_t i = 0; i < xs.size(); ++i) {
      const double c = kBump.c(xs[i]);
      const Cplx want = (1.0 - c * w.values[i]) / (1.0 + c * w.values[i]);
      CHECK(std::abs(rho.values[i] - want) < 1e-10);
    }
  }
  SUBCASE("discontinuous profiles are rejected") {
    const auto xs = uniform_grid(-1, 2, 7);
    CHECK_THROWS(rho_field(kSlab, 1.0, xs));
  }
}

TEST_CASE("poisson summability positivity") {
  const std::vector<double> x0 = {0.3};
  double integral = 0.0, prev_k = 0.0;
  for (double k : log_k_grid(1e-2, 30.0, 20)) {
    if (k <= 0) continue;
    const RiccatiField w = solve_w(kBump, k, x0);
    const RiccatiField wm = solve_w_minus(kBump, k, x0);
    const double re_inv = std::real(1.0 / (w.values[0] + wm.values[0]));
    CHECK(re_inv > 0.0);
    if (prev_k > 0) integral += (k - prev_k) * re_inv / (1.0 + k * k);
    prev_k = k;
  }
  CHECK(integral > 0.0);
  CHECK(std::isfinite(integral));
}
