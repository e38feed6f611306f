#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <complex>
#include <vector>

#include "core/jost.hpp"
#include "core/oracle.hpp"
#include "core/profile.hpp"

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

TEST_CASE("identity profile gives m1 = 1 exactly") {
  const Profile p = Profile::constant();
  const auto xs = uniform_grid(-3, 3, 21);
  for (Cplx k : {Cplx{1.0, 0.0}, Cplx{0.0, 2.0}, Cplx{3.0, 0.5}}) {
    const ComplexField f = solve_m1(p, k, xs);
    for (std::size_t i = 0; i < xs.size(); ++i) {
      CHECK(std::abs(f.m[i] - 1.0) == 0.0);
      CHECK(std::abs(f.m_prime[i]) == 0.0);
    }
  }
}

TEST_CASE("k = 0 short-circuits to m = 1 for any profile") {
  const auto xs = uniform_grid(-2, 3, 11);
  for (const Profile* p : {&kSlab, &kBump}) {
    const ComplexField f = solve_m1(*p, 0.0, xs);
    const ComplexField g = solve_m2(*p, 0.0, xs);
    for (std::size_t i = 0; i < xs.size(); ++i) {
      CHECK(f.m[i] == Cplx{1.0, 0.0});
      CHECK(g.m[i] == Cplx{1.0, 0.0});
    }
  }
}

TEST_CASE("slab m1 and m2 match the transfer-matrix oracle at k = 1") {
  const double k = 1.0;
  const auto pt = transfer_scattering(LayerStack::from_profile(kSlab), k);
  const std::vector<double> x0 = {0.0};
  const ComplexField f = solve_m1(kSlab, k, x0);
  // left of the support u1 = (1/T) e^{ikx} + (R2/T) e^{-ikx}, so
  // m1(0) = (1 + R2)/T.
  const Cplx want = (1.0 + pt.R2) / pt.T;
  CHECK(std::abs(f.m[0] - want) < 1e-8);

  const std::vector<double> x1 = {1.0};
  const ComplexField g = solve_m2(kSlab, k, x1);
  // right of the support u2 = (R1/T) e^{ikx} + (1/T) e^{-ikx}, so
  // m2(1) = (R1/T) e^{2ik} + 1/T.
  const Cplx want2 = pt.R1 / pt.T * std::exp(2.0i * k) + 1.0 / pt.T;
  CHECK(std::abs(g.m[0] - want2) < 1e-8);
}

TEST_CASE("jost envelope estimates hold on the grid") {
  const auto xs = uniform_grid(-2.5, 2.5, 41);
  const double q1 = kBump.int_abs_q();
  for (Cplx k : {Cplx{0.5, 0.0}, Cplx{3.0, 0.0}, Cplx{0.0, 1.5}, Cplx{2.0, 2.0}}) {
    const ComplexField f = solve_m1(kBump, k, xs);
    const double ak = std::abs(k);
    for (std::size_t i = 0; i < xs.size(); ++i) {
      const double g = kBump.gamma(xs[i]);
      CHECK(std::abs(f.m[i] - 1.0) <= ak * g * std::exp(ak * g) + 1e-12);
      CHECK(std::abs(f.m_prime[i]) <=
            ak * ak * g * (1.0 + ak * q1 * std::exp(ak * q1)) + 1e-12);
    }
  }
}

TEST_CASE("conjugation symmetry m1(x,-k) = conj m1(x,k) on the real axis") {
  const auto xs = uniform_grid(-2, 2, 17);
  for (double k : {0.4, 1.7, 8.0}) {
    const ComplexField plus = solve_m1(kBump, k, xs);
    const ComplexField minus = solve_m1(kBump, -k + 0.0i, xs);
    for (std::size_t i = 0; i < xs.size(); ++i)
      CHECK(std::abs(std::conj(plus.m[i]) - minus.m[i]) < 1e-10);
  }
}

TEST_CASE("wronskian of u1 and its conjugate is 2ik everywhere") {
  const auto xs = uniform_grid(-2.2, 2.2, 61);
  for (double k : {0.6, 2.0, 12.0}) {
    const ComplexField f = solve_m1(kBump, k, xs);
    for (std::size_t i = 0; i < xs.size(); ++i) {
      const Cplx u = jost_u(f, i), up = jost_u_prime(f, i);
      const Cplx wr = up * std::conj(u) - u * std::conj(up);
      CHECK(std::abs(wr - 2.0i * k) <= 1e-8 * 2.0 * k);
    }
  }
}

TEST_CASE("modulus identity for u1-prime combinations") {
  const auto xs = uniform_grid(-2, 2, 31);
  for (double k : {0.8, 3.5}) {
    const ComplexField f = solve_m1(kBump, k, xs);
    for (std::size_t i = 0; i < xs.size(); ++i) {
      const Cplx u = jost_u(f, i), up = jost_u_prime(f, i);
      for (double sign : {1.0, -1.0}) {
        const double lhs = std::norm(up + sign * 1.0i * k * u);
        const double rhs =
            std::norm(up) + k * k * std::norm(u) + sign * 2.0 * k * k;
        CHECK(std::abs(lhs - rhs) <= 1e-8 * (1.0 + rhs));
      }
    }
  }
}

TEST_CASE("imaginary axis: positivity and the decay inequality") {
  const auto xs = uniform_grid(-2.5, 2.5, 41);
  // m1 decays to ~e^{-kappa ∫Q} on this axis: pure relative error control
  num::OdeOptions opt;
  opt.atol = 0.0;
  for (double kappa : {0.5, 2.0, 20.0, 100.0}) {
    const ComplexField f = solve_m1(kBump, Cplx{0.0, kappa}, xs, opt);
    for (std::size_t i = 0; i < xs.size(); ++i) {
      const double m = f.m[i].real();
      const double mp = f.m_prime[i].real();
      CHECK(std::abs(f.m[i].imag()) < 1e-10);
      CHECK(m > 0.0);
      CHECK(mp < kappa * m);
      const double lhs =
          (2 * kappa * m - mp) * std::exp(kappa * kBump.int_Q_right(xs[i]));
      CHECK(lhs >= 2 * kappa * (1.0 - 1e-8));
    }
  }
}

TEST_CASE("ODE residual by finite differences") {
  const int n = 2001;
  const auto xs = uniform_grid(-2.0, 2.0, n);
  const double h = xs[1] - xs[0];
  for (double k : {1.0, 6.0}) {
    const ComplexField f = solve_m1(kBump, k, xs);
    double worst = 0.0;
    for (int i = 1; i + 1 < n; ++i) {
      const Cplx second = (f.m[i + 1] - 2.0 * f.m[i] + f.m[i - 1]) / (h * h);
      const Cplx res = second + 2.0i * k * f.m_prime[i] -
                       k * k * kBump.q(xs[i]) * f.m[i];
      worst = std::max(worst, std::abs(res));
    }
    // second-difference truncation dominates; scale h^2 m'''' ~ k^4 h^2
    CHECK(worst < 1e-6 * (1.0 + k * k) + h * h * std::pow(k, 4));
  }
}

TEST_CASE("nonvanishing check") {
  const auto xs = uniform_grid(-2, 2, 101);
  {
    const ComplexField f = solve_m1(Profile::constant(), 1.0, xs);
    const auto rep = jost_nonvanishing_check(f);
    CHECK(rep.ok);
    CHECK(rep.min_abs == doctest::Approx(1.0));
  }
  {
    const ComplexField f = solve_m1(kBump, 5.0, xs);
    CHECK(jost_nonvanishing_check(f).ok);
  }
  {
    ComplexField f = solve_m1(kBump, 5.0, xs);
    f.m[17] = 0.0;  // corrupted sample
    CHECK(!jost_nonvanishing_check(f).ok);
  }
}

TEST_CASE("m2 bound and direction") {
  const auto xs = uniform_grid(-2.5, 2.5, 41);
  for (double k : {0.7, 4.0}) {
    const ComplexField f = solve_m2(kBump, k, xs);
    for (std::size_t i = 0; i < xs.size(); ++i) {
      const double e = kBump.eta(xs[i]);
      CHECK(std::abs(f.m[i] - 1.0) <= k * e * std::exp(k * e) + 1e-12);
    }
  }
}

TEST_CASE("holomorphy in k: symmetric-difference derivative is direction-free") {
  // Cauchy-Riemann spot check at an interior point of the upper half-plane:
  // the difference quotient of k -> m1(x0, k) along the real and imaginary
  // directions must agree to O(h^2).
  const Cplx k0{1.0, 1.0};
  const std::vector<double> x0 = {0.25};
  const double h = 1e-3;
  auto m_at = [&](Cplx k) { return solve_m1(kBump, k, x0).m[0]; };
  const Cplx d_re = (m_at(k0 + h) - m_at(k0 - h)) / (2.0 * h);
  const Cplx d_im = (m_at(k0 + Cplx{0.0, h}) - m_at(k0 - Cplx{0.0, h})) /
                    (Cplx{0.0, 2.0 * h});
  CHECK(std::abs(d_re - d_im) < 1e-5 * (1.0 + std::abs(d_re)));
}

TEST_CASE("mirrored modulus identity for u2 combinations") {
  // [u2(.,k), u2(.,-k)] = -2ik gives |a u2' ± ik u2|^2 =
  // a^2|u2'|^2 + k^2|u2|^2 ∓ 2k^2 a for real k and a > 0.
  const auto xs = uniform_grid(-2, 2, 31);
  for (double k : {0.8, 3.5}) {
    const ComplexField f = solve_m2(kBump, k, xs);
    for (std::size_t i = 0; i < xs.size(); ++i) {
      const Cplx u = jost_u(f, i), up = jost_u_prime(f, i);
      for (double a : {1.0, 2.5}) {
        for (double sign : {1.0, -1.0}) {
          const double lhs = std::norm(a * up + sign * 1.0i * k * u);
          const double rhs = a * a * std::norm(up) + k * k * std::norm(u) -
                             sign * 2.0 * k * k * a;
          CHECK(std::abs(lhs - rhs) <= 1e-8 * (1.0 + rhs));
        }
      }
    }
  }
}
