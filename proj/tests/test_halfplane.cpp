#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <complex>
#include <numbers>
#include <random>
#include <vector>

#include "core/halfplane.hpp"
#include "core/oracle.hpp"
#include "core/profile.hpp"
#include "core/scatter.hpp"

using namespace helmscat;
using Cplx = std::complex<double>;

namespace {

std::vector<double> sym_log_grid(double lo, double hi, int n_per_sign) {
  std::vector<double> pos(n_per_sign);
  for (int i = 0; i < n_per_sign; ++i)
    pos[i] = lo * std::pow(hi / lo, (double)i / (n_per_sign - 1));
  std::vector<double> ks;
  for (int i = n_per_sign - 1; i >= 0; --i) ks.push_back(-pos[i]);
  ks.push_back(0.0);
  for (int i = 0; i < n_per_sign; ++i) ks.push_back(pos[i]);
  return ks;
}

// log|F|^2 = log(1 - |R2|^2) data from a forward solve.
BoundaryData log_F2_of(const Profile& p, double kmax = 50.0, int n = 300) {
  const auto ks = log_k_grid(1e-3, kmax, n);
  const ScatterGrid g = scattering_grid(p, ks);
  std::vector<double> kk, vv;
  bool zero_done = false;
  for (std::size_t i = 0; i < g.ks.size(); ++i) {
    if (!zero_done && g.ks[i] > 0) {
      kk.push_back(0.0);
      vv.push_back(0.0);
      zero_done = true;
    }
    kk.push_back(g.ks[i]);
    vv.push_back(std::log1p(-std::min(std::norm(g.points[i].R2), 0.999999)));
  }
  return BoundaryData::with_power_tail(std::move(kk), std::move(vv));
}

}  // namespace

TEST_CASE("poisson kernel has unit mass") {
  // constant data on a wide grid; truncation error ~ 2/(pi K)
  const auto ks = sym_log_grid(1e-3, 1e6, 200);
  BoundaryData b(ks, std::vector<double>(ks.size(), 1.0));
  const double got = poisson_extend(b, {0.3, 1.0});
  CHECK(std::abs(got - 1.0) < 1e-5);

  // against the exact truncated-kernel value, the quadrature is sharp
  const double K = 1e6;
  const double x = 0.3, y = 1.0;
  const double want =
      (std::atan((K - x) / y) + std::atan((K + x) / y)) / std::numbers::pi;
  CHECK(std::abs(got - want) < 1e-10);
}

TEST_CASE("closed form: extension of 1/(1+t^2) is (y+1)/(x^2+(y+1)^2)") {
  // The grid must be dense: the data is a piecewise-linear sampling whose
  // interpolation error is what limits the comparison with the closed form.
  const auto ks = sym_log_grid(1e-3, 1e4, 3000);
  std::vector<double> vals;
  for (double t : ks) vals.push_back(1.0 / (1.0 + t * t));
  const BoundaryData b = BoundaryData::with_power_tail(ks, vals);
  CHECK(b.tail == TailModel::PowerLaw);
  CHECK(b.tail_exponent == doctest::Approx(2.0).epsilon(0.05));
  for (Cplx z : {Cplx{0.0, 1.0}, Cplx{1.0, 0.5}, Cplx{-2.0, 3.0}}) {
    const double want =
        (z.imag() + 1.0) / (z.real() * z.real() + (z.imag() + 1.0) * (z.imag() + 1.0));
    CHECK(std::abs(poisson_extend(b, z) - want) < 1e-5);
  }
}

TEST_CASE("linearity, positivity, maximum principle") {
  const auto ks = sym_log_grid(1e-2, 100.0, 60);
  std::vector<double> v1, v2;
  for (double t : ks) {
    v1.push_back(1.0 / (1.0 + t * t));
    v2.push_back(std::exp(-std::abs(t)));
  }
  const BoundaryData b1(ks, v1), b2(ks, v2);
  std::vector<double> v3(v1.size());
  const double alpha = 2.7;
  for (std::size_t i = 0; i < v1.size(); ++i) v3[i] = alpha * v1[i] + v2[i];
  const BoundaryData b3(ks, v3);
  for (Cplx z : {Cplx{0.4, 0.8}, Cplx{-3.0, 2.0}}) {
    const double lhs = poisson_extend(b3, z);
    const double rhs = alpha * poisson_extend(b1, z) + poisson_extend(b2, z);
    CHECK(std::abs(lhs - rhs) < 1e-12);
    CHECK(poisson_extend(b1, z) >= 0.0);
    CHECK(poisson_extend(b1, z) <= 1.0 + 1e-12);  // max b1 = 1
  }
}

TEST_CASE("|F| = 1 gives the constant outer function 1") {
  const auto ks = sym_log_grid(1e-2, 50.0, 40);
  BoundaryData b(ks, std::vector<double>(ks.size(), 0.0));
  for (Cplx z : {Cplx{0.0, 1.0}, Cplx{2.0, 0.3}}) {
    CHECK(std::abs(outer_function(b, z) - 1.0) < 1e-12);
  }
  CHECK(std::abs(boundary_trace(b, 1.0).value - 1.0) < 1e-12);
}

TEST_CASE("outer modulus identity: two independent quadratures") {
  const BoundaryData b = log_F2_of(Profile::bump(0.5, 0.0, 2.0));

  // at z = i the kernel collapses to i/(k^2+1): log Theta(i) is real
  const Cplx theta_i = outer_function(b, {0.0, 1.0});
  const double poisson_i = poisson_extend(b, {0.0, 1.0});
  CHECK(std::abs(std::abs(theta_i) - std::exp(poisson_i / 2.0)) /
            std::abs(theta_i) <
        1e-9);

  // random z: log|Theta(z)| = P[log|F|](z) = P[b]/2
  std::mt19937_64 rng(99);
  auto uniform = [&](double a, double c) {
    return a + (c - a) * ((rng() >> 11) * 0x1.0p-53);
  };
  for (int t = 0; t < 100; ++t) {
    const Cplx z{uniform(-10.0, 10.0), uniform(0.05, 4.0)};
    const double lhs = std::log(std::abs(outer_function(b, z)));
    const double rhs = poisson_extend(b, z) / 2.0;
    CHECK(std::abs(lhs - rhs) < 1e-9);
  }
}

TEST_CASE("Theta(it) -> 1 as t -> 0 (odd integrand at the origin)") {
  const BoundaryData b = log_F2_of(Profile::slab(2.0, 0.0, 1.0));
  double prev = 1e9;
  for (double t : {0.5, 0.1, 0.02, 0.004}) {
    const double dist = std::abs(outer_function(b, {0.0, t}) - 1.0);
    CHECK(dist < prev + 1e-12);
    prev = dist;
  }
  CHECK(prev < 1e-2);
}

TEST_CASE("boundary trace recovers |T| on the real axis") {
  SUBCASE("slab at k0 = 1") {
    const Profile p = Profile::slab(2.0, 0.0, 1.0);
    const BoundaryData b = log_F2_of(p);
    const auto tr = boundary_trace(b, 1.0);
    const auto pt = transfer_scattering(LayerStack::from_profile(p), 1.0);
    CHECK(std::abs(std::abs(tr.value) - std::abs(pt.T)) < 1e-4);
    CHECK(tr.modulus_mismatch < 1e-4);
  }
  SUBCASE("bump at k0 = 0.5") {
    const Profile p = Profile::bump(0.5, 0.0, 2.0);
    const BoundaryData b = log_F2_of(p);
    const auto tr = boundary_trace(b, 0.5);
    const auto pt = scattering_at(p, 0.5);
    CHECK(std::abs(std::abs(tr.value) - std::abs(pt.T)) < 1e-4);
  }
}
