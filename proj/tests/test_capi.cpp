#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <cstring>
#include <string>
#include <vector>

#include "helmscat/helmscat.h"

namespace {
const char* kSlabJson =
    R"({"kind": "slab", "c": 2.0, "x_left": 0.0, "x_right": 1.0})";
}

TEST_CASE("status codes and error messages") {
  helmscat_profile* p = nullptr;
  CHECK(helmscat_profile_from_json(nullptr, &p) == HELMSCAT_ERR_INVALID_ARG);
  CHECK(helmscat_profile_from_json("{not json", &p) == HELMSCAT_ERR_PARSE);
  CHECK(std::strlen(helmscat_last_error()) > 0);
  CHECK(helmscat_profile_from_json(R"({"kind": "slab", "c": -1, "x_left": 0, "x_right": 1})",
                                   &p) == HELMSCAT_ERR_VALIDATION);
  CHECK(helmscat_profile_from_json(R"({"kind": "wavelet"})", &p) ==
        HELMSCAT_ERR_PARSE);
}

TEST_CASE("profile lifecycle, eval and functionals") {
  helmscat_profile* p = nullptr;
  REQUIRE(helmscat_profile_from_json(kSlabJson, &p) == HELMSCAT_OK);
  double c = 0, q = 0, Q = 0;
  CHECK(helmscat_profile_eval(p, 0.5, &c, &q, &Q) == HELMSCAT_OK);
  CHECK(c == 2.0);
  CHECK(q == doctest::Approx(0.75));
  CHECK(Q == doctest::Approx(0.5));

  helmscat_functionals f{};
  CHECK(helmscat_profile_functionals(p, &f) == HELMSCAT_OK);
  CHECK(f.int_q == doctest::Approx(0.75).epsilon(1e-10));
  CHECK(f.int_Q == doctest::Approx(0.5).epsilon(1e-10));
  CHECK(f.int_Q2 == doctest::Approx(0.25).epsilon(1e-10));
  CHECK(f.bv_is_total_variation == 1);
  CHECK(f.c0 == 1.0);
  CHECK(f.cM == 2.0);

  double g = 0;
  CHECK(helmscat_profile_gamma(p, 0.0, &g) == HELMSCAT_OK);
  CHECK(g == doctest::Approx(0.75).epsilon(1e-10));

  double y = 0, back = 0;
  CHECK(helmscat_profile_chi(p, 0.7, 0, &y) == HELMSCAT_OK);
  CHECK(helmscat_profile_chi_inv(p, y, 0, &back) == HELMSCAT_OK);
  CHECK(back == doctest::Approx(0.7).epsilon(1e-10));

  char* json = nullptr;
  CHECK(helmscat_profile_to_json(p, &json) == HELMSCAT_OK);
  helmscat_profile* p2 = nullptr;
  CHECK(helmscat_profile_from_json(json, &p2) == HELMSCAT_OK);
  double c2 = 0;
  CHECK(helmscat_profile_eval(p2, 0.5, &c2, nullptr, nullptr) == HELMSCAT_OK);
  CHECK(c2 == 2.0);
  helmscat_string_free(json);
  helmscat_profile_free(p2);
  helmscat_profile_free(p);
}

TEST_CASE("forward grid matches the oracle grid through the C API") {
  helmscat_profile* p = nullptr;
  REQUIRE(helmscat_profile_from_json(kSlabJson, &p) == HELMSCAT_OK);

  std::vector<double> ks;
  for (int i = 1; i <= 12; ++i) ks.push_back(0.25 * i);
  const size_t n = ks.size();
  std::vector<double> Tr(n), Ti(n), R1r(n), R1i(n), R2r(n), R2i(n), res(n);
  std::vector<double> oTr(n), oTi(n), oR1r(n), oR1i(n), oR2r(n), oR2i(n);

  REQUIRE(helmscat_forward_grid(p, ks.data(), n, nullptr, Tr.data(), Ti.data(),
                                R1r.data(), R1i.data(), R2r.data(), R2i.data(),
                                res.data()) == HELMSCAT_OK);
  REQUIRE(helmscat_oracle_grid(p, ks.data(), n, oTr.data(), oTi.data(),
                               oR1r.data(), oR1i.data(), oR2r.data(),
                               oR2i.data()) == HELMSCAT_OK);
  for (size_t i = 0; i < n; ++i) {
    CHECK(std::abs(Tr[i] - oTr[i]) < 1e-8);
    CHECK(std::abs(Ti[i] - oTi[i]) < 1e-8);
    CHECK(std::abs(R2r[i] - oR2r[i]) < 1e-8);
    CHECK(std::abs(R2i[i] - oR2i[i]) < 1e-8);
    CHECK(res[i] < 1e-8);
  }
  helmscat_profile_free(p);
}

TEST_CASE("jost and riccati fields through the C API") {
  helmscat_profile* p = nullptr;
  REQUIRE(helmscat_profile_from_json(kSlabJson, &p) == HELMSCAT_OK);

  std::vector<double> xs = {-1.0, -0.5, 0.0, 0.25, 0.5, 0.75, 1.0, 1.5};
  const size_t n = xs.size();
  std::vector<double> mr(n), mi(n), mpr(n), mpi(n);
  CHECK(helmscat_jost_solve(p, 1.0, 0.0, 1, xs.data(), n, nullptr, mr.data(),
                            mi.data(), mpr.data(), mpi.data()) == HELMSCAT_OK);
  // terminal side exact
  CHECK(mr[n - 1] == 1.0);
  CHECK(mi[n - 1] == 0.0);

  std::vector<double> vr(n), vi(n);
  CHECK(helmscat_riccati_solve(p, 1.0, 0.0, 0, xs.data(), n, nullptr, vr.data(),
                               vi.data()) == HELMSCAT_OK);
  for (size_t i = 0; i < n; ++i)
    CHECK(vr[i] * vr[i] + vi[i] * vi[i] < 1.0);

  // rho requires a smooth profile: slab must be rejected
  CHECK(helmscat_riccati_solve(p, 1.0, 0.0, 3, xs.data(), n, nullptr, vr.data(),
                               vi.data()) == HELMSCAT_ERR_VALIDATION);
  helmscat_profile_free(p);
}

TEST_CASE("recovery through the C API") {
  helmscat_profile* p = nullptr;
  REQUIRE(helmscat_profile_from_json(kSlabJson, &p) == HELMSCAT_OK);

  // forward R2 samples on a modest grid
  std::vector<double> ks;
  {
    const int n = 120;
    std::vector<double> pos(n);
    for (int i = 0; i < n; ++i)
      pos[i] = 1e-3 * std::pow(100.0 / 1e-3, (double)i / (n - 1));
    for (int i = n - 1; i >= 0; --i) ks.push_back(-pos[i]);
    for (int i = 0; i < n; ++i) ks.push_back(pos[i]);
  }
  const size_t n = ks.size();
  std::vector<double> Tr(n), Ti(n), R1r(n), R1i(n), R2r(n), R2i(n);
  REQUIRE(helmscat_forward_grid(p, ks.data(), n, nullptr, Tr.data(), Ti.data(),
                                R1r.data(), R1i.data(), R2r.data(), R2i.data(),
                                nullptr) == HELMSCAT_OK);
  char* report = nullptr;
  REQUIRE(helmscat_recover(ks.data(), R2r.data(), R2i.data(), n, p, nullptr,
                           &report) == HELMSCAT_OK);
  const std::string rep = report;
  helmscat_string_free(report);
  CHECK(rep.find("\"int_q_rec\"") != std::string::npos);
  CHECK(rep.find("\"comparisons\"") != std::string::npos);
  helmscat_profile_free(p);
}
