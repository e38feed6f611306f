// helmscat CLI: forward scattering, Riccati fields, transfer-matrix oracle,
// reflection-to-transmission recovery and the invariant suite, all through
// the shared-library C API.
#include <CLI11.hpp>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "helmscat/helmscat.h"

namespace {

struct ProfileHandle {
  helmscat_profile* p = nullptr;
  ProfileHandle() = default;
  ProfileHandle(const ProfileHandle&) = delete;
  ProfileHandle& operator=(const ProfileHandle&) = delete;
  ProfileHandle(ProfileHandle&& other) noexcept : p(other.p) {
    other.p = nullptr;
  }
  ProfileHandle& operator=(ProfileHandle&& other) noexcept {
    if (this != &other) {
      helmscat_profile_free(p);
      p = other.p;
      other.p = nullptr;
    }
    return *this;
  }
  ~ProfileHandle() { helmscat_profile_free(p); }
};

[[noreturn]] void die(helmscat_status st) {
  std::cerr << "error: " << helmscat_last_error() << " (status " << st << ")\n";
  std::exit(1);
}

void check(helmscat_status st) {
  if (st != HELMSCAT_OK) die(st);
}

ProfileHandle load_profile(const std::string& path) {
  ProfileHandle h;
  check(helmscat_profile_from_file(path.c_str(), &h.p));
  return h;
}

// "lo:hi:n:log" or "lo:hi:n:lin"; produces a symmetric grid around 0 with n
// points per sign, 0 excluded.
std::vector<double> parse_kgrid(const std::string& spec) {
  double lo = 0, hi = 0;
  int n = 0;
  char mode[8] = {0};
  if (std::sscanf(spec.c_str(), "%lf:%lf:%d:%7s", &lo, &hi, &n, mode) != 4 ||
      !(lo > 0) || !(hi > lo) || n < 2)
    throw CLI::ValidationError("--kgrid", "expected lo:hi:n:log|lin with 0 < lo < hi, n >= 2");
  const std::string m = mode;
  std::vector<double> pos(n);
  for (int i = 0; i < n; ++i) {
    const double t = (double)i / (n - 1);
    pos[i] = (m == "log") ? lo * std::pow(hi / lo, t) : lo + (hi - lo) * t;
  }
  if (m != "log" && m != "lin")
    throw CLI::ValidationError("--kgrid", "mode must be log or lin");
  std::vector<double> ks;
  ks.reserve(2 * n);
  for (int i = n - 1; i >= 0; --i) ks.push_back(-pos[i]);
  for (int i = 0; i < n; ++i) ks.push_back(pos[i]);
  return ks;
}

std::string d17(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

void write_file(const std::string& path, const std::string& content) {
  if (path == "-") {
    std::cout << content;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    std::cerr << "error: cannot write " << path << "\n";
    std::exit(1);
  }
  out << content;
}

// x-grid for field outputs: uniform over the support plus margin.
std::vector<double> field_grid(const helmscat_profile* p, int n) {
  helmscat_functionals f{};
  check(helmscat_profile_functionals(p, &f));
  double a = f.support_min - 0.5, b = f.support_max + 0.5;
  if (!(b > a)) {
    a = -1.0;
    b = 1.0;
  }
  std::vector<double> xs(n);
  for (int i = 0; i < n; ++i) xs[i] = a + (b - a) * i / (n - 1);
  return xs;
}

struct CsvTable {
  std::vector<std::string> rows;  // k, ReT, ImT, ReR1, ImR1, ReR2, ImR2, res
};

std::string scattering_csv(const std::vector<double>& ks,
                           const std::vector<double>& Tr,
                           const std::vector<double>& Ti,
                           const std::vector<double>& R1r,
                           const std::vector<double>& R1i,
                           const std::vector<double>& R2r,
                           const std::vector<double>& R2i,
                           const std::vector<double>* res) {
  std::string s = "k,ReT,ImT,ReR1,ImR1,ReR2,ImR2";
  if (res) s += ",unitarity_residual";
  s += "\n";
  for (std::size_t i = 0; i < ks.size(); ++i) {
    s += d17(ks[i]) + "," + d17(Tr[i]) + "," + d17(Ti[i]) + "," + d17(R1r[i]) +
         "," + d17(R1i[i]) + "," + d17(R2r[i]) + "," + d17(R2i[i]);
    if (res) s += "," + d17((*res)[i]);
    s += "\n";
  }
  return s;
}

// Minimal CSV reader for recover --r2: header names k, ReR2, ImR2.
void read_r2_csv(const std::string& path, std::vector<double>& ks,
                 std::vector<double>& re, std::vector<double>& im) {
  std::ifstream in(path);
  if (!in) {
    std::cerr << "error: cannot open " << path << "\n";
    std::exit(1);
  }
  std::string line;
  if (!std::getline(in, line)) {
    std::cerr << "error: empty CSV " << path << "\n";
    std::exit(1);
  }
  auto split = [](const std::string& s) {
    std::vector<std::string> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(item);
    return out;
  };
  const auto header = split(line);
  int ik = -1, ire = -1, iim = -1;
  for (std::size_t i = 0; i < header.size(); ++i) {
    if (header[i] == "k") ik = (int)i;
    if (header[i] == "ReR2") ire = (int)i;
    if (header[i] == "ImR2") iim = (int)i;
  }
  if (ik < 0 || ire < 0 || iim < 0) {
    std::cerr << "error: CSV must have columns k, ReR2, ImR2\n";
    std::exit(1);
  }
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    const auto cells = split(line);
    ks.push_back(std::stod(cells[ik]));
    re.push_back(std::stod(cells[ire]));
    im.push_back(std::stod(cells[iim]));
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"1-D Helmholtz scattering: forward solves and R2 -> T recovery"};
  app.require_subcommand(1);

  std::string profile_path, out_path = "-", kgrid_spec = "1e-3:50:400:log";
  std::string k_spec = "1,0";
  std::string field = "r";
  std::string r2_path, truth_path;
  double tol_ode = 0.0, tol_quad = 0.0;
  int jobs = 0;
  int grid_n = 401;

  auto add_common = [&](CLI::App* cmd, bool needs_profile) {
    if (needs_profile)
      cmd->add_option("--profile", profile_path, "profile JSON file")
          ->required();
    cmd->add_option("--out", out_path, "output path ('-' = stdout)");
    cmd->add_option("--tol-ode", tol_ode, "ODE relative tolerance");
    cmd->add_option("--tol-quad", tol_quad, "quadrature tolerance");
    cmd->add_option("--jobs", jobs, "parallel workers (0 = all cores)");
  };

  auto* cmd_jost = app.add_subcommand("jost", "reduced Jost field m1/m2");
  add_common(cmd_jost, true);
  cmd_jost->add_option("--k", k_spec, "wavenumber re,im");
  int jost_which = 1;
  cmd_jost->add_option("--which", jost_which, "1 = m1, 2 = m2");
  cmd_jost->add_option("--grid-n", grid_n, "number of x samples");

  auto* cmd_forward = app.add_subcommand("forward", "scattering coefficients on a k-grid");
  add_common(cmd_forward, true);
  cmd_forward->add_option("--kgrid", kgrid_spec, "lo:hi:n:log|lin");

  auto* cmd_riccati = app.add_subcommand("riccati", "r, w, w_minus or rho field");
  add_common(cmd_riccati, true);
  cmd_riccati->add_option("--k", k_spec, "wavenumber re,im");
  cmd_riccati->add_option("--field", field, "r | w | wminus | rho");
  cmd_riccati->add_option("--grid-n", grid_n, "number of x samples");

  auto* cmd_oracle = app.add_subcommand("oracle", "transfer-matrix scattering");
  add_common(cmd_oracle, true);
  cmd_oracle->add_option("--kgrid", kgrid_spec, "lo:hi:n:log|lin");

  auto* cmd_recover = app.add_subcommand("recover", "R2 -> T, ∫q, ∫Q², ∫Q");
  add_common(cmd_recover, false);
  cmd_recover->add_option("--r2", r2_path, "CSV with k, ReR2, ImR2")->required();
  cmd_recover->add_option("--truth", truth_path, "profile JSON for comparisons");

  auto* cmd_verify = app.add_subcommand("verify", "run the invariant checklist");
  add_common(cmd_verify, false);
  cmd_verify->add_option("--profile", profile_path,
                         "extra profile to include in the sweeps");
  std::uint64_t seed = 0;
  cmd_verify->add_option("--seed", seed,
                         "seed for randomized checks (default HELMSCAT_SEED or 0)");

  CLI11_PARSE(app, argc, argv);

  if (cmd_jost->count("--tol-ode") + cmd_forward->count("--tol-ode") +
          cmd_riccati->count("--tol-ode") + cmd_oracle->count("--tol-ode") +
          cmd_recover->count("--tol-ode") + cmd_verify->count("--tol-ode") >
          0 &&
      !(tol_ode > 0.0)) {
    std::cerr << "error: --tol-ode must be positive\n";
    return 1;
  }
  if (cmd_jost->count("--tol-quad") + cmd_forward->count("--tol-quad") +
          cmd_riccati->count("--tol-quad") + cmd_oracle->count("--tol-quad") +
          cmd_recover->count("--tol-quad") + cmd_verify->count("--tol-quad") >
          0 &&
      !(tol_quad > 0.0)) {
    std::cerr << "error: --tol-quad must be positive\n";
    return 1;
  }

  helmscat_options opt{};
  opt.ode_tol = tol_ode;
  opt.quad_tol = tol_quad;
  opt.jobs = jobs;

  if (cmd_jost->parsed() || cmd_riccati->parsed()) {
    double kre = 0, kim = 0;
    if (std::sscanf(k_spec.c_str(), "%lf,%lf", &kre, &kim) != 2) {
      std::cerr << "error: --k expects re,im\n";
      return 1;
    }
    ProfileHandle p = load_profile(profile_path);
    const auto xs = field_grid(p.p, grid_n);
    const std::size_t n = xs.size();
    std::vector<double> a(n), b(n), c(n), d(n);
    std::string csv;
    if (cmd_jost->parsed()) {
      check(helmscat_jost_solve(p.p, kre, kim, jost_which, xs.data(), n, &opt,
                                a.data(), b.data(), c.data(), d.data()));
      csv = "x,Re m,Im m,Re m',Im m'\n";
      for (std::size_t i = 0; i < n; ++i)
        csv += d17(xs[i]) + "," + d17(a[i]) + "," + d17(b[i]) + "," +
               d17(c[i]) + "," + d17(d[i]) + "\n";
    } else {
      int which = 0;
      if (field == "r") which = 0;
      else if (field == "w") which = 1;
      else if (field == "wminus") which = 2;
      else if (field == "rho") which = 3;
      else {
        std::cerr << "error: --field must be r | w | wminus | rho\n";
        return 1;
      }
      check(helmscat_riccati_solve(p.p, kre, kim, which, xs.data(), n, &opt,
                                   a.data(), b.data()));
      csv = "x,Re " + field + ",Im " + field + "\n";
      for (std::size_t i = 0; i < n; ++i)
        csv += d17(xs[i]) + "," + d17(a[i]) + "," + d17(b[i]) + "\n";
    }
    write_file(out_path, csv);
    return 0;
  }

  if (cmd_forward->parsed() || cmd_oracle->parsed()) {
    ProfileHandle p = load_profile(profile_path);
    const auto ks = parse_kgrid(kgrid_spec);
    const std::size_t n = ks.size();
    std::vector<double> Tr(n), Ti(n), R1r(n), R1i(n), R2r(n), R2i(n), res(n);
    if (cmd_forward->parsed()) {
      check(helmscat_forward_grid(p.p, ks.data(), n, &opt, Tr.data(), Ti.data(),
                                  R1r.data(), R1i.data(), R2r.data(),
                                  R2i.data(), res.data()));
      write_file(out_path,
                 scattering_csv(ks, Tr, Ti, R1r, R1i, R2r, R2i, &res));
    } else {
      check(helmscat_oracle_grid(p.p, ks.data(), n, Tr.data(), Ti.data(),
                                 R1r.data(), R1i.data(), R2r.data(),
                                 R2i.data()));
      write_file(out_path,
                 scattering_csv(ks, Tr, Ti, R1r, R1i, R2r, R2i, nullptr));
    }
    return 0;
  }

  if (cmd_recover->parsed()) {
    std::vector<double> ks, re, im;
    read_r2_csv(r2_path, ks, re, im);
    ProfileHandle truth;
    if (!truth_path.empty()) truth = load_profile(truth_path);
    char* report = nullptr;
    check(helmscat_recover(ks.data(), re.data(), im.data(), ks.size(),
                           truth.p, &opt, &report));
    write_file(out_path, report);
    helmscat_string_free(report);
    return 0;
  }

  if (cmd_verify->parsed()) {
    if (seed == 0) {
      if (const char* env = std::getenv("HELMSCAT_SEED"))
        seed = std::strtoull(env, nullptr, 10);
    }
    std::string profile_json;
    if (!profile_path.empty()) {
      std::ifstream in(profile_path);
      if (!in) {
        std::cerr << "error: cannot open " << profile_path << "\n";
        return 1;
      }
      std::ostringstream ss;
      ss << in.rdbuf();
      profile_json = ss.str();
    }
    char* report = nullptr;
    int all_passed = 0;
    check(helmscat_verify(profile_json.empty() ? nullptr : profile_json.c_str(),
                          seed, &opt, &report, &all_passed));
    const std::string rep = report;
    helmscat_string_free(report);
    write_file(out_path, rep);
    if (!all_passed) {
      // name every failing check on stderr
      std::istringstream lines(rep);
      std::string line;
      while (std::getline(lines, line)) {
        if (line.find("\"passed\": false") == std::string::npos) continue;
        const auto b = line.find("\"name\": \"");
        if (b == std::string::npos) continue;
        const auto e = line.find('"', b + 9);
        std::cerr << "verify: FAILED check " << line.substr(b + 9, e - b - 9)
                  << "\n";
      }
      return 1;
    }
    return 0;
  }

  return 0;
}
