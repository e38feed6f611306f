#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "profile.hpp"
#include "scatter_types.hpp"

namespace helmscat {

struct VerifyOptions {
  std::uint64_t seed = 0;
  SolveOptions solve;
  std::optional<Profile> extra_profile;  // included in the profile sweeps
};

struct CheckResult {
  std::string name;
  bool passed = false;
  double residual = 0.0;   // measured quantity, compared against threshold
  double threshold = 0.0;  // passes iff residual < threshold
};

struct VerifyReport {
  std::vector<CheckResult> checks;
  bool all_passed = false;
  std::string to_json() const;  // deterministic: fixed order and formatting
};

// Individual named checks; each returns residual/threshold semantics so the
// acceptance suite can group and time them.
namespace checks {

CheckResult identity_profile(const VerifyOptions& o);
CheckResult oracle_slab(const VerifyOptions& o);
CheckResult oracle_stack3(const VerifyOptions& o);
CheckResult unitarity(const VerifyOptions& o);
CheckResult conjugation_symmetry(const VerifyOptions& o);
CheckResult reciprocity(const VerifyOptions& o);
CheckResult reflection_relation(const VerifyOptions& o);
CheckResult wronskian_constancy(const VerifyOptions& o);
CheckResult jost_bounds(const VerifyOptions& o);          // envelope estimates
CheckResult jost_nonvanishing(const VerifyOptions& o);
CheckResult two_path_r2(const VerifyOptions& o);
CheckResult low_k_law(const VerifyOptions& o);
CheckResult r_strictly_contractive(const VerifyOptions& o);  // |r| < 1
CheckResult w_positive_real_part(const VerifyOptions& o);
CheckResult w_real_axis_identity(const VerifyOptions& o);  // Re w = 1/|u1|^2
CheckResult imaginary_axis_w_bounds(const VerifyOptions& o);
CheckResult stability_inequality(const VerifyOptions& o);
CheckResult transmission_bound_upper(const VerifyOptions& o);
CheckResult m1_growth_inequality(const VerifyOptions& o);
CheckResult transmission_product_identity(const VerifyOptions& o);
CheckResult energy_identity_interior(const VerifyOptions& o);
CheckResult energy_identity_left_edge(const VerifyOptions& o);
CheckResult bilinear_identity(const VerifyOptions& o);
CheckResult tilde_bilinear_identity(const VerifyOptions& o);  // chi-coordinate form
CheckResult sylvester_bound(const VerifyOptions& o);
CheckResult poisson_summability(const VerifyOptions& o);
CheckResult recovery_slab(const VerifyOptions& o);
CheckResult recovery_bump(const VerifyOptions& o);
CheckResult validation_negative(const VerifyOptions& o);
CheckResult profile_roundtrip(const VerifyOptions& o);

}  // namespace checks

// Runs every check above in a fixed order.
VerifyReport run_verify(const VerifyOptions& o);

}  // namespace helmscat
