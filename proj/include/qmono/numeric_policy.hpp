#pragma once

namespace qmono {

/// Tolerances shared by every module. Set once at startup if the defaults
/// need changing; reads are not synchronized with writes.
struct NumericPolicy {
  double norm_tol = 1e-12;        // unit-norm check on pure states
  double structural_tol = 1e-10;  // hermiticity, trace, PSD, ensemble sums
  double clamp_tol = 1e-10;       // measure values in [-clamp_tol, 0) clamp to 0
  double rank_tol = 1e-12;        // eigenvalues above this count toward numerical rank
  double factor_drop_tol = 1e-14; // eigenvalues dropped when forming sqrt factors
  double zero_term_tol = 1e-10;   // marginal measure values treated as zero
  double verdict_tol = 1e-9;      // monogamy verdict tolerance
};

const NumericPolicy& numeric_policy();
void set_numeric_policy(const NumericPolicy& policy);

}  // namespace qmono
