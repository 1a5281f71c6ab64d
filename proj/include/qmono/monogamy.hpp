#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "qmono/measures.hpp"
#include "qmono/roof_config.hpp"
#include "qmono/state.hpp"

namespace qmono {

/// Which sign the residual of M^alpha is guaranteed to have.
enum class Regime {
  monogamy,   // alpha >= threshold: residual >= 0
  open_band,  // 0 < alpha < threshold: no guarantee
  polygamy,   // alpha < 0: residual <= 0
};

/// 2 for concurrence, negativity and cren; sqrt(2) for eof.
double monogamy_threshold(MeasureId measure);

struct AlphaExponent {
  double alpha = 0.0;
  MeasureId measure = MeasureId::negativity;
  Regime regime = Regime::open_band;

  /// Throws ArgumentError for alpha == 0 or non-finite alpha. Values within
  /// 1e-6 below the threshold are classified at the threshold, so a
  /// truncated sqrt(2) on the command line still lands in the eof regime.
  static AlphaExponent classify(double alpha, MeasureId measure);

  /// "monogamy_neg_cren", "monogamy_eof", "open_band" or "polygamy".
  std::string_view label() const;
};

enum class Verdict { monogamous, polygamous, violation_of_theorem, vacuous_pass };

std::string_view to_string(Verdict v);

struct ResidualTerm {
  std::vector<int> partners;  // subsystems paired with the focus
  double measure_value = 0.0; // M before the power
  double value = 0.0;         // M^alpha; 0 when excluded
  bool exact = true;
  bool excluded = false;      // zero-valued term at alpha < 0; 0^alpha never evaluated
};

/// One monogamy evaluation: lhs = M(focus|rest)^alpha, residual = lhs - sum(rhs).
struct ResidualReport {
  MeasureId measure = MeasureId::negativity;
  double alpha = 0.0;
  std::string regime;
  int focus = 0;
  double lhs_measure = 0.0;
  double lhs = 0.0;
  bool lhs_exact = true;
  std::vector<ResidualTerm> rhs_terms;
  double residual = 0.0;
  double tolerance = 0.0;
  Verdict verdict = Verdict::monogamous;
  bool exact = true;
  /// Non-empty when an inexact tail term bounds the residual from one side.
  std::string bound_direction;
  /// Strict polygamy inequalities are checked non-strictly against tolerance.
  bool strictness_not_decided = false;
};

/// Residual of M^alpha(focus|rest) >= sum_k M^alpha(focus, k) for an N-qubit
/// pure state, pairwise terms from the two-qubit marginals (partial
/// transpose for negativity, Wootters for concurrence and cren, the
/// Wootters closed form for eof). alpha == 0 is rejected.
ResidualReport alpha_residual(const PureState& psi, MeasureId measure, double alpha, int focus = 0,
                              double tolerance = -1.0);

/// Hierarchical family member k (3 <= k <= N): the first k-2 partners of the
/// focus enter as pairwise terms, the remaining partners as one tail term on
/// the mixed marginal. Concurrence/cren tails go through the convex-roof
/// optimizer and are marked inexact; eof tails must be rank one.
ResidualReport hierarchical_residual(const PureState& psi, MeasureId measure, double alpha, int k,
                                     int focus = 0, const RoofConfig& roof = {},
                                     double tolerance = -1.0);

/// alpha_residual restricted to alpha < 0. States with a zero pairwise term
/// come back as vacuous_pass without evaluating 0^alpha.
ResidualReport polygamy_check(const PureState& psi, MeasureId measure, double alpha, int focus = 0,
                              double tolerance = -1.0);

/// One report per grid point, in grid order. Throws on an empty grid or a
/// zero entry.
std::vector<ResidualReport> alpha_sweep(const PureState& psi, MeasureId measure,
                                        std::span<const double> alpha_grid, int focus = 0,
                                        double tolerance = -1.0);

/// (2/n)^alpha [(n-1)^(alpha/2) - (n-1)], n >= 3, alpha > 0.
double tau_concurrence_w_closed_form(int n, double alpha);
/// Always 1 for n >= 3, alpha > 0.
double tau_concurrence_ghz_closed_form(int n, double alpha);

/// Pairwise negativity of the W state: sqrt(2(n-2)^2 + 4 - 2(n-2) sqrt((n-2)^2 + 4)) / n.
double w_pairwise_negativity_closed_form(int n);

/// Negativity residual of the n-qubit W state:
///   n^-alpha [2^alpha (n-1)^(alpha/2) - (n-1) B^(alpha/2)],
///   B = 2(n-2)^2 + 4 - 2(n-2) sqrt((n-2)^2 + 4).
/// The bracket B carries alpha/2, making the pairwise term the alpha-power
/// of the square-rooted pairwise negativity; verify_w_negativity_reading()
/// checks this against states.
double tau_negativity_w_closed_form(int n, double alpha);

struct ReadingCheck {
  double max_pairwise_deviation = 0.0;
  double max_residual_deviation = 0.0;
  bool verified = false;
};

/// Compares the W-state negativity closed forms with direct computation
/// for n in {3, 4, 5} over a fixed alpha grid.
ReadingCheck verify_w_negativity_reading(double tolerance = 1e-10);

/// Bisection for the sign change of tau_negativity_w_closed_form(n, .) on
/// (lo, hi). Throws ArgumentError if the endpoints do not bracket a root.
double tau_negativity_w_crossing(int n, double lo = 1e-3, double hi = 2.0, double tol = 1e-8);

}  // namespace qmono
