#include "qmono/monogamy.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "qmono/convex_roof.hpp"
#include "qmono/errors.hpp"
#include "qmono/factories.hpp"
#include "qmono/numeric_policy.hpp"
#include "qmono/tensor_ops.hpp"

namespace qmono {

namespace {

constexpr double kRegimeSlack = 1e-6;

void require_qubit_pure(const PureState& psi, int focus) {
  if (psi.num_subsystems() < 2) throw ArgumentError("monogamy needs at least two qubits");
  for (int d : psi.dims()) {
    if (d != 2) throw ArgumentError("monogamy checks are defined for qubit systems only");
  }
  if (focus < 0 || focus >= psi.num_subsystems()) throw ArgumentError("focus subsystem out of range");
}

double resolve_tolerance(double tol) { return tol < 0.0 ? numeric_policy().verdict_tol : tol; }

double one_to_rest(const PureState& psi, MeasureId measure, const Bipartition& cut) {
  switch (measure) {
    case MeasureId::concurrence: return concurrence_pure(psi, cut).value;
    case MeasureId::negativity: return negativity(psi, cut).value;
    case MeasureId::cren: return cren(psi, cut).value;
    case MeasureId::eof: return eof_pure(psi, cut).value;
  }
  throw UnsupportedRoute("unknown measure");
}

double two_qubit_term(const DensityMatrix& rho, MeasureId measure) {
  const Bipartition cut({0}, {1});
  switch (measure) {
    case MeasureId::negativity: return negativity(rho, cut).value;
    case MeasureId::concurrence: return concurrence_two_qubit(rho).value;
    case MeasureId::cren: return cren(rho, cut).value;
    case MeasureId::eof: return eof_two_qubit(rho).value;
  }
  throw UnsupportedRoute("unknown measure");
}

std::vector<int> partners_of(int focus, int n) {
  std::vector<int> out;
  for (int i = 0; i < n; ++i) {
    if (i != focus) out.push_back(i);
  }
  return out;
}

ResidualTerm pairwise_term(const PureState& psi, MeasureId measure, int focus, int partner) {
  const auto marginal = partial_trace(psi, {focus, partner});
  ResidualTerm t;
  t.partners = {partner};
  t.measure_value = two_qubit_term(marginal, measure);
  return t;
}

// Applies the power, the zero-term convention, the residual and the verdict.
void finish(ResidualReport& r, const AlphaExponent& a) {
  const double zero = numeric_policy().zero_term_tol;
  const bool negative_power = a.alpha < 0.0;
  bool vacuous = false;

  if (negative_power && r.lhs_measure <= zero) {
    r.lhs = 0.0;
    vacuous = true;
  } else {
    r.lhs = r.lhs_measure <= 0.0 ? 0.0 : std::pow(r.lhs_measure, a.alpha);
  }
  double sum = 0.0;
  for (auto& t : r.rhs_terms) {
    if (negative_power && t.measure_value <= zero) {
      t.excluded = true;
      t.value = 0.0;
      vacuous = true;
      continue;
    }
    t.value = t.measure_value <= 0.0 ? 0.0 : std::pow(t.measure_value, a.alpha);
    sum += t.value;
  }
  r.residual = r.lhs - sum;
  r.exact = r.lhs_exact && std::all_of(r.rhs_terms.begin(), r.rhs_terms.end(),
                                       [](const ResidualTerm& t) { return t.exact; });
  r.strictness_not_decided = a.regime == Regime::polygamy;

  if (vacuous) {
    r.verdict = Verdict::vacuous_pass;
    return;
  }
  switch (a.regime) {
    case Regime::monogamy:
      r.verdict = r.residual >= -r.tolerance ? Verdict::monogamous : Verdict::violation_of_theorem;
      break;
    case Regime::polygamy:
      r.verdict = r.residual <= r.tolerance ? Verdict::polygamous : Verdict::violation_of_theorem;
      break;
    case Regime::open_band:
      r.verdict = r.residual >= -r.tolerance ? Verdict::monogamous : Verdict::polygamous;
      break;
  }
}

ResidualReport start_report(const PureState& psi, MeasureId measure, const AlphaExponent& a, int focus,
                            double tolerance) {
  ResidualReport r;
  r.measure = measure;
  r.alpha = a.alpha;
  r.regime = std::string(a.label());
  r.focus = focus;
  r.tolerance = resolve_tolerance(tolerance);
  const auto cut = Bipartition::complement_of({focus}, psi.num_subsystems());
  r.lhs_measure = one_to_rest(psi, measure, cut);
  return r;
}

}  // namespace

double monogamy_threshold(MeasureId measure) {
  return measure == MeasureId::eof ? std::numbers::sqrt2 : 2.0;
}

AlphaExponent AlphaExponent::classify(double alpha, MeasureId measure) {
  if (!std::isfinite(alpha)) throw ArgumentError("alpha must be finite");
  if (alpha == 0.0) throw ArgumentError("alpha = 0 is excluded");
  AlphaExponent a{alpha, measure, Regime::open_band};
  if (alpha < 0.0) {
    a.regime = Regime::polygamy;
  } else if (alpha >= monogamy_threshold(measure) - kRegimeSlack) {
    a.regime = Regime::monogamy;
  }
  return a;
}

std::string_view AlphaExponent::label() const {
  switch (regime) {
    case Regime::monogamy: return measure == MeasureId::eof ? "monogamy_eof" : "monogamy_neg_cren";
    case Regime::open_band: return "open_band";
    case Regime::polygamy: return "polygamy";
  }
  return "unknown";
}

std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::monogamous: return "monogamous";
    case Verdict::polygamous: return "polygamous";
    case Verdict::violation_of_theorem: return "violation_of_theorem";
    case Verdict::vacuous_pass: return "vacuous_pass";
  }
  return "unknown";
}

ResidualReport alpha_residual(const PureState& psi, MeasureId measure, double alpha, int focus,
                              double tolerance) {
  require_qubit_pure(psi, focus);
  const auto a = AlphaExponent::classify(alpha, measure);
  auto r = start_report(psi, measure, a, focus, tolerance);
  for (int partner : partners_of(focus, psi.num_subsystems())) {
    r.rhs_terms.push_back(pairwise_term(psi, measure, focus, partner));
  }
  finish(r, a);
  return r;
}

ResidualReport hierarchical_residual(const PureState& psi, MeasureId measure, double alpha, int k,
                                     int focus, const RoofConfig& roof, double tolerance) {
  require_qubit_pure(psi, focus);
  const int n = psi.num_subsystems();
  if (k < 3 || k > n) {
    throw ArgumentError("hierarchy level k=" + std::to_string(k) + " outside [3, " + std::to_string(n) + "]");
  }
  const auto a = AlphaExponent::classify(alpha, measure);
  auto r = start_report(psi, measure, a, focus, tolerance);

  const auto partners = partners_of(focus, n);
  const auto split = static_cast<std::ptrdiff_t>(k - 2);
  for (auto it = partners.begin(); it != partners.begin() + split; ++it) {
    r.rhs_terms.push_back(pairwise_term(psi, measure, focus, *it));
  }
  const std::vector<int> tail(partners.begin() + split, partners.end());
  if (tail.size() == 1) {
    r.rhs_terms.push_back(pairwise_term(psi, measure, focus, tail.front()));
    finish(r, a);
    return r;
  }

  std::vector<int> keep = tail;
  keep.push_back(focus);
  std::sort(keep.begin(), keep.end());
  const auto marginal = partial_trace(psi, keep);
  const int focus_pos = static_cast<int>(std::find(keep.begin(), keep.end(), focus) - keep.begin());
  const auto cut = Bipartition::complement_of({focus_pos}, static_cast<int>(keep.size()));

  ResidualTerm t;
  t.partners = tail;
  if (marginal.numerical_rank() == 1) {
    t.measure_value = one_to_rest(purify_rank_one(marginal), measure, cut);
  } else {
    switch (measure) {
      case MeasureId::negativity:
        t.measure_value = negativity(marginal, cut).value;
        break;
      case MeasureId::concurrence:
      case MeasureId::cren:
        t.measure_value = convex_roof(marginal, cut, MeasureId::concurrence, roof).value;
        t.exact = false;
        r.bound_direction = a.alpha > 0.0
                                ? "tail is upper bound => residual reported is a LOWER bound on the true residual"
                                : "tail is upper bound => residual reported is an UPPER bound on the true residual";
        break;
      case MeasureId::eof:
        throw UnsupportedRoute("unsupported: eof tail term on a mixed marginal (needs a rank-one tail)");
    }
  }
  r.rhs_terms.push_back(std::move(t));
  finish(r, a);
  return r;
}

ResidualReport polygamy_check(const PureState& psi, MeasureId measure, double alpha, int focus,
                              double tolerance) {
  if (alpha > 0.0) throw ArgumentError("polygamy_check needs alpha <= 0");
  return alpha_residual(psi, measure, alpha, focus, tolerance);
}

std::vector<ResidualReport> alpha_sweep(const PureState& psi, MeasureId measure,
                                        std::span<const double> alpha_grid, int focus, double tolerance) {
  if (alpha_grid.empty()) throw ArgumentError("alpha grid is empty");
  for (double alpha : alpha_grid) {
    if (alpha == 0.0) throw ArgumentError("alpha grid must exclude 0");
  }
  std::vector<ResidualReport> out;
  out.reserve(alpha_grid.size());
  for (double alpha : alpha_grid) out.push_back(alpha_residual(psi, measure, alpha, focus, tolerance));
  return out;
}

namespace {
void require_closed_form_range(int n, double alpha) {
  if (n < 3) throw ArgumentError("closed forms need n >= 3");
  if (!(alpha > 0.0) || !std::isfinite(alpha)) throw ArgumentError("closed forms need alpha > 0");
}
}  // namespace

double tau_concurrence_w_closed_form(int n, double alpha) {
  require_closed_form_range(n, alpha);
  const double m = n - 1.0;
  return std::pow(2.0 / n, alpha) * (std::pow(m, alpha / 2.0) - m);
}

double tau_concurrence_ghz_closed_form(int n, double alpha) {
  require_closed_form_range(n, alpha);
  return 1.0;
}

namespace {
double w_bracket(int n) {
  const double d = n - 2.0;
  return 2.0 * d * d + 4.0 - 2.0 * d * std::sqrt(d * d + 4.0);
}
}  // namespace

double w_pairwise_negativity_closed_form(int n) {
  if (n < 3) throw ArgumentError("closed forms need n >= 3");
  return std::sqrt(w_bracket(n)) / n;
}

double tau_negativity_w_closed_form(int n, double alpha) {
  require_closed_form_range(n, alpha);
  const double m = n - 1.0;
  return std::pow(static_cast<double>(n), -alpha) *
         (std::pow(2.0, alpha) * std::pow(m, alpha / 2.0) - m * std::pow(w_bracket(n), alpha / 2.0));
}

ReadingCheck verify_w_negativity_reading(double tolerance) {
  ReadingCheck check;
  for (int n : {3, 4, 5}) {
    const auto w = w_state(n);
    const auto pair = partial_trace(w, {0, 1});
    const double direct_pair = negativity(pair, Bipartition({0}, {1})).value;
    check.max_pairwise_deviation =
        std::max(check.max_pairwise_deviation, std::abs(direct_pair - w_pairwise_negativity_closed_form(n)));
    for (int i = 1; i <= 19; ++i) {
      const double alpha = 0.1 * i;
      const double direct = alpha_residual(w, MeasureId::negativity, alpha).residual;
      check.max_residual_deviation =
          std::max(check.max_residual_deviation, std::abs(direct - tau_negativity_w_closed_form(n, alpha)));
    }
  }
  check.verified = check.max_pairwise_deviation <= tolerance && check.max_residual_deviation <= tolerance;
  return check;
}

double tau_negativity_w_crossing(int n, double lo, double hi, double tol) {
  auto f = [n](double a) { return tau_negativity_w_closed_form(n, a); };
  double flo = f(lo);
  const double fhi = f(hi);
  if ((flo < 0.0) == (fhi < 0.0)) throw ArgumentError("interval does not bracket a sign change");
  while (hi - lo > tol) {
    const double mid = 0.5 * (lo + hi);
    const double fmid = f(mid);
    if ((fmid < 0.0) == (flo < 0.0)) {
      lo = mid;
      flo = fmid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

}  // namespace qmono
