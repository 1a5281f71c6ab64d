#pragma once

#include <vector>

#include "qmono/measures.hpp"
#include "qmono/roof_config.hpp"
#include "qmono/state.hpp"

namespace qmono {

struct EnsembleMember {
  double probability;
  PureState state;
};

/// A pure-state decomposition {p_i, psi_i} of realized_state.
struct Ensemble {
  std::vector<EnsembleMember> members;
  DensityMatrix realized_state;

  /// sum_i p_i |psi_i><psi_i|.
  Matrix reconstruct() const;
  /// Checks p_i >= 0, sum p_i = 1 and reconstruction within 1e-8.
  /// Throws NumericalIntegrityError.
  void validate() const;
};

/// Ensemble obtained from the eigen-ensemble of rho through a K x r
/// isometry v: member j is proportional to sum_i v(j,i) sqrt(mu_i) |e_i>.
/// Members with zero weight are dropped. Throws ArgumentError unless v has
/// r = numerical rank columns that are orthonormal within 1e-10.
Ensemble decompositions_from_isometry(const DensityMatrix& rho, const Matrix& v);

/// sum_i p_i M(psi_i) over the ensemble. Only concurrence and negativity
/// (cren is accepted as negativity) have pure-state routes here.
double ensemble_average(const Ensemble& ensemble, const Bipartition& cut, MeasureId measure);

struct RoofResult {
  double value = 0.0;  // upper bound on the true convex roof
  Ensemble best_ensemble;
  bool converged = false;
  int ensemble_size = 0;
  int sweeps = 0;                           // sweeps used by the best restart
  std::vector<double> objective_history;    // best restart, one entry per sweep
  std::vector<std::vector<double>> restart_histories;
};

/// Minimizes the ensemble average of a pure-state measure over all
/// K-member decompositions of rho. Each restart starts from an isometry
/// (restart 0: the padded eigen-ensemble; others: Haar-random) and sweeps
/// all member pairs with two-parameter unitary rotations, choosing angle
/// and relative phase by a coarse grid plus Brent line search, accepting only
/// strict decreases. The isometry is re-orthonormalized after every sweep.
///
/// Throws UnsupportedRoute for measures other than concurrence/negativity,
/// ArgumentError when cfg.ensemble_size is below the rank.
RoofResult convex_roof(const DensityMatrix& rho, const Bipartition& cut, MeasureId measure,
                       const RoofConfig& cfg = {});

/// convex_roof(concurrence) minus the Wootters value. Two-qubit input only.
double roof_certificate_gap(const DensityMatrix& rho, const Bipartition& cut,
                            const RoofConfig& cfg = {});

}  // namespace qmono
