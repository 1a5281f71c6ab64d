#pragma once

#include <string>
#include <string_view>

#include "qmono/roof_config.hpp"
#include "qmono/state.hpp"

namespace qmono {

enum class MeasureId { concurrence, negativity, cren, eof };

std::string_view to_string(MeasureId id);
/// Accepts "concurrence", "negativity", "cren", "eof". Throws ParseError.
MeasureId parse_measure_id(std::string_view name);

/// A measure evaluation. `exact` is false for optimizer-derived upper bounds.
struct MeasureValue {
  double value = 0.0;
  MeasureId id = MeasureId::negativity;
  bool exact = true;

  /// The (||rho^T_A|| - 1)/2 normalization of negativity. Only meaningful
  /// for negativity and cren values.
  double halved() const { return value / 2.0; }
};

/// Returns v, or 0 when v lies in [-clamp_tol, 0). Throws
/// NumericalIntegrityError when v is more negative than that.
double clamp_nonnegative(double v, std::string_view what);

/// ||rho^{T_A}|| - 1, partial transpose taken over cut.side_a().
MeasureValue negativity(const DensityMatrix& rho, const Bipartition& cut);
MeasureValue negativity(const PureState& psi, const Bipartition& cut);

/// sqrt(2(1 - Tr rho_A^2)) from the Schmidt spectrum.
MeasureValue concurrence_pure(const PureState& psi, const Bipartition& cut);

/// (Y x Y) rho* (Y x Y) for a two-qubit state.
Matrix spin_flip(const DensityMatrix& rho);

/// Wootters concurrence max(0, mu1 - mu2 - mu3 - mu4) of a two-qubit state.
MeasureValue concurrence_two_qubit(const DensityMatrix& rho);

/// -x log2 x - (1-x) log2(1-x); 0 at both endpoints.
double binary_entropy(double x);

/// h((1 + sqrt(1 - c^2)) / 2).
double eof_from_concurrence(double c);

MeasureValue eof_two_qubit(const DensityMatrix& rho);

/// Base-2 entropy of entanglement.
MeasureValue eof_pure(const PureState& psi, const Bipartition& cut);

/// Convex-roof extended negativity. Pure input reduces to negativity; a
/// two-qubit mixed state uses the Wootters concurrence; a qubit-vs-rest
/// mixed cut goes through the convex-roof optimizer (inexact upper bound).
/// Anything else throws UnsupportedRoute.
MeasureValue cren(const PureState& psi, const Bipartition& cut);
MeasureValue cren(const DensityMatrix& rho, const Bipartition& cut, const RoofConfig& cfg = {});

/// Evaluates `id` on any state through the routes above. Mixed-state
/// concurrence off the two-qubit case falls back to the optimizer bound;
/// mixed-state eof off the two-qubit case is unsupported.
MeasureValue evaluate(const State& state, MeasureId id, const Bipartition& cut,
                      const RoofConfig& cfg = {});

}  // namespace qmono
