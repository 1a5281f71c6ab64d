#pragma once

#include <vector>

#include "qmono/state.hpp"

namespace qmono {

/// Kronecker product; dims are concatenated (a's subsystems first).
PureState tensor_product(const PureState& a, const PureState& b);
DensityMatrix tensor_product(const DensityMatrix& a, const DensityMatrix& b);

/// |psi><psi|.
DensityMatrix to_density(const PureState& psi);

/// Reduced state on the subsystems in `keep` (any order; result keeps them
/// in ascending order). Throws ArgumentError on empty or invalid indices.
DensityMatrix partial_trace(const DensityMatrix& rho, std::vector<int> keep);
DensityMatrix partial_trace(const PureState& psi, std::vector<int> keep);

/// Transpose of the subsystems in `transpose_set`, all others untouched.
/// The result is Hermitian with unit trace but generally not PSD.
Matrix partial_transpose(const DensityMatrix& rho, const std::vector<int>& transpose_set);
Matrix partial_transpose(const Matrix& m, const Dims& dims, const std::vector<int>& transpose_set);

/// Sum of singular values. Uses Hermitian eigenvalues when the input is
/// Hermitian within the structural tolerance. Throws on non-square input.
double trace_norm(const Matrix& m);

/// Amplitudes arranged as a dim(A) x dim(B) matrix across `cut`, row index
/// enumerating side A big-endian, column index side B big-endian.
Matrix amplitude_matrix(const Vector& amplitudes, const Dims& dims, const Bipartition& cut);

SchmidtSpectrum schmidt_coefficients(const PureState& psi, const Bipartition& cut);

/// Applies a d x d unitary to one subsystem.
PureState apply_local_unitary(const PureState& psi, int subsystem, const Matrix& u);
DensityMatrix apply_local_unitary(const DensityMatrix& rho, int subsystem, const Matrix& u);

/// Returns the pure state spanning a rank-1 density matrix (global phase
/// fixed so the largest amplitude is real positive). Throws ArgumentError if
/// the numerical rank is not 1.
PureState purify_rank_one(const DensityMatrix& rho);

}  // namespace qmono
