#pragma once

#include <cstdint>

#include "qmono/state.hpp"

namespace qmono {

/// Computational basis state |index> over dims.
PureState basis_state(const Dims& dims, std::size_t index);

/// (|00> + |11>)/sqrt(2).
PureState bell_state();

/// (|0...0> + |1...1>)/sqrt(2) on n qubits, n >= 2.
PureState ghz_state(int n);

/// Equal superposition of the n weight-one basis states, n >= 2.
PureState w_state(int n);

/// Haar-random pure state: normalized i.i.d. standard complex Gaussian
/// vector. Same seed, same amplitudes.
PureState random_pure_state(const Dims& dims, std::uint64_t seed);

/// Induced-measure mixed state: partial trace over a `rank`-dimensional
/// ancilla of a Haar-random purification. 1 <= rank <= prod(dims).
DensityMatrix random_mixed_state(const Dims& dims, int rank, std::uint64_t seed);

/// Haar-random d x d unitary (QR of a Ginibre matrix with phase fix).
Matrix haar_unitary(int d, std::uint64_t seed);

/// Independent stream seed for item `index` under a base seed (splitmix64).
std::uint64_t derive_seed(std::uint64_t base, std::uint64_t index);

}  // namespace qmono
