#include "qmono/factories.hpp"

#include <cmath>
#include <random>
#include <string>

#include <Eigen/QR>

#include "qmono/errors.hpp"

namespace qmono {

namespace {

Matrix ginibre(Eigen::Index rows, Eigen::Index cols, std::uint64_t seed) {
  std::mt19937_64 gen(seed);
  std::normal_distribution<double> normal(0.0, 1.0);
  Matrix g(rows, cols);
  // Column-major fill order is part of the reproducibility contract.
  for (Eigen::Index c = 0; c < cols; ++c) {
    for (Eigen::Index r = 0; r < rows; ++r) {
      const double re = normal(gen);
      const double im = normal(gen);
      g(r, c) = Complex(re, im);
    }
  }
  return g;
}

void require_qubits(int n, const char* what) {
  if (n < 2) throw ArgumentError(std::string(what) + ": need at least 2 qubits, got " + std::to_string(n));
  if (n > 24) throw ArgumentError(std::string(what) + ": too many qubits");
}

}  // namespace

std::uint64_t derive_seed(std::uint64_t base, std::uint64_t index) {
  std::uint64_t z = base + 0x9E3779B97F4A7C15ULL * (index + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

PureState basis_state(const Dims& dims, std::size_t index) {
  const std::size_t n = total_dim(dims);
  if (index >= n) throw ArgumentError("basis_state: index out of range");
  Vector v = Vector::Zero(static_cast<Eigen::Index>(n));
  v(static_cast<Eigen::Index>(index)) = 1.0;
  return PureState(std::move(v), dims);
}

PureState bell_state() { return ghz_state(2); }

PureState ghz_state(int n) {
  require_qubits(n, "ghz_state");
  const Eigen::Index dim = Eigen::Index{1} << n;
  Vector v = Vector::Zero(dim);
  v(0) = v(dim - 1) = 1.0 / std::sqrt(2.0);
  return PureState::normalized(std::move(v), Dims(static_cast<std::size_t>(n), 2));
}

PureState w_state(int n) {
  require_qubits(n, "w_state");
  const Eigen::Index dim = Eigen::Index{1} << n;
  Vector v = Vector::Zero(dim);
  const double amp = 1.0 / std::sqrt(static_cast<double>(n));
  for (int q = 0; q < n; ++q) v(Eigen::Index{1} << q) = amp;
  return PureState::normalized(std::move(v), Dims(static_cast<std::size_t>(n), 2));
}

PureState random_pure_state(const Dims& dims, std::uint64_t seed) {
  const auto n = static_cast<Eigen::Index>(total_dim(dims));
  Vector v = ginibre(n, 1, seed).col(0);
  return PureState::normalized(std::move(v), dims);
}

DensityMatrix random_mixed_state(const Dims& dims, int rank, std::uint64_t seed) {
  const auto n = static_cast<Eigen::Index>(total_dim(dims));
  if (rank < 1 || rank > n) {
    throw ArgumentError("random_mixed_state: rank " + std::to_string(rank) + " outside [1, " +
                        std::to_string(n) + "]");
  }
  // Columns of g are the ancilla branches of the purification.
  const Matrix g = ginibre(n, rank, seed);
  Matrix rho = g * g.adjoint();
  rho /= rho.trace().real();
  rho = 0.5 * (rho + rho.adjoint()).eval();
  return DensityMatrix(std::move(rho), dims);
}

Matrix haar_unitary(int d, std::uint64_t seed) {
  if (d < 1) throw ArgumentError("haar_unitary: dimension must be positive");
  const Matrix g = ginibre(d, d, seed);
  Eigen::HouseholderQR<Matrix> qr(g);
  Matrix q = qr.householderQ() * Matrix::Identity(d, d);
  const Matrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (int j = 0; j < d; ++j) {
    const Complex diag = r(j, j);
    const double mag = std::abs(diag);
    if (mag > 0.0) q.col(j) *= diag / mag;
  }
  return q;
}

}  // namespace qmono
