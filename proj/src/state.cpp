#include "qmono/state.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include <Eigen/Eigenvalues>

#include "qmono/errors.hpp"
#include "qmono/numeric_policy.hpp"

namespace qmono {

std::size_t total_dim(const Dims& dims) {
  std::size_t n = 1;
  for (int d : dims) {
    if (d <= 0) throw ArgumentError("subsystem dimension must be positive");
    n *= static_cast<std::size_t>(d);
  }
  return n;
}

PureState::PureState(Unchecked, Vector amplitudes, Dims dims)
    : amplitudes_(std::move(amplitudes)), dims_(std::move(dims)) {
  if (dims_.empty()) throw ArgumentError("state needs at least one subsystem");
  if (static_cast<std::size_t>(amplitudes_.size()) != total_dim(dims_)) {
    throw ArgumentError("amplitude count " + std::to_string(amplitudes_.size()) +
                        " does not match product of dims " + std::to_string(total_dim(dims_)));
  }
}

PureState::PureState(Vector amplitudes, Dims dims)
    : PureState(Unchecked{}, std::move(amplitudes), std::move(dims)) {
  const double norm = amplitudes_.norm();
  if (std::abs(norm - 1.0) > numeric_policy().norm_tol) {
    throw ArgumentError("pure state is not normalized (norm " + std::to_string(norm) + ")");
  }
}

PureState PureState::normalized(Vector amplitudes, Dims dims) {
  const double norm = amplitudes.norm();
  if (!(norm > 0.0)) throw ArgumentError("cannot normalize a zero vector");
  amplitudes /= norm;
  return PureState(Unchecked{}, std::move(amplitudes), std::move(dims));
}

DensityMatrix::DensityMatrix(Matrix matrix, Dims dims)
    : matrix_(std::move(matrix)), dims_(std::move(dims)) {
  const auto& pol = numeric_policy();
  if (dims_.empty()) throw ArgumentError("state needs at least one subsystem");
  const auto n = static_cast<Eigen::Index>(total_dim(dims_));
  if (matrix_.rows() != n || matrix_.cols() != n) {
    throw ArgumentError("density matrix size does not match product of dims");
  }
  const double herm_dev = (matrix_ - matrix_.adjoint()).cwiseAbs().maxCoeff();
  if (herm_dev > pol.structural_tol) {
    throw ArgumentError("density matrix is not Hermitian (deviation " + std::to_string(herm_dev) + ")");
  }
  const Complex tr = matrix_.trace();
  if (std::abs(tr - 1.0) > pol.structural_tol) {
    throw ArgumentError("density matrix trace is " + std::to_string(tr.real()) + ", expected 1");
  }
  const double min_eig = eigenvalues().minCoeff();
  if (min_eig < -pol.structural_tol) {
    throw ArgumentError("density matrix has negative eigenvalue " + std::to_string(min_eig));
  }
}

RealVector DensityMatrix::eigenvalues() const {
  Eigen::SelfAdjointEigenSolver<Matrix> es(matrix_, Eigen::EigenvaluesOnly);
  return es.eigenvalues();
}

int DensityMatrix::numerical_rank() const {
  const RealVector ev = eigenvalues();
  const double tol = numeric_policy().rank_tol;
  return static_cast<int>(std::count_if(ev.begin(), ev.end(), [tol](double x) { return x > tol; }));
}

namespace {
void check_sides(const std::vector<int>& a, const std::vector<int>& b) {
  if (a.empty() || b.empty()) throw ArgumentError("both sides of a bipartition must be nonempty");
  std::vector<int> all(a);
  all.insert(all.end(), b.begin(), b.end());
  std::sort(all.begin(), all.end());
  for (std::size_t i = 0; i < all.size(); ++i) {
    if (all[i] != static_cast<int>(i)) {
      throw ArgumentError("bipartition sides must be disjoint and cover 0..k-1");
    }
  }
}
}  // namespace

Bipartition Bipartition::complement_of(std::vector<int> side_a, int num_subsystems) {
  std::sort(side_a.begin(), side_a.end());
  std::vector<int> side_b;
  for (int i = 0; i < num_subsystems; ++i) {
    if (!std::binary_search(side_a.begin(), side_a.end(), i)) side_b.push_back(i);
  }
  return Bipartition(std::move(side_a), std::move(side_b));
}

Bipartition::Bipartition(std::vector<int> side_a, std::vector<int> side_b)
    : side_a_(std::move(side_a)), side_b_(std::move(side_b)) {
  std::sort(side_a_.begin(), side_a_.end());
  std::sort(side_b_.begin(), side_b_.end());
  check_sides(side_a_, side_b_);
}

Bipartition Bipartition::swapped() const { return Bipartition(side_b_, side_a_); }

void Bipartition::check_against(const Dims& dims) const {
  if (num_subsystems() != static_cast<int>(dims.size())) {
    throw ArgumentError("bipartition covers " + std::to_string(num_subsystems()) +
                        " subsystems but state has " + std::to_string(dims.size()));
  }
}

}  // namespace qmono
