#pragma once

#include <complex>
#include <cstddef>
#include <variant>
#include <vector>

#include <Eigen/Dense>

namespace qmono {

using Complex = std::complex<double>;
using Vector = Eigen::VectorXcd;
using Matrix = Eigen::MatrixXcd;
using RealVector = Eigen::VectorXd;

/// Subsystem dimensions, big-endian: subsystem 0 is the most significant
/// digit of a basis index. For dims (2,3,2) the basis index of |a b c> is
/// a*6 + b*2 + c.
using Dims = std::vector<int>;

/// Product of all subsystem dimensions.
std::size_t total_dim(const Dims& dims);

/// Unit-norm state vector over a list of subsystems.
class PureState {
 public:
  /// Throws ArgumentError if the length does not match dims or the norm is
  /// not 1 within the policy norm tolerance.
  PureState(Vector amplitudes, Dims dims);

  /// Skips the normalization check and divides by the norm instead.
  static PureState normalized(Vector amplitudes, Dims dims);

  const Vector& amplitudes() const { return amplitudes_; }
  const Dims& dims() const { return dims_; }
  std::size_t dim() const { return static_cast<std::size_t>(amplitudes_.size()); }
  int num_subsystems() const { return static_cast<int>(dims_.size()); }

 private:
  struct Unchecked {};
  PureState(Unchecked, Vector amplitudes, Dims dims);

  Vector amplitudes_;
  Dims dims_;
};

/// Hermitian, positive semidefinite, unit-trace operator.
class DensityMatrix {
 public:
  /// Validates hermiticity, trace and minimum eigenvalue against the
  /// structural tolerance; throws ArgumentError otherwise.
  DensityMatrix(Matrix matrix, Dims dims);

  const Matrix& matrix() const { return matrix_; }
  const Dims& dims() const { return dims_; }
  std::size_t dim() const { return static_cast<std::size_t>(matrix_.rows()); }
  int num_subsystems() const { return static_cast<int>(dims_.size()); }

  /// Eigenvalues in ascending order.
  RealVector eigenvalues() const;
  /// Number of eigenvalues above the policy rank tolerance.
  int numerical_rank() const;

 private:
  Matrix matrix_;
  Dims dims_;
};

using State = std::variant<PureState, DensityMatrix>;

/// Split of subsystems {0..k-1} into two nonempty complementary sides.
class Bipartition {
 public:
  Bipartition(std::vector<int> side_a, std::vector<int> side_b);
  /// side_b is the complement of side_a in {0..num_subsystems-1}.
  static Bipartition complement_of(std::vector<int> side_a, int num_subsystems);

  const std::vector<int>& side_a() const { return side_a_; }
  const std::vector<int>& side_b() const { return side_b_; }
  int num_subsystems() const { return static_cast<int>(side_a_.size() + side_b_.size()); }

  /// The cut with the two sides exchanged.
  Bipartition swapped() const;
  /// Throws ArgumentError unless the cut covers exactly dims.size() subsystems.
  void check_against(const Dims& dims) const;

  friend bool operator==(const Bipartition&, const Bipartition&) = default;

 private:
  std::vector<int> side_a_;
  std::vector<int> side_b_;
};

/// Squared Schmidt coefficients, descending, summing to 1.
struct SchmidtSpectrum {
  std::vector<double> coefficients;
};

}  // namespace qmono
