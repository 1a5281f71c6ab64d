#include "qmono/measures.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

#include "qmono/convex_roof.hpp"
#include "qmono/errors.hpp"
#include "qmono/numeric_policy.hpp"
#include "qmono/tensor_ops.hpp"

namespace qmono {

namespace {

bool is_two_qubit(const Dims& dims) { return dims.size() == 2 && dims[0] == 2 && dims[1] == 2; }

void require_two_qubit(const DensityMatrix& rho, const char* what) {
  if (!is_two_qubit(rho.dims())) {
    throw ArgumentError(std::string(what) + ": expected a two-qubit state with dims (2,2)");
  }
}

// sigma_y (x) sigma_y in the computational basis |00>,|01>,|10>,|11>.
Matrix yy() {
  Matrix s = Matrix::Zero(4, 4);
  s(0, 3) = -1.0;
  s(1, 2) = 1.0;
  s(2, 1) = 1.0;
  s(3, 0) = -1.0;
  return s;
}

int side_dim(const Dims& dims, const std::vector<int>& side) {
  int d = 1;
  for (int s : side) d *= dims[s];
  return d;
}

bool qubit_vs_rest(const Dims& dims, const Bipartition& cut) {
  return side_dim(dims, cut.side_a()) == 2 || side_dim(dims, cut.side_b()) == 2;
}

MeasureValue make(double v, MeasureId id, bool exact, std::string_view what) {
  return MeasureValue{clamp_nonnegative(v, what), id, exact};
}

}  // namespace

std::string_view to_string(MeasureId id) {
  switch (id) {
    case MeasureId::concurrence: return "concurrence";
    case MeasureId::negativity: return "negativity";
    case MeasureId::cren: return "cren";
    case MeasureId::eof: return "eof";
  }
  return "unknown";
}

MeasureId parse_measure_id(std::string_view name) {
  if (name == "concurrence") return MeasureId::concurrence;
  if (name == "negativity") return MeasureId::negativity;
  if (name == "cren") return MeasureId::cren;
  if (name == "eof") return MeasureId::eof;
  throw ParseError("unknown measure '" + std::string(name) + "' (expected concurrence, negativity, cren or eof)");
}

double clamp_nonnegative(double v, std::string_view what) {
  if (v >= 0.0) return v;
  if (v >= -numeric_policy().clamp_tol) return 0.0;
  throw NumericalIntegrityError(std::string(what) + " came out negative: " + std::to_string(v));
}

MeasureValue negativity(const DensityMatrix& rho, const Bipartition& cut) {
  cut.check_against(rho.dims());
  const double norm = trace_norm(partial_transpose(rho, cut.side_a()));
  return make(norm - 1.0, MeasureId::negativity, true, "negativity");
}

MeasureValue negativity(const PureState& psi, const Bipartition& cut) {
  return negativity(to_density(psi), cut);
}

MeasureValue concurrence_pure(const PureState& psi, const Bipartition& cut) {
  const auto spec = schmidt_coefficients(psi, cut);
  // 1 - sum l_i^2 = 2 sum_{i<j} l_i l_j for a normalized spectrum; the pair
  // sum has no cancellation near product states.
  const auto& l = spec.coefficients;
  double pairs = 0.0;
  for (std::size_t i = 0; i < l.size(); ++i) {
    for (std::size_t j = i + 1; j < l.size(); ++j) pairs += l[i] * l[j];
  }
  const double total = std::accumulate(l.begin(), l.end(), 0.0);
  pairs /= total * total;
  return make(std::sqrt(4.0 * pairs), MeasureId::concurrence, true, "concurrence");
}

Matrix spin_flip(const DensityMatrix& rho) {
  require_two_qubit(rho, "spin_flip");
  const Matrix s = yy();
  return s * rho.matrix().conjugate() * s;
}

MeasureValue concurrence_two_qubit(const DensityMatrix& rho) {
  require_two_qubit(rho, "concurrence_two_qubit");
  // With rho = X X^dagger, the square roots of the eigenvalues of rho*rho~
  // are the singular values of tau = X^T (Y x Y) X. Building X from the
  // eigendecomposition and dropping roundoff-level eigenvalues keeps
  // rank-deficient inputs accurate; the sqrt of a 1e-17 eigenvalue would
  // otherwise leak ~1e-9 into the result.
  Eigen::SelfAdjointEigenSolver<Matrix> es(rho.matrix());
  const double drop = numeric_policy().factor_drop_tol;
  std::vector<Eigen::Index> kept;
  for (Eigen::Index i = 0; i < 4; ++i) {
    if (es.eigenvalues()(i) > drop) kept.push_back(i);
  }
  Matrix x(4, static_cast<Eigen::Index>(kept.size()));
  for (std::size_t c = 0; c < kept.size(); ++c) {
    x.col(static_cast<Eigen::Index>(c)) =
        es.eigenvectors().col(kept[c]) * std::sqrt(es.eigenvalues()(kept[c]));
  }
  const Matrix tau = x.transpose() * yy() * x;
  Eigen::JacobiSVD<Matrix> svd(tau);
  const RealVector mu = svd.singularValues();  // descending
  double c = mu.size() > 0 ? mu(0) : 0.0;
  for (Eigen::Index i = 1; i < mu.size(); ++i) c -= mu(i);
  return MeasureValue{std::max(0.0, c), MeasureId::concurrence, true};
}

double binary_entropy(double x) {
  constexpr double slack = 1e-12;
  if (x < -slack || x > 1.0 + slack) {
    throw ArgumentError("binary_entropy: argument " + std::to_string(x) + " outside [0,1]");
  }
  x = std::clamp(x, 0.0, 1.0);
  auto term = [](double p) { return p > 0.0 ? -p * std::log2(p) : 0.0; };
  return term(x) + term(1.0 - x);
}

double eof_from_concurrence(double c) {
  c = std::clamp(c, 0.0, 1.0);
  return binary_entropy((1.0 + std::sqrt(1.0 - c * c)) / 2.0);
}

MeasureValue eof_two_qubit(const DensityMatrix& rho) {
  const double c = concurrence_two_qubit(rho).value;
  return MeasureValue{eof_from_concurrence(c), MeasureId::eof, true};
}

MeasureValue eof_pure(const PureState& psi, const Bipartition& cut) {
  const auto spec = schmidt_coefficients(psi, cut);
  double e = 0.0;
  for (double l : spec.coefficients) {
    if (l > 0.0) e -= l * std::log2(l);
  }
  const int min_side = std::min(side_dim(psi.dims(), cut.side_a()), side_dim(psi.dims(), cut.side_b()));
  const double bound = std::log2(static_cast<double>(min_side));
  if (e > bound + numeric_policy().clamp_tol) {
    throw NumericalIntegrityError("eof exceeds log2 of the smaller side dimension");
  }
  return make(std::min(e, bound), MeasureId::eof, true, "eof");
}

MeasureValue cren(const PureState& psi, const Bipartition& cut) {
  auto v = negativity(psi, cut);
  v.id = MeasureId::cren;
  return v;
}

MeasureValue cren(const DensityMatrix& rho, const Bipartition& cut, const RoofConfig& cfg) {
  cut.check_against(rho.dims());
  if (rho.numerical_rank() == 1) return cren(purify_rank_one(rho), cut);
  if (is_two_qubit(rho.dims())) {
    auto v = concurrence_two_qubit(rho);
    v.id = MeasureId::cren;
    return v;
  }
  if (qubit_vs_rest(rho.dims(), cut)) {
    // On a qubit-vs-rest cut every pure member has negativity equal to its
    // concurrence, so the roof of either objective is the same quantity.
    const auto result = convex_roof(rho, cut, MeasureId::concurrence, cfg);
    return MeasureValue{result.value, MeasureId::cren, false};
  }
  throw UnsupportedRoute("unsupported: no exact route for cren on a mixed state across this cut");
}

MeasureValue evaluate(const State& state, MeasureId id, const Bipartition& cut, const RoofConfig& cfg) {
  if (const auto* psi = std::get_if<PureState>(&state)) {
    cut.check_against(psi->dims());
    switch (id) {
      case MeasureId::concurrence: return concurrence_pure(*psi, cut);
      case MeasureId::negativity: return negativity(*psi, cut);
      case MeasureId::cren: return cren(*psi, cut);
      case MeasureId::eof: return eof_pure(*psi, cut);
    }
  }
  const auto& rho = std::get<DensityMatrix>(state);
  cut.check_against(rho.dims());
  switch (id) {
    case MeasureId::negativity: return negativity(rho, cut);
    case MeasureId::cren: return cren(rho, cut, cfg);
    case MeasureId::concurrence:
      if (rho.numerical_rank() == 1) return concurrence_pure(purify_rank_one(rho), cut);
      if (is_two_qubit(rho.dims())) return concurrence_two_qubit(rho);
      {
        const auto result = convex_roof(rho, cut, MeasureId::concurrence, cfg);
        return MeasureValue{result.value, MeasureId::concurrence, false};
      }
    case MeasureId::eof:
      if (rho.numerical_rank() == 1) return eof_pure(purify_rank_one(rho), cut);
      if (is_two_qubit(rho.dims())) return eof_two_qubit(rho);
      throw UnsupportedRoute("unsupported: eof of a mixed state is only available for two qubits");
  }
  throw UnsupportedRoute("unsupported measure");
}

}  // namespace qmono
