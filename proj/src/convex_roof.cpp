#include "qmono/convex_roof.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numeric>
#include <numbers>
#include <span>
#include <string>

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>
#include <boost/math/tools/minima.hpp>

#include "qmono/errors.hpp"
#include "qmono/factories.hpp"
#include "qmono/numeric_policy.hpp"
#include "qmono/parallel.hpp"
#include "qmono/tensor_ops.hpp"

namespace qmono {

void RoofConfig::validate() const {
  if (ensemble_size < 0) throw ArgumentError("ensemble_size must be positive (0 selects the default)");
  if (restarts < 1) throw ArgumentError("restarts must be >= 1");
  if (max_iterations < 1) throw ArgumentError("max_iterations must be >= 1");
  if (stall_sweeps < 1) throw ArgumentError("stall_sweeps must be >= 1");
  if (!(tolerance > 0.0)) throw ArgumentError("tolerance must be > 0");
}

Matrix Ensemble::reconstruct() const {
  const auto n = static_cast<Eigen::Index>(realized_state.dim());
  Matrix m = Matrix::Zero(n, n);
  for (const auto& member : members) {
    const Vector& v = member.state.amplitudes();
    m += member.probability * (v * v.adjoint());
  }
  return m;
}

void Ensemble::validate() const {
  double total = 0.0;
  for (const auto& member : members) {
    if (member.probability < 0.0) throw NumericalIntegrityError("ensemble has a negative weight");
    total += member.probability;
  }
  if (std::abs(total - 1.0) > numeric_policy().structural_tol) {
    throw NumericalIntegrityError("ensemble weights sum to " + std::to_string(total));
  }
  const double dev = (reconstruct() - realized_state.matrix()).cwiseAbs().maxCoeff();
  if (dev > 1e-8) {
    throw NumericalIntegrityError("ensemble does not reconstruct its state (deviation " +
                                  std::to_string(dev) + ")");
  }
}

namespace {

// Nonzero eigenpairs of rho as columns of factor = E * diag(sqrt(mu)).
Matrix eigen_factor(const DensityMatrix& rho) {
  Eigen::SelfAdjointEigenSolver<Matrix> es(rho.matrix());
  const double tol = numeric_policy().rank_tol;
  std::vector<Eigen::Index> kept;
  // Descending eigenvalue order.
  for (Eigen::Index i = es.eigenvalues().size(); i-- > 0;) {
    if (es.eigenvalues()(i) > tol) kept.push_back(i);
  }
  Matrix factor(es.eigenvectors().rows(), static_cast<Eigen::Index>(kept.size()));
  for (std::size_t c = 0; c < kept.size(); ++c) {
    factor.col(static_cast<Eigen::Index>(c)) =
        es.eigenvectors().col(kept[c]) * std::sqrt(es.eigenvalues()(kept[c]));
  }
  return factor;
}

Ensemble ensemble_from_members(const DensityMatrix& rho, const Matrix& members) {
  Ensemble ens{{}, rho};
  for (Eigen::Index j = 0; j < members.cols(); ++j) {
    const double p = members.col(j).squaredNorm();
    if (p <= 0.0) continue;
    ens.members.push_back({p, PureState::normalized(members.col(j), rho.dims())});
  }
  return ens;
}

// Evaluates a homogeneous pure-state objective g(w) = |w|^2 M(w/|w|) on an
// unnormalized vector, without allocating in the common qubit-sided case.
class MemberObjective {
 public:
  MemberObjective(const Dims& dims, const Bipartition& cut, MeasureId measure)
      : measure_(measure), dims_(dims), cut_(cut) {
    const Matrix index_map = amplitude_matrix(
        Eigen::VectorXd::LinSpaced(static_cast<Eigen::Index>(total_dim(dims)), 0.0,
                                   static_cast<double>(total_dim(dims) - 1))
            .cast<Complex>(),
        dims, cut);
    rows_ = index_map.rows();
    cols_ = index_map.cols();
    index_.resize(static_cast<std::size_t>(rows_ * cols_));
    for (Eigen::Index r = 0; r < rows_; ++r) {
      for (Eigen::Index c = 0; c < cols_; ++c) {
        index_[static_cast<std::size_t>(r * cols_ + c)] =
            static_cast<Eigen::Index>(std::lround(index_map(r, c).real()));
      }
    }
    // Cauchy-Binet: the second elementary symmetric function of the Schmidt
    // spectrum is the sum of squared 2x2 minors. Enumerate them when one
    // side is a qubit; the count stays small.
    if (measure_ == MeasureId::concurrence && std::min(rows_, cols_) == 2) {
      for (Eigen::Index i = 0; i < rows_; ++i)
        for (Eigen::Index j = i + 1; j < rows_; ++j)
          for (Eigen::Index k = 0; k < cols_; ++k)
            for (Eigen::Index l = k + 1; l < cols_; ++l)
              minors_.push_back({at(i, k), at(j, l), at(i, l), at(j, k)});
    }
  }

  double operator()(const Vector& w) const {
    if (!minors_.empty()) {
      double e2 = 0.0;
      for (const auto& m : minors_) e2 += std::norm(w(m[0]) * w(m[1]) - w(m[2]) * w(m[3]));
      return 2.0 * std::sqrt(e2);
    }
    if (measure_ == MeasureId::negativity && std::min(rows_, cols_) == 2) return qubit_negativity(w);
    Matrix mat(rows_, cols_);
    for (Eigen::Index r = 0; r < rows_; ++r)
      for (Eigen::Index c = 0; c < cols_; ++c) mat(r, c) = w(at(r, c));
    Eigen::JacobiSVD<Matrix> svd(mat);
    const RealVector s = svd.singularValues();
    double acc = 0.0;
    if (measure_ == MeasureId::concurrence) {
      // |w|^4 (1 - sum l^2) = 2 sum_{i<j} s_i^2 s_j^2
      for (Eigen::Index i = 0; i < s.size(); ++i)
        for (Eigen::Index j = i + 1; j < s.size(); ++j) acc += s(i) * s(i) * s(j) * s(j);
      return 2.0 * std::sqrt(acc);
    }
    // negativity of a pure state: (sum s)^2 - sum s^2
    for (Eigen::Index i = 0; i < s.size(); ++i)
      for (Eigen::Index j = i + 1; j < s.size(); ++j) acc += s(i) * s(j);
    return 2.0 * acc;
  }

 private:
  // Singular values of a 2 x n (or n x 2) amplitude matrix from its 2 x 2
  // Gram matrix, then (s1 + s2)^2 - s1^2 - s2^2.
  double qubit_negativity(const Vector& w) const {
    double g00 = 0.0;
    double g11 = 0.0;
    Complex g01 = 0.0;
    const Eigen::Index n = std::max(rows_, cols_);
    for (Eigen::Index i = 0; i < n; ++i) {
      const Complex x = rows_ == 2 ? w(at(0, i)) : w(at(i, 0));
      const Complex y = rows_ == 2 ? w(at(1, i)) : w(at(i, 1));
      g00 += std::norm(x);
      g11 += std::norm(y);
      g01 += x * std::conj(y);
    }
    const double disc = std::sqrt((g00 - g11) * (g00 - g11) + 4.0 * std::norm(g01));
    const double big = 0.5 * (g00 + g11 + disc);
    if (!(big > 0.0)) return 0.0;
    const double small = std::max(0.0, g00 * g11 - std::norm(g01)) / big;
    const double s1 = std::sqrt(big);
    const double s2 = std::sqrt(small);
    return (s1 + s2) * (s1 + s2) - big - small;
  }

  Eigen::Index at(Eigen::Index r, Eigen::Index c) const {
    return index_[static_cast<std::size_t>(r * cols_ + c)];
  }

  MeasureId measure_;
  Dims dims_;
  Bipartition cut_;
  Eigen::Index rows_ = 0;
  Eigen::Index cols_ = 0;
  std::vector<Eigen::Index> index_;
  std::vector<std::array<Eigen::Index, 4>> minors_;
};

MeasureId objective_measure(MeasureId measure) {
  switch (measure) {
    case MeasureId::concurrence: return MeasureId::concurrence;
    case MeasureId::negativity:
    case MeasureId::cren: return MeasureId::negativity;
    case MeasureId::eof: break;
  }
  throw UnsupportedRoute("convex roof: unsupported measure '" + std::string(to_string(measure)) +
                         "' (only concurrence and negativity)");
}

// Closest isometry in Frobenius norm: V (V^dagger V)^{-1/2}.
Matrix lowdin(const Matrix& v) {
  Eigen::SelfAdjointEigenSolver<Matrix> es(v.adjoint() * v);
  const RealVector inv_sqrt = es.eigenvalues().cwiseSqrt().cwiseInverse();
  return v * (es.eigenvectors() * inv_sqrt.asDiagonal() * es.eigenvectors().adjoint());
}

struct RestartOutcome {
  double value = std::numeric_limits<double>::infinity();
  Matrix isometry;
  bool stalled = false;
  int sweeps = 0;
  std::vector<double> history;
};

// Bracketed line search: golden-section steps accelerated by parabolic
// interpolation (Brent). Returns (argmin, min).
template <typename F>
std::pair<double, double> line_search(F&& f, double lo, double hi) {
  constexpr int bits = 26;
  return boost::math::tools::brent_find_minima(f, lo, hi, bits);
}

class RoofSearch {
 public:
  RoofSearch(const Matrix& factor, const MemberObjective& objective, const RoofConfig& cfg)
      : factor_(factor), objective_(objective), cfg_(cfg) {}

  RestartOutcome run(Matrix v) const {
    const Eigen::Index k = v.rows();
    RestartOutcome out;
    Matrix members = factor_ * v.transpose();  // column j = member j
    std::vector<double> g(static_cast<std::size_t>(k));
    auto refresh = [&] {
      members = factor_ * v.transpose();
      for (Eigen::Index j = 0; j < k; ++j) g[static_cast<std::size_t>(j)] = objective_(members.col(j));
      return std::accumulate(g.begin(), g.end(), 0.0);
    };
    double current = refresh();
    out.history.push_back(current);

    Vector wa(members.rows());
    Vector wb(members.rows());
    int stall = 0;
    for (int sweep = 0; sweep < cfg_.max_iterations; ++sweep) {
      for (Eigen::Index a = 0; a < k; ++a) {
        for (Eigen::Index b = a + 1; b < k; ++b) {
          optimize_pair(v, members, g, a, b, wa, wb);
        }
      }
      v = lowdin(v);
      const double next = refresh();
      out.history.push_back(next);
      out.sweeps = sweep + 1;
      const double decrease = current - next;
      current = next;
      if (decrease < cfg_.tolerance * std::max(std::abs(current), kRelativeFloor)) {
        if (++stall >= cfg_.stall_sweeps) {
          out.stalled = true;
          break;
        }
      } else {
        stall = 0;
      }
    }
    out.value = current;
    out.isometry = std::move(v);
    return out;
  }

  // Below this objective level the stopping rule compares absolute decreases.
  static constexpr double kRelativeFloor = 1e-3;

 private:
  // Rotation acting on members a, b:
  //   w_a' = cos(t) w_a - e^{-i p} sin(t) w_b
  //   w_b' = e^{i p} sin(t) w_a + cos(t) w_b
  double pair_value(const Matrix& members, Eigen::Index a, Eigen::Index b, double theta, double phi,
                    Vector& wa, Vector& wb) const {
    const double c = std::cos(theta);
    const double s = std::sin(theta);
    const Complex e = std::polar(1.0, phi);
    wa = c * members.col(a) - std::conj(e) * s * members.col(b);
    wb = e * s * members.col(a) + c * members.col(b);
    return objective_(wa) + objective_(wb);
  }

  void optimize_pair(Matrix& v, Matrix& members, std::vector<double>& g, Eigen::Index a,
                     Eigen::Index b, Vector& wa, Vector& wb) const {
    using std::numbers::pi;
    const double base = g[static_cast<std::size_t>(a)] + g[static_cast<std::size_t>(b)];
    auto eval = [&](double t, double p) { return pair_value(members, a, b, t, p, wa, wb); };

    constexpr std::array<double, 4> all_phis{0.0, pi / 4, pi / 2, 3 * pi / 4};
    const std::span<const double> phis(all_phis.data(), cfg_.phase_search ? all_phis.size() : 1);
    constexpr double step = pi / 12;
    double best_t = 0.0;
    double best_p = 0.0;
    double best = base;
    for (double p : phis) {
      for (int i = -5; i <= 6; ++i) {
        if (i == 0) continue;
        const double val = eval(i * step, p);
        if (val < best) {
          best = val;
          best_t = i * step;
          best_p = p;
        }
      }
    }
    if (best_t == 0.0) {
      // No coarse improvement: look for a descent direction at small angles
      // before paying for a line search.
      for (double delta : {1e-3, 1e-6}) {
        for (double p : phis) {
          for (double t : {-delta, delta}) {
            const double val = eval(t, p);
            if (val < best) {
              best = val;
              best_t = t;
              best_p = p;
            }
          }
        }
        if (best_t != 0.0) break;
      }
      if (best_t == 0.0) return;
    }
    for (int round = 0; round < 2; ++round) {
      const auto [t, vt] =
          line_search([&](double x) { return eval(x, best_p); }, best_t - step, best_t + step);
      if (vt < best) {
        best = vt;
        best_t = t;
      }
      if (!cfg_.phase_search) continue;
      const auto [p, vp] = line_search([&](double x) { return eval(best_t, x); }, best_p - pi / 8,
                                        best_p + pi / 8);
      if (vp < best) {
        best = vp;
        best_p = p;
      }
    }
    if (!(best < base)) return;

    const double c = std::cos(best_t);
    const double s = std::sin(best_t);
    const Complex e = std::polar(1.0, best_p);
    const Eigen::RowVectorXcd va = v.row(a);
    const Eigen::RowVectorXcd vb = v.row(b);
    v.row(a) = c * va - std::conj(e) * s * vb;
    v.row(b) = e * s * va + c * vb;
    const Vector ma = members.col(a);
    const Vector mb = members.col(b);
    members.col(a) = c * ma - std::conj(e) * s * mb;
    members.col(b) = e * s * ma + c * mb;
    g[static_cast<std::size_t>(a)] = objective_(members.col(a));
    g[static_cast<std::size_t>(b)] = objective_(members.col(b));
  }

  const Matrix& factor_;
  const MemberObjective& objective_;
  const RoofConfig& cfg_;
};

}  // namespace

Ensemble decompositions_from_isometry(const DensityMatrix& rho, const Matrix& v) {
  const Matrix factor = eigen_factor(rho);
  if (v.cols() != factor.cols()) {
    throw ArgumentError("isometry has " + std::to_string(v.cols()) + " columns but the state has rank " +
                        std::to_string(factor.cols()));
  }
  if (v.rows() < v.cols()) throw ArgumentError("isometry needs at least as many rows as columns");
  const double dev = (v.adjoint() * v - Matrix::Identity(v.cols(), v.cols())).cwiseAbs().maxCoeff();
  if (dev > numeric_policy().structural_tol) {
    throw ArgumentError("matrix is not an isometry (deviation " + std::to_string(dev) + ")");
  }
  return ensemble_from_members(rho, factor * v.transpose());
}

double ensemble_average(const Ensemble& ensemble, const Bipartition& cut, MeasureId measure) {
  const MeasureId objective = objective_measure(measure);
  double total = 0.0;
  for (const auto& m : ensemble.members) {
    const double value = objective == MeasureId::concurrence ? concurrence_pure(m.state, cut).value
                                                             : negativity(m.state, cut).value;
    total += m.probability * value;
  }
  return total;
}

RoofResult convex_roof(const DensityMatrix& rho, const Bipartition& cut, MeasureId measure,
                       const RoofConfig& cfg) {
  cfg.validate();
  cut.check_against(rho.dims());
  const MeasureId objective_id = objective_measure(measure);
  const Matrix factor = eigen_factor(rho);
  const auto rank = static_cast<int>(factor.cols());
  if (rank == 0) throw NumericalIntegrityError("convex roof: state has no eigenvalue above the rank tolerance");
  const int k = cfg.ensemble_size == 0 ? std::min(2 * rank, rank + 2) : cfg.ensemble_size;
  if (k < rank) {
    throw ArgumentError("ensemble_size " + std::to_string(k) + " is below the state rank " +
                        std::to_string(rank));
  }

  RoofResult result{0.0, ensemble_from_members(rho, factor), true, k, 0, {}, {}};
  if (rank == 1) {
    result.value = ensemble_average(result.best_ensemble, cut, objective_id);
    result.objective_history = {result.value};
    result.restart_histories = {result.objective_history};
    return result;
  }

  const MemberObjective objective(rho.dims(), cut, objective_id);
  const RoofSearch search(factor, objective, cfg);
  std::vector<RestartOutcome> outcomes(static_cast<std::size_t>(cfg.restarts));
  parallel_for(outcomes.size(), [&](std::size_t r) {
    Matrix start;
    if (r == 0) {
      start = Matrix::Identity(k, rank);
    } else {
      start = haar_unitary(k, derive_seed(cfg.seed, r)).leftCols(rank);
      if (!cfg.phase_search) start = lowdin(Matrix(start.real().cast<Complex>()));
    }
    outcomes[r] = search.run(std::move(start));
  });

  std::size_t best = 0;
  for (std::size_t r = 1; r < outcomes.size(); ++r) {
    if (outcomes[r].value < outcomes[best].value) best = r;
  }
  auto& winner = outcomes[best];
  result.best_ensemble = ensemble_from_members(rho, factor * winner.isometry.transpose());
  result.value = clamp_nonnegative(ensemble_average(result.best_ensemble, cut, objective_id), "convex roof");
  result.converged = winner.stalled;
  result.sweeps = winner.sweeps;
  result.objective_history = winner.history;
  for (auto& o : outcomes) result.restart_histories.push_back(std::move(o.history));
  return result;
}

double roof_certificate_gap(const DensityMatrix& rho, const Bipartition& cut, const RoofConfig& cfg) {
  const double analytic = concurrence_two_qubit(rho).value;
  const double roof = convex_roof(rho, cut, MeasureId::concurrence, cfg).value;
  return roof - analytic;
}

}  // namespace qmono
