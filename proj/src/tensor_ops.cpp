#include "qmono/tensor_ops.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>
#include <unsupported/Eigen/KroneckerProduct>

#include "qmono/errors.hpp"
#include "qmono/numeric_policy.hpp"

namespace qmono {

namespace {

// Digit table: digits[I * k + s] is the value of subsystem s in basis index I.
std::vector<int> digit_table(const Dims& dims) {
  const std::size_t n = total_dim(dims);
  const std::size_t k = dims.size();
  std::vector<int> digits(n * k);
  for (std::size_t idx = 0; idx < n; ++idx) {
    std::size_t rem = idx;
    for (std::size_t s = k; s-- > 0;) {
      digits[idx * k + s] = static_cast<int>(rem % static_cast<std::size_t>(dims[s]));
      rem /= static_cast<std::size_t>(dims[s]);
    }
  }
  return digits;
}

std::vector<std::size_t> strides(const Dims& dims) {
  std::vector<std::size_t> st(dims.size());
  std::size_t acc = 1;
  for (std::size_t s = dims.size(); s-- > 0;) {
    st[s] = acc;
    acc *= static_cast<std::size_t>(dims[s]);
  }
  return st;
}

void check_indices(const std::vector<int>& idx, const Dims& dims, const char* what) {
  for (int s : idx) {
    if (s < 0 || s >= static_cast<int>(dims.size())) {
      throw ArgumentError(std::string(what) + ": subsystem index " + std::to_string(s) +
                          " out of range for " + std::to_string(dims.size()) + " subsystems");
    }
  }
  std::vector<int> sorted(idx);
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw ArgumentError(std::string(what) + ": repeated subsystem index");
  }
}

// Composite big-endian index of the listed subsystems of basis index I.
std::size_t sub_index(const std::vector<int>& digits, std::size_t k, std::size_t idx,
                      const std::vector<int>& subs, const Dims& dims) {
  std::size_t out = 0;
  for (int s : subs) out = out * static_cast<std::size_t>(dims[s]) + digits[idx * k + s];
  return out;
}

Matrix embed_local(const Dims& dims, int subsystem, const Matrix& u) {
  Matrix full = Matrix::Identity(1, 1);
  for (int s = 0; s < static_cast<int>(dims.size()); ++s) {
    const Matrix factor = (s == subsystem) ? u : Matrix::Identity(dims[s], dims[s]);
    full = Eigen::kroneckerProduct(full, factor).eval();
  }
  return full;
}

void check_local_unitary(const Dims& dims, int subsystem, const Matrix& u) {
  if (subsystem < 0 || subsystem >= static_cast<int>(dims.size())) {
    throw ArgumentError("apply_local_unitary: subsystem out of range");
  }
  if (u.rows() != dims[subsystem] || u.cols() != dims[subsystem]) {
    throw ArgumentError("apply_local_unitary: operator size does not match subsystem dimension");
  }
}

}  // namespace

PureState tensor_product(const PureState& a, const PureState& b) {
  Vector amps = Eigen::kroneckerProduct(a.amplitudes(), b.amplitudes()).eval();
  Dims dims = a.dims();
  dims.insert(dims.end(), b.dims().begin(), b.dims().end());
  return PureState::normalized(std::move(amps), std::move(dims));
}

DensityMatrix tensor_product(const DensityMatrix& a, const DensityMatrix& b) {
  Matrix m = Eigen::kroneckerProduct(a.matrix(), b.matrix()).eval();
  Dims dims = a.dims();
  dims.insert(dims.end(), b.dims().begin(), b.dims().end());
  return DensityMatrix(std::move(m), std::move(dims));
}

DensityMatrix to_density(const PureState& psi) {
  const Vector& v = psi.amplitudes();
  return DensityMatrix(v * v.adjoint(), psi.dims());
}

DensityMatrix partial_trace(const DensityMatrix& rho, std::vector<int> keep) {
  const Dims& dims = rho.dims();
  if (keep.empty()) throw ArgumentError("partial_trace: keep set is empty");
  check_indices(keep, dims, "partial_trace");
  std::sort(keep.begin(), keep.end());

  std::vector<int> traced;
  for (int s = 0; s < static_cast<int>(dims.size()); ++s) {
    if (!std::binary_search(keep.begin(), keep.end(), s)) traced.push_back(s);
  }
  Dims kept_dims;
  for (int s : keep) kept_dims.push_back(dims[s]);
  Dims traced_dims;
  for (int s : traced) traced_dims.push_back(dims[s]);

  const std::size_t n = rho.dim();
  const std::size_t k = dims.size();
  const std::size_t nk = total_dim(kept_dims);
  const std::size_t nt = traced.empty() ? 1 : total_dim(traced_dims);
  const auto digits = digit_table(dims);

  // full_index[t * nk + a] is the basis index with traced part t and kept part a.
  std::vector<std::size_t> full_index(nt * nk);
  for (std::size_t idx = 0; idx < n; ++idx) {
    const std::size_t a = sub_index(digits, k, idx, keep, dims);
    const std::size_t t = sub_index(digits, k, idx, traced, dims);
    full_index[t * nk + a] = idx;
  }

  Matrix out = Matrix::Zero(static_cast<Eigen::Index>(nk), static_cast<Eigen::Index>(nk));
  const Matrix& m = rho.matrix();
  for (std::size_t t = 0; t < nt; ++t) {
    for (std::size_t a = 0; a < nk; ++a) {
      for (std::size_t b = 0; b < nk; ++b) {
        out(static_cast<Eigen::Index>(a), static_cast<Eigen::Index>(b)) +=
            m(static_cast<Eigen::Index>(full_index[t * nk + a]),
              static_cast<Eigen::Index>(full_index[t * nk + b]));
      }
    }
  }
  // Hermitize away the last bits of summation-order asymmetry.
  Matrix herm = 0.5 * (out + out.adjoint());
  return DensityMatrix(std::move(herm), std::move(kept_dims));
}

DensityMatrix partial_trace(const PureState& psi, std::vector<int> keep) {
  if (keep.empty()) throw ArgumentError("partial_trace: keep set is empty");
  check_indices(keep, psi.dims(), "partial_trace");
  if (keep.size() == psi.dims().size()) return to_density(psi);
  const auto cut = Bipartition::complement_of(keep, psi.num_subsystems());
  const Matrix mat = amplitude_matrix(psi.amplitudes(), psi.dims(), cut);
  Matrix reduced = mat * mat.adjoint();
  reduced = 0.5 * (reduced + reduced.adjoint()).eval();
  Dims kept_dims;
  for (int s : cut.side_a()) kept_dims.push_back(psi.dims()[s]);
  return DensityMatrix(std::move(reduced), std::move(kept_dims));
}

Matrix partial_transpose(const Matrix& m, const Dims& dims, const std::vector<int>& transpose_set) {
  check_indices(transpose_set, dims, "partial_transpose");
  const std::size_t n = total_dim(dims);
  if (static_cast<std::size_t>(m.rows()) != n || m.cols() != m.rows()) {
    throw ArgumentError("partial_transpose: matrix size does not match dims");
  }
  const std::size_t k = dims.size();
  const auto digits = digit_table(dims);
  const auto st = strides(dims);

  Matrix out(m.rows(), m.cols());
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      std::size_t ti = i;
      std::size_t tj = j;
      for (int s : transpose_set) {
        const auto di = static_cast<std::size_t>(digits[i * k + s]);
        const auto dj = static_cast<std::size_t>(digits[j * k + s]);
        ti = ti - di * st[s] + dj * st[s];
        tj = tj - dj * st[s] + di * st[s];
      }
      out(static_cast<Eigen::Index>(ti), static_cast<Eigen::Index>(tj)) =
          m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j));
    }
  }
  return out;
}

Matrix partial_transpose(const DensityMatrix& rho, const std::vector<int>& transpose_set) {
  return partial_transpose(rho.matrix(), rho.dims(), transpose_set);
}

double trace_norm(const Matrix& m) {
  if (m.rows() != m.cols()) throw ArgumentError("trace_norm: matrix is not square");
  if (m.size() == 0) return 0.0;
  const double herm_dev = (m - m.adjoint()).cwiseAbs().maxCoeff();
  if (herm_dev <= numeric_policy().structural_tol) {
    Eigen::SelfAdjointEigenSolver<Matrix> es(m, Eigen::EigenvaluesOnly);
    return es.eigenvalues().cwiseAbs().sum();
  }
  Eigen::BDCSVD<Matrix> svd(m);
  return svd.singularValues().sum();
}

Matrix amplitude_matrix(const Vector& amplitudes, const Dims& dims, const Bipartition& cut) {
  cut.check_against(dims);
  const std::size_t n = total_dim(dims);
  if (static_cast<std::size_t>(amplitudes.size()) != n) {
    throw ArgumentError("amplitude_matrix: vector length does not match dims");
  }
  std::size_t rows = 1;
  for (int s : cut.side_a()) rows *= static_cast<std::size_t>(dims[s]);
  const std::size_t cols = n / rows;
  const std::size_t k = dims.size();
  const auto digits = digit_table(dims);

  Matrix out(static_cast<Eigen::Index>(rows), static_cast<Eigen::Index>(cols));
  for (std::size_t idx = 0; idx < n; ++idx) {
    const std::size_t r = sub_index(digits, k, idx, cut.side_a(), dims);
    const std::size_t c = sub_index(digits, k, idx, cut.side_b(), dims);
    out(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) =
        amplitudes(static_cast<Eigen::Index>(idx));
  }
  return out;
}

SchmidtSpectrum schmidt_coefficients(const PureState& psi, const Bipartition& cut) {
  const Matrix mat = amplitude_matrix(psi.amplitudes(), psi.dims(), cut);
  Eigen::JacobiSVD<Matrix> svd(mat);
  const RealVector sv = svd.singularValues();  // descending
  SchmidtSpectrum spec;
  spec.coefficients.reserve(static_cast<std::size_t>(sv.size()));
  for (Eigen::Index i = 0; i < sv.size(); ++i) spec.coefficients.push_back(sv(i) * sv(i));
  return spec;
}

PureState apply_local_unitary(const PureState& psi, int subsystem, const Matrix& u) {
  check_local_unitary(psi.dims(), subsystem, u);
  Vector out = embed_local(psi.dims(), subsystem, u) * psi.amplitudes();
  return PureState::normalized(std::move(out), psi.dims());
}

DensityMatrix apply_local_unitary(const DensityMatrix& rho, int subsystem, const Matrix& u) {
  check_local_unitary(rho.dims(), subsystem, u);
  const Matrix full = embed_local(rho.dims(), subsystem, u);
  Matrix out = full * rho.matrix() * full.adjoint();
  out = 0.5 * (out + out.adjoint()).eval();
  return DensityMatrix(std::move(out), rho.dims());
}

PureState purify_rank_one(const DensityMatrix& rho) {
  if (rho.numerical_rank() != 1) throw ArgumentError("purify_rank_one: state is not rank one");
  Eigen::SelfAdjointEigenSolver<Matrix> es(rho.matrix());
  Vector v = es.eigenvectors().col(es.eigenvectors().cols() - 1);
  Eigen::Index imax = 0;
  v.cwiseAbs().maxCoeff(&imax);
  v *= std::conj(v(imax)) / std::abs(v(imax));
  return PureState::normalized(std::move(v), rho.dims());
}

}  // namespace qmono
