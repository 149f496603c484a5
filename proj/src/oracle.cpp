// SPDX-License-Identifier: Apache-2.0
#include "dicke/oracle.hpp"

#include <cmath>
#include <cstdint>

namespace dicke::oracle {

namespace {

long long checked_power(int base, int exponent, long long limit) {
  long long result = 1;
  for (int i = 0; i < exponent; ++i) {
    result *= base;
    if (result > limit) throw DenseLimitError(result, limit);
  }
  return result;
}

/// Occupation counts of the base-d word behind `code`, site 1 most
/// significant.
void word_type(long long code, int d, int sites, std::vector<int>& counts) {
  counts.assign(d, 0);
  for (int s = 0; s < sites; ++s) {
    ++counts[code % d];
    code /= d;
  }
}

void require_square(const DenseHermitian& op) {
  if (op.matrix.rows() != op.matrix.cols()) {
    throw std::invalid_argument("matrix is not square");
  }
}

void require_hermitian(const DenseHermitian& op) {
  require_square(op);
  const double defect =
      (op.matrix - op.matrix.adjoint()).cwiseAbs().maxCoeff();
  if (defect > 1e-9) {
    throw std::invalid_argument("matrix is not Hermitian (defect " +
                                std::to_string(defect) + ")");
  }
}

}  // namespace

DenseVector dense_dicke(const OccupationIndex& occupation,
                        const DenseLimits& limits) {
  const int d = occupation.dimension();
  const int n = occupation.norm();
  const long long dim = checked_power(d, n, limits.max_vector_dim);

  DenseVector state;
  state.d = d;
  state.sites = n;
  state.amplitudes = Eigen::VectorXcd::Zero(dim);

  const double amplitude =
      1.0 / std::sqrt(multinomial(occupation).convert_to<double>());
  std::vector<int> counts;
  for (long long code = 0; code < dim; ++code) {
    word_type(code, d, n, counts);
    if (counts == occupation.entries()) state.amplitudes(code) = amplitude;
  }
  return state;
}

DenseHermitian dense_partial_trace(const DenseVector& state, int keep,
                                   const DenseLimits& limits) {
  if (keep < 1 || keep > state.sites) {
    throw std::invalid_argument("keep must lie in [1, sites]");
  }
  const long long rows = checked_power(state.d, keep, limits.max_matrix_dim);
  const long long cols =
      checked_power(state.d, state.sites - keep, limits.max_vector_dim);

  // Site 1 carries the most significant digit, so the amplitude vector read
  // row-major is exactly the (kept | traced) coefficient matrix.
  const Eigen::Map<const Eigen::Matrix<std::complex<double>, Eigen::Dynamic,
                                       Eigen::Dynamic, Eigen::RowMajor>>
      coefficients(state.amplitudes.data(), rows, cols);

  DenseHermitian out;
  out.d = state.d;
  out.sites = keep;
  out.matrix = coefficients * coefficients.adjoint();
  return out;
}

DenseHermitian dense_partial_transpose(const DenseHermitian& op, int k) {
  require_square(op);
  if (k < 1 || k > op.sites - 1) {
    throw std::invalid_argument("k must lie in [1, sites-1]");
  }
  long long left = 1;
  for (int i = 0; i < k; ++i) left *= op.d;
  const long long right = op.matrix.rows() / left;

  DenseHermitian out;
  out.d = op.d;
  out.sites = op.sites;
  out.matrix.resize(op.matrix.rows(), op.matrix.cols());
  for (long long a = 0; a < left; ++a) {
    for (long long b = 0; b < left; ++b) {
      out.matrix.block(a * right, b * right, right, right) =
          op.matrix.block(b * right, a * right, right, right);
    }
  }
  return out;
}

std::vector<double> dense_spectrum(const DenseHermitian& op,
                                   const DenseLimits& limits) {
  require_hermitian(op);
  if (op.matrix.rows() > limits.max_matrix_dim) {
    throw DenseLimitError(op.matrix.rows(), limits.max_matrix_dim);
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(
      op.matrix, Eigen::EigenvaluesOnly);
  const auto& values = solver.eigenvalues();
  return {values.data(), values.data() + values.size()};
}

double dense_min_eigenvalue(const DenseHermitian& op,
                            const DenseLimits& limits) {
  return dense_spectrum(op, limits).front();
}

std::vector<double> dense_schmidt_singular_values(const DenseVector& state,
                                                  int m,
                                                  const DenseLimits& limits) {
  if (m < 1 || m > state.sites) {
    throw std::invalid_argument("cut must lie in [1, sites]");
  }
  const long long rows = checked_power(state.d, m, limits.max_matrix_dim);
  const long long cols =
      checked_power(state.d, state.sites - m, limits.max_vector_dim);
  const Eigen::Map<const Eigen::Matrix<std::complex<double>, Eigen::Dynamic,
                                       Eigen::Dynamic, Eigen::RowMajor>>
      coefficients(state.amplitudes.data(), rows, cols);
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(coefficients);
  const auto& values = svd.singularValues();
  return {values.data(), values.data() + values.size()};
}

SchmidtIdentityReport verify_schmidt_identity(const OccupationIndex& parent,
                                              int m,
                                              const DenseLimits& limits) {
  const int d = parent.dimension();
  const int n = parent.norm();
  if (m < 1 || m > n) throw std::invalid_argument("cut must lie in [1, n]");
  const long long dim = checked_power(d, n, limits.max_vector_dim);

  const auto indicator = [&](const OccupationIndex& occupation) {
    const long long size = checked_power(d, occupation.norm(),
                                         limits.max_vector_dim);
    std::vector<std::int64_t> v(size, 0);
    std::vector<int> counts;
    for (long long code = 0; code < size; ++code) {
      word_type(code, d, occupation.norm(), counts);
      if (counts == occupation.entries()) v[code] = 1;
    }
    return v;
  };

  const std::vector<std::int64_t> parent_words = indicator(parent);

  SchmidtIdentityReport report;
  report.coefficients_all_one = true;
  report.supports_disjoint = true;
  report.terms_contained = true;

  std::vector<std::int64_t> accumulated(dim, 0);
  const long long right_dim = dim / checked_power(d, m, limits.max_vector_dim);
  for (const auto& part : enumerate_restricted(m, parent)) {
    const auto left = indicator(part);
    const auto right = indicator(parent - part);
    for (long long a = 0; a < static_cast<long long>(left.size()); ++a) {
      if (left[a] == 0) continue;
      for (long long b = 0; b < right_dim; ++b) {
        if (right[b] == 0) continue;
        const long long code = a * right_dim + b;
        const std::int64_t coefficient = left[a] * right[b];
        if (coefficient != 1) report.coefficients_all_one = false;
        if (accumulated[code] != 0) report.supports_disjoint = false;
        if (parent_words[code] != 1) report.terms_contained = false;
        accumulated[code] += coefficient;
      }
    }
  }

  report.parent_covered = true;
  report.sum_matches = true;
  for (long long code = 0; code < dim; ++code) {
    if (parent_words[code] == 1 && accumulated[code] == 0) {
      report.parent_covered = false;
    }
    if (accumulated[code] != parent_words[code]) report.sum_matches = false;
  }
  return report;
}

}  // namespace dicke::oracle
