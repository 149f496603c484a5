// SPDX-License-Identifier: Apache-2.0
#include "dicke/dicke_algebra.hpp"

#include <stdexcept>
#include <utility>

namespace dicke {

Rational schmidt_coefficient(const OccupationIndex& parent,
                             const OccupationIndex& part) {
  if (!in_restricted_set(part, parent)) {
    throw std::invalid_argument("part " + part.to_string() +
                                " does not fit under " + parent.to_string());
  }
  return Rational(multinomial(part) * multinomial(parent - part),
                  multinomial(parent));
}

std::vector<SchmidtTerm> schmidt_decomposition(const OccupationIndex& parent,
                                               int m) {
  if (m < 1 || m > parent.norm() - 1) {
    throw std::invalid_argument("cut size must lie in [1, n-1]");
  }
  std::vector<SchmidtTerm> terms;
  for (const auto& part : enumerate_restricted(m, parent)) {
    terms.push_back({part, schmidt_coefficient(parent, part)});
  }
  return terms;
}

ReducedDickeState reduced_state(const OccupationIndex& parent, int m) {
  if (m < 1 || m > parent.norm()) {
    throw std::invalid_argument("subsystem size must lie in [1, n]");
  }
  IndexSet support = IndexSet::restricted(m, parent);
  std::vector<Rational> weights;
  weights.reserve(support.size());
  Rational sum = 0;
  for (const auto& part : support) {
    weights.push_back(schmidt_coefficient(parent, part));
    sum += weights.back();
  }
  if (sum != 1) throw std::logic_error("reduction weights do not sum to one");
  return {parent, m, std::move(support), std::move(weights)};
}

BipartiteSymmetricOperator::BipartiteSymmetricOperator(OccupationIndex parent,
                                                       int m, int k,
                                                       IndexSet kappa_space,
                                                       IndexSet mu_space)
    : parent_(std::move(parent)),
      m_(m),
      k_(k),
      kappa_space_(std::move(kappa_space)),
      mu_space_(std::move(mu_space)) {}

void BipartiteSymmetricOperator::set_entry(int row, int col,
                                           SqrtRational value) {
  if (row < 0 || row >= dim() || col < 0 || col >= dim()) {
    throw std::out_of_range("entry position out of range");
  }
  if (value.is_zero()) {
    entries_.erase({row, col});
  } else {
    entries_[{row, col}] = std::move(value);
  }
}

SqrtRational BipartiteSymmetricOperator::entry(int row, int col) const {
  const auto it = entries_.find({row, col});
  if (it == entries_.end()) return SqrtRational();
  return it->second;
}

bool BipartiteSymmetricOperator::is_hermitian() const {
  for (const auto& [pos, value] : entries_) {
    if (entry(pos.second, pos.first) != value) return false;
  }
  return true;
}

Rational BipartiteSymmetricOperator::trace() const {
  Rational sum = 0;
  for (const auto& [pos, value] : entries_) {
    if (pos.first == pos.second) sum += value.as_rational();
  }
  return sum;
}

Eigen::MatrixXd BipartiteSymmetricOperator::to_dense() const {
  Eigen::MatrixXd dense = Eigen::MatrixXd::Zero(dim(), dim());
  for (const auto& [pos, value] : entries_) {
    dense(pos.first, pos.second) = value.to_double();
  }
  return dense;
}

BipartiteSymmetricOperator bipartite_operator(const OccupationIndex& parent,
                                              int m, int k) {
  const int n = parent.norm();
  if (m < 2 || m > n) throw std::invalid_argument("m must lie in [2, n]");
  if (k < 1 || k > m - 1) throw std::invalid_argument("k must lie in [1, m-1]");

  const int d = parent.dimension();
  BipartiteSymmetricOperator op(parent, m, k, IndexSet::full(d, k),
                                IndexSet::full(d, m - k));
  const auto& kappas = op.kappa_space();
  const auto& mus = op.mu_space();

  // Each middle index contributes a rank-one block: the entry at
  // ((kappa,mu),(kappa',mu')) with kappa+mu = kappa'+mu' = middle is
  // weight(middle) * sqrt(eta(middle,kappa) * eta(middle,kappa')).
  for (const auto& middle : enumerate_restricted(m, parent)) {
    const Rational weight = schmidt_coefficient(parent, middle);
    const auto splits = enumerate_restricted(k, middle);
    for (const auto& kappa : splits) {
      const int row_kappa = kappas.index_of(kappa);
      const int row_mu = mus.index_of(middle - kappa);
      const Rational eta_row = schmidt_coefficient(middle, kappa);
      for (const auto& kappa_prime : splits) {
        const int col_kappa = kappas.index_of(kappa_prime);
        const int col_mu = mus.index_of(middle - kappa_prime);
        const Rational eta_col = schmidt_coefficient(middle, kappa_prime);
        op.set_entry(op.pair_index(row_kappa, row_mu),
                     op.pair_index(col_kappa, col_mu),
                     SqrtRational::scaled_sqrt(weight, eta_row * eta_col));
      }
    }
  }
  return op;
}

BipartiteSymmetricOperator partial_transpose(
    const BipartiteSymmetricOperator& op) {
  BipartiteSymmetricOperator out(op.parent(), op.subsystem_size(), op.split(),
                                 op.kappa_space(), op.mu_space());
  const int mu_count = out.mu_space().size();
  for (const auto& [pos, value] : op.entries()) {
    const int row_kappa = pos.first / mu_count;
    const int row_mu = pos.first % mu_count;
    const int col_kappa = pos.second / mu_count;
    const int col_mu = pos.second % mu_count;
    out.set_entry(out.pair_index(col_kappa, row_mu),
                  out.pair_index(row_kappa, col_mu), value);
  }
  return out;
}

std::vector<Rational> trace_out_second(const BipartiteSymmetricOperator& op) {
  const int mu_count = op.mu_space().size();
  std::vector<Rational> diag(op.kappa_space().size(), Rational(0));
  for (const auto& [pos, value] : op.entries()) {
    if (pos.first != pos.second) continue;
    diag[pos.first / mu_count] += value.as_rational();
  }
  return diag;
}

std::vector<Rational> trace_out_first(const BipartiteSymmetricOperator& op) {
  const int mu_count = op.mu_space().size();
  std::vector<Rational> diag(mu_count, Rational(0));
  for (const auto& [pos, value] : op.entries()) {
    if (pos.first != pos.second) continue;
    diag[pos.first % mu_count] += value.as_rational();
  }
  return diag;
}

namespace {

long long checked_power(int base, int exponent, long long limit) {
  long long result = 1;
  for (int i = 0; i < exponent; ++i) {
    result *= base;
    if (result > limit) throw oracle::DenseLimitError(result, limit);
  }
  return result;
}

}  // namespace

oracle::DenseHermitian embed_dense(const ReducedDickeState& state,
                                   const oracle::DenseLimits& limits) {
  const int d = state.parent.dimension();
  const int m = state.subsystem_size;
  const long long dim = checked_power(d, m, limits.max_matrix_dim);

  Eigen::MatrixXcd columns(dim, state.support.size());
  for (int i = 0; i < state.support.size(); ++i) {
    columns.col(i) = oracle::dense_dicke(state.support[i], limits).amplitudes;
  }
  Eigen::VectorXd weights(state.support.size());
  for (int i = 0; i < state.support.size(); ++i) {
    weights(i) = to_double(state.weights[i]);
  }
  oracle::DenseHermitian out;
  out.d = d;
  out.sites = m;
  out.matrix = columns * weights.asDiagonal() * columns.adjoint();
  return out;
}

oracle::DenseHermitian embed_dense(const BipartiteSymmetricOperator& op,
                                   const oracle::DenseLimits& limits) {
  const int d = op.parent().dimension();
  const int m = op.subsystem_size();
  const int k = op.split();
  const long long dim = checked_power(d, m, limits.max_matrix_dim);
  const long long kappa_dim = checked_power(d, k, limits.max_matrix_dim);
  const long long mu_dim = checked_power(d, m - k, limits.max_matrix_dim);

  Eigen::MatrixXcd columns(dim, op.dim());
  for (int i = 0; i < op.kappa_space().size(); ++i) {
    const Eigen::VectorXcd left =
        oracle::dense_dicke(op.kappa_space()[i], limits).amplitudes;
    for (int j = 0; j < op.mu_space().size(); ++j) {
      const Eigen::VectorXcd right =
          oracle::dense_dicke(op.mu_space()[j], limits).amplitudes;
      Eigen::VectorXcd product(dim);
      for (long long a = 0; a < kappa_dim; ++a) {
        product.segment(a * mu_dim, mu_dim) = left(a) * right;
      }
      columns.col(op.pair_index(i, j)) = product;
    }
  }
  oracle::DenseHermitian out;
  out.d = d;
  out.sites = m;
  out.matrix = columns * op.to_dense() * columns.adjoint();
  return out;
}

}  // namespace dicke
