// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <Eigen/Dense>

#include <map>
#include <utility>
#include <vector>

#include "dicke/exact.hpp"
#include "dicke/multiindex.hpp"
#include "dicke/oracle.hpp"

namespace dicke {

/// Weight of the subsystem index `part` in the Schmidt decomposition of the
/// symmetric state labeled `parent`, cut at |part| sites:
///   multinomial(part) * multinomial(parent - part) / multinomial(parent).
/// Throws if part does not fit under parent componentwise.
Rational schmidt_coefficient(const OccupationIndex& parent,
                             const OccupationIndex& part);

struct SchmidtTerm {
  OccupationIndex part;        // subsystem label; complement is parent - part
  Rational weight;             // squared Schmidt coefficient, exact
};

/// All Schmidt terms of the cut (m | n-m) of the symmetric state `parent`,
/// for 1 <= m <= |parent| - 1, in the descending order of the part labels.
std::vector<SchmidtTerm> schmidt_decomposition(const OccupationIndex& parent,
                                               int m);

/// The m-site reduction of the symmetric state `parent`: diagonal in the
/// symmetric basis of the subsystem, supported on the indices fitting under
/// `parent`, with exactly summing weights.
struct ReducedDickeState {
  OccupationIndex parent;
  int subsystem_size;
  IndexSet support;             // restricted set I(m, parent), descending
  std::vector<Rational> weights;  // aligned with support, sums to 1 exactly
};

ReducedDickeState reduced_state(const OccupationIndex& parent, int m);

/// The m-site reduction expressed on the product basis of a (k | m-k) split,
/// indexed by pairs (kappa, mu) from the full sets of norms k and m-k. Entries
/// are exact radicals; the matrix is symmetric with nonnegative entries and
/// unit trace. Entry ((kappa,mu),(kappa',mu')) is nonzero only when
/// kappa + mu = kappa' + mu' lies in the support of the reduction.
class BipartiteSymmetricOperator {
 public:
  BipartiteSymmetricOperator(OccupationIndex parent, int m, int k,
                             IndexSet kappa_space, IndexSet mu_space);

  const OccupationIndex& parent() const { return parent_; }
  int subsystem_size() const { return m_; }
  int split() const { return k_; }
  const IndexSet& kappa_space() const { return kappa_space_; }
  const IndexSet& mu_space() const { return mu_space_; }

  int dim() const { return kappa_space_.size() * mu_space_.size(); }
  int pair_index(int kappa_pos, int mu_pos) const {
    return kappa_pos * mu_space_.size() + mu_pos;
  }

  void set_entry(int row, int col, SqrtRational value);
  /// Zero when the position holds no stored entry.
  SqrtRational entry(int row, int col) const;
  const std::map<std::pair<int, int>, SqrtRational>& entries() const {
    return entries_;
  }

  bool is_hermitian() const;
  /// Exact trace; diagonal entries always reduce to rationals.
  Rational trace() const;

  Eigen::MatrixXd to_dense() const;

 private:
  OccupationIndex parent_;
  int m_;
  int k_;
  IndexSet kappa_space_;
  IndexSet mu_space_;
  std::map<std::pair<int, int>, SqrtRational> entries_;
};

/// The m-site reduction of `parent` on the (k | m-k) product basis.
/// Requires 2 <= m <= |parent| and 1 <= k <= m-1.
BipartiteSymmetricOperator bipartite_operator(const OccupationIndex& parent,
                                              int m, int k);

/// Transposition of the kappa (first) factor: entry ((kappa,mu),(kappa',mu'))
/// of the result is entry ((kappa',mu),(kappa,mu')) of the input. An
/// involution that preserves the trace and hermiticity.
BipartiteSymmetricOperator partial_transpose(
    const BipartiteSymmetricOperator& op);

/// Diagonal of the partial trace over the mu factor, on kappa_space order.
std::vector<Rational> trace_out_second(const BipartiteSymmetricOperator& op);
/// Diagonal of the partial trace over the kappa factor, on mu_space order.
std::vector<Rational> trace_out_first(const BipartiteSymmetricOperator& op);

/// The reduction lifted back to the full m-site Hilbert space, as
/// sum_i weight_i |D_i><D_i| over dense symmetric states.
oracle::DenseHermitian embed_dense(const ReducedDickeState& state,
                                   const oracle::DenseLimits& limits = {});

/// The bipartite form lifted to the full m-site Hilbert space: columns of the
/// embedding are tensor products of dense symmetric states of the two
/// factors, conjugated around the exact entry matrix.
oracle::DenseHermitian embed_dense(const BipartiteSymmetricOperator& op,
                                   const oracle::DenseLimits& limits = {});

}  // namespace dicke
