// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <Eigen/Dense>

#include <stdexcept>
#include <string>
#include <vector>

#include "dicke/multiindex.hpp"

namespace dicke::oracle {

/// Guard rails for full-Hilbert-space computations. `max_vector_dim` caps the
/// number of amplitudes of a dense state (d^sites); `max_matrix_dim` caps the
/// side length of any dense matrix that gets diagonalized.
struct DenseLimits {
  long long max_vector_dim = 1'048'576;
  long long max_matrix_dim = 4'096;
};

class DenseLimitError : public std::runtime_error {
 public:
  DenseLimitError(long long required, long long limit)
      : std::runtime_error("dense dimension " + std::to_string(required) +
                           " exceeds limit " + std::to_string(limit)),
        required_(required),
        limit_(limit) {}

  long long required() const { return required_; }
  long long limit() const { return limit_; }

 private:
  long long required_;
  long long limit_;
};

/// A state on `sites` qudits of local dimension `d`, stored as d^sites
/// amplitudes. Site 1 owns the most significant base-d digit of the row
/// index.
struct DenseVector {
  int d = 0;
  int sites = 0;
  Eigen::VectorXcd amplitudes;
};

/// A Hermitian operator on `sites` qudits of local dimension `d`.
struct DenseHermitian {
  int d = 0;
  int sites = 0;
  Eigen::MatrixXcd matrix;
};

/// The normalized symmetric basis state with the given occupation numbers,
/// built by equal superposition over all site words of that type.
DenseVector dense_dicke(const OccupationIndex& occupation,
                        const DenseLimits& limits = {});

/// |state><state| reduced to the first `keep` sites (the last
/// sites - keep are traced out). keep == sites returns the full projector.
DenseHermitian dense_partial_trace(const DenseVector& state, int keep,
                                   const DenseLimits& limits = {});

/// Transposition of the first `k` sites of `op`; 1 <= k <= sites - 1.
DenseHermitian dense_partial_transpose(const DenseHermitian& op, int k);

/// Ascending eigenvalues; throws std::invalid_argument when the matrix is
/// not Hermitian within 1e-9.
std::vector<double> dense_spectrum(const DenseHermitian& op,
                                   const DenseLimits& limits = {});
double dense_min_eigenvalue(const DenseHermitian& op,
                            const DenseLimits& limits = {});

/// Singular values (descending) of the cut after the first `m` sites of
/// `state`, from the d^m x d^(sites-m) coefficient matrix.
std::vector<double> dense_schmidt_singular_values(const DenseVector& state,
                                                  int m,
                                                  const DenseLimits& limits = {});

/// Structural checks on the expansion of a nonnormalized integer symmetric
/// state over products of subsystem symmetric states: each cross term appears
/// with unit coefficient, the supports of distinct terms are disjoint words,
/// together they cover exactly the parent's words, and the term count matches
/// the restricted index set.
struct SchmidtIdentityReport {
  bool coefficients_all_one = false;
  bool supports_disjoint = false;
  bool parent_covered = false;
  bool terms_contained = false;
  bool sum_matches = false;

  bool ok() const {
    return coefficients_all_one && supports_disjoint && parent_covered &&
           terms_contained && sum_matches;
  }
};

SchmidtIdentityReport verify_schmidt_identity(const OccupationIndex& parent,
                                              int m,
                                              const DenseLimits& limits = {});

}  // namespace dicke::oracle
