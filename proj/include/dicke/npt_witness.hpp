// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>
#include <vector>

#include "dicke/dicke_algebra.hpp"
#include "dicke/exact.hpp"
#include "dicke/multiindex.hpp"

namespace dicke {

/// Eigenvalues of the partially transposed reduction below this threshold
/// count as a numerically established negative.
inline constexpr double kSpectralNptThreshold = -1e-10;

/// The pair of product vectors spanning the 2x2 block that the certificate
/// evaluates: |D_k_hat> (x) |D_{m_hat - k_hat_prime}> and
/// |D_k_hat_prime> (x) |D_{m_hat - k_hat}>. The two split labels differ by
/// +1 at pos_plus and -1 at pos_minus.
struct WitnessChoice {
  OccupationIndex m_hat;         // middle index, norm m, fits under parent
  OccupationIndex k_hat;         // split label, norm k
  OccupationIndex k_hat_prime;   // k_hat shifted: +1 at pos_plus, -1 at pos_minus
  std::vector<int> delta;        // k_hat_prime - k_hat entrywise
  int pos_plus = -1;
  int pos_minus = -1;

  /// True when delta is +1 at pos_plus, -1 at pos_minus and zero elsewhere.
  bool canonical() const;
};

/// Deterministic witness for the (m, k) cut of `parent`: the raised and
/// lowered levels are the two smallest occupied ones, and the middle and
/// split labels are filled greedily in level order. Requires at least two
/// occupied levels, 2 <= m <= |parent| and 1 <= k <= m-1.
WitnessChoice choose_witness(const OccupationIndex& parent, int m, int k);

/// The 2x2 block [[A, C], [C, B]] of the partially transposed reduction in
/// the span of the witness pair, with C stored squared to stay rational.
/// The four flags record which structural conditions admit the A and B
/// diagonal entries; a failed condition zeroes the entry.
struct HermitianForm2 {
  Rational A = 0;
  Rational B = 0;
  Rational C_squared = 0;

  bool minus_in_parent_set = false;  // m_hat - delta fits under parent
  bool minus_split_ok = false;       // k_hat fits under m_hat - delta
  bool plus_in_parent_set = false;   // m_hat + delta fits under parent
  bool plus_split_ok = false;        // k_hat_prime fits under m_hat + delta
};

HermitianForm2 hermitian_form(const OccupationIndex& parent,
                              const WitnessChoice& choice);

/// A*B - C^2, exact. Negative iff the block certifies a negative eigenvalue.
Rational discriminant(const HermitianForm2& form);

/// The closed-form upper bound on A*B / C^2 for a canonical witness:
/// the product over the two shifted levels t of
/// (parent_t - m_hat_t) / (parent_t - m_hat_t + 1).
struct TwoFactorBound {
  Rational value;
  bool less_than_one = false;
};

TwoFactorBound two_factor_check(const OccupationIndex& parent,
                                const WitnessChoice& choice);

/// Minimizing unit vector (alpha, beta) of the 2x2 block and the attained
/// value, its smaller eigenvalue.
struct WitnessAmplitudes {
  double alpha = 0;
  double beta = 0;
  double value = 0;
};

WitnessAmplitudes optimal_amplitudes(const HermitianForm2& form);

/// alpha^2 A + beta^2 B + 2 alpha beta C for the given block.
double witness_sandwich(const HermitianForm2& form, double alpha, double beta);

/// Smallest eigenvalue of the partially transposed (k | m-k) reduction of
/// `parent`, from a dense solve on the pair basis.
double spectral_min(const OccupationIndex& parent, int m, int k);

enum class Verdict {
  NptGmeAllSubsystems,
  FullySeparable,
};

std::string verdict_string(Verdict verdict);

struct CertificationRecord {
  int m = 0;
  int k = 0;
  WitnessChoice witness;
  HermitianForm2 form;
  Rational discriminant;
  double witness_value = 0;
  double spectral_min = 0;
  bool is_npt = false;       // exact: discriminant < 0
  bool spectral_npt = false; // numeric: spectral_min below threshold
  double time_ms = 0;
};

struct CertificationReport {
  OccupationIndex parent;
  Verdict verdict;
  std::vector<CertificationRecord> records;  // ascending m, then ascending k
};

/// Runs the certificate for every cut 2 <= m <= n, 1 <= k <= m-1. A parent
/// with a single occupied level reports fully separable with no records;
/// otherwise every cut must come out NPT. `threads` 0 means one worker per
/// hardware thread.
CertificationReport certify(const OccupationIndex& parent, int threads = 1);

}  // namespace dicke
