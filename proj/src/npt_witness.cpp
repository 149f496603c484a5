// SPDX-License-Identifier: Apache-2.0
#include "dicke/npt_witness.hpp"

#include <Eigen/Dense>

#include <atomic>
#include <chrono>
#include <cmath>
#include <stdexcept>
#include <thread>

namespace dicke {

bool WitnessChoice::canonical() const {
  if (pos_plus < 0 || pos_minus < 0 || pos_plus == pos_minus) return false;
  const int d = static_cast<int>(delta.size());
  if (pos_plus >= d || pos_minus >= d) return false;
  for (int t = 0; t < d; ++t) {
    const int expected = t == pos_plus ? 1 : (t == pos_minus ? -1 : 0);
    if (delta[t] != expected) return false;
  }
  return true;
}

namespace {

/// Distributes `amount` over the levels in order, each capped by caps[t]
/// minus what `base` already holds there. Returns false when capacity runs
/// out.
bool fill_in_order(std::vector<int>& base, const std::vector<int>& caps,
                   int amount) {
  for (std::size_t t = 0; t < base.size() && amount > 0; ++t) {
    const int room = caps[t] - base[t];
    const int add = std::min(room, amount);
    base[t] += add;
    amount -= add;
  }
  return amount == 0;
}

}  // namespace

WitnessChoice choose_witness(const OccupationIndex& parent, int m, int k) {
  const int n = parent.norm();
  const int d = parent.dimension();
  if (parent.nonzero_count() < 2) {
    throw std::invalid_argument(
        "witness needs at least two occupied levels in " + parent.to_string());
  }
  if (m < 2 || m > n) throw std::invalid_argument("m must lie in [2, n]");
  if (k < 1 || k > m - 1) throw std::invalid_argument("k must lie in [1, m-1]");

  int i = -1;
  int j = -1;
  for (int t = 0; t < d; ++t) {
    if (parent[t] == 0) continue;
    if (i < 0) {
      i = t;
    } else {
      j = t;
      break;
    }
  }

  // Middle label: one particle on each chosen level, the rest greedily.
  std::vector<int> m_hat(d, 0);
  m_hat[i] = 1;
  m_hat[j] = 1;
  fill_in_order(m_hat, parent.entries(), m - 2);

  // Split label: one particle on the lowered level, the rest greedily under
  // the middle label, leaving room at the raised level for the shift.
  std::vector<int> k_hat(d, 0);
  k_hat[j] = 1;
  std::vector<int> caps(m_hat);
  caps[i] = m_hat[i] - 1;
  fill_in_order(k_hat, caps, k - 1);

  std::vector<int> k_hat_prime(k_hat);
  ++k_hat_prime[i];
  --k_hat_prime[j];

  WitnessChoice choice{OccupationIndex(std::move(m_hat)),
                       OccupationIndex(std::move(k_hat)),
                       OccupationIndex(std::move(k_hat_prime)),
                       std::vector<int>(d, 0),
                       i,
                       j};
  choice.delta[i] = 1;
  choice.delta[j] = -1;
  return choice;
}

namespace {

void validate_choice(const OccupationIndex& parent,
                     const WitnessChoice& choice) {
  if (!choice.canonical()) {
    throw std::invalid_argument("witness labels do not differ by a unit shift");
  }
  if (choice.m_hat.dimension() != parent.dimension() ||
      static_cast<int>(choice.delta.size()) != parent.dimension()) {
    throw std::invalid_argument("dimension mismatch");
  }
  if (!in_restricted_set(choice.m_hat, parent)) {
    throw std::invalid_argument("middle label does not fit under the parent");
  }
  if (!choice.k_hat.leq(choice.m_hat) ||
      !choice.k_hat_prime.leq(choice.m_hat)) {
    throw std::invalid_argument("split labels do not fit under the middle");
  }
  const int m = choice.m_hat.norm();
  const int k = choice.k_hat.norm();
  if (m < 2 || m > parent.norm() || k < 1 || k > m - 1) {
    throw std::invalid_argument("witness labels have invalid norms");
  }
  for (int t = 0; t < choice.m_hat.dimension(); ++t) {
    if (choice.k_hat_prime[t] != choice.k_hat[t] + choice.delta[t]) {
      throw std::invalid_argument("split labels are not related by the shift");
    }
  }
}

/// m_hat shifted by sign * delta; nullopt when that leaves the orthant.
std::optional<OccupationIndex> shifted_middle(const WitnessChoice& choice,
                                              int sign) {
  std::vector<int> entries(choice.m_hat.entries());
  for (std::size_t t = 0; t < entries.size(); ++t) {
    entries[t] += sign * choice.delta[t];
    if (entries[t] < 0) return std::nullopt;
  }
  return OccupationIndex(std::move(entries));
}

}  // namespace

HermitianForm2 hermitian_form(const OccupationIndex& parent,
                              const WitnessChoice& choice) {
  validate_choice(parent, choice);

  HermitianForm2 form;
  if (const auto minus = shifted_middle(choice, -1)) {
    form.minus_in_parent_set = in_restricted_set(*minus, parent);
    form.minus_split_ok = choice.k_hat.leq(*minus);
    if (form.minus_in_parent_set && form.minus_split_ok) {
      form.A = schmidt_coefficient(parent, *minus) *
               schmidt_coefficient(*minus, choice.k_hat);
    }
  }
  if (const auto plus = shifted_middle(choice, +1)) {
    form.plus_in_parent_set = in_restricted_set(*plus, parent);
    form.plus_split_ok = choice.k_hat_prime.leq(*plus);
    if (form.plus_in_parent_set && form.plus_split_ok) {
      form.B = schmidt_coefficient(parent, *plus) *
               schmidt_coefficient(*plus, choice.k_hat_prime);
    }
  }
  const Rational middle_weight = schmidt_coefficient(parent, choice.m_hat);
  form.C_squared = middle_weight * middle_weight *
                   schmidt_coefficient(choice.m_hat, choice.k_hat) *
                   schmidt_coefficient(choice.m_hat, choice.k_hat_prime);
  return form;
}

Rational discriminant(const HermitianForm2& form) {
  return form.A * form.B - form.C_squared;
}

TwoFactorBound two_factor_check(const OccupationIndex& parent,
                                const WitnessChoice& choice) {
  validate_choice(parent, choice);
  TwoFactorBound bound;
  bound.value = 1;
  for (const int t : {choice.pos_plus, choice.pos_minus}) {
    const int slack = parent[t] - choice.m_hat[t];
    bound.value *= Rational(slack, slack + 1);
  }
  bound.less_than_one = bound.value < 1;
  return bound;
}

WitnessAmplitudes optimal_amplitudes(const HermitianForm2& form) {
  const double a = to_double(form.A);
  const double b = to_double(form.B);
  const double c = std::sqrt(to_double(form.C_squared));

  WitnessAmplitudes best;
  const double half_gap = (a - b) / 2;
  best.value = (a + b) / 2 - std::sqrt(half_gap * half_gap + c * c);
  if (c > 0) {
    const double x = c;
    const double y = best.value - a;
    const double norm = std::hypot(x, y);
    best.alpha = x / norm;
    best.beta = y / norm;
  } else {
    // Degenerate diagonal block: the minimizer is a basis vector.
    best.alpha = a <= b ? 1 : 0;
    best.beta = a <= b ? 0 : 1;
  }
  return best;
}

double witness_sandwich(const HermitianForm2& form, double alpha, double beta) {
  const double c = std::sqrt(to_double(form.C_squared));
  return alpha * alpha * to_double(form.A) + beta * beta * to_double(form.B) +
         2 * alpha * beta * c;
}

double spectral_min(const OccupationIndex& parent, int m, int k) {
  const auto transposed = partial_transpose(bipartite_operator(parent, m, k));
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(
      transposed.to_dense(), Eigen::EigenvaluesOnly);
  return solver.eigenvalues()(0);
}

std::string verdict_string(Verdict verdict) {
  switch (verdict) {
    case Verdict::NptGmeAllSubsystems:
      return "NPT-GME for all subsystems";
    case Verdict::FullySeparable:
      return "fully separable";
  }
  throw std::logic_error("unknown verdict");
}

namespace {

CertificationRecord certify_cut(const OccupationIndex& parent, int m, int k) {
  const auto start = std::chrono::steady_clock::now();

  CertificationRecord record;
  record.m = m;
  record.k = k;
  record.witness = choose_witness(parent, m, k);
  record.form = hermitian_form(parent, record.witness);
  record.discriminant = discriminant(record.form);
  record.witness_value = optimal_amplitudes(record.form).value;
  record.spectral_min = spectral_min(parent, m, k);
  record.is_npt = record.discriminant < 0;
  record.spectral_npt = record.spectral_min < kSpectralNptThreshold;

  const auto stop = std::chrono::steady_clock::now();
  record.time_ms =
      std::chrono::duration<double, std::milli>(stop - start).count();
  return record;
}

}  // namespace

CertificationReport certify(const OccupationIndex& parent, int threads) {
  const int n = parent.norm();
  if (n < 2) {
    throw std::invalid_argument("certification needs at least two particles");
  }
  if (parent.nonzero_count() < 2) {
    return {parent, Verdict::FullySeparable, {}};
  }

  std::vector<std::pair<int, int>> cuts;
  for (int m = 2; m <= n; ++m) {
    for (int k = 1; k <= m - 1; ++k) cuts.emplace_back(m, k);
  }

  std::vector<CertificationRecord> records(cuts.size());
  if (threads == 0) {
    threads = static_cast<int>(std::thread::hardware_concurrency());
    if (threads == 0) threads = 1;
  }
  if (threads <= 1 || cuts.size() <= 1) {
    for (std::size_t i = 0; i < cuts.size(); ++i) {
      records[i] = certify_cut(parent, cuts[i].first, cuts[i].second);
    }
  } else {
    std::atomic<std::size_t> next{0};
    const auto worker = [&] {
      for (std::size_t i = next.fetch_add(1); i < cuts.size();
           i = next.fetch_add(1)) {
        records[i] = certify_cut(parent, cuts[i].first, cuts[i].second);
      }
    };
    std::vector<std::thread> pool;
    const int count = std::min<int>(threads, static_cast<int>(cuts.size()));
    pool.reserve(count);
    for (int t = 0; t < count; ++t) pool.emplace_back(worker);
    for (auto& thread : pool) thread.join();
  }

  for (const auto& record : records) {
    if (!record.is_npt) {
      throw std::logic_error("cut (" + std::to_string(record.m) + ", " +
                             std::to_string(record.k) +
                             ") of " + parent.to_string() +
                             " failed the negativity certificate");
    }
  }
  return {parent, Verdict::NptGmeAllSubsystems, std::move(records)};
}

}  // namespace dicke
