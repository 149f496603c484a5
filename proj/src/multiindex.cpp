// SPDX-License-Identifier: Apache-2.0
#include "dicke/multiindex.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace dicke {

OccupationIndex::OccupationIndex(std::vector<int> entries)
    : entries_(std::move(entries)) {
  if (entries_.empty()) {
    throw std::invalid_argument("occupation index needs at least one level");
  }
  norm_ = 0;
  for (int e : entries_) {
    if (e < 0) throw std::invalid_argument("negative occupation number");
    norm_ += e;
  }
}

int OccupationIndex::nonzero_count() const {
  return static_cast<int>(
      std::count_if(entries_.begin(), entries_.end(), [](int e) { return e != 0; }));
}

bool OccupationIndex::leq(const OccupationIndex& other) const {
  if (dimension() != other.dimension()) {
    throw std::invalid_argument("dimension mismatch");
  }
  for (int i = 0; i < dimension(); ++i) {
    if (entries_[i] > other.entries_[i]) return false;
  }
  return true;
}

OccupationIndex OccupationIndex::operator+(const OccupationIndex& other) const {
  if (dimension() != other.dimension()) {
    throw std::invalid_argument("dimension mismatch");
  }
  std::vector<int> sum(entries_);
  for (int i = 0; i < dimension(); ++i) sum[i] += other.entries_[i];
  return OccupationIndex(std::move(sum));
}

OccupationIndex OccupationIndex::operator-(const OccupationIndex& other) const {
  if (dimension() != other.dimension()) {
    throw std::invalid_argument("dimension mismatch");
  }
  std::vector<int> diff(entries_);
  for (int i = 0; i < dimension(); ++i) {
    diff[i] -= other.entries_[i];
    if (diff[i] < 0) {
      throw std::invalid_argument("difference leaves nonnegative orthant");
    }
  }
  return OccupationIndex(std::move(diff));
}

std::optional<OccupationIndex> OccupationIndex::shifted(int level,
                                                        int delta) const {
  if (level < 0 || level >= dimension()) {
    throw std::out_of_range("level out of range");
  }
  if (entries_[level] + delta < 0) return std::nullopt;
  std::vector<int> entries(entries_);
  entries[level] += delta;
  return OccupationIndex(std::move(entries));
}

std::strong_ordering OccupationIndex::operator<=>(
    const OccupationIndex& other) const {
  return std::lexicographical_compare_three_way(
      entries_.begin(), entries_.end(), other.entries_.begin(),
      other.entries_.end());
}

std::string OccupationIndex::to_string() const {
  std::ostringstream out;
  out << '(';
  for (int i = 0; i < dimension(); ++i) {
    if (i > 0) out << ',';
    out << entries_[i];
  }
  out << ')';
  return out.str();
}

BigInt binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  BigInt result = 1;
  for (int i = 1; i <= k; ++i) {
    result *= n - k + i;
    result /= i;
  }
  return result;
}

BigInt multinomial(const OccupationIndex& index) {
  BigInt result = 1;
  int remaining = index.norm();
  for (int i = 0; i < index.dimension(); ++i) {
    result *= binomial(remaining, index[i]);
    remaining -= index[i];
  }
  return result;
}

namespace {

/// Emits, in lexicographically descending order, every completion of
/// `prefix` to a d-tuple with `remaining` particles, each entry capped by
/// `caps` (or unbounded when caps is null).
void descend(std::vector<int>& prefix, int level, int dimension, int remaining,
             const std::vector<int>* caps,
             std::vector<OccupationIndex>& out) {
  if (level == dimension - 1) {
    if (caps && remaining > (*caps)[level]) return;
    prefix.push_back(remaining);
    out.emplace_back(prefix);
    prefix.pop_back();
    return;
  }
  int high = remaining;
  if (caps) high = std::min(high, (*caps)[level]);
  for (int e = high; e >= 0; --e) {
    prefix.push_back(e);
    descend(prefix, level + 1, dimension, remaining - e, caps, out);
    prefix.pop_back();
  }
}

}  // namespace

std::vector<OccupationIndex> enumerate_full(int dimension, int norm) {
  if (dimension < 1) throw std::invalid_argument("dimension must be positive");
  if (norm < 0) throw std::invalid_argument("norm must be nonnegative");
  std::vector<OccupationIndex> out;
  std::vector<int> prefix;
  prefix.reserve(dimension);
  descend(prefix, 0, dimension, norm, nullptr, out);
  return out;
}

std::vector<OccupationIndex> enumerate_restricted(int m,
                                                  const OccupationIndex& bound) {
  if (m < 0) throw std::invalid_argument("norm must be nonnegative");
  if (m > bound.norm()) {
    throw std::invalid_argument("requested norm exceeds the bound's norm");
  }
  std::vector<OccupationIndex> out;
  std::vector<int> prefix;
  prefix.reserve(bound.dimension());
  descend(prefix, 0, bound.dimension(), m, &bound.entries(), out);
  return out;
}

bool in_restricted_set(const OccupationIndex& candidate,
                       const OccupationIndex& bound) {
  return candidate.dimension() == bound.dimension() && candidate.leq(bound);
}

QubitBounds qubit_bounds(int n, int e, int m) {
  if (n < 1) throw std::invalid_argument("n must be positive");
  if (e < 0 || e > n) throw std::invalid_argument("e must lie in [0, n]");
  if (m < 1 || m > n) throw std::invalid_argument("m must lie in [1, n]");
  return {std::max(0, e - (n - m)), std::min(m, e)};
}

IndexSet::IndexSet(int dimension, int target_norm,
                   std::optional<OccupationIndex> bound,
                   std::vector<OccupationIndex> members)
    : dimension_(dimension),
      target_norm_(target_norm),
      bound_(std::move(bound)),
      members_(std::move(members)) {}

IndexSet IndexSet::full(int dimension, int norm) {
  return IndexSet(dimension, norm, std::nullopt,
                  enumerate_full(dimension, norm));
}

IndexSet IndexSet::restricted(int m, const OccupationIndex& bound) {
  return IndexSet(bound.dimension(), m, bound, enumerate_restricted(m, bound));
}

bool IndexSet::contains(const OccupationIndex& index) const {
  return index_of(index) >= 0;
}

int IndexSet::index_of(const OccupationIndex& index) const {
  if (index.dimension() != dimension_ || index.norm() != target_norm_) {
    return -1;
  }
  const auto it = std::lower_bound(members_.begin(), members_.end(), index,
                                   std::greater<>());
  if (it == members_.end() || *it != index) return -1;
  return static_cast<int>(it - members_.begin());
}

}  // namespace dicke
