// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <compare>
#include <optional>
#include <string>
#include <vector>

#include "dicke/exact.hpp"

namespace dicke {

/// Occupation numbers of d levels: a d-tuple of nonnegative integers.
class OccupationIndex {
 public:
  /// The trivial index: one level, empty.
  OccupationIndex() : entries_{0}, norm_(0) {}
  explicit OccupationIndex(std::vector<int> entries);

  int dimension() const { return static_cast<int>(entries_.size()); }
  /// Sum of entries (the particle number this index describes).
  int norm() const { return norm_; }
  int operator[](int level) const { return entries_[level]; }
  const std::vector<int>& entries() const { return entries_; }

  int nonzero_count() const;

  /// Componentwise comparison: *this <= other at every level.
  bool leq(const OccupationIndex& other) const;

  OccupationIndex operator+(const OccupationIndex& other) const;
  /// Componentwise difference; throws if any entry would go negative.
  OccupationIndex operator-(const OccupationIndex& other) const;

  /// Copy with entries[level] += delta; nullopt if the result leaves the
  /// nonnegative orthant.
  std::optional<OccupationIndex> shifted(int level, int delta) const;

  bool operator==(const OccupationIndex& other) const = default;
  /// Lexicographic on the entry tuple.
  std::strong_ordering operator<=>(const OccupationIndex& other) const;

  /// "(1,2,0)" style rendering.
  std::string to_string() const;

 private:
  std::vector<int> entries_;
  int norm_;
};

BigInt binomial(int n, int k);

/// n! / (n_1! ... n_d!) for n = |index|.
BigInt multinomial(const OccupationIndex& index);

/// All occupation indices of d levels with the given norm, in lexicographically
/// descending order. Throws on d < 1 or norm < 0.
std::vector<OccupationIndex> enumerate_full(int dimension, int norm);

/// The members of the full set with norm `m` that fit under `bound`
/// componentwise, lexicographically descending. Throws if m < 0 or
/// m > |bound|. For m == |bound| the single member is `bound` itself.
std::vector<OccupationIndex> enumerate_restricted(int m,
                                                  const OccupationIndex& bound);

bool in_restricted_set(const OccupationIndex& candidate,
                       const OccupationIndex& bound);

/// For two-level systems: the range [l_min, l_max] of excitations an
/// m-site subsystem of an n-site system with e total excitations can hold.
struct QubitBounds {
  int l_min;
  int l_max;
};
QubitBounds qubit_bounds(int n, int e, int m);

/// An enumerated, ordered family of occupation indices with O(log N) lookup.
/// Instances are either the full set of a given (dimension, norm) or the
/// restriction of such a set under a componentwise bound.
class IndexSet {
 public:
  static IndexSet full(int dimension, int norm);
  static IndexSet restricted(int m, const OccupationIndex& bound);

  int size() const { return static_cast<int>(members_.size()); }
  const OccupationIndex& operator[](int i) const { return members_[i]; }
  auto begin() const { return members_.begin(); }
  auto end() const { return members_.end(); }

  int dimension() const { return dimension_; }
  int target_norm() const { return target_norm_; }
  /// The componentwise bound; nullopt for a full set.
  const std::optional<OccupationIndex>& bound() const { return bound_; }

  bool contains(const OccupationIndex& index) const;
  /// Position in the descending order; -1 when absent.
  int index_of(const OccupationIndex& index) const;

 private:
  IndexSet(int dimension, int target_norm, std::optional<OccupationIndex> bound,
           std::vector<OccupationIndex> members);

  int dimension_;
  int target_norm_;
  std::optional<OccupationIndex> bound_;
  std::vector<OccupationIndex> members_;  // lexicographically descending
};

}  // namespace dicke
