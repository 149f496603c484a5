// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include <algorithm>
#include <set>
#include <vector>

#include "dicke/multiindex.hpp"

using dicke::BigInt;
using dicke::IndexSet;
using dicke::OccupationIndex;

namespace {

/// Counts the distinct arrangements of a site word by walking all
/// permutations, independent of the binomial-product formula.
BigInt count_arrangements(const OccupationIndex& index) {
  std::vector<int> word;
  for (int level = 0; level < index.dimension(); ++level) {
    word.insert(word.end(), index[level], level);
  }
  std::sort(word.begin(), word.end());
  BigInt count = 0;
  do {
    ++count;
  } while (std::next_permutation(word.begin(), word.end()));
  return count;
}

}  // namespace

TEST_SUITE("occupation indices") {
  TEST_CASE("construction and accessors") {
    const OccupationIndex index({1, 2, 0});
    CHECK(index.dimension() == 3);
    CHECK(index.norm() == 3);
    CHECK(index[1] == 2);
    CHECK(index.nonzero_count() == 2);
    CHECK(index.to_string() == "(1,2,0)");
  }

  TEST_CASE("invalid entries are rejected") {
    CHECK_THROWS_AS(OccupationIndex({1, -1}), std::invalid_argument);
    CHECK_THROWS_AS(OccupationIndex(std::vector<int>{}),
                    std::invalid_argument);
  }

  TEST_CASE("componentwise order") {
    const OccupationIndex small({1, 1});
    const OccupationIndex large({1, 2});
    CHECK(small.leq(large));
    CHECK_FALSE(large.leq(small));
    CHECK(small.leq(small));
    CHECK_THROWS_AS((void)small.leq(OccupationIndex({1, 1, 1})),
                    std::invalid_argument);
  }

  TEST_CASE("arithmetic") {
    const OccupationIndex a({2, 1});
    const OccupationIndex b({1, 1});
    CHECK(a + b == OccupationIndex({3, 2}));
    CHECK(a - b == OccupationIndex({1, 0}));
    CHECK_THROWS_AS((void)(b - a), std::invalid_argument);
  }

  TEST_CASE("single level shifts") {
    const OccupationIndex index({1, 0});
    CHECK(index.shifted(0, 1) == OccupationIndex({2, 0}));
    CHECK(index.shifted(1, -1) == std::nullopt);
    CHECK_THROWS_AS((void)index.shifted(2, 1), std::out_of_range);
  }

  TEST_CASE("lexicographic comparison") {
    CHECK(OccupationIndex({2, 1}) > OccupationIndex({1, 2}));
    CHECK(OccupationIndex({1, 2}) > OccupationIndex({1, 1}));
  }
}

TEST_SUITE("counting") {
  TEST_CASE("binomial basics") {
    CHECK(dicke::binomial(0, 0) == 1);
    CHECK(dicke::binomial(10, 3) == 120);
    CHECK(dicke::binomial(5, 6) == 0);
    CHECK(dicke::binomial(5, -1) == 0);
    CHECK(dicke::binomial(52, 26) == BigInt("495918532948104"));
  }

  TEST_CASE("multinomial of a known index") {
    CHECK(dicke::multinomial(OccupationIndex({7, 3})) == 120);
    CHECK(dicke::multinomial(OccupationIndex({1, 1, 1})) == 6);
    CHECK(dicke::multinomial(OccupationIndex({4, 0})) == 1);
  }

  TEST_CASE("multinomial agrees with permutation counting") {
    for (int d = 1; d <= 3; ++d) {
      for (int n = 0; n <= 6; ++n) {
        for (const auto& index : dicke::enumerate_full(d, n)) {
          CAPTURE(index.to_string());
          CHECK(dicke::multinomial(index) == count_arrangements(index));
        }
      }
    }
  }
}

TEST_SUITE("enumeration") {
  TEST_CASE("full set is lexicographically descending") {
    const auto members = dicke::enumerate_full(2, 3);
    const std::vector<OccupationIndex> expected{
        OccupationIndex({3, 0}), OccupationIndex({2, 1}),
        OccupationIndex({1, 2}), OccupationIndex({0, 3})};
    CHECK(members == expected);
  }

  TEST_CASE("full set size matches the stars and bars count") {
    for (int d = 1; d <= 5; ++d) {
      for (int n = 0; n <= 12; ++n) {
        CHECK(BigInt(dicke::enumerate_full(d, n).size()) ==
              dicke::binomial(n + d - 1, d - 1));
      }
    }
  }

  TEST_CASE("degenerate arguments") {
    CHECK_THROWS_AS((void)dicke::enumerate_full(0, 3), std::invalid_argument);
    CHECK_THROWS_AS((void)dicke::enumerate_full(2, -1), std::invalid_argument);
    CHECK(dicke::enumerate_full(3, 0).size() == 1);
    CHECK(dicke::enumerate_full(1, 5).front() == OccupationIndex({5}));
  }

  TEST_CASE("restricted enumeration equals filtering the full set") {
    for (int d = 2; d <= 3; ++d) {
      for (int n = 1; n <= 6; ++n) {
        for (const auto& bound : dicke::enumerate_full(d, n)) {
          for (int m = 0; m <= n; ++m) {
            std::vector<OccupationIndex> filtered;
            for (const auto& candidate : dicke::enumerate_full(d, m)) {
              if (candidate.leq(bound)) filtered.push_back(candidate);
            }
            CAPTURE(bound.to_string());
            CAPTURE(m);
            CHECK(dicke::enumerate_restricted(m, bound) == filtered);
          }
        }
      }
    }
  }

  TEST_CASE("restriction at the extremes") {
    const OccupationIndex bound({2, 1});
    CHECK(dicke::enumerate_restricted(3, bound) ==
          std::vector<OccupationIndex>{bound});
    CHECK(dicke::enumerate_restricted(0, bound) ==
          std::vector<OccupationIndex>{OccupationIndex({0, 0})});
    CHECK_THROWS_AS((void)dicke::enumerate_restricted(4, bound),
                    std::invalid_argument);
  }

  TEST_CASE("two level restriction walks the excitation window") {
    const auto members =
        dicke::enumerate_restricted(6, OccupationIndex({7, 3}));
    const std::vector<OccupationIndex> expected{
        OccupationIndex({6, 0}), OccupationIndex({5, 1}),
        OccupationIndex({4, 2}), OccupationIndex({3, 3})};
    CHECK(members == expected);
  }

  TEST_CASE("complement map is a bijection between restricted sets") {
    const OccupationIndex parent({2, 3, 1});
    const int n = parent.norm();
    for (int m = 0; m <= n; ++m) {
      const auto forward = dicke::enumerate_restricted(m, parent);
      const auto backward = dicke::enumerate_restricted(n - m, parent);
      CHECK(forward.size() == backward.size());
      std::set<std::vector<int>> complements;
      for (const auto& member : forward) {
        complements.insert((parent - member).entries());
      }
      for (const auto& member : backward) {
        CHECK(complements.count(member.entries()) == 1);
      }
    }
  }
}

TEST_SUITE("two level bounds") {
  TEST_CASE("known window") {
    const auto bounds = dicke::qubit_bounds(10, 3, 6);
    CHECK(bounds.l_min == 0);
    CHECK(bounds.l_max == 3);
  }

  TEST_CASE("window matches the restricted set") {
    for (int n = 1; n <= 8; ++n) {
      for (int e = 0; e <= n; ++e) {
        for (int m = 1; m <= n; ++m) {
          const auto bounds = dicke::qubit_bounds(n, e, m);
          std::set<int> levels;
          for (const auto& member : dicke::enumerate_restricted(
                   m, OccupationIndex({n - e, e}))) {
            levels.insert(member[1]);
          }
          CAPTURE(n);
          CAPTURE(e);
          CAPTURE(m);
          CHECK(*levels.begin() == bounds.l_min);
          CHECK(*levels.rbegin() == bounds.l_max);
          CHECK(static_cast<int>(levels.size()) ==
                bounds.l_max - bounds.l_min + 1);
        }
      }
    }
  }

  TEST_CASE("invalid arguments") {
    CHECK_THROWS_AS((void)dicke::qubit_bounds(5, 6, 2), std::invalid_argument);
    CHECK_THROWS_AS((void)dicke::qubit_bounds(5, 2, 0), std::invalid_argument);
    CHECK_THROWS_AS((void)dicke::qubit_bounds(0, 0, 1), std::invalid_argument);
  }
}

TEST_SUITE("index sets") {
  TEST_CASE("lookup inverts enumeration") {
    const auto set = IndexSet::full(3, 4);
    for (int i = 0; i < set.size(); ++i) {
      CHECK(set.index_of(set[i]) == i);
      CHECK(set.contains(set[i]));
    }
  }

  TEST_CASE("membership respects norm and dimension") {
    const auto set = IndexSet::full(2, 3);
    CHECK(set.index_of(OccupationIndex({2, 2})) == -1);
    CHECK(set.index_of(OccupationIndex({1, 1, 1})) == -1);
    CHECK_FALSE(set.contains(OccupationIndex({4, 0})));
  }

  TEST_CASE("restricted sets remember their bound") {
    const OccupationIndex bound({2, 1});
    const auto set = IndexSet::restricted(2, bound);
    REQUIRE(set.bound().has_value());
    CHECK(*set.bound() == bound);
    CHECK(set.size() == 2);
    CHECK(set.contains(OccupationIndex({2, 0})));
    CHECK(set.contains(OccupationIndex({1, 1})));
    CHECK_FALSE(set.contains(OccupationIndex({0, 2})));
  }

  TEST_CASE("members are strictly descending") {
    const auto set = IndexSet::full(3, 5);
    for (int i = 1; i < set.size(); ++i) {
      CHECK(set[i - 1] > set[i]);
    }
  }
}
