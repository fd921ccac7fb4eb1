#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <set>

#include "fracpow/errors.hpp"
#include "fracpow/transversal.hpp"
#include "test_util.hpp"

using namespace fracpow;

namespace {

void check_valid_transversal(const SetFamily& f, const Transversal& t) {
  REQUIRE(t.assignment.size() == f.sets.size());
  std::set<int> chosen;
  for (std::size_t i = 0; i < f.sets.size(); ++i) {
    int x = t.assignment[i];
    CHECK(std::binary_search(f.sets[i].begin(), f.sets[i].end(), x));
    CHECK(chosen.insert(x).second);
  }
}

void check_valid_b_system(const SetFamily& f, const std::vector<std::vector<int>>& sys, int b) {
  REQUIRE(sys.size() == f.sets.size());
  std::set<int> chosen;
  for (std::size_t i = 0; i < sys.size(); ++i) {
    CHECK(static_cast<int>(sys[i].size()) == b);
    for (int x : sys[i]) {
      CHECK(std::binary_search(f.sets[i].begin(), f.sets[i].end(), x));
      CHECK(chosen.insert(x).second);
    }
  }
}

}  // namespace

TEST_CASE("two sets sharing one element have no transversal") {
  SetFamily f = make_set_family({{1}, {1}}, 2);
  CHECK(!find_transversal(f).has_value());
  auto violator = hall_violator(f, 1);
  REQUIRE(violator.has_value());
  CHECK(*violator == std::vector<int>{0, 1});
}

TEST_CASE("overlapping pair has a valid transversal") {
  SetFamily f = make_set_family({{1, 2}, {2, 3}}, 4);
  auto t = find_transversal(f);
  REQUIRE(t.has_value());
  check_valid_transversal(f, *t);
  CHECK(!hall_violator(f, 1).has_value());
}

TEST_CASE("b-transversal spec examples") {
  SetFamily disjoint = make_set_family({{1, 2}, {3, 4}}, 5);
  auto sys = find_b_transversal(disjoint, 2);
  REQUIRE(sys.has_value());
  check_valid_b_system(disjoint, *sys, 2);
  CHECK((*sys)[0] == std::vector<int>{1, 2});
  CHECK((*sys)[1] == std::vector<int>{3, 4});

  SetFamily tight = make_set_family({{1, 2, 3}, {1, 2, 3}}, 4);
  CHECK(!find_b_transversal(tight, 2).has_value());
  auto violator = hall_violator(tight, 2);
  REQUIRE(violator.has_value());
}

TEST_CASE("exhaustive agreement with brute force on tiny universes") {
  // All families with <= 3 sets over universe 4, sets as bitmasks.
  for (int count = 1; count <= 3; ++count) {
    std::vector<int> masks(count, 0);
    while (true) {
      std::vector<std::vector<int>> sets(count);
      for (int i = 0; i < count; ++i) {
        for (int x = 0; x < 4; ++x) {
          if (masks[i] & (1 << x)) sets[i].push_back(x);
        }
      }
      SetFamily f = make_set_family(std::move(sets), 4);
      CHECK(find_transversal(f).has_value() == testutil::brute_has_transversal(f));
      int at = count - 1;
      while (at >= 0 && masks[at] == 15) masks[at--] = 0;
      if (at < 0) break;
      ++masks[at];
    }
  }
}

TEST_CASE("randomised agreement with brute force, b = 1") {
  std::mt19937_64 rng(42);
  for (int trial = 0; trial < 20000; ++trial) {
    SetFamily f = testutil::random_family(rng, 5, 6, 5);
    bool expected = testutil::brute_has_transversal(f);
    auto got = find_transversal(f);
    CHECK(got.has_value() == expected);
    if (got) check_valid_transversal(f, *got);
  }
}

TEST_CASE("randomised agreement with brute force, b = 2") {
  std::mt19937_64 rng(43);
  for (int trial = 0; trial < 4000; ++trial) {
    SetFamily f = testutil::random_family(rng, 4, 8, 5);
    bool expected = testutil::brute_has_b_transversal(f, 2);
    auto got = find_b_transversal(f, 2);
    CHECK(got.has_value() == expected);
    if (got) check_valid_b_system(f, *got, 2);
  }
}

TEST_CASE("b = 1 flow route matches the augmenting-path route") {
  std::mt19937_64 rng(44);
  for (int trial = 0; trial < 5000; ++trial) {
    SetFamily f = testutil::random_family(rng, 5, 7, 4);
    CHECK(find_b_transversal(f, 1).has_value() == find_transversal(f).has_value());
  }
}

TEST_CASE("duality: violator exists exactly when the b-transversal fails") {
  std::mt19937_64 rng(45);
  for (int trial = 0; trial < 3000; ++trial) {
    SetFamily f = testutil::random_family(rng, 4, 6, 4);
    for (int b = 1; b <= 2; ++b) {
      auto sys = find_b_transversal(f, b);
      auto violator = hall_violator(f, b);
      CHECK(sys.has_value() != violator.has_value());
      if (violator) {
        // check the strict inequality directly
        std::set<int> uni;
        for (int i : *violator) {
          uni.insert(f.sets[i].begin(), f.sets[i].end());
        }
        CHECK(static_cast<int>(uni.size()) < b * static_cast<int>(violator->size()));
      }
    }
  }
}

TEST_CASE("monotonicity: augmenting sets never breaks solvability") {
  std::mt19937_64 rng(46);
  int solvable_seen = 0;
  for (int trial = 0; trial < 3000; ++trial) {
    SetFamily f = testutil::random_family(rng, 4, 6, 4);
    if (!find_transversal(f).has_value()) continue;
    ++solvable_seen;
    auto sets = f.sets;
    for (auto& s : sets) {
      s.push_back(static_cast<int>(rng() % 6));
    }
    SetFamily bigger = make_set_family(std::move(sets), 6);
    CHECK(find_transversal(bigger).has_value());
  }
  CHECK(solvable_seen > 100);
}

TEST_CASE("empty sets fail fast with a singleton violator") {
  SetFamily f = make_set_family({{0, 1}, {}, {2}}, 3);
  auto violator = hall_violator(f, 1);
  REQUIRE(violator.has_value());
  CHECK(*violator == std::vector<int>{1});
  CHECK(!find_transversal(f).has_value());
  CHECK(!find_b_transversal(f, 1).has_value());
}

TEST_CASE("determinism: the witness is a pure function of the family") {
  std::mt19937_64 rng(47);
  for (int trial = 0; trial < 200; ++trial) {
    SetFamily f = testutil::random_family(rng, 5, 7, 5);
    auto a = find_transversal(f);
    auto b = find_transversal(f);
    REQUIRE(a.has_value() == b.has_value());
    if (a) CHECK(a->assignment == b->assignment);
    auto sa = find_b_transversal(f, 2);
    auto sb = find_b_transversal(f, 2);
    REQUIRE(sa.has_value() == sb.has_value());
    if (sa) CHECK(*sa == *sb);
  }
}

TEST_CASE("family validation") {
  CHECK_THROWS_AS(make_set_family({{0, 5}}, 3), InvalidInput);
  CHECK_THROWS_AS(make_set_family({{-1}}, 3), InvalidInput);
  CHECK_THROWS_AS(find_b_transversal(make_set_family({{0}}, 1), 0), InvalidInput);
}
