#include <set>

#include "doctest.h"
#include "symtheta/error.hpp"
#include "symtheta/partition.hpp"

using namespace symtheta;

namespace {

// Every result of removing dominoes in every possible order.
void domino_closure(const std::vector<int>& p, std::set<std::vector<int>>& ends,
                    std::set<std::vector<int>>& seen) {
  if (!seen.insert(p).second) return;
  bool any = false;
  auto at = [&](std::size_t i) { return i < p.size() ? p[i] : 0; };
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p[i] - at(i + 1) >= 2) {
      auto q = p;
      q[i] -= 2;
      while (!q.empty() && q.back() == 0) q.pop_back();
      any = true;
      domino_closure(q, ends, seen);
    }
    if (i + 1 < p.size() && p[i] == p[i + 1] && p[i + 1] > at(i + 2)) {
      auto q = p;
      q[i] -= 1;
      q[i + 1] -= 1;
      while (!q.empty() && q.back() == 0) q.pop_back();
      any = true;
      domino_closure(q, ends, seen);
    }
  }
  if (!any) ends.insert(p);
}

}  // namespace

TEST_CASE("partition literal and canonical form") {
  CHECK(parse_partition("").empty());
  CHECK(parse_partition("3,1").parts() == std::vector<int>{3, 1});
  CHECK(Partition({2, 1, 0, 0}).parts() == std::vector<int>{2, 1});
  CHECK(Partition({3, 1}).size() == 4);
  CHECK_THROWS_AS(Partition({1, 2}), Error);
  CHECK_THROWS_AS(parse_partition("1,x"), Error);
  CHECK(to_string(Partition({3, 1})) == "3,1");
}

TEST_CASE("interleaving examples") {
  CHECK(interleaves(Partition{}, Partition{}));
  CHECK(interleaves(Partition({2}), Partition({2})));
  CHECK_FALSE(interleaves(Partition({3, 1}), Partition({2, 2})));
  CHECK(interleaves(Partition({2, 1}), Partition({3, 1})));
  CHECK_FALSE(interleaves(Partition({1, 1}), Partition({3})));
}

TEST_CASE("beta sets") {
  CHECK(beta_set_of(Partition{}, 3) == BetaSet({2, 1, 0}));
  CHECK(beta_set_of(Partition({2, 1}), 2) == BetaSet({3, 1}));
  CHECK(beta_set_of(Partition({2, 1}), 3) == BetaSet({4, 2, 0}));
  CHECK(partition_of_beta(BetaSet({2, 1, 0})).empty());
  CHECK(partition_of_beta(BetaSet({3, 1})) == Partition({2, 1}));
  CHECK(partition_of_beta(BetaSet({2})) == Partition({2}));
  CHECK_THROWS_AS(beta_set_of(Partition({1, 1, 1}), 2), Error);
  try {
    beta_set_of(Partition({1, 1, 1}), 2);
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::SlotsTooFew);
  }
  CHECK_THROWS_AS(BetaSet({1, 1}), Error);
  CHECK_THROWS_AS(BetaSet({-1}), Error);
  CHECK(BetaSet({0, 2, 1}).elements() == std::vector<int>{2, 1, 0});
}

TEST_CASE("2-core examples") {
  CHECK(two_core(Partition{}).empty());
  CHECK(two_core(Partition({2})).empty());
  CHECK(two_core(Partition({2, 1})) == Partition({2, 1}));
  CHECK(two_core(Partition({3, 3, 1})) == Partition({1}));
}

TEST_CASE("beta set round trips") {
  for (int n = 0; n <= 10; ++n)
    for (const auto& p : partitions_of(n))
      for (int slots = p.length(); slots <= p.length() + 3; ++slots) {
        BetaSet b = beta_set_of(p, slots);
        CHECK(b.size() == slots);
        CHECK(partition_of_beta(b) == p);
        CHECK(beta_set_of(partition_of_beta(b), b.size()) == b);
      }
}

TEST_CASE("interleaving is reflexive and bounded by size") {
  std::vector<Partition> all;
  for (int n = 0; n <= 12; ++n)
    for (auto& p : partitions_of(n)) all.push_back(p);
  for (const auto& a : all) {
    CHECK(interleaves(a, a));
    for (const auto& b : all)
      if (interleaves(a, b)) REQUIRE(a.size() <= b.size());
  }
}

TEST_CASE("2-core against domino removal") {
  for (int n = 0; n <= 20; ++n)
    for (const auto& p : partitions_of(n)) {
      Partition c = two_core(p);
      CHECK(is_staircase(c));
      CHECK((p.size() - c.size()) % 2 == 0);
      if (n <= 12) {
        std::set<std::vector<int>> ends, seen;
        domino_closure(p.parts(), ends, seen);
        REQUIRE(ends.size() == 1);
        CHECK(*ends.begin() == c.parts());
      }
    }
}

TEST_CASE("partition counts") {
  const int p[] = {1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42};
  for (int n = 0; n <= 10; ++n) CHECK(partitions_of(n).size() == static_cast<std::size_t>(p[n]));
  CHECK(bipartitions_of(2).size() == 5);
  CHECK(bipartitions_of(3).size() == 10);
}
