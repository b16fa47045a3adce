#include <algorithm>
#include <map>
#include <set>

#include "doctest.h"
#include "symtheta/error.hpp"
#include "symtheta/symbol.hpp"

using namespace symtheta;

namespace {

Symbol S(const char* lit) { return parse_symbol(lit); }

BetaSet from_mask(unsigned mask) {
  std::vector<int> e;
  for (int i = 0; mask; ++i, mask >>= 1)
    if (mask & 1u) e.push_back(i);
  return BetaSet(std::move(e));
}

// Normalized classes by rank, from every pair of subsets of {0..bound-1}.
std::map<int, std::set<Symbol>> exhaustive_classes(int bound, int max_rank) {
  std::map<int, std::set<Symbol>> out;
  unsigned lim = 1u << bound;
  for (unsigned a = 0; a < lim; ++a)
    for (unsigned b = 0; b < lim; ++b) {
      if ((a & 1u) && (b & 1u)) continue;  // both contain 0: not minimal
      Symbol s{from_mask(a), from_mask(b)};
      int r = rank(s);
      if (r <= max_rank) out[r].insert(s);
    }
  return out;
}

}  // namespace

TEST_CASE("symbol literal") {
  Symbol s = S("2,1,0|");
  CHECK(s.top == BetaSet({2, 1, 0}));
  CHECK(s.bottom.empty());
  CHECK(to_string(S("|2,1,0")) == "|2,1,0");
  CHECK(to_string(S("1,0|2")) == "1,0|2");
  CHECK(to_string(S("|")) == "|");
  CHECK_THROWS_AS(S("1,0"), Error);
  CHECK_THROWS_AS(S("1|0|1"), Error);
  CHECK_THROWS_AS(S("1,1|"), Error);
}

TEST_CASE("normalize examples") {
  CHECK(normalize(S("|")) == S("|"));
  CHECK(normalize(S("2,1,0|2,1,0")) == S("|"));
  CHECK(normalize(S("1,0|0")) == S("0|"));
  CHECK(equivalent(S("0|"), S("1,0|0")));
  CHECK_FALSE(equivalent(S("0|"), S("|0")));
  CHECK(equivalent(S("2,1,0|2,1,0"), S("|")));
}

TEST_CASE("rank defect delta examples") {
  CHECK(rank(S("|")) == 0);
  CHECK(rank(S("1,0|2")) == 2);
  CHECK(defect(S("2,1,0|")) == 3);
  CHECK(defect(S("|2,1,0")) == -3);
  CHECK(delta(S("1,0|2")) == 2);
  for (int n = 0; n <= 6; ++n)
    for (int k = 0; k <= n; ++k) {
      Symbol s{BetaSet({n - k + 1, 0}), BetaSet({k})};
      CHECK(rank(s) == n);
      CHECK(delta(s) == n);
      Bipartition u = upsilon(s);
      CHECK(u.upper == Partition({n - k}));
      CHECK(u.lower == Partition({k}));
    }
}

TEST_CASE("upsilon transpose cuspidal examples") {
  CHECK(upsilon(S("|2,1,0")).empty());
  CHECK(upsilon(S("1,0|2")).upper.empty());
  CHECK(upsilon(S("1,0|2")).lower == Partition({2}));
  CHECK(transpose(S("1,0|")) == S("|1,0"));
  CHECK(transpose(transpose(S("3,1|2"))) == S("3,1|2"));
  CHECK(is_cuspidal(S("|")));
  CHECK(is_cuspidal(S("|2,1,0")));
  CHECK_FALSE(is_cuspidal(S("1,0|2")));
}

TEST_CASE("series membership examples") {
  CHECK(series_contains({SeriesFamily::Sp, 2}, S("|2,1,0")));
  CHECK(series_contains({SeriesFamily::OEvenMinus, 1}, S("1,0|")));
  CHECK_FALSE(series_contains({SeriesFamily::OEvenPlus, 1}, S("1,0|")));
  CHECK_THROWS_AS(series_contains({SeriesFamily::U, 1}, S("|")), Error);
  CHECK_THROWS_AS(enumerate_series({SeriesFamily::U, 1}), Error);
}

TEST_CASE("series enumeration examples") {
  CHECK(enumerate_series({SeriesFamily::Sp, 0}) == std::vector<Symbol>{S("0|")});
  CHECK(enumerate_series({SeriesFamily::OEvenPlus, 0}) == std::vector<Symbol>{S("|")});
  // defect 1 over the 5 bipartitions of 2, plus the cuspidal of defect -3
  auto sp2 = enumerate_series({SeriesFamily::Sp, 2});
  CHECK(sp2.size() == 6);
  CHECK(std::find(sp2.begin(), sp2.end(), S("|2,1,0")) != sp2.end());
}

TEST_CASE("enumeration against exhaustive beta-set search") {
  const int max_rank = 4;
  auto classes = exhaustive_classes(10, max_rank);
  int widest = 0;
  for (int r = 0; r <= max_rank; ++r) {
    std::set<Symbol> by_rank(classes[r].begin(), classes[r].end());
    auto e = enumerate_rank(r);
    std::set<Symbol> mine(e.begin(), e.end());
    CHECK(mine.size() == e.size());
    CHECK(mine == by_rank);
    for (const auto& s : e) widest = std::max({widest, s.top.max(), s.bottom.max()});
    for (SeriesFamily f : {SeriesFamily::Sp, SeriesFamily::OEvenPlus, SeriesFamily::OEvenMinus}) {
      std::set<Symbol> expect;
      for (const auto& s : by_rank)
        if (mod(defect(s), 4) == defect_residue(f)) expect.insert(s);
      auto got = enumerate_series({f, r});
      CHECK(std::set<Symbol>(got.begin(), got.end()) == expect);
    }
  }
  // the search window is not what limits the search
  CHECK(widest <= 8);
}

TEST_CASE("statistics are shift invariant") {
  for (int r = 0; r <= 10; ++r)
    for (const auto& s : enumerate_rank(r)) {
      Symbol up{s.top.shifted(), s.bottom.shifted()};
      CHECK(rank(up) == rank(s));
      CHECK(defect(up) == defect(s));
      CHECK(delta(up) == delta(s));
      CHECK(upsilon(up).upper == upsilon(s).upper);
      CHECK(upsilon(up).lower == upsilon(s).lower);
      CHECK(normalize(up) == s);
      CHECK(delta(transpose(s)) == delta(s));
      CHECK(rank(s) == upsilon(s).size() + quarter_square(defect(s)));
      bool c = is_cuspidal(s);
      CHECK(c == (delta(s) == 0));
      CHECK(c == upsilon(s).empty());
      CHECK(symbol_with(upsilon(s), defect(s)) == s);
    }
}

TEST_CASE("series lists are duplicate free and in order") {
  for (int r = 0; r <= 8; ++r)
    for (SeriesFamily f : {SeriesFamily::Sp, SeriesFamily::OEvenPlus, SeriesFamily::OEvenMinus}) {
      auto v = enumerate_series({f, r});
      std::set<Symbol> uniq(v.begin(), v.end());
      CHECK(uniq.size() == v.size());
      for (const auto& s : v) {
        CHECK(series_contains({f, r}, s));
        CHECK(normalize(s) == s);
      }
      for (std::size_t i = 1; i < v.size(); ++i)
        CHECK(defect(v[i - 1]) <= defect(v[i]));
    }
}

TEST_CASE("extremal delta lists") {
  auto small1 = extremal_delta_symbols(1, DefectClass::Small);
  for (const char* lit : {"1|0", "0|1", "2,0|0"})
    CHECK(std::find(small1.begin(), small1.end(), normalize(S(lit))) != small1.end());
  auto two1 = extremal_delta_symbols(1, DefectClass::PlusMinusTwo);
  CHECK(two1 == std::vector<Symbol>{normalize(S("0|2,1,0")), normalize(S("2,1,0|0"))});
  auto small0 = extremal_delta_symbols(0, DefectClass::Small);
  for (const auto& s : small0) CHECK(delta(s) == 0);
  CHECK(std::find(small0.begin(), small0.end(), S("0|")) != small0.end());
  CHECK_THROWS_AS(extremal_delta_symbols(0, DefectClass::PlusMinusTwo), Error);
}

TEST_CASE("extremal delta lists match exhaustive maximizers") {
  for (int n = 0; n <= 6; ++n) {
    auto all = enumerate_rank(n);
    int best = 0, best2 = -1;
    for (const auto& s : all) {
      best = std::max(best, delta(s));
      if (std::abs(defect(s)) == 2) best2 = std::max(best2, delta(s));
    }
    CHECK(best == n);
    std::vector<Symbol> arg, arg2;
    for (const auto& s : all) {
      if (delta(s) == best) arg.push_back(s);
      if (std::abs(defect(s)) == 2 && delta(s) == best2) arg2.push_back(s);
    }
    std::sort(arg.begin(), arg.end());
    auto want = extremal_delta_symbols(n, DefectClass::Small);
    std::sort(want.begin(), want.end());
    CHECK(arg == want);
    if (n >= 1) {
      CHECK(best2 == n - 1);
      std::sort(arg2.begin(), arg2.end());
      auto want2 = extremal_delta_symbols(n, DefectClass::PlusMinusTwo);
      std::sort(want2.begin(), want2.end());
      CHECK(arg2 == want2);
    }
  }
}

TEST_CASE("unitary symbols") {
  CHECK(symbol_from_partition(Partition{}) == S("|"));
  CHECK(upsilon(symbol_from_partition(Partition({2, 1}))).empty());
  CHECK(upsilon(symbol_from_partition(Partition({2}))).size() == 1);
  std::set<Symbol> seen;
  for (int n = 0; n <= 16; ++n) {
    int cusp = 0;
    for (const auto& p : partitions_of(n)) {
      Symbol s = symbol_from_partition(p);
      CHECK(p.size() == two_core(p).size() + 2 * upsilon(s).size());
      CHECK(seen.insert(s).second);
      Partition back;
      REQUIRE(partition_from_symbol(s, back));
      CHECK(back == p);
      int t = 0;
      REQUIRE(core_length_of_defect(defect(s), t));
      CHECK(std::max(t, 0) == two_core(p).length());
      if (is_cuspidal(s)) ++cusp;
    }
    if (n <= 15) {
      bool tri = n == 0 || n == 1 || n == 3 || n == 6 || n == 10 || n == 15;
      CHECK(cusp == (tri ? 1 : 0));
    }
  }
}
