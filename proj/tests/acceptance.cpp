// One line per acceptance criterion; exit status 1 if any line fails.
#include <chrono>
#include <cstdio>
#include <functional>
#include <set>
#include <string>
#include <vector>

#include "symtheta/cuspidal_catalog.hpp"
#include "symtheta/verify.hpp"

using namespace symtheta;

namespace {

struct Outcome {
  bool pass = true;
  std::vector<std::string> notes;

  void add(const IdentityCount& c) {
    if (c.pass()) return;
    pass = false;
    notes.push_back(c.identity + ": " + std::to_string(c.failed) + "/" +
                    std::to_string(c.checked) + " failed; first: " + c.first_failure);
  }
  void add(const std::vector<IdentityCount>& v) {
    for (const auto& c : v) add(c);
  }
  void expect(bool ok, const std::string& what) {
    if (ok) return;
    pass = false;
    notes.push_back(what);
  }
};

int failures = 0;

void criterion(int id, const char* title, double limit_s, const std::function<void(Outcome&)>& body) {
  Outcome o;
  auto t0 = std::chrono::steady_clock::now();
  try {
    body(o);
  } catch (const std::exception& e) {
    o.pass = false;
    o.notes.push_back(std::string("exception: ") + e.what());
  }
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (limit_s > 0 && secs > limit_s) {
    o.pass = false;
    o.notes.push_back("runtime " + std::to_string(secs) + " s over limit");
  }
  std::printf("criterion %2d: %s  %s (%.2f s)\n", id, o.pass ? "PASS" : "FAIL", title, secs);
  for (const auto& n : o.notes) std::printf("    %s\n", n.c_str());
  if (!o.pass) ++failures;
}

bool is_square(int n) {
  for (int m = 0; m * m <= n; ++m)
    if (m * m == n) return true;
  return false;
}

}  // namespace

int main() {
  criterion(1, "cuspidal <=> delta = 0 <=> upsilon empty, rank <= 10", 5,
            [](Outcome& o) { o.add(check_cuspidality(10)); });

  criterion(2, "extremal delta classification, rank <= 8", 10, [](Outcome& o) {
    o.add(check_extremal_small(8));
    o.add(check_extremal_two(8));
  });

  criterion(3, "brute-force minimal partner = theta0, rank <= 8", 30, [](Outcome& o) {
    o.add(check_minimality_sp(8));
    o.add(check_minimality_orth(8));
  });

  criterion(4, "theta0 rank sums on Sp and even orthogonal symbols, rank <= 10", 5, [](Outcome& o) {
    o.add(check_sp_rank_sum(10));
    o.add(check_orth_rank_sum(10));
  });

  criterion(5, "unitary n0'+ + n0'- = 2n - 2 delta + 1, n <= 14, brute force", 60,
            [](Outcome& o) { o.add(check_unitary_preservation(14)); });

  criterion(6, "cuspidal classification by enumeration, rank <= 12", 0, [](Outcome& o) {
    const std::set<int> sp{0, 2, 6, 12};
    const std::set<int> tri{0, 1, 3, 6, 10};
    for (int n = 0; n <= 12; ++n) {
      auto s = unipotent_cuspidal_by_search({SeriesFamily::Sp, n}).count();
      o.expect(s == (sp.count(n) ? 1u : 0u), "Sp n=" + std::to_string(n) + " count " + std::to_string(s));
      for (auto f : {SeriesFamily::OEvenPlus, SeriesFamily::OEvenMinus}) {
        auto c = unipotent_cuspidal_by_search({f, n}).count();
        std::size_t want = 0;
        if (is_square(n)) {
          int m = 0;
          while (m * m < n) ++m;
          bool plus = m % 2 == 0;
          if (plus == (f == SeriesFamily::OEvenPlus)) want = m == 0 ? 1 : 2;
        }
        o.expect(c == want, std::string(to_string(f)) + " n=" + std::to_string(n) + " count " +
                                std::to_string(c));
      }
      auto u = unipotent_cuspidal_by_search({SeriesFamily::U, n}).count();
      o.expect(u == (tri.count(n) ? 1u : 0u), "U n=" + std::to_string(n) + " count " + std::to_string(u));
    }
    o.add(check_cuspidal_classification(12));
  });

  criterion(7, "cuspidal preservation sums (unitary, orthogonal, symplectic) and 2 dim + 2, m <= 3", 0,
            [](Outcome& o) {
              for (int m = 0; m <= 3; ++m)
                for (const auto& r : check_cuspidal_sums(m))
                  o.expect(r.pass, r.check + " " + r.parameters + " expected " + r.expected +
                                       " actual " + r.actual);
            });

  criterion(8, "generalized preservation, 500 samples per family, dim <= 12, 100+ oracle checks", 120,
            [](Outcome& o) {
              for (auto k : {PreservationKind::Unitary, PreservationKind::Orthogonal,
                             PreservationKind::SpEven, PreservationKind::SpOdd}) {
                auto v = check_general_preservation(k, 500, 100, 12, 42);
                o.add(v);
                for (const auto& c : v) o.expect(c.checked >= 100, c.identity + " too few instances");
              }
            });

  criterion(9, "pseudo-unipotent count and odd/even orthogonal first occurrences, m <= 3", 60,
            [](Outcome& o) { o.add(check_cuspidal_occurrences(3)); });

  criterion(10, "uniqueness of extremal characters, n <= 5", 0, [](Outcome& o) {
    o.add(check_unique_sp_even(5));
    o.add(check_unique_o_plus(5));
    o.add(check_unique_o_minus(5));
    o.add(check_unique_sp_odd(5));
  });

  std::printf("%d of 10 criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
