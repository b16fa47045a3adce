#include "symtheta/verify.hpp"

#include <algorithm>
#include <functional>
#include <map>

#include "symtheta/character_model.hpp"
#include "symtheta/cuspidal_catalog.hpp"
#include "symtheta/error.hpp"
#include "symtheta/theta_unipotent.hpp"

namespace symtheta {

void IdentityCount::record(bool ok, const std::string& detail) {
  ++checked;
  if (ok) return;
  if (failed == 0) first_failure = detail;
  ++failed;
}

bool SuiteReport::pass() const {
  return std::all_of(items.begin(), items.end(), [](const auto& i) { return i.pass(); });
}

namespace {

const SeriesFamily kEven[] = {SeriesFamily::Sp, SeriesFamily::OEvenPlus, SeriesFamily::OEvenMinus};
const SeriesFamily kOrth[] = {SeriesFamily::OEvenPlus, SeriesFamily::OEvenMinus};

std::string sym(const Symbol& s) { return to_string(s); }

std::vector<Symbol> sorted(std::vector<Symbol> v) {
  std::sort(v.begin(), v.end());
  return v;
}

GeneralCharacter unipotent_sp(const Symbol& l2) {
  GeneralCharacter c;
  c.family = CharFamily::Sp;
  c.n = rank(l2);
  c.lambda1 = Symbol{};
  c.lambda2 = normalize(l2);
  return c;
}

GeneralCharacter unipotent_oeven(const Symbol& l2) {
  GeneralCharacter c;
  c.family = CharFamily::OEven;
  c.n = rank(l2);
  c.eps = orth_sign(l2);
  c.lambda1 = Symbol{};
  c.lambda2 = normalize(l2);
  return c;
}

std::string list_of(const std::vector<GeneralCharacter>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size() && i < 4; ++i) s += (i ? "; " : "") + describe(v[i]);
  if (v.size() > 4) s += "; ...";
  return s;
}

// Groups characters by a pair of first occurrences, then checks each
// predicted pair has exactly the predicted character.
void uniqueness(IdentityCount& out, int n, const std::vector<GeneralCharacter>& chars,
                const std::function<std::pair<int, int>(const GeneralCharacter&)>& key,
                const std::vector<std::pair<std::pair<int, int>, GeneralCharacter>>& predicted,
                int min_sum) {
  std::map<std::pair<int, int>, std::vector<GeneralCharacter>> by_key;
  bool below = false;
  std::string below_detail;
  for (const auto& c : chars) {
    auto k = key(c);
    if (k.first + k.second < min_sum && !below) {
      below = true;
      below_detail = describe(c);
    }
    by_key[k].push_back(c);
  }
  out.record(!below, "n=" + std::to_string(n) + " sum below bound: " + below_detail);
  for (const auto& [k, want] : predicted) {
    const auto& got = by_key[k];
    bool ok = got.size() == 1 && got[0] == want;
    out.record(ok, "n=" + std::to_string(n) + " pair (" + std::to_string(k.first) + "," +
                       std::to_string(k.second) + ") expected " + describe(want) + ", found " +
                       std::to_string(got.size()) + ": " + list_of(got));
  }
}

}  // namespace

IdentityCount check_cuspidality(int max_rank) {
  IdentityCount c{"cuspidal <=> delta = 0 <=> upsilon empty"};
  for (int r = 0; r <= max_rank; ++r)
    for (auto f : kEven)
      for (const auto& s : series_cached({f, r})) {
        bool a = is_cuspidal(s), b = delta(s) == 0, e = upsilon(s).empty();
        c.record(a == b && b == e, sym(s));
      }
  return c;
}

IdentityCount check_extremal_small(int max_rank) {
  IdentityCount c{"max delta = n, maximizers = closed list (defect 0, +-1)"};
  for (int n = 0; n <= max_rank; ++n) {
    auto all = enumerate_rank(n);
    int best = 0;
    for (const auto& s : all) best = std::max(best, delta(s));
    std::vector<Symbol> arg;
    for (const auto& s : all)
      if (delta(s) == best) arg.push_back(s);
    c.record(best == n, "n=" + std::to_string(n) + " max delta " + std::to_string(best));
    c.record(sorted(arg) == sorted(extremal_delta_symbols(n, DefectClass::Small)),
             "n=" + std::to_string(n) + " maximizer set differs");
  }
  return c;
}

IdentityCount check_extremal_two(int max_rank) {
  IdentityCount c{"max delta = n - 1 on defect +-2, maximizers = closed list"};
  for (int n = 1; n <= max_rank; ++n) {
    std::vector<Symbol> two;
    for (const auto& s : enumerate_rank(n))
      if (std::abs(defect(s)) == 2) two.push_back(s);
    int best = -1;
    for (const auto& s : two) best = std::max(best, delta(s));
    std::vector<Symbol> arg;
    for (const auto& s : two)
      if (delta(s) == best) arg.push_back(s);
    c.record(best == n - 1, "n=" + std::to_string(n) + " max delta " + std::to_string(best));
    c.record(sorted(arg) == sorted(extremal_delta_symbols(n, DefectClass::PlusMinusTwo)),
             "n=" + std::to_string(n) + " maximizer set differs");
  }
  return c;
}

IdentityCount check_sp_rank_sum(int max_rank) {
  IdentityCount c{"rk theta0+ + rk theta0- = 2 rk - delta + 1 on Sp symbols"};
  for (int r = 0; r <= max_rank; ++r)
    for (const auto& s : series_cached({SeriesFamily::Sp, r}))
      c.record(rank(theta_zero_sp(s, Sign::Plus)) + rank(theta_zero_sp(s, Sign::Minus)) ==
                   2 * r - delta(s) + 1,
               sym(s));
  return c;
}

IdentityCount check_orth_rank_sum(int max_rank) {
  IdentityCount c{"rk theta0(s) + rk theta0(s^t) = 2 rk - delta on even orthogonal symbols"};
  for (int r = 0; r <= max_rank; ++r)
    for (auto f : kOrth)
      for (const auto& s : series_cached({f, r}))
        c.record(rank(theta_zero_orth(s)) + rank(theta_zero_orth(transpose(s))) ==
                     2 * r - delta(s),
                 sym(s));
  return c;
}

IdentityCount check_minimality_sp(int max_rank) {
  IdentityCount c{"brute-force minimal O^eps partner = theta0^eps (class and rank)"};
  for (int r = 0; r <= max_rank; ++r)
    for (const auto& s : series_cached({SeriesFamily::Sp, r}))
      for (auto t : {TargetFamily::OEvenPlus, TargetFamily::OEvenMinus}) {
        auto b = first_occurrence_bruteforce(s, t);
        auto k = first_occurrence_closed(s, t);
        c.record(b.witnesses.size() == 1 && b.partner == k.partner &&
                     b.partner_series == k.partner_series,
                 sym(s) + " -> " + sym(b.partner) + " vs " + sym(k.partner));
      }
  return c;
}

IdentityCount check_minimality_orth(int max_rank) {
  IdentityCount c{"brute-force minimal Sp partner = theta0 (class and rank)"};
  for (int r = 0; r <= max_rank; ++r)
    for (auto f : kOrth)
      for (const auto& s : series_cached({f, r})) {
        auto b = first_occurrence_bruteforce(s, TargetFamily::Sp);
        auto k = first_occurrence_closed(s, TargetFamily::Sp);
        c.record(b.witnesses.size() == 1 && b.partner == k.partner &&
                     b.partner_series == k.partner_series,
                 sym(s) + " -> " + sym(b.partner) + " vs " + sym(k.partner));
      }
  return c;
}

IdentityCount check_weil_pairs(int max_rank) {
  IdentityCount c{"Weil pairs: relation holds, no duplicates, partner series correct"};
  for (int n = 0; n <= max_rank; ++n)
    for (int m = 0; m <= max_rank; ++m)
      for (Sign e : {Sign::Plus, Sign::Minus}) {
        auto pairs = weil_pairs(n, e, m);
        auto uniq = pairs;
        std::sort(uniq.begin(), uniq.end());
        uniq.erase(std::unique(uniq.begin(), uniq.end()), uniq.end());
        bool ok = uniq.size() == pairs.size();
        std::size_t count = 0;
        for (const auto& a : series_cached({SeriesFamily::Sp, n}))
          for (const auto& b : enumerate_rank(m))
            if (mod(defect(b), 2) == 0 && in_b_relation(a, b, e) &&
                defect(b) == -defect(a) + to_int(e)) {
              ++count;
              ok = ok && series_contains({e == Sign::Plus ? SeriesFamily::OEvenPlus
                                                          : SeriesFamily::OEvenMinus, m}, b);
            }
        ok = ok && count == pairs.size();
        c.record(ok, "n=" + std::to_string(n) + " n'=" + std::to_string(m) + " eps=" + to_string(e));
      }
  return c;
}

IdentityCount check_weil_pairs_unitary(int max_n) {
  IdentityCount c{"unitary Weil pairs use the branch fixed by the parity of n + n'"};
  for (int n = 0; n <= max_n; ++n)
    for (int m = 0; m <= max_n; ++m) {
      bool ok = true;
      try {
        weil_pairs_unitary(n, m);
      } catch (const Error&) {
        ok = false;
      }
      c.record(ok, "n=" + std::to_string(n) + " n'=" + std::to_string(m));
    }
  return c;
}

IdentityCount check_unitary_rank_sum(int max_n) {
  IdentityCount c{"rk theta0+ + rk theta0- = 2 rk - delta + [def odd] on unitary symbols"};
  for (int n = 0; n <= max_n; ++n)
    for (const auto& p : partitions_of(n)) {
      Symbol s = symbol_from_partition(p);
      c.record(rank(theta_zero(s, Sign::Plus)) + rank(theta_zero(s, Sign::Minus)) ==
                   2 * rank(s) - delta(s) + (mod(defect(s), 2) ? 1 : 0),
               to_string(p));
    }
  return c;
}

IdentityCount check_unitary_closed_form(int max_n) {
  IdentityCount c{"unitary brute-force first occurrence = theta0 closed form"};
  for (int n = 0; n <= max_n; ++n)
    for (const auto& p : partitions_of(n))
      for (auto t : {TargetFamily::UEven, TargetFamily::UOdd}) {
        auto b = first_occurrence_unitary(p, t);
        c.record(b.dimension == first_occurrence_unitary_closed(p, t), to_string(p));
      }
  return c;
}

IdentityCount check_unitary_preservation(int max_n) {
  IdentityCount c{"n0'+ + n0'- = 2n - 2 delta + 1 (unitary, brute force)"};
  for (int n = 0; n <= max_n; ++n)
    for (const auto& p : partitions_of(n)) {
      auto s = preservation_sum_unitary(p);
      c.record(s.holds(), to_string(p) + " lhs " + std::to_string(s.lhs) + " rhs " +
                              std::to_string(s.rhs));
    }
  return c;
}

IdentityCount check_cuspidal_classification(int max_rank) {
  IdentityCount c{"cuspidal classification: closed form = enumeration"};
  for (int n = 0; n <= max_rank; ++n)
    for (auto f : {SeriesFamily::Sp, SeriesFamily::OEvenPlus, SeriesFamily::OEvenMinus, SeriesFamily::U}) {
      auto a = unipotent_cuspidal({f, n});
      auto b = unipotent_cuspidal_by_search({f, n});
      c.record(a.symbols == b.symbols && a.partitions == b.partitions,
               std::string(to_string(f)) + " n=" + std::to_string(n) + " closed " +
                   std::to_string(a.count()) + " search " + std::to_string(b.count()));
    }
  return c;
}

std::vector<IdentityCount> check_general_preservation(PreservationKind kind, int samples,
                                                      int oracle_samples, int max_dim,
                                                      std::uint64_t seed) {
  struct Plan {
    CharFamily family;
    SpType type;
    std::vector<CharTarget> targets;
    const char* tag;
  };
  std::vector<Plan> plans;
  switch (kind) {
    case PreservationKind::Unitary:
      plans.push_back({CharFamily::Unitary, SpType::EvenTargets,
                       {CharTarget::UEven, CharTarget::UOdd}, "u"});
      break;
    case PreservationKind::Orthogonal:
      plans.push_back({CharFamily::OEven, SpType::EvenTargets, {CharTarget::Sp}, "o-even"});
      plans.push_back({CharFamily::OOdd, SpType::EvenTargets, {CharTarget::Sp}, "o-odd"});
      break;
    case PreservationKind::SpEven:
      plans.push_back({CharFamily::Sp, SpType::EvenTargets,
                       {CharTarget::OEvenPlus, CharTarget::OEvenMinus}, "sp-even"});
      break;
    case PreservationKind::SpOdd:
      plans.push_back({CharFamily::Sp, SpType::OddTargets,
                       {CharTarget::OOdd, CharTarget::OOddC}, "sp-odd"});
      break;
  }
  std::vector<IdentityCount> out;
  for (const auto& p : plans) {
    IdentityCount sum{std::string("preservation sum (") + p.tag + ")"};
    IdentityCount oracle{std::string("closed form = corresponds-scan oracle (") + p.tag + ")"};
    IdentityCount twist{std::string("delta invariant under twist (") + p.tag + ")"};
    for (int i = 0; i < samples; ++i) {
      auto rho = sample_character(p.family, max_dim, seed, p.tag, static_cast<std::uint64_t>(i));
      auto s = preservation_sum_general(rho, p.type);
      sum.record(s.holds(), describe(rho) + " lhs " + std::to_string(s.lhs) + " rhs " +
                                std::to_string(s.rhs));
      if (p.family == CharFamily::OEven || p.family == CharFamily::OOdd)
        twist.record(delta_char(sgn_twist(rho)) == delta_char(rho), describe(rho));
      if (p.family == CharFamily::Sp)
        twist.record(delta_char(c_twist(rho), p.type) == delta_char(rho, p.type), describe(rho));
      if (p.type == SpType::OddTargets) {
        auto w = odd_witt_split(rho);
        twist.record(w.n_plus + w.n_minus == s.rhs, "odd Witt split " + describe(rho));
      }
      if (i < oracle_samples)
        for (auto t : p.targets) {
          int closed = first_occurrence_general(rho, t);
          int brute = first_occurrence_oracle(rho, t).dimension;
          oracle.record(closed == brute, describe(rho) + " target " + to_string(t) + " closed " +
                                             std::to_string(closed) + " oracle " +
                                             std::to_string(brute));
        }
    }
    out.push_back(sum);
    out.push_back(oracle);
    if (twist.checked) out.push_back(twist);
  }
  return out;
}

std::vector<IdentityCount> check_cuspidal_occurrences(int max_m) {
  auto absorb = [](IdentityCount& c, const std::vector<CheckReport>& reps) {
    for (const auto& r : reps)
      c.record(r.pass, r.check + " " + r.parameters + " expected " + r.expected + " actual " + r.actual);
  };
  IdentityCount count{"two pseudo-unipotent cuspidals of Sp_2m^2, swapped by c-twist"};
  IdentityCount even{"pseudo-unipotent cuspidal: even orthogonal first occurrences"};
  IdentityCount odd_u{"unipotent cuspidal: odd orthogonal first occurrence"};
  IdentityCount odd_p{"pseudo-unipotent cuspidal: odd orthogonal first occurrences"};
  IdentityCount sums{"cuspidal preservation sums"};
  for (int m = 0; m <= max_m; ++m) {
    absorb(count, check_pseudo_unipotent_count(m));
    if (m >= 1) absorb(even, check_pseudo_even_orthogonal(m));
    absorb(odd_u, check_unipotent_odd_orthogonal(m));
    if (m >= 1) absorb(odd_p, check_pseudo_odd_orthogonal(m));
    absorb(sums, check_cuspidal_sums(m));
  }
  return {count, even, odd_u, odd_p, sums};
}

IdentityCount check_unique_sp_even(int max_n) {
  IdentityCount c{"unique character occurring for (Sp_2n, O+_2k) and (Sp_2n, O-_2(n-k)+2)"};
  for (int n = 0; n <= max_n; ++n) {
    auto chars = all_characters(CharFamily::Sp, n, Sign::Plus, {"a", "b"});
    std::vector<std::pair<std::pair<int, int>, GeneralCharacter>> pred;
    for (int k = 0; k <= n; ++k)
      pred.push_back({{2 * k, 2 * (n - k) + 2},
                      unipotent_sp(Symbol{BetaSet({n - k + 1, 0}), BetaSet({k})})});
    uniqueness(c, n, chars,
               [](const GeneralCharacter& r) {
                 return std::pair{first_occurrence_general(r, CharTarget::OEvenPlus),
                                  first_occurrence_general(r, CharTarget::OEvenMinus)};
               },
               pred, 2 * n + 2);
  }
  return c;
}

IdentityCount check_unique_o_plus(int max_n) {
  IdentityCount c{"O+_2n: n' + n'' >= n, unique character (n-k | k) at each split"};
  for (int n = 0; n <= max_n; ++n) {
    auto chars = all_characters(CharFamily::OEven, n, Sign::Plus, {"a", "b"});
    std::vector<std::pair<std::pair<int, int>, GeneralCharacter>> pred;
    for (int k = 0; k <= n; ++k)
      pred.push_back({{k, n - k}, unipotent_oeven(Symbol{BetaSet({n - k}), BetaSet({k})})});
    uniqueness(c, n, chars,
               [](const GeneralCharacter& r) {
                 return std::pair{first_occurrence_general(r, CharTarget::Sp) / 2,
                                  first_occurrence_general(sgn_twist(r), CharTarget::Sp) / 2};
               },
               pred, n);
  }
  return c;
}

IdentityCount check_unique_o_minus(int max_n) {
  IdentityCount c{"O-_2n: n' + n'' >= n + 1, unique character (k | n-k+1,1,0) at each split"};
  for (int n = 1; n <= max_n; ++n) {
    auto chars = all_characters(CharFamily::OEven, n, Sign::Minus, {"a", "b"});
    std::vector<std::pair<std::pair<int, int>, GeneralCharacter>> pred;
    for (int k = 0; k <= n - 1; ++k)
      pred.push_back({{k, n - k + 1},
                      unipotent_oeven(Symbol{BetaSet({k}), BetaSet({n - k + 1, 1, 0})})});
    uniqueness(c, n, chars,
               [](const GeneralCharacter& r) {
                 return std::pair{first_occurrence_general(r, CharTarget::Sp) / 2,
                                  first_occurrence_general(sgn_twist(r), CharTarget::Sp) / 2};
               },
               pred, n + 1);
  }
  return c;
}

IdentityCount check_unique_sp_odd(int max_n) {
  IdentityCount c{"unique character first occurring at O_2k+1 with its c-twist at O_2(n-k)+1"};
  for (int n = 0; n <= max_n; ++n) {
    auto chars = all_characters(CharFamily::Sp, n, Sign::Plus, {"a", "b"});
    std::vector<std::pair<std::pair<int, int>, GeneralCharacter>> pred;
    for (int k = 0; k <= n; ++k) {
      GeneralCharacter g;
      g.family = CharFamily::Sp;
      g.n = n;
      g.lambda1 = normalize(Symbol{BetaSet({n - k}), BetaSet({k})});
      g.lambda2 = Symbol{BetaSet({0}), {}};
      pred.push_back({{2 * k + 1, 2 * (n - k) + 1}, g});
    }
    uniqueness(c, n, chars,
               [](const GeneralCharacter& r) {
                 return std::pair{first_occurrence_general(r, CharTarget::OOdd),
                                  first_occurrence_general(r, CharTarget::OOddC)};
               },
               pred, 2 * n + 2);
  }
  return c;
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{
      "symbol-lemmas",        "unipotent-theta",  "preservation-u",
      "preservation-o",       "preservation-sp-even", "preservation-sp-odd",
      "cuspidal-catalog",     "uniqueness"};
  return names;
}

SuiteReport run_suite(std::string_view name, int max_rank, std::uint64_t seed) {
  SuiteReport r{std::string(name), {}};
  auto add = [&](std::vector<IdentityCount> v) {
    r.items.insert(r.items.end(), v.begin(), v.end());
  };
  if (name == "symbol-lemmas") {
    add({check_cuspidality(max_rank), check_extremal_small(max_rank), check_extremal_two(max_rank),
         check_sp_rank_sum(max_rank), check_orth_rank_sum(max_rank)});
  } else if (name == "unipotent-theta") {
    int small = std::min(max_rank, 7);
    add({check_minimality_sp(max_rank), check_minimality_orth(max_rank),
         check_weil_pairs(std::min(max_rank, 5)), check_weil_pairs_unitary(small),
         check_unitary_rank_sum(max_rank), check_unitary_closed_form(std::min(max_rank, 10)),
         check_unitary_preservation(max_rank)});
  } else if (name == "preservation-u") {
    add(check_general_preservation(PreservationKind::Unitary, 500, 100, max_rank, seed));
  } else if (name == "preservation-o") {
    add(check_general_preservation(PreservationKind::Orthogonal, 500, 100, max_rank, seed));
  } else if (name == "preservation-sp-even") {
    add(check_general_preservation(PreservationKind::SpEven, 500, 100, max_rank, seed));
  } else if (name == "preservation-sp-odd") {
    add(check_general_preservation(PreservationKind::SpOdd, 500, 100, max_rank, seed));
  } else if (name == "cuspidal-catalog") {
    add({check_cuspidal_classification(max_rank)});
    add(check_cuspidal_occurrences(max_rank >= 12 ? 3 : 2));
  } else if (name == "uniqueness") {
    int n = std::min(max_rank, 5);
    add({check_unique_sp_even(n), check_unique_o_plus(n), check_unique_o_minus(n),
         check_unique_sp_odd(n)});
  } else {
    throw Error(ErrorKind::Parse, "unknown suite '" + std::string(name) + "'");
  }
  return r;
}

}  // namespace symtheta
