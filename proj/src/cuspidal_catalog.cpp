#include "symtheta/cuspidal_catalog.hpp"

#include <algorithm>
#include <set>

#include "symtheta/error.hpp"
#include "symtheta/theta_unipotent.hpp"

namespace symtheta {

namespace {

BetaSet staircase(int len) {
  std::vector<int> e;
  for (int i = len - 1; i >= 0; --i) e.push_back(i);
  return BetaSet(std::move(e));
}

// m with m * (m + step) == n, or -1.
int root_of(int n, int step) {
  for (int m = 0; m * (m + step) <= n; ++m)
    if (m * (m + step) == n) return m;
  return -1;
}

std::string str(long v) { return std::to_string(v); }

std::string set_string(std::vector<int> v) {
  std::sort(v.begin(), v.end());
  std::string s = "{";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s + "}";
}

CheckReport report(std::string check, std::string params, std::string expected,
                   std::string actual) {
  bool pass = expected == actual;
  return {std::move(check), std::move(params), std::move(expected), std::move(actual), pass};
}

std::string param_m(int m) { return "m=" + std::to_string(m); }

}  // namespace

CuspidalRecord unipotent_cuspidal(const SeriesTag& g) {
  CuspidalRecord r{g, {}, {}};
  const int n = g.rank;
  switch (g.family) {
    case SeriesFamily::Sp: {
      int m = root_of(n, 1);
      if (m < 0) break;
      BetaSet st = staircase(2 * m + 1);
      r.symbols.push_back(m % 2 == 0 ? Symbol{st, {}} : Symbol{{}, st});
      break;
    }
    case SeriesFamily::OEvenPlus:
    case SeriesFamily::OEvenMinus: {
      int m = root_of(n, 0);
      if (m < 0) break;
      bool plus = g.family == SeriesFamily::OEvenPlus;
      if (plus != (m % 2 == 0)) break;
      if (m == 0) {
        r.symbols.push_back(Symbol{});
        break;
      }
      BetaSet st = staircase(2 * m);
      r.symbols.push_back(Symbol{{}, st});
      r.symbols.push_back(Symbol{st, {}});
      break;
    }
    case SeriesFamily::U: {
      int m = 0;
      while (m * (m + 1) / 2 < n) ++m;
      if (m * (m + 1) / 2 != n) break;
      std::vector<int> parts;
      for (int i = m; i >= 1; --i) parts.push_back(i);
      r.partitions.emplace_back(parts);
      r.symbols.push_back(symbol_from_partition(r.partitions.back()));
      break;
    }
  }
  std::sort(r.symbols.begin(), r.symbols.end());
  return r;
}

CuspidalRecord unipotent_cuspidal_by_search(const SeriesTag& g) {
  CuspidalRecord r{g, {}, {}};
  if (g.family == SeriesFamily::U) {
    for (const auto& p : partitions_of(g.rank)) {
      Symbol s = symbol_from_partition(p);
      if (is_cuspidal(s)) {
        r.partitions.push_back(p);
        r.symbols.push_back(s);
      }
    }
  } else {
    for (const auto& s : series_cached(g))
      if (is_cuspidal(s)) r.symbols.push_back(s);
  }
  std::sort(r.symbols.begin(), r.symbols.end());
  return r;
}

std::vector<GeneralCharacter> pseudo_unipotent_cuspidal_sp(int n) {
  std::vector<GeneralCharacter> out;
  int m = root_of(n, 0);
  if (m < 0) return out;
  SeriesTag g{m % 2 == 0 ? SeriesFamily::OEvenPlus : SeriesFamily::OEvenMinus, n};
  for (const auto& s : unipotent_cuspidal(g).symbols) {
    GeneralCharacter c;
    c.family = CharFamily::Sp;
    c.n = n;
    c.lambda1 = s;
    c.lambda2 = Symbol{BetaSet({0}), {}};
    out.push_back(c);
  }
  return out;
}

std::vector<CheckReport> check_pseudo_unipotent_count(int m) {
  std::vector<CheckReport> out;
  const int n = m * m;
  auto chars = pseudo_unipotent_cuspidal_sp(n);
  // independent count: cuspidal even orthogonal symbols of the right sign
  int found = 0;
  for (auto f : {SeriesFamily::OEvenPlus, SeriesFamily::OEvenMinus})
    for (const auto& s : series_cached({f, n}))
      if (is_cuspidal(s) && (n == 0 || !(s == Symbol{}))) ++found;
  out.push_back(report("pseudo-unipotent-count", param_m(m), str(m == 0 ? 1 : 2), str(found)));
  out.push_back(report("pseudo-unipotent-closed-form", param_m(m), str(found), str(chars.size())));
  bool swapped = chars.size() == 2 && c_twist(chars[0]) == chars[1] && c_twist(chars[1]) == chars[0];
  bool fixed = chars.size() == 1 && c_twist(chars[0]) == chars[0];
  out.push_back(report("pseudo-unipotent-c-twist", param_m(m), "true",
                       (m == 0 ? fixed : swapped) ? "true" : "false"));
  bool cusp = std::all_of(chars.begin(), chars.end(), [](const auto& c) { return is_cuspidal(c); });
  out.push_back(report("pseudo-unipotent-cuspidal", param_m(m), "true", cusp ? "true" : "false"));
  return out;
}

std::vector<CheckReport> check_pseudo_even_orthogonal(int m) {
  if (m < 1) throw Error(ErrorKind::AssertionFailure, "m must be positive");
  std::vector<CheckReport> out;
  const int base = 2 * m * m;
  const Sign low = m % 2 == 0 ? Sign::Plus : Sign::Minus;
  for (const auto& rho : pseudo_unipotent_cuspidal_sp(m * m)) {
    const std::string p = param_m(m) + " lambda1=" + to_string(rho.lambda1);
    auto plus = first_occurrence_oracle(rho, CharTarget::OEvenPlus);
    auto minus = first_occurrence_oracle(rho, CharTarget::OEvenMinus);
    out.push_back(report("even-orthogonal-first-occurrence", p,
                         set_string({base, base + 2}),
                         set_string({plus.dimension, minus.dimension})));
    const auto& at_low = low == Sign::Plus ? plus : minus;
    bool pseudo = at_low.dimension == base && !at_low.witnesses.empty() &&
                  std::all_of(at_low.witnesses.begin(), at_low.witnesses.end(), [](const auto& w) {
                    return w.d0() == 0 && *w.lambda2 == Symbol{} && is_cuspidal(w.lambda1);
                  });
    out.push_back(report("even-orthogonal-partner-pseudo-unipotent", p, "true",
                         pseudo ? "true" : "false"));
    int closed_p = first_occurrence_general(rho, CharTarget::OEvenPlus);
    int closed_m = first_occurrence_general(rho, CharTarget::OEvenMinus);
    out.push_back(report("even-orthogonal-closed-form", p,
                         set_string({plus.dimension, minus.dimension}),
                         set_string({closed_p, closed_m})));
  }
  return out;
}

std::vector<CheckReport> check_unipotent_odd_orthogonal(int m) {
  std::vector<CheckReport> out;
  const int n = m * (m + 1);
  GeneralCharacter rho;
  rho.family = CharFamily::Sp;
  rho.n = n;
  rho.lambda1 = Symbol{};
  rho.lambda2 = unipotent_cuspidal({SeriesFamily::Sp, n}).symbols.at(0);
  const std::string p = param_m(m);
  auto o = first_occurrence_oracle(rho, CharTarget::OOdd);
  out.push_back(report("odd-orthogonal-first-occurrence", p, str(2 * n + 1), str(o.dimension)));
  bool pseudo = !o.witnesses.empty() &&
                std::all_of(o.witnesses.begin(), o.witnesses.end(), [&](const auto& w) {
                  return w.d0() == 0 && is_cuspidal(w) && *w.lambda2 == Symbol{BetaSet({0}), {}} &&
                         w.lambda1 == *rho.lambda2;
                });
  out.push_back(report("odd-orthogonal-partner-pseudo-unipotent-cuspidal", p, "true",
                       pseudo ? "true" : "false"));
  out.push_back(report("odd-orthogonal-closed-form", p, str(o.dimension),
                       str(first_occurrence_general(rho, CharTarget::OOdd))));
  return out;
}

std::vector<CheckReport> check_pseudo_odd_orthogonal(int m) {
  if (m < 1) throw Error(ErrorKind::AssertionFailure, "m must be positive");
  std::vector<CheckReport> out;
  auto chars = pseudo_unipotent_cuspidal_sp(m * m);
  std::vector<int> dims;
  bool unip = true;
  for (const auto& rho : chars) {
    auto o = first_occurrence_oracle(rho, CharTarget::OOdd);
    dims.push_back(o.dimension);
    unip = unip && !o.witnesses.empty() &&
           std::all_of(o.witnesses.begin(), o.witnesses.end(), [](const auto& w) {
             return w.d0() == 0 && w.lambda1 == Symbol{BetaSet({0}), {}} && is_cuspidal(w);
           });
    if (o.dimension != first_occurrence_general(rho, CharTarget::OOdd)) unip = false;
  }
  out.push_back(report("odd-orthogonal-first-occurrence-pair", param_m(m),
                       set_string({2 * m * (m - 1) + 1, 2 * m * (m + 1) + 1}), set_string(dims)));
  out.push_back(report("odd-orthogonal-partner-unipotent-cuspidal", param_m(m), "true",
                       unip ? "true" : "false"));
  return out;
}

std::vector<CheckReport> check_cuspidal_sums(int m) {
  std::vector<CheckReport> out;
  const std::string p = param_m(m);
  {
    auto rec = unipotent_cuspidal({SeriesFamily::U, m * (m + 1) / 2});
    const Partition lam = rec.partitions.at(0);
    int a = first_occurrence_unitary(lam, TargetFamily::UEven).dimension;
    int b = first_occurrence_unitary(lam, TargetFamily::UOdd).dimension;
    out.push_back(report("unitary-cuspidal-sum", p, str(m * (m + 1) + 1), str(a + b)));
  }
  if (m >= 1) {
    SeriesTag g{m % 2 == 0 ? SeriesFamily::OEvenPlus : SeriesFamily::OEvenMinus, m * m};
    for (const auto& s : unipotent_cuspidal(g).symbols) {
      int a = first_occurrence_bruteforce(s, TargetFamily::Sp).space_dimension;
      int b = first_occurrence_bruteforce(transpose(s), TargetFamily::Sp).space_dimension;
      out.push_back(report("even-orthogonal-cuspidal-sum", p + " symbol=" + to_string(s),
                           str(4 * m * m), str(a + b)));
    }
  }
  {
    const Symbol s = unipotent_cuspidal({SeriesFamily::Sp, m * (m + 1)}).symbols.at(0);
    int a = first_occurrence_bruteforce(s, TargetFamily::OEvenPlus).space_dimension;
    int b = first_occurrence_bruteforce(s, TargetFamily::OEvenMinus).space_dimension;
    out.push_back(report("symplectic-cuspidal-sum", p, str(4 * m * (m + 1) + 2), str(a + b)));
  }
  // every cuspidal Sp model character whose two symbols have parameters <= m
  for (int a = 0; a <= m; ++a)
    for (int b = 0; b <= m; ++b) {
      SeriesTag og{a % 2 == 0 ? SeriesFamily::OEvenPlus : SeriesFamily::OEvenMinus, a * a};
      const Symbol l2 = unipotent_cuspidal({SeriesFamily::Sp, b * (b + 1)}).symbols.at(0);
      for (const auto& l1 : unipotent_cuspidal(og).symbols) {
        GeneralCharacter rho;
        rho.family = CharFamily::Sp;
        rho.n = a * a + b * (b + 1);
        rho.lambda1 = l1;
        rho.lambda2 = l2;
        if (char_dim(rho) > 12) continue;
        const int dim = char_dim(rho);
        std::string q = "n=" + std::to_string(rho.n) + " lambda1=" + to_string(l1) +
                        " lambda2=" + to_string(l2);
        int odd = first_occurrence_oracle(rho, CharTarget::OOdd).dimension +
                  first_occurrence_oracle(c_twist(rho), CharTarget::OOdd).dimension;
        out.push_back(report("cuspidal-odd-target-sum", q, str(2 * dim + 2), str(odd)));
        int even = first_occurrence_oracle(rho, CharTarget::OEvenPlus).dimension +
                   first_occurrence_oracle(rho, CharTarget::OEvenMinus).dimension;
        out.push_back(report("cuspidal-even-target-sum", q, str(2 * dim + 2), str(even)));
      }
    }
  return out;
}

}  // namespace symtheta
