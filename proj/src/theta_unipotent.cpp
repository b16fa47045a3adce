#include "symtheta/theta_unipotent.hpp"

#include <algorithm>

#include "symtheta/error.hpp"

namespace symtheta {

namespace {

Partition row(const BetaSet& a) { return partition_of_beta(a); }

BetaSet drop_largest(const BetaSet& a) {
  std::vector<int> e(a.elements().begin() + 1, a.elements().end());
  return BetaSet(std::move(e));
}

void require_sp(const Symbol& s) {
  if (mod(defect(s), 4) != 1)
    throw Error(ErrorKind::BadDefectClass,
                "expected def = 1 mod 4: " + to_string(s));
}

SeriesFamily o_family(Sign eps) {
  return eps == Sign::Plus ? SeriesFamily::OEvenPlus : SeriesFamily::OEvenMinus;
}

bool is_even_target(TargetFamily t) { return t == TargetFamily::UEven; }

}  // namespace

bool in_b_relation(const Symbol& lhs, const Symbol& rhs, Sign sign) {
  if (sign == Sign::Plus)
    return interleaves(row(lhs.bottom), row(rhs.top)) &&
           interleaves(row(rhs.bottom), row(lhs.top));
  return interleaves(row(lhs.top), row(rhs.bottom)) &&
         interleaves(row(rhs.top), row(lhs.bottom));
}

bool in_b_sp_oeven(const Symbol& sp_symbol, const Symbol& orth_symbol, Sign eps) {
  require_sp(sp_symbol);
  if (defect(orth_symbol) != -defect(sp_symbol) + to_int(eps)) return false;
  return in_b_relation(sp_symbol, orth_symbol, eps);
}

std::pair<int, int> uu_defects(int d, Sign branch) {
  bool even = mod(d, 2) == 0;
  if (branch == Sign::Plus) return even ? std::pair{-d, -d + 1} : std::pair{-d + 1, -d + 2};
  return even ? std::pair{-d - 2, -d - 1} : std::pair{-d - 1, -d};
}

UURelation uu_relation(const Symbol& l1, const Symbol& l2) {
  UURelation r;
  int d2 = defect(l2);
  for (Sign b : {Sign::Plus, Sign::Minus}) {
    auto [x, y] = uu_defects(defect(l1), b);
    bool ok = (d2 == x || d2 == y) && in_b_relation(l1, l2, b);
    (b == Sign::Plus ? r.plus : r.minus) = ok;
  }
  return r;
}

bool in_b_uu(const Symbol& l1, const Symbol& l2) {
  return static_cast<bool>(uu_relation(l1, l2));
}

std::vector<SymbolPair> weil_pairs(int n, Sign eps, int n_prime) {
  std::vector<SymbolPair> out;
  const auto& sp = series_cached({SeriesFamily::Sp, n});
  const auto& orth = series_cached({o_family(eps), n_prime});
  for (const auto& a : sp)
    for (const auto& b : orth)
      if (in_b_sp_oeven(a, b, eps)) out.emplace_back(a, b);
  return out;
}

std::vector<PartitionPair> weil_pairs_unitary(int n, int n_prime) {
  std::vector<PartitionPair> out;
  auto left = partitions_of(n);
  auto right = partitions_of(n_prime);
  std::vector<Symbol> rs;
  for (const auto& mu : right) rs.push_back(symbol_from_partition(mu));
  bool plus_expected = mod(n + n_prime, 2) == 0;
  for (const auto& lam : left) {
    Symbol ls = symbol_from_partition(lam);
    for (std::size_t j = 0; j < right.size(); ++j) {
      UURelation r = uu_relation(ls, rs[j]);
      if (!r) continue;
      if ((plus_expected && !r.plus) || (!plus_expected && !r.minus))
        throw Error(ErrorKind::AssertionFailure,
                    "pair (" + to_string(lam) + ", " + to_string(right[j]) +
                        ") related in the branch the parity forbids");
      out.emplace_back(lam, right[j]);
    }
  }
  return out;
}

Symbol theta_zero(const Symbol& s, Sign eps) {
  const BetaSet& a = s.top;
  const BetaSet& b = s.bottom;
  Symbol r;
  if (eps == Sign::Plus)
    r = a.empty() ? Symbol{b.shifted(), BetaSet{}} : Symbol{b, drop_largest(a)};
  else
    r = b.empty() ? Symbol{BetaSet{}, a.shifted()} : Symbol{drop_largest(b), a};
  return normalize(r);
}

Symbol theta_zero_sp(const Symbol& s, Sign eps) {
  require_sp(s);
  return theta_zero(s, eps);
}

Sign orth_sign(const Symbol& s) {
  switch (mod(defect(s), 4)) {
    case 0: return Sign::Plus;
    case 2: return Sign::Minus;
    default:
      throw Error(ErrorKind::BadDefectClass,
                  "expected even defect: " + to_string(s));
  }
}

Symbol theta_zero_orth(const Symbol& s) { return theta_zero(s, orth_sign(s)); }

FirstOccurrence first_occurrence_bruteforce(const Symbol& s0, TargetFamily target) {
  Symbol s = normalize(s0);
  int d = defect(s);
  bool from_sp = mod(d, 4) == 1;
  bool from_o = mod(d, 2) == 0;
  SeriesFamily fam;
  Sign eps = Sign::Plus;
  if (from_sp && (target == TargetFamily::OEvenPlus || target == TargetFamily::OEvenMinus)) {
    eps = target == TargetFamily::OEvenPlus ? Sign::Plus : Sign::Minus;
    fam = o_family(eps);
  } else if (from_o && target == TargetFamily::Sp) {
    eps = orth_sign(s);
    fam = SeriesFamily::Sp;
  } else {
    throw Error(ErrorKind::UnsupportedTarget,
                "no unipotent target of that family for " + to_string(s));
  }
  int cap = 2 * rank(s) + 2;
  for (int r = 0; r <= cap; ++r) {
    FirstOccurrence fo;
    for (const auto& c : series_cached({fam, r})) {
      bool ok = from_sp ? in_b_sp_oeven(s, c, eps) : in_b_sp_oeven(c, s, eps);
      if (ok) fo.witnesses.push_back(c);
    }
    if (!fo.witnesses.empty()) {
      fo.partner = fo.witnesses.front();
      fo.partner_series = {fam, r};
      fo.space_dimension = 2 * r;
      return fo;
    }
  }
  throw Error(ErrorKind::CapExceeded, "no partner up to rank " + std::to_string(cap) +
                                          " for " + to_string(s));
}

FirstOccurrence first_occurrence_closed(const Symbol& s0, TargetFamily target) {
  Symbol s = normalize(s0);
  FirstOccurrence fo;
  int d = defect(s);
  if (mod(d, 4) == 1 && (target == TargetFamily::OEvenPlus || target == TargetFamily::OEvenMinus)) {
    Sign eps = target == TargetFamily::OEvenPlus ? Sign::Plus : Sign::Minus;
    fo.partner = theta_zero_sp(s, eps);
    fo.partner_series = {o_family(eps), rank(fo.partner)};
  } else if (mod(d, 2) == 0 && target == TargetFamily::Sp) {
    fo.partner = theta_zero_orth(s);
    fo.partner_series = {SeriesFamily::Sp, rank(fo.partner)};
  } else {
    throw Error(ErrorKind::UnsupportedTarget,
                "no unipotent target of that family for " + to_string(s));
  }
  fo.space_dimension = 2 * fo.partner_series.rank;
  fo.witnesses = {fo.partner};
  return fo;
}

UnitaryOccurrence first_occurrence_unitary(const Partition& lambda, TargetFamily parity) {
  if (parity != TargetFamily::UEven && parity != TargetFamily::UOdd)
    throw Error(ErrorKind::UnsupportedTarget, "unitary targets are u-even or u-odd");
  Symbol s = symbol_from_partition(lambda);
  int n = lambda.size();
  int cap = 2 * n + 2;
  for (int m = is_even_target(parity) ? 0 : 1; m <= cap; m += 2) {
    UnitaryOccurrence out;
    out.dimension = m;
    for (const auto& mu : partitions_of(m))
      if (in_b_uu(s, symbol_from_partition(mu))) out.witnesses.push_back(mu);
    if (!out.witnesses.empty()) return out;
  }
  throw Error(ErrorKind::CapExceeded, "no unitary partner up to size " +
                                          std::to_string(cap) + " for " + to_string(lambda));
}

int first_occurrence_unitary_closed(const Partition& lambda, TargetFamily parity) {
  if (parity != TargetFamily::UEven && parity != TargetFamily::UOdd)
    throw Error(ErrorKind::UnsupportedTarget, "unitary targets are u-even or u-odd");
  bool n_even = lambda.size() % 2 == 0;
  Sign eps = (is_even_target(parity) == n_even) ? Sign::Plus : Sign::Minus;
  Symbol th = theta_zero(symbol_from_partition(lambda), eps);
  int t = 0;
  if (!core_length_of_defect(defect(th), t))
    throw Error(ErrorKind::AssertionFailure,
                "theta_0 left the unitary symbols: " + to_string(th));
  return t * (t + 1) / 2 + 2 * upsilon(th).size();
}

PreservationSum preservation_sum_unipotent(const Symbol& s0) {
  Symbol s = normalize(s0);
  int d = defect(s);
  int n = rank(s);
  PreservationSum p;
  if (mod(d, 4) == 1) {
    p.lhs = 2L * rank(theta_zero_sp(s, Sign::Plus)) + 2L * rank(theta_zero_sp(s, Sign::Minus));
    p.rhs = 4L * n - 2L * delta(s) + 2;
  } else if (mod(d, 2) == 0) {
    p.lhs = 2L * rank(theta_zero_orth(s)) + 2L * rank(theta_zero_orth(transpose(s)));
    p.rhs = 4L * n - 2L * delta(s);
  } else {
    throw Error(ErrorKind::SeriesUndetermined,
                "def = 3 mod 4 is in no even-group series: " + to_string(s));
  }
  return p;
}

PreservationSum preservation_sum_unitary(const Partition& lambda) {
  PreservationSum p;
  p.lhs = first_occurrence_unitary(lambda, TargetFamily::UEven).dimension +
          first_occurrence_unitary(lambda, TargetFamily::UOdd).dimension;
  p.rhs = 2L * lambda.size() - 2L * delta(symbol_from_partition(lambda)) + 1;
  return p;
}

}  // namespace symtheta
