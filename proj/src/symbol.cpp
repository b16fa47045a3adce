#include "symtheta/symbol.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <tuple>

#include "symtheta/error.hpp"

namespace symtheta {

namespace detail {
std::vector<int> parse_int_list_for_literals(std::string_view text);
}

const char* to_string(SeriesFamily f) {
  switch (f) {
    case SeriesFamily::Sp: return "sp";
    case SeriesFamily::OEvenPlus: return "o+";
    case SeriesFamily::OEvenMinus: return "o-";
    case SeriesFamily::U: return "u";
  }
  return "?";
}

Symbol normalize(const Symbol& s) {
  Symbol r = s;
  while (r.top.contains_zero() && r.bottom.contains_zero()) {
    r.top = r.top.unshifted();
    r.bottom = r.bottom.unshifted();
  }
  return r;
}

bool equivalent(const Symbol& a, const Symbol& b) {
  return normalize(a) == normalize(b);
}

int rank(const Symbol& s) {
  const int k = static_cast<int>(s.top.size() + s.bottom.size()) - 1;
  return s.top.sum() + s.bottom.sum() - quarter_square(k);
}

int defect(const Symbol& s) {
  return static_cast<int>(s.top.size()) - static_cast<int>(s.bottom.size());
}

int delta(const BetaSet& a) {
  if (a.empty()) return 0;
  return a.max() - static_cast<int>(a.size()) + 1;
}

int delta(const Symbol& s) { return delta(s.top) + delta(s.bottom); }

Bipartition upsilon(const Symbol& s) {
  return {partition_of_beta(s.top), partition_of_beta(s.bottom)};
}

Symbol transpose(const Symbol& s) { return {s.bottom, s.top}; }

bool is_cuspidal(const Symbol& s) {
  return rank(s) == quarter_square(defect(s));
}

int defect_residue(SeriesFamily f) {
  switch (f) {
    case SeriesFamily::Sp: return 1;
    case SeriesFamily::OEvenPlus: return 0;
    case SeriesFamily::OEvenMinus: return 2;
    case SeriesFamily::U: break;
  }
  throw Error(ErrorKind::UnsupportedFamily,
              "unitary series has no defect residue; use symbol_from_partition");
}

bool series_contains(const SeriesTag& tag, const Symbol& s) {
  const int residue = defect_residue(tag.family);
  return rank(s) == tag.rank && mod(defect(s), 4) == residue;
}

bool even_group_family(const Symbol& s, SeriesFamily& out) {
  switch (mod(defect(s), 4)) {
    case 0: out = SeriesFamily::OEvenPlus; return true;
    case 1: out = SeriesFamily::Sp; return true;
    case 2: out = SeriesFamily::OEvenMinus; return true;
    default: return false;
  }
}

Symbol symbol_with(const Bipartition& ups, int d) {
  const int len_top = static_cast<int>(ups.upper.length());
  const int len_bottom = static_cast<int>(ups.lower.length());
  const int m2 = std::max({len_bottom, len_top - d, 0, -d});
  const int m1 = m2 + d;
  return normalize({beta_set_of(ups.upper, m1), beta_set_of(ups.lower, m2)});
}

namespace {

bool by_defect_then_rows(const Symbol& a, const Symbol& b) {
  return std::make_tuple(defect(a), a.top, a.bottom) <
         std::make_tuple(defect(b), b.top, b.bottom);
}

std::vector<Symbol> enumerate_defects(int n, int residue, bool any_residue) {
  std::vector<Symbol> out;
  if (n < 0) return out;
  int bound = 0;
  while (quarter_square(bound + 1) <= n) ++bound;
  for (int d = -bound; d <= bound; ++d) {
    if (!any_residue && mod(d, 4) != residue) continue;
    const int rest = n - quarter_square(d);
    if (rest < 0) continue;
    for (const auto& b : bipartitions_of(rest)) out.push_back(symbol_with(b, d));
  }
  std::sort(out.begin(), out.end(), by_defect_then_rows);
  return out;
}

}  // namespace

std::vector<Symbol> enumerate_series(const SeriesTag& tag) {
  return enumerate_defects(tag.rank, defect_residue(tag.family), false);
}

std::vector<Symbol> enumerate_rank(int n) { return enumerate_defects(n, 0, true); }

const std::vector<Symbol>& series_cached(const SeriesTag& tag) {
  static std::mutex guard;
  static std::map<std::pair<int, int>, std::unique_ptr<std::vector<Symbol>>> cache;
  const auto key = std::make_pair(static_cast<int>(tag.family), tag.rank);
  std::lock_guard lock(guard);
  auto it = cache.find(key);
  if (it == cache.end())
    it = cache.emplace(key, std::make_unique<std::vector<Symbol>>(
                                enumerate_series(tag))).first;
  return *it->second;
}

Symbol symbol_from_partition(const Partition& lambda) {
  const int t = static_cast<int>(two_core(lambda).length());
  int slots = static_cast<int>(lambda.length());
  if (mod(slots, 2) != mod(t, 2)) ++slots;
  const bool odd_on_top = slots % 2 == 0;
  std::vector<int> odd_row, even_row;
  const BetaSet beads = beta_set_of(lambda, slots);
  for (int x : beads.elements()) {
    if (x % 2 == 1) odd_row.push_back((x - 1) / 2);
    else even_row.push_back(x / 2);
  }
  Symbol s = odd_on_top ? Symbol{BetaSet(odd_row), BetaSet(even_row)}
                        : Symbol{BetaSet(even_row), BetaSet(odd_row)};
  return normalize(s);
}

bool core_length_of_defect(int d, int& t) {
  if (d == 1) {
    t = -1;
    return true;
  }
  const int candidate = d < 0 ? -d : d;
  const bool sign_ok = candidate % 2 == 0 ? d >= 0 : d < 0;
  if (!sign_ok) return false;
  t = candidate;
  return true;
}

bool partition_from_symbol(const Symbol& s, Partition& out) {
  int t = 0;
  if (!core_length_of_defect(defect(s), t)) return false;
  const int slots = static_cast<int>(s.top.size() + s.bottom.size());
  const bool odd_on_top = slots % 2 == 0;
  std::vector<int> beads;
  for (int a : s.top.elements()) beads.push_back(odd_on_top ? 2 * a + 1 : 2 * a);
  for (int b : s.bottom.elements()) beads.push_back(odd_on_top ? 2 * b : 2 * b + 1);
  out = partition_of_beta(BetaSet(std::move(beads)));
  return true;
}

std::vector<Symbol> extremal_delta_symbols(int n, DefectClass cls) {
  std::vector<Symbol> out;
  if (n < 0) throw Error(ErrorKind::InvalidClass, "rank must be non-negative");
  if (cls == DefectClass::Small) {
    for (int k = 0; k <= n; ++k) {
      out.push_back(normalize({BetaSet{k}, BetaSet{n - k + 1, 0}}));
      out.push_back(normalize({BetaSet{n - k}, BetaSet{k}}));
      out.push_back(normalize({BetaSet{n - k + 1, 0}, BetaSet{k}}));
    }
  } else {
    if (n < 1)
      throw Error(ErrorKind::InvalidClass, "defect ±2 class needs rank >= 1");
    for (int k = 0; k <= n - 1; ++k) {
      out.push_back(normalize({BetaSet{k}, BetaSet{n - k + 1, 1, 0}}));
      out.push_back(normalize({BetaSet{n - k + 1, 1, 0}, BetaSet{k}}));
    }
  }
  std::sort(out.begin(), out.end(), by_defect_then_rows);
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

Symbol parse_symbol(std::string_view text) {
  const auto bar = text.find('|');
  if (bar == std::string_view::npos || text.find('|', bar + 1) != text.npos)
    throw Error(ErrorKind::Parse, "symbol literal needs exactly one '|'");
  return {BetaSet(detail::parse_int_list_for_literals(text.substr(0, bar))),
          BetaSet(detail::parse_int_list_for_literals(text.substr(bar + 1)))};
}

std::string to_string(const Symbol& s) {
  return to_string(s.top) + "|" + to_string(s.bottom);
}

std::string to_string(const Bipartition& b) {
  return "[" + to_string(b.upper) + "],[" + to_string(b.lower) + "]";
}

}  // namespace symtheta
