#pragma once

#include <compare>
#include <string>
#include <string_view>
#include <vector>

#include "symtheta/partition.hpp"

namespace symtheta {

enum class Sign { Plus, Minus };

constexpr int to_int(Sign s) noexcept { return s == Sign::Plus ? 1 : -1; }
constexpr Sign operator-(Sign s) noexcept {
  return s == Sign::Plus ? Sign::Minus : Sign::Plus;
}
constexpr Sign operator*(Sign a, Sign b) noexcept {
  return a == b ? Sign::Plus : Sign::Minus;
}
inline const char* to_string(Sign s) { return s == Sign::Plus ? "+" : "-"; }

/// Lusztig symbol: an ordered pair of beta-sets. Equality is structural;
/// use equivalent() or compare normalize()d values for class equality.
struct Symbol {
  BetaSet top;
  BetaSet bottom;

  friend bool operator==(const Symbol&, const Symbol&) = default;
  friend auto operator<=>(const Symbol&, const Symbol&) = default;
};

enum class SeriesFamily { Sp, OEvenPlus, OEvenMinus, U };

struct SeriesTag {
  SeriesFamily family;
  int rank = 0;

  friend bool operator==(const SeriesTag&, const SeriesTag&) = default;
};

const char* to_string(SeriesFamily f);

/// Mathematical residue, always in [0, m).
constexpr int mod(int a, int m) noexcept { return ((a % m) + m) % m; }

/// floor((d/2)^2) for any integer d.
constexpr int quarter_square(int d) noexcept { return (d * d) / 4; }

Symbol normalize(const Symbol& s);
bool equivalent(const Symbol& a, const Symbol& b);

int rank(const Symbol& s);
int defect(const Symbol& s);
int delta(const BetaSet& a);
int delta(const Symbol& s);
Bipartition upsilon(const Symbol& s);
Symbol transpose(const Symbol& s);
bool is_cuspidal(const Symbol& s);

/// Residue of the defect mod 4 required by the family (Sp 1, O+ 0, O- 2).
int defect_residue(SeriesFamily f);
bool series_contains(const SeriesTag& tag, const Symbol& s);
/// Family of the even-group series whose defect class contains s, if any.
bool even_group_family(const Symbol& s, SeriesFamily& out);

/// Unique normalized symbol with the given upsilon and defect.
Symbol symbol_with(const Bipartition& ups, int defect);

/// Every normalized symbol of the series, one per class, sorted by defect
/// then rows. Throws UnsupportedFamily for U.
std::vector<Symbol> enumerate_series(const SeriesTag& tag);
/// Every normalized symbol of the given rank, any defect.
std::vector<Symbol> enumerate_rank(int rank);
/// Cached enumerate_series; the reference stays valid for the process.
const std::vector<Symbol>& series_cached(const SeriesTag& tag);

/// Unitary symbol of a partition. Slot count N is taken of the same parity
/// as the length t of the 2-core; odd beta numbers form the top row when N
/// is even and the bottom row when N is odd. Defect is (-1)^t * t.
Symbol symbol_from_partition(const Partition& lambda);
/// Inverse on unitary symbols; false if s is not of that form.
bool partition_from_symbol(const Symbol& s, Partition& out);
/// Length t of the 2-core belonging to a unitary defect, with the extra
/// value t = -1 for defect 1 (empty core). Returns false otherwise.
bool core_length_of_defect(int defect, int& t);

enum class DefectClass { Small, PlusMinusTwo };

/// Symbols of rank n with the largest delta in the class: defects 0, ±1
/// (delta = n) or ±2 (delta = n - 1). Normalized, deduplicated, sorted.
std::vector<Symbol> extremal_delta_symbols(int n, DefectClass cls);

/// "a1,a2|b1,b2" with either side possibly empty.
Symbol parse_symbol(std::string_view text);
std::string to_string(const Symbol& s);
std::string to_string(const Bipartition& b);

}  // namespace symtheta
