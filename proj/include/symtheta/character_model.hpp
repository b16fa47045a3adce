#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "symtheta/partition.hpp"
#include "symtheta/symbol.hpp"
#include "symtheta/theta_unipotent.hpp"

namespace symtheta {

enum class CharFamily { Unitary, Sp, OEven, OOdd };

const char* to_string(CharFamily f);

/// One eigenvalue block of the semisimple part away from +-1. Labels are
/// abstract; two characters share blocks iff the sorted lists are equal.
struct Block {
  std::string label;
  int dim = 0;

  friend bool operator==(const Block&, const Block&) = default;
  friend auto operator<=>(const Block&, const Block&) = default;
};

struct GeneralCharacter {
  CharFamily family = CharFamily::Sp;
  int n = 0;
  Sign eps = Sign::Plus;  // OEven only
  std::vector<Block> blocks;
  Partition partition;     // Unitary only
  Symbol lambda1;          // unused for Unitary
  std::optional<Symbol> lambda2;
  std::optional<Sign> sign_bit;  // OOdd only

  int d0() const;
  friend bool operator==(const GeneralCharacter&, const GeneralCharacter&) = default;
};

/// Raw constructor input. lambda1 holds a partition literal for Unitary.
struct CharacterSpec {
  CharFamily family = CharFamily::Sp;
  int n = 0;
  std::optional<Sign> eps;
  std::vector<Block> blocks;
  std::string lambda1;
  std::optional<std::string> lambda2;
  std::optional<Sign> sign_bit;
};

/// Validates and normalizes. Errors: DimensionMismatch, WrongSeries,
/// MissingSignBit, SpuriousField, Parse.
GeneralCharacter make_character(const CharacterSpec& spec);

/// Sign of the even orthogonal series a symbol lives in.
Sign series_sign(const Symbol& orth_symbol);

/// dim of the underlying space: n, 2n, 2n, 2n+1.
int char_dim(const GeneralCharacter& rho);

enum class SpType { EvenTargets, OddTargets };

/// delta of the component that governs the first occurrence. The Sp type
/// chooses lambda2 (even orthogonal targets) or lambda1 (odd ones).
int delta_char(const GeneralCharacter& rho, SpType sp_type = SpType::EvenTargets);

GeneralCharacter sgn_twist(const GeneralCharacter& rho);
GeneralCharacter c_twist(const GeneralCharacter& rho);

/// Both characters are of one of the pairs (U,U), (Sp,OEven), (Sp,OOdd) in
/// either order; UnsupportedPair otherwise.
bool corresponds(const GeneralCharacter& a, const GeneralCharacter& b);

enum class CharTarget { UEven, UOdd, Sp, OEvenPlus, OEvenMinus, OOdd, OOddC };

const char* to_string(CharTarget t);
CharTarget parse_char_target(std::string_view text);

/// Closed-form first occurrence (dimension of the target space).
int first_occurrence_general(const GeneralCharacter& rho, CharTarget target);

struct GeneralOccurrence {
  int dimension = 0;
  std::vector<GeneralCharacter> witnesses;
};

/// Scans target characters by dimension and calls corresponds. Cap on the
/// target dimension: 2 dim + 3.
GeneralOccurrence first_occurrence_oracle(const GeneralCharacter& rho, CharTarget target);

/// lhs = sum of the paired first occurrences, rhs = closed form.
PreservationSum preservation_sum_general(const GeneralCharacter& rho,
                                         SpType sp_type = SpType::EvenTargets);

struct WittSplit {
  int n_plus = 0;
  int n_minus = 0;
};
WittSplit odd_witt_split(const GeneralCharacter& rho);

/// Sample of a valid character with char_dim <= max_dim. The generator is
/// seeded from (root_seed, suite, index) only.
GeneralCharacter sample_character(CharFamily family, int max_dim, std::uint64_t root_seed,
                                  std::string_view suite, std::uint64_t index);

/// Every character of the group with block labels drawn from `labels`.
std::vector<GeneralCharacter> all_characters(CharFamily family, int n, Sign eps,
                                             const std::vector<std::string>& labels);

/// d0 = 0 and every symbol component cuspidal.
bool is_cuspidal(const GeneralCharacter& rho);

std::string describe(const GeneralCharacter& rho);

}  // namespace symtheta
