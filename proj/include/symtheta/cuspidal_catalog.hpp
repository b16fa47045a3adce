#pragma once

#include <string>
#include <vector>

#include "symtheta/character_model.hpp"
#include "symtheta/symbol.hpp"

namespace symtheta {

struct CuspidalRecord {
  SeriesTag group;
  std::vector<Symbol> symbols;
  std::vector<Partition> partitions;  // U only
  std::size_t count() const { return symbols.size(); }
};

/// Closed form: Sp at n = m(m+1), O^eps at n = m^2 with eps = (-1)^m,
/// U at triangular n. O at n = 0 reports the single empty symbol.
CuspidalRecord unipotent_cuspidal(const SeriesTag& group);

/// Same set found by filtering the series enumeration (partitions for U).
CuspidalRecord unipotent_cuspidal_by_search(const SeriesTag& group);

/// d0 = 0, lambda2 trivial, lambda1 one of the cuspidal symbols of
/// O^{(-1)^m}_{2m^2}. n = 0 gives the trivial character.
std::vector<GeneralCharacter> pseudo_unipotent_cuspidal_sp(int n);

struct CheckReport {
  std::string check;
  std::string parameters;
  std::string expected;
  std::string actual;
  bool pass = false;
};

/// Pseudo-unipotent cuspidals of Sp_{2m^2}: count, c-twist swap, cuspidality.
std::vector<CheckReport> check_pseudo_unipotent_count(int m);
/// Even orthogonal first occurrences {2m^2, 2m^2 + 2}.
std::vector<CheckReport> check_pseudo_even_orthogonal(int m);
/// Unipotent cuspidal of Sp_{2m(m+1)} against odd orthogonal groups.
std::vector<CheckReport> check_unipotent_odd_orthogonal(int m);
/// Pseudo-unipotent cuspidals against odd orthogonal groups.
std::vector<CheckReport> check_pseudo_odd_orthogonal(int m);
/// The three cuspidal sums plus 2 dim + 2 on cuspidal Sp model characters.
std::vector<CheckReport> check_cuspidal_sums(int m);

}  // namespace symtheta
