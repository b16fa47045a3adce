#pragma once

#include <utility>
#include <vector>

#include "symtheta/partition.hpp"
#include "symtheta/symbol.hpp"

namespace symtheta {

/// Membership in B+ (Sign::Plus) or B- (Sign::Minus):
///   B+: Υ(lhs_*) ≼ Υ(rhs^*) and Υ(rhs_*) ≼ Υ(lhs^*)
///   B-: Υ(lhs^*) ≼ Υ(rhs_*) and Υ(rhs^*) ≼ Υ(lhs_*)
bool in_b_relation(const Symbol& lhs, const Symbol& rhs, Sign sign);

/// (sp, orth) in B^eps with def(orth) = -def(sp) + eps.
/// Throws BadDefectClass unless def(sp) ≡ 1 (mod 4).
bool in_b_sp_oeven(const Symbol& sp_symbol, const Symbol& orth_symbol, Sign eps);

/// Allowed defects of the partner under the B+ and B- branches of the
/// unitary relation.
std::pair<int, int> uu_defects(int def, Sign branch);

/// Which branch of the unitary relation holds, if any.
struct UURelation {
  bool plus = false;
  bool minus = false;
  explicit operator bool() const noexcept { return plus || minus; }
};
UURelation uu_relation(const Symbol& l1, const Symbol& l2);
bool in_b_uu(const Symbol& l1, const Symbol& l2);

using SymbolPair = std::pair<Symbol, Symbol>;
using PartitionPair = std::pair<Partition, Partition>;

/// Pairs of the unipotent Weil decomposition for (Sp_2n, O^eps_2n').
std::vector<SymbolPair> weil_pairs(int n, Sign eps, int n_prime);

/// Pairs of the unipotent Weil decomposition for (U_n, U_n'). Throws
/// AssertionFailure if a pair sits in the branch the parity of n + n'
/// forbids.
std::vector<PartitionPair> weil_pairs_unitary(int n, int n_prime);

/// The four-case minimal partner map, applied to any symbol.
Symbol theta_zero(const Symbol& s, Sign eps);
/// theta_zero on S_Sp. Throws BadDefectClass.
Symbol theta_zero_sp(const Symbol& s, Sign eps);
/// theta_zero on S_{O^eps even} with eps read off the defect class.
Symbol theta_zero_orth(const Symbol& s);
/// eps of the even orthogonal series containing s; throws BadDefectClass.
Sign orth_sign(const Symbol& s);

enum class TargetFamily { Sp, OEvenPlus, OEvenMinus, UEven, UOdd };

struct FirstOccurrence {
  Symbol partner;
  SeriesTag partner_series;
  int space_dimension = 0;
  /// Every minimal-size partner found (unitary search reports all).
  std::vector<Symbol> witnesses;
};

/// Scans target ranks upward and tests the relation; independent of the
/// theta_zero formulas. Cap: 2 rank(s) + 2, else CapExceeded.
/// Sp sources take O targets, O-even sources take Sp.
FirstOccurrence first_occurrence_bruteforce(const Symbol& s, TargetFamily target);

/// Closed form through theta_zero.
FirstOccurrence first_occurrence_closed(const Symbol& s, TargetFamily target);

struct UnitaryOccurrence {
  int dimension = 0;
  std::vector<Partition> witnesses;
};

/// Minimal n' of the given parity with some |lambda'| = n' related to
/// lambda. Brute force over partitions by size.
UnitaryOccurrence first_occurrence_unitary(const Partition& lambda,
                                           TargetFamily parity);
/// Same value from theta_zero applied to the unitary symbol.
int first_occurrence_unitary_closed(const Partition& lambda, TargetFamily parity);

struct PreservationSum {
  long lhs = 0;
  long rhs = 0;
  bool holds() const noexcept { return lhs == rhs; }
};

/// Sp: sum over eps of 2 rk theta_0^eps vs 4n - 2delta + 2.
/// O-even: s and its transpose vs 4n - 2delta. Closed-form dimensions.
/// Throws SeriesUndetermined when def ≡ 3 (mod 4).
PreservationSum preservation_sum_unipotent(const Symbol& s);
/// Unitary: n'+ + n'- vs 2n - 2delta + 1, dimensions from the brute-force
/// search.
PreservationSum preservation_sum_unitary(const Partition& lambda);

}  // namespace symtheta
