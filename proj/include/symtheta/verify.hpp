#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace symtheta {

/// One identity checked over a family of instances.
struct IdentityCount {
  explicit IdentityCount(std::string name) : identity(std::move(name)) {}

  std::string identity;
  long checked = 0;
  long failed = 0;
  std::string first_failure;

  bool pass() const noexcept { return failed == 0 && checked > 0; }
  void record(bool ok, const std::string& detail);
};

struct SuiteReport {
  std::string suite;
  std::vector<IdentityCount> items;
  bool pass() const;
};

// Building blocks, each bounded by its own argument.
IdentityCount check_cuspidality(int max_rank);
IdentityCount check_extremal_small(int max_rank);
IdentityCount check_extremal_two(int max_rank);
IdentityCount check_sp_rank_sum(int max_rank);
IdentityCount check_orth_rank_sum(int max_rank);
IdentityCount check_minimality_sp(int max_rank);
IdentityCount check_minimality_orth(int max_rank);
IdentityCount check_weil_pairs(int max_rank);
IdentityCount check_weil_pairs_unitary(int max_n);
IdentityCount check_unitary_rank_sum(int max_n);
IdentityCount check_unitary_closed_form(int max_n);
IdentityCount check_unitary_preservation(int max_n);
IdentityCount check_cuspidal_classification(int max_rank);

enum class PreservationKind { Unitary, Orthogonal, SpEven, SpOdd };
/// Sum identity on `samples` random characters per family with dim <= max_dim;
/// the first `oracle_samples` are also checked against the oracle.
std::vector<IdentityCount> check_general_preservation(PreservationKind kind, int samples,
                                                      int oracle_samples, int max_dim,
                                                      std::uint64_t seed);

std::vector<IdentityCount> check_cuspidal_occurrences(int max_m);

// Exhaustive uniqueness searches over all characters of rank n <= max_n.
IdentityCount check_unique_sp_even(int max_n);
IdentityCount check_unique_o_plus(int max_n);
IdentityCount check_unique_o_minus(int max_n);
IdentityCount check_unique_sp_odd(int max_n);

const std::vector<std::string>& suite_names();
/// Throws Error(Parse) for an unknown suite name.
SuiteReport run_suite(std::string_view name, int max_rank, std::uint64_t seed);

}  // namespace symtheta
