#pragma once

#include <compare>
#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace symtheta {

/// Weakly decreasing sequence of positive integers. Trailing zeros are
/// stripped on construction so equality is structural.
class Partition {
 public:
  Partition() = default;
  /// Throws Error(Parse) if the input is not weakly decreasing or has a
  /// negative entry.
  explicit Partition(std::vector<int> parts);
  Partition(std::initializer_list<int> parts)
      : Partition(std::vector<int>(parts)) {}

  const std::vector<int>& parts() const noexcept { return parts_; }
  std::size_t length() const noexcept { return parts_.size(); }
  bool empty() const noexcept { return parts_.empty(); }
  int size() const noexcept { return size_; }
  /// i-th part, zero past the end.
  int at(std::size_t i) const noexcept {
    return i < parts_.size() ? parts_[i] : 0;
  }

  friend bool operator==(const Partition&, const Partition&) = default;
  friend auto operator<=>(const Partition& a, const Partition& b) {
    return a.parts_ <=> b.parts_;
  }

 private:
  std::vector<int> parts_;
  int size_ = 0;
};

struct Bipartition {
  Partition upper;
  Partition lower;

  int size() const noexcept { return upper.size() + lower.size(); }
  bool empty() const noexcept { return upper.empty() && lower.empty(); }

  friend bool operator==(const Bipartition&, const Bipartition&) = default;
  friend auto operator<=>(const Bipartition&, const Bipartition&) = default;
};

/// Strictly decreasing finite set of non-negative integers.
class BetaSet {
 public:
  BetaSet() = default;
  /// Accepts elements in any order; throws Error(Parse) on duplicates or
  /// negative entries.
  explicit BetaSet(std::vector<int> elements);
  BetaSet(std::initializer_list<int> elements)
      : BetaSet(std::vector<int>(elements)) {}

  const std::vector<int>& elements() const noexcept { return elems_; }
  std::size_t size() const noexcept { return elems_.size(); }
  bool empty() const noexcept { return elems_.empty(); }
  int max() const noexcept { return elems_.empty() ? -1 : elems_.front(); }
  bool contains_zero() const noexcept {
    return !elems_.empty() && elems_.back() == 0;
  }
  int sum() const noexcept;

  /// {a+1 : a in A} ∪ {0}.
  BetaSet shifted() const;
  /// Inverse of shifted(); requires contains_zero().
  BetaSet unshifted() const;

  friend bool operator==(const BetaSet&, const BetaSet&) = default;
  friend auto operator<=>(const BetaSet& a, const BetaSet& b) {
    return a.elems_ <=> b.elems_;
  }

 private:
  std::vector<int> elems_;
};

/// mu_1 >= lambda_1 >= mu_2 >= lambda_2 >= ... with both padded by zeros.
bool interleaves(const Partition& lambda, const Partition& mu);

/// {lambda_i + n_slots - i : 1 <= i <= n_slots}. Throws SlotsTooFew.
BetaSet beta_set_of(const Partition& lambda, int n_slots);

/// [a_i - (m - i)] with zeros stripped.
Partition partition_of_beta(const BetaSet& a);

/// 2-core by sliding beads down each runner of the 2-abacus.
Partition two_core(const Partition& lambda);

bool is_staircase(const Partition& lambda);

/// All partitions of n in reverse lexicographic order ([n] first).
std::vector<Partition> partitions_of(int n);

/// All bipartitions of n, ordered by |upper| descending, then by the
/// partitions' own order.
std::vector<Bipartition> bipartitions_of(int n);

/// "3,1" <-> [3,1]; the empty string is the empty partition.
Partition parse_partition(std::string_view text);
std::string to_string(const Partition& lambda);
std::string to_string(const BetaSet& a);

}  // namespace symtheta
