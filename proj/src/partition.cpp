#include "symtheta/partition.hpp"

#include <algorithm>
#include <charconv>
#include <functional>
#include <numeric>

#include "symtheta/error.hpp"

namespace symtheta {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] < 0)
      throw Error(ErrorKind::Parse, "negative part in partition");
    if (i + 1 < parts_.size() && parts_[i] < parts_[i + 1])
      throw Error(ErrorKind::Parse, "partition parts must be weakly decreasing");
  }
  if (!parts_.empty() && parts_.back() == 0)
    throw Error(ErrorKind::Parse, "zero part inside partition");
  size_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

BetaSet::BetaSet(std::vector<int> elements) : elems_(std::move(elements)) {
  std::sort(elems_.begin(), elems_.end(), std::greater<>());
  if (std::adjacent_find(elems_.begin(), elems_.end()) != elems_.end())
    throw Error(ErrorKind::Parse, "beta-set has a repeated entry");
  if (!elems_.empty() && elems_.back() < 0)
    throw Error(ErrorKind::Parse, "beta-set has a negative entry");
}

int BetaSet::sum() const noexcept {
  return std::accumulate(elems_.begin(), elems_.end(), 0);
}

BetaSet BetaSet::shifted() const {
  std::vector<int> out;
  out.reserve(elems_.size() + 1);
  for (int a : elems_) out.push_back(a + 1);
  out.push_back(0);
  BetaSet r;
  r.elems_ = std::move(out);
  return r;
}

BetaSet BetaSet::unshifted() const {
  BetaSet r;
  r.elems_.assign(elems_.begin(), elems_.end() - 1);
  for (int& a : r.elems_) --a;
  return r;
}

bool interleaves(const Partition& lambda, const Partition& mu) {
  const std::size_t len = std::max(lambda.length(), mu.length()) + 1;
  for (std::size_t i = 0; i < len; ++i) {
    if (mu.at(i) < lambda.at(i)) return false;
    if (lambda.at(i) < mu.at(i + 1)) return false;
  }
  return true;
}

BetaSet beta_set_of(const Partition& lambda, int n_slots) {
  if (n_slots < 0 || static_cast<std::size_t>(n_slots) < lambda.length())
    throw Error(ErrorKind::SlotsTooFew,
                "need at least " + std::to_string(lambda.length()) + " slots");
  std::vector<int> out(static_cast<std::size_t>(n_slots));
  for (int i = 0; i < n_slots; ++i)
    out[static_cast<std::size_t>(i)] =
        lambda.at(static_cast<std::size_t>(i)) + n_slots - 1 - i;
  return BetaSet(std::move(out));
}

Partition partition_of_beta(const BetaSet& a) {
  const auto& e = a.elements();
  const int m = static_cast<int>(e.size());
  std::vector<int> parts;
  parts.reserve(e.size());
  for (int i = 0; i < m; ++i) parts.push_back(e[static_cast<std::size_t>(i)] - (m - 1 - i));
  return Partition(std::move(parts));
}

Partition two_core(const Partition& lambda) {
  const int slots = static_cast<int>(lambda.length());
  const auto beads = beta_set_of(lambda, slots).elements();
  const auto evens = std::count_if(beads.begin(), beads.end(),
                                   [](int x) { return x % 2 == 0; });
  const auto odds = static_cast<std::ptrdiff_t>(beads.size()) - evens;
  std::vector<int> packed;
  for (std::ptrdiff_t i = 0; i < evens; ++i) packed.push_back(static_cast<int>(2 * i));
  for (std::ptrdiff_t i = 0; i < odds; ++i) packed.push_back(static_cast<int>(2 * i + 1));
  return partition_of_beta(BetaSet(std::move(packed)));
}

bool is_staircase(const Partition& lambda) {
  const auto& p = lambda.parts();
  for (std::size_t i = 0; i < p.size(); ++i)
    if (p[i] != static_cast<int>(p.size() - i)) return false;
  return true;
}

namespace {

void partitions_rec(int remaining, int max_part, std::vector<int>& prefix,
                    std::vector<Partition>& out) {
  if (remaining == 0) {
    out.emplace_back(prefix);
    return;
  }
  for (int k = std::min(remaining, max_part); k >= 1; --k) {
    prefix.push_back(k);
    partitions_rec(remaining - k, k, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

std::vector<Partition> partitions_of(int n) {
  std::vector<Partition> out;
  if (n < 0) return out;
  std::vector<int> prefix;
  partitions_rec(n, n, prefix, out);
  return out;
}

std::vector<Bipartition> bipartitions_of(int n) {
  std::vector<Bipartition> out;
  for (int k = n; k >= 0; --k) {
    const auto uppers = partitions_of(k);
    const auto lowers = partitions_of(n - k);
    for (const auto& u : uppers)
      for (const auto& l : lowers) out.push_back({u, l});
  }
  return out;
}

namespace {

std::vector<int> parse_int_list(std::string_view text) {
  std::vector<int> out;
  if (text.empty()) return out;
  std::size_t pos = 0;
  while (true) {
    const auto comma = text.find(',', pos);
    auto token = text.substr(pos, comma == std::string_view::npos ? text.npos
                                                                  : comma - pos);
    while (!token.empty() && token.front() == ' ') token.remove_prefix(1);
    while (!token.empty() && token.back() == ' ') token.remove_suffix(1);
    int value = 0;
    const auto [ptr, ec] =
        std::from_chars(token.data(), token.data() + token.size(), value);
    if (token.empty() || ec != std::errc() || ptr != token.data() + token.size())
      throw Error(ErrorKind::Parse, "bad integer '" + std::string(token) + "'");
    out.push_back(value);
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return out;
}

std::string join(const std::vector<int>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(v[i]);
  }
  return s;
}

}  // namespace

Partition parse_partition(std::string_view text) {
  return Partition(parse_int_list(text));
}

std::string to_string(const Partition& lambda) { return join(lambda.parts()); }
std::string to_string(const BetaSet& a) { return join(a.elements()); }

namespace detail {
std::vector<int> parse_int_list_for_literals(std::string_view text) {
  return parse_int_list(text);
}
}  // namespace detail

}  // namespace symtheta
