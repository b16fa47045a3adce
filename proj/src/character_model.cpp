#include "symtheta/character_model.hpp"

#include <algorithm>
#include <functional>
#include <random>

#include "symtheta/error.hpp"

namespace symtheta {

namespace {

bool even_defect(const Symbol& s) { return mod(defect(s), 2) == 0; }
bool sp_defect(const Symbol& s) { return mod(defect(s), 4) == 1; }

std::optional<Error> problem(const GeneralCharacter& r) {
  auto fail = [](ErrorKind k, std::string m) { return std::optional<Error>(Error(k, std::move(m))); };
  const bool unitary = r.family == CharFamily::Unitary;
  int d0 = 0;
  for (const auto& b : r.blocks) {
    if (b.dim <= 0 || (!unitary && b.dim % 2 != 0))
      return fail(ErrorKind::DimensionMismatch,
                  "block " + b.label + " has dimension " + std::to_string(b.dim));
    d0 += b.dim;
  }
  if (r.n < 0) return fail(ErrorKind::DimensionMismatch, "n must be non-negative");
  if (r.family != CharFamily::OOdd && r.sign_bit)
    return fail(ErrorKind::SpuriousField, "sign bit only exists for odd orthogonal groups");
  if (unitary) {
    if (r.lambda2) return fail(ErrorKind::SpuriousField, "unitary characters carry one partition");
    if (r.n != d0 + r.partition.size())
      return fail(ErrorKind::DimensionMismatch, "n != d0 + |lambda|");
    return std::nullopt;
  }
  if (!r.lambda2) return fail(ErrorKind::Parse, "lambda2 is required");
  const Symbol& l1 = r.lambda1;
  const Symbol& l2 = *r.lambda2;
  switch (r.family) {
    case CharFamily::Sp:
      if (!even_defect(l1)) return fail(ErrorKind::WrongSeries, "lambda1 must be an even orthogonal symbol");
      if (!sp_defect(l2)) return fail(ErrorKind::WrongSeries, "lambda2 must be a symplectic symbol");
      break;
    case CharFamily::OEven:
      if (!even_defect(l1) || !even_defect(l2))
        return fail(ErrorKind::WrongSeries, "both symbols must be even orthogonal");
      if (series_sign(l1) * series_sign(l2) != r.eps)
        return fail(ErrorKind::WrongSeries, "series signs do not multiply to the group sign");
      break;
    case CharFamily::OOdd:
      if (!sp_defect(l1) || !sp_defect(l2))
        return fail(ErrorKind::WrongSeries, "both symbols must be symplectic");
      if (!r.sign_bit) return fail(ErrorKind::MissingSignBit, "odd orthogonal characters need a sign");
      break;
    case CharFamily::Unitary:
      break;
  }
  if (2 * r.n != d0 + 2 * rank(l1) + 2 * rank(l2))
    return fail(ErrorKind::DimensionMismatch, "2n != d0 + 2 rk lambda1 + 2 rk lambda2");
  return std::nullopt;
}

void require_family(const GeneralCharacter& r, std::initializer_list<CharFamily> ok,
                    const char* what) {
  if (std::find(ok.begin(), ok.end(), r.family) == ok.end())
    throw Error(ErrorKind::WrongFamily, std::string(what) + " is not defined for " + to_string(r.family));
}

[[noreturn]] void bad_target(const GeneralCharacter& r, CharTarget t) {
  throw Error(ErrorKind::UnsupportedTarget,
              std::string(to_string(t)) + " is not a target for " + to_string(r.family));
}

}  // namespace

const char* to_string(CharFamily f) {
  switch (f) {
    case CharFamily::Unitary: return "u";
    case CharFamily::Sp: return "sp";
    case CharFamily::OEven: return "o-even";
    case CharFamily::OOdd: return "o-odd";
  }
  return "?";
}

int GeneralCharacter::d0() const {
  int d = 0;
  for (const auto& b : blocks) d += b.dim;
  return d;
}

Sign series_sign(const Symbol& s) { return orth_sign(s); }

GeneralCharacter make_character(const CharacterSpec& spec) {
  GeneralCharacter r;
  r.family = spec.family;
  r.n = spec.n;
  r.blocks = spec.blocks;
  std::sort(r.blocks.begin(), r.blocks.end());
  r.sign_bit = spec.sign_bit;
  if (spec.family == CharFamily::OEven) {
    if (!spec.eps) throw Error(ErrorKind::Parse, "even orthogonal characters need eps");
    r.eps = *spec.eps;
  } else if (spec.eps) {
    throw Error(ErrorKind::SpuriousField, "eps only exists for even orthogonal groups");
  }
  if (spec.family == CharFamily::Unitary) {
    r.partition = parse_partition(spec.lambda1);
  } else {
    r.lambda1 = normalize(parse_symbol(spec.lambda1));
  }
  if (spec.lambda2) {
    if (spec.family == CharFamily::Unitary)
      throw Error(ErrorKind::SpuriousField, "unitary characters carry one partition");
    r.lambda2 = normalize(parse_symbol(*spec.lambda2));
  }
  if (auto e = problem(r)) throw *e;
  return r;
}

int char_dim(const GeneralCharacter& r) {
  switch (r.family) {
    case CharFamily::Unitary: return r.d0() + r.partition.size();
    case CharFamily::Sp:
    case CharFamily::OEven: return r.d0() + 2 * rank(r.lambda1) + 2 * rank(*r.lambda2);
    case CharFamily::OOdd: return r.d0() + 2 * rank(r.lambda1) + 2 * rank(*r.lambda2) + 1;
  }
  return 0;
}

int delta_char(const GeneralCharacter& r, SpType sp_type) {
  switch (r.family) {
    case CharFamily::Unitary: return delta(symbol_from_partition(r.partition));
    case CharFamily::OEven:
    case CharFamily::OOdd: return delta(*r.lambda2);
    case CharFamily::Sp:
      return sp_type == SpType::EvenTargets ? delta(*r.lambda2) : delta(r.lambda1);
  }
  return 0;
}

GeneralCharacter sgn_twist(const GeneralCharacter& r) {
  require_family(r, {CharFamily::OEven, CharFamily::OOdd}, "sgn twist");
  GeneralCharacter t = r;
  if (r.family == CharFamily::OEven) {
    t.lambda1 = normalize(transpose(r.lambda1));
    t.lambda2 = normalize(transpose(*r.lambda2));
  } else {
    t.sign_bit = -*r.sign_bit;
  }
  return t;
}

GeneralCharacter c_twist(const GeneralCharacter& r) {
  require_family(r, {CharFamily::Sp}, "c twist");
  GeneralCharacter t = r;
  t.lambda1 = normalize(transpose(r.lambda1));
  return t;
}

bool corresponds(const GeneralCharacter& a, const GeneralCharacter& b) {
  if (a.family == CharFamily::Unitary && b.family == CharFamily::Unitary)
    return a.blocks == b.blocks &&
           in_b_uu(symbol_from_partition(a.partition), symbol_from_partition(b.partition));
  if (b.family == CharFamily::Sp && a.family != CharFamily::Sp && a.family != CharFamily::Unitary)
    return corresponds(b, a);
  if (a.family != CharFamily::Sp)
    throw Error(ErrorKind::UnsupportedPair,
                std::string(to_string(a.family)) + " x " + to_string(b.family));
  if (a.blocks != b.blocks) return false;
  const Sign e1 = series_sign(a.lambda1);
  if (b.family == CharFamily::OEven)
    return b.lambda1 == a.lambda1 && in_b_sp_oeven(*a.lambda2, *b.lambda2, b.eps * e1);
  if (b.family == CharFamily::OOdd)
    return b.lambda1 == *a.lambda2 && in_b_sp_oeven(*b.lambda2, a.lambda1, e1) &&
           *b.sign_bit == e1;
  throw Error(ErrorKind::UnsupportedPair,
              std::string(to_string(a.family)) + " x " + to_string(b.family));
}

const char* to_string(CharTarget t) {
  switch (t) {
    case CharTarget::UEven: return "u-even";
    case CharTarget::UOdd: return "u-odd";
    case CharTarget::Sp: return "sp";
    case CharTarget::OEvenPlus: return "o+";
    case CharTarget::OEvenMinus: return "o-";
    case CharTarget::OOdd: return "o-odd";
    case CharTarget::OOddC: return "o-odd-c";
  }
  return "?";
}

CharTarget parse_char_target(std::string_view s) {
  for (CharTarget t : {CharTarget::UEven, CharTarget::UOdd, CharTarget::Sp, CharTarget::OEvenPlus,
                       CharTarget::OEvenMinus, CharTarget::OOdd, CharTarget::OOddC})
    if (s == to_string(t)) return t;
  throw Error(ErrorKind::Parse, "unknown target '" + std::string(s) + "'");
}

int first_occurrence_general(const GeneralCharacter& r, CharTarget t) {
  const int d0 = r.d0();
  switch (r.family) {
    case CharFamily::Unitary: {
      if (t != CharTarget::UEven && t != CharTarget::UOdd) bad_target(r, t);
      int p = t == CharTarget::UEven ? 0 : 1;
      auto par = mod(p - d0, 2) == 0 ? TargetFamily::UEven : TargetFamily::UOdd;
      return d0 + first_occurrence_unitary_closed(r.partition, par);
    }
    case CharFamily::Sp: {
      const Sign e1 = series_sign(r.lambda1);
      if (t == CharTarget::OEvenPlus || t == CharTarget::OEvenMinus) {
        Sign eps = t == CharTarget::OEvenPlus ? Sign::Plus : Sign::Minus;
        return d0 + 2 * rank(r.lambda1) + 2 * rank(theta_zero_sp(*r.lambda2, eps * e1));
      }
      if (t == CharTarget::OOdd)
        return d0 + 2 * rank(*r.lambda2) + 2 * rank(theta_zero_orth(r.lambda1)) + 1;
      if (t == CharTarget::OOddC) return first_occurrence_general(c_twist(r), CharTarget::OOdd);
      bad_target(r, t);
    }
    case CharFamily::OEven:
      if (t != CharTarget::Sp) bad_target(r, t);
      return d0 + 2 * rank(r.lambda1) + 2 * rank(theta_zero_orth(*r.lambda2));
    case CharFamily::OOdd:
      if (t != CharTarget::Sp) bad_target(r, t);
      return d0 + 2 * rank(r.lambda1) + 2 * rank(theta_zero_sp(*r.lambda2, *r.sign_bit));
  }
  bad_target(r, t);
}

GeneralOccurrence first_occurrence_oracle(const GeneralCharacter& r0, CharTarget t) {
  if (r0.family == CharFamily::Sp && t == CharTarget::OOddC)
    return first_occurrence_oracle(c_twist(r0), CharTarget::OOdd);
  first_occurrence_general(r0, t);  // rejects illegal targets
  const GeneralCharacter& r = r0;
  const int d0 = r.d0();
  const int cap = 2 * char_dim(r) + 3;
  const bool odd_space = t == CharTarget::UOdd || t == CharTarget::OOdd;
  std::vector<Sign> signs{Sign::Plus, Sign::Minus};

  for (int dim = odd_space ? 1 : 0; dim <= cap; dim += 2) {
    GeneralOccurrence out;
    out.dimension = dim;
    auto consider = [&](GeneralCharacter c) {
      if (problem(c)) return;
      if (corresponds(r, c)) out.witnesses.push_back(std::move(c));
    };
    GeneralCharacter c;
    c.blocks = r.blocks;
    const int free = dim - d0 - (odd_space && r.family != CharFamily::Unitary ? 1 : 0);
    if (free < 0) continue;
    if (r.family == CharFamily::Unitary) {
      c.family = CharFamily::Unitary;
      c.n = dim;
      for (const auto& mu : partitions_of(free)) {
        c.partition = mu;
        consider(c);
      }
    } else {
      if (free % 2) continue;
      const int rest = free / 2;
      switch (t) {
        case CharTarget::OEvenPlus:
        case CharTarget::OEvenMinus: {
          c.family = CharFamily::OEven;
          c.n = dim / 2;
          c.eps = t == CharTarget::OEvenPlus ? Sign::Plus : Sign::Minus;
          c.lambda1 = r.lambda1;
          const int r2 = rest - rank(r.lambda1);
          if (r2 < 0) break;
          for (auto f : {SeriesFamily::OEvenPlus, SeriesFamily::OEvenMinus})
            for (const auto& s : series_cached({f, r2})) {
              c.lambda2 = s;
              consider(c);
            }
          break;
        }
        case CharTarget::OOdd: {
          c.family = CharFamily::OOdd;
          c.n = (dim - 1) / 2;
          c.lambda1 = *r.lambda2;
          const int r2 = rest - rank(*r.lambda2);
          if (r2 < 0) break;
          for (const auto& s : series_cached({SeriesFamily::Sp, r2}))
            for (Sign sg : signs) {
              c.lambda2 = s;
              c.sign_bit = sg;
              consider(c);
            }
          break;
        }
        case CharTarget::Sp: {
          c.family = CharFamily::Sp;
          c.n = dim / 2;
          if (r.family == CharFamily::OEven) {
            c.lambda1 = r.lambda1;
            const int r2 = rest - rank(r.lambda1);
            if (r2 < 0) break;
            for (const auto& s : series_cached({SeriesFamily::Sp, r2})) {
              c.lambda2 = s;
              consider(c);
            }
          } else {
            c.lambda2 = r.lambda1;
            const int r1 = rest - rank(r.lambda1);
            if (r1 < 0) break;
            for (auto f : {SeriesFamily::OEvenPlus, SeriesFamily::OEvenMinus})
              for (const auto& s : series_cached({f, r1})) {
                c.lambda1 = s;
                consider(c);
              }
          }
          break;
        }
        default:
          bad_target(r, t);
      }
    }
    if (!out.witnesses.empty()) return out;
  }
  throw Error(ErrorKind::CapExceeded,
              "no partner up to dimension " + std::to_string(cap) + " for " + describe(r));
}

PreservationSum preservation_sum_general(const GeneralCharacter& r, SpType sp_type) {
  PreservationSum p;
  const long dim = char_dim(r);
  const long d = delta_char(r, sp_type);
  switch (r.family) {
    case CharFamily::Unitary:
      p.lhs = first_occurrence_general(r, CharTarget::UEven) + first_occurrence_general(r, CharTarget::UOdd);
      p.rhs = 2 * dim - 2 * d + 1;
      break;
    case CharFamily::OEven:
    case CharFamily::OOdd:
      p.lhs = first_occurrence_general(r, CharTarget::Sp) +
              first_occurrence_general(sgn_twist(r), CharTarget::Sp);
      p.rhs = 2 * dim - 2 * d;
      break;
    case CharFamily::Sp:
      if (sp_type == SpType::EvenTargets)
        p.lhs = first_occurrence_general(r, CharTarget::OEvenPlus) +
                first_occurrence_general(r, CharTarget::OEvenMinus);
      else
        p.lhs = first_occurrence_general(r, CharTarget::OOdd) +
                first_occurrence_general(r, CharTarget::OOddC);
      p.rhs = 2 * dim - 2 * d + 2;
      break;
  }
  return p;
}

WittSplit odd_witt_split(const GeneralCharacter& r) {
  require_family(r, {CharFamily::Sp}, "odd Witt split");
  return {first_occurrence_general(r, CharTarget::OOdd),
          first_occurrence_general(c_twist(r), CharTarget::OOdd)};
}

namespace {

const std::vector<std::string> kSampleLabels{"a", "b", "c"};

std::vector<Symbol> even_series(int r) {
  std::vector<Symbol> v = series_cached({SeriesFamily::OEvenPlus, r});
  const auto& m = series_cached({SeriesFamily::OEvenMinus, r});
  v.insert(v.end(), m.begin(), m.end());
  return v;
}

template <class T>
const T& pick(const std::vector<T>& v, std::mt19937_64& g) {
  return v[std::uniform_int_distribution<std::size_t>(0, v.size() - 1)(g)];
}

int uniform(int lo, int hi, std::mt19937_64& g) {
  return std::uniform_int_distribution<int>(lo, hi)(g);
}

std::vector<Block> random_blocks(int d0, int step, std::mt19937_64& g) {
  std::vector<Block> out;
  while (d0 > 0) {
    int k = step * uniform(1, d0 / step, g);
    out.push_back({pick(kSampleLabels, g), k});
    d0 -= k;
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

GeneralCharacter sample_character(CharFamily family, int max_dim, std::uint64_t root_seed,
                                  std::string_view suite, std::uint64_t index) {
  std::vector<std::uint32_t> words{
      static_cast<std::uint32_t>(root_seed), static_cast<std::uint32_t>(root_seed >> 32),
      static_cast<std::uint32_t>(index), static_cast<std::uint32_t>(index >> 32),
      static_cast<std::uint32_t>(family)};
  for (char ch : suite) words.push_back(static_cast<unsigned char>(ch));
  std::seed_seq seq(words.begin(), words.end());
  std::mt19937_64 g(seq);

  for (;;) {
    GeneralCharacter c;
    c.family = family;
    if (family == CharFamily::Unitary) {
      c.n = uniform(0, max_dim, g);
      int d0 = uniform(0, c.n, g);
      c.blocks = random_blocks(d0, 1, g);
      c.partition = pick(partitions_of(c.n - d0), g);
      return c;
    }
    const int nmax = family == CharFamily::OOdd ? (max_dim - 1) / 2 : max_dim / 2;
    c.n = uniform(0, nmax, g);
    const int d0 = 2 * uniform(0, c.n, g);
    c.blocks = random_blocks(d0, 2, g);
    const int rest = c.n - d0 / 2;
    const int r1 = uniform(0, rest, g);
    const int r2 = rest - r1;
    switch (family) {
      case CharFamily::Sp:
        c.lambda1 = pick(even_series(r1), g);
        c.lambda2 = pick(series_cached({SeriesFamily::Sp, r2}), g);
        break;
      case CharFamily::OEven: {
        c.eps = uniform(0, 1, g) ? Sign::Plus : Sign::Minus;
        c.lambda1 = pick(even_series(r1), g);
        Sign e2 = c.eps * series_sign(c.lambda1);
        const auto& pool = series_cached(
            {e2 == Sign::Plus ? SeriesFamily::OEvenPlus : SeriesFamily::OEvenMinus, r2});
        if (pool.empty()) continue;
        c.lambda2 = pick(pool, g);
        break;
      }
      case CharFamily::OOdd:
        c.lambda1 = pick(series_cached({SeriesFamily::Sp, r1}), g);
        c.lambda2 = pick(series_cached({SeriesFamily::Sp, r2}), g);
        c.sign_bit = uniform(0, 1, g) ? Sign::Plus : Sign::Minus;
        break;
      case CharFamily::Unitary:
        break;
    }
    if (auto e = problem(c)) throw *e;
    return c;
  }
}

namespace {

// Multisets of blocks with total dimension d0; parts are multiples of step.
void block_lists(const std::vector<std::string>& labels, std::size_t li, int left, int step,
                 std::vector<Block>& cur, std::vector<std::vector<Block>>& out) {
  if (li == labels.size()) {
    if (left == 0) {
      auto v = cur;
      std::sort(v.begin(), v.end());
      out.push_back(std::move(v));
    }
    return;
  }
  for (int share = 0; share <= left; share += step) {
    for (const auto& p : partitions_of(share / step)) {
      for (int part : p.parts()) cur.push_back({labels[li], part * step});
      block_lists(labels, li + 1, left - share, step, cur, out);
      cur.resize(cur.size() - p.length());
    }
  }
}

}  // namespace

std::vector<GeneralCharacter> all_characters(CharFamily family, int n, Sign eps,
                                             const std::vector<std::string>& labels) {
  std::vector<GeneralCharacter> out;
  const int step = family == CharFamily::Unitary ? 1 : 2;
  const int total = family == CharFamily::Unitary ? n : 2 * n;
  for (int d0 = 0; d0 <= total; d0 += step) {
    std::vector<std::vector<Block>> lists;
    std::vector<Block> cur;
    block_lists(labels, 0, d0, step, cur, lists);
    for (const auto& bl : lists) {
      GeneralCharacter c;
      c.family = family;
      c.n = n;
      c.blocks = bl;
      if (family == CharFamily::Unitary) {
        for (const auto& p : partitions_of(n - d0)) {
          c.partition = p;
          out.push_back(c);
        }
        continue;
      }
      const int rest = n - d0 / 2;
      for (int r1 = 0; r1 <= rest; ++r1) {
        std::vector<Symbol> first, second;
        if (family == CharFamily::OOdd) {
          first = series_cached({SeriesFamily::Sp, r1});
          second = series_cached({SeriesFamily::Sp, rest - r1});
        } else {
          first = even_series(r1);
          second = family == CharFamily::Sp ? series_cached({SeriesFamily::Sp, rest - r1})
                                            : even_series(rest - r1);
        }
        for (const auto& a : first)
          for (const auto& b : second) {
            c.lambda1 = a;
            c.lambda2 = b;
            if (family == CharFamily::OEven) {
              c.eps = eps;
              if (problem(c)) continue;
              out.push_back(c);
            } else if (family == CharFamily::OOdd) {
              for (Sign sg : {Sign::Plus, Sign::Minus}) {
                c.sign_bit = sg;
                out.push_back(c);
              }
            } else {
              out.push_back(c);
            }
          }
      }
    }
  }
  return out;
}

bool is_cuspidal(const GeneralCharacter& r) {
  if (r.d0() != 0) return false;
  if (r.family == CharFamily::Unitary) return is_cuspidal(symbol_from_partition(r.partition));
  return is_cuspidal(r.lambda1) && is_cuspidal(*r.lambda2);
}

std::string describe(const GeneralCharacter& r) {
  std::string s = std::string(to_string(r.family)) + " n=" + std::to_string(r.n);
  if (r.family == CharFamily::OEven) s += std::string(" eps=") + to_string(r.eps);
  s += " blocks=[";
  for (std::size_t i = 0; i < r.blocks.size(); ++i)
    s += (i ? "," : "") + r.blocks[i].label + ":" + std::to_string(r.blocks[i].dim);
  s += "]";
  if (r.family == CharFamily::Unitary) return s + " lambda=" + to_string(r.partition);
  s += " lambda1=" + to_string(r.lambda1) + " lambda2=" + to_string(*r.lambda2);
  if (r.sign_bit) s += std::string(" sign=") + to_string(*r.sign_bit);
  return s;
}

}  // namespace symtheta
