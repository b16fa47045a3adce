#include "cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <iomanip>
#include <json.hpp>
#include <sstream>

#include "symtheta/character_model.hpp"
#include "symtheta/cuspidal_catalog.hpp"
#include "symtheta/error.hpp"
#include "symtheta/theta_unipotent.hpp"
#include "symtheta/verify.hpp"

namespace symtheta::cli {

namespace {

using Json = nlohmann::ordered_json;

enum class Format { Text, Json, Csv };

struct Table {
  std::vector<std::string> cols;
  std::vector<Json> rows;  // objects keyed by cols
};

std::string cell(const Json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_null()) return "";
  return v.dump();
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char c : s) q += c == '"' ? std::string("\"\"") : std::string(1, c);
  return q + "\"";
}

void emit(const Table& t, Format f, std::ostream& out) {
  if (f == Format::Json) {
    Json arr = Json::array();
    for (const auto& r : t.rows) arr.push_back(r);
    out << arr.dump(2) << "\n";
    return;
  }
  if (f == Format::Csv) {
    for (std::size_t i = 0; i < t.cols.size(); ++i) out << (i ? "," : "") << csv_field(t.cols[i]);
    out << "\n";
    for (const auto& r : t.rows) {
      for (std::size_t i = 0; i < t.cols.size(); ++i)
        out << (i ? "," : "") << csv_field(cell(r.at(t.cols[i])));
      out << "\n";
    }
    return;
  }
  std::vector<std::size_t> w(t.cols.size());
  for (std::size_t i = 0; i < t.cols.size(); ++i) {
    w[i] = t.cols[i].size();
    for (const auto& r : t.rows) w[i] = std::max(w[i], cell(r.at(t.cols[i])).size());
  }
  auto line = [&](auto get) {
    for (std::size_t i = 0; i < t.cols.size(); ++i) {
      std::string s = get(i);
      out << s;
      if (i + 1 < t.cols.size()) out << std::string(w[i] - s.size() + 2, ' ');
    }
    out << "\n";
  };
  line([&](std::size_t i) { return t.cols[i]; });
  for (const auto& r : t.rows) line([&](std::size_t i) { return cell(r.at(t.cols[i])); });
}

Format parse_format(const std::string& s) {
  if (s == "json") return Format::Json;
  if (s == "csv") return Format::Csv;
  if (s == "text") return Format::Text;
  throw Error(ErrorKind::Parse, "unknown format '" + s + "'");
}

SeriesFamily parse_group(const std::string& g) {
  if (g == "sp") return SeriesFamily::Sp;
  if (g == "o+") return SeriesFamily::OEvenPlus;
  if (g == "o-") return SeriesFamily::OEvenMinus;
  if (g == "u") return SeriesFamily::U;
  throw Error(ErrorKind::Parse, "unknown group '" + g + "' (sp, o+, o-, u)");
}

std::string family_name(SeriesFamily f) {
  switch (f) {
    case SeriesFamily::Sp: return "sp";
    case SeriesFamily::OEvenPlus: return "o+";
    case SeriesFamily::OEvenMinus: return "o-";
    case SeriesFamily::U: return "u";
  }
  return "?";
}

Json symbol_row(const Symbol& s0) {
  Symbol s = normalize(s0);
  Bipartition u = upsilon(s);
  Json r;
  r["symbol"] = to_string(s);
  r["rank"] = rank(s);
  r["defect"] = defect(s);
  r["delta"] = delta(s);
  r["upsilon_upper"] = to_string(u.upper);
  r["upsilon_lower"] = to_string(u.lower);
  r["cuspidal"] = is_cuspidal(s);
  SeriesFamily f;
  r["series"] = even_group_family(s, f) ? Json(family_name(f)) : Json(nullptr);
  return r;
}

const std::vector<std::string> kSymbolCols{"symbol", "rank", "defect", "delta", "upsilon_upper",
                                           "upsilon_lower", "cuspidal", "series"};

Table cmd_symbol_info(const std::string& lit) {
  return {kSymbolCols, {symbol_row(parse_symbol(lit))}};
}

Table cmd_enumerate(const std::string& group, int n) {
  if (n < 0) throw Error(ErrorKind::Parse, "rank must be non-negative");
  SeriesFamily f = parse_group(group);
  Table t;
  if (f == SeriesFamily::U) {
    t.cols = {"partition", "two_core", "symbol", "rank", "defect", "delta", "cuspidal"};
    for (const auto& p : partitions_of(n)) {
      Symbol s = symbol_from_partition(p);
      Json r;
      r["partition"] = to_string(p);
      r["two_core"] = to_string(two_core(p));
      r["symbol"] = to_string(s);
      r["rank"] = rank(s);
      r["defect"] = defect(s);
      r["delta"] = delta(s);
      r["cuspidal"] = is_cuspidal(s);
      t.rows.push_back(r);
    }
    return t;
  }
  t.cols = kSymbolCols;
  for (const auto& s : enumerate_series({f, n})) t.rows.push_back(symbol_row(s));
  return t;
}

Table cmd_cuspidal(const std::string& group, int n) {
  SeriesFamily f = parse_group(group);
  auto rec = unipotent_cuspidal({f, n});
  auto found = unipotent_cuspidal_by_search({f, n});
  Table t{{"group", "rank", "symbol", "partition", "agrees_with_enumeration"}, {}};
  for (std::size_t i = 0; i < rec.symbols.size(); ++i) {
    Json r;
    r["group"] = family_name(f);
    r["rank"] = n;
    r["symbol"] = to_string(rec.symbols[i]);
    r["partition"] = f == SeriesFamily::U ? Json(to_string(rec.partitions[i])) : Json(nullptr);
    r["agrees_with_enumeration"] = rec.symbols == found.symbols;
    t.rows.push_back(r);
  }
  return t;
}

Table cmd_partners(const std::string& pair, int n, int m) {
  if (n < 0 || m < 0) throw Error(ErrorKind::Parse, "ranks must be non-negative");
  Table t;
  if (pair == "u:u") {
    t.cols = {"lambda", "lambda_prime"};
    for (const auto& [a, b] : weil_pairs_unitary(n, m)) {
      Json r;
      r["lambda"] = to_string(a);
      r["lambda_prime"] = to_string(b);
      t.rows.push_back(r);
    }
    return t;
  }
  Sign e;
  if (pair == "sp:o+") e = Sign::Plus;
  else if (pair == "sp:o-") e = Sign::Minus;
  else throw Error(ErrorKind::Parse, "unknown pair '" + pair + "' (sp:o+, sp:o-, u:u)");
  t.cols = {"sp_symbol", "o_symbol"};
  for (const auto& [a, b] : weil_pairs(n, e, m)) {
    Json r;
    r["sp_symbol"] = to_string(a);
    r["o_symbol"] = to_string(b);
    t.rows.push_back(r);
  }
  return t;
}

TargetFamily parse_target_family(const std::string& s) {
  if (s == "sp") return TargetFamily::Sp;
  if (s == "o+") return TargetFamily::OEvenPlus;
  if (s == "o-") return TargetFamily::OEvenMinus;
  if (s == "u-even") return TargetFamily::UEven;
  if (s == "u-odd") return TargetFamily::UOdd;
  throw Error(ErrorKind::Parse, "unknown target '" + s + "' (sp, o+, o-, u-even, u-odd)");
}

Table cmd_first(const std::string& group, const std::string& lit, const std::string& target,
                bool& agree) {
  SeriesFamily f = parse_group(group);
  TargetFamily tf = parse_target_family(target);
  Table t{{"group", "source", "target", "closed_partner", "closed_dimension", "oracle_partners",
           "oracle_dimension", "agree"},
          {}};
  Json r;
  r["group"] = family_name(f);
  r["target"] = target;
  if (f == SeriesFamily::U) {
    Partition p = parse_partition(lit);
    int closed = first_occurrence_unitary_closed(p, tf);
    auto o = first_occurrence_unitary(p, tf);
    std::string ws;
    for (std::size_t i = 0; i < o.witnesses.size(); ++i)
      ws += (i ? " " : "") + to_string(o.witnesses[i]);
    r["source"] = to_string(p);
    r["closed_partner"] = nullptr;
    r["closed_dimension"] = closed;
    r["oracle_partners"] = ws;
    r["oracle_dimension"] = o.dimension;
    agree = closed == o.dimension;
  } else {
    Symbol s = normalize(parse_symbol(lit));
    if (!series_contains({f, rank(s)}, s))
      throw Error(ErrorKind::WrongSeries, to_string(s) + " is not in the " + group + " series");
    auto c = first_occurrence_closed(s, tf);
    auto o = first_occurrence_bruteforce(s, tf);
    std::string ws;
    for (std::size_t i = 0; i < o.witnesses.size(); ++i)
      ws += (i ? " " : "") + to_string(o.witnesses[i]);
    r["source"] = to_string(s);
    r["closed_partner"] = to_string(c.partner);
    r["closed_dimension"] = c.space_dimension;
    r["oracle_partners"] = ws;
    r["oracle_dimension"] = o.space_dimension;
    agree = c.space_dimension == o.space_dimension && o.witnesses.size() == 1 &&
            o.partner == c.partner;
  }
  r["agree"] = agree;
  t.rows.push_back(r);
  return t;
}

Table cmd_verify(const std::string& suite, int max_rank, std::uint64_t seed, bool& pass) {
  auto rep = run_suite(suite, max_rank, seed);
  pass = rep.pass();
  Table t{{"suite", "identity", "checked", "failed", "pass", "first_failure"}, {}};
  for (const auto& i : rep.items) {
    Json r;
    r["suite"] = rep.suite;
    r["identity"] = i.identity;
    r["checked"] = i.checked;
    r["failed"] = i.failed;
    r["pass"] = i.pass();
    r["first_failure"] = i.first_failure;
    t.rows.push_back(r);
  }
  return t;
}

CharFamily parse_char_family(const std::string& s) {
  if (s == "u") return CharFamily::Unitary;
  if (s == "sp") return CharFamily::Sp;
  if (s == "o-even" || s == "o+" || s == "o-") return CharFamily::OEven;
  if (s == "o-odd") return CharFamily::OOdd;
  throw Error(ErrorKind::Parse, "unknown character family '" + s + "'");
}

Sign parse_sign(const Json& v) {
  std::string s = v.is_string() ? v.get<std::string>() : std::to_string(v.get<int>());
  if (s == "+" || s == "1") return Sign::Plus;
  if (s == "-" || s == "-1") return Sign::Minus;
  throw Error(ErrorKind::Parse, "bad sign '" + s + "'");
}

GeneralCharacter parse_character(const std::string& text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const std::exception& e) {
    throw Error(ErrorKind::Parse, std::string("character literal: ") + e.what());
  }
  try {
    CharacterSpec s;
    std::string fam = j.at("family").get<std::string>();
    s.family = parse_char_family(fam);
    s.n = j.at("n").get<int>();
    if (fam == "o+") s.eps = Sign::Plus;
    if (fam == "o-") s.eps = Sign::Minus;
    if (j.contains("eps") && !j["eps"].is_null()) s.eps = parse_sign(j["eps"]);
    if (j.contains("d0_blocks"))
      for (const auto& b : j["d0_blocks"]) {
        if (b.is_number()) s.blocks.push_back({"a", b.get<int>()});
        else s.blocks.push_back({b.at("label").get<std::string>(), b.at("dim").get<int>()});
      }
    s.lambda1 = j.at("lambda1").get<std::string>();
    if (j.contains("lambda2") && !j["lambda2"].is_null()) s.lambda2 = j["lambda2"].get<std::string>();
    if (j.contains("sign") && !j["sign"].is_null()) s.sign_bit = parse_sign(j["sign"]);
    return make_character(s);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::Parse, std::string("character literal: ") + e.what());
  }
}

std::vector<CharTarget> legal_targets(const GeneralCharacter& r) {
  switch (r.family) {
    case CharFamily::Unitary: return {CharTarget::UEven, CharTarget::UOdd};
    case CharFamily::Sp:
      return {CharTarget::OEvenPlus, CharTarget::OEvenMinus, CharTarget::OOdd, CharTarget::OOddC};
    default: return {CharTarget::Sp};
  }
}

Table cmd_character_first(const std::string& lit, const std::string& target, bool& agree) {
  auto rho = parse_character(lit);
  std::vector<CharTarget> targets =
      target.empty() ? legal_targets(rho) : std::vector<CharTarget>{parse_char_target(target)};
  Table t{{"character", "dim", "target", "closed_dimension", "oracle_dimension", "agree"}, {}};
  agree = true;
  for (auto tg : targets) {
    int c = first_occurrence_general(rho, tg);
    int o = first_occurrence_oracle(rho, tg).dimension;
    agree = agree && c == o;
    Json r;
    r["character"] = describe(rho);
    r["dim"] = char_dim(rho);
    r["target"] = to_string(tg);
    r["closed_dimension"] = c;
    r["oracle_dimension"] = o;
    r["agree"] = c == o;
    t.rows.push_back(r);
  }
  return t;
}

Table cmd_character_preservation(const std::string& lit, bool& pass) {
  auto rho = parse_character(lit);
  Table t{{"character", "dim", "type", "delta", "lhs", "rhs", "holds"}, {}};
  std::vector<std::pair<SpType, const char*>> types{{SpType::EvenTargets, "default"}};
  if (rho.family == CharFamily::Sp)
    types = {{SpType::EvenTargets, "even-targets"}, {SpType::OddTargets, "odd-targets"}};
  pass = true;
  for (auto [ty, name] : types) {
    auto p = preservation_sum_general(rho, ty);
    pass = pass && p.holds();
    Json r;
    r["character"] = describe(rho);
    r["dim"] = char_dim(rho);
    r["type"] = name;
    r["delta"] = delta_char(rho, ty);
    r["lhs"] = p.lhs;
    r["rhs"] = p.rhs;
    r["holds"] = p.holds();
    t.rows.push_back(r);
  }
  return t;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Lusztig symbols, theta correspondence and first occurrences"};
  app.require_subcommand(1);
  std::string format = "text", out_file, group, symbol, target, pair, suite, json;
  int n = 0, corank = 0, max_rank = 8;
  std::uint64_t seed = 42;
  app.add_option("--format", format, "text, json or csv")->capture_default_str();
  app.add_option("--out", out_file, "write to FILE instead of stdout");

  auto* info = app.add_subcommand("symbol-info", "statistics of one symbol");
  info->add_option("--symbol", symbol, "symbol literal a,b|c")->required();

  auto* en = app.add_subcommand("enumerate", "list a symbol series");
  en->add_option("--group", group, "sp, o+, o- or u")->required();
  en->add_option("--rank", n, "rank")->required();

  auto* cu = app.add_subcommand("cuspidal", "unipotent cuspidal characters of a group");
  cu->add_option("--group", group, "sp, o+, o- or u")->required();
  cu->add_option("--rank", n, "rank")->required();

  auto* th = app.add_subcommand("theta", "unipotent theta correspondence");
  th->require_subcommand(1);
  auto* partners = th->add_subcommand("partners", "Weil decomposition pairs");
  partners->add_option("--pair", pair, "sp:o+, sp:o- or u:u")->required();
  partners->add_option("--rank", n, "rank of the first group")->required();
  partners->add_option("--corank", corank, "rank of the second group")->required();
  auto* first = th->add_subcommand("first", "first occurrence, closed form and oracle");
  first->add_option("--group", group, "sp, o+, o- or u")->required();
  first->add_option("--symbol", symbol, "symbol literal, or partition for u")->required();
  first->add_option("--target", target, "o+, o-, sp, u-even or u-odd")->required();

  auto* ve = app.add_subcommand("verify", "run a verification suite");
  ve->add_option("suite", suite, "suite name")->required();
  ve->add_option("--max-rank", max_rank, "bound")->capture_default_str();
  ve->add_option("--seed", seed, "root seed")->capture_default_str();

  auto* ch = app.add_subcommand("character", "general characters given as JSON");
  ch->require_subcommand(1);
  auto* cfirst = ch->add_subcommand("first", "first occurrences, closed form and oracle");
  cfirst->add_option("--json", json, "character literal")->required();
  cfirst->add_option("--target", target, "u-even, u-odd, sp, o+, o-, o-odd, o-odd-c");
  auto* cpres = ch->add_subcommand("preservation", "preservation sum");
  cpres->add_option("--json", json, "character literal")->required();

  for (auto* sub : {info, en, cu, th, partners, first, ve, ch, cfirst, cpres}) sub->fallthrough();

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    Format fmt = parse_format(format);
    Table t;
    int status = 0;
    bool ok = true;
    if (*info) {
      t = cmd_symbol_info(symbol);
    } else if (*en) {
      t = cmd_enumerate(group, n);
    } else if (*cu) {
      t = cmd_cuspidal(group, n);
    } else if (*partners) {
      t = cmd_partners(pair, n, corank);
    } else if (*first) {
      t = cmd_first(group, symbol, target, ok);
    } else if (*ve) {
      if (max_rank < 0) throw Error(ErrorKind::Parse, "max-rank must be non-negative");
      t = cmd_verify(suite, max_rank, seed, ok);
    } else if (*cfirst) {
      t = cmd_character_first(json, target, ok);
    } else if (*cpres) {
      t = cmd_character_preservation(json, ok);
    }
    if (!ok) status = 1;
    if (out_file.empty()) {
      emit(t, fmt, out);
    } else {
      std::ofstream f(out_file, std::ios::binary);
      if (!f) throw Error(ErrorKind::Parse, "cannot open " + out_file);
      emit(t, fmt, f);
    }
    return status;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    bool internal = e.kind() == ErrorKind::CapExceeded || e.kind() == ErrorKind::AssertionFailure;
    return internal ? 1 : 2;
  }
}

}  // namespace symtheta::cli
