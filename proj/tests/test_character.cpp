#include "doctest.h"
#include "symtheta/character_model.hpp"
#include "symtheta/error.hpp"

using namespace symtheta;

namespace {

Symbol S(const char* lit) { return parse_symbol(lit); }

GeneralCharacter sp(int n, std::vector<int> dims, const char* l1, const char* l2) {
  CharacterSpec s;
  s.family = CharFamily::Sp;
  s.n = n;
  for (int d : dims) s.blocks.push_back({"a", d});
  s.lambda1 = l1;
  s.lambda2 = l2;
  return make_character(s);
}

GeneralCharacter oeven(int n, Sign eps, const char* l1, const char* l2) {
  CharacterSpec s;
  s.family = CharFamily::OEven;
  s.n = n;
  s.eps = eps;
  s.lambda1 = l1;
  s.lambda2 = l2;
  return make_character(s);
}

GeneralCharacter oodd(int n, const char* l1, const char* l2, Sign sign) {
  CharacterSpec s;
  s.family = CharFamily::OOdd;
  s.n = n;
  s.lambda1 = l1;
  s.lambda2 = l2;
  s.sign_bit = sign;
  return make_character(s);
}

ErrorKind kind_of(const CharacterSpec& s) {
  try {
    make_character(s);
  } catch (const Error& e) {
    return e.kind();
  }
  return ErrorKind::AssertionFailure;
}

}  // namespace

TEST_CASE("character construction") {
  auto cusp4 = sp(2, {}, "|", "|2,1,0");
  CHECK(char_dim(cusp4) == 4);
  auto pseudo = sp(1, {}, "1,0|", "0|");
  CHECK(char_dim(pseudo) == 2);
  CHECK_NOTHROW(sp(3, {4}, "1|0", "0|"));

  CharacterSpec bad;
  bad.family = CharFamily::Sp;
  bad.n = 3;
  bad.blocks = {{"a", 6}};
  bad.lambda1 = "1|0";
  bad.lambda2 = "0|";
  CHECK(kind_of(bad) == ErrorKind::DimensionMismatch);
  bad.blocks = {{"a", 4}};
  bad.lambda2 = "|";
  CHECK(kind_of(bad) == ErrorKind::WrongSeries);
  bad.lambda2 = "0|";
  bad.sign_bit = Sign::Plus;
  CHECK(kind_of(bad) == ErrorKind::SpuriousField);

  CharacterSpec odd;
  odd.family = CharFamily::OOdd;
  odd.n = 0;
  odd.lambda1 = "0|";
  odd.lambda2 = "0|";
  CHECK(kind_of(odd) == ErrorKind::MissingSignBit);

  CharacterSpec oe;
  oe.family = CharFamily::OEven;
  oe.n = 1;
  oe.eps = Sign::Plus;
  oe.lambda1 = "1,0|";
  oe.lambda2 = "|";
  CHECK(kind_of(oe) == ErrorKind::WrongSeries);

  CharacterSpec u;
  u.family = CharFamily::Unitary;
  u.n = 3;
  u.blocks = {{"a", 2}};
  u.lambda1 = "1";
  CHECK(char_dim(make_character(u)) == 3);
  u.lambda2 = "|";
  CHECK(kind_of(u) == ErrorKind::SpuriousField);

  CHECK(char_dim(oodd(2, "|2,1,0", "0|", Sign::Plus)) == 5);
}

TEST_CASE("delta of characters") {
  CHECK(delta_char(sp(2, {}, "|", "|2,1,0"), SpType::EvenTargets) == 0);
  CHECK(delta_char(sp(3, {2}, "1|0", "1,0|1"), SpType::EvenTargets) == 1);
  CHECK(delta_char(sp(1, {}, "1,0|", "0|"), SpType::OddTargets) == 0);
}

TEST_CASE("twists") {
  auto o = oeven(1, Sign::Plus, "1|0", "|");
  auto t = sgn_twist(o);
  CHECK(t.lambda1 == S("0|1"));
  CHECK(*t.lambda2 == S("|"));
  CHECK(sgn_twist(t) == o);
  auto od = oodd(0, "0|", "0|", Sign::Plus);
  CHECK(*sgn_twist(od).sign_bit == Sign::Minus);
  CHECK(sgn_twist(sgn_twist(od)) == od);

  auto pseudo = sp(1, {}, "1,0|", "0|");
  CHECK(c_twist(pseudo).lambda1 == S("|1,0"));
  CHECK(c_twist(c_twist(pseudo)) == pseudo);
  auto triv = sp(0, {}, "|", "0|");
  CHECK(c_twist(triv) == triv);
  CHECK_THROWS_AS(c_twist(o), Error);
  CHECK_THROWS_AS(sgn_twist(pseudo), Error);
}

TEST_CASE("correspondence examples") {
  CHECK(corresponds(sp(0, {}, "|", "0|"), oeven(0, Sign::Plus, "|", "|")));
  CHECK(corresponds(sp(2, {}, "|", "|2,1,0"), oodd(2, "|2,1,0", "0|", Sign::Plus)));
  CHECK(corresponds(oodd(2, "|2,1,0", "0|", Sign::Plus), sp(2, {}, "|", "|2,1,0")));
  CHECK(corresponds(sp(1, {}, "1,0|", "0|"), oeven(1, Sign::Minus, "1,0|", "|")));
  CHECK_THROWS_AS(corresponds(oeven(0, Sign::Plus, "|", "|"), oeven(0, Sign::Plus, "|", "|")),
                  Error);
}

TEST_CASE("first occurrence examples") {
  auto pseudo = sp(1, {}, "1,0|", "0|");
  CHECK(first_occurrence_general(pseudo, CharTarget::OOdd) == 5);
  CHECK(first_occurrence_general(c_twist(pseudo), CharTarget::OOdd) == 1);
  auto six = sp(3, {2}, "1|0", "1,0|1");
  CHECK(first_occurrence_general(six, CharTarget::OEvenPlus) == 6);
  CHECK(first_occurrence_general(six, CharTarget::OEvenMinus) == 6);
  CHECK(first_occurrence_oracle(six, CharTarget::OEvenPlus).dimension == 6);
  CHECK(first_occurrence_oracle(six, CharTarget::OEvenMinus).dimension == 6);
  CHECK(first_occurrence_oracle(pseudo, CharTarget::OOdd).dimension == 5);
  CHECK(first_occurrence_oracle(pseudo, CharTarget::OOddC).dimension == 1);
  CHECK_THROWS_AS(first_occurrence_general(six, CharTarget::Sp), Error);

  auto p1 = preservation_sum_general(pseudo, SpType::OddTargets);
  CHECK(p1.lhs == 6);
  CHECK(p1.rhs == 6);
  auto p2 = preservation_sum_general(six, SpType::EvenTargets);
  CHECK(p2.lhs == 12);
  CHECK(p2.rhs == 12);
  auto p3 = preservation_sum_general(oeven(0, Sign::Plus, "|", "|"));
  CHECK(p3.lhs == 0);
  CHECK(p3.rhs == 0);

  auto w = odd_witt_split(pseudo);
  CHECK(w.n_plus == 5);
  CHECK(w.n_minus == 1);
  auto w4 = odd_witt_split(sp(2, {}, "|", "|2,1,0"));
  CHECK(w4.n_plus == 5);
  CHECK(w4.n_minus == 5);
  auto w0 = odd_witt_split(sp(0, {}, "|", "0|"));
  CHECK(w0.n_plus == 1);
  CHECK(w0.n_minus == 1);
}

TEST_CASE("sampled characters: closed form, oracle, preservation") {
  struct Case {
    CharFamily f;
    std::vector<CharTarget> targets;
  };
  const std::vector<Case> cases{
      {CharFamily::Unitary, {CharTarget::UEven, CharTarget::UOdd}},
      {CharFamily::Sp, {CharTarget::OEvenPlus, CharTarget::OEvenMinus, CharTarget::OOdd, CharTarget::OOddC}},
      {CharFamily::OEven, {CharTarget::Sp}},
      {CharFamily::OOdd, {CharTarget::Sp}},
  };
  for (const auto& cs : cases)
    for (std::uint64_t i = 0; i < 60; ++i) {
      auto rho = sample_character(cs.f, 10, 7, "unit", i);
      CAPTURE(describe(rho));
      REQUIRE(char_dim(rho) <= 10);
      for (auto t : cs.targets) {
        auto o = first_occurrence_oracle(rho, t);
        CHECK(o.dimension == first_occurrence_general(rho, t));
      }
      if (cs.f == CharFamily::Sp) {
        CHECK(preservation_sum_general(rho, SpType::EvenTargets).holds());
        CHECK(preservation_sum_general(rho, SpType::OddTargets).holds());
        CHECK(delta_char(c_twist(rho), SpType::OddTargets) == delta_char(rho, SpType::OddTargets));
      } else {
        CHECK(preservation_sum_general(rho).holds());
      }
      if (cs.f == CharFamily::OEven || cs.f == CharFamily::OOdd)
        CHECK(delta_char(sgn_twist(rho)) == delta_char(rho));
    }
}

TEST_CASE("samples are reproducible") {
  for (std::uint64_t i = 0; i < 20; ++i)
    CHECK(sample_character(CharFamily::Sp, 12, 42, "s", i) ==
          sample_character(CharFamily::Sp, 12, 42, "s", i));
}

TEST_CASE("exhaustive character lists are valid") {
  for (int n = 0; n <= 3; ++n) {
    for (const auto& c : all_characters(CharFamily::Sp, n, Sign::Plus, {"a", "b"})) {
      CHECK(char_dim(c) == 2 * n);
    }
    for (Sign e : {Sign::Plus, Sign::Minus})
      for (const auto& c : all_characters(CharFamily::OEven, n, e, {"a"}))
        CHECK(series_sign(c.lambda1) * series_sign(*c.lambda2) == e);
  }
}
