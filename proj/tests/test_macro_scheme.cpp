#include "doctest.h"

#include <random>

#include "bbwt/macro_scheme.hpp"
#include "bbwt/strings.hpp"
#include "bbwt/transforms.hpp"
#include "oracles.hpp"

using namespace bbwt;

namespace {

std::size_t bound_for(const std::string& w) {
  return 3 * bbwt::bbwt(w).runs + lyndon_factorize(w).necklace_count();
}

}  // namespace

TEST_CASE("induced scheme for abbbabbababab") {
  const std::string w = "abbbabbababab";
  const auto m = induce_bms(w);
  CHECK(m.n == 13);
  const std::vector<Phrase> expected{
      Literal{1, 'a'}, Literal{2, 'b'}, Reference{3, 2, 6},
      Literal{5, 'a'}, Literal{6, 'b'}, Reference{7, 1, 13},
      Literal{8, 'a'}, Literal{9, 'b'}, Reference{10, 4, 8}};
  CHECK(m.phrases == expected);
  CHECK(m.literal_count() == 6);
  CHECK(m.literal_count() == bbwt::bbwt(w).runs);
  CHECK(decode_bms(m) == w);

  const auto report = validate_bms(m, w);
  CHECK(report.passed());
  CHECK(report.phrase_count == 9);
  CHECK(report.bound == 3 * 6 + 3);
}

TEST_CASE("small schemes") {
  const auto aaa = induce_bms("aaa");
  CHECK(aaa.phrases == std::vector<Phrase>{Literal{1, 'a'}, Reference{2, 2, 1}});
  CHECK(decode_bms(aaa) == "aaa");

  const auto ab = induce_bms("ab");
  CHECK(ab.phrases == std::vector<Phrase>{Literal{1, 'a'}, Literal{2, 'b'}});

  CHECK(induce_bms("z").phrases == std::vector<Phrase>{Literal{1, 'z'}});
  CHECK_THROWS_AS(induce_bms(""), std::invalid_argument);
}

TEST_CASE("induced schemes decode and respect the phrase bound") {
  auto check = [](const std::string& w) {
    const auto m = induce_bms(w);
    const auto report = validate_bms(m, w);
    REQUIRE(report.well_formed);
    REQUIRE(report.acyclic);
    REQUIRE(report.decodes);
    REQUIRE(report.phrase_count <= bound_for(w));
    REQUIRE(m.literal_count() == bbwt::bbwt(w).runs);
  };
  oracle::for_each_string(2, 10, check);
  oracle::for_each_string(3, 6, check);
  std::mt19937_64 rng(23);
  for (int t = 0; t < 200; ++t) {
    std::string w = oracle::random_string(rng, 1 + rng() % 200, 1 + rng() % 4);
    if (t % 3 == 0) w += w + w.substr(0, w.size() / 2);
    check(w);
  }
}

TEST_CASE("decoder rejects cycles and malformed tilings") {
  MacroScheme cyclic{3, {Literal{1, 'a'}, Reference{2, 1, 3}, Reference{3, 1, 2}}};
  CHECK_THROWS_AS(decode_bms(cyclic), SchemeError);
  const auto r = validate_bms(cyclic, "aaa");
  CHECK(r.well_formed);
  CHECK_FALSE(r.acyclic);
  CHECK_FALSE(r.passed());

  // Self-overlap to the left is fine: position p copies p-1.
  MacroScheme run{4, {Literal{1, 'x'}, Reference{2, 3, 1}}};
  CHECK(decode_bms(run) == "xxxx");

  MacroScheme gap{3, {Literal{1, 'a'}, Literal{3, 'a'}}};
  CHECK_THROWS_AS(decode_bms(gap), SchemeError);
  CHECK_FALSE(validate_bms(gap, "aaa").well_formed);

  MacroScheme short_cover{3, {Literal{1, 'a'}, Literal{2, 'a'}}};
  CHECK_THROWS_AS(decode_bms(short_cover), SchemeError);

  MacroScheme out_of_range{3, {Literal{1, 'a'}, Reference{2, 2, 3}}};
  CHECK_THROWS_AS(decode_bms(out_of_range), SchemeError);

  MacroScheme huge{3, {Literal{1, 'a'}, Reference{2, SIZE_MAX, 1}}};
  CHECK_THROWS_AS(decode_bms(huge), SchemeError);
}

TEST_CASE("validate detects a scheme for a different text") {
  auto m = induce_bms("abbbabbababab");
  std::get<Literal>(m.phrases[1]).symbol = 'c';
  const auto report = validate_bms(m, "abbbabbababab");
  CHECK(report.well_formed);
  CHECK(report.acyclic);
  CHECK_FALSE(report.decodes);
}

TEST_CASE("text serialization round-trips") {
  const std::string w = std::string("ab\x00\xff", 4) + "abab";
  const auto m = induce_bms(w);
  const auto text = to_string(m);
  CHECK(text.rfind("BMS 8\n", 0) == 0);
  const auto back = parse_bms(text);
  CHECK(back.n == m.n);
  CHECK(back.phrases == m.phrases);
  CHECK(decode_bms(back) == w);

  CHECK(to_string(induce_bms("aaa")) == "BMS 3\nL 1 61\nR 2 2 1\n");
  CHECK(parse_bms("BMS 3\r\n\nL 1 61\n  R 2 2 1\n").phrases == induce_bms("aaa").phrases);
}

TEST_CASE("parser rejects bad input") {
  CHECK_THROWS_AS(parse_bms(""), SchemeError);
  CHECK_THROWS_AS(parse_bms("BMX 3\n"), SchemeError);
  CHECK_THROWS_AS(parse_bms("BMS -3\n"), SchemeError);
  CHECK_THROWS_AS(parse_bms("BMS 3\nL 1 6\n"), SchemeError);
  CHECK_THROWS_AS(parse_bms("BMS 3\nL 1 zz\n"), SchemeError);
  CHECK_THROWS_AS(parse_bms("BMS 3\nR 2 2\n"), SchemeError);
  CHECK_THROWS_AS(parse_bms("BMS 3\nQ 1\n"), SchemeError);
  CHECK_THROWS_AS(parse_bms("BMS 3\nR 2 x 1\n"), SchemeError);
}
