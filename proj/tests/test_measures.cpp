#include "doctest.h"

#include <cmath>
#include <random>

#include "bbwt/measures.hpp"
#include "bbwt/transforms.hpp"
#include "oracles.hpp"

using namespace bbwt;

namespace {

std::vector<std::size_t> lengths(const Lz77Factorization& f) {
  std::vector<std::size_t> out;
  for (const auto& x : f.factors) out.push_back(x.length);
  return out;
}

void check_lz(const std::string& w) {
  const auto f = lz77_factorize(w);
  REQUIRE(lengths(f) == oracle::lz77_lengths(w));
  std::size_t pos = 1;
  for (const auto& x : f.factors) {
    REQUIRE(x.start == pos);
    if (x.source) {
      REQUIRE(*x.source < x.start);
      for (std::size_t k = 0; k < x.length; ++k) REQUIRE(w[*x.source - 1 + k] == w[x.start - 1 + k]);
    } else {
      REQUIRE(x.length == 1);
    }
    pos += x.length;
  }
  REQUIRE(pos == w.size() + 1);
}

}  // namespace

TEST_CASE("lz77 golden values") {
  const auto f = lz77_factorize("abbbabbababab");
  CHECK(f.z() == 6);
  CHECK(lengths(f) == std::vector<std::size_t>{1, 1, 2, 3, 2, 4});
  CHECK(f.factors[2] == Lz77Factor{3, 2, 2});
  CHECK(f.factors[0] == Lz77Factor{1, 1, std::nullopt});

  const auto aaaa = lz77_factorize("aaaa");
  CHECK(aaaa.z() == 2);
  CHECK(aaaa.factors[1] == Lz77Factor{2, 3, 1});
  CHECK(lz77_factorize("ab").z() == 2);
  CHECK_THROWS_AS(lz77_factorize(""), std::invalid_argument);
}

TEST_CASE("lz77 agrees with the quadratic greedy parse") {
  oracle::for_each_string(2, 10, check_lz);
  oracle::for_each_string(3, 6, check_lz);
  std::mt19937_64 rng(29);
  for (int t = 0; t < 200; ++t) {
    std::string w = oracle::random_string(rng, 1 + rng() % 300, 1 + rng() % 4);
    if (t % 2) w = w + w + w.substr(w.size() / 2);
    check_lz(w);
  }
}

TEST_CASE("fibonacci words") {
  CHECK(fibonacci_word(0) == "b");
  CHECK(fibonacci_word(1) == "a");
  CHECK(fibonacci_word(2) == "ab");
  CHECK(fibonacci_word(3) == "aba");
  CHECK(fibonacci_word(4) == "abaab");
  CHECK(fibonacci_word(7) == fibonacci_word(6) + fibonacci_word(5));
  CHECK(fibonacci_length(20) == std::optional<std::size_t>{10946});
  CHECK(fibonacci_length(19) == std::optional<std::size_t>{6765});
  CHECK(fibonacci_word(20).size() == 10946);
  CHECK_FALSE(fibonacci_length(200).has_value());
  CHECK_THROWS_AS(fibonacci_word(30, 1000), std::length_error);
}

TEST_CASE("fibonacci words have two BWT runs") {
  for (std::size_t k = 2; k <= 20; ++k) CHECK(bwt(fibonacci_word(k)).runs == 2);
}

TEST_CASE("measure report") {
  const auto r = measure_report("abbbabbababab");
  CHECK(r.n == 13);
  CHECK(r.r_b == 6);
  CHECK(r.r == bwt("abbbabbababab").runs);
  CHECK(r.ell == 3);
  CHECK(r.total_factors == 5);
  CHECK(r.z == 6);
  CHECK(r.bms_phrases == 9);
  const double lg = std::log2(13.0);
  CHECK(r.ratio_rb_over_zlog2n == doctest::Approx(6.0 / (6.0 * lg * lg)));
  CHECK(measure_report("a").ratio_rb_over_zlog2n == 0.0);
}

TEST_CASE("fibonacci separation table") {
  const auto rows = fibonacci_separation_table(5);
  REQUIRE(rows.size() == 6);
  const std::size_t expected_n[] = {3, 8, 21, 55, 144, 377};
  for (std::size_t i = 0; i < rows.size(); ++i) {
    CHECK(rows[i].i == i);
    CHECK(rows[i].n == expected_n[i]);
    CHECK(rows[i].ell == i + 2);
    CHECK(rows[i].r_b == 2 * i + 3);
    CHECK(rows[i].r == 2);
  }
}
