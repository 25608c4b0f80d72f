#include "doctest.h"

#include <algorithm>
#include <numeric>
#include <random>

#include "bbwt/suffix_sort.hpp"
#include "oracles.hpp"

using namespace bbwt;

namespace {

std::vector<Index> naive_sa(const std::string& s) {
  std::vector<Index> sa(s.size());
  std::iota(sa.begin(), sa.end(), Index{0});
  std::sort(sa.begin(), sa.end(), [&](Index a, Index b) {
    return oracle::byte_less(s.substr(a), s.substr(b));
  });
  return sa;
}

std::size_t naive_lce(const std::string& s, std::size_t i, std::size_t j) {
  std::size_t l = 0;
  while (i + l < s.size() && j + l < s.size() && s[i + l] == s[j + l]) ++l;
  return l;
}

}  // namespace

TEST_CASE("suffix array of banana") {
  const std::vector<Index> expected{5, 3, 1, 0, 4, 2};
  CHECK(suffix_array("banana") == expected);
  CHECK(naive_sa("banana") == expected);
  const auto lcp = lcp_array("banana", expected);
  CHECK(lcp == std::vector<Index>{0, 1, 3, 0, 0, 2});
  CHECK(suffix_array("").empty());
}

TEST_CASE("suffix array and lcp agree with sorting") {
  oracle::for_each_string(2, 9, [](const std::string& s) {
    const auto sa = suffix_array(s);
    REQUIRE(sa == naive_sa(s));
    const auto lcp = lcp_array(s, sa);
    for (std::size_t r = 1; r < s.size(); ++r) REQUIRE(lcp[r] == naive_lce(s, sa[r - 1], sa[r]));
  });
  std::mt19937_64 rng(3);
  for (int t = 0; t < 300; ++t) {
    std::string s = oracle::random_string(rng, 1 + rng() % 300, 1 + rng() % 5);
    if (t % 2) s += s.substr(0, s.size() / 2) + s;
    if (t % 5 == 0) s[0] = static_cast<char>(0xF0);  // high bytes sort last
    REQUIRE(suffix_array(s) == naive_sa(s));
  }
}

TEST_CASE("integer alphabet overload") {
  const std::vector<Index> s{2, 1, 2, 1, 0};
  const std::vector<Index> expected{4, 3, 1, 2, 0};
  CHECK(suffix_array(s, 2) == expected);
}

TEST_CASE("lce queries across block boundaries") {
  std::mt19937_64 rng(5);
  for (int t = 0; t < 40; ++t) {
    std::string s = oracle::random_string(rng, 1 + rng() % 400, 1 + rng() % 3);
    if (t % 2) s = s + s + s.substr(0, s.size() / 3);
    const LceIndex index(s);
    for (int q = 0; q < 500; ++q) {
      const std::size_t i = rng() % s.size(), j = rng() % s.size();
      REQUIRE(index.lce(i, j) == naive_lce(s, i, j));
    }
  }
}

TEST_CASE("cyclic_order sorts rotations of a cycle") {
  // One cycle 0 -> 1 -> ... -> n-1 -> 0 over "banana".
  const std::string w = "banana";
  std::vector<Index> key, next;
  for (std::size_t i = 0; i < w.size(); ++i) {
    key.push_back(static_cast<unsigned char>(w[i]));
    next.push_back(static_cast<Index>((i + 1) % w.size()));
  }
  const auto order = cyclic_order(key, next, 256, 2 * w.size());
  const std::vector<Index> expected{5, 3, 1, 0, 4, 2};
  CHECK(order == expected);

  // Period two: equal rotations stay in index order.
  const std::vector<Index> k2{0, 1, 0, 1}, n2{1, 2, 3, 0};
  CHECK(cyclic_order(k2, n2, 2, 8) == std::vector<Index>{0, 2, 1, 3});
  CHECK_THROWS_AS(cyclic_order(k2, std::vector<Index>{1, 0}, 2, 4), std::invalid_argument);
}
