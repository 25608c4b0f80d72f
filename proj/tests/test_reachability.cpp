#include "doctest.h"

#include <random>
#include <set>

#include "bbwt/reachability.hpp"
#include "bbwt/transforms.hpp"
#include "oracles.hpp"

using namespace bbwt;

namespace {

ParikhVector pv(std::initializer_list<std::pair<char, std::size_t>> counts) {
  std::array<std::size_t, 256> c{};
  for (auto [s, k] : counts) c[static_cast<unsigned char>(s)] = k;
  return ParikhVector(c);
}

}  // namespace

TEST_CASE("parikh vectors") {
  const auto p = parikh("banana");
  CHECK(p.size() == 6);
  CHECK(p.count('a') == 3);
  CHECK(p.symbols() == std::vector<unsigned char>{'a', 'b', 'n'});
  CHECK(canonical_smallest(p) == "aaabnn");
  CHECK(p == pv({{'a', 3}, {'b', 1}, {'n', 2}}));
  CHECK_THROWS_AS(parikh(""), std::invalid_argument);
  CHECK_THROWS_AS(ParikhVector(std::array<std::size_t, 256>{}), std::invalid_argument);
}

TEST_CASE("op paths") {
  const auto path = parse_op_path("r2,b-1,r5");
  REQUIRE(path.steps.size() == 3);
  CHECK(path.steps[1] == Step{Step::Kind::transform, -1});
  CHECK(to_string(path) == "r2,b-1,r5");
  CHECK(parse_op_path("").steps.empty());
  CHECK_THROWS_AS(parse_op_path("x1"), std::invalid_argument);
  CHECK_THROWS_AS(parse_op_path("r"), std::invalid_argument);
  CHECK_THROWS_AS(parse_op_path("r1,"), std::invalid_argument);
  CHECK_THROWS_AS(parse_op_path("r1x"), std::invalid_argument);

  CHECK(to_string(parse_op_path("r1,r2,b1,b-1,r0,r-1").normalized(4)) == "r2");
  CHECK(to_string(parse_op_path("r4,b2").normalized(4)) == "b2");

  CHECK(apply_path("ab", parse_op_path("r1")) == "ba");
  CHECK(apply_path("abbbabbababab", parse_op_path("b1")) == "bbbbbaaabbaba");
  CHECK(apply_path("bbbbbaaabbaba", parse_op_path("b-1")) == "abbbabbababab");
}

TEST_CASE("descent step") {
  CHECK(descent_step("aacb") == "aabc");
  try {
    descent_step("aab");
    FAIL("expected DescentError");
  } catch (const DescentError& e) {
    CHECK(e.reason() == DescentError::Reason::already_minimal);
  }
  try {
    descent_step("baa");
    FAIL("expected DescentError");
  } catch (const DescentError& e) {
    CHECK(e.reason() == DescentError::Reason::not_necklace);
  }
  try {
    descent_step("abcb");  // lcp with abbc is 2 and x[2] == x[4]
    FAIL("expected DescentError");
  } catch (const DescentError& e) {
    CHECK(e.reason() == DescentError::Reason::condition_fails);
  }
  try {
    descent_step("acbca");  // not a necklace
    FAIL("expected DescentError");
  } catch (const DescentError& e) {
    CHECK(e.reason() == DescentError::Reason::not_necklace);
  }
}

TEST_CASE("descent step decreases every admissible necklace") {
  oracle::for_each_string(3, 8, [](const std::string& x) {
    if (oracle::smallest_rotation(x).first != x) return;
    try {
      const auto next = descent_step(x);
      REQUIRE(oracle::byte_less(next, x));
      REQUIRE(parikh(next) == parikh(x));
    } catch (const DescentError& e) {
      REQUIRE(e.reason() != DescentError::Reason::not_necklace);
    }
  });
}

TEST_CASE("find_path") {
  const auto ba = find_path("ba", "ab");
  CHECK(ba.outcome == PathSearch::Outcome::found);
  CHECK(to_string(ba.path) == "r1");

  const auto cab = find_path("cab", "abc");
  CHECK(to_string(cab.path) == "r2");
  CHECK(find_path("abc", "abc").path.steps.empty());
  CHECK_THROWS_AS(find_path("ab", "aa"), std::invalid_argument);
  CHECK_THROWS_AS(find_path("ab", "abc"), std::invalid_argument);

  std::mt19937_64 rng(41);
  for (int t = 0; t < 100; ++t) {
    const auto x = oracle::random_string(rng, 2 + rng() % 7, 2 + rng() % 2);
    std::string y = x;
    std::shuffle(y.begin(), y.end(), rng);
    const auto s = find_path(x, y);
    REQUIRE(s.outcome == PathSearch::Outcome::found);
    REQUIRE(apply_path(x, s.path) == y);
  }
}

TEST_CASE("find_path budget") {
  try {
    find_path("aaaaabbbbbcccccddddd", "abbbcddaadcacbcadcbd", 5);
    FAIL("expected BudgetExceeded");
  } catch (const BudgetExceeded& e) {
    CHECK(e.required() == class_size(parikh("aaaaabbbbbcccccddddd")));
  }
}

TEST_CASE("class ranking") {
  const auto p = pv({{'a', 2}, {'b', 2}});
  CHECK(class_size(p) == 6);
  CHECK(class_unrank(p, 0) == "aabb");
  CHECK(class_unrank(p, 5) == "bbaa");
  CHECK(class_rank("abab") == 1);
  const auto q = pv({{'a', 3}, {'b', 1}, {'c', 2}});
  std::string s = canonical_smallest(q);
  std::size_t rank = 0;
  do {
    REQUIRE(class_rank(s) == rank);
    REQUIRE(class_unrank(q, rank) == s);
    ++rank;
  } while (std::next_permutation(s.begin(), s.end()));
  CHECK(rank == class_size(q));
  CHECK(class_size(pv({{'a', 200}, {'b', 200}})) == SIZE_MAX);
}

TEST_CASE("orbit connectivity") {
  const auto r = orbit_connected(pv({{'a', 2}, {'b', 2}}));
  CHECK(r.class_size == 6);
  CHECK(r.connected);
  CHECK(r.orbit_count == 1);
  CHECK_FALSE(r.witness.has_value());
  CHECK(orbit_connected(pv({{'x', 5}})).connected);
  CHECK_THROWS_AS(orbit_connected(pv({{'a', 20}, {'b', 20}}), 1000), BudgetExceeded);
}

TEST_CASE("transform_to_smallest") {
  for (const std::string x : {"ba", "acb", "bab", "abbab", "dcba", "ebdac", "bbbaa"}) {
    const auto path = transform_to_smallest(x);
    CHECK(apply_path(x, path) == canonical_smallest(parikh(x)));
  }
  CHECK(transform_to_smallest("aab").steps.empty());
  CHECK_THROWS_AS(transform_to_smallest("aabc"), UnsupportedCase);
  oracle::for_each_string(2, 10, [](const std::string& x) {
    REQUIRE(apply_path(x, transform_to_smallest(x)) == canonical_smallest(parikh(x)));
  });
}
