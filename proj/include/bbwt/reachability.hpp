#pragma once

// Reachability between strings of one Parikh class under rotation and BBWT.

#include <array>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "bbwt/strings.hpp"

namespace bbwt {

class ParikhVector {
 public:
  ParikhVector() = default;
  /// Throws std::invalid_argument if all counts are zero.
  explicit ParikhVector(const std::array<std::size_t, 256>& counts);

  std::size_t count(unsigned char c) const { return counts_[c]; }
  std::size_t size() const { return n_; }
  /// Symbols with a positive count, ascending.
  std::vector<unsigned char> symbols() const;
  const std::array<std::size_t, 256>& counts() const { return counts_; }

  bool operator==(const ParikhVector&) const = default;

 private:
  std::array<std::size_t, 256> counts_{};
  std::size_t n_ = 0;
};

/// Throws std::invalid_argument on empty input.
ParikhVector parikh(std::string_view w);

/// c_1^{e_1} ... c_s^{e_s}: the smallest string of the class.
Text canonical_smallest(const ParikhVector& p);

/// One step of a path. `amount` is the rotation offset for rotate and the
/// (nonzero) signed number of BBWT applications for transform.
struct Step {
  enum class Kind { rotate, transform };
  Kind kind;
  long long amount;
  bool operator==(const Step&) const = default;
};

struct OpPath {
  std::vector<Step> steps;

  /// Merges adjacent steps of one kind, reduces rotations mod n and drops
  /// identities.
  OpPath normalized(std::size_t n) const;
  bool operator==(const OpPath&) const = default;
};

/// "r<k>" and "b<m>" tokens joined by commas, e.g. "r2,b-1,r5". The empty
/// path is the empty string.
std::string to_string(const OpPath& path);
/// Throws std::invalid_argument on malformed tokens.
OpPath parse_op_path(std::string_view text);

/// Applies the steps left to right.
Text apply_path(std::string_view x, const OpPath& path);

class DescentError : public std::invalid_argument {
 public:
  enum class Reason { not_necklace, already_minimal, condition_fails };
  DescentError(Reason reason, const std::string& what)
      : std::invalid_argument(what), reason_(reason) {}
  Reason reason() const { return reason_; }

 private:
  Reason reason_;
};

/// For a necklace x above the smallest string y of its class with
/// x[i] != x[n] (i = lcp(x, y), 1-based), returns the smallest rotation of
/// bbwt_inverse(rot(x, 1)), which is smaller than x. Throws DescentError.
Text descent_step(std::string_view x);

struct PathSearch {
  enum class Outcome { found, counterexample };
  Outcome outcome;
  OpPath path;           // valid when found
  std::size_t explored;  // strings visited by the search
};

class BudgetExceeded : public std::runtime_error {
 public:
  BudgetExceeded(const std::string& what, std::size_t required)
      : std::runtime_error(what), required_(required) {}
  /// Class size estimate; saturates at SIZE_MAX.
  std::size_t required() const { return required_; }

 private:
  std::size_t required_;
};

inline constexpr std::size_t kDefaultOrbitBudget = 10'000'000;

/// Bidirectional BFS under rot(+-1), BBWT and BBWT^-1. Throws
/// std::invalid_argument on a Parikh mismatch and BudgetExceeded when more
/// than `budget` strings would be stored.
PathSearch find_path(std::string_view x, std::string_view y,
                     std::size_t budget = kDefaultOrbitBudget);

/// Number of strings with Parikh vector p; saturates at SIZE_MAX.
std::size_t class_size(const ParikhVector& p);

/// Rank of w among the strings of its Parikh class in lexicographic order.
std::size_t class_rank(std::string_view w);

/// Inverse of class_rank.
Text class_unrank(const ParikhVector& p, std::size_t rank);

struct OrbitReport {
  std::size_t class_size = 0;
  std::size_t orbit_count = 0;
  bool connected = false;
  /// Two strings from different orbits when not connected.
  std::optional<std::pair<Text, Text>> witness;
};

/// Union-find over the whole class under rot and BBWT. Throws BudgetExceeded
/// if the class is larger than `budget`.
OrbitReport orbit_connected(const ParikhVector& p,
                            std::size_t budget = kDefaultOrbitBudget);

class UnsupportedCase : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Descends to canonical_smallest(parikh(x)): rotate to the necklace, then
/// repeat rot(1), BBWT^-1, rotate to the smallest rotation. Only for binary
/// alphabets or strings with pairwise distinct symbols; otherwise throws
/// UnsupportedCase.
OpPath transform_to_smallest(std::string_view x);

}  // namespace bbwt
