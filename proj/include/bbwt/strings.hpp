#pragma once

// Primitive string operations over byte strings: rotations, Lyndon words,
// Lyndon factorization and the omega order on primitive words.
//
// Symbols are raw bytes ordered as unsigned values. std::string compares
// through std::char_traits<char>, which already orders bytes as unsigned
// char, so plain std::string comparison is the lexicographic order used
// throughout the library.

#include <compare>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace bbwt {

using Text = std::string;

inline unsigned char symbol(std::string_view s, std::size_t i) {
  return static_cast<unsigned char>(s[i]);
}

/// rot(x) moves the last symbol to the front; rot(x, k) applies it k times.
/// Negative k applies the inverse rotation. The empty text is returned as is.
Text rot(std::string_view x, long long k);

/// True iff x is nonempty and strictly smaller than each of its proper
/// suffixes.
bool is_lyndon(std::string_view x);

/// Length of the shortest u with x = u^k. Throws std::invalid_argument on
/// empty input.
std::size_t primitive_root_length(std::string_view x);

/// Throws std::invalid_argument on empty input.
bool is_primitive(std::string_view x);

/// One block f^k of a Lyndon factorization, located in the source text.
struct Necklace {
  Text factor;
  std::size_t exponent = 0;
  std::size_t start = 0;  // 0-based offset of the first copy

  std::size_t length() const { return factor.size() * exponent; }
  bool operator==(const Necklace&) const = default;
};

struct LyndonFactorization {
  std::vector<Necklace> necklaces;

  /// Number of Lyndon factors counted with multiplicity (sum of exponents).
  std::size_t total_factors() const;
  /// Number of necklaces (distinct factors).
  std::size_t necklace_count() const { return necklaces.size(); }
  /// Concatenation of all factors.
  Text concat() const;
};

/// Duval's algorithm, O(n). The empty text has the empty factorization.
LyndonFactorization lyndon_factorize(std::string_view x);

/// Start offsets and lengths of all Lyndon factors, with multiplicity.
/// Cheaper than lyndon_factorize when the factor strings are not needed.
struct FactorSpan {
  std::size_t start;
  std::size_t length;
};
std::vector<FactorSpan> lyndon_factor_spans(std::string_view x);

struct SmallestRotation {
  Text rotated;
  /// Smallest k >= 0 with rot(x, k) == rotated.
  std::size_t shift;
  /// 0-based offset in x where the rotation starts.
  std::size_t start;
};

/// Lexicographically least rotation in linear time. Throws
/// std::invalid_argument on empty input.
SmallestRotation smallest_rotation(std::string_view x);

/// Compares x^inf with y^inf. Both arguments must be nonempty and primitive;
/// otherwise std::invalid_argument is thrown. Equal only when x == y.
std::strong_ordering omega_compare(std::string_view x, std::string_view y);

/// omega_compare without validating primitivity. Looks at no more than
/// |x| + |y| symbols; equal iff x^inf == y^inf.
std::strong_ordering omega_compare_unchecked(std::string_view x,
                                             std::string_view y);

}  // namespace bbwt
