#pragma once

// Burrows-Wheeler transform, bijective BWT, their inverses and the
// omega-LCP array.
//
// Positions exposed in results (LF-map values, circular suffix array) are
// 1-based, matching the usual tabulation of these arrays.

#include <cstddef>
#include <variant>
#include <vector>

#include "bbwt/strings.hpp"

namespace bbwt {

/// LF-mapping psi: 1-based position i of x goes to the rank of (x[i], i).
struct LfMap {
  std::vector<std::size_t> psi;

  /// Cycles of psi, each listed from its smallest element along psi.
  std::vector<std::vector<std::size_t>> cycles() const;
};

struct TransformResult {
  Text output;
  /// csa[i] is the 1-based text position following the one that contributed
  /// output[i], wrapping to the start of its Lyndon factor (for BWT: to the
  /// start of the text).
  std::vector<std::size_t> csa;
  std::size_t runs = 0;
};

/// Primitive words, each stored as its own smallest rotation, in
/// non-increasing lexicographic order.
struct NecklaceMultiset {
  std::vector<Text> items;
};

/// Distinguished infinite omega-LCP value. Not an integer on purpose.
struct Infinite {
  bool operator==(const Infinite&) const = default;
};
using OmegaLcp = std::variant<std::size_t, Infinite>;

struct OmegaLcpArray {
  std::vector<OmegaLcp> values;
  /// BBWT the array is aligned with.
  Text bbwt;

  /// Positions i with i == 0 or bbwt[i-1] != bbwt[i].
  std::size_t irreducible_count() const;
};

/// Number of maximal runs of equal adjacent symbols; 0 for the empty text.
std::size_t count_runs(std::string_view x);

/// Lexicographically sorted rotations; equal rotations of a non-primitive
/// text keep start order. Throws std::invalid_argument on empty input.
TransformResult bwt(std::string_view w);

/// O(n + sigma). Throws std::invalid_argument on empty input.
LfMap lf_map(std::string_view x);

/// Decomposes psi_x into cycles; each cycle spells one primitive word.
NecklaceMultiset bwt_inverse_multiset(std::string_view x);

/// Rotations of all Lyndon factors in omega order. Equal rotations of
/// repeated factors are ordered by text position. O(n log n).
TransformResult bbwt(std::string_view w);

/// Inverse of bbwt: the cycle words of psi_x, sorted non-increasing and
/// concatenated. bbwt_inverse(bbwt(w)) == w.
Text bbwt_inverse(std::string_view x);

/// lcp of adjacent rotations (as infinite powers) in BBWT order; entry 0 is
/// 0, entries for equal adjacent rotations are Infinite.
OmegaLcpArray omega_lcp_array(std::string_view w);

}  // namespace bbwt
