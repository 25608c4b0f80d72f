#pragma once

// Sorting machinery shared by the transforms, LZ77 and the Lyndon trees.

#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

namespace bbwt {

using Index = std::uint32_t;

/// Sorts the positions of a functional graph by the infinite strings
/// key[p] key[next[p]] key[next[next[p]]] ... using prefix doubling.
/// `next` must be a permutation. Keys are in [0, alphabet). Comparison stops
/// once prefixes of length `depth` have been compared; positions that are
/// still tied are ordered by index. O(n log depth).
std::vector<Index> cyclic_order(std::span<const Index> key,
                                std::span<const Index> next, Index alphabet,
                                std::size_t depth);

/// Suffix array of s by induced sorting (SA-IS), O(n + upper). Symbols must
/// lie in [0, upper]. Suffixes are ordered with a proper prefix first.
std::vector<Index> suffix_array(std::span<const Index> s, Index upper);

/// Byte-string convenience overload.
std::vector<Index> suffix_array(std::string_view text);

/// Kasai et al.: lcp[r] = lcp(text[sa[r-1]..], text[sa[r]..]), lcp[0] = 0.
std::vector<Index> lcp_array(std::string_view text,
                             std::span<const Index> sa);

/// Longest-common-extension queries on a fixed text: block-decomposed range
/// minimum over the LCP array, O(n) space, O(block) per query.
class LceIndex {
 public:
  explicit LceIndex(std::string_view text);

  /// Length of the longest common prefix of text[i..] and text[j..].
  std::size_t lce(std::size_t i, std::size_t j) const;

  std::span<const Index> rank() const { return rank_; }

 private:
  Index range_min(std::size_t lo, std::size_t hi) const;  // inclusive

  static constexpr std::size_t kBlock = 32;

  std::size_t n_;
  std::vector<Index> rank_;
  std::vector<Index> lcp_;
  std::vector<std::vector<Index>> block_table_;
};

}  // namespace bbwt
