#pragma once

// Repetitiveness measures: z (LZ77), l (necklace count), r, r_B, and the
// Fibonacci family separating r from r_B.

#include <cstddef>
#include <optional>
#include <vector>

#include "bbwt/strings.hpp"

namespace bbwt {

struct Lz77Factor {
  std::size_t start;   // 1-based
  std::size_t length;
  /// 1-based start of an earlier occurrence (may overlap the factor), or
  /// nullopt for a fresh symbol.
  std::optional<std::size_t> source;
  bool operator==(const Lz77Factor&) const = default;
};

struct Lz77Factorization {
  std::vector<Lz77Factor> factors;
  std::size_t z() const { return factors.size(); }
};

/// Greedy self-referential LZ77: each factor is the longest prefix of the
/// remaining text that also starts at an earlier position, or a single fresh
/// symbol. Suffix array plus previous/next smaller values, O(n).
/// Throws std::invalid_argument on empty input.
Lz77Factorization lz77_factorize(std::string_view w);

inline constexpr std::size_t kMaxFibonacciLength = std::size_t{1} << 28;

/// F_0 = b, F_1 = a, F_k = F_{k-1} F_{k-2}. Throws std::length_error when
/// |F_k| exceeds max_length.
Text fibonacci_word(std::size_t k, std::size_t max_length = kMaxFibonacciLength);

/// |F_k| without building the word; nullopt if it exceeds max_length.
std::optional<std::size_t> fibonacci_length(std::size_t k,
                                            std::size_t max_length = kMaxFibonacciLength);

struct MeasureReport {
  std::size_t n = 0;
  std::size_t r = 0;
  std::size_t r_b = 0;
  std::size_t ell = 0;            // necklace count of the Lyndon factorization
  std::size_t total_factors = 0;  // Lyndon factors with multiplicity
  std::size_t z = 0;
  std::size_t bms_phrases = 0;
  /// r_B / (z * log2(n)^2); 0 for n < 2.
  double ratio_rb_over_zlog2n = 0.0;
};

/// Throws std::invalid_argument on empty input.
MeasureReport measure_report(std::string_view w);

struct SeparationRow {
  std::size_t i;
  std::size_t n;    // |F_{2i+3}|
  std::size_t ell;
  std::size_t r_b;
  std::size_t r;
};

/// One row per i in [0, i_max] for the word F_{2i+3}.
std::vector<SeparationRow> fibonacci_separation_table(std::size_t i_max);

}  // namespace bbwt
