#include "bbwt/measures.hpp"

#include <cmath>
#include <stdexcept>

#include "bbwt/macro_scheme.hpp"
#include "bbwt/suffix_sort.hpp"
#include "bbwt/transforms.hpp"

namespace bbwt {

Lz77Factorization lz77_factorize(std::string_view w) {
  if (w.empty()) throw std::invalid_argument("lz77_factorize: empty text");
  const std::size_t n = w.size();
  const auto sa = suffix_array(w);

  // Nearest suffixes in SA order that start earlier in the text.
  constexpr Index kNone = UINT32_MAX;
  std::vector<Index> psv(n, kNone), nsv(n, kNone), stack;
  stack.reserve(n);
  for (std::size_t r = 0; r < n; ++r) {
    const Index p = sa[r];
    while (!stack.empty() && stack.back() > p) {
      nsv[stack.back()] = p;
      stack.pop_back();
    }
    if (!stack.empty()) psv[p] = stack.back();
    stack.push_back(p);
  }

  auto extend = [&](std::size_t i, Index j) -> std::size_t {
    if (j == kNone) return 0;
    std::size_t l = 0;
    while (i + l < n && w[j + l] == w[i + l]) ++l;
    return l;
  };

  Lz77Factorization result;
  for (std::size_t i = 0; i < n;) {
    const std::size_t la = extend(i, psv[i]), lb = extend(i, nsv[i]);
    if (la == 0 && lb == 0) {
      result.factors.push_back({i + 1, 1, std::nullopt});
      ++i;
      continue;
    }
    const bool use_a = la >= lb;
    const std::size_t len = use_a ? la : lb;
    const std::size_t src = use_a ? psv[i] : nsv[i];
    result.factors.push_back({i + 1, len, src + 1});
    i += len;
  }
  return result;
}

std::optional<std::size_t> fibonacci_length(std::size_t k, std::size_t max_length) {
  std::size_t prev = 1, cur = 1;  // f_0, f_1
  if (k <= 1) return cur <= max_length ? std::optional(cur) : std::nullopt;
  for (std::size_t i = 2; i <= k; ++i) {
    const std::size_t next = prev + cur;
    if (next > max_length) return std::nullopt;
    prev = cur;
    cur = next;
  }
  return cur;
}

Text fibonacci_word(std::size_t k, std::size_t max_length) {
  if (!fibonacci_length(k, max_length))
    throw std::length_error("fibonacci_word: F_" + std::to_string(k) + " exceeds " +
                            std::to_string(max_length) + " symbols");
  Text older = "b", old = "a";
  if (k == 0) return older;
  for (std::size_t i = 2; i <= k; ++i) {
    Text next = old + older;
    older = std::move(old);
    old = std::move(next);
  }
  return old;
}

MeasureReport measure_report(std::string_view w) {
  if (w.empty()) throw std::invalid_argument("measure_report: empty text");
  MeasureReport report;
  report.n = w.size();
  report.r = bwt(w).runs;
  report.r_b = bbwt(w).runs;
  const auto factorization = lyndon_factorize(w);
  report.ell = factorization.necklace_count();
  report.total_factors = factorization.total_factors();
  report.z = lz77_factorize(w).z();
  report.bms_phrases = induce_bms(w).phrases.size();
  if (report.n >= 2) {
    const double lg = std::log2(static_cast<double>(report.n));
    report.ratio_rb_over_zlog2n =
        static_cast<double>(report.r_b) / (static_cast<double>(report.z) * lg * lg);
  }
  return report;
}

std::vector<SeparationRow> fibonacci_separation_table(std::size_t i_max) {
  std::vector<SeparationRow> rows;
  for (std::size_t i = 0; i <= i_max; ++i) {
    const auto word = fibonacci_word(2 * i + 3);
    rows.push_back({i, word.size(), lyndon_factorize(word).necklace_count(),
                    bbwt(word).runs, bwt(word).runs});
  }
  return rows;
}

}  // namespace bbwt
