#include "bbwt/transforms.hpp"

#include <algorithm>
#include <array>
#include <functional>

#include "bbwt/suffix_sort.hpp"

namespace bbwt {

namespace {

void require_nonempty(std::string_view x, const char* what) {
  if (x.empty()) throw std::invalid_argument(std::string(what) + ": empty text");
}

std::vector<Index> byte_keys(std::string_view w) {
  std::vector<Index> key(w.size());
  for (std::size_t i = 0; i < w.size(); ++i) key[i] = symbol(w, i);
  return key;
}

// Successor within the cyclic Lyndon factors of w, plus the factor length of
// every position.
struct FactorCycles {
  std::vector<Index> next;
  std::vector<Index> prev;
  std::vector<Index> factor_length;
  std::size_t max_length = 0;
};

FactorCycles factor_cycles(std::string_view w) {
  FactorCycles fc;
  const std::size_t n = w.size();
  fc.next.resize(n);
  fc.prev.resize(n);
  fc.factor_length.resize(n);
  for (const auto& span : lyndon_factor_spans(w)) {
    const std::size_t first = span.start, last = span.start + span.length - 1;
    for (std::size_t p = first; p <= last; ++p) {
      fc.next[p] = static_cast<Index>(p == last ? first : p + 1);
      fc.prev[p] = static_cast<Index>(p == first ? last : p - 1);
      fc.factor_length[p] = static_cast<Index>(span.length);
    }
    fc.max_length = std::max(fc.max_length, span.length);
  }
  return fc;
}

std::vector<Index> bbwt_order(std::string_view w, const FactorCycles& fc) {
  // Distinct infinite periodic words with periods a, b differ within a + b
  // symbols, so 2 * max_length suffices.
  return cyclic_order(byte_keys(w), fc.next, 256, 2 * fc.max_length);
}

}  // namespace

std::size_t count_runs(std::string_view x) {
  if (x.empty()) return 0;
  std::size_t runs = 1;
  for (std::size_t i = 1; i < x.size(); ++i)
    if (x[i] != x[i - 1]) ++runs;
  return runs;
}

TransformResult bwt(std::string_view w) {
  require_nonempty(w, "bwt");
  const std::size_t n = w.size();
  std::vector<Index> next(n);
  for (std::size_t p = 0; p < n; ++p) next[p] = static_cast<Index>((p + 1) % n);
  const auto order = cyclic_order(byte_keys(w), next, 256, n);

  TransformResult result;
  result.output.resize(n);
  result.csa.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t p = order[i];
    result.output[i] = w[(p + n - 1) % n];
    result.csa[i] = p + 1;
  }
  result.runs = count_runs(result.output);
  return result;
}

LfMap lf_map(std::string_view x) {
  require_nonempty(x, "lf_map");
  std::array<std::size_t, 257> start{};
  for (std::size_t i = 0; i < x.size(); ++i) ++start[symbol(x, i) + 1];
  for (std::size_t c = 0; c < 256; ++c) start[c + 1] += start[c];
  LfMap map;
  map.psi.resize(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) map.psi[i] = ++start[symbol(x, i)];
  return map;
}

std::vector<std::vector<std::size_t>> LfMap::cycles() const {
  std::vector<std::vector<std::size_t>> out;
  std::vector<bool> seen(psi.size(), false);
  for (std::size_t i = 1; i <= psi.size(); ++i) {
    if (seen[i - 1]) continue;
    auto& cycle = out.emplace_back();
    for (std::size_t j = i; !seen[j - 1]; j = psi[j - 1]) {
      seen[j - 1] = true;
      cycle.push_back(j);
    }
  }
  return out;
}

NecklaceMultiset bwt_inverse_multiset(std::string_view x) {
  const auto map = lf_map(x);
  NecklaceMultiset result;
  std::vector<bool> seen(x.size(), false);
  Text word;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (seen[i]) continue;
    // Reading x along psi yields the cycle word backwards.
    word.clear();
    for (std::size_t j = i; !seen[j]; j = map.psi[j] - 1) {
      seen[j] = true;
      word.push_back(x[j]);
    }
    std::reverse(word.begin(), word.end());
    result.items.push_back(smallest_rotation(word).rotated);
  }
  std::sort(result.items.begin(), result.items.end(), std::greater<>());
  return result;
}

TransformResult bbwt(std::string_view w) {
  require_nonempty(w, "bbwt");
  const auto fc = factor_cycles(w);
  const auto order = bbwt_order(w, fc);

  TransformResult result;
  const std::size_t n = w.size();
  result.output.resize(n);
  result.csa.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t p = order[i];
    result.output[i] = w[fc.prev[p]];
    result.csa[i] = p + 1;
  }
  result.runs = count_runs(result.output);
  return result;
}

Text bbwt_inverse(std::string_view x) {
  Text out;
  out.reserve(x.size());
  for (const auto& item : bwt_inverse_multiset(x).items) out += item;
  return out;
}

std::size_t OmegaLcpArray::irreducible_count() const {
  return count_runs(bbwt);
}

OmegaLcpArray omega_lcp_array(std::string_view w) {
  require_nonempty(w, "omega_lcp_array");
  const auto fc = factor_cycles(w);
  const auto order = bbwt_order(w, fc);
  const std::size_t n = w.size();

  OmegaLcpArray result;
  result.values.reserve(n);
  result.bbwt.resize(n);
  for (std::size_t i = 0; i < n; ++i) result.bbwt[i] = w[fc.prev[order[i]]];

  result.values.emplace_back(std::size_t{0});
  for (std::size_t i = 1; i < n; ++i) {
    Index a = order[i - 1], b = order[i];
    const std::size_t bound = fc.factor_length[a] + fc.factor_length[b];
    std::size_t l = 0;
    while (l < bound && w[a] == w[b]) {
      a = fc.next[a];
      b = fc.next[b];
      ++l;
    }
    if (l == bound) {
      result.values.emplace_back(Infinite{});
    } else {
      result.values.emplace_back(l);
    }
  }
  return result;
}

}  // namespace bbwt
