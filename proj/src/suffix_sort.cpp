#include "bbwt/suffix_sort.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace bbwt {

namespace {

// Stable counting sort of `in` into `out` by key(in[i]), keys in [0, buckets).
template <typename KeyFn>
void counting_pass(std::span<const Index> in, std::span<Index> out,
                   std::vector<Index>& count, Index buckets, KeyFn key) {
  count.assign(buckets + 1, 0);
  for (Index p : in) ++count[key(p) + 1];
  for (Index b = 0; b < buckets; ++b) count[b + 1] += count[b];
  for (Index p : in) out[count[key(p)]++] = p;
}

}  // namespace

std::vector<Index> cyclic_order(std::span<const Index> key,
                                std::span<const Index> next, Index alphabet,
                                std::size_t depth) {
  const std::size_t n = key.size();
  if (next.size() != n)
    throw std::invalid_argument("cyclic_order: key/next size mismatch");
  if (n >= UINT32_MAX)
    throw std::length_error("cyclic_order: input too large");

  std::vector<Index> identity(n), order(n), tmp(n), count;
  for (Index i = 0; i < n; ++i) identity[i] = i;
  counting_pass(identity, order, count, alphabet, [&](Index p) { return key[p]; });

  std::vector<Index> rank(n), new_rank(n);
  Index classes = 0;
  for (std::size_t r = 0; r < n; ++r) {
    if (r > 0 && key[order[r]] != key[order[r - 1]]) ++classes;
    rank[order[r]] = classes;
  }
  ++classes;

  std::vector<Index> jump(next.begin(), next.end()), jump2(n);
  std::size_t compared = 1;
  while (compared < depth && classes < n) {
    // LSD radix over (rank[p], rank[jump[p]]) starting from index order
    // keeps ties in index order.
    counting_pass(identity, tmp, count, classes,
                  [&](Index p) { return rank[jump[p]]; });
    counting_pass(tmp, order, count, classes, [&](Index p) { return rank[p]; });

    Index c = 0;
    new_rank[order[0]] = 0;
    for (std::size_t r = 1; r < n; ++r) {
      const Index a = order[r - 1], b = order[r];
      if (rank[a] != rank[b] || rank[jump[a]] != rank[jump[b]]) ++c;
      new_rank[b] = c;
    }
    classes = c + 1;
    rank.swap(new_rank);

    for (std::size_t p = 0; p < n; ++p) jump2[p] = jump[jump[p]];
    jump.swap(jump2);
    compared *= 2;
  }
  if (classes == n) return order;
  // Stop condition reached with ties: order by (rank, index).
  counting_pass(identity, order, count, classes, [&](Index p) { return rank[p]; });
  return order;
}

namespace {

// Induced sorting. Suffix n (the virtual sentinel) is smaller than all
// others and is not part of the output.
std::vector<Index> sais(std::span<const Index> s, Index upper) {
  const std::size_t n = s.size();
  if (n == 0) return {};
  if (n == 1) return {0};
  if (n == 2) return s[0] < s[1] ? std::vector<Index>{0, 1} : std::vector<Index>{1, 0};

  constexpr Index kEmpty = UINT32_MAX;
  std::vector<Index> sa(n);
  std::vector<bool> is_s(n, false);
  for (std::size_t i = n - 1; i-- > 0;)
    is_s[i] = s[i] == s[i + 1] ? is_s[i + 1] : s[i] < s[i + 1];

  // bucket_l[c]: first slot of bucket c; bucket_s[c]: first S slot of c.
  std::vector<Index> bucket_l(upper + 2, 0), bucket_s(upper + 2, 0);
  for (std::size_t i = 0; i < n; ++i) {
    if (is_s[i]) {
      ++bucket_l[s[i] + 1];
    } else {
      ++bucket_s[s[i]];
    }
  }
  for (Index c = 0; c <= upper; ++c) {
    bucket_s[c] += bucket_l[c];
    bucket_l[c + 1] += bucket_s[c];
  }

  auto is_lms = [&](std::size_t i) { return i > 0 && is_s[i] && !is_s[i - 1]; };

  std::vector<Index> fill(upper + 2);
  auto induce = [&](std::span<const Index> lms) {
    std::fill(sa.begin(), sa.end(), kEmpty);
    std::copy(bucket_s.begin(), bucket_s.end(), fill.begin());
    for (Index p : lms) sa[fill[s[p]]++] = p;

    std::copy(bucket_l.begin(), bucket_l.end(), fill.begin());
    sa[fill[s[n - 1]]++] = static_cast<Index>(n - 1);
    for (std::size_t r = 0; r < n; ++r) {
      const Index v = sa[r];
      if (v != kEmpty && v >= 1 && !is_s[v - 1]) sa[fill[s[v - 1]]++] = v - 1;
    }

    std::copy(bucket_l.begin(), bucket_l.end(), fill.begin());
    for (std::size_t r = n; r-- > 0;) {
      const Index v = sa[r];
      if (v != kEmpty && v >= 1 && is_s[v - 1]) sa[--fill[s[v - 1] + 1]] = v - 1;
    }
  };

  std::vector<Index> lms_id(n, kEmpty), lms;
  for (std::size_t i = 1; i < n; ++i) {
    if (is_lms(i)) {
      lms_id[i] = static_cast<Index>(lms.size());
      lms.push_back(static_cast<Index>(i));
    }
  }
  induce(lms);
  const std::size_t m = lms.size();
  if (m == 0) return sa;

  std::vector<Index> sorted_lms;
  sorted_lms.reserve(m);
  for (Index v : sa)
    if (lms_id[v] != kEmpty) sorted_lms.push_back(v);

  // Name LMS substrings; equal names mean equal substrings.
  std::vector<Index> reduced(m);
  Index name = 0;
  reduced[lms_id[sorted_lms[0]]] = 0;
  for (std::size_t r = 1; r < m; ++r) {
    std::size_t a = sorted_lms[r - 1], b = sorted_lms[r];
    const std::size_t end_a = lms_id[a] + 1 < m ? lms[lms_id[a] + 1] : n;
    const std::size_t end_b = lms_id[b] + 1 < m ? lms[lms_id[b] + 1] : n;
    bool same = end_a - a == end_b - b;
    if (same) {
      while (a < end_a && s[a] == s[b]) {
        ++a;
        ++b;
      }
      if (a == n || s[a] != s[b]) same = false;
    }
    if (!same) ++name;
    reduced[lms_id[sorted_lms[r]]] = name;
  }

  const auto reduced_sa = sais(reduced, name);
  for (std::size_t r = 0; r < m; ++r) sorted_lms[r] = lms[reduced_sa[r]];
  induce(sorted_lms);
  return sa;
}

}  // namespace

std::vector<Index> suffix_array(std::span<const Index> s, Index upper) {
  if (s.size() >= UINT32_MAX - 1)
    throw std::length_error("suffix_array: input too large");
  return sais(s, upper);
}

std::vector<Index> suffix_array(std::string_view text) {
  std::vector<Index> s(text.size());
  for (std::size_t i = 0; i < text.size(); ++i)
    s[i] = static_cast<unsigned char>(text[i]);
  return suffix_array(s, 255);
}

std::vector<Index> lcp_array(std::string_view text, std::span<const Index> sa) {
  const std::size_t n = text.size();
  std::vector<Index> rank(n), lcp(n, 0);
  for (std::size_t r = 0; r < n; ++r) rank[sa[r]] = static_cast<Index>(r);
  std::size_t h = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (rank[i] == 0) {
      h = 0;
      continue;
    }
    const std::size_t j = sa[rank[i] - 1];
    while (i + h < n && j + h < n && text[i + h] == text[j + h]) ++h;
    lcp[rank[i]] = static_cast<Index>(h);
    if (h > 0) --h;
  }
  return lcp;
}

LceIndex::LceIndex(std::string_view text) : n_(text.size()) {
  const auto sa = suffix_array(text);
  lcp_ = lcp_array(text, sa);
  rank_.resize(n_);
  for (std::size_t r = 0; r < n_; ++r) rank_[sa[r]] = static_cast<Index>(r);

  const std::size_t blocks = (n_ + kBlock - 1) / kBlock;
  if (blocks == 0) return;
  std::vector<Index> level(blocks);
  for (std::size_t b = 0; b < blocks; ++b) {
    const auto first = lcp_.begin() + static_cast<std::ptrdiff_t>(b * kBlock);
    const auto last = lcp_.begin() + static_cast<std::ptrdiff_t>(std::min(n_, (b + 1) * kBlock));
    level[b] = *std::min_element(first, last);
  }
  block_table_.push_back(std::move(level));
  for (std::size_t width = 1; 2 * width <= blocks; width *= 2) {
    const auto& prev = block_table_.back();
    std::vector<Index> cur(blocks - 2 * width + 1);
    for (std::size_t b = 0; b < cur.size(); ++b)
      cur[b] = std::min(prev[b], prev[b + width]);
    block_table_.push_back(std::move(cur));
  }
}

Index LceIndex::range_min(std::size_t lo, std::size_t hi) const {
  const std::size_t blo = lo / kBlock, bhi = hi / kBlock;
  Index best = UINT32_MAX;
  if (bhi - blo <= 1) {
    for (std::size_t r = lo; r <= hi; ++r) best = std::min(best, lcp_[r]);
    return best;
  }
  for (std::size_t r = lo; r < (blo + 1) * kBlock; ++r) best = std::min(best, lcp_[r]);
  for (std::size_t r = bhi * kBlock; r <= hi; ++r) best = std::min(best, lcp_[r]);
  const std::size_t first = blo + 1, count = bhi - first;
  const auto level = static_cast<std::size_t>(std::bit_width(count) - 1);
  const auto& table = block_table_[level];
  best = std::min({best, table[first], table[bhi - (std::size_t{1} << level)]});
  return best;
}

std::size_t LceIndex::lce(std::size_t i, std::size_t j) const {
  if (i == j) return n_ - i;
  if (i >= n_ || j >= n_) return 0;
  std::size_t a = rank_[i], b = rank_[j];
  if (a > b) std::swap(a, b);
  return range_min(a + 1, b);
}

}  // namespace bbwt
