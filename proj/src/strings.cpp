#include "bbwt/strings.hpp"

#include <algorithm>

namespace bbwt {

Text rot(std::string_view x, long long k) {
  const auto n = static_cast<long long>(x.size());
  if (n == 0) return Text{};
  long long m = k % n;
  if (m < 0) m += n;
  const auto cut = static_cast<std::size_t>(n - m);
  Text out;
  out.reserve(x.size());
  out.append(x.substr(cut));
  out.append(x.substr(0, cut));
  return out;
}

bool is_lyndon(std::string_view x) {
  const std::size_t n = x.size();
  if (n == 0) return false;
  std::size_t j = 1, k = 0;
  while (j < n && symbol(x, k) <= symbol(x, j)) {
    k = symbol(x, k) < symbol(x, j) ? 0 : k + 1;
    ++j;
  }
  return j == n && k == 0;
}

namespace {

// KMP failure function; the smallest period is n - border(x).
template <typename Int>
std::size_t smallest_period(std::string_view x) {
  const std::size_t n = x.size();
  std::vector<Int> fail(n + 1, 0);
  std::size_t b = 0;
  for (std::size_t i = 1; i < n; ++i) {
    while (b > 0 && x[i] != x[b]) b = fail[b];
    if (x[i] == x[b]) ++b;
    fail[i + 1] = static_cast<Int>(b);
  }
  return n - fail[n];
}

}  // namespace

std::size_t primitive_root_length(std::string_view x) {
  const std::size_t n = x.size();
  if (n == 0) throw std::invalid_argument("primitive_root_length: empty text");
  const std::size_t period = n < UINT32_MAX ? smallest_period<std::uint32_t>(x)
                                            : smallest_period<std::size_t>(x);
  return n % period == 0 ? period : n;
}

bool is_primitive(std::string_view x) {
  return primitive_root_length(x) == x.size();
}

std::size_t LyndonFactorization::total_factors() const {
  std::size_t total = 0;
  for (const auto& nk : necklaces) total += nk.exponent;
  return total;
}

Text LyndonFactorization::concat() const {
  Text out;
  for (const auto& nk : necklaces)
    for (std::size_t c = 0; c < nk.exponent; ++c) out += nk.factor;
  return out;
}

std::vector<FactorSpan> lyndon_factor_spans(std::string_view x) {
  std::vector<FactorSpan> spans;
  const std::size_t n = x.size();
  std::size_t i = 0;
  while (i < n) {
    std::size_t j = i + 1, k = i;
    while (j < n && symbol(x, k) <= symbol(x, j)) {
      k = symbol(x, k) < symbol(x, j) ? i : k + 1;
      ++j;
    }
    const std::size_t period = j - k;
    while (i <= k) {
      spans.push_back({i, period});
      i += period;
    }
  }
  return spans;
}

LyndonFactorization lyndon_factorize(std::string_view x) {
  LyndonFactorization result;
  for (const auto& span : lyndon_factor_spans(x)) {
    const auto factor = x.substr(span.start, span.length);
    if (!result.necklaces.empty() && result.necklaces.back().factor == factor) {
      ++result.necklaces.back().exponent;
    } else {
      result.necklaces.push_back({Text(factor), 1, span.start});
    }
  }
  return result;
}

SmallestRotation smallest_rotation(std::string_view x) {
  const std::size_t n = x.size();
  if (n == 0) throw std::invalid_argument("smallest_rotation: empty text");
  // Two-candidate scan for the minimum cyclic shift.
  std::size_t i = 0, j = 1, k = 0;
  auto at = [&](std::size_t p) { return symbol(x, p < n ? p : p - n); };  // p < 2n
  while (i < n && j < n && k < n) {
    const unsigned char a = at(i + k);
    const unsigned char b = at(j + k);
    if (a == b) {
      ++k;
      continue;
    }
    if (a > b) {
      i += k + 1;
    } else {
      j += k + 1;
    }
    if (i == j) ++j;
    k = 0;
  }
  const std::size_t best = std::min(i, j);
  const std::size_t period = primitive_root_length(x);
  const std::size_t start = best % period;

  SmallestRotation result;
  result.start = start;
  result.rotated.reserve(n);
  result.rotated.append(x.substr(start));
  result.rotated.append(x.substr(0, start));
  // rot(x, s) begins at offset n - s; the start offsets giving the minimum
  // are start, start + period, ..., so the least shift uses the last one.
  result.shift = start == 0 ? 0 : period - start;
  return result;
}

std::strong_ordering omega_compare_unchecked(std::string_view x,
                                             std::string_view y) {
  const std::size_t nx = x.size(), ny = y.size();
  const std::size_t limit = nx + ny;
  std::size_t ix = 0, iy = 0;
  for (std::size_t t = 0; t < limit; ++t) {
    const unsigned char a = symbol(x, ix), b = symbol(y, iy);
    if (a != b) return a <=> b;
    if (++ix == nx) ix = 0;
    if (++iy == ny) iy = 0;
  }
  return std::strong_ordering::equal;
}

std::strong_ordering omega_compare(std::string_view x, std::string_view y) {
  if (x.empty() || y.empty())
    throw std::invalid_argument("omega_compare: empty text");
  if (!is_primitive(x) || !is_primitive(y))
    throw std::invalid_argument(
        "omega_compare: omega order is only defined on primitive words");
  return omega_compare_unchecked(x, y);
}

}  // namespace bbwt
