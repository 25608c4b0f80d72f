#include "bbwt/rotation_opt.hpp"

#include <algorithm>
#include <optional>
#include <stdexcept>

#include "bbwt/transforms.hpp"

namespace bbwt {

std::vector<std::size_t> rotation_rb_table(std::string_view w) {
  std::vector<std::size_t> table;
  table.reserve(w.size());
  for (std::size_t k = 0; k < w.size(); ++k) table.push_back(bbwt(rot(w, static_cast<long long>(k))).runs);
  return table;
}

BestRotation best_rotation(std::string_view w) {
  if (w.empty()) throw std::invalid_argument("best_rotation: empty text");
  const auto table = rotation_rb_table(w);
  std::size_t best = 0;
  for (std::size_t k = 1; k < table.size(); ++k)
    if (table[k] < table[best]) best = k;
  return {best, rot(w, static_cast<long long>(best)), table[best]};
}

namespace {

// Lexicographic comparisons between substrings of one text through LCE.
class SpanOrder {
 public:
  explicit SpanOrder(std::string_view text) : text_(text) {}

  bool less(Index a, Index a_len, Index b, Index b_len) const {
    // Most comparisons end within a few symbols; skip the RMQ for those.
    const Index m = std::min(a_len, b_len);
    const Index probe = std::min<Index>(m, kProbe);
    for (Index k = 0; k < probe; ++k) {
      const auto x = symbol(text_, a + k), y = symbol(text_, b + k);
      if (x != y) return x < y;
    }
    if (probe == m) return a_len < b_len;
    const std::size_t l = lce(a, b);
    if (l >= std::min(a_len, b_len)) return a_len < b_len;
    return symbol(text_, a + l) < symbol(text_, b + l);
  }

  bool equal(Index a, Index a_len, Index b, Index b_len) const {
    if (a_len != b_len) return false;
    const Index probe = std::min<Index>(a_len, kProbe);
    for (Index k = 0; k < probe; ++k)
      if (text_[a + k] != text_[b + k]) return false;
    return probe == a_len || lce(a, b) >= a_len;
  }

 private:
  static constexpr Index kProbe = 16;

  // Built on the first comparison the probe cannot settle.
  std::size_t lce(Index a, Index b) const {
    if (!lce_) lce_.emplace(text_);
    return lce_->lce(a, b);
  }

  std::string_view text_;
  mutable std::optional<LceIndex> lce_;
};

void require_lyndon(std::string_view w, const char* what) {
  if (!is_lyndon(w))
    throw std::invalid_argument(std::string(what) + ": input is not a Lyndon word");
}

Index add_node(LyndonTree& tree, Index left, Index right) {
  const auto& l = tree.nodes[left];
  const auto& r = tree.nodes[right];
  tree.nodes.push_back({l.begin, r.end, left, right});
  return static_cast<Index>(tree.nodes.size() - 1);
}

// Merging of adjacent Lyndon words: uv is Lyndon whenever u < v.
// Right tree: scan right to left, the new word absorbs following smaller
// neighbours. Left tree: scan left to right, preceding smaller words absorb
// the new one.
LyndonTree build_tree(std::string_view w, TreeFlavor flavor, const SpanOrder& order) {
  const auto n = static_cast<Index>(w.size());
  LyndonTree tree{flavor, {}, LyndonTree::kNoChild};
  tree.nodes.reserve(2 * w.size());
  for (Index i = 0; i < n; ++i) tree.nodes.push_back({i, i + 1});

  auto len = [&](Index id) { return tree.nodes[id].end - tree.nodes[id].begin; };
  auto less = [&](Index a, Index b) {
    return order.less(tree.nodes[a].begin, len(a), tree.nodes[b].begin, len(b));
  };

  std::vector<Index> stack;
  if (flavor == TreeFlavor::right) {
    for (Index i = n; i-- > 0;) {
      Index cur = i;
      while (!stack.empty() && less(cur, stack.back())) {
        cur = add_node(tree, cur, stack.back());
        stack.pop_back();
      }
      stack.push_back(cur);
    }
  } else {
    for (Index i = 0; i < n; ++i) {
      Index cur = i;
      while (!stack.empty() && less(stack.back(), cur)) {
        cur = add_node(tree, stack.back(), cur);
        stack.pop_back();
      }
      stack.push_back(cur);
    }
  }
  if (stack.size() != 1)
    throw std::logic_error("build_tree: input did not merge into one Lyndon word");
  tree.root = stack.front();
  return tree;
}

// Per-position counts for the Lyndon factorizations of every suffix and
// every prefix of a Lyndon word. The merge stack of a right-to-left scan
// holds the factorization of the scanned suffix, and a left-to-right scan
// holds that of the scanned prefix, so no tree needs to be stored.
struct AffixCounts {
  std::vector<Index> suffix_total, suffix_necklaces;  // index: start
  std::vector<Index> prefix_total, prefix_necklaces;  // index: length
};

AffixCounts affix_counts(std::string_view u) {
  const auto n = static_cast<Index>(u.size());
  const SpanOrder order(u);
  struct Entry {
    Index begin, end;
    Index necklaces;  // necklace count of this factor and those below it
  };
  auto len = [](const Entry& e) { return e.end - e.begin; };
  auto push = [&](std::vector<Entry>& stack, Index begin, Index end) {
    Index necklaces = 1;
    if (!stack.empty()) {
      const auto& below = stack.back();
      const bool repeats = order.equal(below.begin, len(below), begin, end - begin);
      necklaces = below.necklaces + (repeats ? 0 : 1);
    }
    stack.push_back({begin, end, necklaces});
  };

  AffixCounts c;
  std::vector<Entry> stack;
  stack.reserve(64);

  c.suffix_total.assign(n + 1, 0);
  c.suffix_necklaces.assign(n + 1, 0);
  for (Index p = n; p-- > 0;) {
    Index end = p + 1;
    while (!stack.empty() && order.less(p, end - p, stack.back().begin, len(stack.back()))) {
      end = stack.back().end;
      stack.pop_back();
    }
    push(stack, p, end);
    c.suffix_total[p] = static_cast<Index>(stack.size());
    c.suffix_necklaces[p] = stack.back().necklaces;
  }

  stack.clear();
  c.prefix_total.assign(n + 1, 0);
  c.prefix_necklaces.assign(n + 1, 0);
  for (Index q = 0; q < n; ++q) {
    Index begin = q;
    while (!stack.empty() && order.less(stack.back().begin, len(stack.back()), begin, q + 1 - begin)) {
      begin = stack.back().begin;
      stack.pop_back();
    }
    push(stack, begin, q + 1);
    c.prefix_total[q + 1] = static_cast<Index>(stack.size());
    c.prefix_necklaces[q + 1] = stack.back().necklaces;
  }
  return c;
}

}  // namespace

LyndonTree right_lyndon_tree(std::string_view w) {
  require_lyndon(w, "right_lyndon_tree");
  return build_tree(w, TreeFlavor::right, SpanOrder(w));
}

LyndonTree left_lyndon_tree(std::string_view w) {
  require_lyndon(w, "left_lyndon_tree");
  return build_tree(w, TreeFlavor::left, SpanOrder(w));
}

RotationSizes all_rotation_factorization_sizes(std::string_view w) {
  if (w.empty()) throw std::invalid_argument("all_rotation_factorization_sizes: empty text");
  const std::size_t n = w.size();
  const std::size_t d = primitive_root_length(w);
  const std::size_t k = n / d;
  const std::size_t frame_start = smallest_rotation(w.substr(0, d)).start;
  Text lyndon;
  lyndon.reserve(d);
  lyndon.append(w.substr(frame_start, d - frame_start));
  lyndon.append(w.substr(0, frame_start));

  const auto c = affix_counts(lyndon);

  // A rotation v u of the Lyndon word u v (u nonempty) factors as the
  // factors of v then those of u; no factor crosses. For w = L^k the
  // rotation at p is (factors of v), L^(k-1), (factors of u).
  auto frame = [&](std::size_t p) -> FactorizationSize {
    if (p == 0) return {k, 1};
    return {c.suffix_total[p] + c.prefix_total[p] + (k - 1),
            std::size_t{c.suffix_necklaces[p]} + c.prefix_necklaces[p] + (k > 1 ? 1 : 0)};
  };

  RotationSizes sizes;
  sizes.by_start.resize(n);
  for (std::size_t p = 0, f = (d - frame_start) % d; p < n; ++p, f = f + 1 == d ? 0 : f + 1)
    sizes.by_start[p] = frame(f);
  return sizes;
}

}  // namespace bbwt
