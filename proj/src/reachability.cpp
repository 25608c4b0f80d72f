#include "bbwt/reachability.hpp"

#include <algorithm>
#include <charconv>
#include <cstdint>
#include <limits>
#include <numeric>
#include <unordered_map>

#include "bbwt/transforms.hpp"

namespace bbwt {

ParikhVector::ParikhVector(const std::array<std::size_t, 256>& counts) : counts_(counts) {
  n_ = std::accumulate(counts_.begin(), counts_.end(), std::size_t{0});
  if (n_ == 0) throw std::invalid_argument("ParikhVector: all counts are zero");
}

std::vector<unsigned char> ParikhVector::symbols() const {
  std::vector<unsigned char> out;
  for (std::size_t c = 0; c < 256; ++c)
    if (counts_[c] > 0) out.push_back(static_cast<unsigned char>(c));
  return out;
}

ParikhVector parikh(std::string_view w) {
  if (w.empty()) throw std::invalid_argument("parikh: empty text");
  std::array<std::size_t, 256> counts{};
  for (std::size_t i = 0; i < w.size(); ++i) ++counts[symbol(w, i)];
  return ParikhVector(counts);
}

Text canonical_smallest(const ParikhVector& p) {
  Text out;
  out.reserve(p.size());
  for (unsigned char c : p.symbols()) out.append(p.count(c), static_cast<char>(c));
  return out;
}

OpPath OpPath::normalized(std::size_t n) const {
  OpPath out;
  const auto modulus = static_cast<long long>(n);
  auto reduce = [&](Step& s) {
    if (s.kind == Step::Kind::rotate && modulus > 0) {
      s.amount %= modulus;
      if (s.amount < 0) s.amount += modulus;
    }
  };
  for (Step step : steps) {
    reduce(step);
    if (step.amount == 0) continue;
    if (!out.steps.empty() && out.steps.back().kind == step.kind) {
      out.steps.back().amount += step.amount;
      reduce(out.steps.back());
      if (out.steps.back().amount == 0) out.steps.pop_back();
    } else {
      out.steps.push_back(step);
    }
  }
  return out;
}

std::string to_string(const OpPath& path) {
  std::string out;
  for (const auto& step : path.steps) {
    if (!out.empty()) out += ',';
    out += step.kind == Step::Kind::rotate ? 'r' : 'b';
    out += std::to_string(step.amount);
  }
  return out;
}

OpPath parse_op_path(std::string_view text) {
  OpPath path;
  if (text.empty()) return path;
  std::size_t pos = 0;
  while (true) {
    const std::size_t comma = text.find(',', pos);
    const auto token = text.substr(pos, comma == std::string_view::npos ? text.npos : comma - pos);
    if (token.size() < 2 || (token[0] != 'r' && token[0] != 'b'))
      throw std::invalid_argument("parse_op_path: bad token '" + std::string(token) + "'");
    long long amount = 0;
    const char* first = token.data() + 1;
    const char* last = token.data() + token.size();
    const auto [ptr, ec] = std::from_chars(first, last, amount);
    if (ec != std::errc{} || ptr != last)
      throw std::invalid_argument("parse_op_path: bad amount in '" + std::string(token) + "'");
    path.steps.push_back(
        {token[0] == 'r' ? Step::Kind::rotate : Step::Kind::transform, amount});
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return path;
}

Text apply_path(std::string_view x, const OpPath& path) {
  Text cur(x);
  for (const auto& step : path.steps) {
    if (step.kind == Step::Kind::rotate) {
      cur = rot(cur, step.amount);
      continue;
    }
    for (long long m = 0; m < step.amount; ++m) cur = bbwt(cur).output;
    for (long long m = 0; m > step.amount; --m) cur = bbwt_inverse(cur);
  }
  return cur;
}

Text descent_step(std::string_view x) {
  if (x.empty()) throw std::invalid_argument("descent_step: empty text");
  using Reason = DescentError::Reason;
  if (smallest_rotation(x).rotated != x)
    throw DescentError(Reason::not_necklace, "descent_step: input is not its own smallest rotation");
  const Text y = canonical_smallest(parikh(x));
  if (x == y)
    throw DescentError(Reason::already_minimal, "descent_step: input is already the smallest string of its class");
  const auto mismatch = std::mismatch(x.begin(), x.end(), y.begin());
  const auto lcp = static_cast<std::size_t>(mismatch.first - x.begin());
  // A necklace starts with its least symbol, so lcp >= 1.
  if (x[lcp - 1] == x.back())
    throw DescentError(Reason::condition_fails,
                       "descent_step: x[i] == x[n] for i = lcp(x, y) = " + std::to_string(lcp));
  return smallest_rotation(bbwt_inverse(rot(x, 1))).rotated;
}

namespace {

constexpr std::array<Step, 4> kGenerators{{
    {Step::Kind::rotate, 1},
    {Step::Kind::rotate, -1},
    {Step::Kind::transform, 1},
    {Step::Kind::transform, -1},
}};

Text apply_step(const Text& s, const Step& g) {
  if (g.kind == Step::Kind::rotate) return rot(s, g.amount);
  return g.amount > 0 ? bbwt(s).output : bbwt_inverse(s);
}

Step inverse(const Step& g) { return {g.kind, -g.amount}; }

struct Visit {
  Text parent;
  Step step;  // forward: parent --step--> key; backward: key --step--> parent
  bool root;
};

}  // namespace

PathSearch find_path(std::string_view x, std::string_view y, std::size_t budget) {
  if (x.size() != y.size() || x.empty() || !(parikh(x) == parikh(y)))
    throw std::invalid_argument("find_path: strings have different Parikh vectors");
  const std::size_t n = x.size();
  if (x == y) return {PathSearch::Outcome::found, {}, 1};

  std::unordered_map<Text, Visit> seen_fwd, seen_bwd;
  std::vector<Text> front_fwd{Text(x)}, front_bwd{Text(y)};
  seen_fwd.emplace(Text(x), Visit{{}, {}, true});
  seen_bwd.emplace(Text(y), Visit{{}, {}, true});

  auto build = [&](const Text& meet) {
    OpPath path;
    std::vector<Step> head;
    for (Text cur = meet;;) {
      const auto& v = seen_fwd.at(cur);
      if (v.root) break;
      head.push_back(v.step);
      cur = v.parent;
    }
    path.steps.assign(head.rbegin(), head.rend());
    for (Text cur = meet;;) {
      const auto& v = seen_bwd.at(cur);
      if (v.root) break;
      path.steps.push_back(v.step);
      cur = v.parent;
    }
    return PathSearch{PathSearch::Outcome::found, path.normalized(n),
                      seen_fwd.size() + seen_bwd.size()};
  };

  while (!front_fwd.empty() && !front_bwd.empty()) {
    const bool forward = front_fwd.size() <= front_bwd.size();
    auto& frontier = forward ? front_fwd : front_bwd;
    auto& seen = forward ? seen_fwd : seen_bwd;
    const auto& other = forward ? seen_bwd : seen_fwd;
    std::vector<Text> next;
    for (const auto& s : frontier) {
      for (const auto& g : kGenerators) {
        // Backward search walks predecessors: t with g(t) == s.
        Text t = apply_step(s, forward ? g : inverse(g));
        if (seen.contains(t)) continue;
        seen.emplace(t, Visit{s, g, false});
        if (other.contains(t)) return build(t);
        if (seen_fwd.size() + seen_bwd.size() > budget)
          throw BudgetExceeded("find_path: search budget of " + std::to_string(budget) +
                                   " strings exhausted",
                               class_size(parikh(x)));
        next.push_back(std::move(t));
      }
    }
    frontier = std::move(next);
  }
  return {PathSearch::Outcome::counterexample, {}, seen_fwd.size() + seen_bwd.size()};
}

namespace {

__extension__ using Wide = unsigned __int128;
constexpr std::size_t kSaturated = std::numeric_limits<std::size_t>::max();

}  // namespace

std::size_t class_size(const ParikhVector& p) {
  Wide total = 1;
  std::size_t placed = 0;
  for (unsigned char c : p.symbols()) {
    // total *= C(placed + e, e), one factor at a time to stay integral.
    const std::size_t e = p.count(c);
    for (std::size_t j = 1; j <= e; ++j) {
      total = total * (placed + j) / j;
      if (total > kSaturated) return kSaturated;
    }
    placed += e;
  }
  return static_cast<std::size_t>(total);
}

std::size_t class_rank(std::string_view w) {
  const auto p = parikh(w);
  auto counts = p.counts();
  const auto symbols = p.symbols();
  Wide arrangements = class_size(p);
  Wide rank = 0;
  std::size_t remaining = w.size();
  for (std::size_t i = 0; i < w.size(); ++i) {
    const unsigned char c = symbol(w, i);
    for (unsigned char s : symbols) {
      if (s >= c) break;
      rank += arrangements * counts[s] / remaining;
    }
    arrangements = arrangements * counts[c] / remaining;
    --counts[c];
    --remaining;
  }
  return static_cast<std::size_t>(rank);
}

Text class_unrank(const ParikhVector& p, std::size_t rank) {
  auto counts = p.counts();
  const auto symbols = p.symbols();
  Wide arrangements = class_size(p);
  if (rank >= arrangements) throw std::out_of_range("class_unrank: rank out of range");
  Wide left = rank;
  std::size_t remaining = p.size();
  Text out;
  out.reserve(remaining);
  for (std::size_t i = 0; i < p.size(); ++i) {
    for (unsigned char s : symbols) {
      if (counts[s] == 0) continue;
      const Wide block = arrangements * counts[s] / remaining;
      if (left < block) {
        out.push_back(static_cast<char>(s));
        arrangements = block;
        --counts[s];
        break;
      }
      left -= block;
    }
    --remaining;
  }
  return out;
}

namespace {

class DisjointSets {
 public:
  explicit DisjointSets(std::size_t n) : parent_(n), size_(n, 1), components_(n) {
    std::iota(parent_.begin(), parent_.end(), std::uint32_t{0});
  }

  std::uint32_t find(std::uint32_t v) {
    while (parent_[v] != v) {
      parent_[v] = parent_[parent_[v]];
      v = parent_[v];
    }
    return v;
  }

  void unite(std::uint32_t a, std::uint32_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (size_[a] < size_[b]) std::swap(a, b);
    parent_[b] = a;
    size_[a] += size_[b];
    --components_;
  }

  std::size_t components() const { return components_; }

 private:
  std::vector<std::uint32_t> parent_, size_;
  std::size_t components_;
};

}  // namespace

OrbitReport orbit_connected(const ParikhVector& p, std::size_t budget) {
  const std::size_t size = class_size(p);
  if (size > budget || size >= UINT32_MAX)
    throw BudgetExceeded("orbit_connected: class has " +
                             (size == kSaturated ? std::string("more than 2^64")
                                                 : std::to_string(size)) +
                             " strings, budget is " + std::to_string(budget),
                         size);

  DisjointSets sets(size);
  Text s = canonical_smallest(p);
  const auto byte_less = [](char a, char b) {
    return static_cast<unsigned char>(a) < static_cast<unsigned char>(b);
  };
  // next_permutation walks the class in rank order.
  std::uint32_t id = 0;
  do {
    sets.unite(id, static_cast<std::uint32_t>(class_rank(rot(s, 1))));
    sets.unite(id, static_cast<std::uint32_t>(class_rank(bbwt(s).output)));
    ++id;
  } while (std::next_permutation(s.begin(), s.end(), byte_less));

  OrbitReport report;
  report.class_size = size;
  report.orbit_count = sets.components();
  report.connected = report.orbit_count == 1;
  if (!report.connected) {
    const auto root = sets.find(0);
    for (std::uint32_t v = 1; v < size; ++v) {
      if (sets.find(v) != root) {
        report.witness.emplace(class_unrank(p, 0), class_unrank(p, v));
        break;
      }
    }
  }
  return report;
}

OpPath transform_to_smallest(std::string_view x) {
  const auto p = parikh(x);
  const auto symbols = p.symbols();
  const bool binary = symbols.size() <= 2;
  const bool distinct = symbols.size() == x.size();
  if (!binary && !distinct)
    throw UnsupportedCase(
        "transform_to_smallest: only binary alphabets or pairwise distinct symbols are supported");

  const Text target = canonical_smallest(p);
  OpPath path;
  auto to_necklace = [&](const Text& s) {
    const auto sr = smallest_rotation(s);
    path.steps.push_back({Step::Kind::rotate, static_cast<long long>(sr.shift)});
    return sr.rotated;
  };

  Text cur = to_necklace(Text(x));
  while (cur != target) {
    path.steps.push_back({Step::Kind::rotate, 1});
    path.steps.push_back({Step::Kind::transform, -1});
    Text next = to_necklace(bbwt_inverse(rot(cur, 1)));
    if (!(next < cur))
      throw std::logic_error("transform_to_smallest: descent did not decrease " + cur);
    cur = std::move(next);
  }
  return path.normalized(x.size());
}

}  // namespace bbwt
