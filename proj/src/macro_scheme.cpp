#include "bbwt/macro_scheme.hpp"

#include <charconv>
#include <istream>
#include <ostream>
#include <sstream>

#include "bbwt/transforms.hpp"

namespace bbwt {

namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};

enum class Resolution { ok, malformed, cyclic };

struct Decoded {
  Resolution status;
  std::string message;
  Text text;
};

Decoded resolve(const MacroScheme& m) {
  const std::size_t n = m.n;
  constexpr std::size_t kNone = static_cast<std::size_t>(-1);
  // source[p] == kNone marks a literal position (0-based).
  std::vector<std::size_t> source(n, kNone);
  Text text(n, '\0');
  std::size_t next_position = 1;
  auto fail = [](Resolution r, std::string msg) { return Decoded{r, std::move(msg), {}}; };

  for (const auto& phrase : m.phrases) {
    const bool ok = std::visit(
        Overloaded{
            [&](const Literal& lit) {
              if (lit.position != next_position || lit.position > n) return false;
              text[lit.position - 1] = static_cast<char>(lit.symbol);
              ++next_position;
              return true;
            },
            [&](const Reference& ref) {
              // Written to avoid overflow on untrusted input.
              if (ref.start != next_position || ref.length == 0 || ref.length > n ||
                  ref.start > n - ref.length + 1 || ref.source_start == 0 ||
                  ref.source_start > n - ref.length + 1)
                return false;
              for (std::size_t k = 0; k < ref.length; ++k)
                source[ref.start - 1 + k] = ref.source_start - 1 + k;
              next_position += ref.length;
              return true;
            }},
        phrase);
    if (!ok)
      return fail(Resolution::malformed,
                  "phrase does not continue at position " + std::to_string(next_position) +
                      " or refers outside [1.." + std::to_string(n) + "]");
  }
  if (next_position != n + 1)
    return fail(Resolution::malformed, "phrases do not cover the text");

  enum : unsigned char { kPending, kActive, kDone };
  std::vector<unsigned char> state(n, kPending);
  std::vector<std::size_t> chain;
  for (std::size_t p = 0; p < n; ++p) {
    if (state[p] == kDone) continue;
    chain.clear();
    std::size_t q = p;
    while (state[q] == kPending && source[q] != kNone) {
      state[q] = kActive;
      chain.push_back(q);
      q = source[q];
    }
    if (state[q] == kActive)
      return fail(Resolution::cyclic,
                  "reference cycle through position " + std::to_string(q + 1));
    state[q] = kDone;  // a literal or an already resolved position
    for (auto it = chain.rbegin(); it != chain.rend(); ++it) {
      text[*it] = text[q];
      state[*it] = kDone;
    }
  }
  return {Resolution::ok, {}, std::move(text)};
}

}  // namespace

std::size_t MacroScheme::literal_count() const {
  std::size_t count = 0;
  for (const auto& phrase : phrases) count += std::holds_alternative<Literal>(phrase);
  return count;
}

MacroScheme induce_bms(std::string_view w) {
  const auto transform = bbwt(w);  // rejects empty input
  const std::size_t n = w.size();

  std::vector<std::size_t> factor_end(n + 1, 0);  // by factor start
  std::vector<bool> is_factor_start(n, false);
  for (const auto& span : lyndon_factor_spans(w)) {
    is_factor_start[span.start] = true;
    factor_end[span.start] = span.start + span.length - 1;
  }
  // Text position (0-based) of the symbol contributing BBWT index i.
  auto text_position = [&](std::size_t i) {
    const std::size_t p = transform.csa[i] - 1;
    return is_factor_start[p] ? factor_end[p] : p - 1;
  };

  constexpr std::size_t kLiteral = static_cast<std::size_t>(-1);
  std::vector<std::size_t> target(n, kLiteral);
  for (std::size_t i = 1; i < n; ++i) {
    if (transform.output[i] == transform.output[i - 1])
      target[text_position(i)] = text_position(i - 1);
  }

  MacroScheme m;
  m.n = n;
  for (std::size_t p = 0; p < n;) {
    if (target[p] == kLiteral) {
      m.phrases.emplace_back(Literal{p + 1, symbol(w, p)});
      ++p;
      continue;
    }
    std::size_t q = p + 1;
    while (q < n && target[q] != kLiteral && target[q] == target[p] + (q - p)) ++q;
    m.phrases.emplace_back(Reference{p + 1, q - p, target[p] + 1});
    p = q;
  }
  return m;
}

Text decode_bms(const MacroScheme& m) {
  auto decoded = resolve(m);
  if (decoded.status != Resolution::ok) throw SchemeError(decoded.message);
  return std::move(decoded.text);
}

BmsReport validate_bms(const MacroScheme& m, std::string_view w) {
  BmsReport report;
  report.phrase_count = m.phrases.size();
  const auto decoded = resolve(m);
  report.well_formed = decoded.status != Resolution::malformed;
  report.acyclic = decoded.status == Resolution::ok;
  report.decodes = decoded.status == Resolution::ok && decoded.text == w;
  if (!w.empty()) {
    report.bound = 3 * bbwt(w).runs + lyndon_factorize(w).necklace_count();
  }
  report.bound_ok = report.phrase_count <= report.bound;
  return report;
}

void write_bms(std::ostream& out, const MacroScheme& m) {
  static constexpr char kHex[] = "0123456789abcdef";
  out << "BMS " << m.n << '\n';
  for (const auto& phrase : m.phrases) {
    std::visit(Overloaded{[&](const Literal& lit) {
                            out << "L " << lit.position << ' ' << kHex[lit.symbol >> 4]
                                << kHex[lit.symbol & 15] << '\n';
                          },
                          [&](const Reference& ref) {
                            out << "R " << ref.start << ' ' << ref.length << ' '
                                << ref.source_start << '\n';
                          }},
               phrase);
  }
}

std::string to_string(const MacroScheme& m) {
  std::ostringstream out;
  write_bms(out, m);
  return out.str();
}

namespace {

std::size_t parse_number(std::string_view token, std::size_t line_no) {
  std::size_t value = 0;
  const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc{} || ptr != token.data() + token.size() || token.empty())
    throw SchemeError("line " + std::to_string(line_no) + ": bad number '" +
                      std::string(token) + "'");
  return value;
}

std::vector<std::string_view> split(std::string_view line) {
  std::vector<std::string_view> tokens;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && line[i] == ' ') ++i;
    const std::size_t j = line.find(' ', i);
    const std::size_t end = j == std::string_view::npos ? line.size() : j;
    if (end > i) tokens.push_back(line.substr(i, end - i));
    i = end;
  }
  return tokens;
}

}  // namespace

MacroScheme read_bms(std::istream& in) {
  MacroScheme m;
  std::string line;
  std::size_t line_no = 0;
  bool have_header = false;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    const auto tokens = split(line);
    if (tokens.empty()) continue;
    const auto error = [&](const std::string& what) {
      return SchemeError("line " + std::to_string(line_no) + ": " + what);
    };
    if (!have_header) {
      if (tokens.size() != 2 || tokens[0] != "BMS") throw error("expected 'BMS <n>' header");
      m.n = parse_number(tokens[1], line_no);
      have_header = true;
    } else if (tokens[0] == "L") {
      if (tokens.size() != 3 || tokens[2].size() != 2) throw error("expected 'L <pos> <hex>'");
      unsigned value = 0;
      const auto [ptr, ec] = std::from_chars(tokens[2].data(), tokens[2].data() + 2, value, 16);
      if (ec != std::errc{} || ptr != tokens[2].data() + 2) throw error("bad symbol");
      m.phrases.emplace_back(
          Literal{parse_number(tokens[1], line_no), static_cast<unsigned char>(value)});
    } else if (tokens[0] == "R") {
      if (tokens.size() != 4) throw error("expected 'R <start> <len> <src>'");
      m.phrases.emplace_back(Reference{parse_number(tokens[1], line_no),
                                       parse_number(tokens[2], line_no),
                                       parse_number(tokens[3], line_no)});
    } else {
      throw error("unknown record '" + std::string(tokens[0]) + "'");
    }
  }
  if (!have_header) throw SchemeError("missing 'BMS <n>' header");
  return m;
}

MacroScheme parse_bms(const std::string& text) {
  std::istringstream in(text);
  return read_bms(in);
}

}  // namespace bbwt
