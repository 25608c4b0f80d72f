#pragma once

// Bidirectional macro scheme induced by the BBWT.
//
// Every text position whose BBWT index does not start a run copies the text
// position of the preceding BBWT symbol. Consecutive positions with the same
// copy offset form one reference phrase; run starts become literals. All
// positions are 1-based.

#include <cstddef>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "bbwt/strings.hpp"

namespace bbwt {

struct Literal {
  std::size_t position;
  unsigned char symbol;
  bool operator==(const Literal&) const = default;
};

struct Reference {
  std::size_t start;
  std::size_t length;
  std::size_t source_start;
  bool operator==(const Reference&) const = default;
};

using Phrase = std::variant<Literal, Reference>;

struct MacroScheme {
  std::size_t n = 0;
  std::vector<Phrase> phrases;

  std::size_t literal_count() const;
};

/// Raised for schemes that cannot be decoded: gaps, overlaps, sources out of
/// range or reference cycles.
class SchemeError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Throws std::invalid_argument on empty input.
MacroScheme induce_bms(std::string_view w);

/// Resolves every position to a literal in topological order, O(n).
/// Throws SchemeError on malformed schemes.
Text decode_bms(const MacroScheme& m);

struct BmsReport {
  bool well_formed = false;  // phrases tile [1..n] with in-range sources
  bool acyclic = false;
  bool decodes = false;      // decoded text equals the given text
  std::size_t phrase_count = 0;
  std::size_t bound = 0;     // 3 * r_B(w) + l(w)
  bool bound_ok = false;

  bool passed() const { return well_formed && acyclic && decodes && bound_ok; }
};

BmsReport validate_bms(const MacroScheme& m, std::string_view w);

/// Text form:
///   BMS <n>
///   L <pos> <symbol as two hex digits>
///   R <start> <len> <src>
void write_bms(std::ostream& out, const MacroScheme& m);
std::string to_string(const MacroScheme& m);

/// Throws SchemeError on syntax errors.
MacroScheme read_bms(std::istream& in);
MacroScheme parse_bms(const std::string& text);

}  // namespace bbwt
