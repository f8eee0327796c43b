#pragma once

// Text syntax for words and the command dispatcher behind the `wildpi` tool.
//
//   word    := product
//   product := factor ( ['*'] factor )*
//   factor  := primary ( '~' | '^' ['-'] digits )*
//   primary := 'g' digits | 'e' | '(' product ')' | '[' product ',' product ']'
//            | "'" ident "'" | 'seq(' bits ',' bits ')'
//
// g0 is rejected (indices start at 1); [u,v] is u v u^-1 v^-1.

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <variant>
#include <vector>

#include "wildpi/earring.hpp"
#include "wildpi/error.hpp"
#include "wildpi/json_io.hpp"
#include "wildpi/relcalc.hpp"
#include "wildpi/word.hpp"

namespace wildpi::cli {

class SyntaxError : public Error {
public:
  SyntaxError(std::size_t offset, std::set<std::string> expected,
              const std::string &detail);

  std::size_t offset() const noexcept { return offset_; }
  const std::set<std::string> &expected() const noexcept { return expected_; }

private:
  std::size_t offset_;
  std::set<std::string> expected_;
};

struct WordExpr {
  enum class Kind { identity, generator, point, inverse, power, product, commutator };

  Kind kind = Kind::identity;
  std::uint32_t index = 0;    // generator
  std::optional<Point> point; // point
  long exponent = 0;          // power
  std::vector<WordExpr> parts;

  friend bool operator==(const WordExpr &, const WordExpr &) = default;
};

WordExpr parse_word(const std::string &text);

/// Canonical text of an expression; parse_word(to_text(e)) == e.
std::string to_text(const WordExpr &e);

/// A letter of either alphabet.
struct Symbol {
  std::variant<std::uint32_t, Point> base;
  Sign sign;
  friend bool operator==(const Symbol &, const Symbol &) = default;
};

/// Expands inverses, powers and commutators into a flat letter list.
std::vector<Symbol> flatten(const WordExpr &e);

/// Throws SyntaxError at the first point letter.
Word to_word(const WordExpr &e);
/// Throws SyntaxError at the first generator letter.
XWord to_xword(const WordExpr &e);

/// "g1 g2~"; the identity is "e".
std::string format_word(const Word &w);
std::string format_word(const ReducedWord &w);
std::string format_xword(const XWord &w);

Json sequence_to_json(const TruncatedCoherentSequence &s);
/// {"depth": D, "levels": [...]}; validates coherence.
TruncatedCoherentSequence sequence_from_json(const Json &j);

struct CommandResult {
  int status = 0;   // 0 ok, 1 domain error, 2 usage error
  Json payload;     // always well-formed JSON
  std::string summary;
  bool json = false; // --json: print the payload instead of the summary
};

/// Runs one command; argv excludes the program name.
CommandResult run_command(const std::vector<std::string> &argv);

} // namespace wildpi::cli
