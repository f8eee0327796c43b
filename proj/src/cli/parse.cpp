#include <cctype>

#include "wildpi/cli.hpp"

namespace wildpi::cli {

namespace {

std::string join(const std::set<std::string> &xs) {
  std::string out;
  for (const auto &x : xs)
    out += (out.empty() ? "" : ", ") + x;
  return out;
}

class Parser {
public:
  explicit Parser(const std::string &text) : s_(text) {}

  WordExpr parse() {
    skip_ws();
    if (at_end())
      fail({"word"});
    auto e = product();
    skip_ws();
    if (!at_end())
      fail({"end of input", "'*'", "factor"});
    return e;
  }

private:
  static inline const std::set<std::string> factor_start{
      "'g'", "'e'", "'('", "'['", "quoted atom", "'seq('"};

  bool at_end() const { return pos_ >= s_.size(); }
  char peek() const { return at_end() ? '\0' : s_[pos_]; }

  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(s_[pos_])))
      ++pos_;
  }

  [[noreturn]] void fail(std::set<std::string> expected) const {
    throw SyntaxError(pos_, expected,
                      "syntax error at byte " + std::to_string(pos_) +
                          ": expected " + join(expected));
  }

  void expect(char c) {
    if (peek() != c)
      fail({std::string("'") + c + "'"});
    ++pos_;
  }

  bool starts_factor() const {
    const char c = peek();
    return c == 'g' || c == 'e' || c == '(' || c == '[' || c == '\'' ||
           s_.compare(pos_, 4, "seq(") == 0;
  }

  WordExpr product() {
    std::vector<WordExpr> parts{factor()};
    for (;;) {
      skip_ws();
      if (peek() == '*') {
        ++pos_;
        skip_ws();
        parts.push_back(factor());
      } else if (starts_factor()) {
        parts.push_back(factor());
      } else {
        break;
      }
    }
    if (parts.size() == 1)
      return std::move(parts.front());
    WordExpr e;
    e.kind = WordExpr::Kind::product;
    e.parts = std::move(parts);
    return e;
  }

  WordExpr factor() {
    WordExpr e = primary();
    for (;;) {
      if (peek() == '~') {
        ++pos_;
        e = wrap(WordExpr::Kind::inverse, std::move(e));
      } else if (peek() == '^') {
        ++pos_;
        const bool negative = peek() == '-';
        if (negative)
          ++pos_;
        const long n = digits("exponent");
        if (negative && n == 1) {
          e = wrap(WordExpr::Kind::inverse, std::move(e));
        } else {
          e = wrap(WordExpr::Kind::power, std::move(e));
          e.exponent = negative ? -n : n;
        }
      } else {
        return e;
      }
    }
  }

  static WordExpr wrap(WordExpr::Kind k, WordExpr inner) {
    WordExpr e;
    e.kind = k;
    e.parts.push_back(std::move(inner));
    return e;
  }

  long digits(const char *what) {
    const std::size_t start = pos_;
    while (std::isdigit(static_cast<unsigned char>(peek())))
      ++pos_;
    if (pos_ == start)
      fail({what});
    const auto text = s_.substr(start, pos_ - start);
    if (text.size() > 9) {
      pos_ = start;
      fail({std::string(what) + " below 10^9"});
    }
    return std::stol(text);
  }

  std::string bits() {
    const std::size_t start = pos_;
    while (peek() == '0' || peek() == '1')
      ++pos_;
    return s_.substr(start, pos_ - start);
  }

  WordExpr primary() {
    WordExpr e;
    const std::size_t start = pos_;
    if (s_.compare(pos_, 4, "seq(") == 0) {
      pos_ += 4;
      auto prefix = bits();
      expect(',');
      if (peek() != '0' && peek() != '1')
        fail({"period digits"});
      auto period = bits();
      expect(')');
      e.kind = WordExpr::Kind::point;
      e.point = Point::sequence(prefix, period);
      return e;
    }
    switch (peek()) {
    case 'g': {
      ++pos_;
      const std::size_t at = pos_;
      const long n = digits("generator index");
      if (n == 0) {
        pos_ = at;
        fail({"generator index >= 1"});
      }
      e.kind = WordExpr::Kind::generator;
      e.index = static_cast<std::uint32_t>(n);
      return e;
    }
    case 'e':
      ++pos_;
      if (std::isalnum(static_cast<unsigned char>(peek()))) {
        pos_ = start;
        fail(factor_start);
      }
      return e;
    case '(': {
      ++pos_;
      skip_ws();
      e = product();
      skip_ws();
      expect(')');
      return e;
    }
    case '[': {
      ++pos_;
      skip_ws();
      e.kind = WordExpr::Kind::commutator;
      e.parts.push_back(product());
      skip_ws();
      expect(',');
      skip_ws();
      e.parts.push_back(product());
      skip_ws();
      expect(']');
      return e;
    }
    case '\'': {
      ++pos_;
      const std::size_t id_start = pos_;
      while (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_')
        ++pos_;
      if (pos_ == id_start)
        fail({"atom name"});
      auto id = s_.substr(id_start, pos_ - id_start);
      expect('\'');
      e.kind = WordExpr::Kind::point;
      e.point = Point::atom(std::move(id));
      return e;
    }
    default:
      fail(factor_start);
    }
  }

  const std::string &s_;
  std::size_t pos_ = 0;
};

void flatten_into(const WordExpr &e, bool inverted, std::vector<Symbol> &out) {
  using K = WordExpr::Kind;
  switch (e.kind) {
  case K::identity:
    return;
  case K::generator:
    out.push_back({e.index, inverted ? Sign::minus : Sign::plus});
    return;
  case K::point:
    out.push_back({*e.point, inverted ? Sign::minus : Sign::plus});
    return;
  case K::inverse:
    flatten_into(e.parts[0], !inverted, out);
    return;
  case K::power: {
    const bool inv = inverted != (e.exponent < 0);
    const long n = e.exponent < 0 ? -e.exponent : e.exponent;
    for (long i = 0; i < n; ++i)
      flatten_into(e.parts[0], inv, out);
    return;
  }
  case K::product:
    if (!inverted) {
      for (const auto &p : e.parts)
        flatten_into(p, false, out);
    } else {
      for (auto it = e.parts.rbegin(); it != e.parts.rend(); ++it)
        flatten_into(*it, true, out);
    }
    return;
  case K::commutator: {
    // [u,v] = u v u^-1 v^-1, and its inverse is v u v^-1 u^-1.
    const auto &u = e.parts[0], &v = e.parts[1];
    if (!inverted) {
      flatten_into(u, false, out);
      flatten_into(v, false, out);
      flatten_into(u, true, out);
      flatten_into(v, true, out);
    } else {
      flatten_into(v, false, out);
      flatten_into(u, false, out);
      flatten_into(v, true, out);
      flatten_into(u, true, out);
    }
    return;
  }
  }
}

} // namespace

SyntaxError::SyntaxError(std::size_t offset, std::set<std::string> expected,
                         const std::string &detail)
    : Error("SyntaxError", detail), offset_(offset), expected_(std::move(expected)) {}

WordExpr parse_word(const std::string &text) { return Parser(text).parse(); }

std::vector<Symbol> flatten(const WordExpr &e) {
  std::vector<Symbol> out;
  flatten_into(e, false, out);
  return out;
}

Word to_word(const WordExpr &e) {
  std::vector<Letter> letters;
  for (const auto &s : flatten(e)) {
    const auto *idx = std::get_if<std::uint32_t>(&s.base);
    if (!idx)
      throw SyntaxError(0, {"generator"}, "expected a word in generators g1, g2, ...");
    letters.push_back({Generator(*idx), s.sign});
  }
  return Word(std::move(letters));
}

XWord to_xword(const WordExpr &e) {
  XWord out;
  for (const auto &s : flatten(e)) {
    const auto *p = std::get_if<Point>(&s.base);
    if (!p)
      throw SyntaxError(0, {"point"}, "expected a word in points 'a', seq(p,q), ...");
    out.push_back({*p, s.sign});
  }
  return out;
}

} // namespace wildpi::cli
