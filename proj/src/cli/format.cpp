#include "wildpi/cli.hpp"

namespace wildpi::cli {

namespace {

std::string letter_text(const Letter &l) {
  return "g" + std::to_string(l.gen.index()) + (l.sign == Sign::minus ? "~" : "");
}

std::string point_text(const Point &p) {
  if (p.is_atom())
    return "'" + p.id() + "'";
  return "seq(" + p.prefix() + "," + p.period() + ")";
}

// Postfix operators bind tighter than juxtaposition, so only products need
// parentheses under '~' or '^'.
std::string operand_text(const WordExpr &e) {
  if (e.kind == WordExpr::Kind::product)
    return "(" + to_text(e) + ")";
  return to_text(e);
}

} // namespace

std::string to_text(const WordExpr &e) {
  using K = WordExpr::Kind;
  switch (e.kind) {
  case K::identity:
    return "e";
  case K::generator:
    return "g" + std::to_string(e.index);
  case K::point:
    return point_text(*e.point);
  case K::inverse:
    return operand_text(e.parts[0]) + "~";
  case K::power:
    return operand_text(e.parts[0]) + "^" + std::to_string(e.exponent);
  case K::product: {
    std::string out;
    for (const auto &p : e.parts) {
      if (!out.empty())
        out += " ";
      // A nested product must stay grouped to reparse to the same tree.
      out += p.kind == K::product ? "(" + to_text(p) + ")" : to_text(p);
    }
    return out;
  }
  case K::commutator:
    return "[" + to_text(e.parts[0]) + "," + to_text(e.parts[1]) + "]";
  }
  return {};
}

std::string format_word(const Word &w) {
  if (w.empty())
    return "e";
  std::string out;
  for (const auto &l : w.letters()) {
    if (!out.empty())
      out += " ";
    out += letter_text(l);
  }
  return out;
}

std::string format_word(const ReducedWord &w) { return format_word(w.word()); }

std::string format_xword(const XWord &w) {
  if (w.empty())
    return "e";
  std::string out;
  for (const auto &l : w) {
    if (!out.empty())
      out += " ";
    out += point_text(l.point) + (l.sign == Sign::minus ? "~" : "");
  }
  return out;
}

Json sequence_to_json(const TruncatedCoherentSequence &s) {
  Json levels = Json::array();
  for (const auto &w : s.levels())
    levels.push_back(format_word(w));
  return Json{{"depth", s.depth()}, {"levels", levels}};
}

TruncatedCoherentSequence sequence_from_json(const Json &j) {
  if (!j.is_object() || !j.contains("levels") || !j.at("levels").is_array())
    throw Error("InvalidJson", "a sequence needs a \"levels\" array");
  std::vector<ReducedWord> levels;
  for (const auto &l : j.at("levels")) {
    if (!l.is_string())
      throw Error("InvalidJson", "sequence levels must be word strings");
    levels.push_back(free_reduce(to_word(parse_word(l.get<std::string>()))));
  }
  if (j.contains("depth")) {
    if (!j.at("depth").is_number_unsigned() ||
        j.at("depth").get<std::size_t>() != levels.size())
      throw Error("InvalidJson", "\"depth\" does not match the number of levels");
  }
  return validate_coherent(std::move(levels));
}

} // namespace wildpi::cli
