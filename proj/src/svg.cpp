#include "wildpi/svg.hpp"

#include <sstream>

#include "wildpi/error.hpp"

namespace wildpi {

using boost::multiprecision::cpp_int;

std::string exact_decimal(const Rational &r) {
  cpp_int num = numerator(r), den = denominator(r);
  const bool negative = num < 0;
  if (negative)
    num = -num;

  std::size_t digits = 0;
  cpp_int d = den;
  while (d % 10 == 0) { d /= 10; ++digits; }
  while (d % 2 == 0) { d /= 2; num *= 5; ++digits; }
  while (d % 5 == 0) { d /= 5; num *= 2; ++digits; }
  if (d != 1)
    throw Error("NonTerminatingDecimal",
                num.str() + "/" + den.str() + " has no finite decimal expansion");
  // Now r = num / 10^digits.
  std::string s = num.str();
  if (digits > 0) {
    if (s.size() <= digits)
      s.insert(0, digits - s.size() + 1, '0');
    s.insert(s.size() - digits, ".");
    while (s.back() == '0')
      s.pop_back();
    if (s.back() == '.')
      s.pop_back();
  }
  return negative && s != "0" ? "-" + s : s;
}

namespace {

constexpr int view = 1000;

std::string coord(const Point2 &p) {
  return exact_decimal(p.x * view) + "," + exact_decimal((1 - p.y) * view);
}

std::string escape(const std::string &s) {
  std::string out;
  for (char c : s) {
    switch (c) {
    case '&': out += "&amp;"; break;
    case '<': out += "&lt;"; break;
    case '>': out += "&gt;"; break;
    case '"': out += "&quot;"; break;
    default: out += c;
    }
  }
  return out;
}

} // namespace

std::string export_svg(const GadgetGeometry &g) {
  std::ostringstream out;
  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 " << view << " "
      << view << "\" width=\"" << view << "\" height=\"" << view << "\">\n";
  out << "<g fill=\"none\" stroke=\"black\" stroke-width=\"1\">\n";
  for (const auto &s : g.segments)
    out << "<path id=\"" << escape(s.label) << "\" d=\"M " << coord(s.from)
        << " L " << coord(s.to) << "\"/>\n";
  for (const auto &p : g.polylines) {
    out << "<path id=\"" << escape(p.label) << "\" d=\"M "
        << coord(p.vertices.front());
    for (std::size_t k = 1; k < p.vertices.size(); ++k)
      out << " L " << coord(p.vertices[k]);
    out << "\"/>\n";
  }
  out << "</g>\n<g fill=\"red\">\n";
  for (const auto &[label, pt] : g.marked_points) {
    out << "<circle data-label=\"" << escape(label) << "\" cx=\""
        << exact_decimal(pt.x * view) << "\" cy=\""
        << exact_decimal((1 - pt.y) * view) << "\" r=\"3\"/>\n";
  }
  out << "</g>\n</svg>\n";
  return out.str();
}

} // namespace wildpi
