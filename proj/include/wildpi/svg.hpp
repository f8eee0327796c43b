#pragma once

#include <string>

#include "wildpi/becker.hpp"

namespace wildpi {

/// Exact decimal expansion of r. Throws NonTerminatingDecimal unless the
/// reduced denominator only has factors 2 and 5.
std::string exact_decimal(const Rational &r);

/// One <path> per segment and per zigzag, one <circle> per marked point,
/// on a 1000x1000 viewBox with y pointing up. Output is deterministic.
std::string export_svg(const GadgetGeometry &g);

} // namespace wildpi
