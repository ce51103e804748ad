#pragma once

#include <string>

#include "logriemann/sheet_complex.hpp"

namespace lrs {

/// Diagram with one panel per core sheet.  Each slit is drawn as two strokes,
/// Top on its left and Bottom on its right; glued sides share a colour and
/// sides carrying a periodic tail get a "×∞" badge.
std::string to_svg(const SheetComplex& c);

}  // namespace lrs
