#pragma once

// JSON surface documents.  Layout:
//   { "z0": [re, im],
//     "protos": { id: [ {"id", "foot": [re, im], "ram"} ... ] },
//     "core_sheets": { id: proto },
//     "families": [ {"id", "proto", "ram", "chain_slit",
//                    "attach": {"sheet", "slit", "side"}, "orientation"} ],
//     "gluing": [ [[sheet, slit, side], [sheet, slit, side]] ],
//     "rams": { id: {"projection": [re, im], "order": int | "inf"} } }
// side is "top" or "bottom"; orientation is "plus" or "minus".

#include <string>

#include "json.hpp"
#include "logriemann/sheet_complex.hpp"

namespace lrs {

/// Resolves every reference (throws SurfaceError "parse-error" or
/// "dangling-reference").  Semantic validity is left to validate().
SheetComplex build_from_spec(const nlohmann::json& doc);
SheetComplex build_from_spec_text(const std::string& text);

nlohmann::json to_spec(const SheetComplex& c);

SheetComplex load_surface(const std::string& path);

}  // namespace lrs
