#pragma once

#include "bettikit/bounds.hpp"
#include "bettikit/decomposition.hpp"
#include "bettikit/diagram.hpp"

#include <json.hpp>

#include <filesystem>
#include <string>
#include <string_view>

namespace bettikit {

inline constexpr const char* kTableFormatVersion = "bettikit-table/1";

/// Macaulay2-style text table. An optional header of column indices and an
/// optional "total:" row may precede rows "k: c_0 c_1 ...", where the cell in
/// column i of row k is beta_{i,i+k}. "." and "-" mark absent entries. The
/// total row, when present, must equal the column sums.
BettiDiagram parse_table_text(std::string_view text);

/// Renders every row from the lowest to the highest nonempty one, with a total row.
std::string format_table_text(const BettiDiagram& b);

/// JSON document:
///   {"format-version": "bettikit-table/1", "nvars": 8 | null, "minimal": bool,
///    "entries": [{"i": 0, "j": 0, "value": "1"}, ...]}
/// Values are exact rationals written as strings, entries sorted by (i, j).
nlohmann::json table_to_json(const BettiDiagram& b);
BettiDiagram table_from_json(const nlohmann::json& doc);

std::string serialize_json_table(const BettiDiagram& b);
BettiDiagram parse_json_table(std::string_view text);

/// JSON when the first non-blank character is '{', the text table format otherwise.
BettiDiagram parse_table_any(std::string_view text);
BettiDiagram load_table_file(const std::filesystem::path& path);
std::string read_file(const std::filesystem::path& path);

nlohmann::json to_json(const DegreeSequence& d);
nlohmann::json to_json(const Decomposition& d);
nlohmann::json to_json(const ModuleStats& s);
nlohmann::json to_json(const BoundRecord& r);
nlohmann::json to_json(const BoundsReport& r);
nlohmann::json to_json(const ConvexityViolation& v);
nlohmann::json to_json(const P1Certificate& c);

}  // namespace bettikit
