#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "specpoly/polyz.hpp"
#include "specpoly/theorems.hpp"

namespace specpoly::format {

enum class OutputFormat { Pretty, Json, Csv };

std::optional<OutputFormat> parse_output_format(std::string_view name);

/// Ascending powers, constant first: "7 - 14x + 7x^2 - x^3". Zero is "0".
std::string to_pretty(const IntPoly& p);

/// Inverse of to_pretty. Accepts any spacing and repeated degrees (which
/// are summed); throws std::invalid_argument on malformed input.
IntPoly parse_pretty(std::string_view text);

/// JSON array of decimal strings, ascending degree.
nlohmann::json poly_to_json(const IntPoly& p);
IntPoly poly_from_json(const nlohmann::json& j);

/// {"n": n, "poly": [...]}
nlohmann::json poly_document(std::uint64_t n, const IntPoly& p);

inline constexpr std::string_view kTableCsvHeader = "n,phi_n_0,phi_2n_4,phi_3n_3,phi_4n_2,phi_6n_1,v_n";

std::string table_to_csv(const std::vector<ValueRow>& rows);
std::vector<ValueRow> table_from_csv(std::string_view csv);
nlohmann::json table_to_json(const std::vector<ValueRow>& rows);
/// Aligned columns; rows below the theorem range carry a '*' marker.
std::string table_to_pretty(const std::vector<ValueRow>& rows);

}  // namespace specpoly::format
