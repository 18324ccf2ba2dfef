#pragma once

#include <string>
#include <string_view>

#include "kappa/structure_table.hpp"

namespace kappa {

enum class TableFormat { Text, Json, Csv, Markdown };

/// Throws ContractViolation for anything but text, json, csv, markdown.
TableFormat parse_table_format(std::string_view name);

/// Header label for basis element k: "1" or "λ " + basis label.
std::string basis_header(int k);

/// Row = left factor. Output ends with a newline.
std::string render_table(const StructureTable& table, TableFormat format);

}  // namespace kappa
