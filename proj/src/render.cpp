#include "kappa/render.hpp"

#include <sstream>
#include <vector>

#include "json.hpp"

namespace kappa {

namespace {

// Display width in code points; every label here is single-width.
std::size_t display_width(const std::string& s) {
  std::size_t n = 0;
  for (unsigned char c : s) n += (c & 0xC0) != 0x80;
  return n;
}

std::string pad(const std::string& s, std::size_t width) {
  const std::size_t w = display_width(s);
  return w >= width ? s : s + std::string(width - w, ' ');
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::vector<std::vector<std::string>> label_grid(const StructureTable& t) {
  std::vector<std::vector<std::string>> rows;
  std::vector<std::string> header = {"*"};
  for (int c = 0; c < kBasisSize; ++c) header.push_back(basis_header(c));
  rows.push_back(header);
  for (int r = 0; r < kBasisSize; ++r) {
    std::vector<std::string> row = {basis_header(r)};
    for (int c = 0; c < kBasisSize; ++c) row.push_back(entry_label(t.at(r, c)));
    rows.push_back(row);
  }
  return rows;
}

std::string render_text(const StructureTable& t) {
  const auto rows = label_grid(t);
  std::vector<std::size_t> widths(rows[0].size(), 0);
  for (const auto& row : rows) {
    for (std::size_t i = 0; i < row.size(); ++i) widths[i] = std::max(widths[i], display_width(row[i]));
  }
  std::ostringstream out;
  out << "λ = " << (t.orientation() == Orientation::Positive ? "+1" : "-1") << " (row = left factor)\n";
  for (const auto& row : rows) {
    std::string line;
    for (std::size_t i = 0; i < row.size(); ++i) {
      line += (i ? "  " : "") + pad(row[i], widths[i]);
    }
    while (!line.empty() && line.back() == ' ') line.pop_back();
    out << line << '\n';
  }
  return out.str();
}

std::string render_json(const StructureTable& t) {
  nlohmann::ordered_json j;
  j["lambda"] = lambda_value(t.orientation());
  nlohmann::ordered_json basis = nlohmann::ordered_json::array();
  for (int k = 0; k < kBasisSize; ++k) basis.push_back(basis_header(k));
  j["basis"] = std::move(basis);
  nlohmann::ordered_json cells = nlohmann::ordered_json::array();
  for (int r = 0; r < kBasisSize; ++r) {
    nlohmann::ordered_json row = nlohmann::ordered_json::array();
    for (int c = 0; c < kBasisSize; ++c) {
      const TableEntry& e = t.at(r, c);
      nlohmann::ordered_json cell;
      cell["index"] = e.index;
      cell["sign"] = e.sign;
      cell["lambda_exp"] = e.lambda_exp;
      cell["label"] = entry_label(e);
      row.push_back(std::move(cell));
    }
    cells.push_back(std::move(row));
  }
  j["cells"] = std::move(cells);
  return j.dump(2) + "\n";
}

std::string render_csv(const StructureTable& t) {
  std::ostringstream out;
  for (const auto& row : label_grid(t)) {
    for (std::size_t i = 0; i < row.size(); ++i) out << (i ? "," : "") << csv_field(row[i]);
    out << '\n';
  }
  return out.str();
}

std::string render_markdown(const StructureTable& t) {
  const auto rows = label_grid(t);
  std::ostringstream out;
  const auto emit = [&](const std::vector<std::string>& row) {
    out << '|';
    for (const std::string& cell : row) out << ' ' << cell << " |";
    out << '\n';
  };
  emit(rows[0]);
  out << '|';
  for (std::size_t i = 0; i < rows[0].size(); ++i) out << "---|";
  out << '\n';
  for (std::size_t r = 1; r < rows.size(); ++r) emit(rows[r]);
  return out.str();
}

}  // namespace

TableFormat parse_table_format(std::string_view name) {
  if (name == "text") return TableFormat::Text;
  if (name == "json") return TableFormat::Json;
  if (name == "csv") return TableFormat::Csv;
  if (name == "markdown") return TableFormat::Markdown;
  throw ContractViolation("unknown table format '" + std::string(name) + "'");
}

std::string basis_header(int k) {
  return k == kUnit ? "1" : "λ " + kappa_basis_label(k);
}

std::string render_table(const StructureTable& table, TableFormat format) {
  switch (format) {
    case TableFormat::Text:
      return render_text(table);
    case TableFormat::Json:
      return render_json(table);
    case TableFormat::Csv:
      return render_csv(table);
    case TableFormat::Markdown:
      return render_markdown(table);
  }
  throw InternalError("unhandled table format");
}

}  // namespace kappa
