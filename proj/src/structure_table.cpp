#include "kappa/structure_table.hpp"

#include <string_view>

#include "kappa/kelement.hpp"

namespace kappa {

Orientation orientation_from_int(long value) {
  if (value == 1) return Orientation::Positive;
  if (value == -1) return Orientation::Negative;
  throw ContractViolation("orientation must be +1 or -1, got " + std::to_string(value));
}

SignedBlade kappa_blade(int k) {
  static const std::vector<SignedBlade> basis = even_basis(4);
  return basis.at(static_cast<std::size_t>(k));
}

const std::string& kappa_basis_label(int k) {
  static const std::array<std::string, kBasisSize> labels = {
      "1", "e_x e_y", "e_z e_x", "e_y e_z", "e_x e_∞", "e_y e_∞", "e_z e_∞", "I₃ e_∞"};
  return labels.at(static_cast<std::size_t>(k));
}

std::string entry_label(const TableEntry& e) {
  std::string out = e.sign < 0 ? "-" : "";
  // Non-scalar basis elements already carry one λ; scalar does not.
  const bool printed_lambda = e.index == kUnit ? (e.lambda_exp & 1) : !(e.lambda_exp & 1);
  if (e.index == kUnit) {
    out += printed_lambda ? "λ" : "1";
    return out;
  }
  if (printed_lambda) out += "λ ";
  out += kappa_basis_label(e.index);
  return out;
}

namespace {

// The published multiplication table, cell for cell. Row label is the left factor.
constexpr std::array<std::array<std::string_view, kBasisSize>, kBasisSize> kPrinted = {{
    {"1", "λ e_x e_y", "λ e_z e_x", "λ e_y e_z", "λ e_x e_∞", "λ e_y e_∞", "λ e_z e_∞", "λ I₃ e_∞"},
    {"λ e_x e_y", "-1", "e_y e_z", "-e_z e_x", "-e_y e_∞", "e_x e_∞", "I₃ e_∞", "-e_z e_∞"},
    {"λ e_z e_x", "-e_y e_z", "-1", "e_x e_y", "e_z e_∞", "I₃ e_∞", "-e_x e_∞", "-e_y e_∞"},
    {"λ e_y e_z", "e_z e_x", "-e_x e_y", "-1", "I₃ e_∞", "-e_z e_∞", "e_y e_∞", "-e_x e_∞"},
    {"λ e_x e_∞", "e_y e_∞", "-e_z e_∞", "I₃ e_∞", "-1", "-e_x e_y", "e_z e_x", "-e_y e_z"},
    {"λ e_y e_∞", "-e_x e_∞", "I₃ e_∞", "e_z e_∞", "e_x e_y", "-1", "-e_y e_z", "-e_z e_x"},
    {"λ e_z e_∞", "I₃ e_∞", "e_x e_∞", "-e_y e_∞", "-e_z e_x", "e_y e_z", "-1", "-e_x e_y"},
    {"λ I₃ e_∞", "-e_z e_∞", "-e_y e_∞", "-e_x e_∞", "-e_y e_z", "-e_z e_x", "-e_x e_y", "1"},
}};

TableEntry parse_printed_cell(std::string_view cell) {
  TableEntry e;
  if (cell.starts_with("-")) {
    e.sign = -1;
    cell.remove_prefix(1);
  }
  bool has_lambda = false;
  constexpr std::string_view kLambda = "λ";
  if (cell.starts_with(kLambda)) {
    has_lambda = true;
    cell.remove_prefix(kLambda.size());
    if (cell.starts_with(" ")) cell.remove_prefix(1);
  }
  if (cell == "1" || (has_lambda && cell.empty())) {
    e.index = kUnit;
    e.lambda_exp = has_lambda ? 1 : 0;
    return e;
  }
  for (int k = 1; k < kBasisSize; ++k) {
    if (cell == kappa_basis_label(k)) {
      e.index = k;
      e.lambda_exp = has_lambda ? 0 : 1;
      return e;
    }
  }
  throw InternalError("unparseable table cell '" + std::string(cell) + "'");
}

StructureTable::Grid parse_printed() {
  StructureTable::Grid grid{};
  for (std::size_t r = 0; r < kBasisSize; ++r) {
    for (std::size_t c = 0; c < kBasisSize; ++c) grid[r][c] = parse_printed_cell(kPrinted[r][c]);
  }
  return grid;
}

}  // namespace

const StructureTable& transcribed_table(Orientation lambda) {
  static const StructureTable positive(Orientation::Positive, parse_printed());
  static const StructureTable negative(Orientation::Negative, parse_printed());
  return lambda == Orientation::Positive ? positive : negative;
}

StructureTable derive_table(Orientation lambda) {
  const int l = lambda_value(lambda);
  StructureTable::Grid grid{};
  for (int i = 0; i < kBasisSize; ++i) {
    for (int j = 0; j < kBasisSize; ++j) {
      const Multivector<Rational> lhs = embed_to_cl40(KElement<Rational>::basis(i, lambda));
      const Multivector<Rational> rhs = embed_to_cl40(KElement<Rational>::basis(j, lambda));
      const Multivector<Rational> prod = geometric_product(lhs, rhs);
      if (has_odd_part(prod)) {
        throw InternalError("basis product left the even subalgebra");
      }
      const KElement<Rational> k = from_cl40(prod, lambda);

      int found = -1;
      for (int m = 0; m < kBasisSize; ++m) {
        if (is_zero(k.coeffs[static_cast<std::size_t>(m)])) continue;
        if (found >= 0) throw InternalError("basis product is not a single basis element");
        found = m;
      }
      if (found < 0) throw InternalError("basis product vanished");
      const Rational& v = k.coeffs[static_cast<std::size_t>(found)];
      if (v != 1 && v != -1) throw InternalError("basis product has non-unit coefficient");

      // Each non-scalar factor carries one λ; the result basis element absorbs one.
      TableEntry e;
      e.index = found;
      e.lambda_exp = ((i != 0) + (j != 0) + (found != 0)) & 1;
      const int numeric = v > 0 ? 1 : -1;
      e.sign = (e.lambda_exp & 1) ? numeric * l : numeric;
      grid[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = e;
    }
  }
  return StructureTable(lambda, grid);
}

TableComparison compare_tables(const StructureTable& derived, const StructureTable& transcribed) {
  TableComparison out;
  bool transposed_ok = true;
  for (int r = 0; r < kBasisSize; ++r) {
    for (int c = 0; c < kBasisSize; ++c) {
      ++out.cells_compared;
      if (derived.at(r, c) != transcribed.at(r, c)) {
        out.mismatches.push_back({r, c, derived.at(r, c), transcribed.at(r, c)});
      }
      if (derived.at(r, c) != transcribed.at(c, r)) transposed_ok = false;
    }
  }
  out.transpose_matches = !out.mismatches.empty() && transposed_ok;
  return out;
}

}  // namespace kappa
