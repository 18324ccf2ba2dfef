#pragma once

// The 8x8 multiplication table of K^λ, the even subalgebra of Cl(4,0) on the
// basis [1, λe_xe_y, λe_ze_x, λe_ye_z, λe_xe_∞, λe_ye_∞, λe_ze_∞, λI₃e_∞].

#include <array>
#include <string>
#include <vector>

#include "kappa/clifford.hpp"

namespace kappa {

enum class Orientation : int { Positive = 1, Negative = -1 };

constexpr int lambda_value(Orientation o) { return static_cast<int>(o); }

/// Throws ContractViolation unless value is +1 or -1.
Orientation orientation_from_int(long value);

inline constexpr int kBasisSize = 8;

/// Indices into the K^λ basis.
enum BasisIndex : int {
  kUnit = 0,
  kExEy = 1,
  kEzEx = 2,
  kEyEz = 3,
  kExEinf = 4,
  kEyEinf = 5,
  kEzEinf = 6,
  kI3Einf = 7,
};

/// Cl(4,0) blade (with its sign against canonical order) under basis element k,
/// excluding the λ weight.
SignedBlade kappa_blade(int k);

/// "1", "e_x e_y", ..., "I₃ e_∞" (no λ prefix).
const std::string& kappa_basis_label(int k);

/// basis_row * basis_col = sign * λ^lambda_exp * basis_index.
struct TableEntry {
  int index = 0;
  int sign = 1;
  int lambda_exp = 0;

  friend constexpr bool operator==(const TableEntry&, const TableEntry&) = default;
};

/// Renders an entry the way the printed table does: a λ prefix appears only
/// when the product carries an odd power of λ relative to the bare blade,
/// e.g. "λ e_x e_y", "-e_y e_z", "-1".
std::string entry_label(const TableEntry& e);

class StructureTable {
 public:
  using Grid = std::array<std::array<TableEntry, kBasisSize>, kBasisSize>;

  StructureTable(Orientation lambda, const Grid& cells) : lambda_(lambda), cells_(cells) {}

  Orientation orientation() const { return lambda_; }
  const TableEntry& at(int row, int col) const {
    return cells_.at(static_cast<std::size_t>(row)).at(static_cast<std::size_t>(col));
  }
  /// sign * λ^lambda_exp evaluated for this table's orientation.
  int effective_sign(int row, int col) const {
    const TableEntry& e = at(row, col);
    return (e.lambda_exp & 1) ? e.sign * lambda_value(lambda_) : e.sign;
  }
  const Grid& cells() const { return cells_; }

  friend bool operator==(const StructureTable&, const StructureTable&) = default;

 private:
  Orientation lambda_;
  Grid cells_;
};

/// The printed multiplication table, transcribed cell by cell (row = left
/// factor). Identical for both orientations apart from the tag.
const StructureTable& transcribed_table(Orientation lambda);

/// Computes every basis product inside Cl(4,0) and factors it as
/// sign * λ^k * basis_m. Throws InternalError if a product leaves the span.
StructureTable derive_table(Orientation lambda);

struct CellMismatch {
  int row = 0;
  int col = 0;
  TableEntry derived;
  TableEntry transcribed;
};

struct TableComparison {
  std::vector<CellMismatch> mismatches;
  int cells_compared = 0;
  /// Set when the grids differ but the transposed transcription would match,
  /// i.e. the row/column operand convention is flipped.
  bool transpose_matches = false;

  bool matches() const { return mismatches.empty(); }
};

TableComparison compare_tables(const StructureTable& derived, const StructureTable& transcribed);

}  // namespace kappa
