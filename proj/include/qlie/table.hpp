#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qlie/envelope.hpp"
#include "qlie/lifted.hpp"

namespace qlie {

/// One instantiated row of the classification table of two-dimensional
/// lifted QLie algebras with one-dimensional Im beta.
struct TableRow {
  int row = 0;
  std::optional<Scalar> gamma;
  LiftedQLie q;
  Poly f;
  /// Relations of U_Q as listed in the table.
  std::vector<TensorElem> relations;
};

bool row_is_parametric(int row);
/// Human-readable gamma side condition of a row.
std::string gamma_constraint(int row);
bool gamma_admissible(int row, const Scalar& gamma);

/// Throws PreconditionViolated for an unknown row, a missing or inadmissible gamma.
TableRow table_row(Field f, int row, const std::optional<Scalar>& gamma = std::nullopt);

/// Admissible gamma values drawn from the candidates; {nullopt} for rows without gamma.
std::vector<std::optional<Scalar>> row_instances(int row, const std::vector<Scalar>& candidates);
/// Candidates 0, 1, 2 over Q.
std::vector<Scalar> default_gammas(Field f);
/// Every admissible instance over GF(p), one non-square representative for the
/// square-class rows.
std::vector<std::optional<Scalar>> finite_field_instances(Field f, int row);

struct TableCheck {
  bool lifted = false, minpoly = false, relations = false;
  bool ok() const { return lifted && minpoly && relations; }
};
/// Re-derives the row: lifted axioms, minimal polynomial and the U_Q relation span.
TableCheck check_table_row(const TableRow& r);

/// All rows at the admissible gammas, each re-verified; throws InternalContradiction on failure.
std::vector<TableRow> table_emit(Field f, const std::vector<Scalar>& gammas);

}  // namespace qlie
