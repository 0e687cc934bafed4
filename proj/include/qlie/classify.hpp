#pragma once

#include <optional>
#include <string>

#include "qlie/table.hpp"

namespace qlie {

struct CanonicalFormResult {
  int row = 0;
  std::optional<Scalar> gamma;
  /// transform(input, alpha) equals table_row(row, gamma) exactly.
  Mat alpha;
  /// gamma is a non-square kept as is; only its square class is an invariant.
  bool gamma_square_class_note = false;
  /// Branch of the reduction that fired, e.g. "1.2.2.3".
  std::string case_path;
};

/// Reduces a two-dimensional lifted QLie algebra with one-dimensional Im beta
/// onto its table row. Throws PreconditionViolated for inputs outside that
/// scope and InternalContradiction when an impossible branch is reached.
CanonicalFormResult canonical_form(const LiftedQLie& q);

enum class IsoMode { FiniteExhaustive, RationalStructured };

/// Smallest (in lexicographic entry order) alpha with is_morphism(a, b, alpha).
/// FiniteExhaustive scans GL_2(F_p). RationalStructured looks only at upper
/// triangular alpha: diagonal entries range over rationals of height at most
/// `height`, the corner is solved exactly. A miss in that mode is no proof.
std::optional<Mat> iso_bruteforce(const LiftedQLie& a, const LiftedQLie& b, IsoMode mode, long height = 6);

/// Number of alpha in GL_2(F_p) intertwining a and b.
std::size_t iso_count(const LiftedQLie& a, const LiftedQLie& b);

/// Every invertible 2x2 matrix over GF(p), lexicographic in (a11, a12, a21, a22).
std::vector<Mat> general_linear_2(Field f);

}  // namespace qlie
