#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qlie/braided.hpp"

namespace qlie {

/// (V, c, beta) with beta: V(x)V -> V stored as an n x n^2 matrix.
struct LiftedQLie {
  BraidedSpace space;
  Mat beta;
};

struct LiftedReport {
  bool antisym = false, bracket_left = false, bracket_right = false, jacobi = false;
  bool ok() const { return antisym && bracket_left && bracket_right && jacobi; }
  /// Label of the first failing axiom, empty when all pass.
  std::string first_failure() const;
};

/// beta_bar: E2 -> V in the canonical echelon basis of E2.
struct QBracketData {
  BraidedSpace space;
  Subspace e2_basis;
  Mat beta_bar;
};

struct QBracketReport {
  bool bracket = false, correctness = false, jacobi = false;
  bool ok() const { return bracket && correctness && jacobi; }
  std::string first_failure() const;
};

struct ImageSubalgebra {
  Subspace l;
  /// Restriction of (c, beta) to Im beta; empty when beta = 0.
  std::optional<LiftedQLie> restricted;
};

/// beta (x) Id and Id (x) beta on V^(x3).
Mat beta1(const LiftedQLie& q);
Mat beta2(const LiftedQLie& q);

LiftedReport verify_lifted(const LiftedQLie& q);
QBracketReport verify_qbracket(const QBracketData& q);

/// beta = beta_bar o h(c).
LiftedQLie lift_bracket(const QBracketData& q, const MinpolySplit& split);
/// The unique beta_bar with beta_bar o h(c) = beta.
QBracketData restrict_bracket(const LiftedQLie& q, const MinpolySplit& split);

ImageSubalgebra image_subalgebra(const LiftedQLie& q);

/// Lifted axioms for the one-dimensional pair (c, beta) = (gamma, lambda).
LiftedReport verify_dim1(const Scalar& gamma, const Scalar& lambda);
/// True iff every verified one-dimensional lifted QLie algebra has beta = 0.
bool check_dim1_rigidity(Field f, bool exhaustive);

/// beta (beta1 + beta2) vanishes on the E2bar subspace.
bool derived_antisym_plus(const LiftedQLie& q);

/// alpha intertwines both structures: (a (x) a) c_a = c_b (a (x) a) and a beta_a = beta_b (a (x) a).
bool is_morphism(const LiftedQLie& a, const LiftedQLie& b, const Mat& alpha);
/// Transport along a basis change: c -> (a(x)a) c (a(x)a)^-1, beta -> a beta (a(x)a)^-1.
LiftedQLie transform(const LiftedQLie& q, const Mat& alpha);

/// Basis of the beta satisfying the linear axioms (antisymmetry and both bracket identities).
std::vector<Mat> lifted_linear_space(const BraidedSpace& b);
/// Basis of the beta_bar satisfying both bracket identities.
std::vector<Mat> qbracket_linear_space(const BraidedSpace& b);

}  // namespace qlie
