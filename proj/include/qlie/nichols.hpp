#pragma once

#include <cstddef>
#include <vector>

#include "qlie/envelope.hpp"

namespace qlie {

/// Sum over S_n of braid lifts. Computed by the coset factorization
/// (Omega_{n-1} (x) Id)(Id + c_{n-1} + c_{n-1}c_{n-2} + ... + c_{n-1}...c_1).
Mat quantum_symmetrizer(const BraidedSpace& b, std::size_t n);

/// How a reduced word is read off a permutation by adjacent sorting.
enum class WordSchedule { LeftmostDescent, RightmostDescent };
/// Same sum, lifting each permutation separately along the chosen reduced word.
Mat quantum_symmetrizer_by_words(const BraidedSpace& b, std::size_t n, WordSchedule s);

/// rank of the symmetrizer equals dim S_Q^n for every n <= N.
bool nichols_quadratic_at(const BraidedSpace& b, std::size_t N);

struct PrimitiveReport {
  std::size_t degree_cap = 0;
  /// graded: primitives of pure degree d; filtered: primitives inside U'_d.
  bool graded = true;
  std::vector<std::vector<TensorElem>> levels;
  /// Coproduct of every relation vanishes in the truncated quotient.
  bool coideal = true;
  /// P equals the span of the generators up to the cap.
  bool equals_v = false;
};

PrimitiveReport primitives_of_quotient(const Presentation& p, std::size_t N, std::size_t buffer = 2);

/// Gaussian binomial by the Pascal recursion.
Scalar q_binomial(long n, long t, const Scalar& q);

/// Closed-form coproduct of x1^a x2^b against the direct coproduct in S_Q, a + b <= n_max.
bool verify_qpower_coproduct(int row, const std::optional<Scalar>& gamma, std::size_t n_max);

/// alpha_t(n) from alpha_t(n+1) = alpha_t(n) + alpha_{t-1}(n)(n+2-2t), alpha_t(0) = [t = 0].
long alpha_coeff(long t, long n);

struct Cx2Report {
  bool braiding = false;   // c(x2 (x) x2^n) = x2^n (x) x2 + n gamma x1 x2^(n-1) (x) x1
  bool coproduct = false;  // Delta(x2^n) as the alpha-weighted sum
  bool bridge = false;     // (1 (x) x2) Delta0(x2^m) identity
  bool alpha_edges = false;
  bool alpha13_direct = false;
  bool ok() const { return braiding && coproduct && bridge && alpha_edges && alpha13_direct; }
};
Cx2Report verify_cx2_and_alpha(const Scalar& gamma, std::size_t n_max);

}  // namespace qlie
