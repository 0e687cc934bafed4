#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "qlie/lifted.hpp"
#include "qlie/sparse.hpp"
#include "qlie/tensor.hpp"

namespace qlie {

/// T(V) modulo the two-sided ideal generated by the relations.
struct Presentation {
  BraidedSpace space;
  std::vector<TensorElem> relations;
};

/// Relations h(c)(z) - beta(z); empty when -1 is not an eigenvalue of c.
Presentation uq_relations(const LiftedQLie& q, const std::optional<MinpolySplit>& split);
/// Relations spanning E2.
Presentation sq_relations(const BraidedSpace& b);
/// Echelon basis of the span of the relations in T^{<=2}.
std::vector<TensorElem> canonical_relations(const std::vector<TensorElem>& rels, std::size_t dim);

/// Word <-> column map on T^{<=M}. Column 0 is the largest word: longer words first,
/// then lexicographic from the first letter with larger letters first.
class WordOrder {
 public:
  WordOrder(std::size_t dim, std::size_t max_len);
  std::size_t dim() const { return n_; }
  std::size_t max_len() const { return m_; }
  std::size_t size() const { return total_; }
  std::uint32_t column(const Word& w) const;
  Word word(std::uint32_t col) const;
  SparseVec to_sparse(const TensorElem& t) const;
  TensorElem to_elem(Field f, const SparseVec& v) const;

 private:
  std::size_t n_, m_, total_;
  std::vector<std::size_t> offset_;  // first column of each length
};

/// Ideal of a presentation intersected with T^{<=n}, n <= N.
class IdealTruncation {
 public:
  IdealTruncation(const Presentation& p, std::size_t degree_cap, std::size_t max_len, std::size_t buffer);

  std::size_t degree_cap() const { return cap_; }
  std::size_t buffer_used() const { return buffer_; }
  std::size_t dim() const { return n_; }
  /// dim (ideal cap T^{<=n}).
  std::size_t ideal_dim(std::size_t n) const;
  /// dim T^{<=n} / (ideal cap T^{<=n}).
  std::size_t quotient_dim(std::size_t n) const;
  /// Interreduced basis of ideal cap T^{<=n}.
  std::vector<TensorElem> slice_basis(std::size_t n) const;
  /// Canonical coset representative; the input must lie in T^{<=N}.
  TensorElem normal_form(const TensorElem& t) const;
  bool contains(const TensorElem& t) const;
  /// Words of the given length outside the leading words of the ideal.
  std::vector<Word> standard_words(std::size_t len) const;

 private:
  Field field_;
  std::size_t n_, cap_, buffer_;
  WordOrder order_;
  SparseEchelon slice_;
  std::vector<std::size_t> dims_;
};

/// Certified truncation: buffer, buffer+1 (and buffer+2 if needed) must agree.
IdealTruncation ideal_truncation(const Presentation& p, std::size_t N, std::size_t buffer = 2);
std::vector<std::size_t> filtration_dims(const Presentation& p, std::size_t N, std::size_t buffer = 2);
std::vector<std::size_t> sq_graded_dims(const BraidedSpace& b, std::size_t N);

struct BGReport {
  bool I = false, J = false;
};
BGReport bg_conditions(const Presentation& p);

bool pbw_check(const Presentation& p, std::size_t N, std::size_t buffer = 2);

}  // namespace qlie
