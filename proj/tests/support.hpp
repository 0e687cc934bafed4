#pragma once

#include <optional>
#include <random>

#include "qlie/table.hpp"

namespace qlie::test {

inline const Field Q = Field::rationals();

inline Vec ints(Field f, std::initializer_list<long> xs) {
  Vec v;
  for (long x : xs) v.emplace_back(f, x);
  return v;
}

inline Poly poly(Field f, std::initializer_list<long> xs) { return Poly(f, ints(f, xs)); }

/// Basis vector of the word (1-based letters) in V^(x len).
inline Vec word_vec(Field f, std::size_t n, std::initializer_list<int> letters) {
  Word w;
  for (int l : letters) w.push_back(static_cast<std::uint8_t>(l - 1));
  return unit_vec(f, ipow(n, w.size()), word_index(w, n));
}

inline std::optional<Scalar> gamma_for(Field f, int row, long gamma) {
  if (!row_is_parametric(row)) return std::nullopt;
  return Scalar(f, gamma);
}

inline LiftedQLie row_q(int row, long gamma = 2, Field f = Q) { return table_row(f, row, gamma_for(f, row, gamma)).q; }

inline Mat random_invertible(Field f, std::size_t n, std::mt19937& rng, long lo = -3, long hi = 3) {
  std::uniform_int_distribution<long> d(lo, hi);
  for (;;) {
    Mat a(f, n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) a(i, j) = Scalar(f, d(rng));
    if (rank(a) == n) return a;
  }
}

}  // namespace qlie::test
