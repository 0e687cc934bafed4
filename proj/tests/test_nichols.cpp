#include <algorithm>
#include <numeric>

#include "doctest.h"
#include "support.hpp"
#include "qlie/nichols.hpp"

using namespace qlie;
using namespace qlie::test;

namespace {

// Sum over S_n of braid lifts, each permutation written as a bubble-sort reduced word.
Mat symmetrizer_oracle(const BraidedSpace& b, std::size_t n) {
  std::size_t d = ipow(b.dim(), n);
  Mat total(b.field(), d, d);
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    std::vector<std::size_t> p = perm;
    Mat op = Mat::identity(b.field(), d);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j + 1 < n - i; ++j)
        if (p[j] > p[j + 1]) {
          std::swap(p[j], p[j + 1]);
          op = op * slot_lift(b.c(), b.dim(), j + 1, n);
        }
    total = total + op;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

Scalar q_binomial_product(long n, long t, const Scalar& q) {
  Field f = q.field();
  Scalar num(f, 1), den(f, 1);
  for (long i = 0; i < t; ++i) {
    num *= Scalar(f, 1) - q.pow(n - i);
    den *= Scalar(f, 1) - q.pow(i + 1);
  }
  return num / den;
}

// Over Q the rows at the given gamma; over GF(p) every admissible instance.
std::vector<BraidedSpace> table_spaces(Field f, long gamma) {
  std::vector<BraidedSpace> out;
  for (int row = 1; row <= 8; ++row) {
    if (f.is_rationals()) {
      out.push_back(row_q(row, gamma, f).space);
      continue;
    }
    for (const auto& g : finite_field_instances(f, row)) out.push_back(table_row(f, row, g).q.space);
  }
  return out;
}

bool in_span(const std::vector<TensorElem>& basis, const TensorElem& z, std::size_t len) {
  std::vector<Vec> vs;
  for (const auto& e : basis) vs.push_back(e.to_vec(len));
  return Subspace::span(z.field(), ipow(z.dim(), len), vs).contains(z.to_vec(len));
}

}  // namespace

TEST_CASE("quantum symmetrizer") {
  BraidedSpace r4 = row_q(4, 1).space;
  CHECK(quantum_symmetrizer(r4, 0) == Mat::identity(Q, 1));
  CHECK(quantum_symmetrizer(r4, 1) == Mat::identity(Q, 2));
  CHECK(quantum_symmetrizer(r4, 2) == Mat::identity(Q, 4) + r4.c());
  CHECK(rank(quantum_symmetrizer(r4, 2)) == 2);
  BraidedSpace flip(2, flip_braiding(Q, 2));
  CHECK(rank(quantum_symmetrizer(flip, 3)) == 4);
}

TEST_CASE("symmetrizer matches the permutation sum") {
  for (const auto& b : table_spaces(Q, 2))
    for (std::size_t n = 2; n <= 4; ++n) CHECK(quantum_symmetrizer(b, n) == symmetrizer_oracle(b, n));
}

TEST_CASE("reduced word choice does not matter") {
  for (const auto& b : table_spaces(Q, 2))
    for (std::size_t n = 3; n <= 4; ++n) {
      Mat left = quantum_symmetrizer_by_words(b, n, WordSchedule::LeftmostDescent);
      Mat right = quantum_symmetrizer_by_words(b, n, WordSchedule::RightmostDescent);
      CHECK(left == right);
      CHECK(left == quantum_symmetrizer(b, n));
    }
}

TEST_CASE("Nichols algebra is quadratic at truncation") {
  CHECK(nichols_quadratic_at(row_q(1).space, 4));
  CHECK(nichols_quadratic_at(row_q(7, 2).space, 4));
  for (const auto& b : table_spaces(Q, 2)) CHECK(nichols_quadratic_at(b, 4));

  BraidedSpace r1p = row_q(1, 2, Field::prime(3)).space;
  CHECK_FALSE(nichols_quadratic_at(r1p, 3));
  CHECK(rank(quantum_symmetrizer(r1p, 3)) == 2);
  CHECK(sq_graded_dims(r1p, 3)[3] == 4);
}

TEST_CASE("symmetrizer rank is bounded by S_Q") {
  for (Field f : {Q, Field::prime(3), Field::prime(5)})
    for (const auto& b : table_spaces(f, 2)) {
      std::vector<std::size_t> sq = sq_graded_dims(b, 4);
      for (std::size_t n = 0; n <= 4; ++n) CHECK(rank(quantum_symmetrizer(b, n)) <= sq[n]);
    }
}

TEST_CASE("primitives of S_Q and U_Q") {
  LiftedQLie r1 = row_q(1);
  PrimitiveReport s = primitives_of_quotient(sq_relations(r1.space), 6);
  CHECK(s.graded);
  CHECK(s.coideal);
  CHECK(s.equals_v);
  REQUIRE(s.levels.size() >= 2);
  CHECK(s.levels[1].size() == 2);
  for (std::size_t d = 2; d < s.levels.size(); ++d) CHECK(s.levels[d].empty());

  PrimitiveReport u = primitives_of_quotient(uq_relations(r1, split_minpoly(r1.space)), 4);
  CHECK_FALSE(u.graded);
  CHECK(u.coideal);
  CHECK(u.equals_v);

  Field f3 = Field::prime(3);
  BraidedSpace r1p = row_q(1, 2, f3).space;
  PrimitiveReport p = primitives_of_quotient(sq_relations(r1p), 3);
  CHECK_FALSE(p.equals_v);
  REQUIRE(p.levels.size() == 4);
  CHECK(in_span(p.levels[3], TensorElem::word(f3, 2, {0, 0, 0}), 3));
  CHECK(in_span(p.levels[3], TensorElem::word(f3, 2, {1, 1, 1}), 3));
  CHECK(p.levels[2].empty());
}

TEST_CASE("V is always primitive") {
  for (Field f : {Q, Field::prime(3)})
    for (const auto& b : table_spaces(f, 2)) {
      PrimitiveReport p = primitives_of_quotient(sq_relations(b), 3);
      REQUIRE(p.levels.size() >= 2);
      for (std::uint8_t i = 0; i < 2; ++i) CHECK(in_span(p.levels[1], TensorElem::letter(f, 2, i), 1));
    }
}

TEST_CASE("Gaussian binomials") {
  for (long q : {-3, 2, 5}) {
    Scalar s(Q, q);
    CHECK(q_binomial(7, 0, s) == Scalar(Q, 1));
    CHECK(q_binomial(3, 1, s) == Scalar(Q, 1) + s + s * s);
    for (long n = 0; n <= 6; ++n)
      for (long t = 0; t <= n; ++t) CHECK(q_binomial(n, t, s) == q_binomial_product(n, t, s));
  }
  CHECK(q_binomial(4, 2, Scalar(Q, 1)) == Scalar(Q, 6));
  CHECK(q_binomial(4, 2, Scalar(Q, -1)) == Scalar(Q, 2));
}

TEST_CASE("closed-form coproducts of monomials") {
  CHECK(verify_qpower_coproduct(5, std::nullopt, 4));
  CHECK(verify_qpower_coproduct(6, Scalar(Q, 2), 4));
  CHECK(verify_qpower_coproduct(6, Scalar(Q, -3), 4));
  CHECK(verify_qpower_coproduct(7, Scalar(Q, 2), 4));
  CHECK(verify_qpower_coproduct(7, Scalar(Q, -2), 1));
}

TEST_CASE("row 8 braiding of powers and the alpha recursion") {
  for (long t = 0; t <= 4; ++t)
    for (long n = 0; n < 2 * t; ++n) CHECK(alpha_coeff(t, n) == 0);
  for (long n = 0; n <= 8; ++n) CHECK(alpha_coeff(0, n) == 1);
  CHECK(alpha_coeff(1, 2) == 1);
  CHECK(alpha_coeff(1, 3) == 3);
  CHECK(alpha_coeff(2, 4) == 3);
  for (long g : {1, 2}) {
    Cx2Report r = verify_cx2_and_alpha(Scalar(Q, g), 6);
    CHECK(r.braiding);
    CHECK(r.coproduct);
    CHECK(r.bridge);
    CHECK(r.alpha_edges);
    CHECK(r.alpha13_direct);
  }
}
