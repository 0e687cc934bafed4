#include <random>

#include "doctest.h"
#include "qlie/scalar.hpp"

using namespace qlie;

namespace {

Scalar random_scalar(Field f, std::mt19937& rng) {
  std::uniform_int_distribution<long> num(-20, 20), den(1, 9);
  long d = den(rng);
  if (Scalar(f, d).is_zero()) d = 1;
  return Scalar::fraction(f, num(rng), d);
}

}  // namespace

TEST_CASE("rational arithmetic") {
  Field q = Field::rationals();
  CHECK(Scalar::fraction(q, 1, 2) + Scalar::fraction(q, 1, 3) == Scalar::fraction(q, 5, 6));
  CHECK((Scalar::fraction(q, 1, 2) + Scalar::fraction(q, 1, 3)).str() == "5/6");
  CHECK(Scalar::fraction(q, 4, -6).str() == "-2/3");
  CHECK(Scalar::parse(q, "6/-4").str() == "-3/2");
  CHECK(Scalar::parse(q, "7").str() == "7");
}

TEST_CASE("prime field arithmetic") {
  Field f5 = Field::prime(5);
  CHECK(Scalar(f5, 2).inverse() == Scalar(f5, 3));
  CHECK(Scalar(f5, -1).residue() == 4);
  CHECK(Scalar::parse(f5, "1/2") == Scalar(f5, 3));
  CHECK(Scalar::parse(f5, "-3").str() == "2");
}

TEST_CASE("division by zero and field mismatch") {
  Field q = Field::rationals();
  CHECK_THROWS_AS(Scalar(q, 1) / Scalar(q, 0), Error);
  try {
    (void)(Scalar(q, 1) / Scalar(q, 0));
  } catch (const Error& e) {
    CHECK(e.code() == Errc::DivisionByZero);
  }
  try {
    (void)(Scalar(q, 1) + Scalar(Field::prime(3), 1));
    FAIL("expected FieldMismatch");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::FieldMismatch);
  }
  CHECK_THROWS_AS(Scalar::parse(Field::prime(5), "1/5"), Error);
}

TEST_CASE("field parsing") {
  CHECK(Field::parse("Q").is_rationals());
  CHECK(Field::parse("GF5") == Field::prime(5));
  CHECK(Field::parse("GF(7)") == Field::prime(7));
  CHECK_THROWS_AS(Field::parse("GF6"), Error);
  CHECK_THROWS_AS(Field::parse("R"), Error);
  CHECK(Field::prime(7).name() == "GF(7)");
}

TEST_CASE("square classes") {
  Field q = Field::rationals();
  CHECK(Scalar::fraction(q, 4, 9).is_square());
  CHECK_FALSE(Scalar(q, 2).is_square());
  CHECK_FALSE(Scalar(q, -4).is_square());
  CHECK(Scalar(q, 0).is_square());
  CHECK(*Scalar::fraction(q, 4, 9).sqrt() == Scalar::fraction(q, 2, 3));
  CHECK(Scalar(Field::prime(7), 2).is_square());
  CHECK(*Scalar(Field::prime(7), 2).sqrt() * *Scalar(Field::prime(7), 2).sqrt() == Scalar(Field::prime(7), 2));
}

TEST_CASE("Euler criterion agrees with brute-force squaring") {
  for (std::uint32_t p : {3u, 5u, 7u, 11u, 13u, 17u, 97u}) {
    Field f = Field::prime(p);
    std::vector<bool> sq(p, false);
    for (std::uint32_t s = 0; s < p; ++s) sq[(s * s) % p] = true;
    for (std::uint32_t a = 0; a < p; ++a) {
      Scalar x(f, a);
      CHECK(x.is_square() == sq[a]);
      if (sq[a]) CHECK(*x.sqrt() * *x.sqrt() == x);
      else CHECK_FALSE(x.sqrt().has_value());
    }
  }
}

TEST_CASE("field axioms on random triples") {
  std::mt19937 rng(7);
  for (Field f : {Field::rationals(), Field::prime(5), Field::prime(101)}) {
    for (int it = 0; it < 200; ++it) {
      Scalar a = random_scalar(f, rng), b = random_scalar(f, rng), c = random_scalar(f, rng);
      CHECK((a + b) + c == a + (b + c));
      CHECK((a * b) * c == a * (b * c));
      CHECK(a * (b + c) == a * b + a * c);
      CHECK(a - a == Scalar(f, 0));
      if (!a.is_zero()) CHECK(a * a.inverse() == Scalar(f, 1));
      CHECK((a * a).is_square());
      if (!b.is_zero()) CHECK(a.is_square() == (a * b * b).is_square());
    }
  }
}

TEST_CASE("powers") {
  Field q = Field::rationals();
  CHECK(Scalar(q, 2).pow(10) == Scalar(q, 1024));
  CHECK(Scalar(q, 2).pow(-2) == Scalar::fraction(q, 1, 4));
  CHECK(Scalar(Field::prime(7), 3).pow(6).is_one());
}
