#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "qlie/braided.hpp"

namespace qlie {

/// Word over the letters 0..n-1 (printed 1-based).
using Word = std::vector<std::uint8_t>;

std::size_t word_index(const Word& w, std::size_t n);
Word word_at(std::size_t index, std::size_t len, std::size_t n);
Word concat(const Word& a, const Word& b);
std::string word_str(const Word& w);

/// Finitely supported element of T(V); words of different lengths may coexist.
class TensorElem {
 public:
  TensorElem(Field f, std::size_t dim) : field_(f), n_(dim) {}
  static TensorElem one(Field f, std::size_t dim);
  static TensorElem word(Field f, std::size_t dim, const Word& w);
  static TensorElem letter(Field f, std::size_t dim, std::uint8_t i);
  /// Element of V^(x len) given by a coordinate vector.
  static TensorElem from_vec(Field f, std::size_t dim, std::size_t len, const Vec& v);

  Field field() const { return field_; }
  std::size_t dim() const { return n_; }
  const std::map<Word, Scalar>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  /// Largest word length; -1 for zero.
  int degree() const;
  bool is_homogeneous(std::size_t len) const;
  /// Coordinates in V^(x len); DegreeMismatch if other lengths occur.
  Vec to_vec(std::size_t len) const;
  /// Component of the given length.
  TensorElem component(std::size_t len) const;

  void add(const Word& w, const Scalar& s);
  TensorElem& operator+=(const TensorElem& o);
  TensorElem& operator-=(const TensorElem& o);
  friend TensorElem operator+(TensorElem a, const TensorElem& b) { return a += b; }
  friend TensorElem operator-(TensorElem a, const TensorElem& b) { return a -= b; }
  friend TensorElem operator*(const Scalar& s, const TensorElem& t);
  /// Concatenation product of T(V).
  friend TensorElem operator*(const TensorElem& a, const TensorElem& b);
  friend bool operator==(const TensorElem& a, const TensorElem& b);

  /// e.g. "x2x1 - x1x2 + x1", with powers of a repeated letter written x1^2.
  std::string str() const;

 private:
  Field field_;
  std::size_t n_;
  std::map<Word, Scalar> terms_;
};

using WordPair = std::pair<Word, Word>;

/// Element of T(V) (x) T(V).
class SplitTensorElem {
 public:
  SplitTensorElem(Field f, std::size_t dim) : field_(f), n_(dim) {}
  static SplitTensorElem pure(Field f, std::size_t dim, const Word& u, const Word& v);

  Field field() const { return field_; }
  std::size_t dim() const { return n_; }
  const std::map<WordPair, Scalar>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add(const WordPair& w, const Scalar& s);
  SplitTensorElem& operator+=(const SplitTensorElem& o);
  SplitTensorElem& operator-=(const SplitTensorElem& o);
  friend SplitTensorElem operator+(SplitTensorElem a, const SplitTensorElem& b) { return a += b; }
  friend SplitTensorElem operator-(SplitTensorElem a, const SplitTensorElem& b) { return a -= b; }
  friend SplitTensorElem operator*(const Scalar& s, const SplitTensorElem& t);
  friend bool operator==(const SplitTensorElem& a, const SplitTensorElem& b);
  /// Terms with left length a and right length b.
  SplitTensorElem bidegree(std::size_t a, std::size_t b) const;
  std::string str() const;

 private:
  Field field_;
  std::size_t n_;
  std::map<WordPair, Scalar> terms_;
};

/// The braided bialgebra T(V, c) with memoized braidings and coproducts of words.
/// Not thread-safe; use one instance per thread.
class TensorBialgebra {
 public:
  explicit TensorBialgebra(const BraidedSpace& b);

  const BraidedSpace& space() const { return b_; }
  Field field() const { return b_.field(); }
  std::size_t dim() const { return b_.dim(); }

  /// c applied at the 0-based adjacent pair (p, p+1) of every word in t.
  TensorElem braid_at(const TensorElem& t, std::size_t p) const;
  /// c^{|u|,|v|}(u (x) v), split as (length |v|) (x) (length |u|).
  const SplitTensorElem& braid_words(const Word& u, const Word& v);
  SplitTensorElem braid(const SplitTensorElem& t);
  SplitTensorElem mul(const SplitTensorElem& a, const SplitTensorElem& b);
  const SplitTensorElem& coproduct(const Word& w);
  SplitTensorElem coproduct(const TensorElem& t);

 private:
  BraidedSpace b_;
  std::vector<std::vector<std::pair<std::size_t, Scalar>>> cols_;
  std::map<WordPair, SplitTensorElem> braid_cache_;
  std::map<Word, SplitTensorElem> delta_cache_;
};

/// c^{m,n} as a matrix on V^(x m+n).
Mat block_braiding(const BraidedSpace& b, std::size_t m, std::size_t n);
SplitTensorElem braided_mul_split(const BraidedSpace& b, const SplitTensorElem& x, const SplitTensorElem& y);
SplitTensorElem coproduct(const BraidedSpace& b, const TensorElem& t);
/// Projection of the coproduct of a homogeneous element onto V^(x a) (x) V^(x b).
SplitTensorElem delta_component(const BraidedSpace& b, const TensorElem& t, std::size_t a, std::size_t bb);
/// Delta^{a,b} on V^(x a+b), reading u (x) v as the word uv.
Mat delta_matrix(const BraidedSpace& b, std::size_t a, std::size_t bb);
/// Primitive elements of degree n: intersection of ker Delta^{a,n-a}, 0 < a < n.
Subspace en_space(const BraidedSpace& b, std::size_t n);

}  // namespace qlie
