#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "qlie/poly.hpp"
#include "qlie/scalar.hpp"

namespace qlie {

using Vec = std::vector<Scalar>;

Vec zero_vec(Field f, std::size_t n);
Vec unit_vec(Field f, std::size_t n, std::size_t i);
bool is_zero(const Vec& v);

/// Dense row-major matrix over a Field.
class Mat {
 public:
  Mat() = default;
  Mat(Field f, std::size_t rows, std::size_t cols);
  static Mat identity(Field f, std::size_t n);
  static Mat from_ints(Field f, const std::vector<std::vector<long>>& rows);
  static Mat from_rows(Field f, std::size_t cols, const std::vector<Vec>& rows);
  static Mat from_cols(Field f, std::size_t rows, const std::vector<Vec>& cols);

  Field field() const { return field_; }
  std::size_t rows() const { return r_; }
  std::size_t cols() const { return c_; }
  Scalar& operator()(std::size_t i, std::size_t j) { return a_[i * c_ + j]; }
  const Scalar& operator()(std::size_t i, std::size_t j) const { return a_[i * c_ + j]; }
  Scalar& at(std::size_t i, std::size_t j);
  const Scalar& at(std::size_t i, std::size_t j) const;

  Vec row(std::size_t i) const;
  Vec col(std::size_t j) const;
  Vec apply(const Vec& v) const;
  bool is_zero() const;
  bool is_square() const { return r_ == c_; }
  Mat transpose() const;

  friend Mat operator+(const Mat& a, const Mat& b);
  friend Mat operator-(const Mat& a, const Mat& b);
  friend Mat operator*(const Mat& a, const Mat& b);
  friend Mat operator*(const Scalar& s, const Mat& a);
  friend bool operator==(const Mat& a, const Mat& b);

  std::string str() const;

 private:
  Field field_;
  std::size_t r_ = 0, c_ = 0;
  std::vector<Scalar> a_;
};

Mat kron(const Mat& a, const Mat& b);
/// Kronecker product matching the tensor basis convention (first factor least significant).
Mat tensor(const Mat& first, const Mat& second);

/// Reduced row echelon form; pivots receives the pivot columns.
Mat rref(const Mat& m, std::vector<std::size_t>* pivots = nullptr);
std::size_t rank(const Mat& m);
std::optional<Mat> inverse(const Mat& m);
/// A solution X of A X = B, if any.
std::optional<Mat> solve(const Mat& a, const Mat& b);

/// Subspace of K^n stored as RREF rows with ascending pivots.
class Subspace {
 public:
  Subspace(Field f, std::size_t ambient);
  static Subspace span(Field f, std::size_t ambient, const std::vector<Vec>& vectors);
  static Subspace whole(Field f, std::size_t ambient);

  Field field() const { return field_; }
  std::size_t ambient() const { return n_; }
  std::size_t dim() const { return basis_.size(); }
  const std::vector<Vec>& basis() const { return basis_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }
  /// Basis vectors as columns (ambient x dim).
  Mat as_columns() const;
  bool contains(const Vec& v) const;
  bool contains(const Subspace& s) const;
  /// Coordinates of a member in the stored basis.
  Vec coords(const Vec& v) const;
  /// dim x ambient matrix returning coordinates of members.
  Mat coord_map() const;

  Subspace sum(const Subspace& o) const;
  Subspace intersect(const Subspace& o) const;
  friend bool operator==(const Subspace& a, const Subspace& b);
  std::string str() const;

 private:
  Field field_;
  std::size_t n_;
  std::vector<Vec> basis_;
  std::vector<std::size_t> pivots_;
};

Subspace kernel(const Mat& m);
Subspace image(const Mat& m);

Poly minimal_polynomial(const Mat& m);
Mat eval_poly_at(const Poly& p, const Mat& m);

/// f = (X+1) h with u (X+1) + v h = 1.
struct MinpolySplit {
  Poly f, h;
  Scalar h_at_minus1;
  Poly u, v;
};

/// nullopt when -1 is not a root; throws MinusOneNotSimple when it is a multiple root.
std::optional<MinpolySplit> split_at_minus_one(const Poly& f);

/// (Im a, Im b) for a*b = 0 with Im a = ker b and Im a + Im b direct.
std::pair<Subspace, Subspace> complement_split(const Mat& a, const Mat& b);

}  // namespace qlie
