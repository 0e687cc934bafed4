#pragma once

#include <cstddef>
#include <optional>

#include "qlie/matrix.hpp"

namespace qlie {

std::size_t ipow(std::size_t n, std::size_t k);

/// Finite-dimensional braided vector space (V, c). The word (i1,...,ik) sits at
/// index sum_t (i_t - 1) n^(t-1), so the first tensor factor is least significant.
class BraidedSpace {
 public:
  /// Throws NotBraided if check is set and c fails the braid relation.
  BraidedSpace(std::size_t dim, Mat c, bool check = true);

  Field field() const { return c_.field(); }
  std::size_t dim() const { return n_; }
  const Mat& c() const { return c_; }

 private:
  std::size_t n_;
  Mat c_;
};

/// c(x_i (x) x_j) = x_j (x) x_i.
Mat flip_braiding(Field f, std::size_t n);
/// c(x_i (x) x_j) = q_ij x_j (x) x_i.
Mat diagonal_braiding(const Mat& q);

/// Lift of op: V^(x in_len) -> V^(x out_len) acting at 1-based slot i of V^(x k).
Mat slot_lift(const Mat& op, std::size_t n, std::size_t slot, std::size_t k, std::size_t in_len,
              std::size_t out_len);
/// Same with lengths read off the matrix shape (square ops: in_len = out_len).
Mat slot_lift(const Mat& op, std::size_t n, std::size_t slot, std::size_t k);

bool check_yang_baxter(const Mat& c, std::size_t n);
bool check_yang_baxter(const BraidedSpace& b);

/// ker(c + Id) in V(x)V.
Subspace e2(const BraidedSpace& b);
/// ker(c1 + Id) cap ker(c2 + Id) in V(x)V(x)V.
Subspace e2bar(const BraidedSpace& b);

/// nullopt when -1 is not an eigenvalue of c.
std::optional<MinpolySplit> split_minpoly(const BraidedSpace& b);

bool is_categorical(const BraidedSpace& b, const Subspace& l);

/// Vector of u (x) v in the tensor basis.
Vec tensor_vec(const Vec& u, const Vec& v);

}  // namespace qlie
