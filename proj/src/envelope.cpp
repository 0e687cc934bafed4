#include "qlie/envelope.hpp"

#include <algorithm>

namespace qlie {

namespace {

std::size_t tensor_dim_upto(std::size_t n, std::size_t k) {
  std::size_t s = 0;
  for (std::size_t l = 0; l <= k; ++l) s += ipow(n, l);
  return s;
}

SparseVec sorted(SparseVec v) {
  std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  return v;
}

std::size_t max_degree(const std::vector<TensorElem>& rels) {
  int d = 0;
  for (const auto& r : rels) d = std::max(d, r.degree());
  return static_cast<std::size_t>(d);
}

}  // namespace

WordOrder::WordOrder(std::size_t dim, std::size_t max_len) : n_(dim), m_(max_len), offset_(max_len + 2, 0) {
  for (std::size_t len = max_len + 1; len-- > 0;) offset_[len] = offset_[len + 1] + (len < max_len ? ipow(n_, len + 1) : 0);
  total_ = offset_[0] + 1;
}

std::uint32_t WordOrder::column(const Word& w) const {
  std::size_t len = w.size();
  if (len > m_) fail(Errc::DegreeMismatch, "word longer than the truncation degree");
  std::size_t code = 0;
  for (auto l : w) code = code * n_ + l;
  return static_cast<std::uint32_t>(offset_[len] + (ipow(n_, len) - 1 - code));
}

Word WordOrder::word(std::uint32_t col) const {
  for (std::size_t len = m_ + 1; len-- > 0;) {
    std::size_t size = ipow(n_, len);
    if (col >= offset_[len] && col < offset_[len] + size) {
      std::size_t code = size - 1 - (col - offset_[len]);
      Word w(len);
      for (std::size_t t = len; t-- > 0;) {
        w[t] = static_cast<std::uint8_t>(code % n_);
        code /= n_;
      }
      return w;
    }
  }
  fail(Errc::IndexOutOfRange, "column outside the word order");
}

SparseVec WordOrder::to_sparse(const TensorElem& t) const {
  SparseVec v;
  for (const auto& [w, s] : t.terms()) v.emplace_back(column(w), s);
  return sorted(std::move(v));
}

TensorElem WordOrder::to_elem(Field f, const SparseVec& v) const {
  TensorElem t(f, n_);
  for (const auto& [c, s] : v) t.add(word(c), s);
  return t;
}

std::vector<TensorElem> canonical_relations(const std::vector<TensorElem>& rels, std::size_t dim) {
  if (rels.empty()) return {};
  WordOrder order(dim, max_degree(rels));
  SparseEchelon ech(order.size());
  for (const auto& r : rels) ech.insert(order.to_sparse(r));
  ech.interreduce();
  std::vector<SparseVec> rows = ech.rows();
  std::sort(rows.begin(), rows.end(), [](const auto& a, const auto& b) { return a.front().first < b.front().first; });
  std::vector<TensorElem> out;
  Field f = rels.front().field();
  for (const auto& r : rows) out.push_back(order.to_elem(f, r));
  return out;
}

Presentation uq_relations(const LiftedQLie& q, const std::optional<MinpolySplit>& split) {
  const BraidedSpace& b = q.space;
  Presentation p{b, {}};
  if (!split) return p;
  std::size_t n = b.dim(), n2 = n * n;
  Field f = b.field();
  Mat h = eval_poly_at(split->h, b.c());
  std::vector<TensorElem> rels;
  for (std::size_t i = 0; i < n2; ++i)
    rels.push_back(TensorElem::from_vec(f, n, 2, h.col(i)) - TensorElem::from_vec(f, n, 1, q.beta.col(i)));
  p.relations = canonical_relations(rels, n);
  return p;
}

Presentation sq_relations(const BraidedSpace& b) {
  std::vector<TensorElem> rels;
  Subspace e = e2(b);
  for (const auto& v : e.basis()) rels.push_back(TensorElem::from_vec(b.field(), b.dim(), 2, v));
  return Presentation{b, canonical_relations(rels, b.dim())};
}

IdealTruncation::IdealTruncation(const Presentation& p, std::size_t degree_cap, std::size_t max_len,
                                 std::size_t buffer)
    : field_(p.space.field()),
      n_(p.space.dim()),
      cap_(degree_cap),
      buffer_(buffer),
      order_(n_, degree_cap),
      slice_(order_.size()) {
  WordOrder big(n_, max_len);
  SparseEchelon ech(big.size());
  for (std::size_t extra = 0; extra <= max_len; ++extra) {
    for (const auto& r : p.relations) {
      if (r.is_zero()) continue;
      std::size_t d = static_cast<std::size_t>(r.degree());
      if (d + extra > max_len) continue;
      for (std::size_t lu = 0; lu <= extra; ++lu) {
        std::size_t lv = extra - lu;
        for (std::size_t iu = 0; iu < ipow(n_, lu); ++iu) {
          Word u = word_at(iu, lu, n_);
          for (std::size_t iv = 0; iv < ipow(n_, lv); ++iv) {
            Word v = word_at(iv, lv, n_);
            SparseVec s;
            for (const auto& [w, x] : r.terms()) s.emplace_back(big.column(concat(concat(u, w), v)), x);
            ech.insert(sorted(std::move(s)));
          }
        }
      }
    }
  }
  dims_.assign(cap_ + 1, 0);
  std::uint32_t shift = static_cast<std::uint32_t>(big.size() - order_.size());
  for (const auto& row : ech.rows()) {
    std::size_t len = big.word(row.front().first).size();
    for (std::size_t k = len; k <= cap_; ++k) ++dims_[k];
    if (len > cap_) continue;
    SparseVec moved;
    moved.reserve(row.size());
    for (const auto& [c, s] : row) moved.emplace_back(c - shift, s);
    slice_.insert(std::move(moved));
  }
  slice_.interreduce();
}

std::size_t IdealTruncation::ideal_dim(std::size_t n) const {
  if (n > cap_) fail(Errc::DegreeMismatch, "degree beyond the truncation cap");
  return dims_[n];
}

std::size_t IdealTruncation::quotient_dim(std::size_t n) const { return tensor_dim_upto(n_, n) - ideal_dim(n); }

std::vector<TensorElem> IdealTruncation::slice_basis(std::size_t n) const {
  if (n > cap_) fail(Errc::DegreeMismatch, "degree beyond the truncation cap");
  std::vector<SparseVec> rows;
  for (const auto& r : slice_.rows())
    if (order_.word(r.front().first).size() <= n) rows.push_back(r);
  std::sort(rows.begin(), rows.end(), [](const auto& a, const auto& b) { return a.front().first < b.front().first; });
  std::vector<TensorElem> out;
  for (const auto& r : rows) out.push_back(order_.to_elem(field_, r));
  return out;
}

TensorElem IdealTruncation::normal_form(const TensorElem& t) const {
  if (t.degree() > static_cast<int>(cap_)) fail(Errc::DegreeMismatch, "element beyond the truncation cap");
  return order_.to_elem(field_, slice_.reduce_full(order_.to_sparse(t)));
}

bool IdealTruncation::contains(const TensorElem& t) const { return normal_form(t).is_zero(); }

std::vector<Word> IdealTruncation::standard_words(std::size_t len) const {
  if (len > cap_) fail(Errc::DegreeMismatch, "degree beyond the truncation cap");
  std::vector<Word> out;
  for (std::size_t i = 0; i < ipow(n_, len); ++i) {
    Word w = word_at(i, len, n_);
    if (slice_.pivot_row(order_.column(w)) < 0) out.push_back(w);
  }
  std::sort(out.begin(), out.end());
  return out;
}

IdealTruncation ideal_truncation(const Presentation& p, std::size_t N, std::size_t buffer) {
  if (N < 2) fail(Errc::PreconditionViolated, "degree cap must be at least 2");
  if (buffer < 1) fail(Errc::PreconditionViolated, "buffer must be at least 1");
  auto dims = [N](const IdealTruncation& t) {
    std::vector<std::size_t> d;
    for (std::size_t k = 0; k <= N; ++k) d.push_back(t.ideal_dim(k));
    return d;
  };
  IdealTruncation a(p, N, N + buffer, buffer);
  IdealTruncation b(p, N, N + buffer + 1, buffer + 1);
  if (dims(a) == dims(b)) return a;
  IdealTruncation c(p, N, N + buffer + 2, buffer + 2);
  if (dims(b) == dims(c)) return b;
  fail(Errc::Unstabilized, "ideal dimensions keep changing past buffer " + std::to_string(buffer + 2));
}

std::vector<std::size_t> filtration_dims(const Presentation& p, std::size_t N, std::size_t buffer) {
  IdealTruncation t = ideal_truncation(p, N, buffer);
  std::vector<std::size_t> out;
  std::size_t prev = 0;
  for (std::size_t k = 0; k <= N; ++k) {
    std::size_t q = t.quotient_dim(k);
    out.push_back(q - prev);
    prev = q;
  }
  return out;
}

std::vector<std::size_t> sq_graded_dims(const BraidedSpace& b, std::size_t N) {
  std::size_t n = b.dim();
  Subspace e = e2(b);
  std::vector<std::size_t> out;
  for (std::size_t k = 0; k <= N; ++k) {
    std::size_t total = ipow(n, k);
    if (k < 2 || e.dim() == 0) {
      out.push_back(total);
      continue;
    }
    SparseEchelon ech(total);
    for (std::size_t i = 0; i + 2 <= k; ++i)
      for (std::size_t iu = 0; iu < ipow(n, i); ++iu)
        for (std::size_t iv = 0; iv < ipow(n, k - 2 - i); ++iv)
          for (const auto& v : e.basis()) {
            SparseVec s;
            for (std::size_t j = 0; j < v.size(); ++j)
              if (!v[j].is_zero()) s.emplace_back(static_cast<std::uint32_t>(iu + ipow(n, i) * j + ipow(n, i + 2) * iv), v[j]);
            ech.insert(sorted(std::move(s)));
          }
    out.push_back(total - ech.rank());
  }
  return out;
}

BGReport bg_conditions(const Presentation& p) {
  std::size_t n = p.space.dim();
  Field f = p.space.field();
  std::vector<TensorElem> rels = canonical_relations(p.relations, n);
  BGReport r;
  if (max_degree(rels) > 2) fail(Errc::PreconditionViolated, "relations must have degree at most 2");
  WordOrder order(n, 4);
  // (I): the degree-2 parts of P are independent.
  SparseEchelon top(order.size());
  std::size_t rank2 = 0;
  for (const auto& rel : rels)
    if (top.insert(order.to_sparse(rel.component(2)))) ++rank2;
  r.I = rank2 == rels.size();
  // (J): (T^{<=1} P T^{<=1}) cap T^{<=2} = P.
  std::vector<TensorElem> low{TensorElem::one(f, n)};
  for (std::size_t i = 0; i < n; ++i) low.push_back(TensorElem::letter(f, n, static_cast<std::uint8_t>(i)));
  SparseEchelon ech(order.size());
  for (const auto& a : low)
    for (const auto& rel : rels)
      for (const auto& b : low) ech.insert(order.to_sparse(a * rel * b));
  std::size_t in_low = 0;
  for (const auto& row : ech.rows())
    if (order.word(row.front().first).size() <= 2) ++in_low;
  r.J = in_low == rels.size();
  return r;
}

bool pbw_check(const Presentation& p, std::size_t N, std::size_t buffer) {
  return filtration_dims(p, N, buffer) == sq_graded_dims(p.space, N);
}

}  // namespace qlie
