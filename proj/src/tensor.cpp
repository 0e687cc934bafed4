#include "qlie/tensor.hpp"

#include <sstream>

namespace qlie {

std::size_t word_index(const Word& w, std::size_t n) {
  std::size_t idx = 0, p = 1;
  for (auto l : w) {
    if (l >= n) fail(Errc::IndexOutOfRange, "letter out of range");
    idx += l * p;
    p *= n;
  }
  return idx;
}

Word word_at(std::size_t index, std::size_t len, std::size_t n) {
  Word w(len);
  for (std::size_t t = 0; t < len; ++t) {
    w[t] = static_cast<std::uint8_t>(index % n);
    index /= n;
  }
  return w;
}

Word concat(const Word& a, const Word& b) {
  Word w = a;
  w.insert(w.end(), b.begin(), b.end());
  return w;
}

std::string word_str(const Word& w) {
  if (w.empty()) return "1";
  std::string s;
  for (std::size_t i = 0; i < w.size();) {
    std::size_t j = i;
    while (j < w.size() && w[j] == w[i]) ++j;
    s += "x" + std::to_string(w[i] + 1);
    if (j - i > 1) s += "^" + std::to_string(j - i);
    i = j;
  }
  return s;
}

namespace {

template <class Key>
void add_term(std::map<Key, Scalar>& m, const Key& k, const Scalar& s) {
  if (s.is_zero()) return;
  auto [it, inserted] = m.try_emplace(k, s);
  if (!inserted) {
    it->second += s;
    if (it->second.is_zero()) m.erase(it);
  }
}

std::string signed_terms(const std::vector<std::pair<std::string, Scalar>>& terms, bool rational) {
  if (terms.empty()) return "0";
  std::string out;
  for (const auto& [mono, s] : terms) {
    std::string v = s.str();
    bool neg = rational && v[0] == '-';
    if (neg) v.erase(0, 1);
    out += out.empty() ? (neg ? "-" : "") : (neg ? " - " : " + ");
    if (v == "1")
      out += mono;
    else if (mono == "1")
      out += v;
    else
      out += v + "*" + mono;
  }
  return out;
}

}  // namespace

TensorElem TensorElem::one(Field f, std::size_t dim) { return word(f, dim, {}); }

TensorElem TensorElem::word(Field f, std::size_t dim, const Word& w) {
  TensorElem t(f, dim);
  t.add(w, Scalar(f, 1));
  return t;
}

TensorElem TensorElem::letter(Field f, std::size_t dim, std::uint8_t i) { return word(f, dim, Word{i}); }

TensorElem TensorElem::from_vec(Field f, std::size_t dim, std::size_t len, const Vec& v) {
  if (v.size() != ipow(dim, len)) fail(Errc::DegreeMismatch, "vector length is not dim^len");
  TensorElem t(f, dim);
  for (std::size_t i = 0; i < v.size(); ++i)
    if (!v[i].is_zero()) t.terms_.emplace(word_at(i, len, dim), v[i]);
  return t;
}

int TensorElem::degree() const {
  int d = -1;
  for (const auto& [w, s] : terms_) d = std::max(d, static_cast<int>(w.size()));
  return d;
}

bool TensorElem::is_homogeneous(std::size_t len) const {
  for (const auto& [w, s] : terms_)
    if (w.size() != len) return false;
  return true;
}

Vec TensorElem::to_vec(std::size_t len) const {
  Vec v = zero_vec(field_, ipow(n_, len));
  for (const auto& [w, s] : terms_) {
    if (w.size() != len) fail(Errc::DegreeMismatch, "element is not homogeneous of degree " + std::to_string(len));
    v[word_index(w, n_)] = s;
  }
  return v;
}

TensorElem TensorElem::component(std::size_t len) const {
  TensorElem t(field_, n_);
  for (const auto& [w, s] : terms_)
    if (w.size() == len) t.terms_.emplace(w, s);
  return t;
}

void TensorElem::add(const Word& w, const Scalar& s) {
  for (auto l : w)
    if (l >= n_) fail(Errc::IndexOutOfRange, "letter out of range");
  add_term(terms_, w, s);
}

TensorElem& TensorElem::operator+=(const TensorElem& o) {
  if (!(field_ == o.field_) || n_ != o.n_) fail(Errc::FieldMismatch, "tensor elements over different spaces");
  for (const auto& [w, s] : o.terms_) add_term(terms_, w, s);
  return *this;
}

TensorElem& TensorElem::operator-=(const TensorElem& o) {
  if (!(field_ == o.field_) || n_ != o.n_) fail(Errc::FieldMismatch, "tensor elements over different spaces");
  for (const auto& [w, s] : o.terms_) add_term(terms_, w, -s);
  return *this;
}

TensorElem operator*(const Scalar& s, const TensorElem& t) {
  TensorElem r(t.field_, t.n_);
  if (s.is_zero()) return r;
  for (const auto& [w, x] : t.terms_) r.terms_.emplace(w, s * x);
  return r;
}

TensorElem operator*(const TensorElem& a, const TensorElem& b) {
  TensorElem r(a.field_, a.n_);
  for (const auto& [u, x] : a.terms_)
    for (const auto& [v, y] : b.terms_) add_term(r.terms_, concat(u, v), x * y);
  return r;
}

bool operator==(const TensorElem& a, const TensorElem& b) {
  return a.field_ == b.field_ && a.n_ == b.n_ && a.terms_ == b.terms_;
}

std::string TensorElem::str() const {
  // Higher degree first, then the table's reverse-lexicographic reading order.
  std::vector<std::pair<Word, Scalar>> sorted(terms_.begin(), terms_.end());
  std::stable_sort(sorted.begin(), sorted.end(), [](const auto& x, const auto& y) {
    if (x.first.size() != y.first.size()) return x.first.size() > y.first.size();
    return std::lexicographical_compare(y.first.begin(), y.first.end(), x.first.begin(), x.first.end());
  });
  std::vector<std::pair<std::string, Scalar>> parts;
  for (const auto& [w, s] : sorted) parts.emplace_back(word_str(w), s);
  return signed_terms(parts, field_.is_rationals());
}

SplitTensorElem SplitTensorElem::pure(Field f, std::size_t dim, const Word& u, const Word& v) {
  SplitTensorElem t(f, dim);
  t.add({u, v}, Scalar(f, 1));
  return t;
}

void SplitTensorElem::add(const WordPair& w, const Scalar& s) { add_term(terms_, w, s); }

SplitTensorElem& SplitTensorElem::operator+=(const SplitTensorElem& o) {
  for (const auto& [w, s] : o.terms_) add_term(terms_, w, s);
  return *this;
}

SplitTensorElem& SplitTensorElem::operator-=(const SplitTensorElem& o) {
  for (const auto& [w, s] : o.terms_) add_term(terms_, w, -s);
  return *this;
}

SplitTensorElem operator*(const Scalar& s, const SplitTensorElem& t) {
  SplitTensorElem r(t.field_, t.n_);
  if (s.is_zero()) return r;
  for (const auto& [w, x] : t.terms_) r.terms_.emplace(w, s * x);
  return r;
}

bool operator==(const SplitTensorElem& a, const SplitTensorElem& b) {
  return a.field_ == b.field_ && a.n_ == b.n_ && a.terms_ == b.terms_;
}

SplitTensorElem SplitTensorElem::bidegree(std::size_t a, std::size_t b) const {
  SplitTensorElem r(field_, n_);
  for (const auto& [w, s] : terms_)
    if (w.first.size() == a && w.second.size() == b) r.terms_.emplace(w, s);
  return r;
}

std::string SplitTensorElem::str() const {
  std::vector<std::pair<std::string, Scalar>> parts;
  for (const auto& [w, s] : terms_) parts.emplace_back(word_str(w.first) + " (x) " + word_str(w.second), s);
  return signed_terms(parts, field_.is_rationals());
}

TensorBialgebra::TensorBialgebra(const BraidedSpace& b) : b_(b) {
  std::size_t n2 = b.dim() * b.dim();
  cols_.resize(n2);
  for (std::size_t j = 0; j < n2; ++j)
    for (std::size_t i = 0; i < n2; ++i)
      if (!b.c()(i, j).is_zero()) cols_[j].emplace_back(i, b.c()(i, j));
}

TensorElem TensorBialgebra::braid_at(const TensorElem& t, std::size_t p) const {
  std::size_t n = dim();
  TensorElem r(field(), n);
  for (const auto& [w, s] : t.terms()) {
    if (p + 1 >= w.size()) fail(Errc::IndexOutOfRange, "braid position beyond word length");
    Word x = w;
    for (const auto& [row, cf] : cols_[w[p] + n * w[p + 1]]) {
      x[p] = static_cast<std::uint8_t>(row % n);
      x[p + 1] = static_cast<std::uint8_t>(row / n);
      r.add(x, cf * s);
    }
  }
  return r;
}

const SplitTensorElem& TensorBialgebra::braid_words(const Word& u, const Word& v) {
  WordPair key{u, v};
  auto it = braid_cache_.find(key);
  if (it != braid_cache_.end()) return it->second;
  std::size_t m = u.size(), k = v.size();
  TensorElem t = TensorElem::word(field(), dim(), concat(u, v));
  if (m > 0 && k > 0) {
    // Move each letter of u, starting from the last, across the block v.
    for (std::size_t i = m; i >= 1; --i)
      for (std::size_t j = i; j < i + k; ++j) t = braid_at(t, j - 1);
  }
  SplitTensorElem r(field(), dim());
  for (const auto& [w, s] : t.terms())
    r.add({Word(w.begin(), w.begin() + k), Word(w.begin() + k, w.end())}, s);
  return braid_cache_.emplace(std::move(key), std::move(r)).first->second;
}

SplitTensorElem TensorBialgebra::braid(const SplitTensorElem& t) {
  SplitTensorElem r(field(), dim());
  for (const auto& [w, s] : t.terms()) r += s * braid_words(w.first, w.second);
  return r;
}

SplitTensorElem TensorBialgebra::mul(const SplitTensorElem& a, const SplitTensorElem& b) {
  SplitTensorElem r(field(), dim());
  for (const auto& [w1, s1] : a.terms())
    for (const auto& [w2, s2] : b.terms()) {
      Scalar s = s1 * s2;
      for (const auto& [ab, s3] : braid_words(w1.second, w2.first).terms())
        r.add({concat(w1.first, ab.first), concat(ab.second, w2.second)}, s * s3);
    }
  return r;
}

const SplitTensorElem& TensorBialgebra::coproduct(const Word& w) {
  auto it = delta_cache_.find(w);
  if (it != delta_cache_.end()) return it->second;
  Field f = field();
  std::size_t n = dim();
  SplitTensorElem r(f, n);
  if (w.empty()) {
    r.add({{}, {}}, Scalar(f, 1));
  } else {
    Word letter{w[0]}, rest(w.begin() + 1, w.end());
    SplitTensorElem dx = SplitTensorElem::pure(f, n, letter, {}) + SplitTensorElem::pure(f, n, {}, letter);
    r = mul(dx, coproduct(rest));
  }
  return delta_cache_.emplace(w, std::move(r)).first->second;
}

SplitTensorElem TensorBialgebra::coproduct(const TensorElem& t) {
  SplitTensorElem r(field(), dim());
  for (const auto& [w, s] : t.terms()) r += s * coproduct(w);
  return r;
}

Mat block_braiding(const BraidedSpace& b, std::size_t m, std::size_t n) {
  TensorBialgebra tb(b);
  std::size_t d = b.dim(), size = ipow(d, m + n);
  Mat out(b.field(), size, size);
  for (std::size_t col = 0; col < size; ++col) {
    Word w = word_at(col, m + n, d);
    Word u(w.begin(), w.begin() + m), v(w.begin() + m, w.end());
    for (const auto& [p, s] : tb.braid_words(u, v).terms()) out(word_index(concat(p.first, p.second), d), col) = s;
  }
  return out;
}

SplitTensorElem braided_mul_split(const BraidedSpace& b, const SplitTensorElem& x, const SplitTensorElem& y) {
  TensorBialgebra tb(b);
  return tb.mul(x, y);
}

SplitTensorElem coproduct(const BraidedSpace& b, const TensorElem& t) {
  TensorBialgebra tb(b);
  return tb.coproduct(t);
}

SplitTensorElem delta_component(const BraidedSpace& b, const TensorElem& t, std::size_t a, std::size_t bb) {
  if (!t.is_homogeneous(a + bb)) fail(Errc::DegreeMismatch, "element is not homogeneous of degree a+b");
  return coproduct(b, t).bidegree(a, bb);
}

Mat delta_matrix(const BraidedSpace& b, std::size_t a, std::size_t bb) {
  TensorBialgebra tb(b);
  std::size_t d = b.dim(), size = ipow(d, a + bb);
  Mat out(b.field(), size, size);
  for (std::size_t col = 0; col < size; ++col)
    for (const auto& [p, s] : tb.coproduct(word_at(col, a + bb, d)).terms())
      if (p.first.size() == a) out(word_index(concat(p.first, p.second), d), col) = s;
  return out;
}

Subspace en_space(const BraidedSpace& b, std::size_t n) {
  if (n < 2) fail(Errc::PreconditionViolated, "E_n needs n >= 2");
  std::size_t size = ipow(b.dim(), n);
  Mat stacked(b.field(), (n - 1) * size, size);
  for (std::size_t a = 1; a < n; ++a) {
    Mat d = delta_matrix(b, a, n - a);
    for (std::size_t i = 0; i < size; ++i)
      for (std::size_t j = 0; j < size; ++j) stacked((a - 1) * size + i, j) = d(i, j);
  }
  return kernel(stacked);
}

}  // namespace qlie
