#include "qlie/sparse.hpp"

#include <algorithm>

namespace qlie {

SparseVec axpy(const SparseVec& v, const Scalar& s, const SparseVec& w) {
  SparseVec out;
  out.reserve(v.size() + w.size());
  std::size_t i = 0, j = 0;
  while (i < v.size() || j < w.size()) {
    if (j == w.size() || (i < v.size() && v[i].first < w[j].first)) {
      out.push_back(v[i++]);
    } else if (i == v.size() || w[j].first < v[i].first) {
      out.emplace_back(w[j].first, -(s * w[j].second));
      ++j;
    } else {
      Scalar x = v[i].second - s * w[j].second;
      if (!x.is_zero()) out.emplace_back(v[i].first, std::move(x));
      ++i;
      ++j;
    }
  }
  return out;
}

void SparseEchelon::reduce_leading(SparseVec& v) const {
  while (!v.empty()) {
    std::int64_t r = pivot_[v.front().first];
    if (r < 0) return;
    v = axpy(v, v.front().second, rows_[r]);
  }
}

bool SparseEchelon::insert(SparseVec v) {
  reduce_leading(v);
  if (v.empty()) return false;
  Scalar inv = v.front().second.inverse();
  for (auto& [c, s] : v) s *= inv;
  pivot_[v.front().first] = static_cast<std::int64_t>(rows_.size());
  rows_.push_back(std::move(v));
  return true;
}

SparseVec SparseEchelon::reduce_full(const SparseVec& v) const {
  std::map<std::uint32_t, Scalar> work(v.begin(), v.end());
  SparseVec out;
  while (!work.empty()) {
    auto it = work.begin();
    std::uint32_t col = it->first;
    Scalar s = it->second;
    work.erase(it);
    std::int64_t r = pivot_[col];
    if (r < 0) {
      out.emplace_back(col, s);
      continue;
    }
    const SparseVec& row = rows_[r];
    for (std::size_t k = 1; k < row.size(); ++k) {
      auto [jt, inserted] = work.try_emplace(row[k].first, -(s * row[k].second));
      if (!inserted) {
        jt->second -= s * row[k].second;
        if (jt->second.is_zero()) work.erase(jt);
      }
    }
  }
  return out;
}

bool SparseEchelon::contains(const SparseVec& v) const {
  SparseVec w = v;
  reduce_leading(w);
  return w.empty();
}

void SparseEchelon::interreduce() {
  std::vector<std::size_t> order(rows_.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  // Later leading columns first, so each row only meets already reduced rows.
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return rows_[a].front().first > rows_[b].front().first; });
  for (std::size_t idx : order) {
    SparseVec& row = rows_[idx];
    SparseVec tail(row.begin() + 1, row.end());
    SparseVec reduced{row.front()};
    for (auto& t : reduce_full(tail)) reduced.push_back(std::move(t));
    row = std::move(reduced);
  }
}

}  // namespace qlie
