#include "qforge/sparse_rref.hpp"

#include <algorithm>

namespace qforge {

void SparseRref::reduce_in_place(WorkRow& work) const {
  // Descending sweep: subtracting a pivot row only introduces smaller keys.
  auto it = work.end();
  while (it != work.begin()) {
    --it;
    auto found = pivot_index_.find(it->first);
    if (found == pivot_index_.end()) continue;
    Scalar c = it->second;
    const SparseRow& prow = rows_[found->second];
    std::uint64_t pivot_key = it->first;
    // prow.back() is the pivot with coefficient 1.
    for (std::size_t k = 0; k + 1 < prow.size(); ++k) {
      auto [pos, inserted] = work.try_emplace(prow[k].first);
      pos->second.sub_product(c, prow[k].second);
      if (pos->second.is_zero()) work.erase(pos);
    }
    it = work.erase(work.find(pivot_key));
  }
}

SparseRow SparseRref::reduce(const SparseRow& row) const {
  WorkRow work(row.begin(), row.end());
  reduce_in_place(work);
  return SparseRow(work.begin(), work.end());
}

bool SparseRref::insert(const SparseRow& row) {
  WorkRow work;
  for (const auto& [k, v] : row)
    if (!v.is_zero()) work[k] += v;
  for (auto it = work.begin(); it != work.end();)
    it = it->second.is_zero() ? work.erase(it) : std::next(it);
  reduce_in_place(work);
  if (work.empty()) return false;
  Scalar inv = work.rbegin()->second.inverse();
  SparseRow stored;
  stored.reserve(work.size());
  for (auto& [k, v] : work) stored.emplace_back(k, v * inv);
  pivot_index_[stored.back().first] = rows_.size();
  rows_.push_back(std::move(stored));
  reduced_ = false;
  return true;
}

void SparseRref::finalize() {
  if (reduced_) return;
  std::vector<std::size_t> order(rows_.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return rows_[a].back().first < rows_[b].back().first; });
  // Rows with smaller pivots are fully reduced first; reducing a row only
  // touches keys below its pivot.
  for (std::size_t idx : order) {
    SparseRow& row = rows_[idx];
    std::uint64_t pivot = row.back().first;
    WorkRow work(row.begin(), row.end() - 1);
    reduce_in_place(work);
    row.assign(work.begin(), work.end());
    row.emplace_back(pivot, Scalar(1));
  }
  reduced_ = true;
}

std::vector<const SparseRow*> SparseRref::sorted_rows() const {
  std::vector<const SparseRow*> out;
  out.reserve(rows_.size());
  for (const auto& r : rows_) out.push_back(&r);
  std::sort(out.begin(), out.end(),
            [](const SparseRow* a, const SparseRow* b) { return a->back().first < b->back().first; });
  return out;
}

const SparseRow* SparseRref::row_for_pivot(std::uint64_t key) const {
  auto it = pivot_index_.find(key);
  return it == pivot_index_.end() ? nullptr : &rows_[it->second];
}

}  // namespace qforge
