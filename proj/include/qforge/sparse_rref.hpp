#pragma once

#include <cstdint>
#include <map>
#include <unordered_map>
#include <utility>
#include <vector>

#include "qforge/scalar.hpp"

namespace qforge {

// Sparse vector keyed by column; entries sorted by increasing key, no zeros.
using SparseRow = std::vector<std::pair<std::uint64_t, Scalar>>;

// Incremental exact Gaussian elimination. The pivot of a row is its LARGEST
// key. After finalize() every stored row has leading coefficient 1 and no
// other row's pivot among its columns (reduced row-echelon form).
class SparseRref {
 public:
  // Reduces `row` against the stored rows; stores the remainder if nonzero.
  // Returns true iff the row was independent of the current span.
  bool insert(const SparseRow& row);

  // Reduces `row` (all of its columns) against the stored rows.
  SparseRow reduce(const SparseRow& row) const;

  void finalize();

  std::size_t rank() const { return rows_.size(); }
  bool is_pivot(std::uint64_t key) const { return pivot_index_.count(key) != 0; }

  // Rows ordered by increasing pivot. Only meaningful after finalize().
  std::vector<const SparseRow*> sorted_rows() const;
  const SparseRow* row_for_pivot(std::uint64_t key) const;

 private:
  using WorkRow = std::map<std::uint64_t, Scalar>;
  void reduce_in_place(WorkRow& work) const;

  std::vector<SparseRow> rows_;
  std::unordered_map<std::uint64_t, std::size_t> pivot_index_;
  bool reduced_ = true;
};

}  // namespace qforge
