#pragma once

#include <cstddef>
#include <set>
#include <utility>
#include <vector>

#include "jetlift/rational.hpp"

namespace jetlift {

/// Sparse row: (column, value) pairs, strictly increasing columns, no zeros.
using SparseRow = std::vector<std::pair<std::size_t, Rational>>;

/// Drops zeros, merges duplicate columns and sorts.
SparseRow normalize_row(SparseRow row);

/// Reduced row echelon form over Q, grown one row at a time.
///
/// Every stored row has a leading 1 in its pivot column and is zero in all
/// other pivot columns, so reducing a vector needs one pass over its pivot
/// entries. The pivot of a new row is the entry whose column occurs in the
/// fewest stored rows, which keeps the fill small on the very sparse systems
/// the oracle produces.
class SparseEchelon {
 public:
  explicit SparseEchelon(std::size_t cols);

  std::size_t cols() const { return cols_; }
  std::size_t rank() const { return rows_.size(); }
  std::size_t nullity() const { return cols_ - rows_.size(); }

  /// Adds a row to the span; returns true if the rank grew.
  bool insert(SparseRow row);

  /// True if the row lies in the span of the inserted rows.
  bool contains(const SparseRow& row) const;

  /// Remainder of `row` after elimination against the stored pivots.
  SparseRow reduce(const SparseRow& row) const;

  std::vector<std::size_t> pivot_columns() const;
  std::vector<std::size_t> free_columns() const;

  /// One dense vector per free column f: 1 at f, minus the stored row
  /// entries at the pivots, zero elsewhere. Ordered by f.
  std::vector<std::vector<Rational>> nullspace_basis() const;

 private:
  void set_row(std::size_t id, SparseRow row);

  std::size_t cols_;
  std::vector<SparseRow> rows_;
  std::vector<std::size_t> pivot_of_row_;
  std::vector<long> row_of_pivot_;              // -1 for free columns
  std::vector<std::set<std::size_t>> col_rows_;  // rows with a nonzero in each column
};

/// Rank over Q via fraction-free (Bareiss) elimination after clearing row
/// denominators.
std::size_t dense_rank(const std::vector<std::vector<Rational>>& matrix);

/// Square and of full rank.
bool is_invertible(const std::vector<std::vector<Rational>>& matrix);

}  // namespace jetlift
