#include "jetlift/exact_linalg.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace jetlift {

SparseRow normalize_row(SparseRow row) {
  std::sort(row.begin(), row.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  SparseRow out;
  out.reserve(row.size());
  for (auto& [col, value] : row) {
    if (!out.empty() && out.back().first == col) {
      out.back().second += value;
      if (out.back().second == 0) out.pop_back();
    } else if (value != 0) {
      out.emplace_back(col, std::move(value));
    }
  }
  return out;
}

namespace {

// a + scale * b, both sorted.
SparseRow axpy(const SparseRow& a, const Rational& scale, const SparseRow& b) {
  SparseRow out;
  out.reserve(a.size() + b.size());
  auto ia = a.begin();
  auto ib = b.begin();
  while (ia != a.end() || ib != b.end()) {
    if (ib == b.end() || (ia != a.end() && ia->first < ib->first)) {
      out.push_back(*ia++);
    } else if (ia == a.end() || ib->first < ia->first) {
      out.emplace_back(ib->first, scale * ib->second);
      ++ib;
    } else {
      Rational v = ia->second + scale * ib->second;
      if (v != 0) out.emplace_back(ia->first, std::move(v));
      ++ia;
      ++ib;
    }
  }
  return out;
}

}  // namespace

SparseEchelon::SparseEchelon(std::size_t cols)
    : cols_(cols), row_of_pivot_(cols, -1), col_rows_(cols) {}

SparseRow SparseEchelon::reduce(const SparseRow& row) const {
  SparseRow out = row;
  for (const auto& [col, value] : row) {
    if (col >= cols_) throw std::out_of_range("sparse row column out of range");
    const long id = row_of_pivot_[col];
    if (id < 0) continue;
    // stored rows touch no other pivot column, so `out` still holds row's
    // original value at this column
    out = axpy(out, -value, rows_[static_cast<std::size_t>(id)]);
  }
  return out;
}

bool SparseEchelon::contains(const SparseRow& row) const { return reduce(row).empty(); }

void SparseEchelon::set_row(std::size_t id, SparseRow row) {
  for (const auto& entry : rows_[id]) col_rows_[entry.first].erase(id);
  rows_[id] = std::move(row);
  for (const auto& entry : rows_[id]) col_rows_[entry.first].insert(id);
}

bool SparseEchelon::insert(SparseRow row) {
  SparseRow reduced = reduce(normalize_row(std::move(row)));
  if (reduced.empty()) return false;

  std::size_t best = 0;
  for (std::size_t i = 1; i < reduced.size(); ++i) {
    if (col_rows_[reduced[i].first].size() < col_rows_[reduced[best].first].size()) best = i;
  }
  const std::size_t pivot = reduced[best].first;
  const Rational inv = 1 / reduced[best].second;
  for (auto& entry : reduced) entry.second *= inv;

  // clear the new pivot column from the stored rows
  const std::vector<std::size_t> hits(col_rows_[pivot].begin(), col_rows_[pivot].end());
  for (std::size_t id : hits) {
    const SparseRow& target = rows_[id];
    auto it = std::lower_bound(target.begin(), target.end(), pivot,
                               [](const auto& e, std::size_t c) { return e.first < c; });
    const Rational factor = it->second;
    set_row(id, axpy(target, -factor, reduced));
  }

  const std::size_t id = rows_.size();
  rows_.emplace_back();
  pivot_of_row_.push_back(pivot);
  row_of_pivot_[pivot] = static_cast<long>(id);
  set_row(id, std::move(reduced));
  return true;
}

std::vector<std::size_t> SparseEchelon::pivot_columns() const {
  std::vector<std::size_t> out;
  for (std::size_t c = 0; c < cols_; ++c) {
    if (row_of_pivot_[c] >= 0) out.push_back(c);
  }
  return out;
}

std::vector<std::size_t> SparseEchelon::free_columns() const {
  std::vector<std::size_t> out;
  for (std::size_t c = 0; c < cols_; ++c) {
    if (row_of_pivot_[c] < 0) out.push_back(c);
  }
  return out;
}

std::vector<std::vector<Rational>> SparseEchelon::nullspace_basis() const {
  std::vector<std::vector<Rational>> basis;
  for (std::size_t f : free_columns()) {
    std::vector<Rational> v(cols_);
    v[f] = 1;
    for (std::size_t id : col_rows_[f]) {
      const SparseRow& row = rows_[id];
      auto it = std::lower_bound(row.begin(), row.end(), f,
                                 [](const auto& e, std::size_t c) { return e.first < c; });
      v[pivot_of_row_[id]] = -it->second;
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

std::size_t dense_rank(const std::vector<std::vector<Rational>>& matrix) {
  if (matrix.empty()) return 0;
  const std::size_t rows = matrix.size();
  const std::size_t cols = matrix.front().size();

  // integer rows: multiply through by the lcm of the denominators
  std::vector<std::vector<Integer>> m(rows, std::vector<Integer>(cols));
  for (std::size_t i = 0; i < rows; ++i) {
    if (matrix[i].size() != cols) throw StructuralError("ragged matrix");
    Integer l = 1;
    for (const auto& q : matrix[i]) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), q.get_den_mpz_t());
    for (std::size_t j = 0; j < cols; ++j) {
      m[i][j] = matrix[i][j].get_num() * (l / matrix[i][j].get_den());
    }
  }

  // Bareiss: after step p every entry below is an exact (p+1)-minor
  Integer prev = 1;
  std::size_t rank = 0;
  for (std::size_t col = 0; col < cols && rank < rows; ++col) {
    std::size_t pivot = rows;
    for (std::size_t i = rank; i < rows; ++i) {
      if (m[i][col] != 0) {
        pivot = i;
        break;
      }
    }
    if (pivot == rows) continue;
    std::swap(m[rank], m[pivot]);
    for (std::size_t i = rank + 1; i < rows; ++i) {
      for (std::size_t j = col + 1; j < cols; ++j) {
        m[i][j] = (m[rank][col] * m[i][j] - m[i][col] * m[rank][j]);
        mpz_divexact(m[i][j].get_mpz_t(), m[i][j].get_mpz_t(), prev.get_mpz_t());
      }
      m[i][col] = 0;
    }
    prev = m[rank][col];
    ++rank;
  }
  return rank;
}

bool is_invertible(const std::vector<std::vector<Rational>>& matrix) {
  const std::size_t n = matrix.size();
  for (const auto& row : matrix) {
    if (row.size() != n) return false;
  }
  return dense_rank(matrix) == n;
}

}  // namespace jetlift
