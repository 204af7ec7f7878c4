#include <doctest.h>

#include <random>

#include "jetlift/exact_linalg.hpp"

using namespace jetlift;

namespace {

using Dense = std::vector<std::vector<Rational>>;

// Plain rational Gauss-Jordan rank, written independently of both solvers.
std::size_t reference_rank(Dense m) {
  std::size_t rank = 0;
  const std::size_t cols = m.empty() ? 0 : m[0].size();
  for (std::size_t c = 0; c < cols && rank < m.size(); ++c) {
    std::size_t p = rank;
    while (p < m.size() && m[p][c] == 0) ++p;
    if (p == m.size()) continue;
    std::swap(m[p], m[rank]);
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (i == rank || m[i][c] == 0) continue;
      const Rational f = m[i][c] / m[rank][c];
      for (std::size_t j = c; j < cols; ++j) m[i][j] -= f * m[rank][j];
    }
    ++rank;
  }
  return rank;
}

SparseRow sparse(const std::vector<Rational>& v) {
  SparseRow row;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i] != 0) row.emplace_back(i, v[i]);
  }
  return row;
}

Dense random_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols, double density) {
  std::bernoulli_distribution keep(density);
  Dense m(rows, std::vector<Rational>(cols));
  for (auto& row : m) {
    for (auto& v : row) {
      if (keep(rng)) v = random_rational(rng);
    }
  }
  return m;
}

}  // namespace

TEST_CASE("normalize_row merges and drops zeros") {
  SparseRow row{{3, Rational(1)}, {1, Rational(2)}, {3, Rational(-1)}, {0, Rational(0)}};
  CHECK(normalize_row(row) == SparseRow{{1, Rational(2)}});
}

TEST_CASE("known ranks") {
  Dense hilbert(5, std::vector<Rational>(5));
  for (std::size_t i = 0; i < 5; ++i) {
    for (std::size_t j = 0; j < 5; ++j) hilbert[i][j] = Rational(1, i + j + 1);
  }
  CHECK(dense_rank(hilbert) == 5);
  CHECK(is_invertible(hilbert));

  Dense singular{{Rational(1), Rational(2), Rational(3)},
                 {Rational(4), Rational(5), Rational(6)},
                 {Rational(7), Rational(8), Rational(9)}};
  CHECK(dense_rank(singular) == 2);
  CHECK_FALSE(is_invertible(singular));
  CHECK_FALSE(is_invertible(Dense{{Rational(1), Rational(0)}}));
  CHECK(dense_rank(Dense{}) == 0);
  CHECK(is_invertible(Dense{}));
}

TEST_CASE("both solvers agree with reference elimination") {
  std::mt19937_64 rng(61);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t rows = 1 + trial % 9;
    const std::size_t cols = 1 + (trial * 7) % 11;
    Dense m = random_matrix(rng, rows, cols, trial % 2 ? 0.3 : 0.7);
    if (rows > 2) m[rows - 1] = m[0];  // force some dependence
    const std::size_t expected = reference_rank(m);
    CHECK(dense_rank(m) == expected);

    SparseEchelon e(cols);
    for (const auto& row : m) e.insert(sparse(row));
    CHECK(e.rank() == expected);
    CHECK(e.pivot_columns().size() + e.free_columns().size() == cols);

    const auto null = e.nullspace_basis();
    CHECK(null.size() == cols - expected);
    for (const auto& v : null) {
      for (const auto& row : m) {
        Rational dot = 0;
        for (std::size_t j = 0; j < cols; ++j) dot += row[j] * v[j];
        CHECK(dot == 0);
      }
    }
    // rows plus null vectors together span everything only if the null space
    // is complementary: rank of the null basis is its size
    if (!null.empty()) CHECK(reference_rank(null) == null.size());
    for (const auto& row : m) CHECK(e.contains(sparse(row)));
  }
}

TEST_CASE("insert reports rank growth") {
  SparseEchelon e(3);
  CHECK(e.insert({{0, Rational(1)}, {1, Rational(1)}}));
  CHECK_FALSE(e.insert({{0, Rational(2)}, {1, Rational(2)}}));
  CHECK(e.insert({{1, Rational(1)}}));
  CHECK(e.rank() == 2);
  CHECK(e.nullity() == 1);
  CHECK(e.nullspace_basis() == Dense{{Rational(0), Rational(0), Rational(1)}});
  CHECK_FALSE(e.insert({}));
  CHECK(e.contains({{0, Rational(3)}}));
  CHECK_FALSE(e.contains({{2, Rational(3)}}));
}
