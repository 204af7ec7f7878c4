#include "jetlift/multiindex.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace jetlift {

MultiIndex MultiIndex::unit(std::size_t k, std::size_t axis) {
  if (axis < 1 || axis > k) {
    throw ContractViolation("axis " + std::to_string(axis) + " outside 1.." +
                            std::to_string(k));
  }
  MultiIndex e(k);
  e.entries_[axis - 1] = 1;
  return e;
}

MultiIndex::Exponent MultiIndex::at(std::size_t axis) const {
  if (axis < 1 || axis > entries_.size()) {
    throw ContractViolation("axis " + std::to_string(axis) + " outside 1.." +
                            std::to_string(entries_.size()));
  }
  return entries_[axis - 1];
}

unsigned degree(const MultiIndex& a) {
  const auto e = a.entries();
  return std::accumulate(e.begin(), e.end(), 0u);
}

MultiIndex add(const MultiIndex& a, const MultiIndex& b) {
  if (a.size() != b.size()) {
    throw StructuralError("multi-index length mismatch: " + std::to_string(a.size()) +
                          " vs " + std::to_string(b.size()));
  }
  std::vector<MultiIndex::Exponent> sum(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) sum[i] = a.entries()[i] + b.entries()[i];
  return MultiIndex(std::move(sum));
}

MultiIndex sub_unit(const MultiIndex& a, std::size_t axis) {
  if (a.at(axis) == 0) {
    throw ContractViolation("axis " + std::to_string(axis) +
                            " is not in the support of the multi-index");
  }
  std::vector<MultiIndex::Exponent> out(a.entries().begin(), a.entries().end());
  --out[axis - 1];
  return MultiIndex(std::move(out));
}

std::vector<std::size_t> support(const MultiIndex& a) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a.entries()[i] > 0) out.push_back(i + 1);
  }
  return out;
}

std::size_t max_support(const MultiIndex& a) {
  for (std::size_t i = a.size(); i > 0; --i) {
    if (a.entries()[i - 1] > 0) return i;
  }
  return 0;
}

bool graded_less(const MultiIndex& a, const MultiIndex& b) {
  const unsigned da = degree(a);
  const unsigned db = degree(b);
  if (da != db) return da < db;
  return std::lexicographical_compare(b.entries().begin(), b.entries().end(),
                                      a.entries().begin(), a.entries().end());
}

namespace {

// Fills positions [pos, k) with total `remaining`, first entry largest first.
void fill_exact(std::vector<MultiIndex::Exponent>& cur, std::size_t pos, unsigned remaining,
                std::vector<MultiIndex>& out) {
  if (pos + 1 == cur.size()) {
    cur[pos] = remaining;
    out.emplace_back(cur);
    return;
  }
  for (unsigned v = remaining + 1; v-- > 0;) {
    cur[pos] = v;
    fill_exact(cur, pos + 1, remaining - v, out);
  }
  cur[pos] = 0;
}

}  // namespace

std::vector<MultiIndex> enumerate_degree_exactly(std::size_t k, unsigned d) {
  std::vector<MultiIndex> out;
  if (k == 0) {
    if (d == 0) out.emplace_back(0);
    return out;
  }
  std::vector<MultiIndex::Exponent> cur(k, 0);
  fill_exact(cur, 0, d, out);
  return out;
}

std::vector<MultiIndex> enumerate_degree_at_most(std::size_t k, unsigned d) {
  std::vector<MultiIndex> out;
  for (unsigned deg = 0; deg <= d; ++deg) {
    auto layer = enumerate_degree_exactly(k, deg);
    out.insert(out.end(), std::make_move_iterator(layer.begin()),
               std::make_move_iterator(layer.end()));
    if (k == 0) break;
  }
  return out;
}

Integer binomial(long n, long m) {
  if (m < 0) return 0;
  if (m == 0) return 1;
  if (n < m) return 0;  // covers 0 <= n < m and every negative n
  Integer result;
  mpz_bin_uiui(result.get_mpz_t(), static_cast<unsigned long>(n),
               static_cast<unsigned long>(m));
  return result;
}

}  // namespace jetlift
