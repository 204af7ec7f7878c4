#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <vector>

#include "jetlift/rational.hpp"

namespace jetlift {

/// Exponent vector alpha in N^k. Axes are 1-based at the interface:
/// `at(1)` is the exponent of x^1.
class MultiIndex {
 public:
  using Exponent = std::uint32_t;

  MultiIndex() = default;
  /// The zero multi-index of length k.
  explicit MultiIndex(std::size_t k) : entries_(k, 0) {}
  explicit MultiIndex(std::vector<Exponent> entries) : entries_(std::move(entries)) {}
  MultiIndex(std::initializer_list<Exponent> entries) : entries_(entries) {}

  /// Standard basis vector e_axis in N^k.
  static MultiIndex unit(std::size_t k, std::size_t axis);

  std::size_t size() const { return entries_.size(); }
  std::span<const Exponent> entries() const { return entries_; }

  /// Exponent on a 1-based axis.
  Exponent at(std::size_t axis) const;

  friend bool operator==(const MultiIndex&, const MultiIndex&) = default;
  friend auto operator<=>(const MultiIndex&, const MultiIndex&) = default;

 private:
  std::vector<Exponent> entries_;
};

unsigned degree(const MultiIndex& a);

/// Entrywise sum. Throws StructuralError on a length mismatch.
MultiIndex add(const MultiIndex& a, const MultiIndex& b);

/// a - e_axis. Throws ContractViolation when a has no exponent on that axis.
MultiIndex sub_unit(const MultiIndex& a, std::size_t axis);

/// Ascending 1-based axes with a positive exponent.
std::vector<std::size_t> support(const MultiIndex& a);

/// Largest axis in the support, or 0 for the zero multi-index.
std::size_t max_support(const MultiIndex& a);

/// Canonical basis order: ascending degree, then descending lexicographic on
/// the entries, so that e_1 < e_2 < ... < e_k.
bool graded_less(const MultiIndex& a, const MultiIndex& b);

/// All multi-indices in N^k of degree exactly d, in canonical order.
std::vector<MultiIndex> enumerate_degree_exactly(std::size_t k, unsigned d);

/// All multi-indices in N^k of degree at most d, in canonical order. For
/// k = 0 this is the single empty multi-index.
std::vector<MultiIndex> enumerate_degree_at_most(std::size_t k, unsigned d);

/// Binomial coefficient with the conventions C(n, 0) = 1 for every n
/// (including negative n), and C(n, m) = 0 when m < 0, when 0 <= n < m, or
/// when n < 0 < m.
Integer binomial(long n, long m);

}  // namespace jetlift
