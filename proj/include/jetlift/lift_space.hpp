#pragma once

#include <memory>
#include <random>
#include <span>
#include <vector>

#include "jetlift/multiindex.hpp"
#include "jetlift/rational.hpp"
#include "jetlift/weil_algebra.hpp"

namespace jetlift {

/// s-tuple of 1-based axes (or, in the oracle, of basis positions).
using IndexTuple = std::vector<std::size_t>;

/// Fixes D^r_k and the arity s of the multilinear maps.
struct LiftParams {
  LiftParams(unsigned r, std::size_t k, unsigned s) : algebra(r, k), s(s) {}
  LiftParams(AlgebraParams algebra, unsigned s) : algebra(std::move(algebra)), s(s) {}

  unsigned r() const { return algebra.r(); }
  std::size_t k() const { return algebra.k(); }

  AlgebraParams algebra;
  unsigned s;

  friend bool operator==(const LiftParams&, const LiftParams&) = default;
};

/// An element (i_1 < ... < i_s, alpha) of the index set Z.
struct ZIndex {
  IndexTuple i;
  MultiIndex alpha;

  friend bool operator==(const ZIndex&, const ZIndex&) = default;
};

/// Strictly increasing s-tuples from {1, ..., n} in lexicographic order.
std::vector<IndexTuple> increasing_tuples(std::size_t n, unsigned s);

/// Lexicographic rank of strictly increasing s-tuples from {1, ..., n},
/// matching the order of increasing_tuples(n, s).
class TupleRanker {
 public:
  TupleRanker(std::size_t n, unsigned s);

  std::size_t count() const { return count_; }
  /// Caller guarantees the tuple is strictly increasing with entries in 1..n.
  std::size_t rank(std::span<const std::size_t> tuple) const;

 private:
  std::size_t choose(std::size_t a, std::size_t b) const { return table_[a * (s_ + 1) + b]; }

  std::size_t n_;
  unsigned s_;
  std::size_t count_;
  std::vector<std::size_t> table_;  // C(a, b) for a <= n, b <= s
};

/// Sorts a tuple in place and returns the sign of the sorting permutation,
/// or 0 if some entry repeats.
int sort_with_sign(IndexTuple& tuple);

/// Membership in Z for an increasing tuple and a monomial of degree <= r.
/// With s = 0 every such monomial belongs to Z.
bool in_z(std::span<const std::size_t> tuple, const MultiIndex& alpha, unsigned r);

/// Z ordered by tuple (lexicographic), then canonical monomial order.
std::vector<ZIndex> enumerate_Z(const LiftParams& params);

/// C(r+s-1, s) * C(r+k, r+s).
Integer dimension(const LiftParams& params);

/// A rational-valued function on Z, stored in enumerate_Z order.
class CoefficientAssignment {
 public:
  /// `values` aligned with enumerate_Z(params).
  CoefficientAssignment(LiftParams params, std::vector<Rational> values);

  /// Throws StructuralError("assignment does not cover Z ...") unless the
  /// entries hit every element of Z exactly once.
  static CoefficientAssignment from_entries(LiftParams params,
                                            std::span<const std::pair<ZIndex, Rational>> entries);
  static CoefficientAssignment zero(LiftParams params);
  /// Indicator of the `position`-th element of Z.
  static CoefficientAssignment unit(LiftParams params, std::size_t position);
  static CoefficientAssignment random(LiftParams params, std::mt19937_64& rng);

  const LiftParams& params() const { return params_; }
  std::span<const ZIndex> indices() const { return *z_; }
  std::span<const Rational> values() const { return values_; }
  std::size_t size() const { return values_.size(); }

  friend bool operator==(const CoefficientAssignment& a, const CoefficientAssignment& b) {
    return a.params_ == b.params_ && a.values_ == b.values_;
  }

 private:
  CoefficientAssignment(LiftParams params, std::shared_ptr<const std::vector<ZIndex>> z,
                        std::vector<Rational> values);

  LiftParams params_;
  std::shared_ptr<const std::vector<ZIndex>> z_;
  std::vector<Rational> values_;
};

/// The values F(x^{i_1}, ..., x^{i_s})(x^alpha) for every increasing tuple
/// and every basis monomial. Every other value of F is derived from these.
class LiftTable {
 public:
  explicit LiftTable(LiftParams params);

  const LiftParams& params() const { return params_; }
  std::span<const IndexTuple> rows() const { return layout_->rows; }
  std::size_t row_count() const { return layout_->rows.size(); }
  std::size_t col_count() const { return params_.algebra.dim(); }

  /// Row of a strictly increasing tuple; throws ContractViolation otherwise.
  std::size_t row_index(std::span<const std::size_t> tuple) const;

  const Rational& cell(std::size_t row, std::size_t col) const {
    return cells_[row * col_count() + col];
  }
  Rational& cell(std::size_t row, std::size_t col) { return cells_[row * col_count() + col]; }
  const Rational& cell(std::span<const std::size_t> tuple, const MultiIndex& alpha) const;
  std::span<const Rational> cells() const { return cells_; }

  friend bool operator==(const LiftTable& a, const LiftTable& b) {
    return a.params_ == b.params_ && a.cells_ == b.cells_;
  }

 private:
  struct Layout {
    std::vector<IndexTuple> rows;
    TupleRanker ranker;
  };

  LiftParams params_;
  std::shared_ptr<const Layout> layout_;
  std::vector<Rational> cells_;
};

/// Builds the unique F with the prescribed values on Z: Z cells are copied,
/// the remaining cells (degree r, i_s >= max support) are solved from the
/// recursive relation, which only reads Z cells.
LiftTable construct(const CoefficientAssignment& c);

/// F on an arbitrary ordering of degree-one arguments: sign of the sorting
/// permutation times the stored cell, 0 on a repeated axis.
Rational lookup_skew(const LiftTable& table, std::span<const std::size_t> tuple,
                     const MultiIndex& alpha);

/// F(x^{g_1}, ..., x^{g_s})(x^delta) for basis monomials, by expanding every
/// slot down to degree-one arguments.
Rational evaluate_monomials(const LiftTable& table, std::span<const MultiIndex> g,
                            const MultiIndex& delta);

/// Multilinear extension of evaluate_monomials to algebra elements.
Rational evaluate(const LiftTable& table, std::span<const AlgebraElement> args,
                  const AlgebraElement& d);

/// The isomorphism onto R^Z: reads the cells at Z positions.
CoefficientAssignment extract_coefficients(const LiftTable& table);

}  // namespace jetlift
