#pragma once

#include <iosfwd>
#include <stdexcept>
#include <vector>

#include "jetlift/exact_linalg.hpp"
#include "jetlift/lift_space.hpp"
#include "jetlift/verifier.hpp"

namespace jetlift {

/// The brute-force system would have more unknowns than allowed.
class SizeLimitExceeded : public std::runtime_error {
 public:
  SizeLimitExceeded(Integer unknowns, std::size_t limit);
  const Integer& unknowns() const { return unknowns_; }

 private:
  Integer unknowns_;
};

enum class SlotCoverage { kAllSlots, kLastSlotOnly };

struct OracleOptions {
  std::size_t max_unknowns = 20000;
  SlotCoverage slots = SlotCoverage::kAllSlots;
};

/// One unknown F(x^{b_1}, ..., x^{b_s})(x^target): strictly increasing basis
/// positions b and a target basis position.
struct Unknown {
  IndexTuple monomials;
  std::size_t target;
};

/// Every instance of the Leibniz relation on basis monomials, as sparse
/// rows over the unknowns. Skew-symmetry is built into the unknowns: only
/// increasing tuples of distinct monomials are variables.
class ConstraintSystem {
 public:
  ConstraintSystem(LiftParams params, const OracleOptions& options);

  const LiftParams& params() const { return params_; }
  std::size_t unknown_count() const { return ranker_.count() * params_.algebra.dim(); }
  Unknown unknown(std::size_t index) const;
  const std::vector<SparseRow>& rows() const { return rows_; }

  /// Column of F on a tuple of basis positions in any order, with the sign
  /// of the sorting permutation; sign 0 (column unused) on a repeat.
  std::pair<std::size_t, int> signed_column(IndexTuple positions, std::size_t target) const;

 private:
  LiftParams params_;
  TupleRanker ranker_;
  std::vector<SparseRow> rows_;
};

/// Throws SizeLimitExceeded above options.max_unknowns.
ConstraintSystem build_constraints(const LiftParams& params, const OracleOptions& options = {});

struct Nullspace {
  std::size_t dimension = 0;
  std::vector<std::vector<Rational>> basis;
};

Nullspace nullspace(const ConstraintSystem& system);

struct IsoCheck {
  bool ok = false;
  std::size_t z_count = 0;
  std::size_t null_dimension = 0;
  std::size_t rank = 0;

  explicit operator bool() const { return ok; }
};

/// The |Z| x dim matrix of I applied to the nullspace basis is square and
/// invertible.
IsoCheck check_iso(const ConstraintSystem& system,
                   const std::vector<std::vector<Rational>>& null_basis);

/// Values of the table on every unknown of the system.
std::vector<Rational> expand_table(const ConstraintSystem& system, const LiftTable& table);

/// Index of the first violated row, or nullopt.
std::optional<std::size_t> first_violated_row(const ConstraintSystem& system,
                                              const std::vector<Rational>& values);

/// For every standard-basis assignment: the constructed table satisfies every
/// row, and the expanded tables span exactly the nullspace.
VerificationReport compare_with_construction(const ConstraintSystem& system,
                                             const Nullspace& null,
                                             std::size_t max_witnesses = 10);
VerificationReport compare_with_construction(const LiftParams& params,
                                             const OracleOptions& options = {});

/// Matrix Market style coordinate dump with "p/q" entries, 1-based indices.
void write_matrix_market(std::ostream& out, const ConstraintSystem& system);

}  // namespace jetlift
