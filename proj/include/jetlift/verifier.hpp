#pragma once

#include <string>
#include <vector>

#include "jetlift/lift_space.hpp"

namespace jetlift {

struct CheckStats {
  std::string name;
  std::size_t checked = 0;
  std::size_t failed = 0;
};

/// One violated identity with the basis monomials that witness it.
struct Failure {
  std::string check;
  std::vector<MultiIndex> witness;
  Rational expected;
  Rational actual;
};

/// Per-check counts plus the first few witnesses. `passed()` holds iff no
/// check recorded a failure.
class VerificationReport {
 public:
  explicit VerificationReport(std::size_t max_witnesses = 10) : max_witnesses_(max_witnesses) {}

  bool passed() const;
  std::size_t failure_count() const;
  const std::vector<CheckStats>& checks() const { return checks_; }
  const std::vector<Failure>& witnesses() const { return witnesses_; }
  std::size_t max_witnesses() const { return max_witnesses_; }

  /// Starts a new named check; subsequent `record` calls count against it.
  void begin(std::string name);
  /// Counts one comparison, keeping a witness if it failed and room remains.
  void record(bool ok, const std::vector<MultiIndex>& witness, const Rational& expected,
              const Rational& actual);
  void merge(const VerificationReport& other);

 private:
  std::size_t max_witnesses_;
  std::vector<CheckStats> checks_;
  std::vector<Failure> witnesses_;
};

struct VerifyOptions {
  std::size_t max_witnesses = 10;
  /// Also place the product in every slot t < s when checking the Leibniz
  /// relation; skew-symmetry makes this redundant.
  bool all_slots = false;
};

/// Swapping two slots negates F; a repeated monomial gives 0.
VerificationReport check_skew(const LiftTable& table, const VerifyOptions& options = {});

/// F(a.., x^beta x^gamma)(x^delta) = F(a.., x^beta)(x^{gamma+delta}) +
/// F(a.., x^gamma)(x^{beta+delta}) over all basis tuples, products truncated.
VerificationReport check_leibniz_basis(const LiftTable& table, const VerifyOptions& options = {});

/// sum_h eps^h F(x^{g_1}, ..., x^{g_{s-1}}, x^h)(x^{eps - e_h}) = 0 for every
/// increasing (s-1)-tuple g and every |eps| = r + 1.
VerificationReport check_eq7(const LiftTable& table, const VerifyOptions& options = {});

/// All three checks merged.
VerificationReport verify_all(const LiftTable& table, const VerifyOptions& options = {});

}  // namespace jetlift
