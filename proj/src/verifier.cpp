#include "jetlift/verifier.hpp"

#include <algorithm>
#include <functional>

namespace jetlift {

bool VerificationReport::passed() const { return failure_count() == 0; }

std::size_t VerificationReport::failure_count() const {
  std::size_t n = 0;
  for (const auto& c : checks_) n += c.failed;
  return n;
}

void VerificationReport::begin(std::string name) { checks_.push_back(CheckStats{std::move(name)}); }

void VerificationReport::record(bool ok, const std::vector<MultiIndex>& witness,
                                 const Rational& expected, const Rational& actual) {
  if (checks_.empty()) begin("unnamed");
  CheckStats& current = checks_.back();
  ++current.checked;
  if (ok) return;
  ++current.failed;
  if (witnesses_.size() < max_witnesses_) {
    witnesses_.push_back(Failure{current.name, witness, expected, actual});
  }
}

void VerificationReport::merge(const VerificationReport& other) {
  checks_.insert(checks_.end(), other.checks_.begin(), other.checks_.end());
  for (const auto& w : other.witnesses_) {
    if (witnesses_.size() >= max_witnesses_) break;
    witnesses_.push_back(w);
  }
}

namespace {

// Visits every tuple of `count` basis positions (odometer order).
void for_each_position_tuple(std::size_t dim, std::size_t count,
                             const std::function<void(const std::vector<std::size_t>&)>& visit) {
  std::vector<std::size_t> pos(count, 0);
  if (dim == 0 && count > 0) return;
  while (true) {
    visit(pos);
    std::size_t t = count;
    while (t > 0 && pos[t - 1] + 1 == dim) pos[--t] = 0;
    if (t == 0) return;
    ++pos[t - 1];
  }
}

}  // namespace

VerificationReport check_skew(const LiftTable& table, const VerifyOptions& options) {
  VerificationReport report(options.max_witnesses);
  report.begin("skew");
  const LiftParams& params = table.params();
  const auto basis = params.algebra.basis();
  const std::size_t s = params.s;
  if (s < 2) return report;

  std::vector<MultiIndex> slots(s);
  std::vector<MultiIndex> witness(s + 1);
  for_each_position_tuple(basis.size(), s, [&](const std::vector<std::size_t>& pos) {
    for (std::size_t t = 0; t < s; ++t) slots[t] = basis[pos[t]];
    for (const auto& delta : basis) {
      const Rational value = evaluate_monomials(table, slots, delta);
      std::copy(slots.begin(), slots.end(), witness.begin());
      witness.back() = delta;
      for (std::size_t a = 0; a < s; ++a) {
        for (std::size_t b = a + 1; b < s; ++b) {
          if (pos[a] == pos[b]) {
            report.record(value == 0, witness, 0, value);
            continue;
          }
          std::swap(slots[a], slots[b]);
          const Rational swapped = evaluate_monomials(table, slots, delta);
          std::swap(slots[a], slots[b]);
          report.record(swapped == -value, witness, -value, swapped);
        }
      }
    }
  });
  return report;
}

VerificationReport check_leibniz_basis(const LiftTable& table, const VerifyOptions& options) {
  VerificationReport report(options.max_witnesses);
  report.begin("leibniz");
  const LiftParams& params = table.params();
  const AlgebraParams& algebra = params.algebra;
  const auto basis = algebra.basis();
  const std::size_t s = params.s;
  if (s == 0) return report;
  const unsigned bound = params.r() + params.s;

  // F(slots with `arg` in slot t)(x^target), 0 when either monomial was truncated
  std::vector<MultiIndex> slots(s);
  auto value = [&](std::size_t t, const std::optional<MultiIndex>& arg,
                   const std::optional<MultiIndex>& target) -> Rational {
    if (!arg || !target) return 0;
    slots[t] = *arg;
    return evaluate_monomials(table, slots, *target);
  };

  const std::size_t first_slot = options.all_slots ? 0 : s - 1;
  std::vector<MultiIndex> witness(s + 2);
  for (std::size_t t = first_slot; t < s; ++t) {
    // positions: s-1 other slots, then beta, gamma, delta
    for_each_position_tuple(basis.size(), s + 2, [&](const std::vector<std::size_t>& pos) {
      unsigned others = 0;
      for (std::size_t u = 0, o = 0; u < s; ++u) {
        if (u == t) continue;
        slots[u] = basis[pos[o++]];
        others += degree(slots[u]);
      }
      const MultiIndex& beta = basis[pos[s - 1]];
      const MultiIndex& gamma = basis[pos[s]];
      const MultiIndex& delta = basis[pos[s + 1]];
      // every term vanishes beyond this total degree
      if (others + degree(beta) + degree(gamma) + degree(delta) > bound) {
        report.record(true, {}, 0, 0);
        return;
      }
      const Rational lhs = value(t, multiply_monomials(algebra, beta, gamma), delta);
      const Rational rhs = value(t, beta, multiply_monomials(algebra, gamma, delta)) +
                           value(t, gamma, multiply_monomials(algebra, beta, delta));
      if (lhs == rhs) {
        report.record(true, {}, 0, 0);
        return;
      }
      for (std::size_t u = 0; u < s; ++u) witness[u] = slots[u];
      witness[t] = beta;
      witness[s] = gamma;
      witness[s + 1] = delta;
      report.record(false, witness, rhs, lhs);
    });
  }
  return report;
}

VerificationReport check_eq7(const LiftTable& table, const VerifyOptions& options) {
  VerificationReport report(options.max_witnesses);
  report.begin("eq7");
  const LiftParams& params = table.params();
  if (params.s == 0) return report;
  const std::size_t k = params.k();
  const auto epsilons = enumerate_degree_exactly(k, params.r() + 1);

  IndexTuple tuple(params.s);
  for (const auto& g : increasing_tuples(k, params.s - 1)) {
    std::copy(g.begin(), g.end(), tuple.begin());
    for (const auto& eps : epsilons) {
      Rational sum = 0;
      for (std::size_t h : support(eps)) {
        tuple.back() = h;
        sum += eps.at(h) * lookup_skew(table, tuple, sub_unit(eps, h));
      }
      std::vector<MultiIndex> witness;
      if (sum != 0) {
        for (std::size_t axis : g) witness.push_back(MultiIndex::unit(k, axis));
        witness.push_back(eps);
      }
      report.record(sum == 0, witness, 0, sum);
    }
  }
  return report;
}

VerificationReport verify_all(const LiftTable& table, const VerifyOptions& options) {
  VerificationReport report(options.max_witnesses);
  report.merge(check_skew(table, options));
  report.merge(check_leibniz_basis(table, options));
  report.merge(check_eq7(table, options));
  return report;
}

}  // namespace jetlift
