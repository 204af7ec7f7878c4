#include "jetlift/lift_space.hpp"

#include <algorithm>
#include <functional>
#include <string>

namespace jetlift {

std::vector<IndexTuple> increasing_tuples(std::size_t n, unsigned s) {
  std::vector<IndexTuple> out;
  if (s > n) return out;
  IndexTuple cur(s);
  for (unsigned t = 0; t < s; ++t) cur[t] = t + 1;
  while (true) {
    out.push_back(cur);
    // rightmost slot that can still grow
    std::size_t t = s;
    while (t > 0 && cur[t - 1] == n - s + t) --t;
    if (t == 0) break;
    ++cur[t - 1];
    for (std::size_t u = t; u < s; ++u) cur[u] = cur[u - 1] + 1;
  }
  return out;
}

TupleRanker::TupleRanker(std::size_t n, unsigned s)
    : n_(n), s_(s), table_((n + 1) * (s + 1), 0) {
  for (std::size_t a = 0; a <= n; ++a) {
    for (unsigned b = 0; b <= s; ++b) table_[a * (s + 1) + b] = to_size(binomial(a, b));
  }
  count_ = choose(n, s);
}

std::size_t TupleRanker::rank(std::span<const std::size_t> tuple) const {
  std::size_t rank = 0;
  std::size_t prev = 0;
  const std::size_t s = tuple.size();
  for (std::size_t t = 0; t < s; ++t) {
    // tuples that agree before slot t and hold a smaller value at slot t
    for (std::size_t v = prev + 1; v < tuple[t]; ++v) rank += choose(n_ - v, s - t - 1);
    prev = tuple[t];
  }
  return rank;
}

int sort_with_sign(IndexTuple& tuple) {
  int sign = 1;
  // insertion sort; tuples are short
  for (std::size_t i = 1; i < tuple.size(); ++i) {
    for (std::size_t j = i; j > 0 && tuple[j - 1] >= tuple[j]; --j) {
      if (tuple[j - 1] == tuple[j]) return 0;
      std::swap(tuple[j - 1], tuple[j]);
      sign = -sign;
    }
  }
  return sign;
}

bool in_z(std::span<const std::size_t> tuple, const MultiIndex& alpha, unsigned r) {
  const unsigned d = degree(alpha);
  if (d < r) return true;
  if (d > r) return false;
  if (tuple.empty()) return true;
  return tuple.back() < max_support(alpha);
}

std::vector<ZIndex> enumerate_Z(const LiftParams& params) {
  std::vector<ZIndex> out;
  const auto basis = params.algebra.basis();
  for (auto& tuple : increasing_tuples(params.k(), params.s)) {
    for (const auto& alpha : basis) {
      if (in_z(tuple, alpha, params.r())) out.push_back(ZIndex{tuple, alpha});
    }
  }
  return out;
}

Integer dimension(const LiftParams& params) {
  const long r = params.r();
  const long k = static_cast<long>(params.k());
  const long s = params.s;
  return binomial(r + s - 1, s) * binomial(r + k, r + s);
}

CoefficientAssignment::CoefficientAssignment(LiftParams params,
                                             std::shared_ptr<const std::vector<ZIndex>> z,
                                             std::vector<Rational> values)
    : params_(std::move(params)), z_(std::move(z)), values_(std::move(values)) {
  if (values_.size() != z_->size()) {
    throw StructuralError("assignment does not cover Z: " + std::to_string(values_.size()) +
                          " values for " + std::to_string(z_->size()) + " elements");
  }
}

CoefficientAssignment::CoefficientAssignment(LiftParams params, std::vector<Rational> values)
    : CoefficientAssignment(params,
                            std::make_shared<const std::vector<ZIndex>>(enumerate_Z(params)),
                            std::move(values)) {}

CoefficientAssignment CoefficientAssignment::from_entries(
    LiftParams params, std::span<const std::pair<ZIndex, Rational>> entries) {
  auto z = std::make_shared<const std::vector<ZIndex>>(enumerate_Z(params));
  std::vector<Rational> values(z->size());
  std::vector<bool> seen(z->size(), false);
  for (const auto& [index, value] : entries) {
    auto it = std::find(z->begin(), z->end(), index);
    if (it == z->end()) {
      throw StructuralError("assignment does not cover Z: entry outside Z");
    }
    const auto pos = static_cast<std::size_t>(it - z->begin());
    if (seen[pos]) throw StructuralError("assignment does not cover Z: duplicate entry");
    seen[pos] = true;
    values[pos] = value;
  }
  if (std::find(seen.begin(), seen.end(), false) != seen.end()) {
    throw StructuralError("assignment does not cover Z: missing entries");
  }
  return CoefficientAssignment(std::move(params), std::move(z), std::move(values));
}

CoefficientAssignment CoefficientAssignment::zero(LiftParams params) {
  auto z = std::make_shared<const std::vector<ZIndex>>(enumerate_Z(params));
  std::vector<Rational> values(z->size());
  return CoefficientAssignment(std::move(params), std::move(z), std::move(values));
}

CoefficientAssignment CoefficientAssignment::unit(LiftParams params, std::size_t position) {
  auto z = std::make_shared<const std::vector<ZIndex>>(enumerate_Z(params));
  std::vector<Rational> values(z->size());
  values.at(position) = 1;
  return CoefficientAssignment(std::move(params), std::move(z), std::move(values));
}

CoefficientAssignment CoefficientAssignment::random(LiftParams params, std::mt19937_64& rng) {
  auto z = std::make_shared<const std::vector<ZIndex>>(enumerate_Z(params));
  std::vector<Rational> values(z->size());
  for (auto& v : values) v = random_rational(rng);
  return CoefficientAssignment(std::move(params), std::move(z), std::move(values));
}

LiftTable::LiftTable(LiftParams params)
    : params_(std::move(params)),
      layout_(std::make_shared<const Layout>(
          Layout{increasing_tuples(params_.k(), params_.s), TupleRanker(params_.k(), params_.s)})),
      cells_(layout_->rows.size() * params_.algebra.dim()) {}

std::size_t LiftTable::row_index(std::span<const std::size_t> tuple) const {
  if (tuple.size() != params_.s) {
    throw ContractViolation("tuple of length " + std::to_string(tuple.size()) +
                            " for arity " + std::to_string(params_.s));
  }
  for (std::size_t t = 0; t < tuple.size(); ++t) {
    if (tuple[t] < 1 || tuple[t] > params_.k() || (t > 0 && tuple[t - 1] >= tuple[t])) {
      throw ContractViolation("tuple is not strictly increasing in 1..k");
    }
  }
  return layout_->ranker.rank(tuple);
}

const Rational& LiftTable::cell(std::span<const std::size_t> tuple,
                                const MultiIndex& alpha) const {
  return cell(row_index(tuple), params_.algebra.position_of(alpha));
}

namespace {

// Skew lookup used while filling the derived cells: the target must already
// be a Z cell.
Rational lookup_filled(const LiftTable& table, IndexTuple tuple, const MultiIndex& alpha) {
  const int sign = sort_with_sign(tuple);
  if (sign == 0) return 0;
  if (!in_z(tuple, alpha, table.params().r())) {
    throw std::logic_error("recursive fill read a cell outside Z");
  }
  const Rational& v = table.cell(tuple, alpha);
  return sign > 0 ? v : Rational(-v);
}

}  // namespace

LiftTable construct(const CoefficientAssignment& c) {
  const LiftParams& params = c.params();
  LiftTable table(params);
  const auto basis = params.algebra.basis();
  const unsigned r = params.r();

  // Z cells, consumed in enumerate_Z order.
  std::size_t next = 0;
  for (std::size_t row = 0; row < table.row_count(); ++row) {
    const IndexTuple& tuple = table.rows()[row];
    for (std::size_t col = 0; col < basis.size(); ++col) {
      if (in_z(tuple, basis[col], r)) table.cell(row, col) = c.values()[next++];
    }
  }

  // Derived cells: |alpha| = r and i_s >= max support(alpha).
  //   F(i)(alpha) = -1/(alpha^{i_s}+1) * sum_{j in supp(alpha), j != i_s}
  //                 alpha^j F(i_1..i_{s-1}, j)(alpha + e_{i_s} - e_j)
  for (std::size_t row = 0; row < table.row_count(); ++row) {
    const IndexTuple& tuple = table.rows()[row];
    for (std::size_t col = 0; col < basis.size(); ++col) {
      const MultiIndex& alpha = basis[col];
      if (in_z(tuple, alpha, r)) continue;
      const std::size_t last = tuple.back();
      const MultiIndex raised = add(alpha, MultiIndex::unit(params.k(), last));
      Rational sum = 0;
      for (std::size_t j : support(alpha)) {
        if (j == last) continue;
        IndexTuple swapped = tuple;
        swapped.back() = j;
        sum += alpha.at(j) * lookup_filled(table, std::move(swapped), sub_unit(raised, j));
      }
      table.cell(row, col) = -sum / Rational(alpha.at(last) + 1);
    }
  }
  return table;
}

Rational lookup_skew(const LiftTable& table, std::span<const std::size_t> tuple,
                     const MultiIndex& alpha) {
  const std::size_t col = table.params().algebra.position_of(alpha);
  if (tuple.size() != table.params().s) {
    throw ContractViolation("tuple length does not match the arity");
  }
  IndexTuple sorted(tuple.begin(), tuple.end());
  const int sign = sort_with_sign(sorted);
  if (sign == 0) return 0;
  const Rational& v = table.cell(table.row_index(sorted), col);
  return sign > 0 ? v : Rational(-v);
}

Rational evaluate_monomials(const LiftTable& table, std::span<const MultiIndex> g,
                            const MultiIndex& delta) {
  const LiftParams& params = table.params();
  const AlgebraParams& algebra = params.algebra;
  if (g.size() != params.s) {
    throw ContractViolation("expected " + std::to_string(params.s) + " arguments, got " +
                            std::to_string(g.size()));
  }
  algebra.position_of(delta);
  unsigned total = degree(delta);
  for (const auto& gamma : g) {
    algebra.position_of(gamma);
    if (degree(gamma) == 0) return 0;
    total += degree(gamma);
  }
  if (total > params.r() + params.s) return 0;

  // exponent gamma_1 + ... + gamma_s + delta; each slot then removes one e_j
  std::vector<MultiIndex::Exponent> exponent(delta.entries().begin(), delta.entries().end());
  for (const auto& gamma : g) {
    for (std::size_t i = 0; i < exponent.size(); ++i) exponent[i] += gamma.entries()[i];
  }

  std::vector<std::vector<std::size_t>> supports;
  supports.reserve(g.size());
  for (const auto& gamma : g) supports.push_back(support(gamma));

  IndexTuple axes(g.size());
  IndexTuple sorted(g.size());
  Rational sum = 0;
  std::function<void(std::size_t, long)> expand = [&](std::size_t slot, long weight) {
    if (slot == g.size()) {
      sorted = axes;
      const int sign = sort_with_sign(sorted);
      if (sign == 0) return;
      const std::size_t col = *algebra.position(exponent);
      const Rational& v = table.cell(table.row_index(sorted), col);
      if (v == 0) return;
      if (sign > 0) {
        sum += weight * v;
      } else {
        sum -= weight * v;
      }
      return;
    }
    for (std::size_t j : supports[slot]) {
      axes[slot] = j;
      --exponent[j - 1];
      expand(slot + 1, weight * static_cast<long>(g[slot].at(j)));
      ++exponent[j - 1];
    }
  };
  expand(0, 1);
  return sum;
}

Rational evaluate(const LiftTable& table, std::span<const AlgebraElement> args,
                  const AlgebraElement& d) {
  const LiftParams& params = table.params();
  if (args.size() != params.s) {
    throw StructuralError("expected " + std::to_string(params.s) + " arguments, got " +
                          std::to_string(args.size()));
  }
  for (const auto& a : args) {
    if (!(a.params() == params.algebra)) throw StructuralError("argument from another algebra");
  }
  if (!(d.params() == params.algebra)) throw StructuralError("value from another algebra");

  const auto basis = params.algebra.basis();
  std::vector<MultiIndex> slots(args.size());
  Rational sum = 0;
  std::function<void(std::size_t, const Rational&)> expand = [&](std::size_t slot,
                                                                 const Rational& weight) {
    if (slot == args.size()) {
      for (std::size_t pos = 0; pos < basis.size(); ++pos) {
        if (d.coeff(pos) == 0) continue;
        sum += weight * d.coeff(pos) * evaluate_monomials(table, slots, basis[pos]);
      }
      return;
    }
    for (std::size_t pos = 0; pos < basis.size(); ++pos) {
      if (args[slot].coeff(pos) == 0) continue;
      slots[slot] = basis[pos];
      expand(slot + 1, weight * args[slot].coeff(pos));
    }
  };
  expand(0, Rational(1));
  return sum;
}

CoefficientAssignment extract_coefficients(const LiftTable& table) {
  const LiftParams& params = table.params();
  std::vector<Rational> values;
  const auto basis = params.algebra.basis();
  for (std::size_t row = 0; row < table.row_count(); ++row) {
    for (std::size_t col = 0; col < basis.size(); ++col) {
      if (in_z(table.rows()[row], basis[col], params.r())) values.push_back(table.cell(row, col));
    }
  }
  return CoefficientAssignment(params, std::move(values));
}

}  // namespace jetlift
