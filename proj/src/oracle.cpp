#include "jetlift/oracle.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <ostream>
#include <string>

namespace jetlift {

SizeLimitExceeded::SizeLimitExceeded(Integer unknowns, std::size_t limit)
    : std::runtime_error("oracle system needs " + unknowns.get_str() +
                         " unknowns, above the limit of " + std::to_string(limit)),
      unknowns_(std::move(unknowns)) {}

namespace {

Integer unknown_count_for(const LiftParams& params) {
  const long b = static_cast<long>(params.algebra.dim());
  return binomial(b, params.s) * b;
}

SparseRow to_sparse(const std::vector<Rational>& v) {
  SparseRow row;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i] != 0) row.emplace_back(i, v[i]);
  }
  return row;
}

}  // namespace

ConstraintSystem::ConstraintSystem(LiftParams params, const OracleOptions& options)
    : params_(std::move(params)), ranker_(params_.algebra.dim(), params_.s) {
  const Integer needed = unknown_count_for(params_);
  if (needed > options.max_unknowns) throw SizeLimitExceeded(needed, options.max_unknowns);

  const AlgebraParams& algebra = params_.algebra;
  const std::size_t dim = algebra.dim();
  const std::size_t s = params_.s;
  if (s == 0) return;

  // product[b * dim + c] = position of x^b x^c, or dim when truncated
  std::vector<std::size_t> product(dim * dim, dim);
  for (std::size_t b = 0; b < dim; ++b) {
    for (std::size_t c = 0; c < dim; ++c) {
      if (auto pos = algebra.position(add(algebra.monomial(b), algebra.monomial(c)))) {
        product[b * dim + c] = *pos;
      }
    }
  }

  IndexTuple slots(s);
  SparseRow row;
  auto term = [&](std::size_t t, std::size_t arg, std::size_t target, long coeff) {
    if (arg == dim || target == dim) return;
    slots[t] = arg;
    auto [col, sign] = signed_column(slots, target);
    if (sign != 0) row.emplace_back(col, Rational(coeff * sign));
  };

  const std::size_t first = options.slots == SlotCoverage::kAllSlots ? 0 : s - 1;
  std::vector<std::size_t> pos(s + 2, 0);
  for (std::size_t t = first; t < s; ++t) {
    std::fill(pos.begin(), pos.end(), 0);
    while (true) {
      for (std::size_t u = 0, o = 0; u < s; ++u) {
        if (u != t) slots[u] = pos[o++];
      }
      const std::size_t b = pos[s - 1];
      const std::size_t c = pos[s];
      const std::size_t d = pos[s + 1];
      // F(.., bc, ..)(d) - F(.., b, ..)(cd) - F(.., c, ..)(bd) = 0
      row.clear();
      term(t, product[b * dim + c], d, 1);
      term(t, b, product[c * dim + d], -1);
      term(t, c, product[b * dim + d], -1);
      SparseRow normalized = normalize_row(row);
      if (!normalized.empty()) rows_.push_back(std::move(normalized));

      std::size_t i = s + 2;
      while (i > 0 && pos[i - 1] + 1 == dim) pos[--i] = 0;
      if (i == 0) break;
      ++pos[i - 1];
    }
  }
}

std::pair<std::size_t, int> ConstraintSystem::signed_column(IndexTuple positions,
                                                            std::size_t target) const {
  for (auto& p : positions) ++p;  // ranker counts from 1
  const int sign = sort_with_sign(positions);
  if (sign == 0) return {0, 0};
  return {ranker_.rank(positions) * params_.algebra.dim() + target, sign};
}

Unknown ConstraintSystem::unknown(std::size_t index) const {
  const std::size_t dim = params_.algebra.dim();
  const std::size_t rank = index / dim;
  // walk the lexicographic order; systems are small enough for a scan
  const std::size_t n = dim;
  IndexTuple tuple;
  std::size_t remaining = rank;
  std::size_t next = 1;
  for (unsigned t = 0; t < params_.s; ++t) {
    for (std::size_t v = next; v <= n; ++v) {
      const std::size_t block = to_size(binomial(static_cast<long>(n - v), params_.s - t - 1));
      if (remaining < block) {
        tuple.push_back(v - 1);
        next = v + 1;
        break;
      }
      remaining -= block;
    }
  }
  return Unknown{std::move(tuple), index % dim};
}

ConstraintSystem build_constraints(const LiftParams& params, const OracleOptions& options) {
  return ConstraintSystem(params, options);
}

Nullspace nullspace(const ConstraintSystem& system) {
  const auto& rows = system.rows();
  std::vector<std::size_t> order(rows.size());
  std::iota(order.begin(), order.end(), 0);
  // short rows first: singletons kill columns before anything can fill in
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return rows[a].size() < rows[b].size();
  });
  SparseEchelon echelon(system.unknown_count());
  for (std::size_t id : order) {
    if (echelon.rank() == echelon.cols()) break;
    echelon.insert(rows[id]);
  }
  Nullspace out;
  out.basis = echelon.nullspace_basis();
  out.dimension = out.basis.size();
  return out;
}

namespace {

// Column of the unknown F(x^{i_1}, ..., x^{i_s})(x^alpha) for an element of Z.
std::pair<std::size_t, int> z_column(const ConstraintSystem& system, const ZIndex& z) {
  const AlgebraParams& algebra = system.params().algebra;
  IndexTuple positions;
  for (std::size_t axis : z.i) {
    positions.push_back(algebra.position_of(MultiIndex::unit(algebra.k(), axis)));
  }
  return system.signed_column(std::move(positions), algebra.position_of(z.alpha));
}

}  // namespace

IsoCheck check_iso(const ConstraintSystem& system,
                   const std::vector<std::vector<Rational>>& null_basis) {
  const auto zs = enumerate_Z(system.params());
  IsoCheck result;
  result.z_count = zs.size();
  result.null_dimension = null_basis.size();

  std::vector<std::vector<Rational>> matrix(zs.size(),
                                            std::vector<Rational>(null_basis.size()));
  for (std::size_t row = 0; row < zs.size(); ++row) {
    const auto [col, sign] = z_column(system, zs[row]);
    for (std::size_t j = 0; j < null_basis.size(); ++j) {
      matrix[row][j] = sign * null_basis[j].at(col);
    }
  }
  result.rank = dense_rank(matrix);
  result.ok = result.z_count == result.null_dimension && result.rank == result.z_count;
  return result;
}

std::vector<Rational> expand_table(const ConstraintSystem& system, const LiftTable& table) {
  const AlgebraParams& algebra = system.params().algebra;
  std::vector<Rational> values(system.unknown_count());
  std::vector<MultiIndex> slots(system.params().s);
  for (std::size_t index = 0; index < values.size(); ++index) {
    const Unknown u = system.unknown(index);
    for (std::size_t t = 0; t < slots.size(); ++t) slots[t] = algebra.monomial(u.monomials[t]);
    values[index] = evaluate_monomials(table, slots, algebra.monomial(u.target));
  }
  return values;
}

std::optional<std::size_t> first_violated_row(const ConstraintSystem& system,
                                              const std::vector<Rational>& values) {
  const auto& rows = system.rows();
  for (std::size_t i = 0; i < rows.size(); ++i) {
    Rational dot = 0;
    for (const auto& [col, coeff] : rows[i]) dot += coeff * values.at(col);
    if (dot != 0) return i;
  }
  return std::nullopt;
}

VerificationReport compare_with_construction(const ConstraintSystem& system,
                                             const Nullspace& null, std::size_t max_witnesses) {
  VerificationReport report(max_witnesses);
  const LiftParams& params = system.params();
  const AlgebraParams& algebra = params.algebra;
  const std::size_t z_count = enumerate_Z(params).size();

  auto unknown_witness = [&](std::size_t column) {
    const Unknown u = system.unknown(column);
    std::vector<MultiIndex> w;
    for (std::size_t p : u.monomials) w.push_back(algebra.monomial(p));
    w.push_back(algebra.monomial(u.target));
    return w;
  };

  report.begin("constraints");
  SparseEchelon constructed(system.unknown_count());
  std::vector<SparseRow> expanded;
  for (std::size_t z = 0; z < z_count; ++z) {
    const LiftTable table = construct(CoefficientAssignment::unit(params, z));
    const auto values = expand_table(system, table);
    const auto bad = first_violated_row(system, values);
    if (bad) {
      report.record(false, unknown_witness(system.rows()[*bad].front().first), 0, 1);
    } else {
      report.record(true, {}, 0, 0);
    }
    expanded.push_back(to_sparse(values));
    constructed.insert(expanded.back());
  }

  report.begin("span");
  // the constructed tables are independent
  report.record(constructed.rank() == z_count, {}, Rational(z_count),
                Rational(constructed.rank()));
  SparseEchelon oracle(system.unknown_count());
  for (const auto& v : null.basis) oracle.insert(to_sparse(v));
  report.record(oracle.rank() == null.dimension, {}, Rational(null.dimension),
                Rational(oracle.rank()));
  for (const auto& v : null.basis) {
    report.record(constructed.contains(to_sparse(v)), {}, 0, 1);
  }
  for (const auto& v : expanded) {
    report.record(oracle.contains(v), {}, 0, 1);
  }
  return report;
}

VerificationReport compare_with_construction(const LiftParams& params,
                                             const OracleOptions& options) {
  const ConstraintSystem system = build_constraints(params, options);
  return compare_with_construction(system, nullspace(system));
}

void write_matrix_market(std::ostream& out, const ConstraintSystem& system) {
  std::size_t nnz = 0;
  for (const auto& row : system.rows()) nnz += row.size();
  const LiftParams& p = system.params();
  out << "%%MatrixMarket matrix coordinate rational general\n";
  out << "% Leibniz constraints for r=" << p.r() << " k=" << p.k() << " s=" << p.s << "\n";
  out << system.rows().size() << ' ' << system.unknown_count() << ' ' << nnz << '\n';
  for (std::size_t i = 0; i < system.rows().size(); ++i) {
    for (const auto& [col, value] : system.rows()[i]) {
      out << i + 1 << ' ' << col + 1 << ' ' << to_string(value) << '\n';
    }
  }
}

}  // namespace jetlift
