#include <doctest.h>

#include <algorithm>
#include <sstream>

#include "jetlift/oracle.hpp"

using namespace jetlift;

namespace {

std::size_t column_of(const ConstraintSystem& sys, std::vector<MultiIndex> slots,
                      const MultiIndex& target) {
  const AlgebraParams& alg = sys.params().algebra;
  IndexTuple positions;
  for (const auto& m : slots) positions.push_back(alg.position_of(m));
  auto [col, sign] = sys.signed_column(positions, alg.position_of(target));
  REQUIRE(sign == 1);
  return col;
}

bool has_single_entry_row(const ConstraintSystem& sys, std::size_t col) {
  return std::any_of(sys.rows().begin(), sys.rows().end(), [&](const SparseRow& row) {
    return row.size() == 1 && row.front().first == col;
  });
}

}  // namespace

TEST_CASE("unknown bookkeeping") {
  for (unsigned r = 1; r <= 2; ++r) {
    for (std::size_t k = 1; k <= 3; ++k) {
      for (unsigned s = 0; s <= 3; ++s) {
        const ConstraintSystem sys = build_constraints(LiftParams(r, k, s));
        const std::size_t b = sys.params().algebra.dim();
        CHECK(Integer(sys.unknown_count()) == binomial(b, s) * b);
        for (std::size_t i = 0; i < sys.unknown_count(); ++i) {
          const Unknown u = sys.unknown(i);
          CHECK(std::is_sorted(u.monomials.begin(), u.monomials.end()));
          CHECK(std::adjacent_find(u.monomials.begin(), u.monomials.end()) == u.monomials.end());
          CHECK(sys.signed_column(u.monomials, u.target) == std::pair<std::size_t, int>{i, 1});
        }
        for (const auto& row : sys.rows()) {
          CHECK(!row.empty());
          for (const auto& entry : row) CHECK(entry.first < sys.unknown_count());
        }
      }
    }
  }
}

TEST_CASE("dual-number rows kill F(x)(x) and F(1)(1)") {
  const ConstraintSystem sys = build_constraints(LiftParams(1, 1, 1));
  CHECK(sys.unknown_count() == 4);
  const MultiIndex one{0}, x{1};
  CHECK(has_single_entry_row(sys, column_of(sys, {x}, x)));
  CHECK(has_single_entry_row(sys, column_of(sys, {one}, one)));
  CHECK(has_single_entry_row(sys, column_of(sys, {one}, x)));
}

TEST_CASE("s = 0 has no constraints") {
  const ConstraintSystem sys = build_constraints(LiftParams(2, 2, 0));
  CHECK(sys.rows().empty());
  CHECK(sys.unknown_count() == 6);
  CHECK(nullspace(sys).dimension == 6);
}

TEST_CASE("nullspace examples") {
  const ConstraintSystem dual = build_constraints(LiftParams(1, 1, 1));
  const Nullspace n = nullspace(dual);
  REQUIRE(n.dimension == 1);
  std::vector<Rational> expected(4);
  expected[column_of(dual, {MultiIndex{1}}, MultiIndex{0})] = 1;
  CHECK(n.basis.front() == expected);

  CHECK(nullspace(build_constraints(LiftParams(1, 2, 1))).dimension == 3);
  for (std::size_t k = 1; k <= 2; ++k) {
    for (unsigned r = 1; r <= 2; ++r) {
      CHECK(nullspace(build_constraints(LiftParams(r, k, k + 1))).dimension == 0);
    }
  }
}

TEST_CASE("nullspace dimension equals the closed form") {
  for (unsigned r = 0; r <= 3; ++r) {
    for (std::size_t k = 0; k <= 3; ++k) {
      for (unsigned s = 0; s <= 3; ++s) {
        const LiftParams params(r, k, s);
        ConstraintSystem sys = [&] {
          try {
            return build_constraints(params);
          } catch (const SizeLimitExceeded&) {
            return build_constraints(LiftParams(0, 0, 0));
          }
        }();
        if (!(sys.params() == params)) continue;
        CAPTURE(r);
        CAPTURE(k);
        CAPTURE(s);
        const Nullspace n = nullspace(sys);
        CHECK(Integer(n.dimension) == dimension(params));
        CHECK(check_iso(sys, n.basis).ok);
      }
    }
  }
}

TEST_CASE("check_iso examples and negative controls") {
  const ConstraintSystem dual = build_constraints(LiftParams(1, 1, 1));
  const auto iso = check_iso(dual, nullspace(dual).basis);
  CHECK(iso.ok);
  CHECK(iso.z_count == 1);
  CHECK(iso.rank == 1);

  const ConstraintSystem sys = build_constraints(LiftParams(1, 2, 1));
  const Nullspace n = nullspace(sys);
  CHECK(check_iso(sys, n.basis));

  // an extra independent row: force F(x^1)(1) = 0
  SparseEchelon e(sys.unknown_count());
  for (const auto& row : sys.rows()) e.insert(row);
  CHECK(e.insert({{column_of(sys, {MultiIndex{1, 0}}, MultiIndex{0, 0}), Rational(1)}}));
  const auto smaller = check_iso(sys, e.nullspace_basis());
  CHECK_FALSE(smaller.ok);
  CHECK(smaller.null_dimension == 2);
  CHECK(smaller.z_count == 3);

  // right count, wrong space: duplicate one vector
  auto dup = n.basis;
  dup.back() = dup.front();
  CHECK_FALSE(check_iso(sys, dup).ok);
}

TEST_CASE("constructed tables solve the system and span the nullspace") {
  for (unsigned r = 1; r <= 2; ++r) {
    for (std::size_t k = 1; k <= 2; ++k) {
      for (unsigned s = 0; s <= 2; ++s) {
        CAPTURE(r);
        CAPTURE(k);
        CAPTURE(s);
        const auto report = compare_with_construction(LiftParams(r, k, s));
        CHECK(report.passed());
      }
    }
  }
  const auto empty = compare_with_construction(LiftParams(1, 1, 2));
  CHECK(empty.passed());
}

TEST_CASE("the r=1, k=2, s=1 trace lies in the nullspace") {
  const LiftParams params(1, 2, 1);
  const ConstraintSystem sys = build_constraints(params);
  // Z order: (1,(0,0)), (1,(0,1)), (2,(0,0)); pick (1,(0,1))
  const LiftTable t = construct(CoefficientAssignment::unit(params, 1));
  const auto v = expand_table(sys, t);
  CHECK(v[column_of(sys, {MultiIndex{0, 1}}, MultiIndex{1, 0})] == -1);
  CHECK(v[column_of(sys, {MultiIndex{1, 0}}, MultiIndex{0, 1})] == 1);
  CHECK_FALSE(first_violated_row(sys, v));

  SparseEchelon null(sys.unknown_count());
  for (const auto& b : nullspace(sys).basis) {
    SparseRow row;
    for (std::size_t i = 0; i < b.size(); ++i) {
      if (b[i] != 0) row.emplace_back(i, b[i]);
    }
    null.insert(row);
  }
  SparseRow as_row;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i] != 0) as_row.emplace_back(i, v[i]);
  }
  CHECK(null.contains(as_row));
}

TEST_CASE("a corrupted table violates some row") {
  const LiftParams params(2, 2, 1);
  const ConstraintSystem sys = build_constraints(params);
  LiftTable t = construct(CoefficientAssignment::unit(params, 0));
  CHECK_FALSE(first_violated_row(sys, expand_table(sys, t)));
  t.cell(1, 5) += 1;  // F(x^2)(x^{(0,2)}), a derived cell
  CHECK(first_violated_row(sys, expand_table(sys, t)));
}

TEST_CASE("last-slot rows give the same nullspace as all slots") {
  for (unsigned r = 1; r <= 2; ++r) {
    for (std::size_t k = 1; k <= 3; ++k) {
      for (unsigned s = 2; s <= 3; ++s) {
        OracleOptions last;
        last.slots = SlotCoverage::kLastSlotOnly;
        const ConstraintSystem all_sys = build_constraints(LiftParams(r, k, s));
        const ConstraintSystem last_sys = build_constraints(LiftParams(r, k, s), last);
        CHECK(last_sys.rows().size() <= all_sys.rows().size());
        SparseEchelon a(all_sys.unknown_count()), b(last_sys.unknown_count());
        for (const auto& row : all_sys.rows()) a.insert(row);
        for (const auto& row : last_sys.rows()) b.insert(row);
        CHECK(a.rank() == b.rank());
        for (const auto& row : all_sys.rows()) CHECK(b.contains(row));
      }
    }
  }
}

TEST_CASE("size guard") {
  try {
    build_constraints(LiftParams(3, 4, 2));
    FAIL("expected a refusal");
  } catch (const SizeLimitExceeded& e) {
    CHECK(e.unknowns() == 20825);
    CHECK(std::string(e.what()).find("20825") != std::string::npos);
  }
  OracleOptions tight;
  tight.max_unknowns = 5;
  CHECK_THROWS_AS(build_constraints(LiftParams(1, 2, 1), tight), SizeLimitExceeded);
  CHECK_NOTHROW(build_constraints(LiftParams(1, 1, 1), tight));
}

TEST_CASE("matrix market dump") {
  const ConstraintSystem sys = build_constraints(LiftParams(1, 1, 1));
  std::ostringstream out;
  write_matrix_market(out, sys);
  std::istringstream in(out.str());
  std::string header, comment;
  std::getline(in, header);
  std::getline(in, comment);
  CHECK(header == "%%MatrixMarket matrix coordinate rational general");
  std::size_t rows = 0, cols = 0, nnz = 0;
  in >> rows >> cols >> nnz;
  CHECK(rows == sys.rows().size());
  CHECK(cols == 4);
  std::size_t i = 0, j = 0, count = 0;
  std::string value;
  while (in >> i >> j >> value) {
    CHECK(i >= 1);
    CHECK(j >= 1);
    CHECK(j <= cols);
    CHECK(parse_rational(value) != 0);
    ++count;
  }
  CHECK(count == nnz);
}
