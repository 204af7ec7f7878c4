// Acceptance gate: one PASS/FAIL line per criterion, exit status 1 if any fails.
// All comparisons are exact; there are no numeric tolerances.

#include <chrono>
#include <cstdio>
#include <iostream>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <tuple>
#include <vector>

#include "jetlift/oracle.hpp"
#include "jetlift/verifier.hpp"

using namespace jetlift;

namespace {

constexpr std::size_t kMaxUnknowns = 20000;

struct Point {
  unsigned r;
  std::size_t k;
  unsigned s;
};

std::string label(const Point& p) {
  std::ostringstream out;
  out << "(" << p.r << "," << p.k << "," << p.s << ")";
  return out.str();
}

struct Outcome {
  bool ok = true;
  std::string detail;
  std::vector<std::string> problems;

  void require(bool cond, const std::string& what) {
    if (!cond) {
      ok = false;
      problems.push_back(what);
    }
  }
};

int failures = 0;

void report(int id, const std::string& title, const Outcome& o) {
  std::cout << (o.ok ? "[PASS] " : "[FAIL] ") << id << ". " << title;
  if (!o.detail.empty()) std::cout << " -- " << o.detail;
  std::cout << '\n';
  for (std::size_t i = 0; i < o.problems.size() && i < 10; ++i) {
    std::cout << "         " << o.problems[i] << '\n';
  }
  if (!o.ok) ++failures;
}

std::vector<Point> grid(unsigned max_r, std::size_t max_k, unsigned max_s) {
  std::vector<Point> out;
  for (unsigned r = 1; r <= max_r; ++r) {
    for (std::size_t k = 1; k <= max_k; ++k) {
      for (unsigned s = 0; s <= max_s; ++s) out.push_back({r, k, s});
    }
  }
  return out;
}

bool within_guard(const Point& p) {
  const long b = static_cast<long>(AlgebraParams(p.r, p.k).dim());
  return binomial(b, p.s) * b <= kMaxUnknowns;
}

SparseRow to_sparse(const std::vector<Rational>& v) {
  SparseRow row;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i] != 0) row.emplace_back(i, v[i]);
  }
  return row;
}

struct OracleRun {
  ConstraintSystem system;
  Nullspace null;
};

}  // namespace

int main() {
  using Clock = std::chrono::steady_clock;
  const auto start = Clock::now();

  const auto full = grid(3, 3, 3);
  std::vector<Point> guarded;
  std::vector<std::string> skipped;
  for (const auto& p : full) {
    if (within_guard(p)) {
      guarded.push_back(p);
    } else {
      skipped.push_back(label(p));
    }
  }

  // Criterion 1: oracle nullspace dimension = closed form.
  std::map<std::tuple<unsigned, std::size_t, unsigned>, OracleRun> runs;
  {
    Outcome o;
    for (const auto& p : guarded) {
      const LiftParams params(p.r, p.k, p.s);
      ConstraintSystem system = build_constraints(params);
      Nullspace null = nullspace(system);
      o.require(Integer(null.dimension) == dimension(params),
                label(p) + ": nullspace " + std::to_string(null.dimension) + " vs formula " +
                    dimension(params).get_str());
      runs.emplace(std::make_tuple(p.r, p.k, p.s), OracleRun{std::move(system), std::move(null)});
    }
    const std::vector<std::pair<Point, std::size_t>> spots{
        {{1, 1, 1}, 1}, {{1, 2, 1}, 3}, {{2, 2, 2}, 3}, {{2, 3, 2}, 15}};
    for (const auto& [p, expected] : spots) {
      auto it = runs.find({p.r, p.k, p.s});
      o.require(it != runs.end() && it->second.null.dimension == expected,
                "spot value " + label(p) + " != " + std::to_string(expected));
    }
    const double seconds = std::chrono::duration<double>(Clock::now() - start).count();
    o.require(seconds < 120.0, "oracle sweep took " + std::to_string(seconds) + " s");
    std::ostringstream d;
    d << guarded.size() << " points, " << skipped.size() << " over the " << kMaxUnknowns
      << "-unknown guard (";
    for (std::size_t i = 0; i < skipped.size(); ++i) d << (i ? " " : "") << skipped[i];
    d << "), " << static_cast<int>(seconds * 1000) << " ms";
    o.detail = d.str();
    report(1, "oracle nullspace dimension equals C(r+s-1,s)C(r+k,r+s)", o);
  }

  // Criterion 2: degenerate parameters.
  {
    Outcome o;
    std::size_t checked = 0;
    for (unsigned r = 0; r <= 6; ++r) {
      for (std::size_t k = 0; k <= 6; ++k) {
        const Integer dual = AlgebraParams(r, k).dim();  // dim A^* = dim A
        o.require(dimension(LiftParams(r, k, 0)) == binomial(r + k, r) &&
                      binomial(r + k, r) == dual,
                  label({r, k, 0}) + " differs from the dual-space dimension");
        ++checked;
      }
    }
    for (unsigned n = 0; n <= 6; ++n) {
      for (unsigned s = 0; s <= 4; ++s) {
        const Integer expected = s == 0 ? 1 : 0;
        for (const auto& p : {LiftParams(0, n, s), LiftParams(n, 0, s)}) {
          // direct: D = R, so solve the constraint system over the one-dimensional algebra
          const Nullspace direct = nullspace(build_constraints(p));
          o.require(dimension(p) == expected && Integer(direct.dimension) == expected &&
                        Integer(enumerate_Z(p).size()) == expected,
                    label({p.r(), p.k(), p.s}) + " is not the trivial dimension");
          ++checked;
        }
      }
    }
    o.detail = std::to_string(checked) + " parameter points";
    report(2, "formula holds at r=0, k=0, s=0", o);
  }

  // Criterion 3: every standard-basis table passes every check.
  {
    Outcome o;
    std::size_t tables = 0;
    VerifyOptions options;
    options.all_slots = true;
    for (const auto& p : guarded) {
      const LiftParams params(p.r, p.k, p.s);
      const std::size_t z = enumerate_Z(params).size();
      for (std::size_t n = 0; n < z; ++n) {
        const auto rep = verify_all(construct(CoefficientAssignment::unit(params, n)), options);
        o.require(rep.passed(), label(p) + " basis vector " + std::to_string(n) + ": " +
                                    std::to_string(rep.failure_count()) + " failures");
        ++tables;
      }
    }
    o.detail = std::to_string(tables) + " tables, skew + Leibniz (all slots) + eq7";
    report(3, "constructed tables satisfy skew-symmetry, Leibniz and the degree r+1 identity", o);
  }

  // Criterion 4: I is an isomorphism.
  {
    Outcome o;
    for (const auto& p : guarded) {
      const LiftParams params(p.r, p.k, p.s);
      const OracleRun& run = runs.at({p.r, p.k, p.s});
      o.require(Integer(enumerate_Z(params).size()) == dimension(params),
                label(p) + ": |Z| != dimension");
      const IsoCheck iso = check_iso(run.system, run.null.basis);
      o.require(iso.ok, label(p) + ": I-matrix " + std::to_string(iso.z_count) + "x" +
                            std::to_string(iso.null_dimension) + " rank " +
                            std::to_string(iso.rank));
      const auto cmp = compare_with_construction(run.system, run.null);
      o.require(cmp.passed(), label(p) + ": construction and nullspace differ");
    }
    o.detail = std::to_string(guarded.size()) + " points";
    report(4, "|Z| = dimension, I-matrix invertible, construction spans the nullspace", o);
  }

  // Criterion 5: roundtrip and linearity.
  {
    Outcome o;
    std::mt19937_64 rng(20240501);
    for (const auto& p : guarded) {
      const LiftParams params(p.r, p.k, p.s);
      for (int trial = 0; trial < 100; ++trial) {
        const auto c = CoefficientAssignment::random(params, rng);
        o.require(extract_coefficients(construct(c)) == c,
                  label(p) + ": roundtrip trial " + std::to_string(trial));
      }
      for (int trial = 0; trial < 20; ++trial) {
        const auto c1 = CoefficientAssignment::random(params, rng);
        const auto c2 = CoefficientAssignment::random(params, rng);
        const Rational a = random_rational(rng);
        const Rational b = random_rational(rng);
        std::vector<Rational> mixed(c1.size());
        for (std::size_t n = 0; n < mixed.size(); ++n) {
          mixed[n] = a * c1.values()[n] + b * c2.values()[n];
        }
        const LiftTable t = construct(CoefficientAssignment(params, mixed));
        const LiftTable t1 = construct(c1);
        const LiftTable t2 = construct(c2);
        bool same = true;
        for (std::size_t n = 0; n < t.cells().size(); ++n) {
          same = same && t.cells()[n] == a * t1.cells()[n] + b * t2.cells()[n];
        }
        o.require(same, label(p) + ": linearity trial " + std::to_string(trial));
      }
    }
    o.detail = std::to_string(guarded.size()) + " points x (100 roundtrips + 20 linearity)";
    report(5, "extract(construct(C)) = C and construct is linear", o);
  }

  // Criterion 6: imposing the relation in the last slot only gives the same space.
  {
    Outcome o;
    OracleOptions last;
    last.slots = SlotCoverage::kLastSlotOnly;
    for (const auto& p : guarded) {
      const LiftParams params(p.r, p.k, p.s);
      const OracleRun& run = runs.at({p.r, p.k, p.s});
      const ConstraintSystem reduced = build_constraints(params, last);
      const Nullspace reduced_null = nullspace(reduced);
      o.require(reduced_null.dimension == run.null.dimension,
                label(p) + ": ranks differ " + std::to_string(reduced_null.dimension) + " vs " +
                    std::to_string(run.null.dimension));
      SparseEchelon all_span(run.system.unknown_count());
      SparseEchelon last_span(reduced.unknown_count());
      for (const auto& v : run.null.basis) all_span.insert(to_sparse(v));
      for (const auto& v : reduced_null.basis) last_span.insert(to_sparse(v));
      bool contained = true;
      for (const auto& v : run.null.basis) contained = contained && last_span.contains(to_sparse(v));
      for (const auto& v : reduced_null.basis) contained = contained && all_span.contains(to_sparse(v));
      o.require(contained, label(p) + ": nullspaces are not mutually contained");
    }
    o.detail = std::to_string(guarded.size()) + " points";
    report(6, "last-slot constraints give the same nullspace as all slots", o);
  }

  // Criterion 7: single-cell corruption is detected.
  {
    Outcome o;
    std::mt19937_64 rng(7777);
    std::size_t trials = 0;
    std::vector<std::string> vacuous;
    std::size_t z_trials = 0, z_detected = 0, z_valid = 0;
    for (const auto& p : grid(2, 2, 2)) {
      const LiftParams params(p.r, p.k, p.s);
      const LiftTable base = construct(CoefficientAssignment::random(params, rng));
      std::vector<std::pair<std::size_t, std::size_t>> derived, z_cells;
      for (std::size_t row = 0; row < base.row_count(); ++row) {
        for (std::size_t col = 0; col < base.col_count(); ++col) {
          const bool in = in_z(base.rows()[row], params.algebra.monomial(col), params.r());
          (in ? z_cells : derived).emplace_back(row, col);
        }
      }
      if (derived.empty()) {
        vacuous.push_back(label(p));
      } else {
        for (int trial = 0; trial < 20; ++trial) {
          LiftTable t = base;
          const auto [row, col] = derived[rng() % derived.size()];
          t.cell(row, col) += random_nonzero_rational(rng);
          o.require(!verify_all(t).passed(),
                    label(p) + ": undetected corruption at cell " + std::to_string(row) + "," +
                        std::to_string(col));
          ++trials;
        }
      }
      // Z cells: each corruption is either caught or is another valid element
      for (const auto& [row, col] : z_cells) {
        LiftTable t = base;
        t.cell(row, col) += random_nonzero_rational(rng);
        ++z_trials;
        if (!verify_all(t).passed()) {
          ++z_detected;
        } else if (construct(extract_coefficients(t)) == t) {
          ++z_valid;
        }
      }
    }
    o.require(z_detected + z_valid == z_trials,
              "a Z-cell corruption passed the checks without being a constructed table");
    std::ostringstream d;
    d << trials << " derived-cell trials; vacuous (no derived cells): ";
    for (std::size_t i = 0; i < vacuous.size(); ++i) d << (i ? " " : "") << vacuous[i];
    d << "; Z-cell corruptions: " << z_detected << " detected, " << z_valid
      << " yield another valid element, of " << z_trials;
    o.detail = d.str();
    report(7, "single-cell corruption of a derived cell is always detected", o);
  }

  const double total = std::chrono::duration<double>(Clock::now() - start).count();
  std::cout << (failures == 0 ? "ALL CRITERIA PASSED" : "SOME CRITERIA FAILED") << " in "
            << static_cast<int>(total * 1000) << " ms\n";
  return failures == 0 ? 0 : 1;
}
