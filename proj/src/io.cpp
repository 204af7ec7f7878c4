#include "jetlift/io.hpp"

#include <fstream>
#include <set>
#include <sstream>

namespace jetlift::io {

namespace {

void require_keys(const json& j, const std::set<std::string>& keys, const std::string& what) {
  if (!j.is_object()) throw StructuralError(what + " must be a JSON object");
  for (const auto& key : keys) {
    if (!j.contains(key)) throw StructuralError(what + " is missing key \"" + key + "\"");
  }
  for (const auto& item : j.items()) {
    if (!keys.count(item.key())) {
      throw StructuralError(what + " has unknown key \"" + item.key() + "\"");
    }
  }
}

unsigned read_unsigned(const json& j, const std::string& key) {
  const json& v = j.at(key);
  if (!v.is_number_unsigned() && !(v.is_number_integer() && v.get<long long>() >= 0)) {
    throw StructuralError("\"" + key + "\" must be a non-negative integer");
  }
  return v.get<unsigned>();
}

Rational read_rational(const json& j, const std::string& key) {
  const json& v = j.at(key);
  if (!v.is_string()) throw StructuralError("\"" + key + "\" must be a fraction string");
  return parse_rational(v.get<std::string>());
}

IndexTuple read_tuple(const json& j, std::size_t k, unsigned s) {
  if (!j.is_array() || j.size() != s) {
    throw StructuralError("\"i\" must be an array of " + std::to_string(s) + " axes");
  }
  IndexTuple tuple;
  for (const auto& v : j) {
    if (!v.is_number_unsigned()) throw StructuralError("axes must be positive integers");
    const auto axis = v.get<std::size_t>();
    if (axis < 1 || axis > k) {
      throw StructuralError("axis " + std::to_string(axis) + " outside 1.." + std::to_string(k));
    }
    tuple.push_back(axis);
  }
  return tuple;
}

json tuple_json(const IndexTuple& t) {
  json out = json::array();
  for (auto v : t) out.push_back(v);
  return out;
}

LiftParams read_lift_params(const json& j) {
  return LiftParams(read_unsigned(j, "r"), read_unsigned(j, "k"), read_unsigned(j, "s"));
}

}  // namespace

json to_json(const MultiIndex& a) {
  json out = json::array();
  for (auto v : a.entries()) out.push_back(v);
  return out;
}

MultiIndex multiindex_from_json(const json& j, std::size_t k) {
  if (!j.is_array() || j.size() != k) {
    throw StructuralError("multi-index must be an array of " + std::to_string(k) + " integers");
  }
  std::vector<MultiIndex::Exponent> entries;
  for (const auto& v : j) {
    if (!v.is_number_unsigned()) throw StructuralError("exponents must be non-negative integers");
    entries.push_back(v.get<MultiIndex::Exponent>());
  }
  return MultiIndex(std::move(entries));
}

json to_json(const AlgebraElement& a) {
  const AlgebraParams& p = a.params();
  json terms = json::array();
  for (std::size_t pos = 0; pos < p.dim(); ++pos) {
    if (a.coeff(pos) == 0) continue;
    terms.push_back({{"exp", to_json(p.monomial(pos))}, {"coeff", to_string(a.coeff(pos))}});
  }
  return {{"r", p.r()}, {"k", p.k()}, {"terms", terms}};
}

AlgebraElement element_from_json(const json& j) {
  require_keys(j, {"r", "k", "terms"}, "algebra element");
  AlgebraParams p(read_unsigned(j, "r"), read_unsigned(j, "k"));
  if (!j.at("terms").is_array()) throw StructuralError("\"terms\" must be an array");
  AlgebraElement out(p);
  std::set<std::size_t> seen;
  for (const auto& term : j.at("terms")) {
    require_keys(term, {"exp", "coeff"}, "term");
    const MultiIndex e = multiindex_from_json(term.at("exp"), p.k());
    const auto pos = p.position(e);
    if (!pos) throw StructuralError("term exponent has degree above r");
    if (!seen.insert(*pos).second) throw StructuralError("duplicate term exponent");
    out.set_coeff(e, read_rational(term, "coeff"));
  }
  return out;
}

json to_json(const CoefficientAssignment& c) {
  const LiftParams& p = c.params();
  json values = json::array();
  for (std::size_t n = 0; n < c.size(); ++n) {
    const ZIndex& z = c.indices()[n];
    values.push_back(
        {{"i", tuple_json(z.i)}, {"alpha", to_json(z.alpha)}, {"c", to_string(c.values()[n])}});
  }
  return {{"r", p.r()}, {"k", p.k()}, {"s", p.s}, {"values", values}};
}

CoefficientAssignment assignment_from_json(const json& j) {
  require_keys(j, {"r", "k", "s", "values"}, "coefficient assignment");
  LiftParams p = read_lift_params(j);
  if (!j.at("values").is_array()) throw StructuralError("\"values\" must be an array");
  std::vector<std::pair<ZIndex, Rational>> entries;
  for (const auto& v : j.at("values")) {
    require_keys(v, {"i", "alpha", "c"}, "assignment entry");
    entries.emplace_back(ZIndex{read_tuple(v.at("i"), p.k(), p.s),
                                multiindex_from_json(v.at("alpha"), p.k())},
                         read_rational(v, "c"));
  }
  return CoefficientAssignment::from_entries(std::move(p), entries);
}

json to_json(const LiftTable& t) {
  const LiftParams& p = t.params();
  json cells = json::array();
  for (std::size_t row = 0; row < t.row_count(); ++row) {
    for (std::size_t col = 0; col < t.col_count(); ++col) {
      cells.push_back({{"i", tuple_json(t.rows()[row])},
                       {"alpha", to_json(p.algebra.monomial(col))},
                       {"v", to_string(t.cell(row, col))}});
    }
  }
  return {{"r", p.r()}, {"k", p.k()}, {"s", p.s}, {"cells", cells}};
}

LiftTable table_from_json(const json& j) {
  require_keys(j, {"r", "k", "s", "cells"}, "lift table");
  LiftTable table(read_lift_params(j));
  const LiftParams& p = table.params();
  const json& cells = j.at("cells");
  if (!cells.is_array()) throw StructuralError("\"cells\" must be an array");
  const std::size_t expected = table.row_count() * table.col_count();
  if (cells.size() != expected) {
    throw StructuralError("lift table needs " + std::to_string(expected) + " cells, got " +
                          std::to_string(cells.size()));
  }
  std::size_t n = 0;
  for (std::size_t row = 0; row < table.row_count(); ++row) {
    for (std::size_t col = 0; col < table.col_count(); ++col, ++n) {
      const json& cell = cells[n];
      require_keys(cell, {"i", "alpha", "v"}, "lift table cell");
      if (read_tuple(cell.at("i"), p.k(), p.s) != table.rows()[row] ||
          multiindex_from_json(cell.at("alpha"), p.k()) != p.algebra.monomial(col)) {
        throw StructuralError("lift table cell " + std::to_string(n) +
                              " is out of canonical order");
      }
      table.cell(row, col) = read_rational(cell, "v");
    }
  }
  return table;
}

json to_json(const VerificationReport& report) {
  json checks = json::array();
  for (const auto& c : report.checks()) {
    checks.push_back({{"name", c.name}, {"checked", c.checked}, {"failed", c.failed}});
  }
  json witnesses = json::array();
  for (const auto& w : report.witnesses()) {
    json monomials = json::array();
    for (const auto& m : w.witness) monomials.push_back(to_json(m));
    witnesses.push_back({{"check", w.check},
                         {"witness", monomials},
                         {"expected", to_string(w.expected)},
                         {"actual", to_string(w.actual)}});
  }
  return {{"passed", report.passed()}, {"checks", checks}, {"witnesses", witnesses}};
}

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw StructuralError("cannot open " + path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  try {
    return json::parse(buffer.str());
  } catch (const json::parse_error& e) {
    throw StructuralError("malformed JSON in " + path + ": " + e.what());
  }
}

}  // namespace jetlift::io
