#pragma once

#include <json.hpp>

#include "jetlift/lift_space.hpp"
#include "jetlift/verifier.hpp"
#include "jetlift/weil_algebra.hpp"

namespace jetlift::io {

using nlohmann::json;

// Every reader throws StructuralError with a description of the first
// problem: missing or unknown keys, wrong types, entries outside the basis.

json to_json(const MultiIndex& a);
MultiIndex multiindex_from_json(const json& j, std::size_t k);

/// {"r", "k", "terms": [{"exp": [...], "coeff": "p/q"}]}, nonzero terms only.
json to_json(const AlgebraElement& a);
AlgebraElement element_from_json(const json& j);

/// {"r", "k", "s", "values": [{"i": [...], "alpha": [...], "c": "p/q"}]}
json to_json(const CoefficientAssignment& c);
CoefficientAssignment assignment_from_json(const json& j);

/// {"r", "k", "s", "cells": [{"i": [...], "alpha": [...], "v": "p/q"}]},
/// every cell in canonical order.
json to_json(const LiftTable& t);
LiftTable table_from_json(const json& j);

json to_json(const VerificationReport& report);

/// Reads a whole file; StructuralError when unreadable or not JSON.
json read_json_file(const std::string& path);

}  // namespace jetlift::io
