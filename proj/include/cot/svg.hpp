#pragma once

#include <string>

#include "cot/instances.hpp"
#include "cot/matchers.hpp"

namespace cot {

// Deterministic SVG: 1D instances as red/blue dots on a baseline with a
// semicircular arc per edge, 2D instances as points plus the per-edge
// circles through both endpoints. d >= 3 is not supported.
std::string render_matching(const Matching& m, const PointSet& X, const PointSet& Y);

// matching.json: {version: 1, method, cost, perm, edges, total_cost,
// step_minima?}. Indices are 0-based.
std::string matching_to_json(const Matching& m, const std::string& cost_label);
Matching matching_from_json(const std::string& text);

}  // namespace cot
