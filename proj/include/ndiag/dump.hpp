#pragma once

#include <string>

#include <json.hpp>

#include "ndiag/diagram.hpp"

namespace ndiag {

using Json = nlohmann::ordered_json;

Json to_json(const ExponentVector& alpha);
Json to_json(const NodeRecord& node);

/// {dimension, points: [{alpha, sign}], size, nodes: [{alpha, kind, geometry}]}
Json diagram_json(const NewtonDiagram& d);

/// Inverse of diagram_json for the points part; other keys are ignored.
NewtonDiagram diagram_from_json(const Json& j);

/// Row-per-degree P/N/. grid, top degree first. Dimension 2 prints one row
/// per degree with x1 increasing left to right; dimension 3 prints a block
/// per degree with one line per x3 value. Only the nonnegative octant is
/// drawn.
std::string render_ascii(const NewtonDiagram& d);

}  // namespace ndiag
