#pragma once

#include <string>

#include "picker/model.hpp"
#include "picker/tour.hpp"

namespace picker {

/// Static SVG drawing of the warehouse to scale: aisles and cross-aisles as
/// thin lines, items as dots, the depot as a square. When a tour is given,
/// every edge with nonzero multiplicity becomes one <g class="edge"> element;
/// double edges are drawn as two offset parallel strokes.
std::string render_svg(const WarehouseGraph &graph, const TourSubgraph *tour = nullptr);

} // namespace picker
