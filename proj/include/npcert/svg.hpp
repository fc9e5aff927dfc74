#pragma once

#include <string>

#include "npcert/newton_polygon.hpp"

namespace npcert {

/// Standalone SVG of one polygon: lattice grid, plotted valuation points,
/// the hull polyline, and labelled vertices. The y axis is flipped so
/// valuations increase upward.
std::string polygon_to_svg(const NewtonPolygon& poly, const std::string& title);

} // namespace npcert
