#pragma once

#include <string>

#include "epg/grid.hpp"

namespace epg {

// Standalone SVG: light grid, one colored polyline per path, nudged slightly
// per vertex id so coincident segments stay distinguishable.
std::string render_svg(const EpgRepresentation& rep);

// Text canvas with rows printed top to bottom (highest y first). Each unit
// edge shows the base36 digit of its path's id; '*' marks cells where
// different paths coincide.
std::string render_ascii(const EpgRepresentation& rep);

}  // namespace epg
