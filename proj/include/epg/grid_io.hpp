#pragma once

#include <string>

#include "epg/grid.hpp"

namespace epg {

// {"grid":{"cols":C,"rows":R},"paths":{"1":[[x,y],...],...}} with paths keyed
// by vertex id in ascending order and listed corner by corner.
std::string rep_to_json(const EpgRepresentation& rep);

// Parses the format above; throws std::invalid_argument on malformed input.
EpgRepresentation rep_from_json(const std::string& text);

}  // namespace epg
