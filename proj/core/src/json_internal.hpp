#pragma once

// Private JSON glue; nlohmann/json never leaks into the installed headers.

#include "gridband/grid.hpp"

#include <json.hpp>

#include <string_view>

namespace gridband {
struct BandMove;
}

namespace gridband::detail {

using Json = nlohmann::ordered_json;

Json parse_json(std::string_view text, const char* what);

Json grid_to_json(const GridDiagram& g);
GridDiagram grid_from_json(const Json& j);

Json band_to_json(const BandMove& m);
BandMove band_from_json(const Json& j);

} // namespace gridband::detail
