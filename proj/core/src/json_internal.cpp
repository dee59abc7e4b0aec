#include "json_internal.hpp"

#include "gridband/bands.hpp"
#include "gridband/error.hpp"

namespace gridband::detail {

Json parse_json(std::string_view text, const char* what) {
  try {
    return Json::parse(text.begin(), text.end());
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::ParseError, std::string(what) + ": " + e.what());
  }
}

Json grid_to_json(const GridDiagram& g) {
  Json j;
  j["n"] = g.n();
  j["x"] = std::vector<int>(g.xs().begin(), g.xs().end());
  j["o"] = std::vector<int>(g.os().begin(), g.os().end());
  return j;
}

GridDiagram grid_from_json(const Json& j) {
  std::vector<int> xs, os;
  int n = 0;
  try {
    if (!j.is_object() || !j.contains("n") || !j.contains("x") || !j.contains("o"))
      throw Error(ErrorCode::ParseError, "grid record needs n, x and o");
    n = j.at("n").get<int>();
    xs = j.at("x").get<std::vector<int>>();
    os = j.at("o").get<std::vector<int>>();
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::ParseError, std::string("grid: ") + e.what());
  }
  if (static_cast<int>(xs.size()) != n || static_cast<int>(os.size()) != n)
    throw Error(ErrorCode::ParseError, "grid arrays do not have length n");
  return {std::move(xs), std::move(os)};
}

Json band_to_json(const BandMove& m) {
  Json j;
  j["axis"] = m.axis == Axis::Row ? "row" : "col";
  j["i"] = m.index;
  j["variant"] = std::string(to_string(m.variant));
  return j;
}

BandMove band_from_json(const Json& j) {
  try {
    BandMove m;
    const auto axis = j.at("axis").get<std::string>();
    if (axis == "row")
      m.axis = Axis::Row;
    else if (axis == "col")
      m.axis = Axis::Column;
    else
      throw Error(ErrorCode::ParseError, "band axis must be row or col");
    m.index = j.at("i").get<int>();
    m.variant = parse_band_variant(j.at("variant").get<std::string>());
    return m;
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::ParseError, std::string("band move: ") + e.what());
  }
}

} // namespace gridband::detail
