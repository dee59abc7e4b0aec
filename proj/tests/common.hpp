#pragma once

#include <gridband/gridband.hpp>

#include <oracles/oracles.hpp>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

namespace testing {

inline std::filesystem::path data_dir() { return GRIDBAND_DATA_DIR; }
inline std::filesystem::path test_data_dir() { return GRIDBAND_TEST_DATA_DIR; }

inline std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

// Built once per process; the build itself verifies every seed.
inline const gridband::KnotTable& table() {
  static const gridband::KnotTable t = gridband::load_table(data_dir());
  return t;
}

inline gridband::GridDiagram unknot2() { return gridband::GridDiagram({0, 1}, {1, 0}); }

inline gridband::GridDiagram seed(const std::string& name) { return table().at(name).seed; }

// A knot grid a few hundred moves away from a seed, small enough for the
// invariant code.
inline gridband::GridDiagram small_scramble(const gridband::GridDiagram& g, std::uint64_t seed,
                                            int moves = 60, int max_size = 12) {
  gridband::ScramblePolicy p;
  p.moves = moves;
  p.max_size = std::max(max_size, g.n());
  p.rng_seed = seed;
  return gridband::scramble(g, p);
}

// Generous cap for property tests whose moves add a few crossings.
inline constexpr int kCap = 60;

} // namespace testing

#include <json.hpp>

#include <map>
#include <set>

namespace testing {

// Published adjacency rows, keyed by one chirality; the other follows by
// mirroring both ends.
class PublishedAdjacency {
public:
  PublishedAdjacency() {
    const auto rows = nlohmann::json::parse(slurp(test_data_dir() / "h2_adjacency.json"));
    for (const auto& r : rows) {
      auto& set = rows_[r["class"].get<std::string>()];
      for (const auto& nb : r["neighbours"])
        set.insert(nb.get<std::string>());
    }
  }

  std::set<std::string> row(const std::string& name) const {
    if (auto it = rows_.find(name); it != rows_.end())
      return it->second;
    std::set<std::string> out;
    if (auto it = rows_.find(gridband::mirror_name(name)); it != rows_.end())
      for (const auto& nb : it->second)
        out.insert(gridband::mirror_name(nb));
    return out;
  }

  bool allows(const std::string& a, const std::string& b) const { return row(a).count(b) || row(b).count(a); }

private:
  std::map<std::string, std::set<std::string>> rows_;
};

} // namespace testing
