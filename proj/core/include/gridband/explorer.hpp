#pragma once

#include "gridband/bands.hpp"
#include "gridband/grid.hpp"
#include "gridband/knot_table.hpp"
#include "gridband/simplify.hpp"

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace gridband {

inline constexpr std::string_view kVersion = "0.3.0";

struct ExploreConfig {
  std::vector<std::string> classes; // empty: every class of the table
  int scrambles_per_seed = 400;
  int moves_per_scramble = 1000;
  ScramblePolicy scramble;           // `moves` and `rng_seed` are set per task
  std::vector<SimplifyPolicy> effort = default_effort();
  int max_result_crossings = kDefaultCrossingCap; // simplified results above this are Unknown
  int jobs = 1;                                   // 0: one per hardware thread
  std::uint64_t base_seed = 0;
};

/// Throws InvalidConfig / UnknownName.
void check(const ExploreConfig& c, const KnotTable& t);

struct Witness {
  std::string source_class;
  GridDiagram grid; // scrambled, before the band
  BandMove move;
  std::string target_class;
  std::uint64_t base_seed = 0;
  std::uint64_t task = 0;
};

/// One JSON object on a single line (no trailing newline).
std::string serialize(const Witness& w);
Witness parse_witness(std::string_view line);

struct SourceSummary {
  std::string name;
  std::int64_t applied = 0; // non-coherent bands applied
  std::int64_t unknown = 0; // results that did not identify
  std::map<std::string, std::int64_t> targets;
};

struct AdjacencyReport {
  ExploreConfig config;
  std::vector<SourceSummary> sources; // in config order

  /// Unordered pairs (a <= b) with the number of witnesses behind them.
  std::map<std::pair<std::string, std::string>, std::int64_t> pairs() const;
  std::int64_t unknown_events() const;
};

using WitnessSink = std::function<void(const Witness&)>;

/// Scramble every seed scrambles_per_seed times, apply every non-coherent
/// band to each scrambled grid, identify the results. Task k (class k / s,
/// scramble k % s) scrambles with seed base_seed ^ k. The report and the
/// witness order are the same for every `jobs`; the sink is called from one
/// thread at a time, in task order.
AdjacencyReport explore(const ExploreConfig& c, const KnotTable& t, const WitnessSink& sink = {});

/// Seeds used to identify a band result and a scrambled source grid.
std::uint64_t band_seed(std::uint64_t base_seed, std::uint64_t task, const BandMove& m);
std::uint64_t source_seed(std::uint64_t base_seed, std::uint64_t task);

struct CosmeticRow {
  std::string name;
  double probability = 0.0;
  std::int64_t occurrences = 0;
  std::int64_t sample = 0;
};

/// One row per source class with a non-empty sample.
std::vector<CosmeticRow> cosmetic_stats(const AdjacencyReport& r, const KnotTable& t);

/// Three decimals; values that round to zero keep two significant digits
/// (truncated), e.g. 1/76686 -> "0.000013".
std::string format_probability(std::int64_t occurrences, std::int64_t sample);

struct ReplayResult {
  bool verified = false;
  std::optional<std::string> source; // as identified now
  std::optional<std::string> target;
  std::string detail;
};

ReplayResult replay(const Witness& w, const KnotTable& t,
                    const std::vector<SimplifyPolicy>& effort = default_effort(),
                    int crossing_cap = kDefaultCrossingCap);

std::string to_json(const AdjacencyReport& r, const KnotTable& t);
AdjacencyReport parse_report(std::string_view text);
/// class_a,class_b,count
std::string adjacency_csv(const AdjacencyReport& r);

} // namespace gridband
