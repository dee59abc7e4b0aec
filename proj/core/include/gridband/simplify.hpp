#pragma once

#include "gridband/grid.hpp"

#include <cstdint>
#include <map>
#include <random>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace gridband {

/// Every randomized operation takes its generator explicitly.
using Rng = std::mt19937_64;

struct MoveWeights {
  double translate = 0.35;
  double commute = 0.35;
  double stabilize = 0.2;
  double destabilize = 0.1;
};

struct ScramblePolicy {
  int moves = 1000;
  int max_size = 30;
  MoveWeights weights;
  std::uint64_t rng_seed = 0;
};

struct SimplifyPolicy {
  int rounds = 200;
  int shuffle_moves = 50;
  int patience = 20; // rounds without a size decrease before giving up
};

/// Throw InvalidConfig on negative/all-zero weights or non-positive counts.
void check(const ScramblePolicy& p);
void check(const SimplifyPolicy& p);

/// Random walk of `moves` knot-preserving grid moves (translation,
/// commutation, stabilization below max_size, destabilization), drawn by
/// weight among the kinds currently available. Deterministic in rng_seed.
GridDiagram scramble(const GridDiagram& g, const ScramblePolicy& p);

/// Greedy destabilization interleaved with random translations and
/// commutations. The grid never grows. When `round_sizes` is given it
/// receives the size at the end of every round.
GridDiagram simplify(const GridDiagram& g, const SimplifyPolicy& p, Rng& rng,
                     std::vector<int>* round_sizes = nullptr);

/// Counts of (grid size, crossing count) over a batch.
struct SizeHistogram {
  std::map<std::pair<int, int>, int> counts;

  bool empty() const noexcept { return counts.empty(); }
  /// "grid_size,crossing_count,count" header plus one line per bin.
  std::string to_csv() const;
};

SizeHistogram size_stats(std::span<const GridDiagram> batch);

std::string serialize(const ScramblePolicy& p);
std::string serialize(const SimplifyPolicy& p);
/// Missing fields keep their defaults.
ScramblePolicy parse_scramble_policy(std::string_view text);
SimplifyPolicy parse_simplify_policy(std::string_view text);

} // namespace gridband
