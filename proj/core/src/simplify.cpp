#include "gridband/simplify.hpp"

#include "gridband/error.hpp"
#include "gridband/moves.hpp"
#include "gridband/planar.hpp"
#include "json_internal.hpp"

#include <algorithm>
#include <array>
#include <sstream>

namespace gridband {

namespace {

int uniform(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

struct Commutation {
  Axis axis;
  int index;
};

std::vector<Commutation> legal_commutations(const GridDiagram& g) {
  std::vector<Commutation> out;
  for (Axis axis : {Axis::Row, Axis::Column})
    for (int i = 0; i < g.n(); ++i) {
      const auto kind = interleaving(g, axis, i);
      if (kind == Interleaving::Disjoint || kind == Interleaving::Nested)
        out.push_back({axis, i});
    }
  return out;
}

GridDiagram random_translation(const GridDiagram& g, Rng& rng) {
  const Axis axis = uniform(rng, 0, 1) == 0 ? Axis::Row : Axis::Column;
  return translate(g, axis, uniform(rng, 1, g.n() - 1));
}

void shrink(GridDiagram& g, Rng& rng) {
  for (auto sites = destabilizations(g); !sites.empty(); sites = destabilizations(g))
    g = destabilize(g, sites[static_cast<std::size_t>(uniform(rng, 0, static_cast<int>(sites.size()) - 1))]);
}

} // namespace

void check(const ScramblePolicy& p) {
  const auto& w = p.weights;
  if (w.translate < 0 || w.commute < 0 || w.stabilize < 0 || w.destabilize < 0)
    throw Error(ErrorCode::InvalidConfig, "scramble weights must be non-negative");
  if (w.translate + w.commute + w.stabilize + w.destabilize <= 0)
    throw Error(ErrorCode::InvalidConfig, "scramble weights are all zero");
  if (p.moves < 0 || p.max_size < 2)
    throw Error(ErrorCode::InvalidConfig, "scramble needs moves >= 0 and max_size >= 2");
}

void check(const SimplifyPolicy& p) {
  if (p.rounds <= 0 || p.shuffle_moves <= 0 || p.patience <= 0)
    throw Error(ErrorCode::InvalidConfig, "simplify policy counts must be positive");
}

GridDiagram scramble(const GridDiagram& g, const ScramblePolicy& p) {
  check(p);
  if (g.n() > p.max_size)
    throw Error(ErrorCode::InvalidConfig, "grid size " + std::to_string(g.n()) + " exceeds max_size " +
                                              std::to_string(p.max_size));
  Rng rng(p.rng_seed);
  GridDiagram cur = g;
  for (int step = 0; step < p.moves; ++step) {
    const auto commutations = legal_commutations(cur);
    const auto sites = destabilizations(cur);
    const std::array<double, 4> weights{
        p.weights.translate,
        commutations.empty() ? 0.0 : p.weights.commute,
        cur.n() < p.max_size ? p.weights.stabilize : 0.0,
        sites.empty() ? 0.0 : p.weights.destabilize,
    };
    if (weights[0] + weights[1] + weights[2] + weights[3] <= 0)
      break;
    std::discrete_distribution<int> pick(weights.begin(), weights.end());
    switch (pick(rng)) {
    case 0:
      cur = random_translation(cur, rng);
      break;
    case 1: {
      const auto& c = commutations[static_cast<std::size_t>(uniform(rng, 0, static_cast<int>(commutations.size()) - 1))];
      cur = commute(cur, c.axis, c.index);
      break;
    }
    case 2: {
      StabSpec s;
      s.row = uniform(rng, 0, cur.n() - 1);
      s.marker = uniform(rng, 0, 1) == 0 ? Marker::X : Marker::O;
      s.above = uniform(rng, 0, 1) == 0;
      s.right = uniform(rng, 0, 1) == 0;
      cur = stabilize(cur, s);
      break;
    }
    default:
      cur = destabilize(cur, sites[static_cast<std::size_t>(uniform(rng, 0, static_cast<int>(sites.size()) - 1))]);
      break;
    }
  }
  return cur;
}

GridDiagram simplify(const GridDiagram& g, const SimplifyPolicy& p, Rng& rng, std::vector<int>* round_sizes) {
  check(p);
  GridDiagram cur = g;
  int best = cur.n();
  int stale = 0;
  for (int round = 0; round < p.rounds; ++round) {
    shrink(cur, rng);
    if (round_sizes)
      round_sizes->push_back(cur.n());
    if (cur.n() <= 2)
      break;
    if (cur.n() < best) {
      best = cur.n();
      stale = 0;
    } else if (round > 0 && ++stale >= p.patience) {
      break;
    }
    for (int k = 0; k < p.shuffle_moves; ++k) {
      if (uniform(rng, 0, 4) == 0) {
        cur = random_translation(cur, rng);
      } else {
        const auto commutations = legal_commutations(cur);
        if (commutations.empty())
          continue;
        const auto& c =
            commutations[static_cast<std::size_t>(uniform(rng, 0, static_cast<int>(commutations.size()) - 1))];
        cur = commute(cur, c.axis, c.index);
      }
      shrink(cur, rng);
      if (cur.n() <= 2)
        break;
    }
  }
  return cur;
}

std::string SizeHistogram::to_csv() const {
  std::ostringstream out;
  out << "grid_size,crossing_count,count\n";
  for (const auto& [bin, count] : counts)
    out << bin.first << ',' << bin.second << ',' << count << '\n';
  return out.str();
}

SizeHistogram size_stats(std::span<const GridDiagram> batch) {
  SizeHistogram h;
  for (const auto& g : batch)
    ++h.counts[{g.n(), crossing_count(g)}];
  return h;
}

std::string serialize(const ScramblePolicy& p) {
  detail::Json j;
  j["moves"] = p.moves;
  j["max_size"] = p.max_size;
  j["weights"] = {{"translate", p.weights.translate},
                  {"commute", p.weights.commute},
                  {"stabilize", p.weights.stabilize},
                  {"destabilize", p.weights.destabilize}};
  j["rng_seed"] = p.rng_seed;
  return j.dump();
}

std::string serialize(const SimplifyPolicy& p) {
  detail::Json j;
  j["rounds"] = p.rounds;
  j["shuffle_moves"] = p.shuffle_moves;
  j["patience"] = p.patience;
  return j.dump();
}

ScramblePolicy parse_scramble_policy(std::string_view text) {
  const auto j = detail::parse_json(text, "scramble policy");
  ScramblePolicy p;
  try {
    p.moves = j.value("moves", p.moves);
    p.max_size = j.value("max_size", p.max_size);
    p.rng_seed = j.value("rng_seed", p.rng_seed);
    if (j.contains("weights")) {
      const auto& w = j.at("weights");
      p.weights.translate = w.value("translate", p.weights.translate);
      p.weights.commute = w.value("commute", p.weights.commute);
      p.weights.stabilize = w.value("stabilize", p.weights.stabilize);
      p.weights.destabilize = w.value("destabilize", p.weights.destabilize);
    }
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::ParseError, std::string("scramble policy: ") + e.what());
  }
  check(p);
  return p;
}

SimplifyPolicy parse_simplify_policy(std::string_view text) {
  const auto j = detail::parse_json(text, "simplify policy");
  SimplifyPolicy p;
  try {
    p.rounds = j.value("rounds", p.rounds);
    p.shuffle_moves = j.value("shuffle_moves", p.shuffle_moves);
    p.patience = j.value("patience", p.patience);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::ParseError, std::string("simplify policy: ") + e.what());
  }
  check(p);
  return p;
}

} // namespace gridband
