#include "gridband/explorer.hpp"

#include "gridband/error.hpp"
#include "json_internal.hpp"

#include <algorithm>
#include <atomic>
#include <cstdio>
#include <exception>
#include <mutex>
#include <sstream>
#include <thread>

namespace gridband {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::uint64_t move_code(const BandMove& m) {
  return (static_cast<std::uint64_t>(m.axis == Axis::Row ? 0 : 1) << 40) |
         (static_cast<std::uint64_t>(m.index) << 8) | static_cast<std::uint64_t>(m.variant);
}

struct TaskResult {
  std::size_t source = 0;
  std::int64_t applied = 0;
  std::int64_t unknown = 0;
  std::vector<std::pair<std::string, Witness>> found; // target, witness
};

std::vector<std::string> requested(const ExploreConfig& c, const KnotTable& t) {
  if (!c.classes.empty()) {
    std::vector<std::string> out;
    for (const auto& n : c.classes)
      out.push_back(t.at(normalize_name(n)).name);
    return out;
  }
  std::vector<std::string> out;
  for (const auto& k : t.classes())
    out.push_back(k.name);
  return out;
}

detail::Json policy_json(const SimplifyPolicy& p) {
  return {{"rounds", p.rounds}, {"shuffle_moves", p.shuffle_moves}, {"patience", p.patience}};
}

} // namespace

void check(const ExploreConfig& c, const KnotTable& t) {
  if (c.scrambles_per_seed <= 0 || c.moves_per_scramble < 0)
    throw Error(ErrorCode::InvalidConfig, "scrambles must be positive and moves non-negative");
  if (c.jobs < 0)
    throw Error(ErrorCode::InvalidConfig, "jobs must be non-negative");
  if (c.effort.empty())
    throw Error(ErrorCode::InvalidConfig, "at least one simplification effort level is needed");
  if (c.max_result_crossings < 0)
    throw Error(ErrorCode::InvalidConfig, "max_result_crossings must be non-negative");
  check(c.scramble);
  for (const auto& e : c.effort)
    check(e);
  for (const auto& n : c.classes)
    t.at(normalize_name(n));
}

std::uint64_t band_seed(std::uint64_t base_seed, std::uint64_t task, const BandMove& m) {
  return splitmix64((base_seed ^ task) + move_code(m));
}

std::uint64_t source_seed(std::uint64_t base_seed, std::uint64_t task) {
  return splitmix64(splitmix64(base_seed ^ task));
}

std::string serialize(const Witness& w) {
  detail::Json j;
  j["src"] = w.source_class;
  j["grid"] = detail::grid_to_json(w.grid);
  j["move"] = detail::band_to_json(w.move);
  j["dst"] = w.target_class;
  j["seed"] = w.base_seed;
  j["task"] = w.task;
  return j.dump();
}

Witness parse_witness(std::string_view line) {
  const auto j = detail::parse_json(line, "witness");
  try {
    return Witness{j.at("src").get<std::string>(),   detail::grid_from_json(j.at("grid")),
                   detail::band_from_json(j.at("move")), j.at("dst").get<std::string>(),
                   j.at("seed").get<std::uint64_t>(), j.at("task").get<std::uint64_t>()};
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::ParseError, std::string("witness: ") + e.what());
  }
}

std::map<std::pair<std::string, std::string>, std::int64_t> AdjacencyReport::pairs() const {
  std::map<std::pair<std::string, std::string>, std::int64_t> out;
  for (const auto& s : sources)
    for (const auto& [target, count] : s.targets)
      out[std::minmax(s.name, target)] += count;
  return out;
}

std::int64_t AdjacencyReport::unknown_events() const {
  std::int64_t n = 0;
  for (const auto& s : sources)
    n += s.unknown;
  return n;
}

AdjacencyReport explore(const ExploreConfig& c, const KnotTable& t, const WitnessSink& sink) {
  check(c, t);
  AdjacencyReport report;
  report.config = c;
  const auto names = requested(c, t);
  for (const auto& n : names)
    report.sources.push_back(SourceSummary{n, 0, 0, {}});

  const std::uint64_t tasks = names.size() * static_cast<std::uint64_t>(c.scrambles_per_seed);
  const auto run_task = [&](std::uint64_t task) {
    TaskResult r;
    r.source = static_cast<std::size_t>(task / static_cast<std::uint64_t>(c.scrambles_per_seed));
    const auto& cls = t.at(names[r.source]);
    ScramblePolicy sp = c.scramble;
    sp.moves = c.moves_per_scramble;
    sp.rng_seed = c.base_seed ^ task;
    const GridDiagram grid = scramble(cls.seed, sp);
    for (const auto& m : enumerate_bands(grid, BandKind::NonCoherent)) {
      ++r.applied;
      Rng rng(band_seed(c.base_seed, task, m));
      const auto target = identify(apply_band(grid, m), t, c.effort, rng, c.max_result_crossings);
      if (!target) {
        ++r.unknown;
        continue;
      }
      r.found.emplace_back(*target, Witness{cls.name, grid, m, *target, c.base_seed, task});
    }
    return r;
  };

  std::mutex mu;
  std::vector<std::optional<TaskResult>> pending(tasks);
  std::uint64_t next_commit = 0;
  const auto commit = [&](std::uint64_t task, TaskResult r) {
    std::lock_guard lock(mu);
    pending[task] = std::move(r);
    while (next_commit < tasks && pending[next_commit]) {
      auto& done = *pending[next_commit];
      auto& s = report.sources[done.source];
      s.applied += done.applied;
      s.unknown += done.unknown;
      for (auto& [target, w] : done.found) {
        ++s.targets[target];
        if (sink)
          sink(w);
      }
      pending[next_commit].reset();
      ++next_commit;
    }
  };

  int jobs = c.jobs == 0 ? static_cast<int>(std::max(1u, std::thread::hardware_concurrency())) : c.jobs;
  jobs = static_cast<int>(std::min<std::uint64_t>(static_cast<std::uint64_t>(jobs), std::max<std::uint64_t>(tasks, 1)));
  std::atomic<std::uint64_t> next{0};
  std::atomic<bool> failed{false};
  std::exception_ptr error;
  const auto worker = [&] {
    try {
      for (std::uint64_t task = next++; task < tasks && !failed; task = next++)
        commit(task, run_task(task));
    } catch (...) {
      std::lock_guard lock(mu);
      if (!error)
        error = std::current_exception();
      failed = true;
    }
  };
  if (jobs <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (int i = 0; i < jobs; ++i)
      pool.emplace_back(worker);
  }
  if (error)
    std::rethrow_exception(error);
  return report;
}

std::vector<CosmeticRow> cosmetic_stats(const AdjacencyReport& r, const KnotTable& t) {
  std::vector<CosmeticRow> out;
  for (const auto& s : r.sources) {
    if (s.applied == 0)
      continue;
    CosmeticRow row{s.name, 0.0, 0, s.applied};
    for (const auto& [target, count] : s.targets)
      if (t.find(target) && is_cosmetic_pair(t, s.name, target))
        row.occurrences += count;
    row.probability = static_cast<double>(row.occurrences) / static_cast<double>(row.sample);
    out.push_back(row);
  }
  return out;
}

std::string format_probability(std::int64_t occurrences, std::int64_t sample) {
  if (sample <= 0 || occurrences <= 0)
    return "0";
  // rounded to three decimals, as an integer number of thousandths
  const auto milli = (occurrences * 2000 + sample) / (2 * sample);
  if (milli > 0) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%lld.%03lld", static_cast<long long>(milli / 1000),
                  static_cast<long long>(milli % 1000));
    return buf;
  }
  // smallest e with occurrences * 10^e / sample >= 10, then truncate
  int e = 0;
  std::int64_t scaled = occurrences; // stays below 10 * sample
  while (scaled < sample * 10) {
    scaled *= 10;
    ++e;
  }
  const auto digits = scaled / sample;
  std::string s = std::to_string(digits);
  s.insert(0, static_cast<std::size_t>(e) - s.size(), '0');
  return "0." + s;
}

ReplayResult replay(const Witness& w, const KnotTable& t, const std::vector<SimplifyPolicy>& effort,
                    int crossing_cap) {
  ReplayResult r;
  Rng src_rng(source_seed(w.base_seed, w.task));
  r.source = identify(w.grid, t, effort, src_rng, crossing_cap);
  Rng dst_rng(band_seed(w.base_seed, w.task, w.move));
  r.target = identify(apply_band(w.grid, w.move), t, effort, dst_rng, crossing_cap);
  const auto show = [](const std::optional<std::string>& s) { return s ? *s : std::string("unknown"); };
  r.verified = r.source == normalize_name(w.source_class) && r.target == normalize_name(w.target_class);
  r.detail = "src " + w.source_class + " -> " + show(r.source) + ", dst " + w.target_class + " -> " + show(r.target);
  return r;
}

std::string to_json(const AdjacencyReport& r, const KnotTable& t) {
  using detail::Json;
  const auto& c = r.config;
  Json meta;
  meta["version"] = kVersion;
  meta["seed"] = c.base_seed;
  meta["classes"] = c.classes;
  meta["scrambles_per_seed"] = c.scrambles_per_seed;
  meta["moves_per_scramble"] = c.moves_per_scramble;
  meta["scramble"] = {{"max_size", c.scramble.max_size},
                      {"weights",
                       {{"translate", c.scramble.weights.translate},
                        {"commute", c.scramble.weights.commute},
                        {"stabilize", c.scramble.weights.stabilize},
                        {"destabilize", c.scramble.weights.destabilize}}}};
  meta["effort"] = Json::array();
  for (const auto& e : c.effort)
    meta["effort"].push_back(policy_json(e));
  meta["max_result_crossings"] = c.max_result_crossings;

  Json j;
  j["meta"] = meta;
  j["pairs"] = Json::array();
  for (const auto& [p, count] : r.pairs())
    j["pairs"].push_back({{"a", p.first}, {"b", p.second}, {"count", count}});
  j["cosmetic"] = Json::array();
  for (const auto& row : cosmetic_stats(r, t))
    j["cosmetic"].push_back({{"class", row.name}, {"occ", row.occurrences}, {"sample", row.sample}});
  j["unknown_events"] = r.unknown_events();
  j["sources"] = Json::array();
  for (const auto& s : r.sources) {
    Json targets = Json::object();
    for (const auto& [name, count] : s.targets)
      targets[name] = count;
    j["sources"].push_back({{"class", s.name}, {"applied", s.applied}, {"unknown", s.unknown}, {"targets", targets}});
  }
  return j.dump(2) + "\n";
}

AdjacencyReport parse_report(std::string_view text) {
  const auto j = detail::parse_json(text, "report");
  AdjacencyReport r;
  try {
    const auto& meta = j.at("meta");
    auto& c = r.config;
    c.base_seed = meta.at("seed").get<std::uint64_t>();
    c.classes = meta.value("classes", std::vector<std::string>{});
    c.scrambles_per_seed = meta.value("scrambles_per_seed", c.scrambles_per_seed);
    c.moves_per_scramble = meta.value("moves_per_scramble", c.moves_per_scramble);
    c.max_result_crossings = meta.value("max_result_crossings", c.max_result_crossings);
    if (meta.contains("scramble")) {
      const auto& s = meta.at("scramble");
      c.scramble.max_size = s.value("max_size", c.scramble.max_size);
      if (s.contains("weights")) {
        const auto& w = s.at("weights");
        c.scramble.weights = {w.at("translate").get<double>(), w.at("commute").get<double>(),
                              w.at("stabilize").get<double>(), w.at("destabilize").get<double>()};
      }
    }
    if (meta.contains("effort")) {
      c.effort.clear();
      for (const auto& e : meta.at("effort"))
        c.effort.push_back({e.at("rounds").get<int>(), e.at("shuffle_moves").get<int>(), e.at("patience").get<int>()});
    }
    for (const auto& s : j.at("sources")) {
      SourceSummary sum{s.at("class").get<std::string>(), s.at("applied").get<std::int64_t>(),
                        s.at("unknown").get<std::int64_t>(), {}};
      for (const auto& [name, count] : s.at("targets").items())
        sum.targets[name] = count.get<std::int64_t>();
      r.sources.push_back(std::move(sum));
    }
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::ParseError, std::string("report: ") + e.what());
  }
  return r;
}

std::string adjacency_csv(const AdjacencyReport& r) {
  std::ostringstream out;
  out << "class_a,class_b,count\n";
  for (const auto& [p, count] : r.pairs())
    out << p.first << ',' << p.second << ',' << count << '\n';
  return out.str();
}

} // namespace gridband
