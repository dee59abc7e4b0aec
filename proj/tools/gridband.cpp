// gridband: command line front end for the grid-diagram band explorer.

#include <gridband/gridband.hpp>

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <iterator>
#include <sstream>

using namespace gridband;

namespace {

constexpr int kExitValidation = 1;
constexpr int kExitMismatch = 2;

std::string read_input(const std::string& path) {
  if (path == "-")
    return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
  std::ifstream in(path);
  if (!in)
    throw Error(ErrorCode::ParseError, "cannot read " + path);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

void write_output(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out)
    throw Error(ErrorCode::ParseError, "cannot write " + path);
  out << text;
}

std::vector<std::string> lines_of(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);)
    if (line.find_first_not_of(" \t\r") != std::string::npos)
      out.push_back(line);
  return out;
}

struct Options {
  std::string data_dir = GRIDBAND_DATA_DIR;
  std::string in = "-";
  std::string out;
  std::uint64_t seed = 0;

  // scramble
  int moves = 1000;
  int max_size = 30;
  std::string scramble_policy;

  // simplify
  std::string simplify_policy;
  bool sizes = false;

  // bands
  std::string kind = "noncoherent";
  std::string apply;

  // explore
  std::vector<std::string> knots;
  int scrambles = 400;
  int jobs = 1;
  std::string witnesses;
  std::string csv;
  int max_crossings = kDefaultCrossingCap;

  // stats
  std::string report;
  bool stats_csv = false;
  std::string histogram_knot;

  // replay
  std::string witness_file;
};

ScramblePolicy scramble_policy(const Options& o) {
  ScramblePolicy p = o.scramble_policy.empty() ? ScramblePolicy{} : parse_scramble_policy(read_input(o.scramble_policy));
  if (o.scramble_policy.empty()) {
    p.moves = o.moves;
    p.max_size = o.max_size;
  }
  p.rng_seed = o.seed;
  check(p);
  return p;
}

SimplifyPolicy simplify_policy(const Options& o) {
  SimplifyPolicy p = o.simplify_policy.empty() ? SimplifyPolicy{} : parse_simplify_policy(read_input(o.simplify_policy));
  check(p);
  return p;
}

int run_scramble(const Options& o) {
  const auto g = parse_grid(read_input(o.in));
  write_output(o.out, serialize(scramble(g, scramble_policy(o))) + "\n");
  return 0;
}

int run_simplify(const Options& o) {
  const auto g = parse_grid(read_input(o.in));
  Rng rng(o.seed);
  std::vector<int> sizes;
  const auto s = simplify(g, simplify_policy(o), rng, &sizes);
  write_output(o.out, serialize(s) + "\n");
  if (o.sizes) {
    std::cerr << "sizes:";
    for (int n : sizes)
      std::cerr << ' ' << n;
    std::cerr << '\n';
  }
  return 0;
}

int run_identify(const Options& o) {
  const auto t = load_table(o.data_dir);
  const auto g = parse_grid(read_input(o.in));
  Rng rng(o.seed);
  const auto id = identify(g, t, default_effort(), rng);
  std::cout << (id ? *id : "unknown") << '\n';
  return 0;
}

int run_bands(const Options& o) {
  const auto g = parse_grid(read_input(o.in));
  if (!o.apply.empty()) {
    write_output(o.out, serialize(apply_band(g, parse_band(o.apply))) + "\n");
    return 0;
  }
  BandKind kind = BandKind::NonCoherent;
  if (o.kind == "coherent")
    kind = BandKind::Coherent;
  else if (o.kind == "all")
    kind = BandKind::All;
  std::string text;
  for (const auto& m : enumerate_bands(g, kind))
    text += serialize(m) + "\n";
  write_output(o.out, text);
  return 0;
}

int run_explore(const Options& o) {
  const auto t = load_table(o.data_dir);
  ExploreConfig c;
  c.classes = o.knots;
  c.scrambles_per_seed = o.scrambles;
  c.moves_per_scramble = o.moves;
  c.scramble.max_size = o.max_size;
  c.max_result_crossings = o.max_crossings;
  c.base_seed = o.seed;
  c.jobs = o.jobs;
  if (const char* env = std::getenv("GRIDBAND_JOBS"); env && *env) {
    try {
      c.jobs = std::stoi(env);
    } catch (const std::exception&) {
      throw Error(ErrorCode::InvalidConfig, std::string("GRIDBAND_JOBS is not a number: ") + env);
    }
  }
  check(c, t);

  std::ofstream witness_out;
  if (!o.witnesses.empty()) {
    witness_out.open(o.witnesses);
    if (!witness_out)
      throw Error(ErrorCode::ParseError, "cannot write " + o.witnesses);
  }
  const auto report = explore(c, t, [&](const Witness& w) {
    if (witness_out.is_open())
      witness_out << serialize(w) << '\n';
  });
  write_output(o.out, to_json(report, t));
  if (!o.csv.empty())
    write_output(o.csv, adjacency_csv(report));
  if (!o.out.empty() && o.out != "-") {
    for (const auto& s : report.sources)
      std::cerr << s.name << ": " << s.applied << " bands, " << s.targets.size() << " targets, " << s.unknown
                << " unknown\n";
  }
  return 0;
}

int run_stats(const Options& o) {
  if (!o.histogram_knot.empty()) {
    const auto t = load_table(o.data_dir);
    std::vector<GridDiagram> batch;
    for (int s = 0; s < o.scrambles; ++s) {
      ScramblePolicy p = scramble_policy(o);
      p.rng_seed = o.seed ^ static_cast<std::uint64_t>(s);
      batch.push_back(scramble(t.at(o.histogram_knot).seed, p));
    }
    write_output(o.out, size_stats(batch).to_csv());
    return 0;
  }
  const auto t = load_table(o.data_dir);
  const auto report = parse_report(read_input(o.report.empty() ? o.in : o.report));
  std::ostringstream out;
  if (o.stats_csv) {
    out << "class,probability,occurrences,sample\n";
    for (const auto& row : cosmetic_stats(report, t))
      out << row.name << ',' << format_probability(row.occurrences, row.sample) << ',' << row.occurrences << ','
          << row.sample << '\n';
  } else {
    out << std::left << std::setw(12) << "knot" << std::setw(12) << "probability" << std::setw(13) << "occurrences"
        << "sample\n";
    for (const auto& row : cosmetic_stats(report, t))
      out << std::setw(12) << row.name << std::setw(12) << format_probability(row.occurrences, row.sample)
          << std::setw(13) << row.occurrences << row.sample << '\n';
    out << "pairs: " << report.pairs().size() << ", unknown events: " << report.unknown_events() << '\n';
  }
  write_output(o.out, out.str());
  return 0;
}

int run_replay(const Options& o) {
  const auto t = load_table(o.data_dir);
  int verified = 0, mismatched = 0;
  for (const auto& line : lines_of(read_input(o.witness_file))) {
    const auto w = parse_witness(line);
    const auto r = replay(w, t);
    std::cout << (r.verified ? "verified " : "mismatch ") << r.detail << '\n';
    ++(r.verified ? verified : mismatched);
  }
  std::cout << verified << " verified, " << mismatched << " mismatch\n";
  return mismatched == 0 ? 0 : kExitMismatch;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"Grid diagram band surgery explorer"};
  app.set_version_flag("--version", std::string(kVersion));
  app.require_subcommand(1);
  Options o;
  app.add_option("--data-dir", o.data_dir, "Directory holding seeds.json and reference_polynomials.json");

  auto add_io = [&](CLI::App* sub) {
    sub->add_option("--in", o.in, "Grid file (JSON), - for stdin");
    sub->add_option("--out", o.out, "Output file, stdout when omitted");
  };
  auto add_seed = [&](CLI::App* sub) { sub->add_option("--seed", o.seed, "64-bit RNG seed"); };
  auto add_scramble = [&](CLI::App* sub) {
    sub->add_option("--moves", o.moves, "Random moves per scramble")->check(CLI::PositiveNumber);
    sub->add_option("--max-size", o.max_size, "Grid size cap while scrambling")->check(CLI::Range(2, 1000));
    sub->add_option("--policy", o.scramble_policy, "Scramble policy file (JSON)");
  };

  auto* scramble_cmd = app.add_subcommand("scramble", "Apply random knot-preserving grid moves");
  add_io(scramble_cmd);
  add_seed(scramble_cmd);
  add_scramble(scramble_cmd);

  auto* simplify_cmd = app.add_subcommand("simplify", "Shrink a grid by destabilization");
  add_io(simplify_cmd);
  add_seed(simplify_cmd);
  simplify_cmd->add_option("--policy", o.simplify_policy, "Simplify policy file (JSON)");
  simplify_cmd->add_flag("--sizes", o.sizes, "Print the size after every round to stderr");

  auto* identify_cmd = app.add_subcommand("identify", "Name the knot type of a grid");
  add_io(identify_cmd);
  add_seed(identify_cmd);

  auto* bands_cmd = app.add_subcommand("bands", "List band moves, or apply one");
  add_io(bands_cmd);
  bands_cmd->add_option("--kind", o.kind, "coherent, noncoherent or all")
      ->check(CLI::IsMember({"coherent", "noncoherent", "all"}));
  bands_cmd->add_option("--apply", o.apply, "Band move (JSON) to apply");

  auto* explore_cmd = app.add_subcommand("explore", "Search band adjacencies from scrambled seeds");
  explore_cmd->add_option("--knot", o.knots, "Source class, repeatable (default: every class)");
  explore_cmd->add_option("--scrambles", o.scrambles, "Scrambles per seed")->check(CLI::PositiveNumber);
  explore_cmd->add_option("--moves", o.moves, "Random moves per scramble")->check(CLI::PositiveNumber);
  explore_cmd->add_option("--max-size", o.max_size, "Grid size cap while scrambling")->check(CLI::Range(2, 1000));
  explore_cmd->add_option("--max-crossings", o.max_crossings, "Band results above this stay unknown");
  explore_cmd->add_option("--jobs", o.jobs, "Worker threads, 0 for one per core (GRIDBAND_JOBS overrides)");
  explore_cmd->add_option("--out", o.out, "report.json path, stdout when omitted");
  explore_cmd->add_option("--witnesses", o.witnesses, "Witness file (JSON Lines)");
  explore_cmd->add_option("--csv", o.csv, "Adjacency CSV path");
  add_seed(explore_cmd);

  auto* stats_cmd = app.add_subcommand("stats", "Cosmetic statistics of a report, or a size histogram");
  stats_cmd->add_option("--report", o.report, "report.json written by explore");
  stats_cmd->add_flag("--csv", o.stats_csv, "CSV instead of a table");
  stats_cmd->add_option("--histogram", o.histogram_knot, "Scramble this class and print grid/crossing counts");
  stats_cmd->add_option("--scrambles", o.scrambles, "Scrambles for --histogram")->check(CLI::PositiveNumber);
  stats_cmd->add_option("--moves", o.moves, "Random moves per scramble")->check(CLI::PositiveNumber);
  stats_cmd->add_option("--max-size", o.max_size, "Grid size cap")->check(CLI::Range(2, 1000));
  stats_cmd->add_option("--out", o.out, "Output file, stdout when omitted");
  add_seed(stats_cmd);

  auto* replay_cmd = app.add_subcommand("replay", "Re-check stored witnesses");
  replay_cmd->add_option("--witness", o.witness_file, "Witness file (JSON Lines)")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitValidation;
  }

  try {
    if (*scramble_cmd)
      return run_scramble(o);
    if (*simplify_cmd)
      return run_simplify(o);
    if (*identify_cmd)
      return run_identify(o);
    if (*bands_cmd)
      return run_bands(o);
    if (*explore_cmd)
      return run_explore(o);
    if (*stats_cmd)
      return run_stats(o);
    if (*replay_cmd)
      return run_replay(o);
  } catch (const Error& e) {
    std::cerr << "error: " << to_string(e.code()) << ": " << e.what() << '\n';
    return kExitValidation;
  }
  return kExitValidation;
}
