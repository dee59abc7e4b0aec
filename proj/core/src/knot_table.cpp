#include "gridband/knot_table.hpp"

#include "gridband/error.hpp"
#include "gridband/planar.hpp"
#include "json_internal.hpp"

#include <algorithm>
#include <array>
#include <fstream>
#include <map>
#include <sstream>
#include <tuple>

namespace gridband {

namespace {

struct Factor {
  int crossings = 0;
  int index = 0;
  bool mirrored = false;

  std::string base() const { return std::to_string(crossings) + "_" + std::to_string(index); }
  auto tie() const { return std::tie(crossings, index, mirrored); }
};

Factor parse_factor(std::string_view s, std::string_view whole) {
  Factor f;
  if (!s.empty() && s.back() == 'm') {
    f.mirrored = true;
    s.remove_suffix(1);
  }
  const auto us = s.find('_');
  const auto bad = [&] { return Error(ErrorCode::UnknownName, "malformed knot name '" + std::string(whole) + "'"); };
  if (us == std::string_view::npos || us == 0 || us + 1 == s.size())
    throw bad();
  try {
    std::size_t used = 0;
    f.crossings = std::stoi(std::string(s.substr(0, us)), &used);
    if (used != us)
      throw bad();
    f.index = std::stoi(std::string(s.substr(us + 1)), &used);
    if (used != s.size() - us - 1)
      throw bad();
  } catch (const std::logic_error&) {
    throw bad();
  }
  if (f.crossings < 0 || f.index < 0)
    throw bad();
  if (is_amphichiral_prime(f.base()))
    f.mirrored = false;
  return f;
}

std::vector<Factor> factors(std::string_view name) {
  std::vector<Factor> out;
  std::size_t start = 0;
  while (true) {
    const auto hash = name.find('#', start);
    out.push_back(parse_factor(name.substr(start, hash - start), name));
    if (hash == std::string_view::npos)
      break;
    start = hash + 1;
  }
  // the unknot is the unit for '#'
  if (out.size() > 1)
    std::erase_if(out, [](const Factor& f) { return f.crossings == 0; });
  std::sort(out.begin(), out.end(), [](const Factor& a, const Factor& b) { return a.tie() < b.tie(); });
  return out;
}

std::string join(const std::vector<Factor>& fs) {
  std::string out;
  for (const auto& f : fs) {
    if (!out.empty())
      out += '#';
    out += f.base();
    if (f.mirrored)
      out += 'm';
  }
  return out;
}

std::string read_file(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  if (!in)
    throw Error(ErrorCode::ParseError, "cannot read " + p.string());
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

} // namespace

bool is_amphichiral_prime(std::string_view base) {
  static constexpr std::array<std::string_view, 8> names{"0_1", "4_1", "6_3", "8_3", "8_9", "8_12", "8_17", "8_18"};
  return std::find(names.begin(), names.end(), base) != names.end();
}

std::string normalize_name(std::string_view name) { return join(factors(name)); }

std::string mirror_name(std::string_view name) {
  auto fs = factors(name);
  for (auto& f : fs)
    f.mirrored = !f.mirrored && !is_amphichiral_prime(f.base());
  std::sort(fs.begin(), fs.end(), [](const Factor& a, const Factor& b) { return a.tie() < b.tie(); });
  return join(fs);
}

const KnotClass* KnotTable::find(std::string_view name) const {
  auto it = by_name_.find(std::string(name));
  if (it == by_name_.end()) {
    // accept non-canonical spellings such as "4_1m" or "5_2#3_1"
    try {
      it = by_name_.find(normalize_name(name));
    } catch (const Error&) {
      return nullptr;
    }
  }
  return it == by_name_.end() ? nullptr : &classes_[it->second];
}

const KnotClass& KnotTable::at(std::string_view name) const {
  if (const auto* c = find(name))
    return *c;
  throw Error(ErrorCode::UnknownName, "no class named '" + std::string(name) + "'");
}

std::vector<const KnotClass*> KnotTable::with_jones(const LaurentPolynomial& jones) const {
  std::vector<const KnotClass*> out;
  if (const auto it = by_jones_.find(jones); it != by_jones_.end())
    for (auto i : it->second)
      out.push_back(&classes_[i]);
  return out;
}

std::optional<std::string> KnotTable::lookup(const InvariantKey& k) const {
  for (const auto* c : with_jones(k.jones))
    if (c->key.alexander == k.alexander)
      return c->name;
  return std::nullopt;
}

KnotTable build_table(std::string_view seeds_json, std::string_view references_json, std::string_view aliases_json,
                      int crossing_cap) {
  const auto seeds = detail::parse_json(seeds_json, "seed file");
  const auto refs = detail::parse_json(references_json, "reference file");
  if (!seeds.is_array() || !refs.is_array())
    throw Error(ErrorCode::ParseError, "seed and reference files must be JSON arrays");

  std::map<std::string, InvariantKey> reference;
  try {
    for (const auto& r : refs) {
      const auto name = normalize_name(r.at("name").get<std::string>());
      reference[name] = InvariantKey{LaurentPolynomial::parse(r.at("jones").get<std::string>()),
                                     LaurentPolynomial::parse(r.at("alexander").get<std::string>())};
    }
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::ParseError, std::string("reference file: ") + e.what());
  }

  KnotTable t;
  const auto add = [&](std::string name, GridDiagram seed, const InvariantKey& expected) {
    if (t.by_name_.count(name))
      return;
    if (components(seed) != 1)
      throw Error(ErrorCode::SeedMismatch, name + ": seed is not a knot");
    const auto computed = key(seed, crossing_cap);
    if (!(computed == expected))
      throw Error(ErrorCode::SeedMismatch, name + ": seed invariants differ from the reference");
    const bool amphichiral = mirror_name(name) == name;
    t.by_name_[name] = t.classes_.size();
    t.classes_.push_back(KnotClass{std::move(name), amphichiral, std::move(seed), computed, std::nullopt, {}});
  };

  try {
    for (const auto& s : seeds) {
      const auto name = normalize_name(s.at("name").get<std::string>());
      const auto ref = reference.find(name);
      if (ref == reference.end())
        throw Error(ErrorCode::SeedMismatch, name + ": no reference polynomials");
      auto grid = detail::grid_from_json(s.at("grid"));
      add(name, grid, ref->second);
      // mirrors come from the supplied reference if present, else by substitution
      const auto mname = mirror_name(name);
      const auto mref = reference.find(mname);
      add(mname, mirror(grid), mref != reference.end() ? mref->second : mirror(ref->second));
    }
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::ParseError, std::string("seed file: ") + e.what());
  }

  std::map<std::pair<std::string, std::string>, std::vector<std::string>> by_key;
  for (const auto& c : t.classes_)
    by_key[{c.key.jones.to_text(), c.key.alexander.to_text()}].push_back(c.name);
  std::string collisions;
  for (const auto& [k, names] : by_key)
    if (names.size() > 1) {
      for (const auto& n : names)
        collisions += (collisions.empty() ? "" : (n == names.front() ? "; " : ", ")) + n;
    }
  if (!collisions.empty())
    throw Error(ErrorCode::KeyCollision, collisions);

  for (std::size_t i = 0; i < t.classes_.size(); ++i)
    t.by_jones_[t.classes_[i].key.jones].push_back(i);

  if (aliases_json.empty())
    return t;
  const auto aliases = detail::parse_json(aliases_json, "alias file");
  if (!aliases.is_array())
    throw Error(ErrorCode::ParseError, "alias file must be a JSON array");
  try {
    for (const auto& a : aliases) {
      const auto name = a.at("name").get<std::string>();
      const auto target = normalize_name(a.at("aliases").get<std::string>());
      const auto grid = detail::grid_from_json(a.at("grid"));
      const auto it = t.by_name_.find(target);
      if (it == t.by_name_.end())
        throw Error(ErrorCode::UnknownName, "alias " + name + " names unknown class " + target);
      auto& cls = t.classes_[it->second];
      if (!(key(grid, crossing_cap) == cls.key))
        throw Error(ErrorCode::SeedMismatch, "alias " + name + " does not share the key of " + target);
      if (!cls.kauffman)
        cls.kauffman = kauffman_polynomial(to_planar(cls.seed), crossing_cap);
      if (kauffman_polynomial(to_planar(grid), crossing_cap) == *cls.kauffman)
        throw Error(ErrorCode::KeyCollision, target + ", " + name + " (Kauffman polynomial included)");
      cls.aliases.push_back(name);
    }
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::ParseError, std::string("alias file: ") + e.what());
  }
  return t;
}

KnotTable load_table(const std::filesystem::path& dir) {
  const auto aliases = dir / "aliases.json";
  return build_table(read_file(dir / "seeds.json"), read_file(dir / "reference_polynomials.json"),
                     std::filesystem::exists(aliases) ? read_file(aliases) : std::string{});
}

std::vector<SimplifyPolicy> default_effort() {
  return {SimplifyPolicy{200, 50, 20}, SimplifyPolicy{2000, 100, 200}};
}

std::optional<std::string> identify(const GridDiagram& g, const KnotTable& t, std::span<const SimplifyPolicy> effort,
                                    Rng& rng, int crossing_cap) {
  if (components(g) != 1)
    throw Error(ErrorCode::NotAKnot, std::to_string(components(g)) + " components");
  GridDiagram cur = g;
  for (const auto& policy : effort) {
    cur = simplify(cur, policy, rng);
    const auto pd = to_planar(cur);
    if (pd.crossing_count() > crossing_cap)
      continue;
    // Jones is exact, so no candidate means no table class at any effort
    const auto candidates = t.with_jones(jones(pd, crossing_cap));
    if (candidates.empty())
      return std::nullopt;
    const auto a = alexander(pd, crossing_cap);
    for (const auto* c : candidates) {
      if (c->key.alexander != a)
        continue;
      if (c->kauffman && kauffman_polynomial(pd, crossing_cap) != *c->kauffman)
        return std::nullopt;
      return c->name;
    }
    return std::nullopt;
  }
  return std::nullopt;
}

bool is_cosmetic_pair(const KnotTable& t, std::string_view a, std::string_view b) {
  const auto& ca = t.at(a);
  const auto& cb = t.at(b);
  return cb.name == mirror_name(ca.name);
}

} // namespace gridband
