#include "common.hpp"

#include <doctest.h>

#include <json.hpp>

using namespace gridband;
using nlohmann::json;

namespace {

ErrorCode build_error(const std::string& seeds, const std::string& refs, const std::string& aliases = {}) {
  try {
    build_table(seeds, refs, aliases);
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::InvalidConfig; // stands for "no error"
}

std::string message_of(const std::string& seeds, const std::string& refs) {
  try {
    build_table(seeds, refs);
  } catch (const Error& e) {
    return e.what();
  }
  return {};
}

} // namespace

TEST_CASE("naming") {
  CHECK(normalize_name("3_1m#3_1") == "3_1#3_1m");
  CHECK(normalize_name("4_1m") == "4_1");
  CHECK(normalize_name("5_2#3_1") == "3_1#5_2");
  CHECK(normalize_name("0_1#3_1") == "3_1");
  CHECK(mirror_name("3_1") == "3_1m");
  CHECK(mirror_name("3_1m") == "3_1");
  CHECK(mirror_name("3_1#5_1m") == "3_1m#5_1");
  CHECK(mirror_name("4_1#4_1") == "4_1#4_1");
  CHECK(mirror_name("3_1#3_1m") == "3_1#3_1m");
  CHECK(is_amphichiral_prime("8_17"));
  CHECK(is_amphichiral_prime("0_1"));
  CHECK_FALSE(is_amphichiral_prime("8_19"));
}

TEST_CASE("the table") {
  const auto& t = testing::table();
  CHECK(t.size() == 78);
  int amphichiral = 0;
  for (const auto& c : t.classes()) {
    CHECK(components(c.seed) == 1);
    CHECK(c.seed.n() <= 10);
    CHECK(key(c.seed) == c.key);
    CHECK(c.key.alexander.is_palindromic());
    CHECK(c.key.alexander.value_at_one() == 1);
    const auto* m = t.find(mirror_name(c.name));
    REQUIRE(m != nullptr);
    CHECK(m->key == mirror(c.key));
    if (c.amphichiral) {
      CHECK(c.key == mirror(c.key));
      ++amphichiral;
    }
    CHECK(t.lookup(c.key) == std::optional<std::string>(c.name));
  }
  // 0_1 plus the nine classes marked amphichiral in the published tables
  CHECK(amphichiral == 10);
  for (const char* name : {"4_1", "6_3", "8_3", "8_9", "8_12", "8_17", "8_18", "3_1#3_1m", "4_1#4_1"})
    CHECK(t.at(name).amphichiral);
  CHECK_FALSE(t.at("3_1#3_1").amphichiral);
  CHECK(t.find("9_1") == nullptr);
  try {
    (void)t.at("9_1");
    FAIL("no throw");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::UnknownName);
  }
  CHECK(t.at("4_1m").name == "4_1");
}

TEST_CASE("seeds identify without scrambling") {
  Rng rng(0);
  for (const auto& c : testing::table().classes())
    CHECK(identify(c.seed, testing::table(), default_effort(), rng) == std::optional<std::string>(c.name));
  CHECK(identify(testing::unknot2(), testing::table(), default_effort(), rng) == std::optional<std::string>("0_1"));
}

TEST_CASE("identify is mirror equivariant") {
  Rng rng(1);
  const auto& t = testing::table();
  for (const auto& c : t.classes()) {
    const auto g = testing::small_scramble(c.seed, 5, 80, 14);
    const auto a = identify(g, t, default_effort(), rng);
    const auto b = identify(mirror(g), t, default_effort(), rng);
    if (a && b)
      CHECK(*b == mirror_name(*a));
  }
}

TEST_CASE("identify rejects links") {
  Rng rng(2);
  try {
    identify(GridDiagram({0, 1, 2, 3}, {1, 0, 3, 2}), testing::table(), default_effort(), rng);
    FAIL("no throw");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotAKnot);
  }
}

TEST_CASE("knots outside the table are unknown") {
  const auto& t = testing::table();
  Rng rng(3);
  // aliases share a table key and are told apart by the Kauffman guard
  const auto aliases = json::parse(testing::slurp(testing::data_dir() / "aliases.json"));
  REQUIRE(aliases.size() == 6);
  for (const auto& a : aliases) {
    const auto g = parse_grid(a["grid"].dump());
    const auto& cls = t.at(a["aliases"].get<std::string>());
    CHECK(key(g) == cls.key);
    REQUIRE(cls.kauffman.has_value());
    CHECK(kauffman_polynomial(to_planar(g)) != *cls.kauffman);
    CHECK_MESSAGE(!identify(g, t, default_effort(), rng).has_value(), a["name"].get<std::string>());
  }
  CHECK_FALSE(t.at("3_1").kauffman.has_value());

  // a band on a scrambled 8-crossing seed that leaves the table
  bool found = false;
  for (std::uint64_t seed = 0; seed < 20 && !found; ++seed) {
    const auto g = testing::small_scramble(testing::seed("8_19"), seed, 200, 14);
    for (const auto& m : enumerate_bands(g, BandKind::NonCoherent)) {
      const auto r = apply_band(g, m);
      if (identify(r, t, default_effort(), rng))
        continue;
      Rng again(3);
      const auto s = simplify(r, default_effort().back(), again);
      if (crossing_count(s) > 25)
        continue;
      found = true;
      CHECK_FALSE(t.lookup(key(s)).has_value());
      break;
    }
  }
  CHECK(found);
}

TEST_CASE("round trip through scramble") {
  const auto& t = testing::table();
  for (const char* name : {"3_1", "5_2m", "7_7", "8_15m", "3_1#4_1"}) {
    int hits = 0;
    for (std::uint64_t s = 0; s < 5; ++s) {
      ScramblePolicy p;
      p.rng_seed = s;
      Rng rng(s);
      const auto id = identify(scramble(t.at(name).seed, p), t, default_effort(), rng);
      hits += id == std::optional<std::string>(name) ? 1 : 0;
    }
    CHECK_MESSAGE(hits >= 4, name);
  }
}

TEST_CASE("cosmetic pairs") {
  const auto& t = testing::table();
  CHECK(is_cosmetic_pair(t, "7_3", "7_3m"));
  CHECK_FALSE(is_cosmetic_pair(t, "5_1", "5_1"));
  CHECK(is_cosmetic_pair(t, "5_1", "5_1m"));
  CHECK(is_cosmetic_pair(t, "4_1", "4_1"));
  CHECK(is_cosmetic_pair(t, "3_1#3_1m", "3_1#3_1m"));
  CHECK_FALSE(is_cosmetic_pair(t, "3_1#3_1", "3_1#3_1"));
  CHECK(is_cosmetic_pair(t, "3_1#3_1", "3_1m#3_1m"));
  CHECK_THROWS_AS(is_cosmetic_pair(t, "5_1", "9_42"), Error);
}

TEST_CASE("build verifies seeds and injectivity") {
  const auto seeds = testing::slurp(testing::data_dir() / "seeds.json");
  const auto refs = testing::slurp(testing::data_dir() / "reference_polynomials.json");
  const auto aliases = testing::slurp(testing::data_dir() / "aliases.json");
  CHECK(build_table(seeds, refs, aliases).size() == 78);

  // 3_1's grid listed under 4_1
  auto s = json::parse(seeds);
  json trefoil;
  for (auto& r : s)
    if (r["name"] == "3_1")
      trefoil = r["grid"];
  for (auto& r : s)
    if (r["name"] == "4_1")
      r["grid"] = trefoil;
  CHECK(build_error(s.dump(), refs) == ErrorCode::SeedMismatch);
  CHECK(message_of(s.dump(), refs).find("4_1") != std::string::npos);

  // two references made equal
  auto r = json::parse(refs);
  json first;
  for (auto& x : r)
    if (x["name"] == "5_2")
      first = x;
  for (auto& x : r)
    if (x["name"] == "7_2") {
      x["jones"] = first["jones"];
      x["alexander"] = first["alexander"];
    }
  for (auto& x : s)
    if (x["name"] == "7_2")
      for (auto& y : s)
        if (y["name"] == "5_2")
          x["grid"] = y["grid"];
  for (auto& x : s)
    if (x["name"] == "4_1")
      for (const auto& y : json::parse(seeds))
        if (y["name"] == "4_1")
          x["grid"] = y["grid"];
  CHECK(build_error(s.dump(), r.dump()) == ErrorCode::KeyCollision);

  // an alias whose key differs from its class
  auto a = json::parse(aliases);
  a[0]["aliases"] = "3_1";
  CHECK(build_error(seeds, refs, a.dump()) == ErrorCode::SeedMismatch);
  // an alias that is just the class's own seed
  auto same = json::parse(aliases);
  same[0]["aliases"] = "3_1";
  same[0]["grid"] = trefoil;
  CHECK(build_error(seeds, refs, same.dump()) == ErrorCode::KeyCollision);

  CHECK(build_error("not json", refs) == ErrorCode::ParseError);
}

TEST_CASE("default effort has two escalating levels") {
  const auto e = default_effort();
  REQUIRE(e.size() == 2);
  CHECK(e[1].rounds >= e[0].rounds);
  CHECK(e[1].patience >= e[0].patience);
}
