#include "common.hpp"

#include <doctest.h>

#include <random>

using namespace gridband;

namespace {

// F(a = -A^3, z = A - A^-1), times (A - A^-1)^lift to clear negative z powers
LaurentPolynomial kauffman_to_jones(const BivariateLaurent& f, int lift) {
  const LaurentPolynomial z{{1, 1}, {-1, -1}};
  LaurentPolynomial out;
  for (const auto& [e, c] : f.terms()) {
    const auto [ea, ez] = e;
    LaurentPolynomial term = LaurentPolynomial::monomial(ea % 2 ? -c : c, 3 * ea);
    for (int k = 0; k < ez + lift; ++k)
      term *= z;
    out += term;
  }
  return out;
}

int min_z(const BivariateLaurent& f) {
  int m = 0;
  for (const auto& [e, c] : f.terms())
    m = std::min(m, e.second);
  return m;
}

BivariateLaurent mirror_kauffman(const BivariateLaurent& f) {
  BivariateLaurent out;
  for (const auto& [e, c] : f.terms())
    out += BivariateLaurent::monomial(e.second % 2 ? -c : c, -e.first, e.second);
  return out;
}

std::vector<GridDiagram> sample_grids(int count, int max_crossings, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  const auto& classes = testing::table().classes();
  std::vector<GridDiagram> out;
  while (static_cast<int>(out.size()) < count) {
    const auto& c = classes[rng() % classes.size()];
    auto g = testing::small_scramble(c.seed, rng(), 30, 12);
    if (crossing_count(g) <= max_crossings)
      out.push_back(std::move(g));
  }
  return out;
}

} // namespace

TEST_CASE("bracket of trivial diagrams") {
  CHECK(kauffman_bracket(to_planar(testing::unknot2())) == LaurentPolynomial{1});
  CHECK(jones(to_planar(testing::unknot2())) == LaurentPolynomial{1});
  const GridDiagram two_loops({1, 0, 3, 2}, {0, 1, 2, 3});
  const auto pd = to_planar(two_loops);
  REQUIRE(pd.crossing_count() == 0);
  CHECK(kauffman_bracket(pd) == LaurentPolynomial{{2, -1}, {-2, -1}});
}

TEST_CASE("bracket matches the state sum on seeds") {
  for (const auto& c : testing::table().classes()) {
    const auto pd = to_planar(c.seed);
    if (pd.crossing_count() > 14)
      continue;
    CHECK_MESSAGE(kauffman_bracket(pd) == oracle::naive_bracket(pd), c.name);
  }
}

TEST_CASE("bracket matches the state sum on links and scrambles") {
  const GridDiagram hopf({0, 1, 2, 3}, {2, 3, 0, 1});
  CHECK(kauffman_bracket(to_planar(hopf)) == oracle::naive_bracket(to_planar(hopf)));
  for (const auto& g : sample_grids(60, 12, 31)) {
    const auto pd = to_planar(g);
    CHECK(kauffman_bracket(pd) == oracle::naive_bracket(pd));
  }
  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 40; ++trial) {
    const auto g = sample_grids(1, 10, rng()).front();
    for (const auto& m : enumerate_bands(g, BandKind::Coherent)) {
      const auto pd = to_planar(apply_band(g, m));
      if (pd.crossing_count() <= 12)
        CHECK(kauffman_bracket(pd) == oracle::naive_bracket(pd));
    }
  }
}

TEST_CASE("crossing cap") {
  const auto pd = to_planar(testing::seed("8_19"));
  try {
    kauffman_bracket(pd, 4);
    FAIL("no throw");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::TooManyCrossings);
  }
  CHECK_THROWS_AS(alexander(pd, 4), Error);
  CHECK_THROWS_AS(kauffman_polynomial(pd, 4), Error);
}

TEST_CASE("Jones mirror law and chirality") {
  for (const auto& c : testing::table().classes()) {
    const auto j = jones(to_planar(c.seed));
    CHECK(jones(to_planar(mirror(c.seed))) == j.inverted());
    CHECK(key(mirror(c.seed)) == mirror(key(c.seed)));
    if (c.amphichiral)
      CHECK(j == j.inverted());
  }
  const auto t = jones(to_planar(testing::seed("3_1")));
  CHECK(t != t.inverted());
  // t + t^3 - t^4 with t = A^-4
  CHECK(t == LaurentPolynomial{{-4, 1}, {-12, 1}, {-16, -1}});
}

TEST_CASE("Alexander polynomial") {
  CHECK(alexander(to_planar(testing::unknot2())) == LaurentPolynomial{1});
  CHECK(alexander(to_planar(testing::seed("3_1"))) == LaurentPolynomial{{-1, 1}, {0, -1}, {1, 1}});
  for (const auto& c : testing::table().classes()) {
    const auto a = alexander(to_planar(c.seed));
    CHECK(a.is_palindromic());
    CHECK(a.value_at_one() == 1);
    CHECK(alexander(to_planar(mirror(c.seed))) == a);
    if (c.seed.n() <= 13)
      CHECK_MESSAGE(a == oracle::grid_alexander(c.seed), c.name);
  }
  try {
    alexander(to_planar(GridDiagram({0, 1, 2, 3}, {1, 0, 3, 2})));
    FAIL("no throw");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotAKnot);
  }
}

TEST_CASE("normalize_alexander") {
  const LaurentPolynomial raw{{3, -1}, {4, 1}, {5, -1}};
  CHECK(normalize_alexander(raw) == LaurentPolynomial{{-1, 1}, {0, -1}, {1, 1}});
}

TEST_CASE("multiplicativity under connected sum") {
  const std::vector<std::string> names{"0_1", "3_1", "3_1m", "4_1", "5_2", "6_1", "7_4m"};
  for (const auto& a : names)
    for (const auto& b : names) {
      const auto g = connect_sum(testing::seed(a), testing::seed(b));
      const auto ka = key(testing::seed(a)), kb = key(testing::seed(b)), k = key(g);
      CHECK(k.jones == ka.jones * kb.jones);
      CHECK(k.alexander == ka.alexander * kb.alexander);
      if (g.n() <= 13)
        CHECK(oracle::grid_alexander(g) == k.alexander);
    }
}

TEST_CASE("invariance under random isotopy moves") {
  std::mt19937_64 rng(77);
  for (const auto& g : sample_grids(200, 20, 41)) {
    const auto k = key(g);
    const int i = static_cast<int>(rng() % g.n());
    const Axis axis = rng() % 2 ? Axis::Row : Axis::Column;
    CHECK(key(translate(g, axis, i), testing::kCap) == k);
    const auto kind = interleaving(g, axis, i);
    if (kind == Interleaving::Disjoint || kind == Interleaving::Nested)
      CHECK(key(commute(g, axis, i), testing::kCap) == k);
    CHECK(key(stabilize(g, StabSpec{i, Marker::X, rng() % 2 == 0, rng() % 2 == 0}), testing::kCap) == k);
    for (const auto& d : destabilizations(g))
      CHECK(key(destabilize(g, d), testing::kCap) == k);
  }
}

TEST_CASE("Kauffman polynomial specializes to Jones and mirrors correctly") {
  for (const auto& c : testing::table().classes()) {
    const auto pd = to_planar(c.seed);
    const auto f = kauffman_polynomial(pd);
    const int lift = -min_z(f);
    LaurentPolynomial j = c.key.jones;
    for (int k = 0; k < lift; ++k)
      j *= LaurentPolynomial{{1, 1}, {-1, -1}};
    CHECK_MESSAGE(kauffman_to_jones(f, lift) == j, c.name);
    CHECK(kauffman_polynomial(to_planar(mirror(c.seed))) == mirror_kauffman(f));
  }
  CHECK(kauffman_polynomial(to_planar(testing::unknot2())) == BivariateLaurent{1});
}

TEST_CASE("Kauffman polynomial is unchanged by moves") {
  for (const auto& g : sample_grids(40, 16, 5)) {
    const auto f = kauffman_polynomial(to_planar(g));
    const auto sites = destabilizations(g);
    if (!sites.empty())
      CHECK(kauffman_polynomial(to_planar(destabilize(g, sites.front()))) == f);
    CHECK(kauffman_polynomial(to_planar(translate(g, Axis::Column, 1)), testing::kCap) == f);
  }
  CHECK_THROWS_AS(kauffman_polynomial(to_planar(GridDiagram({0, 1, 2, 3}, {1, 0, 3, 2}))), Error);
}

TEST_CASE("key of the unknot") {
  const auto k = key(testing::unknot2());
  CHECK(k.jones == LaurentPolynomial{1});
  CHECK(k.alexander == LaurentPolynomial{1});
  CHECK(mirror(k) == k);
}
