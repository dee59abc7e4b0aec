#include "common.hpp"

#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <set>

using namespace gridband;

namespace {

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected gridband::Error");
  return ErrorCode::ParseError;
}

// every valid grid with n <= max_n
template <class F> void for_all_grids(int max_n, F&& visit) {
  for (int n = 2; n <= max_n; ++n) {
    std::vector<int> xs(n);
    std::iota(xs.begin(), xs.end(), 0);
    do {
      std::vector<int> os(n);
      std::iota(os.begin(), os.end(), 0);
      do {
        bool ok = true;
        for (int r = 0; r < n; ++r)
          ok = ok && xs[r] != os[r];
        if (ok)
          visit(GridDiagram(xs, os));
      } while (std::next_permutation(os.begin(), os.end()));
    } while (std::next_permutation(xs.begin(), xs.end()));
  }
}

} // namespace

TEST_CASE("validate") {
  CHECK_NOTHROW(validate({0, 1}, {1, 0}));
  CHECK(code_of([] { validate({0, 1}, {0, 1}); }) == ErrorCode::SquareCollision);
  CHECK(code_of([] { validate({0, 0, 2}, {1, 2, 0}); }) == ErrorCode::NotAPermutation);
  CHECK(code_of([] { validate({0}, {0}); }) == ErrorCode::TooSmall);
  CHECK(code_of([] { validate({0, 5}, {1, 0}); }) == ErrorCode::NotAPermutation);
}

TEST_CASE("components") {
  CHECK(components(testing::unknot2()) == 1);
  CHECK(components(GridDiagram({0, 1, 2, 3}, {1, 0, 3, 2})) == 2);
  CHECK(components(GridDiagram({0, 1, 2}, {1, 2, 0})) == 1);
}

TEST_CASE("exhaustive small grids: components, crossings, mirror") {
  int grids = 0;
  for_all_grids(4, [&](const GridDiagram& g) {
    ++grids;
    CHECK(components(g) == oracle::components(g));
    CHECK(components(g) >= 1);
    CHECK(components(mirror(g)) == components(g));
    CHECK(mirror(mirror(g)) == g);

    const auto pd = to_planar(g);
    const auto expected = oracle::crossings(g);
    REQUIRE(pd.crossing_count() == static_cast<int>(expected.size()));
    CHECK(crossing_count(g) == pd.crossing_count());
    std::set<std::array<int, 2>> got;
    for (const auto& c : pd.crossings)
      got.insert({c.row, c.col});
    CHECK(got == std::set<std::array<int, 2>>(expected.begin(), expected.end()));
    CHECK(pd.components == components(g));

    const auto pm = to_planar(mirror(g));
    CHECK(pm.writhe() == -pd.writhe());
  });
  CHECK(grids == 2 + 6 * 2 + 24 * 9); // derangement pairs
}

TEST_CASE("planar diagram edges are each used twice") {
  for_all_grids(4, [&](const GridDiagram& g) {
    const auto pd = to_planar(g);
    std::vector<int> uses(pd.edge_count, 0);
    for (const auto& c : pd.crossings)
      for (int e : c.pd)
        ++uses[e];
    for (int u : uses)
      CHECK(u == 2);
  });
}

TEST_CASE("the shifted 4-grid is a two-crossing Hopf link") {
  const GridDiagram g({0, 1, 2, 3}, {2, 3, 0, 1});
  const auto pd = to_planar(g);
  CHECK(pd.crossing_count() == 2);
  CHECK(pd.components == 2);
  CHECK(oracle::crossings(g) == std::vector<std::array<int, 2>>{{1, 2}, {2, 1}});
  CHECK(kauffman_bracket(pd) == LaurentPolynomial{{4, -1}, {-4, -1}});
}

TEST_CASE("trefoil seed") {
  const auto g = testing::seed("3_1");
  CHECK(g.n() == 5);
  const auto pd = to_planar(g);
  CHECK(pd.components == 1);
  CHECK(pd.crossing_count() == 3);
  CHECK(pd.writhe() == 3);
}

TEST_CASE("mirror reflects columns") {
  const GridDiagram g({0, 2, 1}, {1, 0, 2});
  const auto m = mirror(g);
  CHECK(std::vector<int>(m.xs().begin(), m.xs().end()) == std::vector<int>{2, 0, 1});
  CHECK(std::vector<int>(m.os().begin(), m.os().end()) == std::vector<int>{1, 2, 0});
  CHECK(mirror(testing::unknot2()).n() == 2);
}

TEST_CASE("transpose is an involution preserving components") {
  for_all_grids(4, [&](const GridDiagram& g) {
    CHECK(transpose(transpose(g)) == g);
    CHECK(components(transpose(g)) == components(g));
  });
}

TEST_CASE("connect sum") {
  const auto u = testing::unknot2();
  const auto uu = connect_sum(u, u);
  CHECK(uu.n() == 3);
  CHECK(components(uu) == 1);
  const auto t = testing::seed("3_1");
  const auto tt = connect_sum(t, t);
  CHECK(tt.n() == 9);
  CHECK(components(tt) == 1);
  CHECK(code_of([] { connect_sum(GridDiagram({0, 1, 2, 3}, {1, 0, 3, 2}), testing::unknot2()); }) ==
        ErrorCode::NotAKnot);
}

TEST_CASE("erase types and orient") {
  const auto g = testing::seed("5_2");
  const auto u = erase_types(g);
  CHECK(u.n == g.n());
  const auto forward = orient(u, false);
  const auto backward = orient(u, true);
  CHECK(components(forward) == 1);
  CHECK(components(backward) == 1);
  // one traversal reproduces g or its reverse; both share the planar shadow
  CHECK(oracle::crossings(forward) == oracle::crossings(g));
  CHECK(oracle::crossings(backward) == oracle::crossings(g));

  UnorientedGrid two_loops{4, {{0, 1}, {0, 1}, {2, 3}, {2, 3}}};
  CHECK(code_of([&] { orient(two_loops); }) == ErrorCode::MultiComponent);
}

TEST_CASE("serialization") {
  const auto u = testing::unknot2();
  CHECK(serialize(u) == R"({"n":2,"x":[0,1],"o":[1,0]})");
  CHECK(parse_grid(serialize(u)) == u);
  for (const auto& c : testing::table().classes())
    CHECK(parse_grid(serialize(c.seed)) == c.seed);
  CHECK(serialize(testing::seed("3_1")) == testing::slurp(testing::test_data_dir() / "golden_3_1.json"));
  CHECK(code_of([] { parse_grid(R"({"n":3,"x":[0,0,2],"o":[1,2,0]})"); }) == ErrorCode::NotAPermutation);
  CHECK(code_of([] { parse_grid(R"({"n":2,"x":[0,1]})"); }) == ErrorCode::ParseError);
  CHECK(code_of([] { parse_grid("not json"); }) == ErrorCode::ParseError);
  CHECK(code_of([] { parse_grid(R"({"n":3,"x":[0,1],"o":[1,0]})"); }) == ErrorCode::ParseError);
}
