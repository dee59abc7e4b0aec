#include "common.hpp"

#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>
#include <set>

using namespace gridband;

namespace {

LaurentPolynomial jones_of(const GridDiagram& g) { return jones(to_planar(g), testing::kCap); }

// independent restatement of the interleaving rules for rows r, r+1
Interleaving classify(const GridDiagram& g, int r) {
  const int s = (r + 1) % g.n();
  const int a0 = std::min(g.x(r), g.o(r)), a1 = std::max(g.x(r), g.o(r));
  const int b0 = std::min(g.x(s), g.o(s)), b1 = std::max(g.x(s), g.o(s));
  if (a0 == b0 || a0 == b1 || a1 == b0 || a1 == b1)
    return Interleaving::SharedColumn;
  const bool a_in_b = (b0 < a0 && a0 < b1) != (b0 < a1 && a1 < b1);
  if (a_in_b)
    return Interleaving::Interleaved;
  if (a1 < b0 || b1 < a0)
    return Interleaving::Disjoint;
  return Interleaving::Nested;
}

bool equal_up_to_translation(const GridDiagram& a, const GridDiagram& b) {
  if (a.n() != b.n())
    return false;
  for (int dr = 0; dr < a.n(); ++dr)
    for (int dc = 0; dc < a.n(); ++dc)
      if (translate(translate(a, Axis::Row, dr), Axis::Column, dc) == b)
        return true;
  return false;
}

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

TEST_CASE("translate") {
  const auto u = testing::unknot2();
  const auto t = translate(u, Axis::Row, 1);
  CHECK(t == GridDiagram({1, 0}, {0, 1}));
  const auto g = testing::seed("5_2");
  for (Axis axis : {Axis::Row, Axis::Column}) {
    CHECK(translate(g, axis, 0) == g);
    CHECK(translate(g, axis, g.n()) == g);
    CHECK(translate(translate(g, axis, 3), axis, -3) == g);
    CHECK(key(translate(g, axis, 2)) == key(g));
  }
}

TEST_CASE("interleaving examples") {
  CHECK(interleaving(GridDiagram({0, 1, 2, 3}, {2, 3, 0, 1}), Axis::Row, 0) == Interleaving::Interleaved);
  CHECK(interleaving(GridDiagram({0, 1, 2}, {1, 2, 0}), Axis::Row, 0) == Interleaving::SharedColumn);
  CHECK(interleaving(GridDiagram({0, 2, 1, 3}, {1, 3, 0, 2}), Axis::Row, 0) == Interleaving::Disjoint);
  CHECK(interleaving(GridDiagram({0, 1, 3, 2}, {3, 2, 0, 1}), Axis::Row, 0) == Interleaving::Nested);
}

TEST_CASE("interleaving agrees with interval rules on all small grids") {
  for_all_grids(4, [](const GridDiagram& g) {
    for (int i = 0; i < g.n(); ++i) {
      CHECK(interleaving(g, Axis::Row, i) == classify(g, i));
      CHECK(interleaving(g, Axis::Column, i) == classify(transpose(g), i));
    }
  });
}

TEST_CASE("commutation legality on all small grids") {
  // legal exchanges must keep the Jones polynomial; forced exchanges of
  // interleaved rows are crossing changes and are allowed to differ
  int legal = 0;
  for_all_grids(4, [&](const GridDiagram& g) {
    const auto before = jones_of(g);
    for (Axis axis : {Axis::Row, Axis::Column})
      for (int i = 0; i < g.n(); ++i) {
        const auto kind = interleaving(g, axis, i);
        if (kind == Interleaving::Disjoint || kind == Interleaving::Nested) {
          ++legal;
          const auto h = commute(g, axis, i);
          CHECK(jones_of(h) == before);
          CHECK(components(h) == components(g));
        } else {
          CHECK_THROWS_AS(commute(g, axis, i), Error);
        }
      }
  });
  CHECK(legal > 0);
}

TEST_CASE("commute rejects interleaved and touching pairs") {
  const GridDiagram hopf({0, 1, 2, 3}, {2, 3, 0, 1});
  try {
    commute(hopf, Axis::Row, 0);
    FAIL("no throw");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::IllegalCommutation);
  }
  CHECK_THROWS_AS(commute(GridDiagram({0, 1, 2}, {1, 2, 0}), Axis::Row, 0), Error);
}

TEST_CASE("cross exchange") {
  const GridDiagram hopf({0, 1, 2, 3}, {2, 3, 0, 1});
  const auto h = cross_exchange(hopf, Axis::Row, 0);
  CHECK(components(h) == 2);
  CHECK(components(h) == oracle::components(h));
  CHECK(cross_exchange(h, Axis::Row, 0) == hopf);
  CHECK_THROWS_AS(cross_exchange(GridDiagram({0, 2, 1, 3}, {1, 3, 0, 2}), Axis::Row, 0), Error);

  const auto t = testing::seed("3_1");
  Rng rng(3);
  int found = 0;
  for (Axis axis : {Axis::Row, Axis::Column})
    for (int i = 0; i < t.n(); ++i)
      if (interleaving(t, axis, i) == Interleaving::Interleaved) {
        ++found;
        const auto r = cross_exchange(t, axis, i);
        CHECK(components(r) == 1);
        CHECK(cross_exchange(r, axis, i) == t);
        const auto id = identify(r, testing::table(), default_effort(), rng);
        REQUIRE(id.has_value());
        CHECK((*id == "0_1" || *id == "3_1"));
      }
  CHECK(found > 0);
}

TEST_CASE("destabilizations match the block scan") {
  const GridDiagram g({0, 1, 2}, {1, 2, 0});
  const auto sites = destabilizations(g);
  CHECK(std::any_of(sites.begin(), sites.end(), [](const Destabilization& d) { return d.row == 0 && d.col == 0; }));
  CHECK(destabilizations(testing::unknot2()).empty());

  for_all_grids(4, [](const GridDiagram& h) {
    if (h.n() < 3)
      return;
    std::set<std::array<int, 2>> got;
    for (const auto& d : destabilizations(h))
      got.insert({d.row, d.col});
    const auto want = oracle::destabilization_blocks(h);
    CHECK(got == std::set<std::array<int, 2>>(want.begin(), want.end()));
  });
}

TEST_CASE("destabilize") {
  const GridDiagram g({0, 1, 2}, {1, 2, 0});
  for (const auto& d : destabilizations(g)) {
    const auto h = destabilize(g, d);
    CHECK(h.n() == 2);
    CHECK(components(h) == 1);
  }
  const auto t = testing::seed("6_1");
  const auto s = stabilize(t, StabSpec{2, Marker::O, true, false});
  const auto sites = destabilizations(s);
  REQUIRE_FALSE(sites.empty());
  // a site becomes stale once the grid is translated under it
  Destabilization stale = sites.front();
  const auto moved = translate(s, Axis::Row, 1);
  const auto fresh = destabilizations(moved);
  if (std::find(fresh.begin(), fresh.end(), stale) == fresh.end()) {
    try {
      destabilize(moved, stale);
      FAIL("no throw");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::InvalidPosition);
    }
  }
}

TEST_CASE("stabilize then destabilize") {
  const auto u = testing::unknot2();
  for (Marker m : {Marker::X, Marker::O})
    for (bool above : {false, true})
      for (bool right : {false, true}) {
        const auto s = stabilize(u, StabSpec{0, m, above, right});
        CHECK(s.n() == 3);
        CHECK(key(s) == key(u));
      }

  std::mt19937_64 rng(99);
  const auto& classes = testing::table().classes();
  for (int trial = 0; trial < 100; ++trial) {
    const auto& c = classes[rng() % classes.size()];
    const auto g = testing::small_scramble(c.seed, rng(), 30);
    const StabSpec spec{static_cast<int>(rng() % g.n()), rng() % 2 ? Marker::X : Marker::O, rng() % 2 == 0,
                        rng() % 2 == 0};
    const auto s = stabilize(g, spec);
    REQUIRE(s.n() == g.n() + 1);
    CHECK(components(s) == components(g));
    CHECK(key(s, testing::kCap) == key(g, testing::kCap));
    const auto site = stabilization_site(g, spec);
    const auto sites = destabilizations(s);
    CHECK(std::find(sites.begin(), sites.end(), site) != sites.end());
    const auto back = destabilize(s, site);
    CHECK(back.n() == g.n());
    CHECK(equal_up_to_translation(back, g));
  }
}

TEST_CASE("random moves preserve validity and knot type") {
  std::mt19937_64 rng(5);
  const auto& classes = testing::table().classes();
  for (int trial = 0; trial < 200; ++trial) {
    const auto& c = classes[rng() % classes.size()];
    const auto g = testing::small_scramble(c.seed, rng(), 20, 11);
    const int i = static_cast<int>(rng() % g.n());
    const Axis axis = rng() % 2 ? Axis::Row : Axis::Column;
    std::vector<GridDiagram> out{translate(g, axis, i)};
    const auto kind = interleaving(g, axis, i);
    if (kind == Interleaving::Disjoint || kind == Interleaving::Nested)
      out.push_back(commute(g, axis, i));
    for (const auto& d : destabilizations(g))
      out.push_back(destabilize(g, d));
    for (const auto& h : out) {
      CHECK_NOTHROW(validate(std::vector<int>(h.xs().begin(), h.xs().end()),
                             std::vector<int>(h.os().begin(), h.os().end())));
      CHECK(components(h) == 1);
      CHECK(key(h, testing::kCap) == c.key);
    }
  }
}
