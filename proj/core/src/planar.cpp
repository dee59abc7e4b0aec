#include "gridband/planar.hpp"

#include <algorithm>
#include <numeric>

namespace gridband {

namespace {

bool strictly_between(int v, int a, int b) { return std::min(a, b) < v && v < std::max(a, b); }

bool is_crossing(const GridDiagram& g, int r, int c) {
  return strictly_between(c, g.x(r), g.o(r)) && strictly_between(r, g.row_of_x(c), g.row_of_o(c));
}

struct Passage {
  int crossing;
  bool over;
  int dir; // +1 rightward/upward, -1 leftward/downward
};

struct Slots {
  int under_in = -1, under_out = -1, over_in = -1, over_out = -1;
  int h = 0, v = 0;
};

} // namespace

int PlanarDiagram::writhe() const noexcept {
  return std::accumulate(crossings.begin(), crossings.end(), 0,
                         [](int acc, const PlanarCrossing& x) { return acc + x.sign; });
}

int crossing_count(const GridDiagram& g) {
  int count = 0;
  for (int r = 0; r < g.n(); ++r) {
    const int lo = std::min(g.x(r), g.o(r));
    const int hi = std::max(g.x(r), g.o(r));
    for (int c = lo + 1; c < hi; ++c)
      count += strictly_between(r, g.row_of_x(c), g.row_of_o(c)) ? 1 : 0;
  }
  return count;
}

PlanarDiagram to_planar(const GridDiagram& g) {
  const int n = g.n();
  std::vector<int> id(static_cast<std::size_t>(n * n), -1);
  PlanarDiagram pd;
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c)
      if (is_crossing(g, r, c)) {
        id[static_cast<std::size_t>(r * n + c)] = pd.crossing_count();
        pd.crossings.push_back({{}, 0, r, c});
      }

  std::vector<Slots> slots(pd.crossings.size());
  std::vector<char> seen(static_cast<std::size_t>(n), 0);
  std::vector<Passage> walk;
  for (int start = 0; start < n; ++start) {
    if (seen[static_cast<std::size_t>(start)])
      continue;
    ++pd.components;
    walk.clear();
    int r = start;
    do {
      seen[static_cast<std::size_t>(r)] = 1;
      const int h = g.x(r) > g.o(r) ? 1 : -1;
      for (int c = g.o(r) + h; c != g.x(r); c += h)
        if (int k = id[static_cast<std::size_t>(r * n + c)]; k >= 0)
          walk.push_back({k, false, h});
      const int col = g.x(r);
      const int next = g.row_of_o(col);
      const int v = next > r ? 1 : -1;
      for (int rr = r + v; rr != next; rr += v)
        if (int k = id[static_cast<std::size_t>(rr * n + col)]; k >= 0)
          walk.push_back({k, true, v});
      r = next;
    } while (r != start);

    if (walk.empty()) {
      ++pd.free_loops;
      continue;
    }
    const int m = static_cast<int>(walk.size());
    const int base = pd.edge_count;
    for (int k = 0; k < m; ++k) {
      const int in = base + (k + m - 1) % m;
      const int out = base + k;
      auto& s = slots[static_cast<std::size_t>(walk[static_cast<std::size_t>(k)].crossing)];
      if (walk[static_cast<std::size_t>(k)].over) {
        s.over_in = in;
        s.over_out = out;
        s.v = walk[static_cast<std::size_t>(k)].dir;
      } else {
        s.under_in = in;
        s.under_out = out;
        s.h = walk[static_cast<std::size_t>(k)].dir;
      }
    }
    pd.edge_count += m;
  }

  for (std::size_t k = 0; k < slots.size(); ++k) {
    const Slots& s = slots[k];
    const int south = s.v > 0 ? s.over_in : s.over_out;
    const int north = s.v > 0 ? s.over_out : s.over_in;
    // Counterclockwise from the incoming under-edge: W,S,E,N when the under
    // strand runs rightward, E,N,W,S when it runs leftward.
    auto& x = pd.crossings[k];
    x.pd = s.h > 0 ? std::array<int, 4>{s.under_in, south, s.under_out, north}
                   : std::array<int, 4>{s.under_in, north, s.under_out, south};
    x.sign = -s.v * s.h;
  }
  return pd;
}

} // namespace gridband
