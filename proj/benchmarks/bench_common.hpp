#pragma once

#include <gridband/gridband.hpp>

#include <stdexcept>

inline const gridband::KnotTable& bench_table() {
  static const gridband::KnotTable t = gridband::load_table(GRIDBAND_DATA_DIR);
  return t;
}

// A scrambled grid of the class with `crossings` to `crossings` + 3 crossings.
inline gridband::GridDiagram bench_grid(const char* name, int crossings) {
  const auto& seed = bench_table().at(name).seed;
  gridband::ScramblePolicy p;
  p.moves = 200;
  for (std::uint64_t s = 0; s < 20000; ++s) {
    p.rng_seed = s;
    p.max_size = seed.n() + static_cast<int>(s % 12);
    auto g = gridband::scramble(seed, p);
    const int c = gridband::crossing_count(g);
    if (c >= crossings && c <= crossings + 3)
      return g;
  }
  throw std::runtime_error("no grid with the requested crossing count");
}
