#pragma once

#include "gridband/grid.hpp"

#include <array>
#include <vector>

namespace gridband {

/// One crossing in PD form: edges (a, b, c, d) counterclockwise, starting
/// at the incoming under-edge, so a -> c is the under strand and b, d are
/// the two halves of the over strand.
struct PlanarCrossing {
  std::array<int, 4> pd{};
  int sign = 0; // +1 right-handed, -1 left-handed
  int row = 0;  // grid square the crossing came from
  int col = 0;
};

/// Oriented link diagram; edges are numbered 0..edge_count-1 along each
/// component. Components that meet no crossing are counted in free_loops.
struct PlanarDiagram {
  std::vector<PlanarCrossing> crossings;
  int edge_count = 0;
  int components = 0;
  int free_loops = 0;

  int crossing_count() const noexcept { return static_cast<int>(crossings.size()); }
  int writhe() const noexcept;
};

/// Crossings at every square where a row's O-X span and a column's X-O span
/// both pass strictly through; the vertical strand is over.
PlanarDiagram to_planar(const GridDiagram& g);

/// Crossing count without building the diagram.
int crossing_count(const GridDiagram& g);

} // namespace gridband
