#pragma once

#include "gridband/grid.hpp"

#include <vector>

namespace gridband {

enum class Axis { Row, Column };

/// Relation between the spans of two cyclically adjacent rows (or columns).
enum class Interleaving { Disjoint, Nested, Interleaved, SharedColumn };

/// Cyclic shift of all rows (or columns) by k; k is taken mod n.
GridDiagram translate(const GridDiagram& g, Axis axis, int k);

/// Classifies lines i and i+1 (mod n).
Interleaving interleaving(const GridDiagram& g, Axis axis, int i);

/// Exchanges lines i and i+1 (mod n) when their spans are disjoint or
/// nested; SharedColumn and Interleaved pairs throw IllegalCommutation.
GridDiagram commute(const GridDiagram& g, Axis axis, int i);

/// Exchanges an interleaved pair, changing one crossing. Throws
/// NotInterleaved for any other pair.
GridDiagram cross_exchange(const GridDiagram& g, Axis axis, int i);

/// A 2x2 block (rows row,row+1 and columns col,col+1, both mod n) holding
/// three markers; (empty_row, empty_col) is its unmarked square.
struct Destabilization {
  int row = 0;
  int col = 0;
  int empty_row = 0;
  int empty_col = 0;

  friend bool operator==(const Destabilization&, const Destabilization&) = default;
};

std::vector<Destabilization> destabilizations(const GridDiagram& g);

/// Collapses the block to one marker in its empty square, removing one row
/// and one column. Throws InvalidPosition if the block no longer holds
/// exactly those three markers.
GridDiagram destabilize(const GridDiagram& g, const Destabilization& site);

/// Replace the `marker` of row `row` by three markers in a 2x2 block; the
/// new row goes above (or below) and the new column right (or left).
struct StabSpec {
  int row = 0;
  Marker marker = Marker::X;
  bool above = true;
  bool right = true;
};

GridDiagram stabilize(const GridDiagram& g, const StabSpec& spec);

/// The block created by stabilize(g, spec), in the coordinates of the result.
Destabilization stabilization_site(const GridDiagram& g, const StabSpec& spec);

} // namespace gridband
