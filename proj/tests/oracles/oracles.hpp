#pragma once

// Slow reference implementations used only by the tests. They work from
// the grid coordinates directly and share no code with the library apart
// from the Laurent polynomial type.

#include <gridband/grid.hpp>
#include <gridband/laurent.hpp>
#include <gridband/planar.hpp>

#include <array>
#include <vector>

namespace oracle {

/// (row, col) of every crossing: col strictly inside row's horizontal span
/// and row strictly inside col's vertical span.
std::vector<std::array<int, 2>> crossings(const gridband::GridDiagram& g);

/// Components by walking marker to marker in the plane.
int components(const gridband::GridDiagram& g);

/// Kauffman bracket by summing all 2^c states, loops counted by union-find.
gridband::LaurentPolynomial naive_bracket(const gridband::PlanarDiagram& d);

/// Alexander polynomial from the grid's winding-number matrix:
/// det M = +-t^k (1 - t)^(n-1) Delta(t), determinant by subset expansion.
gridband::LaurentPolynomial grid_alexander(const gridband::GridDiagram& g);

/// (row, col) of the lower-left square of every cyclic 2x2 block holding
/// exactly three markers, found by scanning all n^2 blocks.
std::vector<std::array<int, 2>> destabilization_blocks(const gridband::GridDiagram& g);

} // namespace oracle
