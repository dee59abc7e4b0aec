#pragma once

#include <array>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace gridband {

enum class Marker { X, O };

/// An n x n grid diagram: one X and one O in every row and column, never
/// in the same square. Row 0 is the bottom row, column 0 the leftmost.
/// Horizontal arcs run O -> X, vertical arcs X -> O, vertical strands pass
/// over horizontal ones.
class GridDiagram {
public:
  /// Validates; throws Error{TooSmall | NotAPermutation | SquareCollision}.
  GridDiagram(std::vector<int> xs, std::vector<int> os);

  int n() const noexcept { return static_cast<int>(xs_.size()); }
  std::span<const int> xs() const noexcept { return xs_; }
  std::span<const int> os() const noexcept { return os_; }
  int x(int row) const { return xs_[static_cast<std::size_t>(row)]; }
  int o(int row) const { return os_[static_cast<std::size_t>(row)]; }
  int column(int row, Marker m) const { return m == Marker::X ? x(row) : o(row); }
  int row_of_x(int col) const { return x_row_[static_cast<std::size_t>(col)]; }
  int row_of_o(int col) const { return o_row_[static_cast<std::size_t>(col)]; }

  friend bool operator==(const GridDiagram& a, const GridDiagram& b) { return a.xs_ == b.xs_ && a.os_ == b.os_; }

private:
  std::vector<int> xs_, os_;
  std::vector<int> x_row_, o_row_;
};

GridDiagram validate(std::vector<int> xs, std::vector<int> os);

/// Number of link components: cycles of r -> row_of_o(x(r)).
int components(const GridDiagram& g);

/// Reflection in a vertical line; represents the mirror image.
GridDiagram mirror(const GridDiagram& g);

/// Reflection in the main diagonal (rows become columns). Used to express
/// column operations through row operations.
GridDiagram transpose(const GridDiagram& g);

/// Connected sum of two knot grids, size a.n() + b.n() - 1. Throws NotAKnot.
GridDiagram connect_sum(const GridDiagram& a, const GridDiagram& b);

/// Marker positions with the X/O types erased: two columns per row.
struct UnorientedGrid {
  int n = 0;
  std::vector<std::array<int, 2>> rows;
};

UnorientedGrid erase_types(const GridDiagram& g);

/// Re-decorate an unoriented grid by tracing its closed curve from the
/// leftmost marker of row 0 (rightward first, or leftward when `reverse`),
/// putting O at the tail and X at the head of every horizontal arc.
/// Throws MultiComponent if the curve does not visit every marker, and
/// NotAPermutation / TooSmall for malformed input.
GridDiagram orient(const UnorientedGrid& u, bool reverse = false);

/// {"n":..,"x":[..],"o":[..]}, compact and byte-stable.
std::string serialize(const GridDiagram& g);
/// Throws ParseError for malformed JSON, otherwise the validate errors.
GridDiagram parse_grid(std::string_view text);

} // namespace gridband
