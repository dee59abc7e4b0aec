#include "gridband/grid.hpp"

#include "gridband/error.hpp"
#include "json_internal.hpp"

#include <algorithm>

namespace gridband {

namespace {

std::vector<int> inverse(const std::vector<int>& perm, const char* what) {
  const int n = static_cast<int>(perm.size());
  std::vector<int> inv(perm.size(), -1);
  for (int r = 0; r < n; ++r) {
    const int c = perm[static_cast<std::size_t>(r)];
    if (c < 0 || c >= n)
      throw Error(ErrorCode::NotAPermutation,
                  std::string(what) + " column " + std::to_string(c) + " out of range in row " + std::to_string(r));
    if (inv[static_cast<std::size_t>(c)] != -1)
      throw Error(ErrorCode::NotAPermutation, std::string("duplicate ") + what + " column " + std::to_string(c));
    inv[static_cast<std::size_t>(c)] = r;
  }
  return inv;
}

// Cyclic shift of rows by dr and columns by dc.
GridDiagram shift(const GridDiagram& g, int dr, int dc) {
  const int n = g.n();
  std::vector<int> xs(static_cast<std::size_t>(n)), os(static_cast<std::size_t>(n));
  for (int r = 0; r < n; ++r) {
    const auto to = static_cast<std::size_t>(((r + dr) % n + n) % n);
    xs[to] = ((g.x(r) + dc) % n + n) % n;
    os[to] = ((g.o(r) + dc) % n + n) % n;
  }
  return {std::move(xs), std::move(os)};
}

} // namespace

GridDiagram::GridDiagram(std::vector<int> xs, std::vector<int> os) : xs_(std::move(xs)), os_(std::move(os)) {
  if (xs_.size() != os_.size())
    throw Error(ErrorCode::ParseError, "x and o arrays differ in length");
  if (xs_.size() < 2)
    throw Error(ErrorCode::TooSmall, "grid size must be at least 2");
  x_row_ = inverse(xs_, "X");
  o_row_ = inverse(os_, "O");
  for (std::size_t r = 0; r < xs_.size(); ++r)
    if (xs_[r] == os_[r])
      throw Error(ErrorCode::SquareCollision, "X and O share square (" + std::to_string(r) + ", " +
                                                  std::to_string(xs_[r]) + ")");
}

GridDiagram validate(std::vector<int> xs, std::vector<int> os) { return {std::move(xs), std::move(os)}; }

int components(const GridDiagram& g) {
  const int n = g.n();
  std::vector<char> seen(static_cast<std::size_t>(n), 0);
  int count = 0;
  for (int s = 0; s < n; ++s) {
    if (seen[static_cast<std::size_t>(s)])
      continue;
    ++count;
    for (int r = s; !seen[static_cast<std::size_t>(r)]; r = g.row_of_o(g.x(r)))
      seen[static_cast<std::size_t>(r)] = 1;
  }
  return count;
}

GridDiagram mirror(const GridDiagram& g) {
  const int n = g.n();
  std::vector<int> xs(g.xs().begin(), g.xs().end()), os(g.os().begin(), g.os().end());
  for (auto& c : xs)
    c = n - 1 - c;
  for (auto& c : os)
    c = n - 1 - c;
  return {std::move(xs), std::move(os)};
}

GridDiagram transpose(const GridDiagram& g) {
  const int n = g.n();
  std::vector<int> xs(static_cast<std::size_t>(n)), os(static_cast<std::size_t>(n));
  for (int c = 0; c < n; ++c) {
    xs[static_cast<std::size_t>(c)] = g.row_of_x(c);
    os[static_cast<std::size_t>(c)] = g.row_of_o(c);
  }
  return {std::move(xs), std::move(os)};
}

GridDiagram connect_sum(const GridDiagram& a_in, const GridDiagram& b_in) {
  if (components(a_in) != 1 || components(b_in) != 1)
    throw Error(ErrorCode::NotAKnot, "connect_sum needs two single-component grids");
  const int p = a_in.n();
  const int q = b_in.n();
  // Put an X of `a` in a's top-right corner and an O of `b` in b's bottom-left
  // corner, overlap the blocks in that one square and drop both corner markers.
  const GridDiagram a = shift(a_in, p - 1, p - 1 - a_in.x(0));
  const GridDiagram b = shift(b_in, 0, -b_in.o(0));
  const int m = p + q - 1;
  std::vector<int> xs(static_cast<std::size_t>(m)), os(static_cast<std::size_t>(m));
  for (int r = 0; r + 1 < p; ++r) {
    xs[static_cast<std::size_t>(r)] = a.x(r);
    os[static_cast<std::size_t>(r)] = a.o(r);
  }
  for (int r = 1; r < q; ++r) {
    xs[static_cast<std::size_t>(p - 1 + r)] = b.x(r) + p - 1;
    os[static_cast<std::size_t>(p - 1 + r)] = b.o(r) + p - 1;
  }
  os[static_cast<std::size_t>(p - 1)] = a.o(p - 1);
  xs[static_cast<std::size_t>(p - 1)] = b.x(0) + p - 1;
  return {std::move(xs), std::move(os)};
}

UnorientedGrid erase_types(const GridDiagram& g) {
  UnorientedGrid u;
  u.n = g.n();
  u.rows.reserve(static_cast<std::size_t>(g.n()));
  for (int r = 0; r < g.n(); ++r)
    u.rows.push_back({std::min(g.x(r), g.o(r)), std::max(g.x(r), g.o(r))});
  return u;
}

GridDiagram orient(const UnorientedGrid& u, bool reverse) {
  const int n = u.n;
  if (n < 2 || static_cast<int>(u.rows.size()) != n)
    throw Error(ErrorCode::TooSmall, "unoriented grid needs n >= 2 rows");
  std::vector<std::array<int, 2>> cols(static_cast<std::size_t>(n), {-1, -1});
  for (int r = 0; r < n; ++r) {
    const auto& row = u.rows[static_cast<std::size_t>(r)];
    if (row[0] == row[1])
      throw Error(ErrorCode::SquareCollision, "row " + std::to_string(r) + " holds two markers in one square");
    for (int c : row) {
      if (c < 0 || c >= n)
        throw Error(ErrorCode::NotAPermutation, "column out of range in row " + std::to_string(r));
      auto& slot = cols[static_cast<std::size_t>(c)];
      if (slot[0] == -1)
        slot[0] = r;
      else if (slot[1] == -1)
        slot[1] = r;
      else
        throw Error(ErrorCode::NotAPermutation, "column " + std::to_string(c) + " holds more than two markers");
    }
  }
  std::vector<int> xs(static_cast<std::size_t>(n), -1), os(static_cast<std::size_t>(n), -1);
  int row = 0;
  const auto& first = u.rows[0];
  int col = reverse ? std::max(first[0], first[1]) : std::min(first[0], first[1]);
  for (int step = 0; step < n; ++step) {
    const auto& pair = u.rows[static_cast<std::size_t>(row)];
    const int head = pair[0] == col ? pair[1] : pair[0];
    if (os[static_cast<std::size_t>(row)] != -1)
      break;
    os[static_cast<std::size_t>(row)] = col;
    xs[static_cast<std::size_t>(row)] = head;
    const auto& vert = cols[static_cast<std::size_t>(head)];
    row = vert[0] == row ? vert[1] : vert[0];
    col = head;
  }
  if (row != 0 || std::count(os.begin(), os.end(), -1) != 0)
    throw Error(ErrorCode::MultiComponent, "marker curve splits into several components");
  return {std::move(xs), std::move(os)};
}

std::string serialize(const GridDiagram& g) { return detail::grid_to_json(g).dump(); }

GridDiagram parse_grid(std::string_view text) {
  return detail::grid_from_json(detail::parse_json(text, "grid"));
}

} // namespace gridband
