#include "gridband/moves.hpp"

#include "gridband/error.hpp"

#include <algorithm>

namespace gridband {

namespace {

int wrap(int v, int n) { return ((v % n) + n) % n; }

std::vector<int> copy(std::span<const int> s) { return {s.begin(), s.end()}; }

GridDiagram swap_rows(const GridDiagram& g, int i, int j) {
  auto xs = copy(g.xs());
  auto os = copy(g.os());
  std::swap(xs[static_cast<std::size_t>(i)], xs[static_cast<std::size_t>(j)]);
  std::swap(os[static_cast<std::size_t>(i)], os[static_cast<std::size_t>(j)]);
  return {std::move(xs), std::move(os)};
}

Interleaving classify_rows(const GridDiagram& g, int i, int j) {
  const int a0 = std::min(g.x(i), g.o(i)), a1 = std::max(g.x(i), g.o(i));
  const int b0 = std::min(g.x(j), g.o(j)), b1 = std::max(g.x(j), g.o(j));
  if (a0 == b0 || a0 == b1 || a1 == b0 || a1 == b1)
    return Interleaving::SharedColumn;
  if (a1 < b0 || b1 < a0)
    return Interleaving::Disjoint;
  if ((a0 < b0 && b1 < a1) || (b0 < a0 && a1 < b1))
    return Interleaving::Nested;
  return Interleaving::Interleaved;
}

bool has_marker(const GridDiagram& g, int r, int c) { return g.x(r) == c || g.o(r) == c; }

// Block collapse for a block that does not wrap around the grid edge.
GridDiagram collapse(const GridDiagram& g, const Destabilization& s) {
  const int n = g.n();
  const int rm = s.empty_row == s.row ? s.row + 1 : s.row;
  const int cm = s.empty_col == s.col ? s.col + 1 : s.col;
  // The marker in row empty_row sitting in column cm moves to the empty square.
  std::vector<int> xs, os;
  xs.reserve(static_cast<std::size_t>(n - 1));
  os.reserve(static_cast<std::size_t>(n - 1));
  auto remap = [&](int c) { return c > cm ? c - 1 : c; };
  for (int r = 0; r < n; ++r) {
    if (r == rm)
      continue;
    int x = g.x(r), o = g.o(r);
    if (r == s.empty_row) {
      if (x == cm)
        x = s.empty_col;
      else
        o = s.empty_col;
    }
    xs.push_back(remap(x));
    os.push_back(remap(o));
  }
  return {std::move(xs), std::move(os)};
}

} // namespace

GridDiagram translate(const GridDiagram& g, Axis axis, int k) {
  const int n = g.n();
  k = wrap(k, n);
  std::vector<int> xs(static_cast<std::size_t>(n)), os(static_cast<std::size_t>(n));
  for (int r = 0; r < n; ++r) {
    if (axis == Axis::Row) {
      xs[static_cast<std::size_t>((r + k) % n)] = g.x(r);
      os[static_cast<std::size_t>((r + k) % n)] = g.o(r);
    } else {
      xs[static_cast<std::size_t>(r)] = (g.x(r) + k) % n;
      os[static_cast<std::size_t>(r)] = (g.o(r) + k) % n;
    }
  }
  return {std::move(xs), std::move(os)};
}

Interleaving interleaving(const GridDiagram& g, Axis axis, int i) {
  const int n = g.n();
  i = wrap(i, n);
  if (axis == Axis::Row)
    return classify_rows(g, i, (i + 1) % n);
  return classify_rows(transpose(g), i, (i + 1) % n);
}

GridDiagram commute(const GridDiagram& g, Axis axis, int i) {
  const auto kind = interleaving(g, axis, i);
  if (kind == Interleaving::Interleaved || kind == Interleaving::SharedColumn)
    throw Error(ErrorCode::IllegalCommutation, "lines " + std::to_string(i) + " and its successor are " +
                                                   (kind == Interleaving::Interleaved ? "interleaved" : "touching"));
  const int n = g.n();
  i = wrap(i, n);
  if (axis == Axis::Row)
    return swap_rows(g, i, (i + 1) % n);
  return transpose(swap_rows(transpose(g), i, (i + 1) % n));
}

GridDiagram cross_exchange(const GridDiagram& g, Axis axis, int i) {
  if (interleaving(g, axis, i) != Interleaving::Interleaved)
    throw Error(ErrorCode::NotInterleaved, "line pair at " + std::to_string(i) + " is not interleaved");
  const int n = g.n();
  i = wrap(i, n);
  if (axis == Axis::Row)
    return swap_rows(g, i, (i + 1) % n);
  return transpose(swap_rows(transpose(g), i, (i + 1) % n));
}

std::vector<Destabilization> destabilizations(const GridDiagram& g) {
  const int n = g.n();
  std::vector<Destabilization> out;
  if (n <= 2)
    return out;
  // A three-marker block always contains a row whose X and O sit in
  // cyclically adjacent columns; start from those rows.
  for (int r = 0; r < n; ++r) {
    const int a = g.x(r), b = g.o(r);
    int c;
    if (wrap(a + 1, n) == b)
      c = a;
    else if (wrap(b + 1, n) == a)
      c = b;
    else
      continue;
    const int c1 = (c + 1) % n;
    for (int other : {wrap(r - 1, n), (r + 1) % n}) {
      const bool left = has_marker(g, other, c);
      const bool right = has_marker(g, other, c1);
      if (left == right)
        continue;
      const int block_row = other == (r + 1) % n ? r : other;
      out.push_back({block_row, c, other, left ? c1 : c});
    }
  }
  std::sort(out.begin(), out.end(), [](const Destabilization& a, const Destabilization& b) {
    return std::tie(a.row, a.col, a.empty_row, a.empty_col) < std::tie(b.row, b.col, b.empty_row, b.empty_col);
  });
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

GridDiagram destabilize(const GridDiagram& g, const Destabilization& site) {
  const auto sites = destabilizations(g);
  if (std::find(sites.begin(), sites.end(), site) == sites.end())
    throw Error(ErrorCode::InvalidPosition, "no three-marker block at (" + std::to_string(site.row) + ", " +
                                                std::to_string(site.col) + ")");
  const int n = g.n();
  // Move a wrapping block inside the grid, collapse, then shift back.
  const int dr = site.row == n - 1 ? 1 : 0;
  const int dc = site.col == n - 1 ? 1 : 0;
  GridDiagram work = translate(translate(g, Axis::Row, dr), Axis::Column, dc);
  Destabilization s{(site.row + dr) % n, (site.col + dc) % n, (site.empty_row + dr) % n, (site.empty_col + dc) % n};
  GridDiagram out = collapse(work, s);
  return translate(translate(out, Axis::Row, -dr), Axis::Column, -dc);
}

Destabilization stabilization_site(const GridDiagram& g, const StabSpec& spec) {
  const int c = g.column(spec.row, spec.marker);
  const int orig_row = spec.above ? spec.row : spec.row + 1;
  const int orig_col = spec.right ? c : c + 1;
  return {spec.row, c, orig_row, orig_col};
}

GridDiagram stabilize(const GridDiagram& g, const StabSpec& spec) {
  const int n = g.n();
  if (spec.row < 0 || spec.row >= n)
    throw Error(ErrorCode::InvalidPosition, "stabilization row out of range");
  const int c = g.column(spec.row, spec.marker);
  const int row_ins = spec.above ? spec.row + 1 : spec.row;
  const int col_ins = spec.right ? c + 1 : c;
  const int R = spec.above ? spec.row : spec.row + 1; // original row, new index
  const int C = spec.right ? c : c + 1;               // original column, new index
  auto remap = [&](int col) { return col >= col_ins ? col + 1 : col; };

  std::vector<int> xs, os;
  xs.reserve(static_cast<std::size_t>(n + 1));
  os.reserve(static_cast<std::size_t>(n + 1));
  for (int r = 0; r <= n; ++r) {
    if (r == row_ins) {
      // New row: the opposite marker in the new column, a copy of `marker`
      // in the original column.
      if (spec.marker == Marker::X) {
        xs.push_back(C);
        os.push_back(col_ins);
      } else {
        os.push_back(C);
        xs.push_back(col_ins);
      }
      continue;
    }
    const int src = r < row_ins ? r : r - 1;
    int x = remap(g.x(src)), o = remap(g.o(src));
    if (r == R) {
      if (spec.marker == Marker::X)
        x = col_ins;
      else
        o = col_ins;
    }
    xs.push_back(x);
    os.push_back(o);
  }
  return {std::move(xs), std::move(os)};
}

} // namespace gridband
