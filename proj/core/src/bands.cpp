#include "gridband/bands.hpp"

#include "gridband/error.hpp"
#include "json_internal.hpp"

#include <algorithm>
#include <optional>

namespace gridband {

namespace {

constexpr BandVariant kAllVariants[] = {BandVariant::CoherentO, BandVariant::CoherentX, BandVariant::NonCoherentA,
                                        BandVariant::NonCoherentB};

// Row form of the move; columns go through transpose().
std::optional<GridDiagram> try_rows(const GridDiagram& g, int i, BandVariant v, ErrorCode* why) {
  const int n = g.n();
  const int j = (i + 1) % n;
  std::vector<int> xs(g.xs().begin(), g.xs().end());
  std::vector<int> os(g.os().begin(), g.os().end());
  const auto si = static_cast<std::size_t>(i);
  const auto sj = static_cast<std::size_t>(j);

  switch (v) {
  case BandVariant::CoherentO:
  case BandVariant::CoherentX: {
    if (v == BandVariant::CoherentO)
      std::swap(os[si], os[sj]);
    else
      std::swap(xs[si], xs[sj]);
    if (xs[si] == os[si] || xs[sj] == os[sj]) {
      *why = ErrorCode::SquareCollision;
      return std::nullopt;
    }
    return GridDiagram(std::move(xs), std::move(os));
  }
  case BandVariant::NonCoherentA:
  case BandVariant::NonCoherentB: {
    // Types are erased after the exchange, so only the marker positions
    // matter: line i keeps its O and gains line j's O column, and so on.
    UnorientedGrid u = erase_types(g);
    const int moved_from_i = v == BandVariant::NonCoherentA ? xs[si] : os[si];
    const int moved_from_j = v == BandVariant::NonCoherentA ? os[sj] : xs[sj];
    const int kept_i = v == BandVariant::NonCoherentA ? os[si] : xs[si];
    const int kept_j = v == BandVariant::NonCoherentA ? xs[sj] : os[sj];
    if (kept_i == moved_from_j || kept_j == moved_from_i) {
      *why = ErrorCode::SquareCollision;
      return std::nullopt;
    }
    u.rows[si] = {std::min(kept_i, moved_from_j), std::max(kept_i, moved_from_j)};
    u.rows[sj] = {std::min(kept_j, moved_from_i), std::max(kept_j, moved_from_i)};
    try {
      return orient(u);
    } catch (const Error& e) {
      *why = e.code();
      return std::nullopt;
    }
  }
  }
  *why = ErrorCode::InvalidPosition;
  return std::nullopt;
}

std::optional<GridDiagram> try_apply(const GridDiagram& g, const BandMove& m, ErrorCode* why) {
  const int n = g.n();
  if (m.index < 0 || m.index >= n) {
    *why = ErrorCode::InvalidPosition;
    return std::nullopt;
  }
  if (m.axis == Axis::Row)
    return try_rows(g, m.index, m.variant, why);
  auto t = try_rows(transpose(g), m.index, m.variant, why);
  if (!t)
    return std::nullopt;
  return transpose(*t);
}

} // namespace

std::string_view to_string(BandVariant v) noexcept {
  switch (v) {
  case BandVariant::CoherentO: return "cO";
  case BandVariant::CoherentX: return "cX";
  case BandVariant::NonCoherentA: return "ncA";
  case BandVariant::NonCoherentB: return "ncB";
  }
  return "?";
}

BandVariant parse_band_variant(std::string_view s) {
  for (BandVariant v : kAllVariants)
    if (to_string(v) == s)
      return v;
  throw Error(ErrorCode::ParseError, "unknown band variant '" + std::string(s) + "'");
}

std::vector<BandMove> enumerate_bands(const GridDiagram& g, BandKind kind) {
  std::vector<BandMove> out;
  for (Axis axis : {Axis::Row, Axis::Column}) {
    for (int i = 0; i < g.n(); ++i) {
      for (BandVariant v : kAllVariants) {
        BandMove m{axis, i, v};
        if ((kind == BandKind::Coherent && !m.coherent()) || (kind == BandKind::NonCoherent && m.coherent()))
          continue;
        ErrorCode why{};
        if (try_apply(g, m, &why))
          out.push_back(m);
      }
    }
  }
  return out;
}

GridDiagram apply_band(const GridDiagram& g, const BandMove& m) {
  ErrorCode why{};
  auto out = try_apply(g, m, &why);
  if (!out)
    throw Error(why, std::string("band ") + std::string(to_string(m.variant)) + " at " +
                         (m.axis == Axis::Row ? "row " : "column ") + std::to_string(m.index));
  return *out;
}

BandClass classify_band(const GridDiagram& g, const BandMove& m) {
  const GridDiagram out = apply_band(g, m);
  return {m.coherent(), components(out) - components(g)};
}

std::string serialize(const BandMove& m) { return detail::band_to_json(m).dump(); }

BandMove parse_band(std::string_view text) { return detail::band_from_json(detail::parse_json(text, "band move")); }

} // namespace gridband
