#pragma once

#include "gridband/grid.hpp"
#include "gridband/moves.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace gridband {

/// The four marker exchanges between lines i and i+1 (mod n).
///   CoherentO / CoherentX: the two O's (X's) trade places, positions along
///     the line kept. Changes the component count by one.
///   NonCoherentA: the X of line i trades with the O of line i+1.
///   NonCoherentB: the O of line i trades with the X of line i+1.
/// Non-coherent results are re-oriented along the traced curve.
enum class BandVariant { CoherentO, CoherentX, NonCoherentA, NonCoherentB };

enum class BandKind { Coherent, NonCoherent, All };

struct BandMove {
  Axis axis = Axis::Row;
  int index = 0;
  BandVariant variant = BandVariant::NonCoherentA;

  bool coherent() const noexcept {
    return variant == BandVariant::CoherentO || variant == BandVariant::CoherentX;
  }
  friend bool operator==(const BandMove&, const BandMove&) = default;
};

/// "cO", "cX", "ncA", "ncB".
std::string_view to_string(BandVariant v) noexcept;
BandVariant parse_band_variant(std::string_view s);

/// Every move of the requested kind, over all row and column pairs, whose
/// application yields a valid grid; degenerate ones are left out.
std::vector<BandMove> enumerate_bands(const GridDiagram& g, BandKind kind);

/// Throws SquareCollision when the exchange would put an X and an O in one
/// square, MultiComponent when a non-coherent exchange splits the curve.
GridDiagram apply_band(const GridDiagram& g, const BandMove& m);

struct BandClass {
  bool coherent = false;
  int component_delta = 0;
};

/// Classification by variant together with the observed component change.
BandClass classify_band(const GridDiagram& g, const BandMove& m);

/// {"axis":"row"|"col","i":..,"variant":"cO"|"cX"|"ncA"|"ncB"}
std::string serialize(const BandMove& m);
BandMove parse_band(std::string_view text);

} // namespace gridband
