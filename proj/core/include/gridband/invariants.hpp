#pragma once

#include "gridband/grid.hpp"
#include "gridband/laurent.hpp"
#include "gridband/planar.hpp"

namespace gridband {

/// Diagrams above this many crossings are refused by the invariant code.
inline constexpr int kDefaultCrossingCap = 25;

/// Kauffman bracket in A with <unknot> = 1 and loop value -A^2 - A^-2.
/// Evaluated by sweeping crossings and keeping one polynomial per planar
/// pairing of the open edges. Throws TooManyCrossings above `crossing_cap`.
LaurentPolynomial kauffman_bracket(const PlanarDiagram& d, int crossing_cap = kDefaultCrossingCap);

/// Writhe-normalized bracket (-A^3)^(-w) <D>; the Jones polynomial with
/// t = A^-4.
LaurentPolynomial jones(const PlanarDiagram& d, int crossing_cap = kDefaultCrossingCap);

/// Alexander polynomial from the Wirtinger presentation (Fox derivatives,
/// one row and column deleted), normalized to be palindromic with value 1
/// at t = 1. Throws NotAKnot for links.
LaurentPolynomial alexander(const PlanarDiagram& d, int crossing_cap = kDefaultCrossingCap);

/// Symmetrize an Alexander-type determinant: shift to a palindromic range
/// and fix the sign so the value at 1 is positive.
LaurentPolynomial normalize_alexander(const LaurentPolynomial& p);

/// Kauffman polynomial in its Dubrovnik form, a^-w D with D(unknot) = 1,
/// D(L+) - D(L-) = z (D(L0) - D(Linf)) and a factor a per positive curl.
/// Crossings are switched toward a descending diagram, with curls and
/// bigons removed first. Exponential in the worst case; throws NotAKnot
/// for links and TooManyCrossings above `crossing_cap`.
BivariateLaurent kauffman_polynomial(const PlanarDiagram& d, int crossing_cap = kDefaultCrossingCap);

struct InvariantKey {
  LaurentPolynomial jones;
  LaurentPolynomial alexander;

  friend bool operator==(const InvariantKey&, const InvariantKey&) = default;
};

InvariantKey key(const GridDiagram& g, int crossing_cap = kDefaultCrossingCap);

/// Key of the mirror image: Jones variable inverted, Alexander unchanged.
InvariantKey mirror(const InvariantKey& k);

} // namespace gridband
