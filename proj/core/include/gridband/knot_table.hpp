#pragma once

#include "gridband/grid.hpp"
#include "gridband/invariants.hpp"
#include "gridband/simplify.hpp"

#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace gridband {

struct KnotClass {
  std::string name;
  bool amphichiral = false;
  GridDiagram seed;
  InvariantKey key;
  /// Set when a knot outside the table shares `key`; identification then
  /// also compares this polynomial.
  std::optional<BivariateLaurent> kauffman;
  std::vector<std::string> aliases;
};

/// Canonical label: factors of a connected sum sorted by (crossing number,
/// index, mirrored) and joined with '#'; amphichiral factors never carry
/// the "m" suffix. "3_1m#3_1" -> "3_1#3_1m", "4_1m" -> "4_1".
std::string normalize_name(std::string_view name);
/// Normalized label of the mirror image ("3_1" <-> "3_1m").
std::string mirror_name(std::string_view name);
/// True for 0_1 and the amphichiral primes with at most 8 crossings.
bool is_amphichiral_prime(std::string_view base);

/// Immutable after build; safe for concurrent readers.
class KnotTable {
public:
  const std::vector<KnotClass>& classes() const noexcept { return classes_; }
  std::size_t size() const noexcept { return classes_.size(); }

  /// Accepts non-canonical spellings ("4_1m"); nullptr when absent.
  const KnotClass* find(std::string_view name) const;
  /// Throws UnknownName.
  const KnotClass& at(std::string_view name) const;

  /// Classes whose Jones polynomial equals `jones`.
  std::vector<const KnotClass*> with_jones(const LaurentPolynomial& jones) const;
  std::optional<std::string> lookup(const InvariantKey& k) const;

private:
  friend KnotTable build_table(std::string_view, std::string_view, std::string_view, int);

  std::vector<KnotClass> classes_;
  std::unordered_map<std::string, std::size_t> by_name_;
  std::unordered_map<LaurentPolynomial, std::vector<std::size_t>> by_jones_;
};

/// Seeds: JSON array of {name, grid}. References: JSON array of
/// {name, jones, alexander} in polynomial text form. Every supplied seed is
/// checked against its reference (SeedMismatch naming the class), chiral
/// classes get their mirror from mirror(seed), and the key -> name map must
/// be injective (KeyCollision listing the classes).
/// Aliases (optional, JSON array of {name, aliases, grid}) are knots outside
/// the table with the key of class `aliases`; each must have that key
/// (SeedMismatch) and a different Kauffman polynomial (KeyCollision).
KnotTable build_table(std::string_view seeds_json, std::string_view references_json,
                      std::string_view aliases_json = {}, int crossing_cap = kDefaultCrossingCap);

/// Reads seeds.json, reference_polynomials.json and, if present,
/// aliases.json from `dir`.
KnotTable load_table(const std::filesystem::path& dir);

/// Two levels: a quick pass and a patient one.
std::vector<SimplifyPolicy> default_effort();

/// Simplifies with each effort level in turn and looks the result up. An
/// empty optional means Unknown: a key outside the table, or a diagram still
/// above the crossing cap after the last level. Throws NotAKnot for links.
std::optional<std::string> identify(const GridDiagram& g, const KnotTable& t,
                                    std::span<const SimplifyPolicy> effort, Rng& rng,
                                    int crossing_cap = kDefaultCrossingCap);

/// True iff b is the mirror class of a (for amphichiral a, iff a == b).
/// Throws UnknownName.
bool is_cosmetic_pair(const KnotTable& t, std::string_view a, std::string_view b);

} // namespace gridband
