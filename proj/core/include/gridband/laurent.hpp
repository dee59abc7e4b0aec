#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace gridband {

/// Integer Laurent polynomial in one variable, stored densely between its
/// lowest and highest non-zero exponent. Zero is the empty polynomial. All
/// arithmetic is exact; overflow of a 64-bit coefficient throws
/// std::overflow_error.
class LaurentPolynomial {
public:
  using Coeff = std::int64_t;
  using Term = std::pair<int, Coeff>; // (exponent, coefficient)

  LaurentPolynomial() = default;
  LaurentPolynomial(Coeff constant); // NOLINT: integers promote naturally
  LaurentPolynomial(std::initializer_list<Term> terms);

  static LaurentPolynomial monomial(Coeff coeff, int exponent);
  static LaurentPolynomial from_terms(const std::vector<Term>& terms);

  bool is_zero() const noexcept { return coeffs_.empty(); }
  int min_exponent() const noexcept { return lo_; }
  int max_exponent() const noexcept { return lo_ + static_cast<int>(coeffs_.size()) - 1; }
  Coeff coefficient(int exponent) const noexcept;
  std::vector<Term> terms() const;
  std::size_t term_count() const noexcept;

  Coeff value_at_one() const;
  bool is_palindromic() const noexcept;

  /// x -> x^-1 (the mirror substitution for the bracket variable).
  LaurentPolynomial inverted() const;
  /// Multiplication by x^k.
  LaurentPolynomial shifted(int k) const;

  LaurentPolynomial& operator+=(const LaurentPolynomial& rhs);
  LaurentPolynomial& operator-=(const LaurentPolynomial& rhs);
  LaurentPolynomial& operator*=(const LaurentPolynomial& rhs);
  LaurentPolynomial operator-() const;

  friend LaurentPolynomial operator+(LaurentPolynomial a, const LaurentPolynomial& b) { return a += b; }
  friend LaurentPolynomial operator-(LaurentPolynomial a, const LaurentPolynomial& b) { return a -= b; }
  friend LaurentPolynomial operator*(const LaurentPolynomial& a, const LaurentPolynomial& b);
  friend bool operator==(const LaurentPolynomial&, const LaurentPolynomial&) = default;

  /// Quotient q with q * divisor == *this, or nullopt when the division is
  /// not exact over the integers.
  std::optional<LaurentPolynomial> divide_exact(const LaurentPolynomial& divisor) const;

  /// Sparse text form "coeff:exp,coeff:exp" in increasing exponent order;
  /// zero prints as "0".
  std::string to_text() const;
  static LaurentPolynomial parse(std::string_view text);

  std::size_t hash() const noexcept;

private:
  void trim();

  int lo_ = 0;
  std::vector<Coeff> coeffs_;
};

/// Integer Laurent polynomial in two variables (a, z), stored sparsely.
class BivariateLaurent {
public:
  using Coeff = std::int64_t;
  using Exponents = std::pair<int, int>; // (a, z)

  BivariateLaurent() = default;
  BivariateLaurent(Coeff constant); // NOLINT
  static BivariateLaurent monomial(Coeff coeff, int a_exp, int z_exp);

  bool is_zero() const noexcept { return terms_.empty(); }
  const std::map<Exponents, Coeff>& terms() const noexcept { return terms_; }

  BivariateLaurent& operator+=(const BivariateLaurent& rhs);
  BivariateLaurent& operator-=(const BivariateLaurent& rhs);
  BivariateLaurent operator-() const;
  /// Multiplication by a^i z^j.
  BivariateLaurent shifted(int a_exp, int z_exp) const;

  friend BivariateLaurent operator+(BivariateLaurent x, const BivariateLaurent& y) { return x += y; }
  friend BivariateLaurent operator-(BivariateLaurent x, const BivariateLaurent& y) { return x -= y; }
  friend BivariateLaurent operator*(const BivariateLaurent& x, const BivariateLaurent& y);
  friend bool operator==(const BivariateLaurent&, const BivariateLaurent&) = default;

  /// "coeff:a_exp:z_exp" terms sorted by (a, z); zero prints as "0".
  std::string to_text() const;
  static BivariateLaurent parse(std::string_view text);

private:
  void add_term(const Exponents& e, Coeff c);

  std::map<Exponents, Coeff> terms_;
};

} // namespace gridband

template <> struct std::hash<gridband::LaurentPolynomial> {
  std::size_t operator()(const gridband::LaurentPolynomial& p) const noexcept { return p.hash(); }
};
