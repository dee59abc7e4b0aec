#include "gridband/laurent.hpp"

#include "gridband/error.hpp"

#include <algorithm>
#include <charconv>
#include <stdexcept>

namespace gridband {

namespace {

using Coeff = LaurentPolynomial::Coeff;

Coeff checked_add(Coeff a, Coeff b) {
  Coeff r;
  if (__builtin_add_overflow(a, b, &r))
    throw std::overflow_error("Laurent coefficient overflow");
  return r;
}

Coeff checked_mul(Coeff a, Coeff b) {
  Coeff r;
  if (__builtin_mul_overflow(a, b, &r))
    throw std::overflow_error("Laurent coefficient overflow");
  return r;
}

std::string_view trim_ws(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t'))
    s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\n' || s.back() == '\r'))
    s.remove_suffix(1);
  return s;
}

template <class T> void number(std::string_view s, T& value) {
  s = trim_ws(s);
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc{} || ptr != s.data() + s.size())
    throw Error(ErrorCode::ParseError, "bad polynomial number '" + std::string(s) + "'");
}

} // namespace

LaurentPolynomial::LaurentPolynomial(Coeff constant) {
  if (constant != 0)
    coeffs_.push_back(constant);
}

LaurentPolynomial::LaurentPolynomial(std::initializer_list<Term> terms)
    : LaurentPolynomial(from_terms(std::vector<Term>(terms))) {}

LaurentPolynomial LaurentPolynomial::monomial(Coeff coeff, int exponent) {
  LaurentPolynomial p;
  if (coeff != 0) {
    p.lo_ = exponent;
    p.coeffs_.push_back(coeff);
  }
  return p;
}

LaurentPolynomial LaurentPolynomial::from_terms(const std::vector<Term>& terms) {
  LaurentPolynomial p;
  if (terms.empty())
    return p;
  auto [lo_it, hi_it] = std::minmax_element(terms.begin(), terms.end(),
                                            [](const Term& a, const Term& b) { return a.first < b.first; });
  p.lo_ = lo_it->first;
  p.coeffs_.assign(static_cast<std::size_t>(hi_it->first - lo_it->first + 1), 0);
  for (const auto& [e, c] : terms) {
    auto& slot = p.coeffs_[static_cast<std::size_t>(e - p.lo_)];
    slot = checked_add(slot, c);
  }
  p.trim();
  return p;
}

void LaurentPolynomial::trim() {
  auto first = std::find_if(coeffs_.begin(), coeffs_.end(), [](Coeff c) { return c != 0; });
  if (first == coeffs_.end()) {
    coeffs_.clear();
    lo_ = 0;
    return;
  }
  auto last = std::find_if(coeffs_.rbegin(), coeffs_.rend(), [](Coeff c) { return c != 0; }).base();
  lo_ += static_cast<int>(first - coeffs_.begin());
  coeffs_.erase(last, coeffs_.end());
  coeffs_.erase(coeffs_.begin(), first);
}

Coeff LaurentPolynomial::coefficient(int exponent) const noexcept {
  if (is_zero() || exponent < lo_ || exponent > max_exponent())
    return 0;
  return coeffs_[static_cast<std::size_t>(exponent - lo_)];
}

std::vector<LaurentPolynomial::Term> LaurentPolynomial::terms() const {
  std::vector<Term> out;
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    if (coeffs_[i] != 0)
      out.emplace_back(lo_ + static_cast<int>(i), coeffs_[i]);
  return out;
}

std::size_t LaurentPolynomial::term_count() const noexcept {
  return static_cast<std::size_t>(std::count_if(coeffs_.begin(), coeffs_.end(), [](Coeff c) { return c != 0; }));
}

Coeff LaurentPolynomial::value_at_one() const {
  Coeff sum = 0;
  for (Coeff c : coeffs_)
    sum = checked_add(sum, c);
  return sum;
}

bool LaurentPolynomial::is_palindromic() const noexcept {
  if (is_zero())
    return true;
  return lo_ == -max_exponent() && std::equal(coeffs_.begin(), coeffs_.end(), coeffs_.rbegin());
}

LaurentPolynomial LaurentPolynomial::inverted() const {
  LaurentPolynomial p;
  if (is_zero())
    return p;
  p.lo_ = -max_exponent();
  p.coeffs_.assign(coeffs_.rbegin(), coeffs_.rend());
  return p;
}

LaurentPolynomial LaurentPolynomial::shifted(int k) const {
  LaurentPolynomial p = *this;
  if (!p.is_zero())
    p.lo_ += k;
  return p;
}

LaurentPolynomial& LaurentPolynomial::operator+=(const LaurentPolynomial& rhs) {
  if (rhs.is_zero())
    return *this;
  if (is_zero())
    return *this = rhs;
  const int lo = std::min(lo_, rhs.lo_);
  const int hi = std::max(max_exponent(), rhs.max_exponent());
  std::vector<Coeff> out(static_cast<std::size_t>(hi - lo + 1), 0);
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    out[static_cast<std::size_t>(lo_ - lo) + i] = coeffs_[i];
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) {
    auto& slot = out[static_cast<std::size_t>(rhs.lo_ - lo) + i];
    slot = checked_add(slot, rhs.coeffs_[i]);
  }
  lo_ = lo;
  coeffs_ = std::move(out);
  trim();
  return *this;
}

LaurentPolynomial LaurentPolynomial::operator-() const {
  LaurentPolynomial p = *this;
  for (Coeff& c : p.coeffs_)
    c = checked_mul(c, -1);
  return p;
}

LaurentPolynomial& LaurentPolynomial::operator-=(const LaurentPolynomial& rhs) { return *this += -rhs; }

LaurentPolynomial operator*(const LaurentPolynomial& a, const LaurentPolynomial& b) {
  LaurentPolynomial p;
  if (a.is_zero() || b.is_zero())
    return p;
  p.lo_ = a.lo_ + b.lo_;
  p.coeffs_.assign(a.coeffs_.size() + b.coeffs_.size() - 1, 0);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0)
      continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
      auto& slot = p.coeffs_[i + j];
      slot = checked_add(slot, checked_mul(a.coeffs_[i], b.coeffs_[j]));
    }
  }
  p.trim();
  return p;
}

LaurentPolynomial& LaurentPolynomial::operator*=(const LaurentPolynomial& rhs) { return *this = *this * rhs; }

std::optional<LaurentPolynomial> LaurentPolynomial::divide_exact(const LaurentPolynomial& divisor) const {
  if (divisor.is_zero())
    return std::nullopt;
  if (is_zero())
    return LaurentPolynomial{};
  const std::size_t dn = divisor.coeffs_.size();
  if (coeffs_.size() < dn)
    return std::nullopt;
  // Long division from the top coefficient down.
  std::vector<Coeff> rem = coeffs_;
  std::vector<Coeff> quot(coeffs_.size() - dn + 1, 0);
  const Coeff lead = divisor.coeffs_.back();
  for (std::size_t k = quot.size(); k-- > 0;) {
    const Coeff top = rem[k + dn - 1];
    if (top == 0)
      continue;
    if (top % lead != 0)
      return std::nullopt;
    const Coeff q = top / lead;
    quot[k] = q;
    for (std::size_t j = 0; j < dn; ++j)
      rem[k + j] = checked_add(rem[k + j], -checked_mul(q, divisor.coeffs_[j]));
  }
  if (std::any_of(rem.begin(), rem.end(), [](Coeff c) { return c != 0; }))
    return std::nullopt;
  LaurentPolynomial q;
  q.lo_ = lo_ - divisor.lo_;
  q.coeffs_ = std::move(quot);
  q.trim();
  return q;
}

std::string LaurentPolynomial::to_text() const {
  if (is_zero())
    return "0";
  std::string out;
  for (const auto& [e, c] : terms()) {
    if (!out.empty())
      out += ',';
    out += std::to_string(c);
    out += ':';
    out += std::to_string(e);
  }
  return out;
}

LaurentPolynomial LaurentPolynomial::parse(std::string_view text) {
  text = trim_ws(text);
  if (text == "0")
    return {};
  if (text.empty())
    throw Error(ErrorCode::ParseError, "empty polynomial text");
  std::vector<Term> terms;
  while (!text.empty()) {
    const auto comma = text.find(',');
    const std::string_view item = text.substr(0, comma);
    const auto colon = item.find(':');
    if (colon == std::string_view::npos)
      throw Error(ErrorCode::ParseError, "polynomial term without ':' in '" + std::string(item) + "'");
    Coeff c{};
    int e{};
    number(item.substr(0, colon), c);
    number(item.substr(colon + 1), e);
    terms.emplace_back(e, c);
    text = comma == std::string_view::npos ? std::string_view{} : text.substr(comma + 1);
  }
  return from_terms(terms);
}

std::size_t LaurentPolynomial::hash() const noexcept {
  std::size_t h = std::hash<int>{}(lo_);
  for (Coeff c : coeffs_)
    h ^= std::hash<Coeff>{}(c) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  return h;
}

BivariateLaurent::BivariateLaurent(Coeff constant) {
  if (constant != 0)
    terms_[{0, 0}] = constant;
}

BivariateLaurent BivariateLaurent::monomial(Coeff coeff, int a_exp, int z_exp) {
  BivariateLaurent p;
  p.add_term({a_exp, z_exp}, coeff);
  return p;
}

void BivariateLaurent::add_term(const Exponents& e, Coeff c) {
  if (c == 0)
    return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second = checked_add(it->second, c);
    if (it->second == 0)
      terms_.erase(it);
  }
}

BivariateLaurent& BivariateLaurent::operator+=(const BivariateLaurent& rhs) {
  for (const auto& [e, c] : rhs.terms_)
    add_term(e, c);
  return *this;
}

BivariateLaurent& BivariateLaurent::operator-=(const BivariateLaurent& rhs) {
  for (const auto& [e, c] : rhs.terms_)
    add_term(e, checked_mul(c, -1));
  return *this;
}

BivariateLaurent BivariateLaurent::operator-() const {
  BivariateLaurent out;
  return out -= *this;
}

BivariateLaurent BivariateLaurent::shifted(int a_exp, int z_exp) const {
  BivariateLaurent out;
  for (const auto& [e, c] : terms_)
    out.terms_.emplace_hint(out.terms_.end(), Exponents{e.first + a_exp, e.second + z_exp}, c);
  return out;
}

BivariateLaurent operator*(const BivariateLaurent& x, const BivariateLaurent& y) {
  BivariateLaurent out;
  for (const auto& [ex, cx] : x.terms_)
    for (const auto& [ey, cy] : y.terms_)
      out.add_term({ex.first + ey.first, ex.second + ey.second}, checked_mul(cx, cy));
  return out;
}

std::string BivariateLaurent::to_text() const {
  if (is_zero())
    return "0";
  std::string out;
  for (const auto& [e, c] : terms_) {
    if (!out.empty())
      out += ',';
    out += std::to_string(c) + ':' + std::to_string(e.first) + ':' + std::to_string(e.second);
  }
  return out;
}

BivariateLaurent BivariateLaurent::parse(std::string_view text) {
  text = trim_ws(text);
  if (text == "0")
    return {};
  if (text.empty())
    throw Error(ErrorCode::ParseError, "empty polynomial text");
  BivariateLaurent out;
  while (!text.empty()) {
    const auto comma = text.find(',');
    const std::string_view item = text.substr(0, comma);
    const auto c1 = item.find(':');
    const auto c2 = c1 == std::string_view::npos ? c1 : item.find(':', c1 + 1);
    if (c2 == std::string_view::npos)
      throw Error(ErrorCode::ParseError, "bivariate term needs coeff:a:z, got '" + std::string(item) + "'");
    Coeff c{};
    int ea{}, ez{};
    number(item.substr(0, c1), c);
    number(item.substr(c1 + 1, c2 - c1 - 1), ea);
    number(item.substr(c2 + 1), ez);
    out.add_term({ea, ez}, c);
    text = comma == std::string_view::npos ? std::string_view{} : text.substr(comma + 1);
  }
  return out;
}

} // namespace gridband
