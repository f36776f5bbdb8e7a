#pragma once

#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "sitor/exact.hpp"

namespace sitor {

// Dense univariate polynomial over the rationals, coefficients stored in
// ascending degree order with no trailing zeros. The zero polynomial has an
// empty coefficient vector and degree -1.
class RatPoly {
 public:
  RatPoly() = default;
  explicit RatPoly(std::vector<Rat> coeffs);
  RatPoly(std::initializer_list<long long> ints);

  static RatPoly constant(const Rat& c);
  static RatPoly x();
  // x^k with rational coefficient c.
  static RatPoly monomial(const Rat& c, size_t k);

  long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  bool is_monic() const;
  // Coefficient of x^i (zero beyond the degree).
  const Rat& coeff(size_t i) const;
  const Rat& leading() const;
  const std::vector<Rat>& coeffs() const { return coeffs_; }

  bool has_integer_coeffs() const;

  RatPoly operator-() const;
  RatPoly& operator+=(const RatPoly& o);
  RatPoly& operator-=(const RatPoly& o);
  friend RatPoly operator+(RatPoly a, const RatPoly& b) { return a += b; }
  friend RatPoly operator-(RatPoly a, const RatPoly& b) { return a -= b; }
  friend RatPoly operator*(const RatPoly& a, const RatPoly& b);
  friend RatPoly operator*(const Rat& c, const RatPoly& p);
  friend bool operator==(const RatPoly& a, const RatPoly& b) { return a.coeffs_ == b.coeffs_; }

  Rat eval(const Rat& x) const;
  double eval(double x) const;

  // this(inner), expanded exactly.
  RatPoly compose(const RatPoly& inner) const;

  // Human-readable form, e.g. "x^2 - 3x + 1".
  std::string pretty(const std::string& var = "x") const;

 private:
  void normalize();
  std::vector<Rat> coeffs_;
};

// Quotient and remainder; divisor must be nonzero.
std::pair<RatPoly, RatPoly> divmod(const RatPoly& a, const RatPoly& b);

// Exact quotient; throws ContractError when the remainder is nonzero.
RatPoly exact_div(const RatPoly& a, const RatPoly& b);

}  // namespace sitor
