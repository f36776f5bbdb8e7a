#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "sitor/polynomial.hpp"

namespace sitor {

bool is_prime(unsigned long m);
unsigned long euler_phi(unsigned long m);

// The m-th cyclotomic polynomial, exact integer coefficients, computed by
// dividing x^m - 1 by the cyclotomic polynomials of the proper divisors.
RatPoly cyclotomic_poly(unsigned long m);

// Monic integer minimal polynomial of 2cos(2*pi/m) for m >= 3; its degree is
// phi(m)/2. Obtained by coefficient matching against the (palindromic)
// cyclotomic polynomial in the basis V_j(y) with z^j + z^-j = V_j(z + 1/z).
RatPoly real_cyclotomic_minpoly(unsigned long m);

// Minimal polynomial of 2 + 2cos(2*k*pi/m) for 1 <= k <= m-1: the angle
// reduces by g = gcd(k, m), then the real minimal polynomial of m/g is
// shifted by x -> x - 2.
RatPoly shifted_cos_minpoly(unsigned long m, unsigned long k);

struct DegreeCheck {
  unsigned long m = 0;
  long degree = 0;
  long expected = 0;
  bool equal = false;
};

// deg(cyclotomic_poly(m)) versus phi(m).
DegreeCheck cyclotomic_degree_check(unsigned long m);
// deg(real_cyclotomic_minpoly(m)) versus phi(m)/2, for m >= 3.
DegreeCheck real_cosine_degree_check(unsigned long m);

// A simple number field Q[x]/(minpoly). Irreducibility of the modulus is the
// caller's responsibility (the library only ever builds fields over
// cyclotomic and real-cyclotomic minimal polynomials); a rational-root screen
// rejects the easy mistakes.
class NumberField {
 public:
  explicit NumberField(RatPoly minpoly);
  long degree() const { return minpoly_.degree(); }
  const RatPoly& minpoly() const { return minpoly_; }
  friend bool operator==(const NumberField& a, const NumberField& b) {
    return a.minpoly_ == b.minpoly_;
  }

 private:
  RatPoly minpoly_;
};

using FieldPtr = std::shared_ptr<const NumberField>;

FieldPtr field_of(RatPoly minpoly);

// Residue representative in Q[x]/(minpoly): coords are the coefficients with
// respect to 1, theta, ..., theta^(deg-1).
class FieldElem {
 public:
  FieldElem(FieldPtr field, std::vector<Rat> coords);

  static FieldElem zero(FieldPtr field);
  static FieldElem one(FieldPtr field);
  static FieldElem generator(FieldPtr field);
  static FieldElem from_rational(FieldPtr field, const Rat& c);
  // Reduces an arbitrary polynomial modulo the field's minpoly.
  static FieldElem from_poly(FieldPtr field, const RatPoly& p);

  const FieldPtr& field() const { return field_; }
  const std::vector<Rat>& coords() const { return coords_; }
  RatPoly as_poly() const { return RatPoly(coords_); }

  bool is_zero() const;
  // The rational value when all higher coordinates vanish.
  std::optional<Rat> as_rational() const;

  FieldElem operator-() const;
  friend FieldElem operator+(const FieldElem& a, const FieldElem& b);
  friend FieldElem operator-(const FieldElem& a, const FieldElem& b);
  friend FieldElem operator*(const FieldElem& a, const FieldElem& b);
  friend FieldElem operator*(const Rat& c, const FieldElem& a);
  friend bool operator==(const FieldElem& a, const FieldElem& b);
  friend bool operator!=(const FieldElem& a, const FieldElem& b) { return !(a == b); }

  // Multiplicative inverse via the extended Euclidean algorithm against the
  // minpoly; throws ContractError on zero (or on a nontrivial common factor,
  // which would mean the modulus was not irreducible after all).
  FieldElem inverse() const;

 private:
  void check_compatible(const FieldElem& o) const;
  FieldPtr field_;
  std::vector<Rat> coords_;
};

// Horner evaluation of p at x, reducing in the field at each step.
FieldElem eval_poly(const RatPoly& p, const FieldElem& x);

FieldElem pow(const FieldElem& a, unsigned long e);

// The image of a under the substitution theta -> theta^t. For a cyclotomic
// field with theta = zeta_m and gcd(t, m) = 1 this is a Galois automorphism;
// t = m - 1 is complex conjugation.
FieldElem power_substitution(const FieldElem& a, unsigned long t);

}  // namespace sitor
