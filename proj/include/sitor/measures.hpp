#pragma once

#include <complex>
#include <optional>
#include <string>
#include <vector>

#include "sitor/linalg.hpp"
#include "sitor/number_field.hpp"

namespace sitor {

// A rational point of the n-torus: every coordinate lies in [0, 1) and has
// denominator dividing q (the lcm of the coordinate denominators).
struct TorusPointQ {
  long n = 0;
  std::vector<Rat> coords;
  Int q = 1;
};

// Coordinates are reduced mod 1.
TorusPointQ make_point(std::vector<Rat> coords);

bool operator==(const TorusPointQ& a, const TorusPointQ& b);
bool operator<(const TorusPointQ& a, const TorusPointQ& b);  // lexicographic

struct Atom {
  TorusPointQ point;
  Rat weight;
};

// Finitely supported probability measure with rational atoms. Weights are
// positive and sum to exactly 1; atoms are kept sorted and distinct
// (duplicate points are merged on construction).
struct AtomicMeasure {
  long n = 0;
  std::vector<Atom> atoms;
  Int q = 1;  // lcm of the atom denominators
};

AtomicMeasure make_atomic(std::vector<Atom> atoms);
AtomicMeasure dirac(TorusPointQ point);
AtomicMeasure uniform_on(std::vector<TorusPointQ> points);

bool operator==(const AtomicMeasure& a, const AtomicMeasure& b);

// Either the (symbolic) Lebesgue measure or a finitely supported atomic
// measure. Lebesgue carries no data: its Fourier coefficient is 1 at k = 0
// and 0 everywhere else.
struct MeasureSpec {
  enum class Variant { lebesgue, atomic };
  Variant variant = Variant::lebesgue;
  long n = 0;
  std::optional<AtomicMeasure> atomic;

  static MeasureSpec lebesgue(long n);
  static MeasureSpec of(AtomicMeasure mu);
};

struct FourierValue {
  std::complex<double> approx{0.0, 0.0};
  bool exactly_one = false;
  bool exactly_zero = false;
};

// The coefficient at the integer frequency row vector k. For atomic measures
// the exactness flags are decided exactly: exactly_one iff every k.x_j is an
// integer (weights are positive and sum to 1, so |value| = 1 forces all
// phases to 1), and exactly_zero iff the residue-class weight polynomial is
// divisible by the q-th cyclotomic polynomial. When a flag fires, approx is
// snapped to the exact value.
FourierValue fourier(const MeasureSpec& mu, const IntRowVec& k);

// Exact coefficient as an element of Q[x]/(Phi_q); field must be the
// cyclotomic field of the measure's denominator q.
FieldElem fourier_exact(const AtomicMeasure& mu, const IntRowVec& k, const FieldPtr& field);

// Image measure under x -> Ax mod Z^n; weights of colliding images add.
AtomicMeasure pushforward(const AtomicMeasure& mu, const IntMat& a);

// Pushforward equality for atomic measures; for Lebesgue, true whenever
// det(A) != 0 (a surjective endomorphism preserves Haar measure) and
// unsupported otherwise.
bool is_invariant(const MeasureSpec& mu, const IntMat& a);

// The closed condition k.x in Z cut out by a frequency with coefficient 1.
struct SupportConstraint {
  IntRowVec k;
  bool satisfied_by(const TorusPointQ& x) const;
  std::string describe() const;
};

SupportConstraint support_constraint(IntRowVec k);

// All torus points that can satisfy L x in Z^n: with M the maximum absolute
// row sum of L, every solution in [0,1)^n has the form L^-1 m for an integer
// vector m in [-M, M]^n. Any measure whose coefficients at the rows of L all
// equal 1 is supported inside the returned (finite, sorted) set.
std::vector<TorusPointQ> finite_support_candidates(const IntMat& l);

}  // namespace sitor
