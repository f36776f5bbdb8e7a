#pragma once

#include <string>
#include <vector>

#include "sitor/linalg.hpp"
#include "sitor/polynomial.hpp"

namespace sitor {

// The two symmetric tridiagonal families handled by the library: diagonal a,
// unit off-diagonals, and for the M variant the last diagonal entry is a-1.
enum class TridiagVariant { M, N };

struct TridiagSpec {
  long n = 1;
  Rat a = Rat(2);
  TridiagVariant variant = TridiagVariant::M;
};

std::string variant_name(TridiagVariant v);
TridiagVariant variant_from_string(const std::string& s);

// Integer matrix for the spec; a must be an integer.
IntMat make_tridiag(const TridiagSpec& spec);

// Determinant by the three-term recurrence
//   f(j) = a f(j-1) - f(j-2),  f(1) = a-1, f(2) = a^2 - a - 1   (variant M)
//   g(j) = a g(j-1) - g(j-2),  g(1) = a,   g(2) = a^2 - 1       (variant N)
Rat det_recurrence(const TridiagSpec& spec);

struct ClosedFormReport {
  Rat value;
  std::string case_applied;  // "a=2", "a=-2", or "generic"
  std::string erratum_note;  // nonempty only for variant M with a=-2
};

// Case-split closed forms. For a = +-2 these are the explicit integer
// formulas; otherwise the value is assembled exactly from the power sums
// s_j = alpha^j + beta^j of the roots of y^2 - a y + 1, which satisfy the
// same recurrence with s_0 = 2, s_1 = a.
ClosedFormReport det_closed_form(const TridiagSpec& spec);

// Characteristic polynomial of the M variant at a = 2, in the eigenvalue
// variable: det(M_n(2 - x)) computed by the polynomial-valued recurrence.
// Leading coefficient (-1)^n, constant term 1.
RatPoly char_poly_m2(long n);

// Evaluates char_poly_m2(n) at x through the determinant recurrence. Horner
// on the expanded coefficients cancels catastrophically near the top of the
// spectrum once n gets past a dozen; the recurrence keeps every intermediate
// O(1) at points inside (0, 4).
double char_poly_m2_eval(long n, double x);

struct EigenvalueDescriptor {
  long n = 0;
  long k = 0;           // the root is 2 + 2cos(2*k*pi/(2n+1))
  double approx = 0.0;  // in (0, 4)
  RatPoly minpoly;
  std::string closed_form() const;
};

// The n roots of char_poly_m2(n) in ascending numeric order, each carrying
// its exact minimal polynomial.
std::vector<EigenvalueDescriptor> eigenvalues_m2(long n);

struct RationalRootReport {
  long n = 0;
  Int p_at_1;
  Int p_at_minus1;
  bool p_at_minus1_positive = false;
  bool has_rational_root = false;
  bool root_is_one = false;
};

// With constant term 1 and leading +-1 the only rational root candidates are
// +-1; p(-1) > 0 always, so everything hinges on the exact value p(1).
RationalRootReport rational_root_classification(long n);

}  // namespace sitor
