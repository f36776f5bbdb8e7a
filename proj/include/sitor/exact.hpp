#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <stdexcept>
#include <string>

namespace sitor {

// Exact scalars used throughout the library. GMP-backed: cheap for small
// values, unbounded for large ones. Rationals are kept canonical by the
// backend (lowest terms, positive denominator).
using Int = boost::multiprecision::mpz_int;
using Rat = boost::multiprecision::mpq_rational;

// Matrix/vector shapes do not match the operation's contract.
struct DimensionError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Operation requires an invertible matrix.
struct SingularMatrixError : std::domain_error {
  using std::domain_error::domain_error;
};

// Caller violated a documented precondition.
struct ContractError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Input the library deliberately does not model.
struct UnsupportedError : std::domain_error {
  using std::domain_error::domain_error;
};

// Floor division/remainder; mod_floor(a, m) is in [0, m) for m > 0.
Int floor_div(const Int& a, const Int& b);
Int mod_floor(const Int& a, const Int& m);

// Fractional part in [0, 1).
Rat mod_one(const Rat& x);

bool is_integer(const Rat& x);

double to_double(const Rat& x);

// "p/q" when the denominator is not 1, otherwise "p".
std::string rat_to_string(const Rat& x);
Rat rat_from_string(const std::string& s);

std::string int_to_string(const Int& x);
Int int_from_string(const std::string& s);

}  // namespace sitor
