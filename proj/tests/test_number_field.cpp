#include <doctest.h>

#include <cmath>
#include <numeric>
#include <random>

#include "sitor/number_field.hpp"

using namespace sitor;

namespace {
constexpr double kTwoPi = 6.283185307179586476925286766559;
}

TEST_CASE("euler phi against the gcd-counting oracle") {
  CHECK(euler_phi(1) == 1);
  CHECK(euler_phi(5) == 4);
  CHECK(euler_phi(9) == 6);
  for (unsigned long m = 1; m <= 200; ++m) {
    unsigned long count = 0;
    for (unsigned long k = 1; k <= m; ++k)
      if (std::gcd(k, m) == 1) ++count;
    CHECK(euler_phi(m) == count);
  }
}

TEST_CASE("primality") {
  CHECK(is_prime(2));
  CHECK(is_prime(3));
  CHECK(is_prime(31));
  CHECK_FALSE(is_prime(1));
  CHECK_FALSE(is_prime(9));
  CHECK_FALSE(is_prime(21));
}

TEST_CASE("cyclotomic polynomials, frozen small cases") {
  CHECK(cyclotomic_poly(1) == RatPoly({-1, 1}));
  CHECK(cyclotomic_poly(5) == RatPoly({1, 1, 1, 1, 1}));
  CHECK(cyclotomic_poly(6) == RatPoly({1, -1, 1}));
  CHECK(cyclotomic_poly(12) == RatPoly({1, 0, -1, 0, 1}));
}

TEST_CASE("cyclotomic degree equals phi up to 100") {
  for (unsigned long m = 1; m <= 100; ++m) {
    const DegreeCheck c = cyclotomic_degree_check(m);
    CHECK(c.equal);
    CHECK(c.degree == static_cast<long>(euler_phi(m)));
  }
}

TEST_CASE("real cyclotomic minimal polynomials, frozen small cases") {
  CHECK(real_cyclotomic_minpoly(3) == RatPoly({1, 1}));
  CHECK(real_cyclotomic_minpoly(5) == RatPoly({-1, 1, 1}));
  CHECK(real_cyclotomic_minpoly(7) == RatPoly({-1, -2, 1, 1}));
  CHECK_THROWS_AS(real_cyclotomic_minpoly(2), std::domain_error);
}

TEST_CASE("real minimal polynomial: degree, integrality, numeric root") {
  for (unsigned long m = 3; m <= 100; ++m) {
    const RatPoly psi = real_cyclotomic_minpoly(m);
    CHECK(psi.degree() == static_cast<long>(euler_phi(m) / 2));
    CHECK(psi.is_monic());
    CHECK(psi.has_integer_coeffs());
    CHECK(real_cosine_degree_check(m).equal);
  }
  for (unsigned long m = 3; m <= 50; ++m) {
    const double root = 2.0 * std::cos(kTwoPi / static_cast<double>(m));
    CHECK(std::abs(real_cyclotomic_minpoly(m).eval(root)) < 1e-9);
  }
}

TEST_CASE("minimal polynomials of 2+2cos(2k*pi/m)") {
  CHECK(shifted_cos_minpoly(5, 1) == RatPoly({1, -3, 1}));
  CHECK(shifted_cos_minpoly(3, 1) == RatPoly({-1, 1}));
  CHECK(shifted_cos_minpoly(9, 3) == RatPoly({-1, 1}));  // gcd reduction to m = 3
  CHECK_THROWS_AS(shifted_cos_minpoly(5, 5), std::domain_error);
  CHECK_THROWS_AS(shifted_cos_minpoly(5, 0), std::domain_error);

  for (unsigned long m = 3; m <= 50; ++m)
    for (unsigned long k = 1; k < m; ++k) {
      const double value =
          2.0 + 2.0 * std::cos(kTwoPi * static_cast<double>(k) / static_cast<double>(m));
      CHECK(std::abs(shifted_cos_minpoly(m, k).eval(value)) < 1e-9);
    }
}

TEST_CASE("field construction") {
  CHECK(field_of(RatPoly({-1, 1, 1}))->degree() == 2);
  CHECK(field_of(RatPoly({-1, 1}))->degree() == 1);  // Q itself
  CHECK_THROWS_AS(field_of(RatPoly({-1, 0, 2})), ContractError);  // not monic
  CHECK_THROWS_AS(field_of(RatPoly({-1, 0, 1})), ContractError);  // root 1
}

TEST_CASE("polynomial evaluation in a field") {
  const FieldPtr f = field_of(RatPoly({-1, 1, 1}));  // Q[x]/(x^2+x-1)
  const FieldElem theta = FieldElem::generator(f);
  CHECK(eval_poly(f->minpoly(), theta).is_zero());
  CHECK(eval_poly(RatPoly({0, 1}), theta) == theta);
  // With theta = 2cos(2pi/5): x^2-3x+1 annihilates theta + 2.
  const FieldElem lambda = theta + FieldElem::from_rational(f, Rat(2));
  CHECK(eval_poly(RatPoly({1, -3, 1}), lambda).is_zero());
}

TEST_CASE("field arithmetic laws in Q[x]/(psi_7)") {
  const FieldPtr f = field_of(real_cyclotomic_minpoly(7));
  std::mt19937 rng(777);
  std::uniform_int_distribution<int> num(-4, 4);
  auto random_elem = [&] {
    std::vector<Rat> c(3);
    for (Rat& v : c) v = Rat(num(rng), 1 + std::abs(num(rng)));
    return FieldElem(f, std::move(c));
  };
  for (int trial = 0; trial < 100; ++trial) {
    const FieldElem a = random_elem(), b = random_elem(), c = random_elem();
    CHECK((a + b) + c == a + (b + c));
    CHECK(a * b == b * a);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    if (!a.is_zero()) CHECK(a * a.inverse() == FieldElem::one(f));
  }
  CHECK_THROWS_AS(FieldElem::zero(f).inverse(), ContractError);
}

TEST_CASE("power substitution realizes complex conjugation") {
  const FieldPtr f = field_of(cyclotomic_poly(5));
  const FieldElem zeta = FieldElem::generator(f);
  const FieldElem conj = power_substitution(zeta, 4);
  CHECK(zeta * conj == FieldElem::one(f));  // zeta * zeta^-1
  const FieldElem sum = zeta + conj;        // 2cos(2pi/5), a real algebraic number
  CHECK(eval_poly(RatPoly({-1, 1, 1}), sum).is_zero());
}
