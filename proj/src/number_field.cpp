#include "sitor/number_field.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>

namespace sitor {

bool is_prime(unsigned long m) {
  if (m < 2) return false;
  if (m % 2 == 0) return m == 2;
  for (unsigned long d = 3; d * d <= m; d += 2)
    if (m % d == 0) return false;
  return true;
}

unsigned long euler_phi(unsigned long m) {
  if (m == 0) throw ContractError("euler_phi: m must be >= 1");
  unsigned long result = m;
  unsigned long rest = m;
  for (unsigned long p = 2; p * p <= rest; ++p) {
    if (rest % p != 0) continue;
    while (rest % p == 0) rest /= p;
    result -= result / p;
  }
  if (rest > 1) result -= result / rest;
  return result;
}

namespace {

std::vector<unsigned long> divisors_of(unsigned long m) {
  std::vector<unsigned long> divs;
  for (unsigned long d = 1; d * d <= m; ++d) {
    if (m % d != 0) continue;
    divs.push_back(d);
    if (d != m / d) divs.push_back(m / d);
  }
  std::sort(divs.begin(), divs.end());
  return divs;
}

RatPoly x_pow_minus_one(unsigned long m) {
  std::vector<Rat> c(m + 1, Rat(0));
  c[0] = -1;
  c[m] = 1;
  return RatPoly(std::move(c));
}

}  // namespace

RatPoly cyclotomic_poly(unsigned long m) {
  if (m == 0) throw ContractError("cyclotomic_poly: m must be >= 1");
  const auto divs = divisors_of(m);
  std::vector<RatPoly> table;
  table.reserve(divs.size());
  for (size_t i = 0; i < divs.size(); ++i) {
    RatPoly p = x_pow_minus_one(divs[i]);
    for (size_t j = 0; j < i; ++j)
      if (divs[i] % divs[j] == 0) p = exact_div(p, table[j]);
    table.push_back(std::move(p));
  }
  return table.back();
}

RatPoly real_cyclotomic_minpoly(unsigned long m) {
  if (m < 3) throw std::domain_error("real_cyclotomic_minpoly: m must be >= 3");
  const RatPoly cyc = cyclotomic_poly(m);
  const long d = cyc.degree() / 2;  // phi(m) is even for m >= 3
  // V_0 = 2, V_1 = y, V_{j+1} = y V_j - V_{j-1}; cyc is palindromic, so
  // cyc(z)/z^d = b_d + sum_{j=1..d} b_{d+j} (z^j + z^-j).
  RatPoly result = RatPoly::constant(cyc.coeff(static_cast<size_t>(d)));
  RatPoly v_prev = RatPoly::constant(Rat(2));
  RatPoly v_cur = RatPoly::x();
  for (long j = 1; j <= d; ++j) {
    result += cyc.coeff(static_cast<size_t>(d + j)) * v_cur;
    RatPoly v_next = RatPoly::x() * v_cur - v_prev;
    v_prev = std::move(v_cur);
    v_cur = std::move(v_next);
  }
  return result;
}

RatPoly shifted_cos_minpoly(unsigned long m, unsigned long k) {
  if (m < 1 || k < 1 || k > m - 1)
    throw std::domain_error("shifted_cos_minpoly: k must satisfy 1 <= k <= m-1");
  unsigned long g = std::gcd(k, m);
  const unsigned long reduced = m / g;
  if (reduced == 1) return RatPoly({-4, 1});  // value 2 + 2cos(0) = 4
  if (reduced == 2) return RatPoly({0, 1});   // value 2 + 2cos(pi) = 0
  const RatPoly shift({-2, 1});
  return real_cyclotomic_minpoly(reduced).compose(shift);
}

DegreeCheck cyclotomic_degree_check(unsigned long m) {
  DegreeCheck r;
  r.m = m;
  r.degree = cyclotomic_poly(m).degree();
  r.expected = static_cast<long>(euler_phi(m));
  r.equal = r.degree == r.expected;
  return r;
}

DegreeCheck real_cosine_degree_check(unsigned long m) {
  DegreeCheck r;
  r.m = m;
  r.degree = real_cyclotomic_minpoly(m).degree();
  r.expected = static_cast<long>(euler_phi(m) / 2);
  r.equal = r.degree == r.expected;
  return r;
}

namespace {

// Rejects moduli with an obvious rational root. Divisor enumeration is only
// attempted for constant/leading values that fit a machine word; larger ones
// are screened with the candidates +-1 alone.
void rational_root_screen(const RatPoly& p) {
  if (p.degree() < 2) return;
  Int scale = 1;
  for (const Rat& c : p.coeffs()) scale = lcm(scale, denominator(c));
  std::vector<Int> ic;
  for (const Rat& c : p.coeffs()) ic.push_back(numerator(Rat(c * scale)));
  const Int c0 = ic.front(), cl = ic.back();
  if (c0 == 0) throw ContractError("field modulus has the rational root 0");
  auto divisors_small = [](const Int& v) {
    std::vector<Int> out;
    const Int a = abs(v);
    if (a > 1000000) {
      out.push_back(1);
      return out;
    }
    const long long n = a.convert_to<long long>();
    for (long long d = 1; d * d <= n; ++d) {
      if (n % d != 0) continue;
      out.emplace_back(d);
      out.emplace_back(n / d);
    }
    return out;
  };
  for (const Int& num : divisors_small(c0))
    for (const Int& den : divisors_small(cl))
      for (int sign : {1, -1}) {
        const Rat cand(sign * num, den);
        if (p.eval(cand) == 0)
          throw ContractError("field modulus has rational root " + rat_to_string(cand));
      }
}

}  // namespace

NumberField::NumberField(RatPoly minpoly) : minpoly_(std::move(minpoly)) {
  if (minpoly_.degree() < 1) throw ContractError("field modulus must have degree >= 1");
  if (!minpoly_.is_monic()) throw ContractError("field modulus must be monic");
  rational_root_screen(minpoly_);
}

FieldPtr field_of(RatPoly minpoly) {
  return std::make_shared<const NumberField>(std::move(minpoly));
}

FieldElem::FieldElem(FieldPtr field, std::vector<Rat> coords)
    : field_(std::move(field)), coords_(std::move(coords)) {
  if (!field_) throw ContractError("FieldElem: null field");
  if (static_cast<long>(coords_.size()) != field_->degree())
    throw ContractError("FieldElem: coordinate count must equal the field degree");
}

FieldElem FieldElem::zero(FieldPtr field) {
  std::vector<Rat> c(static_cast<size_t>(field->degree()), Rat(0));
  return FieldElem(std::move(field), std::move(c));
}

FieldElem FieldElem::one(FieldPtr field) { return from_rational(std::move(field), Rat(1)); }

FieldElem FieldElem::generator(FieldPtr field) {
  return from_poly(std::move(field), RatPoly::x());
}

FieldElem FieldElem::from_rational(FieldPtr field, const Rat& c) {
  std::vector<Rat> v(static_cast<size_t>(field->degree()), Rat(0));
  v[0] = c;
  return FieldElem(std::move(field), std::move(v));
}

FieldElem FieldElem::from_poly(FieldPtr field, const RatPoly& p) {
  const RatPoly rem = divmod(p, field->minpoly()).second;
  std::vector<Rat> v(static_cast<size_t>(field->degree()), Rat(0));
  for (long i = 0; i <= rem.degree(); ++i) v[static_cast<size_t>(i)] = rem.coeff(static_cast<size_t>(i));
  return FieldElem(std::move(field), std::move(v));
}

bool FieldElem::is_zero() const {
  for (const Rat& c : coords_)
    if (c != 0) return false;
  return true;
}

std::optional<Rat> FieldElem::as_rational() const {
  for (size_t i = 1; i < coords_.size(); ++i)
    if (coords_[i] != 0) return std::nullopt;
  return coords_.empty() ? Rat(0) : coords_[0];
}

void FieldElem::check_compatible(const FieldElem& o) const {
  if (field_ != o.field_ && !(*field_ == *o.field_))
    throw ContractError("field elements live in different fields");
}

FieldElem FieldElem::operator-() const {
  FieldElem r = *this;
  for (Rat& c : r.coords_) c = -c;
  return r;
}

FieldElem operator+(const FieldElem& a, const FieldElem& b) {
  a.check_compatible(b);
  FieldElem r = a;
  for (size_t i = 0; i < r.coords_.size(); ++i) r.coords_[i] += b.coords_[i];
  return r;
}

FieldElem operator-(const FieldElem& a, const FieldElem& b) {
  a.check_compatible(b);
  FieldElem r = a;
  for (size_t i = 0; i < r.coords_.size(); ++i) r.coords_[i] -= b.coords_[i];
  return r;
}

FieldElem operator*(const FieldElem& a, const FieldElem& b) {
  a.check_compatible(b);
  return FieldElem::from_poly(a.field_, a.as_poly() * b.as_poly());
}

FieldElem operator*(const Rat& c, const FieldElem& a) {
  FieldElem r = a;
  for (Rat& v : r.coords_) v *= c;
  return r;
}

bool operator==(const FieldElem& a, const FieldElem& b) {
  a.check_compatible(b);
  return a.coords_ == b.coords_;
}

FieldElem FieldElem::inverse() const {
  if (is_zero()) throw ContractError("inverse of zero field element");
  // Extended Euclid: u*a + v*minpoly = gcd.
  RatPoly r0 = field_->minpoly(), r1 = as_poly();
  RatPoly u0, u1 = RatPoly::constant(Rat(1));
  while (!r1.is_zero()) {
    auto [q, r2] = divmod(r0, r1);
    RatPoly u2 = u0 - q * u1;
    r0 = std::move(r1);
    r1 = std::move(r2);
    u0 = std::move(u1);
    u1 = std::move(u2);
  }
  if (r0.degree() != 0)
    throw ContractError("element is a zero divisor; field modulus not irreducible");
  const Rat inv_lead = Rat(1) / r0.coeff(0);
  return from_poly(field_, inv_lead * u0);
}

FieldElem eval_poly(const RatPoly& p, const FieldElem& x) {
  FieldElem acc = FieldElem::zero(x.field());
  for (long i = p.degree(); i >= 0; --i)
    acc = acc * x + FieldElem::from_rational(x.field(), p.coeff(static_cast<size_t>(i)));
  return acc;
}

FieldElem pow(const FieldElem& a, unsigned long e) {
  FieldElem result = FieldElem::one(a.field());
  FieldElem base = a;
  while (e > 0) {
    if (e & 1UL) result = result * base;
    e >>= 1UL;
    if (e > 0) base = base * base;
  }
  return result;
}

FieldElem power_substitution(const FieldElem& a, unsigned long t) {
  const FieldElem image = pow(FieldElem::generator(a.field()), t);
  return eval_poly(a.as_poly(), image);
}

}  // namespace sitor
