#include "sitor/polynomial.hpp"

#include <sstream>

namespace sitor {

namespace {
const Rat kZero(0);
}

RatPoly::RatPoly(std::vector<Rat> coeffs) : coeffs_(std::move(coeffs)) { normalize(); }

RatPoly::RatPoly(std::initializer_list<long long> ints) {
  coeffs_.reserve(ints.size());
  for (long long v : ints) coeffs_.emplace_back(v);
  normalize();
}

RatPoly RatPoly::constant(const Rat& c) { return RatPoly(std::vector<Rat>{c}); }

RatPoly RatPoly::x() { return RatPoly({0, 1}); }

RatPoly RatPoly::monomial(const Rat& c, size_t k) {
  std::vector<Rat> v(k + 1, Rat(0));
  v[k] = c;
  return RatPoly(std::move(v));
}

bool RatPoly::is_monic() const { return !is_zero() && coeffs_.back() == 1; }

const Rat& RatPoly::coeff(size_t i) const { return i < coeffs_.size() ? coeffs_[i] : kZero; }

const Rat& RatPoly::leading() const {
  if (is_zero()) throw ContractError("leading coefficient of the zero polynomial");
  return coeffs_.back();
}

bool RatPoly::has_integer_coeffs() const {
  for (const Rat& c : coeffs_)
    if (!is_integer(c)) return false;
  return true;
}

void RatPoly::normalize() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

RatPoly RatPoly::operator-() const {
  RatPoly r = *this;
  for (Rat& c : r.coeffs_) c = -c;
  return r;
}

RatPoly& RatPoly::operator+=(const RatPoly& o) {
  if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Rat(0));
  for (size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  normalize();
  return *this;
}

RatPoly& RatPoly::operator-=(const RatPoly& o) {
  if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Rat(0));
  for (size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  normalize();
  return *this;
}

RatPoly operator*(const RatPoly& a, const RatPoly& b) {
  if (a.is_zero() || b.is_zero()) return RatPoly();
  std::vector<Rat> out(a.coeffs_.size() + b.coeffs_.size() - 1, Rat(0));
  for (size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return RatPoly(std::move(out));
}

RatPoly operator*(const Rat& c, const RatPoly& p) {
  if (c == 0) return RatPoly();
  RatPoly r = p;
  for (Rat& v : r.coeffs_) v *= c;
  return r;
}

Rat RatPoly::eval(const Rat& x) const {
  Rat acc(0);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

double RatPoly::eval(double x) const {
  double acc = 0.0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + to_double(*it);
  return acc;
}

RatPoly RatPoly::compose(const RatPoly& inner) const {
  RatPoly acc;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
    acc = acc * inner + RatPoly::constant(*it);
  return acc;
}

std::string RatPoly::pretty(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (long i = degree(); i >= 0; --i) {
    const Rat& c = coeff(static_cast<size_t>(i));
    if (c == 0) continue;
    const bool neg = c < 0;
    Rat mag = neg ? Rat(-c) : c;
    if (first) {
      if (neg) os << "-";
      first = false;
    } else {
      os << (neg ? " - " : " + ");
    }
    const bool unit = (mag == 1) && i != 0;
    if (!unit) os << rat_to_string(mag);
    if (i > 0) {
      os << var;
      if (i > 1) os << "^" << i;
    }
  }
  return os.str();
}

std::pair<RatPoly, RatPoly> divmod(const RatPoly& a, const RatPoly& b) {
  if (b.is_zero()) throw ContractError("polynomial division by zero");
  if (a.degree() < b.degree()) return {RatPoly(), a};
  std::vector<Rat> rem = a.coeffs();
  const long db = b.degree();
  std::vector<Rat> quot(static_cast<size_t>(a.degree() - db + 1), Rat(0));
  for (long i = a.degree(); i >= db; --i) {
    const Rat c = rem[static_cast<size_t>(i)] / b.leading();
    if (c == 0) continue;
    quot[static_cast<size_t>(i - db)] = c;
    for (long j = 0; j <= db; ++j)
      rem[static_cast<size_t>(i - db + j)] -= c * b.coeff(static_cast<size_t>(j));
  }
  return {RatPoly(std::move(quot)), RatPoly(std::move(rem))};
}

RatPoly exact_div(const RatPoly& a, const RatPoly& b) {
  auto [q, r] = divmod(a, b);
  if (!r.is_zero()) throw ContractError("exact_div: nonzero remainder");
  return q;
}

}  // namespace sitor
