#include "sitor/exact.hpp"

namespace sitor {

Int floor_div(const Int& a, const Int& b) {
  if (b == 0) throw std::domain_error("floor_div: division by zero");
  Int q = a / b;  // truncated
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

Int mod_floor(const Int& a, const Int& m) {
  if (m <= 0) throw std::domain_error("mod_floor: modulus must be positive");
  Int r = a % m;
  if (r < 0) r += m;
  return r;
}

Rat mod_one(const Rat& x) {
  const Int num = numerator(x);
  const Int den = denominator(x);
  return Rat(mod_floor(num, den), den);
}

bool is_integer(const Rat& x) { return denominator(x) == 1; }

double to_double(const Rat& x) { return x.convert_to<double>(); }

std::string rat_to_string(const Rat& x) {
  if (is_integer(x)) return numerator(x).str();
  return numerator(x).str() + "/" + denominator(x).str();
}

Rat rat_from_string(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("empty rational literal");
  const auto slash = s.find('/');
  try {
    if (slash == std::string::npos) return Rat(Int(s));
    const Int num(s.substr(0, slash));
    const Int den(s.substr(slash + 1));
    if (den == 0) throw std::invalid_argument("zero denominator");
    return Rat(num, den);
  } catch (const std::runtime_error& e) {
    throw std::invalid_argument("bad rational literal '" + s + "': " + e.what());
  }
}

std::string int_to_string(const Int& x) { return x.str(); }

Int int_from_string(const std::string& s) {
  try {
    return Int(s);
  } catch (const std::runtime_error& e) {
    throw std::invalid_argument("bad integer literal '" + s + "': " + e.what());
  }
}

}  // namespace sitor
