#include "sitor/measures.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <sstream>

namespace sitor {

namespace {
constexpr double kTwoPi = 6.283185307179586476925286766559;

// Largest residue-class count for which the exact vanishing test is run.
const Int kMaxExactZeroDenominator = 1000000;
}  // namespace

TorusPointQ make_point(std::vector<Rat> coords) {
  if (coords.empty()) throw DimensionError("torus point needs at least one coordinate");
  TorusPointQ p;
  p.n = static_cast<long>(coords.size());
  p.q = 1;
  for (Rat& c : coords) {
    c = mod_one(c);
    p.q = lcm(p.q, denominator(c));
  }
  p.coords = std::move(coords);
  return p;
}

bool operator==(const TorusPointQ& a, const TorusPointQ& b) {
  return a.n == b.n && a.coords == b.coords;
}

bool operator<(const TorusPointQ& a, const TorusPointQ& b) {
  if (a.n != b.n) return a.n < b.n;
  return std::lexicographical_compare(a.coords.begin(), a.coords.end(), b.coords.begin(),
                                      b.coords.end());
}

AtomicMeasure make_atomic(std::vector<Atom> atoms) {
  if (atoms.empty()) throw ContractError("atomic measure needs at least one atom");
  const long n = atoms.front().point.n;
  std::map<std::vector<Rat>, Rat> merged;
  for (Atom& atom : atoms) {
    if (atom.point.n != n) throw DimensionError("atoms have mixed dimensions");
    if (atom.weight <= 0) throw ContractError("atom weights must be positive");
    merged[atom.point.coords] += atom.weight;
  }
  AtomicMeasure mu;
  mu.n = n;
  mu.q = 1;
  Rat total(0);
  for (auto& [coords, weight] : merged) {
    Atom atom;
    atom.point = make_point(coords);
    atom.weight = weight;
    total += weight;
    mu.q = lcm(mu.q, atom.point.q);
    mu.atoms.push_back(std::move(atom));
  }
  if (total != 1)
    throw ContractError("atom weights must sum to exactly 1 (got " + rat_to_string(total) + ")");
  return mu;
}

AtomicMeasure dirac(TorusPointQ point) {
  return make_atomic({Atom{std::move(point), Rat(1)}});
}

AtomicMeasure uniform_on(std::vector<TorusPointQ> points) {
  if (points.empty()) throw ContractError("uniform measure needs at least one point");
  const Rat w(Int(1), Int(points.size()));
  std::vector<Atom> atoms;
  atoms.reserve(points.size());
  for (TorusPointQ& p : points) atoms.push_back(Atom{std::move(p), w});
  return make_atomic(std::move(atoms));
}

bool operator==(const AtomicMeasure& a, const AtomicMeasure& b) {
  if (a.n != b.n || a.atoms.size() != b.atoms.size()) return false;
  for (size_t i = 0; i < a.atoms.size(); ++i) {
    if (!(a.atoms[i].point == b.atoms[i].point)) return false;
    if (a.atoms[i].weight != b.atoms[i].weight) return false;
  }
  return true;
}

MeasureSpec MeasureSpec::lebesgue(long n) {
  if (n < 1) throw DimensionError("measure dimension must be >= 1");
  MeasureSpec m;
  m.variant = Variant::lebesgue;
  m.n = n;
  return m;
}

MeasureSpec MeasureSpec::of(AtomicMeasure mu) {
  MeasureSpec m;
  m.variant = Variant::atomic;
  m.n = mu.n;
  m.atomic = std::move(mu);
  return m;
}

namespace {

// k.x scaled to a residue in [0, q): q*(k.x mod 1).
Int phase_residue(const IntRowVec& k, const TorusPointQ& x, const Int& q) {
  Int acc = 0;
  for (long i = 0; i < x.n; ++i) {
    const Rat scaled = x.coords[static_cast<size_t>(i)] * q;  // integer by q's definition
    acc += k(i) * numerator(scaled);
  }
  return mod_floor(acc, q);
}

std::map<Int, Rat> residue_classes(const AtomicMeasure& mu, const IntRowVec& k) {
  std::map<Int, Rat> groups;
  for (const Atom& atom : mu.atoms) groups[phase_residue(k, atom.point, mu.q)] += atom.weight;
  return groups;
}

std::complex<double> approx_from_classes(const std::map<Int, Rat>& groups, const Int& q) {
  const double qd = q.convert_to<double>();
  std::complex<double> sum{0.0, 0.0};
  for (const auto& [r, w] : groups) {
    const double angle = kTwoPi * (r.convert_to<double>() / qd);
    sum += to_double(w) * std::complex<double>(std::cos(angle), std::sin(angle));
  }
  return sum;
}

bool vanishes_exactly(const std::map<Int, Rat>& groups, const Int& q) {
  if (q > kMaxExactZeroDenominator) return false;  // skip, approx remains authoritative
  std::vector<Rat> coeffs(q.convert_to<size_t>(), Rat(0));
  for (const auto& [r, w] : groups) coeffs[r.convert_to<size_t>()] = w;
  const RatPoly weight_poly{std::move(coeffs)};
  if (weight_poly.is_zero()) return false;  // cannot happen: weights sum to 1
  const RatPoly cyc = cyclotomic_poly(q.convert_to<unsigned long>());
  return divmod(weight_poly, cyc).second.is_zero();
}

}  // namespace

FourierValue fourier(const MeasureSpec& mu, const IntRowVec& k) {
  if (k.cols() != mu.n) throw DimensionError("fourier: frequency dimension mismatch");
  FourierValue v;
  if (mu.variant == MeasureSpec::Variant::lebesgue) {
    bool zero = true;
    for (Eigen::Index i = 0; i < k.cols(); ++i)
      if (k(i) != 0) zero = false;
    v.exactly_one = zero;
    v.exactly_zero = !zero;
    v.approx = zero ? std::complex<double>{1.0, 0.0} : std::complex<double>{0.0, 0.0};
    return v;
  }
  const AtomicMeasure& m = *mu.atomic;
  const auto groups = residue_classes(m, k);
  v.exactly_one = groups.size() == 1 && groups.begin()->first == 0;
  if (v.exactly_one) {
    v.approx = {1.0, 0.0};
    return v;
  }
  v.exactly_zero = vanishes_exactly(groups, m.q);
  v.approx = v.exactly_zero ? std::complex<double>{0.0, 0.0} : approx_from_classes(groups, m.q);
  return v;
}

FieldElem fourier_exact(const AtomicMeasure& mu, const IntRowVec& k, const FieldPtr& field) {
  if (k.cols() != mu.n) throw DimensionError("fourier_exact: frequency dimension mismatch");
  const auto groups = residue_classes(mu, k);
  std::vector<Rat> coeffs(groups.rbegin()->first.convert_to<size_t>() + 1, Rat(0));
  for (const auto& [r, w] : groups) coeffs[r.convert_to<size_t>()] = w;
  return FieldElem::from_poly(field, RatPoly(std::move(coeffs)));
}

AtomicMeasure pushforward(const AtomicMeasure& mu, const IntMat& a) {
  require_square(a);
  if (a.rows() != mu.n) throw DimensionError("pushforward: matrix dimension mismatch");
  std::vector<Atom> images;
  images.reserve(mu.atoms.size());
  for (const Atom& atom : mu.atoms) {
    std::vector<Rat> y(static_cast<size_t>(mu.n), Rat(0));
    for (long i = 0; i < mu.n; ++i) {
      Rat acc(0);
      for (long j = 0; j < mu.n; ++j)
        acc += Rat(a(i, j)) * atom.point.coords[static_cast<size_t>(j)];
      y[static_cast<size_t>(i)] = mod_one(acc);
    }
    images.push_back(Atom{make_point(std::move(y)), atom.weight});
  }
  return make_atomic(std::move(images));
}

bool is_invariant(const MeasureSpec& mu, const IntMat& a) {
  require_square(a);
  if (a.rows() != mu.n) throw DimensionError("is_invariant: matrix dimension mismatch");
  if (mu.variant == MeasureSpec::Variant::lebesgue) {
    if (det(a) == 0)
      throw UnsupportedError(
          "invariance of Lebesgue measure under a singular matrix is not modelled");
    return true;
  }
  return pushforward(*mu.atomic, a) == *mu.atomic;
}

bool SupportConstraint::satisfied_by(const TorusPointQ& x) const {
  if (k.cols() != x.n) throw DimensionError("support constraint dimension mismatch");
  Rat acc(0);
  for (long i = 0; i < x.n; ++i) acc += Rat(k(i)) * x.coords[static_cast<size_t>(i)];
  return is_integer(acc);
}

std::string SupportConstraint::describe() const {
  std::ostringstream os;
  os << "{x : ";
  for (Eigen::Index i = 0; i < k.cols(); ++i) {
    if (i > 0) os << " + ";
    os << k(i).str() << "*x" << (i + 1);
  }
  os << " in Z}";
  return os.str();
}

SupportConstraint support_constraint(IntRowVec k) {
  bool nonzero = false;
  for (Eigen::Index i = 0; i < k.cols(); ++i)
    if (k(i) != 0) nonzero = true;
  if (!nonzero) throw ContractError("support constraint requires a nonzero frequency");
  return SupportConstraint{std::move(k)};
}

std::vector<TorusPointQ> finite_support_candidates(const IntMat& l) {
  require_square(l);
  const long n = static_cast<long>(l.rows());
  if (det(l) == 0) throw SingularMatrixError("finite_support_candidates: singular matrix");
  Int m_bound = 0;
  for (long i = 0; i < n; ++i) {
    Int row_sum = 0;
    for (long j = 0; j < n; ++j) row_sum += abs(l(i, j));
    m_bound = std::max(m_bound, row_sum);
  }
  const Int width = 2 * m_bound + 1;
  Int total = 1;
  for (long i = 0; i < n; ++i) {
    total *= width;
    if (total > 10000000)
      throw UnsupportedError("finite_support_candidates: enumeration too large");
  }
  const RatMat inv = inverse_rational(l);

  std::vector<Int> digits(static_cast<size_t>(n), Int(0));
  std::vector<TorusPointQ> out;
  RatColVec m(n);
  for (Int idx = 0; idx < total; ++idx) {
    for (long i = 0; i < n; ++i) digits[static_cast<size_t>(i)] = Int(0);
    Int rest = idx;
    for (long i = n - 1; i >= 0; --i) {
      digits[static_cast<size_t>(i)] = rest % width;
      rest /= width;
    }
    for (long i = 0; i < n; ++i) m(i) = Rat(digits[static_cast<size_t>(i)] - m_bound);
    const RatColVec x = inv * m;
    bool in_cube = true;
    for (long i = 0; i < n; ++i)
      if (x(i) < 0 || x(i) >= 1) {
        in_cube = false;
        break;
      }
    if (!in_cube) continue;
    std::vector<Rat> coords(static_cast<size_t>(n));
    for (long i = 0; i < n; ++i) coords[static_cast<size_t>(i)] = x(i);
    out.push_back(make_point(std::move(coords)));
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end(),
                        [](const TorusPointQ& a, const TorusPointQ& b) { return a == b; }),
            out.end());
  return out;
}

}  // namespace sitor
