#include "sitor/tridiagonal.hpp"

#include <cmath>

#include "sitor/number_field.hpp"

namespace sitor {

namespace {
constexpr double kTwoPi = 6.283185307179586476925286766559;

void require_n(long n) {
  if (n < 1) throw ContractError("tridiagonal order n must be >= 1");
}
}  // namespace

std::string variant_name(TridiagVariant v) { return v == TridiagVariant::M ? "M" : "N"; }

TridiagVariant variant_from_string(const std::string& s) {
  if (s == "M" || s == "m") return TridiagVariant::M;
  if (s == "N" || s == "n") return TridiagVariant::N;
  throw ContractError("unknown tridiagonal variant '" + s + "' (expected M or N)");
}

IntMat make_tridiag(const TridiagSpec& spec) {
  require_n(spec.n);
  if (!is_integer(spec.a))
    throw ContractError("matrix construction requires an integer diagonal value");
  const Int a = numerator(spec.a);
  IntMat m = IntMat::Zero(spec.n, spec.n);
  for (long i = 0; i < spec.n; ++i) {
    m(i, i) = a;
    if (i + 1 < spec.n) {
      m(i, i + 1) = 1;
      m(i + 1, i) = 1;
    }
  }
  if (spec.variant == TridiagVariant::M) m(spec.n - 1, spec.n - 1) = a - 1;
  return m;
}

Rat det_recurrence(const TridiagSpec& spec) {
  require_n(spec.n);
  const Rat& a = spec.a;
  Rat f1, f2;
  if (spec.variant == TridiagVariant::M) {
    f1 = a - 1;
    f2 = a * a - a - 1;
  } else {
    f1 = a;
    f2 = a * a - 1;
  }
  if (spec.n == 1) return f1;
  Rat prev = f1, cur = f2;
  for (long j = 3; j <= spec.n; ++j) {
    Rat next = a * cur - prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

ClosedFormReport det_closed_form(const TridiagSpec& spec) {
  require_n(spec.n);
  if (!is_integer(spec.a)) throw ContractError("closed form requires an integer diagonal value");
  ClosedFormReport report;
  const long n = spec.n;
  const bool m_variant = spec.variant == TridiagVariant::M;
  if (spec.a == 2) {
    report.case_applied = "a=2";
    report.value = m_variant ? Rat(1) : Rat(n + 1);
    return report;
  }
  if (spec.a == -2) {
    report.case_applied = "a=-2";
    const int sign = (n % 2 == 0) ? 1 : -1;
    report.value = m_variant ? Rat(sign * (2 * n + 1)) : Rat(sign * (n + 1));
    if (m_variant)
      report.erratum_note =
          "sign note: the recurrence initial values f(1) = a-1 = -3 and "
          "f(2) = a^2-a-1 = 5 force (-1)^n (2n+1); the sometimes-quoted "
          "(-1)^(n-1) (2n+1) has the opposite sign for every n";
    return report;
  }
  report.case_applied = "generic";
  // s_j = alpha^j + beta^j with alpha*beta = 1, alpha+beta = a.
  Rat s_prev(2), s_cur = spec.a;
  for (long j = 2; j <= n + 1; ++j) {
    Rat s_next = spec.a * s_cur - s_prev;
    s_prev = std::move(s_cur);
    s_cur = std::move(s_next);
  }
  const Rat& s_np1 = s_cur;
  const Rat& s_n = s_prev;
  if (m_variant) {
    report.value = (s_np1 + s_n) / (spec.a + 2);
  } else {
    report.value = (Rat(2) * s_n - spec.a * s_np1) / (Rat(4) - spec.a * spec.a);
  }
  return report;
}

RatPoly char_poly_m2(long n) {
  require_n(n);
  const RatPoly a({2, -1});  // 2 - x
  RatPoly f1 = a - RatPoly({1});
  if (n == 1) return f1;
  RatPoly f2 = a * a - a - RatPoly({1});
  if (n == 2) return f2;
  RatPoly prev = std::move(f1), cur = std::move(f2);
  for (long j = 3; j <= n; ++j) {
    RatPoly next = a * cur - prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

double char_poly_m2_eval(long n, double x) {
  require_n(n);
  const double a = 2.0 - x;
  double prev = a - 1.0;
  if (n == 1) return prev;
  double cur = a * a - a - 1.0;
  for (long j = 3; j <= n; ++j) {
    const double next = a * cur - prev;
    prev = cur;
    cur = next;
  }
  return cur;
}

std::string EigenvalueDescriptor::closed_form() const {
  return "2+2cos(" + std::to_string(2 * k) + "pi/" + std::to_string(2 * n + 1) + ")";
}

std::vector<EigenvalueDescriptor> eigenvalues_m2(long n) {
  require_n(n);
  std::vector<EigenvalueDescriptor> out;
  out.reserve(static_cast<size_t>(n));
  // cos decreases over (0, pi), so k = n, ..., 1 lists the roots ascending.
  for (long k = n; k >= 1; --k) {
    EigenvalueDescriptor d;
    d.n = n;
    d.k = k;
    d.approx = 2.0 + 2.0 * std::cos(kTwoPi * static_cast<double>(k) /
                                    static_cast<double>(2 * n + 1));
    d.minpoly = shifted_cos_minpoly(static_cast<unsigned long>(2 * n + 1),
                                    static_cast<unsigned long>(k));
    out.push_back(std::move(d));
  }
  return out;
}

RationalRootReport rational_root_classification(long n) {
  require_n(n);
  const RatPoly p = char_poly_m2(n);
  RationalRootReport r;
  r.n = n;
  const Rat at1 = p.eval(Rat(1));
  const Rat atm1 = p.eval(Rat(-1));
  r.p_at_1 = numerator(at1);
  r.p_at_minus1 = numerator(atm1);
  r.p_at_minus1_positive = atm1 > 0;
  r.has_rational_root = at1 == 0;
  r.root_is_one = r.has_rational_root;
  return r;
}

}  // namespace sitor
