#include <doctest.h>

#include <cmath>
#include <random>

#include "sitor/folner.hpp"
#include "sitor/measures.hpp"

using namespace sitor;

namespace {

IntRowVec rv(std::initializer_list<long long> vals) {
  IntRowVec v(static_cast<Eigen::Index>(vals.size()));
  Eigen::Index i = 0;
  for (long long x : vals) v(i++) = x;
  return v;
}

IntMat mat(std::initializer_list<std::initializer_list<long long>> rows) {
  IntMat m(static_cast<Eigen::Index>(rows.size()),
           static_cast<Eigen::Index>(rows.begin()->size()));
  Eigen::Index i = 0;
  for (const auto& row : rows) {
    Eigen::Index j = 0;
    for (long long x : row) m(i, j++) = x;
    ++i;
  }
  return m;
}

TorusPointQ pt(std::initializer_list<Rat> coords) { return make_point(std::vector<Rat>(coords)); }

AtomicMeasure third_pair() { return uniform_on({pt({Rat(1, 3)}), pt({Rat(2, 3)})}); }

}  // namespace

TEST_CASE("interval shifts have symmetric difference 2m") {
  const auto sigma = FolnerSequence::interval();
  const auto ratios = folner_check(sigma, 1, 50);
  for (long long n = 1; n <= 50; ++n) CHECK(ratios[static_cast<size_t>(n - 1)] == Rat(2, n));
  CHECK(folner_check(sigma, 5, 100)[99] == Rat(1, 10));
  // general law for N > m
  for (long long m : {2LL, 7LL})
    for (long long n = m + 1; n <= 40; ++n)
      CHECK(folner_check(sigma, m, n).back() == Rat(2 * m, n));
}

TEST_CASE("singleton sequence is not averaging") {
  std::vector<std::vector<long long>> sets;
  for (long long n = 1; n <= 20; ++n) sets.push_back({n});
  const auto sigma = FolnerSequence::custom(std::move(sets));
  for (const Rat& r : folner_check(sigma, 1, 20)) CHECK(r == 2);
}

TEST_CASE("shifted intervals still average") {
  const auto sigma = FolnerSequence::shifted_interval(3);
  const auto ratios = folner_check(sigma, 4, 60);
  CHECK(ratios.back() == Rat(8, 60));
}

TEST_CASE("densities along intervals") {
  const auto sigma = FolnerSequence::interval();
  const auto evens = density(IntegerSubset::progression(0, 2), sigma, 1000);
  CHECK(evens.estimate == Rat(1, 2));
  const auto all = density(IntegerSubset::all(), sigma, 50);
  CHECK(all.estimate == 1);
  const auto thirds = density(IntegerSubset::progression(0, 3), sigma, 300);
  for (long long n = 1; n <= 300; ++n) {
    const Rat diff = thirds.partials[static_cast<size_t>(n - 1)] - Rat(1, 3);
    CHECK(abs(diff) <= Rat(1, n));
  }
  CHECK(thirds.lower_estimate <= thirds.estimate);
  CHECK(thirds.estimate <= thirds.upper_estimate);
}

TEST_CASE("atomic measure construction") {
  CHECK_THROWS_AS(uniform_on({}), ContractError);
  CHECK_THROWS_AS(
      make_atomic({Atom{pt({Rat(0)}), Rat(1, 2)}}), ContractError);  // weights sum to 1/2
  CHECK_THROWS_AS(make_atomic({Atom{pt({Rat(0)}), Rat(-1)}, Atom{pt({Rat(1, 2)}), Rat(2)}}),
                  ContractError);
  // duplicate points merge
  const AtomicMeasure merged = make_atomic(
      {Atom{pt({Rat(1, 2)}), Rat(1, 2)}, Atom{pt({Rat(3, 2)}), Rat(1, 2)}});
  CHECK(merged.atoms.size() == 1);
  CHECK(merged.q == 2);
}

TEST_CASE("fourier coefficients: worked examples") {
  const MeasureSpec dirac0 = MeasureSpec::of(dirac(pt({Rat(0), Rat(0)})));
  for (auto k : {rv({1, 0}), rv({3, -7}), rv({0, 0})}) CHECK(fourier(dirac0, k).exactly_one);

  const MeasureSpec quarters = MeasureSpec::of(
      uniform_on({pt({Rat(0), Rat(0)}), pt({Rat(1, 2), Rat(0)}), pt({Rat(0), Rat(1, 2)}),
                  pt({Rat(1, 2), Rat(1, 2)})}));
  CHECK(fourier(quarters, rv({1, 0})).exactly_zero);
  CHECK(fourier(quarters, rv({2, 2})).exactly_one);

  const MeasureSpec lebesgue = MeasureSpec::lebesgue(2);
  CHECK(fourier(lebesgue, rv({3, -1})).exactly_zero);
  CHECK(fourier(lebesgue, rv({0, 0})).exactly_one);

  const MeasureSpec thirds = MeasureSpec::of(third_pair());
  const FourierValue v = fourier(thirds, rv({1}));
  CHECK_FALSE(v.exactly_one);
  CHECK_FALSE(v.exactly_zero);
  CHECK(v.approx.real() == doctest::Approx(-0.5).epsilon(1e-12));
  CHECK(v.approx.imag() == doctest::Approx(0.0).epsilon(1e-12));
}

TEST_CASE("fourier basics: magnitude, zero frequency, conjugate symmetry") {
  std::mt19937 rng(2718);
  std::uniform_int_distribution<int> num(0, 11), den(1, 12), entry(-5, 5);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<TorusPointQ> points;
    const int count = 1 + trial % 4;
    for (int i = 0; i < count; ++i)
      points.push_back(pt({Rat(num(rng), den(rng)), Rat(num(rng), den(rng))}));
    const MeasureSpec mu = MeasureSpec::of(uniform_on(std::move(points)));
    CHECK(fourier(mu, rv({0, 0})).exactly_one);
    const IntRowVec k = rv({entry(rng), entry(rng)});
    const FourierValue plus = fourier(mu, k);
    const FourierValue minus = fourier(mu, IntRowVec(-k));
    CHECK(std::abs(plus.approx) <= 1.0 + 1e-12);
    CHECK(std::abs(plus.approx - std::conj(minus.approx)) < 1e-12);
  }
}

TEST_CASE("pushforward") {
  const AtomicMeasure d0 = dirac(pt({Rat(0), Rat(0)}));
  CHECK(pushforward(d0, mat({{2, 1}, {1, 1}})) == d0);

  const AtomicMeasure thirds = third_pair();
  CHECK(pushforward(thirds, mat({{2}})) == thirds);  // 2/3, 4/3 -> {2/3, 1/3}

  const AtomicMeasure halves = uniform_on({pt({Rat(0)}), pt({Rat(1, 2)})});
  const AtomicMeasure collapsed = pushforward(halves, mat({{2}}));
  CHECK(collapsed == dirac(pt({Rat(0)})));

  std::mt19937 rng(1234);
  std::uniform_int_distribution<int> num(0, 9), den(1, 10), entry(-3, 3);
  for (int trial = 0; trial < 50; ++trial) {
    const MeasureSpec mu = MeasureSpec::of(uniform_on(
        {pt({Rat(num(rng), den(rng))}), pt({Rat(num(rng), den(rng))}),
         pt({Rat(num(rng), den(rng))})}));
    const AtomicMeasure image = pushforward(*mu.atomic, mat({{entry(rng)}}));
    Rat total(0);
    for (const Atom& atom : image.atoms) total += atom.weight;
    CHECK(total == 1);
  }
}

TEST_CASE("invariance") {
  CHECK(is_invariant(MeasureSpec::of(third_pair()), mat({{2}})));
  CHECK_FALSE(is_invariant(MeasureSpec::of(uniform_on({pt({Rat(0)}), pt({Rat(1, 2)})})),
                           mat({{2}})));
  CHECK(is_invariant(MeasureSpec::lebesgue(2), mat({{2, 1}, {1, 1}})));
  CHECK_THROWS_AS(is_invariant(MeasureSpec::lebesgue(2), mat({{1, 1}, {1, 1}})),
                  UnsupportedError);
}

TEST_CASE("invariant measures have A-invariant coefficients") {
  const AtomicMeasure thirds = third_pair();
  const IntMat a = mat({{2}});
  REQUIRE(is_invariant(MeasureSpec::of(thirds), a));
  const FieldPtr field = field_of(cyclotomic_poly(3));
  for (long long k = -6; k <= 6; ++k) {
    const IntRowVec kv = rv({k});
    const IntRowVec ka = (kv * a).eval();
    CHECK(fourier_exact(thirds, ka, field) == fourier_exact(thirds, kv, field));
  }
}

TEST_CASE("support constraints") {
  const SupportConstraint c1 = support_constraint(rv({2, 0}));
  CHECK(c1.satisfied_by(pt({Rat(1, 2), Rat(1, 3)})));
  const SupportConstraint c2 = support_constraint(rv({1, 0}));
  CHECK_FALSE(c2.satisfied_by(pt({Rat(1, 2), Rat(0)})));
  const SupportConstraint c3 = support_constraint(rv({0, 3}));
  CHECK(c3.satisfied_by(pt({Rat(1, 7), Rat(2, 3)})));
  CHECK_THROWS_AS(support_constraint(rv({0, 0})), ContractError);
}

TEST_CASE("finite support candidates") {
  const auto unimodular = finite_support_candidates(mat({{2, 1}, {5, 3}}));
  REQUIRE(unimodular.size() == 1);
  CHECK(unimodular[0] == pt({Rat(0), Rat(0)}));

  const auto halves = finite_support_candidates(mat({{2, 0}, {0, 2}}));
  CHECK(halves.size() == 4);
  for (const TorusPointQ& p : halves)
    for (const Rat& c : p.coords) CHECK((c == 0 || c == Rat(1, 2)));

  const auto id = finite_support_candidates(identity_int(2));
  REQUIRE(id.size() == 1);
  CHECK(id[0] == pt({Rat(0), Rat(0)}));

  CHECK_THROWS_AS(finite_support_candidates(mat({{1, 1}, {1, 1}})), SingularMatrixError);
}

TEST_CASE("measures with unit coefficients live inside the candidate set") {
  // Uniform on {(0,0),(1/2,1/2)} has coefficient 1 at the rows of 2*I.
  const AtomicMeasure mu = uniform_on({pt({Rat(0), Rat(0)}), pt({Rat(1, 2), Rat(1, 2)})});
  const IntMat l = mat({{2, 0}, {0, 2}});
  for (Eigen::Index i = 0; i < 2; ++i) {
    const IntRowVec row = l.row(i);
    CHECK(fourier(MeasureSpec::of(mu), row).exactly_one);
  }
  const auto bound = finite_support_candidates(l);
  for (const Atom& atom : mu.atoms)
    CHECK(std::binary_search(bound.begin(), bound.end(), atom.point));
}
