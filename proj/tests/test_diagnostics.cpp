#include <doctest.h>

#include "sitor/diagnostics.hpp"
#include "sitor/json_io.hpp"
#include "sitor/tridiagonal.hpp"

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

MeasureSpec third_pair() {
  return MeasureSpec::of(uniform_on({pt({Rat(1, 3)}), pt({Rat(2, 3)})}));
}

MeasureSpec third_triple() {
  return MeasureSpec::of(uniform_on({pt({Rat(0)}), pt({Rat(1, 3)}), pt({Rat(2, 3)})}));
}

DiagnosticsRequest request(MeasureSpec mu, IntMat a, std::vector<PairKL> pairs,
                           long long n_max = 50) {
  DiagnosticsRequest req;
  req.mu = std::move(mu);
  req.a = std::move(a);
  req.pairs = std::move(pairs);
  req.n_max = n_max;
  req.threads = 1;
  return req;
}

Rat exact_rat(const PairRecord& rec) {
  REQUIRE(rec.exact_limit.has_value());
  const auto r = rec.exact_limit->as_rational();
  REQUIRE(r.has_value());
  return *r;
}

}  // namespace

TEST_CASE("dirac at the origin passes all three diagnostics exactly") {
  const MeasureSpec mu = MeasureSpec::of(dirac(pt({Rat(0), Rat(0)})));
  const IntMat a = mat({{2, 1}, {1, 1}});
  const std::vector<PairKL> pairs{{rv({1, 0}), rv({0, 1})}, {rv({2, -1}), rv({0, 0})}};
  for (auto* runner : {&ergodic_average, &weak_mixing_average, &strong_mixing_tail}) {
    const DiagnosticsReport rep = (*runner)(request(mu, a, pairs));
    CHECK(rep.overall == Verdict::pass);
    for (const PairRecord& rec : rep.per_pair) {
      CHECK(rec.verdict == Verdict::pass);
      CHECK(rec.exact_limit.has_value());
    }
  }
  const DiagnosticsReport erg = ergodic_average(request(mu, a, pairs));
  for (const auto& z : erg.per_pair[0].partials) CHECK(std::abs(z - 1.0) < 1e-12);
}

TEST_CASE("uniform pair measure under doubling: ergodic yes, mixing no") {
  const IntMat a = mat({{2}});

  const DiagnosticsReport erg =
      ergodic_average(request(third_pair(), a, {{rv({1}), rv({0})}}));
  CHECK(erg.overall == Verdict::pass);
  CHECK(exact_rat(erg.per_pair[0]) == Rat(-1, 2));
  CHECK(erg.per_pair[0].exact_target->as_rational() == Rat(-1, 2));

  const DiagnosticsReport weak =
      weak_mixing_average(request(third_pair(), a, {{rv({1}), rv({1})}}));
  CHECK(weak.overall == Verdict::fail);
  CHECK(exact_rat(weak.per_pair[0]) == Rat(9, 16));
  CHECK(weak.per_pair[0].period == 2);

  const DiagnosticsReport strong =
      strong_mixing_tail(request(third_pair(), a, {{rv({1}), rv({1})}}));
  CHECK(strong.overall == Verdict::fail);
  CHECK_FALSE(strong.per_pair[0].exact_limit.has_value());  // no limit: tail alternates
}

TEST_CASE("uniform triple measure under doubling is invariant but not ergodic") {
  const DiagnosticsReport erg =
      ergodic_average(request(third_triple(), mat({{2}}), {{rv({1}), rv({-1})}}));
  CHECK(erg.overall == Verdict::fail);
  CHECK(exact_rat(erg.per_pair[0]) == Rat(1, 2));
  CHECK(erg.per_pair[0].exact_target->value.is_zero());
}

TEST_CASE("non-invariant input is reported, not computed") {
  const MeasureSpec mu = MeasureSpec::of(uniform_on({pt({Rat(0)}), pt({Rat(1, 2)})}));
  const DiagnosticsReport rep = ergodic_average(request(mu, mat({{2}}), {{rv({1}), rv({0})}}));
  CHECK(rep.inconsistent_input);
  CHECK(rep.per_pair.empty());
  CHECK(rep.overall == Verdict::inconclusive);
}

TEST_CASE("lebesgue diagnostics") {
  const MeasureSpec mu = MeasureSpec::lebesgue(2);
  const IntMat a = mat({{2, 1}, {1, 1}});

  const DiagnosticsReport strong =
      strong_mixing_tail(request(mu, a, {{rv({1, 0}), rv({0, 0})}}, 40));
  CHECK(strong.overall == Verdict::pass);  // k A^j never returns to 0

  const DiagnosticsReport weak =
      weak_mixing_average(request(mu, a, {{rv({1, 0}), rv({0, 1})}, {rv({0, 0}), rv({0, 0})}}, 40));
  CHECK(weak.overall == Verdict::pass);

  // A finite-order matrix gives an exact cycle and an exact verdict.
  const IntMat rot = mat({{0, 1}, {-1, 0}});
  const DiagnosticsReport cyc =
      ergodic_average(request(mu, rot, {{rv({1, 0}), rv({0, 0})}}, 20));
  CHECK(cyc.per_pair[0].period > 0);
  CHECK(cyc.per_pair[0].exact_limit.has_value());
  CHECK(cyc.per_pair[0].exact_limit->value.is_zero());
  CHECK(cyc.overall == Verdict::pass);  // target 0 = limit 0
}

TEST_CASE("custom averaging sequences only report partials") {
  std::vector<std::vector<long long>> sets;
  for (long long n = 1; n <= 10; ++n) {
    std::vector<long long> s;
    for (long long j = 0; j < n; ++j) s.push_back(j * j);  // squares: not interval-like
    sets.push_back(std::move(s));
  }
  DiagnosticsRequest req = request(third_pair(), mat({{2}}), {{rv({1}), rv({0})}}, 10);
  req.folner = FolnerSequence::custom(std::move(sets));
  const DiagnosticsReport rep = ergodic_average(req);
  CHECK(rep.per_pair[0].verdict == Verdict::inconclusive);
  CHECK(rep.per_pair[0].partials.size() == 10);
}

TEST_CASE("periodicity oracle matches direct summation for j < 1000") {
  struct Case {
    MeasureSpec mu;
    IntMat a;
    IntRowVec k, l;
  };
  const std::vector<Case> cases{
      {third_pair(), mat({{2}}), rv({1}), rv({1})},
      {third_triple(), mat({{2}}), rv({1}), rv({-1})},
      {MeasureSpec::of(uniform_on({pt({Rat(1, 5), Rat(0)}), pt({Rat(2, 5), Rat(0)}),
                                   pt({Rat(4, 5), Rat(0)}), pt({Rat(3, 5), Rat(0)}),
                                   pt({Rat(0), Rat(0)})})),
       mat({{2, 1}, {1, 1}}), rv({1, 2}), rv({-1, 3})},
  };
  for (const Case& c : cases) {
    const AtomicMeasure& mu = *c.mu.atomic;
    const FieldPtr field = field_of(cyclotomic_poly(mu.q.convert_to<unsigned long>()));
    // Direct route: exact row vectors k A^j without any modular reduction.
    FieldElem direct = FieldElem::zero(field);
    IntRowVec row = c.k;
    const long long count = 1000;
    for (long long j = 0; j < count; ++j) {
      direct = direct + fourier_exact(mu, IntRowVec(row + c.l), field);
      row = (row * c.a).eval();
    }
    CHECK(fourier_tail_sum(mu, c.a, c.k, c.l, count, field) == direct);
  }
}

TEST_CASE("mixing hierarchy is monotone on tested inputs") {
  const IntMat a = mat({{2}});
  const std::vector<MeasureSpec> measures{
      MeasureSpec::of(dirac(pt({Rat(0)}))), third_pair(), third_triple()};
  const std::vector<PairKL> pairs{{rv({1}), rv({0})}, {rv({1}), rv({1})},
                                  {rv({2}), rv({-1})}};
  for (const MeasureSpec& mu : measures) {
    for (const PairKL& pair : pairs) {
      const auto erg = ergodic_average(request(mu, a, {pair})).per_pair[0].verdict;
      const auto weak = weak_mixing_average(request(mu, a, {pair})).per_pair[0].verdict;
      const auto strong = strong_mixing_tail(request(mu, a, {pair})).per_pair[0].verdict;
      if (strong == Verdict::pass) CHECK(weak == Verdict::pass);
      if (weak == Verdict::pass) CHECK(erg == Verdict::pass);
    }
  }
}

TEST_CASE("orbit measures") {
  const AtomicMeasure fixed = orbit_measure(pt({Rat(0), Rat(0)}), mat({{2, 1}, {1, 1}}), 10);
  CHECK(fixed == dirac(pt({Rat(0), Rat(0)})));

  const AtomicMeasure pair = orbit_measure(pt({Rat(1, 3)}), mat({{2}}), 4);
  CHECK(pair == uniform_on({pt({Rat(1, 3)}), pt({Rat(2, 3)})}));

  // The orbit of (1/5, 0) under [[2,1],[1,1]] has period 10; an exact
  // multiple of the period gives the uniform measure on the cycle, which is
  // invariant.
  const IntMat a = mat({{2, 1}, {1, 1}});
  const AtomicMeasure cycle20 = orbit_measure(pt({Rat(1, 5), Rat(0)}), a, 20);
  CHECK(cycle20.atoms.size() == 10);
  for (const Atom& atom : cycle20.atoms) CHECK(atom.weight == Rat(1, 10));
  CHECK(is_invariant(MeasureSpec::of(cycle20), a));

  const AtomicMeasure cycle24 = orbit_measure(pt({Rat(1, 5), Rat(0)}), a, 24);
  CHECK(cycle24.atoms.size() == 10);  // full cycle covered; weights 3/24 and 2/24
}

TEST_CASE("rigidity harness: dirac, lebesgue, and inconsistent inputs") {
  const IntMat a2 = mat({{2, 1}, {1, 1}});
  const MatrixFamily powers = powers_family(a2, 2);

  RigidityRequest dirac_req;
  dirac_req.mu = MeasureSpec::of(dirac(pt({Rat(0), Rat(0)})));
  dirac_req.a = a2;
  dirac_req.family = powers;
  dirac_req.witness_k = rv({1, 0});
  dirac_req.j_bound = 8;
  dirac_req.certificate = certify_powers_m2(2);
  const RigidityReport dr = rigidity_harness(dirac_req);
  CHECK(dr.conclusion == RigidityConclusion::dirac);
  CHECK(dr.a_invariance);
  CHECK(dr.all_exactly_one);
  REQUIRE(dr.support_bound.size() == 1);
  CHECK(dr.support_bound[0] == pt({Rat(0), Rat(0)}));
  CHECK(dr.support_verified);
  for (const InvarianceCheck& c : dr.invariance_checks) CHECK(c.holds);

  RigidityRequest leb_req = dirac_req;
  leb_req.mu = MeasureSpec::lebesgue(2);
  const RigidityReport lr = rigidity_harness(leb_req);
  CHECK(lr.conclusion == RigidityConclusion::lebesgue);
  CHECK_FALSE(lr.all_exactly_one);
  for (const FourierValue& v : lr.fourier_chain) CHECK(v.exactly_zero);

  // One-dimensional example: invariance under x(2^j + 1) fails when
  // 2^j + 1 = 0 mod 3 (odd j), so sampling all j is inconsistent...
  IntMat one(1, 1);
  one << 1;
  RigidityRequest bad;
  bad.mu = third_pair();
  bad.a = mat({{2}});
  bad.family = make_family({one});
  bad.witness_k = rv({1});
  bad.j_bound = 6;
  bad.box_evidence = box_check(bad.family, 5);
  const RigidityReport br = rigidity_harness(bad);
  CHECK(br.conclusion == RigidityConclusion::inconsistent_input);
  bool some_fail = false;
  for (const InvarianceCheck& c : br.invariance_checks)
    if (!c.holds) some_fail = true;
  CHECK(some_fail);

  // ...while sampling only even j passes the invariance checks but leaves the
  // witnessed chain incomplete (the density-one hypothesis cannot hold).
  RigidityRequest even = bad;
  even.e = IntegerSubset::progression(0, 2);
  const RigidityReport er = rigidity_harness(even);
  for (const InvarianceCheck& c : er.invariance_checks) CHECK(c.holds);
  CHECK(er.conclusion == RigidityConclusion::inconsistent_input);
  CHECK(er.notes.find("chain incomplete") != std::string::npos);

  // No evidence, no run.
  RigidityRequest no_evidence = bad;
  no_evidence.box_evidence.reset();
  CHECK_THROWS_AS(rigidity_harness(no_evidence), ContractError);
}

TEST_CASE("dirac check") {
  const DiagnosticsReport pass_report =
      weak_mixing_average(request(MeasureSpec::of(dirac(pt({Rat(1, 7), Rat(2, 7)}))),
                                  identity_int(2), {{rv({1, 0}), rv({0, 0})}}));
  CHECK(dirac_check(dirac(pt({Rat(1, 7), Rat(2, 7)})), pass_report).is_dirac);

  const DiagnosticsReport fail_report =
      weak_mixing_average(request(third_pair(), mat({{2}}), {{rv({1}), rv({1})}}));
  const auto plain = dirac_check(*third_pair().atomic, fail_report);
  CHECK_FALSE(plain.is_dirac);
  CHECK_FALSE(plain.contradiction_candidate);

  // A multi-atom measure paired with an all-pass weak-mixing report is
  // flagged (finite testing cannot certify weak mixing).
  const auto flagged = dirac_check(*third_pair().atomic, pass_report);
  CHECK_FALSE(flagged.is_dirac);
  CHECK(flagged.contradiction_candidate);
}

TEST_CASE("diagnostics are deterministic under parallel evaluation") {
  DiagnosticsRequest req = request(
      third_triple(), mat({{2}}),
      {{rv({1}), rv({0})}, {rv({1}), rv({1})}, {rv({1}), rv({-1})}, {rv({2}), rv({1})}}, 64);
  req.threads = 1;
  const Json seq = to_json(ergodic_average(req));
  req.threads = 8;
  const Json par = to_json(ergodic_average(req));
  CHECK(seq.dump() == par.dump());
}
