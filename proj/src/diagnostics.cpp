#include "sitor/diagnostics.hpp"

#include <algorithm>
#include <cmath>
#include <future>
#include <map>
#include <sstream>
#include <thread>

namespace sitor {

namespace {

constexpr double kTwoPi = 6.283185307179586476925286766559;
constexpr double kFloatTolerance = 1e-6;
constexpr long long kCycleCap = 4000000;

std::vector<Int> row_to_vec(const IntRowVec& r) {
  std::vector<Int> v(static_cast<size_t>(r.cols()));
  for (Eigen::Index i = 0; i < r.cols(); ++i) v[static_cast<size_t>(i)] = r(i);
  return v;
}

// j -> k A^j mod q, stored up to the first repeated state.
struct ResidueCycle {
  std::vector<IntRowVec> states;  // length preperiod + period
  long long preperiod = 0;
  long long period = 1;

  long long index_of(long long j) const {
    if (j < static_cast<long long>(states.size())) return j;
    return preperiod + (j - preperiod) % period;
  }
};

ResidueCycle residue_cycle(const IntRowVec& k, const IntMat& a, const Int& q) {
  ResidueCycle cycle;
  std::map<std::vector<Int>, long long> seen;
  IntRowVec r(k.cols());
  for (Eigen::Index i = 0; i < k.cols(); ++i) r(i) = mod_floor(k(i), q);
  for (long long j = 0;; ++j) {
    const auto key = row_to_vec(r);
    const auto it = seen.find(key);
    if (it != seen.end()) {
      cycle.preperiod = it->second;
      cycle.period = j - it->second;
      cycle.states.resize(static_cast<size_t>(j));
      return cycle;
    }
    seen.emplace(key, j);
    cycle.states.push_back(r);
    if (j >= kCycleCap)
      throw UnsupportedError("residue orbit too long for exact cycle detection");
    IntRowVec next = r * a;
    for (Eigen::Index i = 0; i < next.cols(); ++i) next(i) = mod_floor(next(i), q);
    r = std::move(next);
  }
}

std::complex<double> approx_in_field(const FieldElem& e, const Int& q) {
  const double qd = q.convert_to<double>();
  std::complex<double> sum{0.0, 0.0};
  const auto& coords = e.coords();
  for (size_t i = 0; i < coords.size(); ++i) {
    if (coords[i] == 0) continue;
    const double angle = kTwoPi * (static_cast<double>(i) / qd);
    sum += to_double(coords[i]) * std::complex<double>(std::cos(angle), std::sin(angle));
  }
  return sum;
}

FieldElem conjugate_in_field(const FieldElem& e, const Int& q) {
  const unsigned long qu = q.convert_to<unsigned long>();
  return power_substitution(e, qu == 1 ? 1 : qu - 1);
}

ExactValue make_exact(FieldElem value, const Int& q) {
  ExactValue v{std::move(value), q};
  v.approx = approx_in_field(v.value, q);
  return v;
}

// Exact per-index values of j -> mu-hat(k A^j + l) together with the cycle.
struct ExactSequence {
  bool cycle_found = false;
  long long preperiod = 0;
  long long period = 1;
  std::vector<FieldElem> values;                // one per stored index
  std::vector<std::complex<double>> approx;     // parallel to values
  long long stored = 0;

  long long index_of(long long j) const {
    if (!cycle_found) return j < stored ? j : stored - 1;
    if (j < stored) return j;
    return preperiod + (j - preperiod) % period;
  }
  const FieldElem& value_at(long long j) const {
    return values[static_cast<size_t>(index_of(j))];
  }
  std::complex<double> approx_at(long long j) const {
    return approx[static_cast<size_t>(index_of(j))];
  }
  // Mean of the periodic part; only meaningful when cycle_found.
  FieldElem period_mean(const FieldPtr& field) const {
    FieldElem sum = FieldElem::zero(field);
    for (long long j = preperiod; j < preperiod + period; ++j) sum = sum + value_at(j);
    return Rat(Int(1), Int(period)) * sum;
  }
  bool periodic_part_constant() const {
    for (long long j = preperiod + 1; j < preperiod + period; ++j)
      if (!(value_at(j) == value_at(preperiod))) return false;
    return true;
  }
};

ExactSequence atomic_sequence(const AtomicMeasure& mu, const IntMat& a, const IntRowVec& k,
                              const IntRowVec& l, const FieldPtr& field) {
  const ResidueCycle cycle = residue_cycle(k, a, mu.q);
  ExactSequence seq;
  seq.cycle_found = true;
  seq.preperiod = cycle.preperiod;
  seq.period = cycle.period;
  seq.stored = static_cast<long long>(cycle.states.size());
  seq.values.reserve(cycle.states.size());
  for (const IntRowVec& state : cycle.states) {
    IntRowVec v = state + l;
    seq.values.push_back(fourier_exact(mu, v, field));
    seq.approx.push_back(approx_in_field(seq.values.back(), mu.q));
  }
  return seq;
}

// Lebesgue: mu-hat(v) = [v == 0] with v = k A^j + l tracked exactly (no
// modulus). A cycle appears iff the integer sequence k A^j repeats.
ExactSequence lebesgue_sequence(const IntMat& a, const IntRowVec& k, const IntRowVec& l,
                                const FieldPtr& rational_field, long long horizon) {
  ExactSequence seq;
  std::map<std::vector<Int>, long long> seen;
  IntRowVec r = k;
  for (long long j = 0; j < horizon; ++j) {
    const auto it = seen.find(row_to_vec(r));
    if (it != seen.end()) {
      // Values for indices 0..j-1 are already stored.
      seq.cycle_found = true;
      seq.preperiod = it->second;
      seq.period = j - it->second;
      seq.stored = j;
      return seq;
    }
    seen.emplace(row_to_vec(r), j);
    bool is_minus_l = true;
    for (Eigen::Index i = 0; i < r.cols(); ++i)
      if (r(i) + l(i) != 0) {
        is_minus_l = false;
        break;
      }
    seq.values.push_back(is_minus_l ? FieldElem::one(rational_field)
                                    : FieldElem::zero(rational_field));
    seq.approx.push_back(is_minus_l ? std::complex<double>{1.0, 0.0}
                                    : std::complex<double>{0.0, 0.0});
    r = (r * a).eval();
  }
  seq.cycle_found = false;
  seq.stored = horizon;
  return seq;
}

std::vector<std::complex<double>> running_averages(
    const FolnerSequence& folner, long long n_max,
    const std::function<std::complex<double>(long long)>& value_at) {
  std::vector<std::complex<double>> out;
  out.reserve(static_cast<size_t>(n_max));
  const long long limit = std::min(n_max, folner.max_index());
  if (folner.kind() == FolnerSequence::Kind::interval) {
    std::complex<double> sum{0.0, 0.0};
    for (long long N = 1; N <= limit; ++N) {
      sum += value_at(N - 1);
      out.push_back(sum / static_cast<double>(N));
    }
    return out;
  }
  for (long long N = 1; N <= limit; ++N) {
    const auto f = folner.set_at(N);
    std::complex<double> sum{0.0, 0.0};
    for (long long j : f) sum += value_at(j);
    out.push_back(sum / static_cast<double>(f.size()));
  }
  return out;
}

struct PairContext {
  const MeasureSpec& mu;
  const IntMat& a;
  const FolnerSequence& folner;
  long long n_max;
  FieldPtr field;
  Int q;
};

ExactSequence make_sequence(const PairContext& ctx, const PairKL& pair) {
  if (ctx.mu.variant == MeasureSpec::Variant::atomic)
    return atomic_sequence(*ctx.mu.atomic, ctx.a, pair.k, pair.l, ctx.field);
  const long long horizon = std::max<long long>(ctx.n_max, 64);
  return lebesgue_sequence(ctx.a, pair.k, pair.l, ctx.field, horizon);
}

ExactValue target_value(const PairContext& ctx, const PairKL& pair) {
  if (ctx.mu.variant == MeasureSpec::Variant::atomic) {
    const FieldElem tk = fourier_exact(*ctx.mu.atomic, pair.k, ctx.field);
    const FieldElem tl = fourier_exact(*ctx.mu.atomic, pair.l, ctx.field);
    return make_exact(tk * tl, ctx.q);
  }
  auto indicator = [&](const IntRowVec& v) {
    for (Eigen::Index i = 0; i < v.cols(); ++i)
      if (v(i) != 0) return FieldElem::zero(ctx.field);
    return FieldElem::one(ctx.field);
  };
  return make_exact(indicator(pair.k) * indicator(pair.l), ctx.q);
}

std::string cycle_note(const ExactSequence& seq) {
  std::ostringstream os;
  if (seq.cycle_found) {
    os << "exact cycle: preperiod " << seq.preperiod << ", period " << seq.period;
  } else {
    os << "no exact cycle within horizon " << seq.stored << "; finite-horizon evidence";
  }
  return os.str();
}

PairRecord ergodic_pair(const PairContext& ctx, const PairKL& pair) {
  PairRecord rec;
  rec.pair = pair;
  const ExactSequence seq = make_sequence(ctx, pair);
  const ExactValue target = target_value(ctx, pair);
  rec.exact_target = target;
  rec.target_approx = target.approx;
  rec.partials = running_averages(ctx.folner, ctx.n_max,
                                  [&](long long j) { return seq.approx_at(j); });
  rec.note = cycle_note(seq);
  if (seq.cycle_found) {
    rec.preperiod = seq.preperiod;
    rec.period = seq.period;
    rec.exact_limit = make_exact(seq.period_mean(ctx.field), ctx.q);
    if (ctx.folner.interval_like()) {
      rec.verdict = rec.exact_limit->value == target.value ? Verdict::pass : Verdict::fail;
    } else {
      rec.verdict = Verdict::inconclusive;
      rec.note += "; custom averaging sequence: partial averages only";
    }
    return rec;
  }
  // Finite horizon: average the observed tail half.
  std::complex<double> tail{0.0, 0.0};
  const long long begin = seq.stored / 2;
  for (long long j = begin; j < seq.stored; ++j) tail += seq.approx_at(j);
  tail /= static_cast<double>(seq.stored - begin);
  rec.verdict =
      std::abs(tail - target.approx) < kFloatTolerance ? Verdict::pass : Verdict::fail;
  return rec;
}

PairRecord weak_mixing_pair(const PairContext& ctx, const PairKL& pair) {
  PairRecord rec;
  rec.pair = pair;
  const ExactSequence seq = make_sequence(ctx, pair);
  const ExactValue target = target_value(ctx, pair);
  rec.exact_target = target;
  rec.target_approx = target.approx;

  // |mu-hat(kA^j + l) - target|^2, exactly, per stored index.
  std::vector<FieldElem> dev2;
  dev2.reserve(seq.values.size());
  for (const FieldElem& v : seq.values) {
    const FieldElem d = v - target.value;
    dev2.push_back(d * conjugate_in_field(d, ctx.q));
  }
  auto dev2_at = [&](long long j) { return dev2[static_cast<size_t>(seq.index_of(j))]; };
  rec.partials = running_averages(ctx.folner, ctx.n_max, [&](long long j) {
    const std::complex<double> d = seq.approx_at(j) - target.approx;
    return std::complex<double>{std::norm(d), 0.0};
  });
  rec.note = cycle_note(seq);
  if (seq.cycle_found) {
    rec.preperiod = seq.preperiod;
    rec.period = seq.period;
    FieldElem sum = FieldElem::zero(ctx.field);
    for (long long j = seq.preperiod; j < seq.preperiod + seq.period; ++j)
      sum = sum + dev2_at(j);
    rec.exact_limit = make_exact(Rat(Int(1), Int(seq.period)) * sum, ctx.q);
    if (ctx.folner.interval_like()) {
      rec.verdict = rec.exact_limit->value.is_zero() ? Verdict::pass : Verdict::fail;
    } else {
      rec.verdict = Verdict::inconclusive;
      rec.note += "; custom averaging sequence: partial averages only";
    }
    return rec;
  }
  double tail = 0.0;
  const long long begin = seq.stored / 2;
  for (long long j = begin; j < seq.stored; ++j)
    tail += std::norm(seq.approx_at(j) - target.approx);
  tail /= static_cast<double>(seq.stored - begin);
  rec.verdict = tail < kFloatTolerance ? Verdict::pass : Verdict::fail;
  return rec;
}

PairRecord strong_mixing_pair(const PairContext& ctx, const PairKL& pair) {
  PairRecord rec;
  rec.pair = pair;
  const ExactSequence seq = make_sequence(ctx, pair);
  const ExactValue target = target_value(ctx, pair);
  rec.exact_target = target;
  rec.target_approx = target.approx;
  const long long shown =
      seq.cycle_found ? ctx.n_max : std::min<long long>(ctx.n_max, seq.stored);
  rec.partials.reserve(static_cast<size_t>(shown));
  for (long long j = 0; j < shown; ++j) rec.partials.push_back(seq.approx_at(j));
  rec.note = cycle_note(seq);
  if (seq.cycle_found) {
    rec.preperiod = seq.preperiod;
    rec.period = seq.period;
    if (seq.periodic_part_constant()) {
      rec.exact_limit = make_exact(seq.value_at(seq.preperiod), ctx.q);
      rec.verdict = rec.exact_limit->value == target.value ? Verdict::pass : Verdict::fail;
    } else {
      rec.verdict = Verdict::fail;
      rec.note += "; periodic tail is non-constant, so the sequence has no limit";
    }
    return rec;
  }
  // Finite horizon: constant observed tail decides against the exact target.
  const long long begin = seq.stored / 2;
  bool constant = true;
  for (long long j = begin + 1; j < seq.stored; ++j)
    if (!(seq.value_at(j) == seq.value_at(begin))) {
      constant = false;
      break;
    }
  if (constant) {
    rec.verdict =
        seq.value_at(begin) == target.value ? Verdict::pass : Verdict::fail;
    rec.note += "; observed tail constant";
  } else {
    rec.verdict = Verdict::inconclusive;
    rec.note += "; observed tail not constant";
  }
  return rec;
}

DiagnosticsReport run_diagnostics(const DiagnosticsRequest& req, DiagnosticsKind kind) {
  if (req.a.rows() != req.mu.n || req.a.cols() != req.mu.n)
    throw DimensionError("diagnostics: matrix dimension must match the measure");
  for (const PairKL& p : req.pairs)
    if (p.k.cols() != req.mu.n || p.l.cols() != req.mu.n)
      throw DimensionError("diagnostics: frequency vector dimension mismatch");
  if (req.n_max < 1) throw ContractError("diagnostics: N_max must be >= 1");

  DiagnosticsReport report;
  report.kind = kind;
  if (!is_invariant(req.mu, req.a)) {
    report.inconsistent_input = true;
    report.input_note = "measure is not invariant under the matrix";
    report.overall = Verdict::inconclusive;
    return report;
  }

  PairContext ctx{req.mu, req.a, req.folner, req.n_max, nullptr, Int(1)};
  ctx.q = req.mu.variant == MeasureSpec::Variant::atomic ? req.mu.atomic->q : Int(1);
  ctx.field = field_of(cyclotomic_poly(ctx.q.convert_to<unsigned long>()));

  auto run_pair = [&](const PairKL& pair) {
    switch (kind) {
      case DiagnosticsKind::ergodic:
        return ergodic_pair(ctx, pair);
      case DiagnosticsKind::weak_mixing:
        return weak_mixing_pair(ctx, pair);
      default:
        return strong_mixing_pair(ctx, pair);
    }
  };

  unsigned threads = req.threads != 0 ? req.threads : std::thread::hardware_concurrency();
  if (threads == 0) threads = 1;
  report.per_pair.resize(req.pairs.size());
  if (threads <= 1 || req.pairs.size() <= 1) {
    for (size_t i = 0; i < req.pairs.size(); ++i) report.per_pair[i] = run_pair(req.pairs[i]);
  } else {
    std::vector<std::future<PairRecord>> futures;
    futures.reserve(req.pairs.size());
    for (const PairKL& pair : req.pairs)
      futures.push_back(std::async(std::launch::async, run_pair, pair));
    for (size_t i = 0; i < futures.size(); ++i) report.per_pair[i] = futures[i].get();
  }

  if (report.per_pair.empty()) {
    report.overall = Verdict::inconclusive;
    return report;
  }
  report.overall = Verdict::pass;
  for (const PairRecord& rec : report.per_pair) {
    if (rec.verdict == Verdict::fail) {
      report.overall = Verdict::fail;
      break;
    }
    if (rec.verdict == Verdict::inconclusive) report.overall = Verdict::inconclusive;
  }
  return report;
}

}  // namespace

DiagnosticsReport ergodic_average(const DiagnosticsRequest& req) {
  return run_diagnostics(req, DiagnosticsKind::ergodic);
}

DiagnosticsReport weak_mixing_average(const DiagnosticsRequest& req) {
  return run_diagnostics(req, DiagnosticsKind::weak_mixing);
}

DiagnosticsReport strong_mixing_tail(const DiagnosticsRequest& req) {
  return run_diagnostics(req, DiagnosticsKind::strong_mixing);
}

FieldElem fourier_tail_sum(const AtomicMeasure& mu, const IntMat& a, const IntRowVec& k,
                           const IntRowVec& l, long long j_count, const FieldPtr& field) {
  if (j_count < 0) throw ContractError("fourier_tail_sum: count must be >= 0");
  const ExactSequence seq = atomic_sequence(mu, a, k, l, field);
  FieldElem sum = FieldElem::zero(field);
  const long long head = std::min(j_count, seq.stored);
  for (long long j = 0; j < head; ++j) sum = sum + seq.value_at(j);
  if (j_count <= seq.stored) return sum;
  // Remaining indices repeat the cycle: full periods then a partial one.
  FieldElem period_sum = FieldElem::zero(field);
  for (long long j = seq.preperiod; j < seq.preperiod + seq.period; ++j)
    period_sum = period_sum + seq.value_at(j);
  const long long remaining = j_count - seq.stored;
  const long long full = remaining / seq.period;
  sum = sum + Rat(Int(full), Int(1)) * period_sum;
  for (long long j = seq.stored; j < seq.stored + remaining % seq.period; ++j)
    sum = sum + seq.value_at(j);
  return sum;
}

AtomicMeasure orbit_measure(const TorusPointQ& x0, const IntMat& a, long long n) {
  require_square(a);
  if (a.rows() != x0.n) throw DimensionError("orbit_measure: matrix dimension mismatch");
  if (n < 1) throw ContractError("orbit_measure: N must be >= 1");
  const Int q = x0.q;
  std::vector<Int> state(static_cast<size_t>(x0.n));
  for (long i = 0; i < x0.n; ++i)
    state[static_cast<size_t>(i)] = numerator(Rat(x0.coords[static_cast<size_t>(i)] * q));
  std::map<std::vector<Int>, long long> visits;
  std::vector<Int> next(static_cast<size_t>(x0.n));
  for (long long step = 0; step < n; ++step) {
    ++visits[state];
    for (long i = 0; i < x0.n; ++i) {
      Int acc = 0;
      for (long j = 0; j < x0.n; ++j) acc += a(i, j) * state[static_cast<size_t>(j)];
      next[static_cast<size_t>(i)] = mod_floor(acc, q);
    }
    state = next;
  }
  std::vector<Atom> atoms;
  atoms.reserve(visits.size());
  for (const auto& [coords, count] : visits) {
    std::vector<Rat> point(coords.size());
    for (size_t i = 0; i < coords.size(); ++i) point[i] = Rat(coords[i], q);
    atoms.push_back(Atom{make_point(std::move(point)), Rat(Int(count), Int(n))});
  }
  return make_atomic(std::move(atoms));
}

RigidityReport rigidity_harness(const RigidityRequest& req) {
  const long n = req.mu.n;
  if (req.a.rows() != n || req.a.cols() != n)
    throw DimensionError("rigidity: matrix dimension must match the measure");
  if (req.family.n != n) throw DimensionError("rigidity: family dimension mismatch");
  if (req.witness_k.cols() != n) throw DimensionError("rigidity: witness dimension mismatch");
  bool witness_nonzero = false;
  for (Eigen::Index i = 0; i < req.witness_k.cols(); ++i)
    if (req.witness_k(i) != 0) witness_nonzero = true;
  if (!witness_nonzero) throw ContractError("rigidity: witness vector must be nonzero");
  const bool cert_ok =
      req.certificate && req.certificate->conclusion == SIConclusion::proven;
  const bool box_ok = req.box_evidence && req.box_evidence->all_pass;
  if (!cert_ok && !box_ok)
    throw ContractError(
        "rigidity: family needs strong-independence evidence (proven certificate or "
        "clean exhaustive box report)");
  if (req.j_bound < 0) throw ContractError("rigidity: j bound must be >= 0");

  RigidityReport report;
  report.j_bound = req.j_bound;
  report.sampled_set = req.e.describe();

  const bool atomic = req.mu.variant == MeasureSpec::Variant::atomic;
  auto invariant_under = [&](const IntMat& c) {
    if (atomic) return is_invariant(req.mu, c);
    return det(c) != 0;  // Lebesgue: surjective endomorphisms preserve Haar
  };

  report.a_invariance = invariant_under(req.a);
  bool all_hold = report.a_invariance;
  IntMat apow = identity_int(n);
  for (long long j = 0; j <= req.j_bound; ++j) {
    if (j > 0) apow = (apow * req.a).eval();
    if (!req.e.contains(j)) continue;
    for (long i = 0; i < n; ++i) {
      const IntMat c = apow + req.family.members[static_cast<size_t>(i)];
      InvarianceCheck check{j, i + 1, invariant_under(c)};
      if (!check.holds) all_hold = false;
      report.invariance_checks.push_back(check);
    }
  }

  for (long i = 0; i < n; ++i) {
    const IntRowVec row = (req.witness_k * req.family.members[static_cast<size_t>(i)]).eval();
    report.chain_rows.push_back(row);
    report.fourier_chain.push_back(fourier(req.mu, row));
  }
  report.all_exactly_one = true;
  for (const FourierValue& v : report.fourier_chain)
    if (!v.exactly_one) report.all_exactly_one = false;

  std::ostringstream notes;
  if (report.all_exactly_one) {
    std::vector<IntRowVec> rows = report.chain_rows;
    report.support_bound = finite_support_candidates(stack_rows(rows));
    if (atomic) {
      report.support_verified = true;
      for (const Atom& atom : req.mu.atomic->atoms) {
        if (!std::binary_search(report.support_bound.begin(), report.support_bound.end(),
                                atom.point)) {
          report.support_verified = false;
          break;
        }
      }
    }
    notes << "all witnessed coefficients are exactly 1; support bound has "
          << report.support_bound.size() << " candidate point(s). ";
  }

  if (!all_hold) {
    report.conclusion = RigidityConclusion::inconsistent_input;
    notes << "invariance hypothesis fails for at least one sampled (j, i); see checks. ";
  } else if (!atomic) {
    report.conclusion = RigidityConclusion::lebesgue;
    notes << "Lebesgue input: every nonzero coefficient vanishes, so the chain "
          << "mu-hat(k B_i) = 1 never triggers the atomic branch. ";
  } else if (req.mu.atomic->atoms.size() == 1) {
    report.conclusion = RigidityConclusion::dirac;
    notes << "atomic input with a single atom. ";
  } else if (report.all_exactly_one) {
    report.conclusion = RigidityConclusion::atomic_finite;
    notes << "atomic input with " << req.mu.atomic->atoms.size() << " atoms inside the "
          << "finite support bound. ";
  } else {
    report.conclusion = RigidityConclusion::inconsistent_input;
    notes << "witnessed chain incomplete: some mu-hat(k B_i) != 1 although the sampled "
          << "invariance checks pass, so the inputs cannot satisfy the full-density "
          << "invariance and ergodicity hypotheses simultaneously (or the witness has "
          << "mu-hat(k) = 0 and carries no information). ";
  }
  report.notes = notes.str();
  return report;
}

DiracCheckResult dirac_check(const AtomicMeasure& mu, const DiagnosticsReport& weak_evidence) {
  DiracCheckResult r;
  r.is_dirac = mu.atoms.size() == 1;
  r.contradiction_candidate = !r.is_dirac && !weak_evidence.per_pair.empty() &&
                              weak_evidence.overall == Verdict::pass;
  return r;
}

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::pass:
      return "pass";
    case Verdict::fail:
      return "fail";
    default:
      return "inconclusive";
  }
}

std::string to_string(DiagnosticsKind k) {
  switch (k) {
    case DiagnosticsKind::ergodic:
      return "ergodic";
    case DiagnosticsKind::weak_mixing:
      return "weak_mixing";
    default:
      return "strong_mixing";
  }
}

std::string to_string(RigidityConclusion c) {
  switch (c) {
    case RigidityConclusion::lebesgue:
      return "lebesgue";
    case RigidityConclusion::atomic_finite:
      return "atomic_finite";
    case RigidityConclusion::dirac:
      return "dirac";
    default:
      return "inconsistent_input";
  }
}

}  // namespace sitor
