#pragma once

#include <complex>
#include <optional>
#include <string>
#include <vector>

#include "sitor/folner.hpp"
#include "sitor/measures.hpp"
#include "sitor/strong_independence.hpp"

namespace sitor {

struct PairKL {
  IntRowVec k;
  IntRowVec l;
};

struct DiagnosticsRequest {
  MeasureSpec mu;
  IntMat a;
  std::vector<PairKL> pairs;
  FolnerSequence folner = FolnerSequence::interval();
  long long n_max = 100;
  unsigned threads = 0;  // 0 = hardware concurrency; pairs evaluated in parallel
};

enum class Verdict { pass, fail, inconclusive };

// An exact value attached to a limit or target: an element of Q[x]/(Phi_q)
// (q = 1 means plain rationals, as for Lebesgue-derived values).
struct ExactValue {
  FieldElem value;
  Int q;
  std::complex<double> approx{0.0, 0.0};
  std::optional<Rat> as_rational() const { return value.as_rational(); }
};

struct PairRecord {
  PairKL pair;
  // Running averages (ergodic / weak mixing) or raw tail values (strong
  // mixing) for N = 1..N_max resp. j = 0..N_max-1.
  std::vector<std::complex<double>> partials;
  std::complex<double> target_approx{0.0, 0.0};
  std::optional<ExactValue> exact_target;
  std::optional<ExactValue> exact_limit;
  long long preperiod = -1;  // -1: no exact cycle was established
  long long period = -1;
  Verdict verdict = Verdict::inconclusive;
  std::string note;
};

enum class DiagnosticsKind { ergodic, weak_mixing, strong_mixing };

struct DiagnosticsReport {
  DiagnosticsKind kind = DiagnosticsKind::ergodic;
  bool inconsistent_input = false;
  std::string input_note;
  std::vector<PairRecord> per_pair;
  Verdict overall = Verdict::inconclusive;
};

// Averages of mu-hat(k A^j + l) against the target mu-hat(k) mu-hat(l).
// For atomic measures the sequence j -> k A^j mod q is eventually periodic,
// so the Cesaro limit along interval-like averaging sequences is computed
// exactly as the mean over one period and compared with zero tolerance.
DiagnosticsReport ergodic_average(const DiagnosticsRequest& req);

// Averages of |mu-hat(k A^j + l) - mu-hat(k) mu-hat(l)|^2; the exact limit
// must vanish for a pass.
DiagnosticsReport weak_mixing_average(const DiagnosticsRequest& req);

// The tail j -> mu-hat(k A^j + l): with an exact cycle, the limit exists iff
// the periodic part is constant, and the verdict is exact.
DiagnosticsReport strong_mixing_tail(const DiagnosticsRequest& req);

// Uniform empirical measure on x0, T x0, ..., T^(N-1) x0 (multiset visit
// counts), computed exactly modulo the denominator of x0.
AtomicMeasure orbit_measure(const TorusPointQ& x0, const IntMat& a, long long n);

// Exact partial sum over j < J of mu-hat(k A^j + l), reconstructed from the
// detected preperiod and period of j -> k A^j mod q (one field evaluation per
// distinct residue index, full periods counted by multiplication). field must
// be the cyclotomic field of the measure's denominator.
FieldElem fourier_tail_sum(const AtomicMeasure& mu, const IntMat& a, const IntRowVec& k,
                           const IntRowVec& l, long long j_count, const FieldPtr& field);

struct RigidityRequest {
  MeasureSpec mu;
  IntMat a;
  MatrixFamily family;
  IntegerSubset e = IntegerSubset::all();
  FolnerSequence folner = FolnerSequence::interval();
  IntRowVec witness_k;
  long long j_bound = 64;  // invariance under a^j + B_i is sampled for j <= j_bound in E
  std::optional<SICertificate> certificate;
  std::optional<BoxCheckReport> box_evidence;
};

struct InvarianceCheck {
  long long j = 0;
  long i = 0;  // family member index, 1-based
  bool holds = false;
};

enum class RigidityConclusion { lebesgue, atomic_finite, dirac, inconsistent_input };

struct RigidityReport {
  bool a_invariance = false;
  std::vector<InvarianceCheck> invariance_checks;
  long long j_bound = 0;
  std::string sampled_set;
  std::vector<IntRowVec> chain_rows;        // witness_k * B_i
  std::vector<FourierValue> fourier_chain;  // mu-hat at those rows
  bool all_exactly_one = false;
  std::vector<TorusPointQ> support_bound;
  bool support_verified = false;
  RigidityConclusion conclusion = RigidityConclusion::inconsistent_input;
  std::string notes;
};

// Replays the rigidity chain on a concrete measure: invariance of mu under a
// and under a^j + B_i for sampled j in E, the witnessed coefficients
// mu-hat(k B_i), and, when they all equal 1, the finite support bound from
// the stacked rows. The family must come with independence evidence (a
// proven certificate or a clean exhaustive box report).
RigidityReport rigidity_harness(const RigidityRequest& req);

struct DiracCheckResult {
  bool is_dirac = false;
  // Set when the measure has more than one atom yet every tested pair passed
  // the weak-mixing diagnostic; finite testing cannot certify weak mixing, so
  // this is a warning, not an error.
  bool contradiction_candidate = false;
};

DiracCheckResult dirac_check(const AtomicMeasure& mu, const DiagnosticsReport& weak_evidence);

std::string to_string(Verdict v);
std::string to_string(DiagnosticsKind k);
std::string to_string(RigidityConclusion c);

}  // namespace sitor
