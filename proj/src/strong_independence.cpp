#include "sitor/strong_independence.hpp"

#include <atomic>
#include <future>
#include <limits>
#include <sstream>
#include <thread>

#include "sitor/number_field.hpp"

namespace sitor {

MatrixFamily make_family(std::vector<IntMat> members) {
  if (members.empty()) throw ContractError("family must contain at least one matrix");
  const Eigen::Index n = members.front().rows();
  if (static_cast<Eigen::Index>(members.size()) != n)
    throw ContractError("family must contain exactly n matrices of order n");
  for (const IntMat& m : members) {
    if (m.rows() != n || m.cols() != n)
      throw ContractError("family members must all be n x n");
    const Int d = det(m);
    if (d != 1 && d != -1)
      throw ContractError("family member is not unimodular (|det| must be 1)");
  }
  return MatrixFamily{static_cast<long>(n), std::move(members)};
}

MatrixFamily powers_family(const IntMat& b, long n) {
  require_square(b);
  if (b.rows() != n) throw ContractError("powers_family: matrix order must equal n");
  const Int d = det(b);
  if (d != 1 && d != -1) throw ContractError("powers_family: base matrix must be unimodular");
  std::vector<IntMat> members;
  members.reserve(static_cast<size_t>(n));
  IntMat cur = b;
  for (long i = 1; i <= n; ++i) {
    members.push_back(cur);
    if (i < n) cur = (cur * b).eval();
  }
  return MatrixFamily{n, std::move(members)};
}

bool check_vector(const IntRowVec& k, const MatrixFamily& fam) {
  if (k.cols() != fam.n) throw DimensionError("check_vector: vector dimension mismatch");
  bool nonzero = false;
  for (Eigen::Index i = 0; i < k.cols(); ++i)
    if (k(i) != 0) nonzero = true;
  if (!nonzero) throw ContractError("check_vector: zero vector");
  std::vector<IntRowVec> rows;
  rows.reserve(fam.members.size());
  for (const IntMat& b : fam.members) rows.push_back((k * b).eval());
  return det(stack_rows(rows)) != 0;
}

namespace {

struct ChunkResult {
  bool found = false;
  unsigned long long fail_index = 0;
  IntRowVec counterexample;
};

// Digits (base 2K+1, most significant first) of the given scan index.
std::vector<long> decode_digits(unsigned long long idx, long n, unsigned long long base) {
  std::vector<long> digits(static_cast<size_t>(n), 0);
  for (long i = n - 1; i >= 0; --i) {
    digits[static_cast<size_t>(i)] = static_cast<long>(idx % base);
    idx /= base;
  }
  return digits;
}

ChunkResult scan_chunk(const MatrixFamily& fam, long K, unsigned long long begin,
                       unsigned long long end,
                       std::atomic<unsigned long long>* best_fail) {
  ChunkResult result;
  const unsigned long long base = static_cast<unsigned long long>(2 * K + 1);
  std::vector<long> digits = decode_digits(begin, fam.n, base);
  IntRowVec k(fam.n);
  for (unsigned long long idx = begin; idx < end; ++idx) {
    if ((idx & 1023ULL) == 0 && best_fail->load(std::memory_order_relaxed) < begin) {
      // A failure strictly before this chunk already wins; stop early.
      return result;
    }
    bool zero = true;
    for (long i = 0; i < fam.n; ++i) {
      k(i) = digits[static_cast<size_t>(i)] - K;
      if (k(i) != 0) zero = false;
    }
    if (!zero && !check_vector(k, fam)) {
      result.found = true;
      result.fail_index = idx;
      result.counterexample = k;
      // Publish for pruning of later chunks.
      unsigned long long seen = best_fail->load(std::memory_order_relaxed);
      while (idx < seen &&
             !best_fail->compare_exchange_weak(seen, idx, std::memory_order_relaxed)) {
      }
      return result;
    }
    // Odometer increment.
    for (long i = fam.n - 1; i >= 0; --i) {
      auto& d = digits[static_cast<size_t>(i)];
      if (++d < static_cast<long>(base)) break;
      d = 0;
    }
  }
  return result;
}

}  // namespace

BoxCheckReport box_check(const MatrixFamily& fam, long K, unsigned threads) {
  if (K < 1) throw ContractError("box_check: K must be >= 1");
  const unsigned long long base = static_cast<unsigned long long>(2 * K + 1);
  unsigned long long total = 1;
  for (long i = 0; i < fam.n; ++i) {
    if (total > std::numeric_limits<unsigned long long>::max() / base)
      throw UnsupportedError("box_check: enumeration too large");
    total *= base;
  }
  if (total > (1ULL << 40))
    throw UnsupportedError("box_check: enumeration too large for a desk-scale run");

  unsigned nthreads = threads != 0 ? threads : std::thread::hardware_concurrency();
  if (nthreads == 0) nthreads = 1;
  if (static_cast<unsigned long long>(nthreads) > total)
    nthreads = static_cast<unsigned>(total);

  std::atomic<unsigned long long> best_fail{std::numeric_limits<unsigned long long>::max()};
  std::vector<ChunkResult> results(nthreads);
  if (nthreads == 1) {
    results[0] = scan_chunk(fam, K, 0, total, &best_fail);
  } else {
    std::vector<std::future<ChunkResult>> futures;
    futures.reserve(nthreads);
    for (unsigned t = 0; t < nthreads; ++t) {
      const unsigned long long begin = total * t / nthreads;
      const unsigned long long end = total * (t + 1) / nthreads;
      futures.push_back(std::async(std::launch::async, scan_chunk, std::cref(fam), K,
                                   begin, end, &best_fail));
    }
    for (unsigned t = 0; t < nthreads; ++t) results[t] = futures[t].get();
  }

  // The zero vector sits at digit string (K, ..., K).
  unsigned long long zero_index = 0;
  for (long i = 0; i < fam.n; ++i) zero_index = zero_index * base + static_cast<unsigned long long>(K);

  BoxCheckReport report;
  report.K = K;
  const ChunkResult* first_fail = nullptr;
  for (const ChunkResult& r : results)
    if (r.found && (first_fail == nullptr || r.fail_index < first_fail->fail_index))
      first_fail = &r;
  if (first_fail == nullptr) {
    report.all_pass = true;
    report.vectors_tested = total - 1;
  } else {
    report.all_pass = false;
    report.counterexample = first_fail->counterexample;
    report.vectors_tested =
        first_fail->fail_index + 1 - (zero_index <= first_fail->fail_index ? 1 : 0);
  }
  return report;
}

SICertificate certify_powers_m2(long n) {
  if (n < 1) throw ContractError("certify_powers_m2: n must be >= 1");
  SICertificate cert;
  cert.n = n;
  cert.modulus = static_cast<unsigned long>(2 * n + 1);
  cert.modulus_is_prime = is_prime(cert.modulus);
  {
    std::ostringstream os;
    os << "powers of M_" << n << "(2)";
    cert.family_descriptor = os.str();
  }
  bool all_full_degree = true;
  long bad_k = 0, bad_deg = 0;
  for (long k = 1; k <= n; ++k) {
    const long deg =
        shifted_cos_minpoly(cert.modulus, static_cast<unsigned long>(k)).degree();
    cert.per_eigenvalue_degrees.push_back(deg);
    if (deg != n && all_full_degree) {
      all_full_degree = false;
      bad_k = k;
      bad_deg = deg;
    }
  }
  cert.conclusion = (cert.modulus_is_prime && all_full_degree) ? SIConclusion::proven
                                                               : SIConclusion::not_proven;
  std::ostringstream notes;
  if (cert.conclusion == SIConclusion::proven) {
    notes << "2n+1 = " << cert.modulus << " is prime and every eigenvalue "
          << "2+2cos(2k*pi/" << cert.modulus << ") has minimal-polynomial degree " << n
          << ". M_" << n << "(2) is symmetric, so its eigenvectors are pairwise "
          << "orthogonal and the span of any n-1 of them is the orthogonal complement "
          << "of the remaining one; a nonzero integer vector in that span would force "
          << "a rational annihilating polynomial of degree n-1 = " << (n - 1)
          << " for the complementary eigenvalue, contradicting degree " << n << ".";
  } else {
    if (!cert.modulus_is_prime) notes << "2n+1 = " << cert.modulus << " is composite. ";
    if (!all_full_degree)
      notes << "eigenvalue k=" << bad_k << " (value "
            << "2+2cos(" << 2 * bad_k << "pi/" << cert.modulus
            << ")) has minimal-polynomial degree " << bad_deg << " < " << n << ". ";
    notes << "The degree argument does not apply; no conclusion about strong "
          << "independence is drawn.";
  }
  cert.notes = notes.str();
  return cert;
}

SIReport si_report(const MatrixFamily& fam, long K, std::optional<SICertificate> certificate,
                   unsigned threads) {
  SIReport report;
  report.family_descriptor =
      certificate ? certificate->family_descriptor : "explicit family";
  report.box = box_check(fam, K, threads);
  report.certificate = std::move(certificate);
  if (!report.box.all_pass) {
    report.verdict = SIVerdict::refuted;
  } else if (report.certificate &&
             report.certificate->conclusion == SIConclusion::proven) {
    report.verdict = SIVerdict::proven;
  } else {
    report.verdict = SIVerdict::evidence_only;
  }
  return report;
}

std::string to_string(SIConclusion c) {
  return c == SIConclusion::proven ? "proven" : "not_proven";
}

std::string to_string(SIVerdict v) {
  switch (v) {
    case SIVerdict::proven:
      return "proven";
    case SIVerdict::refuted:
      return "refuted";
    default:
      return "evidence_only";
  }
}

}  // namespace sitor
