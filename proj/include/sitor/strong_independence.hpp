#pragma once

#include <optional>
#include <string>
#include <vector>

#include "sitor/linalg.hpp"

namespace sitor {

// A family of n unimodular n x n integer matrices, the candidate for strong
// independence: for every nonzero integer row vector k the vectors
// k*B_1, ..., k*B_n must be linearly independent over the reals.
struct MatrixFamily {
  long n = 0;
  std::vector<IntMat> members;
};

// Validates the shape and the |det| = 1 gate; throws ContractError otherwise.
MatrixFamily make_family(std::vector<IntMat> members);

// Family (B, B^2, ..., B^n); B must be n x n unimodular.
MatrixFamily powers_family(const IntMat& b, long n);

// True iff det of the stacked rows k*B_1, ..., k*B_n is nonzero (independence
// of integer vectors over R equals nonvanishing of the integer determinant).
bool check_vector(const IntRowVec& k, const MatrixFamily& fam);

struct BoxCheckReport {
  long K = 0;
  bool all_pass = false;
  std::optional<IntRowVec> counterexample;  // lexicographically first failure
  unsigned long long vectors_tested = 0;
};

// Exhaustively checks every nonzero k in [-K, K]^n in lexicographic order
// from (-K, ..., -K). The scan may be partitioned across threads; the report
// is schedule-independent (first counterexample in lex order, and
// vectors_tested counts the nonzero vectors up to and including it).
BoxCheckReport box_check(const MatrixFamily& fam, long K, unsigned threads = 0);

enum class SIConclusion { proven, not_proven };

// Degree certificate for the powers of the M-variant tridiagonal matrix with
// a = 2. The matrix is symmetric with n distinct eigenvalues
// 2 + 2cos(2k*pi/(2n+1)), so its eigenvectors are pairwise orthogonal and the
// span of any n-1 of them is the orthogonal complement of the remaining one;
// a nonzero integer vector in that span would force a rational annihilating
// polynomial of degree n-1 for the complementary eigenvalue. When 2n+1 is
// prime every eigenvalue has minimal-polynomial degree exactly n, which rules
// that out and proves the powers strongly independent.
struct SICertificate {
  std::string family_descriptor;
  long n = 0;
  unsigned long modulus = 0;  // 2n+1
  bool modulus_is_prime = false;
  std::vector<long> per_eigenvalue_degrees;  // indexed by k = 1..n
  SIConclusion conclusion = SIConclusion::not_proven;
  std::string notes;
};

SICertificate certify_powers_m2(long n);

enum class SIVerdict { proven, evidence_only, refuted };

struct SIReport {
  std::string family_descriptor;
  BoxCheckReport box;
  std::optional<SICertificate> certificate;
  SIVerdict verdict = SIVerdict::evidence_only;
};

// Merges exhaustive box evidence with an optional certificate.
SIReport si_report(const MatrixFamily& fam, long K,
                   std::optional<SICertificate> certificate, unsigned threads = 0);

std::string to_string(SIConclusion c);
std::string to_string(SIVerdict v);

}  // namespace sitor
