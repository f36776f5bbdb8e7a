#pragma once

#include <functional>
#include <string>
#include <vector>

#include "sitor/exact.hpp"

namespace sitor {

// An indexed family of finite subsets of the nonnegative integers used for
// averaging. Built-in kinds are interval [0, N) and shifted interval
// [c*N, c*N + N); arbitrary sequences are supplied as explicit lists.
class FolnerSequence {
 public:
  enum class Kind { interval, shifted_interval, custom };

  static FolnerSequence interval();
  static FolnerSequence shifted_interval(long long offset_coeff = 1);
  static FolnerSequence custom(std::vector<std::vector<long long>> sets);

  Kind kind() const { return kind_; }
  long long offset_coeff() const { return offset_coeff_; }

  // F_N for N >= 1, sorted ascending, always nonempty.
  std::vector<long long> set_at(long long N) const;

  // Averages of eventually periodic sequences over growing windows converge
  // to the period mean; only the built-in interval kinds guarantee that.
  bool interval_like() const { return kind_ != Kind::custom; }

  long long max_index() const;  // largest usable N (unbounded for intervals)

  std::string describe() const;

 private:
  FolnerSequence() = default;
  Kind kind_ = Kind::interval;
  long long offset_coeff_ = 1;
  std::vector<std::vector<long long>> sets_;
};

// A subset of the nonnegative integers with decidable membership: everything,
// an explicit finite list, an arithmetic progression {a + d*j : j >= 0}, or a
// predicate.
class IntegerSubset {
 public:
  static IntegerSubset all();
  static IntegerSubset explicit_list(std::vector<long long> values);
  static IntegerSubset progression(long long start, long long step);
  static IntegerSubset predicate(std::function<bool(long long)> pred, std::string label);

  bool contains(long long j) const;
  long long count_in(const std::vector<long long>& finite_set) const;
  std::string describe() const { return label_; }

 private:
  IntegerSubset() = default;
  std::function<bool(long long)> pred_;
  std::string label_;
};

struct DensityReport {
  std::vector<Rat> partials;  // |E intersect F_N| / |F_N| for N = 1..N_max
  Rat estimate;               // final partial
  Rat upper_estimate;         // max over the tail half of the partials
  Rat lower_estimate;         // min over the tail half
};

DensityReport density(const IntegerSubset& e, const FolnerSequence& sigma, long long n_max);

// Exact ratios |(F_N + m) symmetric-difference F_N| / |F_N| for N <= N_max.
std::vector<Rat> folner_check(const FolnerSequence& sigma, long long m, long long n_max);

}  // namespace sitor
