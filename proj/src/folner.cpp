#include "sitor/folner.hpp"

#include <algorithm>
#include <limits>

namespace sitor {

FolnerSequence FolnerSequence::interval() {
  FolnerSequence s;
  s.kind_ = Kind::interval;
  return s;
}

FolnerSequence FolnerSequence::shifted_interval(long long offset_coeff) {
  if (offset_coeff < 0) throw ContractError("shifted interval offset must be >= 0");
  FolnerSequence s;
  s.kind_ = Kind::shifted_interval;
  s.offset_coeff_ = offset_coeff;
  return s;
}

FolnerSequence FolnerSequence::custom(std::vector<std::vector<long long>> sets) {
  if (sets.empty()) throw ContractError("custom averaging sequence must be nonempty");
  for (auto& set : sets) {
    if (set.empty()) throw ContractError("every set in the sequence must be nonempty");
    std::sort(set.begin(), set.end());
    set.erase(std::unique(set.begin(), set.end()), set.end());
    if (set.front() < 0) throw ContractError("sets must contain nonnegative integers");
  }
  FolnerSequence s;
  s.kind_ = Kind::custom;
  s.sets_ = std::move(sets);
  return s;
}

std::vector<long long> FolnerSequence::set_at(long long N) const {
  if (N < 1) throw ContractError("averaging sets are indexed from N = 1");
  switch (kind_) {
    case Kind::interval: {
      std::vector<long long> v(static_cast<size_t>(N));
      for (long long j = 0; j < N; ++j) v[static_cast<size_t>(j)] = j;
      return v;
    }
    case Kind::shifted_interval: {
      std::vector<long long> v(static_cast<size_t>(N));
      const long long base = offset_coeff_ * N;
      for (long long j = 0; j < N; ++j) v[static_cast<size_t>(j)] = base + j;
      return v;
    }
    case Kind::custom:
      if (N > static_cast<long long>(sets_.size()))
        throw ContractError("custom averaging sequence has no set with this index");
      return sets_[static_cast<size_t>(N - 1)];
  }
  throw ContractError("unreachable");
}

long long FolnerSequence::max_index() const {
  return kind_ == Kind::custom ? static_cast<long long>(sets_.size())
                               : std::numeric_limits<long long>::max();
}

std::string FolnerSequence::describe() const {
  switch (kind_) {
    case Kind::interval:
      return "intervals [0,N)";
    case Kind::shifted_interval:
      return "shifted intervals [" + std::to_string(offset_coeff_) + "N, " +
             std::to_string(offset_coeff_) + "N+N)";
    default:
      return "custom (" + std::to_string(sets_.size()) + " sets)";
  }
}

IntegerSubset IntegerSubset::all() {
  IntegerSubset e;
  e.pred_ = [](long long) { return true; };
  e.label_ = "all nonnegative integers";
  return e;
}

IntegerSubset IntegerSubset::explicit_list(std::vector<long long> values) {
  std::sort(values.begin(), values.end());
  IntegerSubset e;
  e.label_ = "explicit list (" + std::to_string(values.size()) + " values)";
  e.pred_ = [vs = std::move(values)](long long j) {
    return std::binary_search(vs.begin(), vs.end(), j);
  };
  return e;
}

IntegerSubset IntegerSubset::progression(long long start, long long step) {
  if (step <= 0) throw ContractError("progression step must be positive");
  IntegerSubset e;
  e.label_ = "progression " + std::to_string(start) + " + " + std::to_string(step) + "j";
  e.pred_ = [start, step](long long j) { return j >= start && (j - start) % step == 0; };
  return e;
}

IntegerSubset IntegerSubset::predicate(std::function<bool(long long)> pred, std::string label) {
  if (!pred) throw ContractError("null predicate");
  IntegerSubset e;
  e.pred_ = std::move(pred);
  e.label_ = std::move(label);
  return e;
}

bool IntegerSubset::contains(long long j) const { return pred_(j); }

long long IntegerSubset::count_in(const std::vector<long long>& finite_set) const {
  long long count = 0;
  for (long long j : finite_set)
    if (pred_(j)) ++count;
  return count;
}

DensityReport density(const IntegerSubset& e, const FolnerSequence& sigma, long long n_max) {
  if (n_max < 1) throw ContractError("density: N_max must be >= 1");
  n_max = std::min(n_max, sigma.max_index());
  DensityReport report;
  report.partials.reserve(static_cast<size_t>(n_max));
  for (long long N = 1; N <= n_max; ++N) {
    const auto f = sigma.set_at(N);
    report.partials.emplace_back(Int(e.count_in(f)), Int(f.size()));
  }
  report.estimate = report.partials.back();
  const size_t tail_begin = report.partials.size() / 2;
  report.upper_estimate = report.partials[tail_begin];
  report.lower_estimate = report.partials[tail_begin];
  for (size_t i = tail_begin; i < report.partials.size(); ++i) {
    report.upper_estimate = std::max(report.upper_estimate, report.partials[i]);
    report.lower_estimate = std::min(report.lower_estimate, report.partials[i]);
  }
  return report;
}

std::vector<Rat> folner_check(const FolnerSequence& sigma, long long m, long long n_max) {
  if (m < 0) throw ContractError("folner_check: shift must be >= 0");
  if (n_max < 1) throw ContractError("folner_check: N_max must be >= 1");
  n_max = std::min(n_max, sigma.max_index());
  std::vector<Rat> ratios;
  ratios.reserve(static_cast<size_t>(n_max));
  for (long long N = 1; N <= n_max; ++N) {
    const auto f = sigma.set_at(N);
    std::vector<long long> shifted(f.size());
    for (size_t i = 0; i < f.size(); ++i) shifted[i] = f[i] + m;
    std::vector<long long> sym_diff;
    std::set_symmetric_difference(f.begin(), f.end(), shifted.begin(), shifted.end(),
                                  std::back_inserter(sym_diff));
    ratios.emplace_back(Int(sym_diff.size()), Int(f.size()));
  }
  return ratios;
}

}  // namespace sitor
