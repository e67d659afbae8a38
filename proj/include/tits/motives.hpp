#pragma once

// Finite multisets of Brauer classes standing in for direct sums of
// noncommutative motives of central simple algebras.

#include "tits/brauer.hpp"

#include <cstdint>
#include <map>
#include <vector>

namespace tits {

class MotiveSum {
 public:
  explicit MotiveSum(ModelPtr model) : model_(std::move(model)) {}
  MotiveSum(ModelPtr model, const std::vector<BrauerClass>& classes);

  /// Adds `mult` copies of c; mult must be >= 0.
  void add(const BrauerClass& c, std::int64_t mult = 1);

  const ModelPtr& model() const { return model_; }
  /// Class -> multiplicity, every multiplicity >= 1, in canonical class order.
  const std::map<BrauerClass, std::int64_t>& counts() const { return counts_; }
  std::int64_t multiplicity(const BrauerClass& c) const;
  std::int64_t cardinality() const { return cardinality_; }
  bool empty() const { return cardinality_ == 0; }
  std::vector<BrauerClass> support() const;
  /// Flattened multiset in canonical order.
  std::vector<BrauerClass> elements() const;

  /// Distinct primes dividing the order of some member.
  std::vector<std::int64_t> primes() const;

  friend bool operator==(const MotiveSum& a, const MotiveSum& b) { return a.counts_ == b.counts_; }

 private:
  ModelPtr model_;
  std::map<BrauerClass, std::int64_t> counts_;
  std::int64_t cardinality_ = 0;
};

MotiveSum direct_sum(const MotiveSum& x, const MotiveSum& y);
MotiveSum tensor(const MotiveSum& x, const MotiveSum& y);

/// Multiset of p-primary parts of the members of x.
MotiveSum p_primary(const MotiveSum& x, std::int64_t p);

/// Equal cardinality and, for every prime p, equal multisets of p-primary parts.
bool is_isomorphic(const MotiveSum& x, const MotiveSum& y);

/// Evaluates is_isomorphic(x, y) and is_isomorphic(x + n, y + n). Returns the
/// common answer; throws std::logic_error if they ever disagree.
bool cancel_common(const MotiveSum& x, const MotiveSum& y, const MotiveSum& n);

}  // namespace tits
