#pragma once

// The ring R_B(k) = Z[Br(k)] / ([k] + [A (x) A'] - [A] - [A'], coprime indexes).
// Elements are kept in normal form: support on the identity and on classes of
// prime-power order.

#include "tits/brauer.hpp"
#include "tits/motives.hpp"

#include <cstdint>
#include <map>

namespace tits {

using RawCombination = std::map<BrauerClass, std::int64_t>;

class RBElement {
 public:
  explicit RBElement(ModelPtr model) : model_(std::move(model)) {}
  /// Normal form of a single generator [c].
  static RBElement generator(const BrauerClass& c);

  const ModelPtr& model() const { return model_; }
  /// Nonzero coefficients only.
  const RawCombination& terms() const { return terms_; }
  std::int64_t coefficient(const BrauerClass& c) const;
  bool is_zero() const { return terms_.empty(); }

  RBElement operator+(const RBElement& other) const;
  RBElement operator-(const RBElement& other) const;
  RBElement operator-() const;
  RBElement operator*(const RBElement& other) const;
  RBElement scaled(std::int64_t k) const;

  friend bool operator==(const RBElement& a, const RBElement& b) { return a.terms_ == b.terms_; }

 private:
  friend RBElement normalize(const ModelPtr& model, const RawCombination& raw);
  void accumulate(const BrauerClass& c, std::int64_t k);

  ModelPtr model_;
  RawCombination terms_;
};

/// Rewrites each [c] to sum_p [p_part(c, p)] - (nu(c) - 1)[0], nu(c) the number
/// of distinct primes dividing order(c).
RBElement normalize(const ModelPtr& model, const RawCombination& raw);
RBElement from_motive(const MotiveSum& x);

bool is_normal_form(const RawCombination& raw);

std::int64_t augmentation(const RBElement& x);
std::int64_t augmentation(const RawCombination& raw);

bool equal(const RBElement& x, const RBElement& y);

}  // namespace tits
