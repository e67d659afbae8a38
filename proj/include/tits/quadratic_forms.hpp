#pragma once

// Diagonal quadratic forms over Q and their abstract shadows.

#include "tits/brauer.hpp"
#include "tits/rational_backend.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace tits {

/// Diagonal form <a_1, ..., a_n> with nonzero rational entries.
class QuadraticForm {
 public:
  /// Throws ArgumentError on a zero entry.
  explicit QuadraticForm(std::vector<BigRational> entries);
  static QuadraticForm parse(const std::vector<std::string>& entries);

  std::int64_t dim() const { return static_cast<std::int64_t>(entries_.size()); }
  const std::vector<BigRational>& entries() const { return entries_; }
  std::vector<std::string> to_strings() const;

  /// Orthogonal sum.
  QuadraticForm operator+(const QuadraticForm& other) const;

  friend bool operator==(const QuadraticForm&, const QuadraticForm&) = default;

 private:
  std::vector<BigRational> entries_;
};

/// (-1)^{n(n-1)/2} * prod a_i modulo squares.
SquareClass signed_discriminant(const QuadraticForm& q);

/// Sum over i < j of the quaternion classes (a_i, a_j).
RationalBrauerClass hasse_invariant(const QuadraticForm& q);

/// Class of C_0(q) for odd n, of either simple component of C_0(q) for even n.
/// Throws DomainError when n < 3, or n is even with nontrivial signed discriminant.
RationalBrauerClass even_clifford_class(const QuadraticForm& q);

/// Theorem-level stand-in for a form: dimension, even Clifford class, and an
/// asserted I^3(k) = 0 flag for the ambient field.
struct FormShadow {
  /// Throws ArgumentError unless dim >= 3 and the class has order <= 2.
  FormShadow(std::int64_t dim, BrauerClass clifford_class, bool i3_zero);

  std::int64_t dim;
  BrauerClass clifford_class;
  bool i3_zero;

  friend bool operator==(const FormShadow&, const FormShadow&) = default;
};

/// Shadow of a concrete form in the Br(Q) model. I^3(Q) is nonzero, so the flag is false.
FormShadow shadow_of(const QuadraticForm& q, const ModelPtr& rational_model);

/// Similarity via the classification rules (dim 6, or I^3 = 0 on both sides):
/// true iff the Clifford classes agree. Throws DomainError when neither rule applies
/// and ArgumentError on mixed models or dimensions.
bool similar_under_classification(const FormShadow& x, const FormShadow& y);

}  // namespace tits
