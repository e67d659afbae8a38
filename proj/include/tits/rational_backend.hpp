#pragma once

// Hilbert symbols over Q and the Brauer classes of quaternion algebras.

#include "tits/local_invariants.hpp"
#include "tits/numeric.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace tits {

/// A nonzero rational modulo squares, stored as a sign and the sorted set of
/// primes occurring to odd power. Never overflows however many primes occur.
class SquareClass {
 public:
  SquareClass() = default;
  /// Throws ArgumentError for zero; ResourceError if numerator or denominator exceed int64.
  explicit SquareClass(const BigRational& q);
  static SquareClass of(std::int64_t n) { return SquareClass(BigRational(n)); }

  int sign() const { return sign_; }
  const std::vector<std::int64_t>& primes() const { return primes_; }
  bool is_trivial() const { return sign_ == 1 && primes_.empty(); }
  bool contains(std::int64_t p) const;

  /// The square-free integer representing the class.
  BigInt representative() const;
  std::string to_string() const { return representative().str(); }

  SquareClass operator*(const SquareClass& other) const;

  friend bool operator==(const SquareClass&, const SquareClass&) = default;

 private:
  int sign_ = 1;
  std::vector<std::int64_t> primes_;
};

/// Local Hilbert symbol (a, b)_v in {+1, -1}.
int hilbert_symbol(const SquareClass& a, const SquareClass& b, const Place& v);
int hilbert_symbol(const BigRational& a, const BigRational& b, const Place& v);

/// Places where (a, b)_v can be -1: the real place, 2, and primes dividing a or b.
std::vector<Place> relevant_places(const SquareClass& a, const SquareClass& b);

/// Class of the quaternion algebra (a, b): invariant 1/2 where the symbol is -1.
RationalBrauerClass quaternion_class(const SquareClass& a, const SquareClass& b);
RationalBrauerClass quaternion_class(const BigRational& a, const BigRational& b);

/// Classes of (-1, p) for primes p = 3 mod 4. Throws ArgumentError on a bad prime.
std::vector<RationalBrauerClass> distinct_conic_family(const std::vector<std::int64_t>& primes);

}  // namespace tits
