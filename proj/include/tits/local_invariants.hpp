#pragma once

// Places of Q and Brauer classes of Q described by their local invariants.

#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace tits {

/// A place of Q: the real place or a finite prime.
class Place {
 public:
  static Place real() { return Place(0); }
  /// Throws ArgumentError unless p is prime.
  static Place finite(std::int64_t p);

  bool is_real() const { return prime_ == 0; }
  /// The prime of a finite place; 0 for the real place.
  std::int64_t prime() const { return prime_; }
  std::string to_string() const;

  // The real place sorts before every finite place.
  friend auto operator<=>(const Place&, const Place&) = default;

 private:
  explicit Place(std::int64_t p) : prime_(p) {}
  std::int64_t prime_;
};

/// An element of Q/Z held as a reduced fraction num/den with 0 <= num < den.
class QZ {
 public:
  QZ() = default;
  /// Reduces num/den modulo 1; den must be positive.
  QZ(std::int64_t num, std::int64_t den);

  std::int64_t num() const { return num_; }
  std::int64_t den() const { return den_; }
  bool is_zero() const { return num_ == 0; }
  /// Order in Q/Z, which is the reduced denominator.
  std::int64_t order() const { return den_; }

  QZ operator+(const QZ& other) const;
  QZ operator-() const;
  /// The component of p-power order in the primary decomposition of Q/Z.
  QZ p_part(std::int64_t p) const;

  std::string to_string() const;
  /// Parses "a/b" or "0".
  static QZ parse(const std::string& text);

  friend bool operator==(const QZ&, const QZ&) = default;
  friend auto operator<=>(const QZ&, const QZ&) = default;

 private:
  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

/// Element of Br(Q): finitely many nonzero local invariants summing to zero in Q/Z,
/// with the real invariant in {0, 1/2}.
class RationalBrauerClass {
 public:
  RationalBrauerClass() = default;
  /// Validates the real-place constraint and reciprocity; zero entries are dropped.
  explicit RationalBrauerClass(const std::map<Place, QZ>& invariants);

  const std::map<Place, QZ>& invariants() const { return invariants_; }
  QZ invariant(const Place& v) const;
  /// Places with nonzero invariant, in place order.
  std::vector<Place> ramified_places() const;
  bool is_trivial() const { return invariants_.empty(); }
  std::int64_t order() const;

  RationalBrauerClass operator+(const RationalBrauerClass& other) const;
  RationalBrauerClass operator-() const;
  RationalBrauerClass p_part(std::int64_t p) const;

  friend bool operator==(const RationalBrauerClass&, const RationalBrauerClass&) = default;
  friend bool operator<(const RationalBrauerClass& a, const RationalBrauerClass& b) {
    return a.invariants_ < b.invariants_;
  }

 private:
  struct Unchecked {};
  RationalBrauerClass(Unchecked, std::map<Place, QZ> invariants) : invariants_(std::move(invariants)) {}

  std::map<Place, QZ> invariants_;
};

}  // namespace tits
