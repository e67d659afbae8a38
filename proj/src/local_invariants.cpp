#include "tits/local_invariants.hpp"

#include "tits/errors.hpp"
#include "tits/numeric.hpp"

#include <numeric>

namespace tits {

Place Place::finite(std::int64_t p) {
  if (!is_prime(p)) throw ArgumentError("place must be a prime, got " + std::to_string(p));
  return Place(p);
}

std::string Place::to_string() const { return is_real() ? "real" : std::to_string(prime_); }

QZ::QZ(std::int64_t num, std::int64_t den) {
  if (den <= 0) throw ArgumentError("Q/Z denominator must be positive");
  num = mod_floor(num, den);
  std::int64_t g = std::gcd(num, den);
  num_ = num / g;
  den_ = den / g;
}

QZ QZ::operator+(const QZ& other) const {
  std::int64_t den = lcm64(den_, other.den_);
  std::int64_t a = num_ * (den / den_);
  std::int64_t b = other.num_ * (den / other.den_);
  return QZ(checked_add(a, b) % den, den);
}

QZ QZ::operator-() const { return QZ(den_ - num_, den_); }

QZ QZ::p_part(std::int64_t p) const {
  // den = p^k * r with gcd(p, r) = 1; the p-part is the unique x/p^k congruent
  // to num/den in Z/p^k-coordinates: x = num * r^{-1} mod p^k.
  std::int64_t pk = p_power_part(den_, p);
  if (pk == 1) return QZ();
  std::int64_t r = den_ / pk;
  std::int64_t inv = inverse_mod(r, pk);
  __int128 x = static_cast<__int128>(num_ % pk) * inv % pk;
  return QZ(static_cast<std::int64_t>(x), pk);
}

std::string QZ::to_string() const {
  if (num_ == 0) return "0";
  return std::to_string(num_) + "/" + std::to_string(den_);
}

QZ QZ::parse(const std::string& text) {
  BigRational q = parse_rational(text);
  const BigInt& n = boost::multiprecision::numerator(q);
  const BigInt& d = boost::multiprecision::denominator(q);
  if (n > INT64_MAX || n < INT64_MIN || d > INT64_MAX) throw ResourceError("invariant too large: " + text);
  return QZ(static_cast<std::int64_t>(n), static_cast<std::int64_t>(d));
}

RationalBrauerClass::RationalBrauerClass(const std::map<Place, QZ>& invariants) {
  QZ total;
  for (const auto& [place, inv] : invariants) {
    if (inv.is_zero()) continue;
    if (place.is_real() && inv != QZ(1, 2)) {
      throw ArgumentError("invariant at the real place must be 0 or 1/2");
    }
    invariants_.emplace(place, inv);
    total = total + inv;
  }
  if (!total.is_zero()) throw ArgumentError("local invariants must sum to zero in Q/Z");
}

QZ RationalBrauerClass::invariant(const Place& v) const {
  auto it = invariants_.find(v);
  return it == invariants_.end() ? QZ() : it->second;
}

std::vector<Place> RationalBrauerClass::ramified_places() const {
  std::vector<Place> out;
  for (const auto& [place, inv] : invariants_) out.push_back(place);
  return out;
}

std::int64_t RationalBrauerClass::order() const {
  std::int64_t out = 1;
  for (const auto& [place, inv] : invariants_) out = lcm64(out, inv.order());
  return out;
}

RationalBrauerClass RationalBrauerClass::operator+(const RationalBrauerClass& other) const {
  std::map<Place, QZ> sum = invariants_;
  for (const auto& [place, inv] : other.invariants_) {
    QZ s = sum[place] + inv;
    if (s.is_zero()) {
      sum.erase(place);
    } else {
      sum[place] = s;
    }
  }
  return RationalBrauerClass(Unchecked{}, std::move(sum));
}

RationalBrauerClass RationalBrauerClass::operator-() const {
  std::map<Place, QZ> neg;
  for (const auto& [place, inv] : invariants_) neg.emplace(place, -inv);
  return RationalBrauerClass(Unchecked{}, std::move(neg));
}

RationalBrauerClass RationalBrauerClass::p_part(std::int64_t p) const {
  // Componentwise projection is a homomorphism, so reciprocity is preserved.
  std::map<Place, QZ> out;
  for (const auto& [place, inv] : invariants_) {
    QZ part = inv.p_part(p);
    if (!part.is_zero()) out.emplace(place, part);
  }
  return RationalBrauerClass(Unchecked{}, std::move(out));
}

}  // namespace tits
