#include "tits/rational_backend.hpp"

#include "tits/errors.hpp"

#include <algorithm>
#include <set>

namespace tits {

namespace {

std::int64_t to_int64(const BigInt& x) {
  if (x > INT64_MAX || x < INT64_MIN) throw ResourceError("rational component exceeds 64 bits: " + x.str());
  return static_cast<std::int64_t>(x);
}

// Unit parities at 2 for an odd integer u, both additive in u:
// eps(u) = (u-1)/2 mod 2 and omega(u) = (u^2-1)/8 mod 2.
int eps_prime(std::int64_t q) { return static_cast<int>(((q - 1) / 2) & 1); }
int omega_prime(std::int64_t q) {
  std::int64_t r = q % 8;
  return (r == 3 || r == 5) ? 1 : 0;
}

// The unit part of a square class at p (the class with p removed) as a list of factors.
struct UnitAt {
  int sign;
  std::vector<std::int64_t> factors;
};

UnitAt unit_at(const SquareClass& a, std::int64_t p) {
  UnitAt u{a.sign(), {}};
  for (std::int64_t q : a.primes()) {
    if (q != p) u.factors.push_back(q);
  }
  return u;
}

int legendre_of_unit(const UnitAt& u, std::int64_t p) {
  int s = 1;
  if (u.sign < 0) s *= legendre(-1, p);
  for (std::int64_t q : u.factors) s *= legendre(q, p);
  return s;
}

int eps_of_unit(const UnitAt& u) {
  int e = u.sign < 0 ? 1 : 0;
  for (std::int64_t q : u.factors) e ^= eps_prime(q);
  return e;
}

int omega_of_unit(const UnitAt& u) {
  int w = 0;
  for (std::int64_t q : u.factors) w ^= omega_prime(q);
  return w;
}

}  // namespace

SquareClass::SquareClass(const BigRational& q) {
  if (q == 0) throw ArgumentError("square class of zero");
  std::int64_t num = to_int64(boost::multiprecision::numerator(q));
  std::int64_t den = to_int64(boost::multiprecision::denominator(q));
  sign_ = num < 0 ? -1 : 1;
  // n/d and n*d agree modulo squares.
  std::set<std::int64_t> odd;
  for (std::int64_t part : {num, den}) {
    for (auto [p, e] : factorize(part)) {
      if (e % 2 == 1) {
        if (!odd.erase(p)) odd.insert(p);
      }
    }
  }
  primes_.assign(odd.begin(), odd.end());
}

bool SquareClass::contains(std::int64_t p) const {
  return std::binary_search(primes_.begin(), primes_.end(), p);
}

BigInt SquareClass::representative() const {
  BigInt out = sign_;
  for (std::int64_t p : primes_) out *= p;
  return out;
}

SquareClass SquareClass::operator*(const SquareClass& other) const {
  SquareClass out;
  out.sign_ = sign_ * other.sign_;
  std::set_symmetric_difference(primes_.begin(), primes_.end(), other.primes_.begin(), other.primes_.end(),
                                std::back_inserter(out.primes_));
  return out;
}

int hilbert_symbol(const SquareClass& a, const SquareClass& b, const Place& v) {
  if (v.is_real()) return (a.sign() < 0 && b.sign() < 0) ? -1 : 1;
  std::int64_t p = v.prime();
  int alpha = a.contains(p) ? 1 : 0;
  int beta = b.contains(p) ? 1 : 0;
  UnitAt u = unit_at(a, p);
  UnitAt w = unit_at(b, p);
  if (p == 2) {
    int e = (eps_of_unit(u) & eps_of_unit(w)) ^ (alpha & omega_of_unit(w)) ^ (beta & omega_of_unit(u));
    return e ? -1 : 1;
  }
  int s = 1;
  if (alpha && beta && eps_prime(p)) s = -s;
  if (beta) s *= legendre_of_unit(u, p);
  if (alpha) s *= legendre_of_unit(w, p);
  return s;
}

int hilbert_symbol(const BigRational& a, const BigRational& b, const Place& v) {
  return hilbert_symbol(SquareClass(a), SquareClass(b), v);
}

std::vector<Place> relevant_places(const SquareClass& a, const SquareClass& b) {
  std::set<std::int64_t> primes{2};
  primes.insert(a.primes().begin(), a.primes().end());
  primes.insert(b.primes().begin(), b.primes().end());
  std::vector<Place> out{Place::real()};
  for (std::int64_t p : primes) out.push_back(Place::finite(p));
  return out;
}

RationalBrauerClass quaternion_class(const SquareClass& a, const SquareClass& b) {
  std::map<Place, QZ> inv;
  for (const Place& v : relevant_places(a, b)) {
    if (hilbert_symbol(a, b, v) == -1) inv.emplace(v, QZ(1, 2));
  }
  return RationalBrauerClass(inv);
}

RationalBrauerClass quaternion_class(const BigRational& a, const BigRational& b) {
  return quaternion_class(SquareClass(a), SquareClass(b));
}

std::vector<RationalBrauerClass> distinct_conic_family(const std::vector<std::int64_t>& primes) {
  std::vector<RationalBrauerClass> out;
  for (std::int64_t p : primes) {
    if (!is_prime(p) || p % 4 != 3) {
      throw ArgumentError("conic family needs primes congruent to 3 mod 4, got " + std::to_string(p));
    }
    out.push_back(quaternion_class(SquareClass::of(-1), SquareClass::of(p)));
  }
  return out;
}

}  // namespace tits
