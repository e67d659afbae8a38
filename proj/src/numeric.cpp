#include "tits/numeric.hpp"

#include "tits/errors.hpp"

#include <cstdlib>
#include <numeric>
#include <tuple>

namespace tits {

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t out = 0;
  if (__builtin_add_overflow(a, b, &out)) throw ResourceError("integer overflow in addition");
  return out;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t out = 0;
  if (__builtin_mul_overflow(a, b, &out)) throw ResourceError("integer overflow in multiplication");
  return out;
}

std::int64_t gcd64(std::int64_t a, std::int64_t b) { return std::gcd(a, b); }

std::int64_t lcm64(std::int64_t a, std::int64_t b) {
  if (a == 0 || b == 0) return 0;
  return checked_mul(std::abs(a) / std::gcd(a, b), std::abs(b));
}

std::int64_t mod_floor(std::int64_t a, std::int64_t m) {
  std::int64_t r = a % m;
  return r < 0 ? r + m : r;
}

bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  if (n < 4) return true;
  if (n % 2 == 0 || n % 3 == 0) return false;
  for (std::int64_t d = 5; d <= n / d; d += 6) {
    if (n % d == 0 || n % (d + 2) == 0) return false;
  }
  return true;
}

std::vector<std::pair<std::int64_t, int>> factorize(std::int64_t n) {
  if (n == 0) throw ArgumentError("cannot factorize zero");
  if (n == INT64_MIN) throw ResourceError("cannot factorize INT64_MIN");
  n = std::abs(n);
  std::vector<std::pair<std::int64_t, int>> out;
  for (std::int64_t d = 2; d <= n / d; ++d) {
    if (n % d != 0) continue;
    int e = 0;
    while (n % d == 0) {
      n /= d;
      ++e;
    }
    out.emplace_back(d, e);
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

std::vector<std::int64_t> prime_divisors(std::int64_t n) {
  std::vector<std::int64_t> out;
  if (n == 0 || n == 1 || n == -1) return out;
  for (auto [p, e] : factorize(n)) out.push_back(p);
  return out;
}

std::int64_t p_power_part(std::int64_t n, std::int64_t p) {
  std::int64_t out = 1;
  while (n % p == 0) {
    n /= p;
    out *= p;
  }
  return out;
}

std::int64_t pow_mod(std::int64_t base, std::int64_t exp, std::int64_t mod) {
  __int128 result = 1 % mod;
  __int128 b = mod_floor(base, mod);
  while (exp > 0) {
    if (exp & 1) result = result * b % mod;
    b = b * b % mod;
    exp >>= 1;
  }
  return static_cast<std::int64_t>(result);
}

std::int64_t inverse_mod(std::int64_t a, std::int64_t m) {
  if (m == 1) return 0;
  std::int64_t t0 = 0, t1 = 1, r0 = m, r1 = mod_floor(a, m);
  while (r1 != 0) {
    std::int64_t q = r0 / r1;
    std::tie(t0, t1) = std::make_pair(t1, t0 - q * t1);
    std::tie(r0, r1) = std::make_pair(r1, r0 - q * r1);
  }
  if (r0 != 1) throw ArgumentError("no inverse of " + std::to_string(a) + " modulo " + std::to_string(m));
  return mod_floor(t0, m);
}

int legendre(std::int64_t a, std::int64_t p) {
  std::int64_t r = mod_floor(a, p);
  if (r == 0) return 0;
  return pow_mod(r, (p - 1) / 2, p) == 1 ? 1 : -1;
}

BigInt binomial(std::int64_t n, std::int64_t k) {
  if (n < 0 || k < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  BigInt out = 1;
  for (std::int64_t i = 1; i <= k; ++i) {
    out *= (n - k + i);
    out /= i;
  }
  return out;
}

namespace {

BigInt parse_integer(std::string_view text) {
  if (text.empty()) throw ArgumentError("empty integer literal");
  std::size_t start = (text[0] == '-' || text[0] == '+') ? 1 : 0;
  if (start == text.size()) throw ArgumentError("malformed integer literal: " + std::string(text));
  for (std::size_t i = start; i < text.size(); ++i) {
    if (text[i] < '0' || text[i] > '9') {
      throw ArgumentError("malformed integer literal: " + std::string(text));
    }
  }
  BigInt value(std::string(text.substr(start)));
  return text[0] == '-' ? BigInt(-value) : value;
}

}  // namespace

BigRational parse_rational(std::string_view text) {
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return BigRational(parse_integer(text));
  BigInt num = parse_integer(text.substr(0, slash));
  BigInt den = parse_integer(text.substr(slash + 1));
  if (den == 0) throw ArgumentError("zero denominator in rational literal: " + std::string(text));
  return BigRational(num, den);
}

std::string format_rational(const BigRational& q) {
  const BigInt& den = boost::multiprecision::denominator(q);
  if (den == 1) return boost::multiprecision::numerator(q).str();
  return boost::multiprecision::numerator(q).str() + "/" + den.str();
}

}  // namespace tits
