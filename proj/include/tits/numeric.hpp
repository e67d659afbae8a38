#pragma once

// Exact integer helpers shared by every module: checked 64-bit arithmetic,
// primality and factorisation by trial division, and big rationals.

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace tits {

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

/// Throws ResourceError on signed overflow.
std::int64_t checked_add(std::int64_t a, std::int64_t b);
std::int64_t checked_mul(std::int64_t a, std::int64_t b);

std::int64_t gcd64(std::int64_t a, std::int64_t b);
std::int64_t lcm64(std::int64_t a, std::int64_t b);

/// Floor modulus: result in [0, m) for m > 0.
std::int64_t mod_floor(std::int64_t a, std::int64_t m);

bool is_prime(std::int64_t n);

/// Distinct prime divisors of |n| in increasing order; empty for |n| <= 1.
std::vector<std::int64_t> prime_divisors(std::int64_t n);

/// Full factorisation of |n| > 0 as (prime, exponent) pairs.
std::vector<std::pair<std::int64_t, int>> factorize(std::int64_t n);

/// Largest power of p dividing n (n > 0).
std::int64_t p_power_part(std::int64_t n, std::int64_t p);

std::int64_t pow_mod(std::int64_t base, std::int64_t exp, std::int64_t mod);

/// Inverse of a modulo m; throws ArgumentError when gcd(a, m) != 1.
std::int64_t inverse_mod(std::int64_t a, std::int64_t m);

/// Legendre symbol (a/p) for an odd prime p; 0 when p | a.
int legendre(std::int64_t a, std::int64_t p);

BigInt binomial(std::int64_t n, std::int64_t k);

/// Parses "n", "-n", "n/d" (d != 0) into a reduced rational.
BigRational parse_rational(std::string_view text);

/// Canonical "num/den" form; integers print without a denominator.
std::string format_rational(const BigRational& q);

}  // namespace tits
