#pragma once

#include <stdexcept>
#include <string>

namespace tits {

/// Malformed or inconsistent arguments (mixed group models, zero symbols, bad primes).
class ArgumentError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Inputs are well formed but fall outside the hypotheses of the requested rule.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A variety descriptor violates its structural invariants.
class DescriptorError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A computation would exceed its configured size frontier or overflow.
class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace tits
