#pragma once

// Power sums in (n-2) that count Brauer-class copies in products of quadrics,
// the extra inequality gating the m >= 6 matching theorem, and the
// m -> m-1 recurrences between them.

#include "tits/numeric.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace tits {

enum class SigmaKind { OneEven, OneOdd, TwoEven, TwoOdd };

/// Accepts "1even", "1odd", "2even", "2odd".
SigmaKind parse_sigma_kind(const std::string& text);
std::string to_string(SigmaKind kind);

/// Exact value of the sum. The terms carry (n-2)^e with e possibly -1 when
/// l >= m-1, so the result is a rational; it is an integer whenever l <= m-2.
/// Throws ArgumentError unless m >= 1, n >= 3, l >= 0.
BigRational sigma(SigmaKind kind, std::int64_t m, std::int64_t n, std::int64_t l);

/// The two halves of the first sums: sigma(1*) = sigma11 + sigma12.
BigRational sigma11(bool even, std::int64_t m, std::int64_t n, std::int64_t l);
BigRational sigma12(bool even, std::int64_t m, std::int64_t n, std::int64_t l);

struct ExtraConditionRow {
  std::int64_t l;
  BigRational first;
  BigRational second;
  bool holds;
};

struct ExtraConditionReport {
  std::int64_t m;
  std::int64_t n;
  bool even;
  bool holds;
  std::vector<ExtraConditionRow> rows;  // l = 2 .. m-3
};

/// Strict inequality sigma(1*) > sigma(2*) for every 2 <= l <= m-3, parity of n
/// selecting the variant. Throws DomainError for m < 6, ArgumentError for n < 3.
ExtraConditionReport extra_condition(std::int64_t m, std::int64_t n);

struct RecurrenceReport {
  struct Relation {
    std::string name;
    bool holds;
  };
  std::vector<Relation> relations;
  /// The printed even (1,2) relation, dividing by (n-2); false for l >= 1, n != 4.
  bool literal_holds;
  /// sigma1 > sigma2 at m implies the same at m-1, both parities.
  bool transfer_holds;
  bool holds() const;
};

/// Checks the six m -> m-1 relations exactly. The even (1,2) relation is
/// taken with divisor 2, which is what the sums satisfy. Throws DomainError for m < 2.
RecurrenceReport lemma_recurrences(std::int64_t m, std::int64_t n, std::int64_t l);
inline bool lemma_recurrences_hold(std::int64_t m, std::int64_t n, std::int64_t l) {
  return lemma_recurrences(m, n, l).holds();
}

}  // namespace tits
