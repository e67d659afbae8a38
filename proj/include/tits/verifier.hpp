#pragma once

// Brute-force replays of the structural statements on enumerated finite models.
// Every run is deterministic in (model, bounds, seed) and serializes to a
// JSON certificate.

#include "tits/brauer.hpp"
#include "tits/json_io.hpp"

#include <cstdint>
#include <optional>
#include <string>

namespace tits {

inline constexpr const char* kToolVersion = "tits-measure 1.0.0";

/// Frontier constants; recorded in every certificate.
struct VerifierConfig {
  std::uint64_t seed = 20240611;
  std::int64_t max_group_order = 100;          // relation-equivalence refuses larger groups
  std::int64_t exhaustive_limit = 200000000;   // case count above which suites sample
  std::int64_t random_trials = 10000;          // trials when sampling
  std::int64_t cross_check_stride = 997;       // every k-th fast-path case is replayed through the library

  static VerifierConfig from_json(const Json& j);
  Json to_json() const;
};

struct VerificationRun {
  enum class Outcome { Pass, Counterexample, Probe };

  std::string suite;
  Json model;
  Json bounds;
  std::uint64_t seed = 0;
  Outcome outcome = Outcome::Pass;
  std::optional<Json> witness;
  Json stats = Json::object();

  bool passed() const { return outcome != Outcome::Counterexample; }
  Json certificate() const;
};

/// Equivalence generated by the per-prime identifications versus the closure of
/// the coprime splitting relations, on effective sums of each cardinality
/// 1..m_max, compared also with equality of normal forms.
/// Throws ResourceError if the group has more than config.max_group_order elements.
VerificationRun verify_relation_equivalence(const ModelPtr& model, std::int64_t m_max,
                                            const VerifierConfig& config = {});

/// x + n ~= y + n iff x ~= y, for all (or sampled) x, y, n of cardinality <= card_max.
VerificationRun verify_sum_cancellation(const ModelPtr& model, std::int64_t card_max,
                                        const VerifierConfig& config = {});

/// x (x) Q_c ~= y (x) Q_c implies x ~= y for every 2-torsion c, where Q_c is the
/// quadric motive of dimension n_dim. With probe = false, n_dim < 5 is a DomainError;
/// with probe = true the implication is only reported.
VerificationRun verify_tensor_cancellation(const ModelPtr& model, std::int64_t n_dim, std::int64_t card_max,
                                           bool probe = false, const VerifierConfig& config = {});

/// Families of m classes in (Z/2)^d with equal subset-decomposition multisets are
/// equal. With reduced = true only families spanning F_2^r, r <= min(d, m), are
/// enumerated (this loses nothing: equal decompositions have equal spans).
/// Throws DomainError outside the regime n_dim >= 5 and (m <= 5 or the extra
/// sum condition holds).
VerificationRun verify_quadric_product_matching(std::int64_t d, std::int64_t m, std::int64_t n_dim, bool reduced,
                                                const VerifierConfig& config = {});

/// Random rewrite orders of the defining relations reach the normal form.
VerificationRun verify_normal_form_confluence(const ModelPtr& model, std::int64_t trials,
                                              const VerifierConfig& config = {});

}  // namespace tits
