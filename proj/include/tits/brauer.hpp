#pragma once

// Finite models of subgroups of Br(k), their elements, and algebra bookkeeping
// (degree, index, period). Group law is written additively: [A (x) B] = [A] + [B].

#include "tits/local_invariants.hpp"

#include <cstdint>
#include <map>
#include <memory>
#include <span>
#include <string>
#include <variant>
#include <vector>

namespace tits {

using Residues = std::vector<std::int64_t>;
using Coords = std::variant<Residues, RationalBrauerClass>;

class BrauerGroupModel;
using ModelPtr = std::shared_ptr<const BrauerGroupModel>;

class BrauerGroupModel {
 public:
  enum class Kind { Abstract, RationalField };
  enum class IndexPolicy { OrderIsIndex, Oracle };

  /// Direct sum of Z/n_i. Every n_i must be >= 2; an empty list is the trivial group.
  static ModelPtr abstract(std::vector<std::int64_t> orders);
  /// Br(Q) described by local invariants.
  static ModelPtr rational();

  /// Copy of this model whose index is read from `table` (coords -> index).
  /// Classes absent from the table fall back to index = order.
  /// Throws ArgumentError if some entry has period not dividing index or
  /// different prime support.
  ModelPtr with_index_oracle(const std::map<Coords, std::int64_t>& table) const;

  Kind kind() const { return kind_; }
  IndexPolicy index_policy() const { return policy_; }
  const std::vector<std::int64_t>& orders() const { return orders_; }
  const std::map<Coords, std::int64_t>& index_table() const { return index_table_; }

  bool is_finite() const { return kind_ == Kind::Abstract; }
  /// Group order of an abstract model; throws DomainError for Br(Q).
  std::int64_t cardinality() const;
  /// lcm of the invariant factors; throws DomainError for Br(Q).
  std::int64_t exponent() const;

  /// Reduces and validates raw coordinates; throws ArgumentError on shape mismatch.
  Coords normalize_coords(Coords coords) const;
  Coords zero() const;

  std::string describe() const;

  friend bool operator==(const BrauerGroupModel& a, const BrauerGroupModel& b) {
    return a.kind_ == b.kind_ && a.orders_ == b.orders_ && a.policy_ == b.policy_ &&
           a.index_table_ == b.index_table_;
  }

 private:
  BrauerGroupModel() = default;

  Kind kind_ = Kind::Abstract;
  std::vector<std::int64_t> orders_;
  IndexPolicy policy_ = IndexPolicy::OrderIsIndex;
  std::map<Coords, std::int64_t> index_table_;
};

/// True when both pointers denote equal models.
bool same_model(const ModelPtr& a, const ModelPtr& b);

class BrauerClass {
 public:
  BrauerClass(ModelPtr model, Coords coords);
  static BrauerClass identity(ModelPtr model);
  static BrauerClass abstract(ModelPtr model, Residues residues) {
    return BrauerClass(std::move(model), Coords(std::move(residues)));
  }

  const ModelPtr& model() const { return model_; }
  const Coords& coords() const { return coords_; }
  bool is_identity() const;

  BrauerClass operator+(const BrauerClass& other) const;
  BrauerClass operator-() const;
  BrauerClass operator-(const BrauerClass& other) const { return *this + (-other); }
  /// k-fold sum; k may be negative.
  BrauerClass times(std::int64_t k) const;

  std::string to_string() const;

  // Comparison looks at coordinates only; callers mixing models are rejected
  // by the operations that combine classes.
  friend bool operator==(const BrauerClass& a, const BrauerClass& b) { return a.coords_ == b.coords_; }
  friend bool operator<(const BrauerClass& a, const BrauerClass& b) { return a.coords_ < b.coords_; }

 private:
  ModelPtr model_;
  Coords coords_;
};

/// Throws ArgumentError unless every class lives in `model`.
void require_model(const ModelPtr& model, std::span<const BrauerClass> classes);

/// Least k >= 1 with k*c = 0 (the period).
std::int64_t order(const BrauerClass& c);

/// The p-primary component of c. Throws ArgumentError unless p is prime.
BrauerClass p_part(const BrauerClass& c, std::int64_t p);

/// Index of c under the model's index policy.
std::int64_t index(const BrauerClass& c);

/// Subgroup generated by `cs`, sorted. Needs a finite model unless all
/// generators have finite order (always true), so Br(Q) is supported too.
std::vector<BrauerClass> generated_subgroup(const ModelPtr& model, std::span<const BrauerClass> cs);

/// All elements of a finite model in lexicographic residue order.
std::vector<BrauerClass> all_elements(const ModelPtr& model);

/// Central simple algebra up to isomorphism: Brauer class plus degree.
class CSAlgebra {
 public:
  /// Throws ArgumentError unless index(c) divides degree.
  CSAlgebra(BrauerClass c, std::int64_t degree);

  const BrauerClass& brauer_class() const { return class_; }
  std::int64_t degree() const { return degree_; }
  std::int64_t index() const { return tits::index(class_); }
  std::int64_t period() const { return order(class_); }

  friend bool operator==(const CSAlgebra& a, const CSAlgebra& b) {
    return a.degree_ == b.degree_ && a.class_ == b.class_;
  }

 private:
  BrauerClass class_;
  std::int64_t degree_;
};

bool coprime_indexes(const CSAlgebra& a, const CSAlgebra& b);

}  // namespace tits
