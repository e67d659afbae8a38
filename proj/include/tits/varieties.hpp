#pragma once

// Twisted flag varieties by their Tits-algebra data, the two motivic measures,
// comparison of measures, and the deduction rules that turn measure equality
// into isomorphism statements.

#include "tits/brauer.hpp"
#include "tits/grothendieck_ring.hpp"
#include "tits/motives.hpp"
#include "tits/quadratic_forms.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace tits {

class VarietyDescriptor;

struct SeveriBrauer {
  CSAlgebra algebra;
};

struct Grassmannian {
  std::int64_t d;
  CSAlgebra algebra;
};

struct Quadric {
  std::optional<QuadraticForm> form;  // present for concrete forms over Q
  FormShadow shadow;
};

struct Involution {
  std::int64_t degree;
  BrauerClass algebra_class;
  BrauerClass cplus;
  BrauerClass cminus;
  bool i3_zero;
};

struct Product {
  std::vector<VarietyDescriptor> children;
};

class VarietyDescriptor {
 public:
  using Node = std::variant<SeveriBrauer, Grassmannian, Quadric, Involution, Product>;

  /// Factories validate and throw DescriptorError on violated invariants.
  static VarietyDescriptor severi_brauer(const CSAlgebra& a);
  static VarietyDescriptor grassmannian(std::int64_t d, const CSAlgebra& a);
  static VarietyDescriptor quadric(const QuadraticForm& q, const ModelPtr& rational_model);
  static VarietyDescriptor quadric(const FormShadow& shadow);
  static VarietyDescriptor involution(std::int64_t degree, const BrauerClass& a, const BrauerClass& cplus,
                                      const BrauerClass& cminus, bool i3_zero);
  static VarietyDescriptor product(std::vector<VarietyDescriptor> children);

  const ModelPtr& model() const { return model_; }
  const Node& node() const { return node_; }
  /// "severi_brauer", "grassmannian", "quadric", "involution" or "product".
  std::string family() const;

 private:
  VarietyDescriptor(ModelPtr model, Node node) : model_(std::move(model)), node_(std::move(node)) {}

  ModelPtr model_;
  Node node_;
};

struct MeasureReport {
  RBElement jt;
  MotiveSum jt_effective;
  std::int64_t rho;
  std::int64_t dim;
};

/// Coefficients of the Gaussian binomial [n choose d]_q, i.e. the number of
/// Young diagrams of each size inside a d x (n-d) box.
std::vector<std::int64_t> gaussian_binomial(std::int64_t n, std::int64_t d);

MeasureReport tits_measure(const VarietyDescriptor& v);
std::int64_t rank_measure(const VarietyDescriptor& v);
std::int64_t dimension(const VarietyDescriptor& v);

struct ComparisonVerdict {
  bool measures_equal;      // per-prime multiset criterion on the effective measures
  bool normal_forms_equal;  // equality in R_B(k); agrees with measures_equal
  bool rho_equal;
  bool dims_equal;
  bool subgroups_equal;     // subgroups generated by all Tits classes
};

/// Throws ArgumentError on mixed models.
ComparisonVerdict compare(const VarietyDescriptor& x, const VarietyDescriptor& y);

struct Deduction {
  std::string conclusion;
  std::string rule;
  std::string citation;
};

struct DeductionReport {
  std::string shape;  // which family pair the rules were drawn from
  bool assumed_equal;
  bool measures_equal;
  std::vector<Deduction> deductions;
};

/// Conclusions licensed by equality of the Tits measures (and, with the flag,
/// by an asserted equality of classes in K0Var). Throws DomainError when the
/// two descriptors are not a supported family pair.
DeductionReport deduce(const VarietyDescriptor& x, const VarietyDescriptor& y, bool assuming_equal_class);

}  // namespace tits
