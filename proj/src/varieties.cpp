#include "tits/varieties.hpp"

#include "tits/errors.hpp"
#include "tits/numeric.hpp"
#include "tits/sigma.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace tits {

// ---------------------------------------------------------------------------
// Construction

VarietyDescriptor VarietyDescriptor::severi_brauer(const CSAlgebra& a) {
  if (a.degree() < 2) throw DescriptorError("Severi-Brauer variety needs degree >= 2");
  return VarietyDescriptor(a.brauer_class().model(), SeveriBrauer{a});
}

VarietyDescriptor VarietyDescriptor::grassmannian(std::int64_t d, const CSAlgebra& a) {
  if (d < 1 || d >= a.degree()) {
    throw DescriptorError("Grassmannian needs 1 <= d < degree (d=" + std::to_string(d) +
                          ", degree=" + std::to_string(a.degree()) + ")");
  }
  return VarietyDescriptor(a.brauer_class().model(), Grassmannian{d, a});
}

VarietyDescriptor VarietyDescriptor::quadric(const QuadraticForm& q, const ModelPtr& rational_model) {
  if (q.dim() < 3) throw DescriptorError("quadric needs a form of dimension >= 3");
  if (!signed_discriminant(q).is_trivial()) {
    throw DescriptorError("quadric needs a form with trivial signed discriminant");
  }
  return VarietyDescriptor(rational_model, Quadric{q, shadow_of(q, rational_model)});
}

VarietyDescriptor VarietyDescriptor::quadric(const FormShadow& shadow) {
  return VarietyDescriptor(shadow.clifford_class.model(), Quadric{std::nullopt, shadow});
}

VarietyDescriptor VarietyDescriptor::involution(std::int64_t degree, const BrauerClass& a, const BrauerClass& cplus,
                                                const BrauerClass& cminus, bool i3_zero) {
  if (degree < 6 || degree % 2 != 0) throw DescriptorError("involution variety needs even degree >= 6");
  if (!same_model(a.model(), cplus.model()) || !same_model(a.model(), cminus.model())) {
    throw DescriptorError("involution classes belong to different group models");
  }
  if (degree % index(a) != 0) throw DescriptorError("index of the algebra does not divide its degree");
  bool ok;
  if (degree % 4 == 2) {
    ok = cplus.times(2) == a && cplus.times(3) == cminus && cplus.times(4).is_identity();
  } else {
    ok = cplus.times(2).is_identity() && cminus.times(2).is_identity() && cplus + cminus == a;
  }
  if (!ok) {
    throw DescriptorError(degree % 4 == 2 ? "degree = 2 mod 4 needs 2c+ = [A], 3c+ = c-, 4c+ = 0"
                                          : "degree = 0 mod 4 needs 2c+ = 0, 2c- = 0, c+ + c- = [A]");
  }
  return VarietyDescriptor(a.model(), Involution{degree, a, cplus, cminus, i3_zero});
}

VarietyDescriptor VarietyDescriptor::product(std::vector<VarietyDescriptor> children) {
  if (children.empty()) throw DescriptorError("product needs at least one factor");
  ModelPtr model = children.front().model();
  for (const auto& c : children) {
    if (!same_model(model, c.model())) throw DescriptorError("product factors belong to different group models");
  }
  return VarietyDescriptor(model, Product{std::move(children)});
}

std::string VarietyDescriptor::family() const {
  switch (node_.index()) {
    case 0:
      return "severi_brauer";
    case 1:
      return "grassmannian";
    case 2:
      return "quadric";
    case 3:
      return "involution";
    default:
      return "product";
  }
}

// ---------------------------------------------------------------------------
// Measures

std::vector<std::int64_t> gaussian_binomial(std::int64_t n, std::int64_t d) {
  if (d < 0 || d > n) return {};
  // row[k] holds [j choose k]_q for the current j.
  std::vector<std::vector<std::int64_t>> row(static_cast<std::size_t>(d + 1));
  row[0] = {1};
  for (std::int64_t j = 1; j <= n; ++j) {
    for (std::int64_t k = std::min(j, d); k >= 1; --k) {
      // [j,k] = [j-1,k-1] + q^k [j-1,k]
      const auto& a = row[k - 1];
      const auto& b = row[k];
      std::vector<std::int64_t> next(std::max(a.size(), b.empty() ? 0 : b.size() + k), 0);
      for (std::size_t i = 0; i < a.size(); ++i) next[i] = checked_add(next[i], a[i]);
      for (std::size_t i = 0; i < b.size(); ++i) next[i + k] = checked_add(next[i + k], b[i]);
      row[k] = std::move(next);
    }
  }
  return row[d];
}

namespace {

MotiveSum effective(const VarietyDescriptor& v) {
  const ModelPtr& model = v.model();
  MotiveSum out(model);
  BrauerClass zero = BrauerClass::identity(model);
  std::visit(
      [&](const auto& node) {
        using T = std::decay_t<decltype(node)>;
        if constexpr (std::is_same_v<T, SeveriBrauer>) {
          for (std::int64_t i = 0; i < node.algebra.degree(); ++i) out.add(node.algebra.brauer_class().times(i));
        } else if constexpr (std::is_same_v<T, Grassmannian>) {
          auto coeffs = gaussian_binomial(node.algebra.degree(), node.d);
          for (std::size_t s = 0; s < coeffs.size(); ++s) {
            out.add(node.algebra.brauer_class().times(static_cast<std::int64_t>(s)), coeffs[s]);
          }
        } else if constexpr (std::is_same_v<T, Quadric>) {
          std::int64_t n = node.shadow.dim;
          out.add(zero, n - 2);
          out.add(node.shadow.clifford_class, n % 2 == 0 ? 2 : 1);
        } else if constexpr (std::is_same_v<T, Involution>) {
          std::int64_t half = (node.degree - 2) / 2;
          out.add(zero, half);
          out.add(node.algebra_class, half);
          out.add(node.cplus);
          out.add(node.cminus);
        } else {
          out.add(zero);
          for (const auto& child : node.children) out = tensor(out, effective(child));
        }
      },
      v.node());
  return out;
}

}  // namespace

std::int64_t dimension(const VarietyDescriptor& v) {
  return std::visit(
      [](const auto& node) -> std::int64_t {
        using T = std::decay_t<decltype(node)>;
        if constexpr (std::is_same_v<T, SeveriBrauer>) {
          return node.algebra.degree() - 1;
        } else if constexpr (std::is_same_v<T, Grassmannian>) {
          return checked_mul(node.d, node.algebra.degree() - node.d);
        } else if constexpr (std::is_same_v<T, Quadric>) {
          return node.shadow.dim - 2;
        } else if constexpr (std::is_same_v<T, Involution>) {
          return node.degree;
        } else {
          std::int64_t s = 0;
          for (const auto& c : node.children) s = checked_add(s, dimension(c));
          return s;
        }
      },
      v.node());
}

MeasureReport tits_measure(const VarietyDescriptor& v) {
  MotiveSum eff = effective(v);
  RBElement jt = from_motive(eff);
  std::int64_t rho = eff.cardinality();
  return MeasureReport{std::move(jt), std::move(eff), rho, dimension(v)};
}

std::int64_t rank_measure(const VarietyDescriptor& v) {
  return std::visit(
      [](const auto& node) -> std::int64_t {
        using T = std::decay_t<decltype(node)>;
        if constexpr (std::is_same_v<T, SeveriBrauer>) {
          return node.algebra.degree();
        } else if constexpr (std::is_same_v<T, Grassmannian>) {
          BigInt b = binomial(node.algebra.degree(), node.d);
          if (b > INT64_MAX) throw ResourceError("rank measure exceeds 64 bits");
          return static_cast<std::int64_t>(b);
        } else if constexpr (std::is_same_v<T, Quadric>) {
          return node.shadow.dim % 2 == 0 ? node.shadow.dim : node.shadow.dim - 1;
        } else if constexpr (std::is_same_v<T, Involution>) {
          return node.degree;
        } else {
          std::int64_t p = 1;
          for (const auto& c : node.children) p = checked_mul(p, rank_measure(c));
          return p;
        }
      },
      v.node());
}

// ---------------------------------------------------------------------------
// Comparison

ComparisonVerdict compare(const VarietyDescriptor& x, const VarietyDescriptor& y) {
  if (!same_model(x.model(), y.model())) throw ArgumentError("descriptors belong to different group models");
  MeasureReport mx = tits_measure(x);
  MeasureReport my = tits_measure(y);
  std::vector<BrauerClass> sx = mx.jt_effective.support();
  std::vector<BrauerClass> sy = my.jt_effective.support();
  ComparisonVerdict v{};
  v.measures_equal = is_isomorphic(mx.jt_effective, my.jt_effective);
  v.normal_forms_equal = equal(mx.jt, my.jt);
  v.rho_equal = mx.rho == my.rho;
  v.dims_equal = mx.dim == my.dim;
  v.subgroups_equal = generated_subgroup(x.model(), sx) == generated_subgroup(y.model(), sy);
  return v;
}

// ---------------------------------------------------------------------------
// Deduction

namespace {

namespace cite {
constexpr const char* kDimension = "dimension is an invariant of the class in K0Var(k)";
constexpr const char* kRank = "the augmentation of the Tits measure counts Tits algebras";
constexpr const char* kPerPrime =
    "direct sums of CSA motives are isomorphic iff their p-primary Brauer-class multisets agree for every p";
constexpr const char* kWedderburn = "Artin-Wedderburn: a central simple algebra is determined by its class and degree";
constexpr const char* kMeasure = "the Tits measure is a ring homomorphism out of K0Var(k)";
constexpr const char* kDim6 =
    "6-dimensional forms with trivial discriminant are classified up to similarity by their even Clifford algebra";
constexpr const char* kI3 =
    "when I^3(k)=0, forms of equal dimension with trivial discriminant and equal Clifford invariant are similar";
constexpr const char* kInv6 =
    "degree-6 algebras with orthogonal involution and trivial discriminant correspond to Q x Q^op";
constexpr const char* kUnlinked = "Albert: unlinked quaternion pairs are determined by their biquaternion algebra";
constexpr const char* kBirational = "external birationality results for small period; annotation only";
constexpr const char* kMatching = "per-class copy counts in the subset decomposition of a product of quadrics";
}  // namespace cite

std::string index_note(const BrauerGroupModel& m) {
  if (m.kind() == BrauerGroupModel::Kind::RationalField) return " (over Q index equals period, so at most 2 here)";
  if (m.index_policy() == BrauerGroupModel::IndexPolicy::OrderIsIndex) return " (index policy: index = period)";
  return " (from the index oracle)";
}

void collect_leaves(const VarietyDescriptor& v, std::vector<const VarietyDescriptor*>& out) {
  if (const auto* p = std::get_if<Product>(&v.node())) {
    for (const auto& c : p->children) collect_leaves(c, out);
  } else {
    out.push_back(&v);
  }
}

enum class Shape { Grassmannian, ConicProduct, Quadric, QuadricProduct, Involution };

Shape shape_of(const std::vector<const VarietyDescriptor*>& leaves) {
  auto all = [&](auto pred) { return std::all_of(leaves.begin(), leaves.end(), pred); };
  auto is_conic = [](const VarietyDescriptor* d) {
    const auto* sb = std::get_if<SeveriBrauer>(&d->node());
    return sb != nullptr && sb->algebra.degree() == 2;
  };
  auto is_quadric = [](const VarietyDescriptor* d) { return std::holds_alternative<Quadric>(d->node()); };
  if (leaves.size() == 1) {
    const auto& node = leaves.front()->node();
    if (std::holds_alternative<SeveriBrauer>(node) || std::holds_alternative<Grassmannian>(node)) {
      return Shape::Grassmannian;
    }
    if (std::holds_alternative<Quadric>(node)) return Shape::Quadric;
    return Shape::Involution;
  }
  if (leaves.size() == 2 && all(is_conic)) return Shape::ConicProduct;
  if (all(is_quadric)) return Shape::QuadricProduct;
  throw DomainError("no deduction rules for this product (supported: two conics, or quadrics)");
}

std::string shape_name(Shape s) {
  switch (s) {
    case Shape::Grassmannian:
      return "grassmannian";
    case Shape::ConicProduct:
      return "conic-product";
    case Shape::Quadric:
      return "quadric";
    case Shape::QuadricProduct:
      return "quadric-product";
    case Shape::Involution:
      return "involution";
  }
  return "?";
}

class Reporter {
 public:
  explicit Reporter(DeductionReport& rep) : rep_(rep) {}
  void add(std::string conclusion, std::string rule, std::string citation) {
    rep_.deductions.push_back({std::move(conclusion), std::move(rule), std::move(citation)});
  }
  // A statement guaranteed by the premise; if the data disagrees the premise is inconsistent.
  void expect(bool holds, const std::string& conclusion, const std::string& rule, const std::string& citation) {
    if (holds) {
      add(conclusion, rule, citation);
    } else {
      add("contradiction: premise forces '" + conclusion + "' but the descriptors violate it", rule, citation);
    }
  }

 private:
  DeductionReport& rep_;
};

struct GrData {
  std::int64_t d;
  CSAlgebra alg;
};

GrData gr_data(const VarietyDescriptor& v) {
  if (const auto* sb = std::get_if<SeveriBrauer>(&v.node())) return {1, sb->algebra};
  const auto& gr = std::get<Grassmannian>(v.node());
  return {gr.d, gr.algebra};
}

void deduce_grassmannian(const VarietyDescriptor& x, const VarietyDescriptor& y, bool flag, Reporter& r) {
  GrData a = gr_data(x);
  GrData b = gr_data(y);
  const BrauerClass& ca = a.alg.brauer_class();
  const BrauerClass& cb = b.alg.brauer_class();
  std::int64_t n = a.alg.degree();
  bool both_sb = a.d == 1 && b.d == 1;
  bool deg_equal = n == b.alg.degree();
  if (flag) r.expect(dimension(x) == dimension(y), "dim(X) = dim(Y)", "dimension", cite::kDimension);
  if (both_sb) {
    r.expect(deg_equal, "deg(A) = deg(A')", "rank-measure-degree", cite::kRank);
  } else if (flag) {
    r.expect(deg_equal && (a.d == b.d || a.d == n - b.d), "deg(A) = deg(A') and d' in {d, deg(A)-d}",
             "rank-measure-grassmannian", cite::kRank);
  }
  std::vector<BrauerClass> ga{ca}, gb{cb};
  r.expect(generated_subgroup(x.model(), ga) == generated_subgroup(y.model(), gb), "<[A]> = <[A']>",
           "generated-subgroup", cite::kPerPrime);
  r.expect(order(ca) == order(cb), "per(A) = per(A') = " + std::to_string(order(ca)), "generated-subgroup",
           cite::kPerPrime);
  bool shape_known = both_sb ? deg_equal : (flag && deg_equal && (a.d == b.d || a.d == n - b.d));
  if (order(ca) <= 2) {
    if (shape_known) {
      r.expect(ca == cb, "A ~= A' and the varieties are isomorphic", "two-torsion-rigidity", cite::kWedderburn);
    } else {
      r.add("no isomorphism conclusion: degree and d are not pinned down by the measures alone",
            "two-torsion-rigidity", cite::kWedderburn);
    }
  }
  std::int64_t per = order(ca);
  if (both_sb && per >= 3 && per <= 6) {
    r.add("annotation: SB(A) and SB(A') are birational (external result, not computed)", "small-period-birational",
          cite::kBirational);
  }
}

void deduce_conics(const std::vector<const VarietyDescriptor*>& lx, const std::vector<const VarietyDescriptor*>& ly,
                   Reporter& r) {
  auto cls = [](const VarietyDescriptor* d) { return std::get<SeveriBrauer>(d->node()).algebra.brauer_class(); };
  BrauerClass a = cls(lx[0]), a2 = cls(lx[1]), b = cls(ly[0]), b2 = cls(ly[1]);
  bool shared = a == b || a == b2 || a2 == b || a2 == b2;
  r.expect(shared, "the two products share a conic up to isomorphism", "conic-products-common-factor",
           cite::kPerPrime);
  BrauerClass biq = a + a2;
  std::int64_t ind = index(biq);
  if (ind == 4) {
    bool same = (a == b && a2 == b2) || (a == b2 && a2 == b);
    r.expect(same, "C x C' ~= C'' x C''' (the first pair is unlinked)", "conic-products-unlinked", cite::kUnlinked);
  } else {
    r.add("no isomorphism conclusion: unlinkedness needs ind(Q (x) Q') = 4, index here is " + std::to_string(ind) +
              index_note(*lx[0]->model()),
          "conic-products-unlinked", cite::kUnlinked);
  }
}

const FormShadow& shadow(const VarietyDescriptor* d) { return std::get<Quadric>(d->node()).shadow; }

void deduce_quadric(const VarietyDescriptor& x, const VarietyDescriptor& y, bool flag, Reporter& r) {
  const FormShadow& a = shadow(&x);
  const FormShadow& b = shadow(&y);
  if (flag) {
    r.expect(a.dim == b.dim, "n = n' (equal dimensions)", "dimension", cite::kDimension);
  } else if (a.dim != b.dim) {
    r.add("no conclusion: the measures agree but do not pin down n for split Clifford classes", "rank-measure",
          cite::kRank);
    return;
  }
  if (a.dim != b.dim) return;
  r.expect(a.clifford_class == b.clifford_class, "equal even Clifford classes", "clifford-class", cite::kPerPrime);
  if (a.dim == 6 || (a.i3_zero && b.i3_zero)) {
    bool similar = similar_under_classification(a, b);
    r.expect(similar, "Q_q ~= Q_q'", a.dim == 6 ? "quadric-dim6" : "quadric-i3", a.dim == 6 ? cite::kDim6 : cite::kI3);
  } else {
    r.add("no isomorphism conclusion: needs n = 6 or I^3(k) = 0", "quadric-classification", cite::kI3);
  }
}

void deduce_involution(const VarietyDescriptor& x, const VarietyDescriptor& y, Reporter& r) {
  const auto& a = std::get<Involution>(x.node());
  const auto& b = std::get<Involution>(y.node());
  r.expect(a.degree == b.degree, "deg(A) = deg(A')", "rank-measure-degree", cite::kRank);
  std::vector<BrauerClass> ga{a.algebra_class, a.cplus, a.cminus}, gb{b.algebra_class, b.cplus, b.cminus};
  r.expect(generated_subgroup(x.model(), ga) == generated_subgroup(y.model(), gb),
           "<[A], [C+], [C-]> = <[A'], [C+'], [C-']>", "generated-subgroup", cite::kPerPrime);
  if (a.degree != b.degree) return;
  std::multiset<BrauerClass> pa{a.cplus, a.cminus}, pb{b.cplus, b.cminus};
  r.expect(pa == pb, "C0+- (A) ~= C0+- (A') up to swapping components", "clifford-components", cite::kPerPrime);
  if (a.degree == 6 || (a.i3_zero && b.i3_zero)) {
    r.expect(pa == pb, "Iv(A) ~= Iv(A')", a.degree == 6 ? "involution-deg6" : "involution-i3",
             a.degree == 6 ? cite::kInv6 : cite::kI3);
  } else {
    r.add("no isomorphism conclusion: needs deg(A) = 6 or I^3(k) = 0", "involution-classification", cite::kI3);
  }
}

void deduce_quadric_products(const std::vector<const VarietyDescriptor*>& lx,
                             const std::vector<const VarietyDescriptor*>& ly, bool flag, Reporter& r) {
  std::int64_t n = shadow(lx.front()).dim;
  auto same_dim = [n](const VarietyDescriptor* d) { return shadow(d).dim == n; };
  if (!std::all_of(lx.begin(), lx.end(), same_dim) || !std::all_of(ly.begin(), ly.end(), same_dim)) {
    throw DomainError("quadric-product rules need every factor to have the same form dimension");
  }
  auto m = static_cast<std::int64_t>(lx.size());
  auto m2 = static_cast<std::int64_t>(ly.size());
  if (flag) r.expect(m == m2, "m = m' (equal dimensions)", "dimension", cite::kDimension);
  r.expect(m == m2, "m = m' (equal rank measures n^m or (n-1)^m)", "rank-measure", cite::kRank);
  std::vector<BrauerClass> cx, cy;
  bool all_i3 = true;
  for (const auto* d : lx) {
    cx.push_back(shadow(d).clifford_class);
    all_i3 = all_i3 && shadow(d).i3_zero;
  }
  for (const auto* d : ly) {
    cy.push_back(shadow(d).clifford_class);
    all_i3 = all_i3 && shadow(d).i3_zero;
  }
  const ModelPtr& model = lx.front()->model();
  r.expect(generated_subgroup(model, cx) == generated_subgroup(model, cy), "the Clifford classes generate equal subgroups",
           "generated-subgroup", cite::kPerPrime);
  if (m != m2) return;
  if (n < 5) {
    r.add("no isomorphism conclusion: product cancellation needs n >= 5", "tensor-cancellation", cite::kMatching);
    return;
  }
  std::sort(cx.begin(), cx.end());
  std::sort(cy.begin(), cy.end());
  bool classes_match = cx == cy;
  if (m <= 5 && (n == 6 || all_i3)) {
    r.expect(classes_match, "the products are isomorphic", n == 6 ? "quadric-products-dim6" : "quadric-products-i3",
             n == 6 ? cite::kDim6 : cite::kI3);
  } else if (m >= 6 && all_i3) {
    ExtraConditionReport ec = extra_condition(m, n);
    if (ec.holds) {
      r.expect(classes_match, "the products are isomorphic", "quadric-products-extra-condition", cite::kMatching);
    } else {
      std::string ls;
      for (const auto& row : ec.rows) {
        if (!row.holds) ls += (ls.empty() ? "" : ",") + std::to_string(row.l);
      }
      r.add("no conclusion; the extra sum condition fails at l = " + ls, "quadric-products-extra-condition",
            cite::kMatching);
    }
  } else {
    r.add("no isomorphism conclusion: needs n = 6 with m <= 5, or I^3(k) = 0", "quadric-products", cite::kI3);
  }
}

}  // namespace

DeductionReport deduce(const VarietyDescriptor& x, const VarietyDescriptor& y, bool assuming_equal_class) {
  if (!same_model(x.model(), y.model())) throw ArgumentError("descriptors belong to different group models");
  std::vector<const VarietyDescriptor*> lx, ly;
  collect_leaves(x, lx);
  collect_leaves(y, ly);
  Shape sx = shape_of(lx);
  Shape sy = shape_of(ly);
  // A single quadric is a product with one factor.
  if (sx == Shape::Quadric && sy == Shape::QuadricProduct) sx = Shape::QuadricProduct;
  if (sy == Shape::Quadric && sx == Shape::QuadricProduct) sy = Shape::QuadricProduct;
  if (sx != sy) throw DomainError("inapplicable family combination: " + shape_name(sx) + " vs " + shape_name(sy));

  DeductionReport rep;
  rep.shape = shape_name(sx);
  rep.assumed_equal = assuming_equal_class;
  rep.measures_equal = compare(x, y).measures_equal;
  Reporter r(rep);
  if (!rep.measures_equal) {
    if (assuming_equal_class) {
      r.add("contradiction: the asserted class equality is impossible, the Tits measures differ", "measure-separates",
            cite::kMeasure);
    } else {
      r.add("[X] != [Y] in K0Var(k): the Tits measures differ", "measure-separates", cite::kMeasure);
    }
    return rep;
  }
  if (assuming_equal_class) {
    r.add("mu_JT(X) = mu_JT(Y) in R_B(k)", "measure-of-equal-classes", cite::kMeasure);
  } else {
    r.add("mu_JT(X) = mu_JT(Y); conclusions below use only this equality", "measure-equality", cite::kPerPrime);
  }
  switch (sx) {
    case Shape::Grassmannian:
      deduce_grassmannian(*lx.front(), *ly.front(), assuming_equal_class, r);
      break;
    case Shape::ConicProduct:
      deduce_conics(lx, ly, r);
      break;
    case Shape::Quadric:
      deduce_quadric(*lx.front(), *ly.front(), assuming_equal_class, r);
      break;
    case Shape::Involution:
      deduce_involution(*lx.front(), *ly.front(), r);
      break;
    case Shape::QuadricProduct:
      deduce_quadric_products(lx, ly, assuming_equal_class, r);
      break;
  }
  return rep;
}

}  // namespace tits
