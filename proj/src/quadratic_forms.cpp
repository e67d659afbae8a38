#include "tits/quadratic_forms.hpp"

#include "tits/errors.hpp"

namespace tits {

QuadraticForm::QuadraticForm(std::vector<BigRational> entries) : entries_(std::move(entries)) {
  for (const auto& a : entries_) {
    if (a == 0) throw ArgumentError("quadratic form entries must be nonzero");
  }
}

QuadraticForm QuadraticForm::parse(const std::vector<std::string>& entries) {
  std::vector<BigRational> out;
  out.reserve(entries.size());
  for (const auto& e : entries) out.push_back(parse_rational(e));
  return QuadraticForm(std::move(out));
}

std::vector<std::string> QuadraticForm::to_strings() const {
  std::vector<std::string> out;
  for (const auto& a : entries_) out.push_back(format_rational(a));
  return out;
}

QuadraticForm QuadraticForm::operator+(const QuadraticForm& other) const {
  std::vector<BigRational> all = entries_;
  all.insert(all.end(), other.entries_.begin(), other.entries_.end());
  return QuadraticForm(std::move(all));
}

namespace {

SquareClass determinant(const QuadraticForm& q) {
  SquareClass d;
  for (const auto& a : q.entries()) d = d * SquareClass(a);
  return d;
}

}  // namespace

SquareClass signed_discriminant(const QuadraticForm& q) {
  std::int64_t n = q.dim();
  SquareClass d = determinant(q);
  if ((n * (n - 1) / 2) % 2 == 1) d = d * SquareClass::of(-1);
  return d;
}

RationalBrauerClass hasse_invariant(const QuadraticForm& q) {
  std::vector<SquareClass> a;
  for (const auto& e : q.entries()) a.emplace_back(e);
  RationalBrauerClass s;
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = i + 1; j < a.size(); ++j) s = s + quaternion_class(a[i], a[j]);
  }
  return s;
}

RationalBrauerClass even_clifford_class(const QuadraticForm& q) {
  std::int64_t n = q.dim();
  if (n < 3) throw DomainError("even Clifford class needs dimension >= 3");
  if (n % 2 == 0 && !signed_discriminant(q).is_trivial()) {
    throw DomainError("even-dimensional form with nontrivial signed discriminant");
  }
  // Witt invariant in terms of the Hasse invariant s and the determinant d,
  // correction depending on n mod 8.
  RationalBrauerClass s = hasse_invariant(q);
  SquareClass d = determinant(q);
  SquareClass minus_one = SquareClass::of(-1);
  switch (n % 8) {
    case 1:
    case 2:
      return s;
    case 3:
    case 4:
      return s + quaternion_class(minus_one, minus_one * d);
    case 5:
    case 6:
      return s + quaternion_class(minus_one, minus_one);
    default:
      return s + quaternion_class(minus_one, d);
  }
}

FormShadow::FormShadow(std::int64_t dim_, BrauerClass clifford_class_, bool i3_zero_)
    : dim(dim_), clifford_class(std::move(clifford_class_)), i3_zero(i3_zero_) {
  if (dim < 3) throw ArgumentError("form shadow dimension must be >= 3");
  if (order(clifford_class) > 2) throw ArgumentError("Clifford class must be 2-torsion");
}

FormShadow shadow_of(const QuadraticForm& q, const ModelPtr& rational_model) {
  if (rational_model->kind() != BrauerGroupModel::Kind::RationalField) {
    throw ArgumentError("concrete forms live over the Br(Q) model");
  }
  return FormShadow(q.dim(), BrauerClass(rational_model, even_clifford_class(q)), false);
}

bool similar_under_classification(const FormShadow& x, const FormShadow& y) {
  if (!same_model(x.clifford_class.model(), y.clifford_class.model())) {
    throw ArgumentError("form shadows belong to different group models");
  }
  if (x.dim != y.dim) throw ArgumentError("form shadows have different dimensions");
  if (x.dim != 6 && !(x.i3_zero && y.i3_zero)) throw DomainError("classification rule inapplicable");
  return x.clifford_class == y.clifford_class;
}

}  // namespace tits
