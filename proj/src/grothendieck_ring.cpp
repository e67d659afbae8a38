#include "tits/grothendieck_ring.hpp"

#include "tits/errors.hpp"
#include "tits/numeric.hpp"

namespace tits {

void RBElement::accumulate(const BrauerClass& c, std::int64_t k) {
  if (k == 0) return;
  auto [it, inserted] = terms_.try_emplace(c, 0);
  it->second = checked_add(it->second, k);
  if (it->second == 0) terms_.erase(it);
}

RBElement normalize(const ModelPtr& model, const RawCombination& raw) {
  RBElement out(model);
  BrauerClass zero = BrauerClass::identity(model);
  for (const auto& [c, k] : raw) {
    if (!same_model(model, c.model())) throw ArgumentError("class belongs to a different group model");
    if (k == 0) continue;
    auto ps = prime_divisors(order(c));
    if (ps.size() <= 1) {
      out.accumulate(c, k);
      continue;
    }
    for (std::int64_t p : ps) out.accumulate(p_part(c, p), k);
    out.accumulate(zero, checked_mul(-k, static_cast<std::int64_t>(ps.size()) - 1));
  }
  return out;
}

RBElement RBElement::generator(const BrauerClass& c) { return normalize(c.model(), {{c, 1}}); }

std::int64_t RBElement::coefficient(const BrauerClass& c) const {
  auto it = terms_.find(c);
  return it == terms_.end() ? 0 : it->second;
}

RBElement RBElement::operator+(const RBElement& other) const {
  if (!same_model(model_, other.model_)) throw ArgumentError("elements belong to different group models");
  RBElement out = *this;
  for (const auto& [c, k] : other.terms_) out.accumulate(c, k);
  return out;
}

RBElement RBElement::operator-() const { return scaled(-1); }

RBElement RBElement::operator-(const RBElement& other) const { return *this + (-other); }

RBElement RBElement::scaled(std::int64_t k) const {
  RBElement out(model_);
  for (const auto& [c, v] : terms_) out.accumulate(c, checked_mul(v, k));
  return out;
}

RBElement RBElement::operator*(const RBElement& other) const {
  if (!same_model(model_, other.model_)) throw ArgumentError("elements belong to different group models");
  RawCombination conv;
  for (const auto& [a, i] : terms_) {
    for (const auto& [b, j] : other.terms_) {
      auto& slot = conv[a + b];
      slot = checked_add(slot, checked_mul(i, j));
    }
  }
  return normalize(model_, conv);
}

RBElement from_motive(const MotiveSum& x) {
  RawCombination raw(x.counts().begin(), x.counts().end());
  return normalize(x.model(), raw);
}

bool is_normal_form(const RawCombination& raw) {
  for (const auto& [c, k] : raw) {
    if (k == 0 || prime_divisors(order(c)).size() > 1) return false;
  }
  return true;
}

std::int64_t augmentation(const RawCombination& raw) {
  std::int64_t s = 0;
  for (const auto& [c, k] : raw) s = checked_add(s, k);
  return s;
}

std::int64_t augmentation(const RBElement& x) { return augmentation(x.terms()); }

bool equal(const RBElement& x, const RBElement& y) {
  if (!same_model(x.model(), y.model())) throw ArgumentError("elements belong to different group models");
  return x == y;
}

}  // namespace tits
