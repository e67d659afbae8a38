#include "tits/motives.hpp"

#include "tits/errors.hpp"
#include "tits/numeric.hpp"

#include <set>
#include <stdexcept>

namespace tits {

MotiveSum::MotiveSum(ModelPtr model, const std::vector<BrauerClass>& classes) : model_(std::move(model)) {
  for (const auto& c : classes) add(c);
}

void MotiveSum::add(const BrauerClass& c, std::int64_t mult) {
  if (mult < 0) throw ArgumentError("multiplicity must be non-negative");
  if (mult == 0) return;
  if (!same_model(model_, c.model())) throw ArgumentError("class belongs to a different group model");
  counts_[c] = checked_add(multiplicity(c), mult);
  cardinality_ = checked_add(cardinality_, mult);
}

std::int64_t MotiveSum::multiplicity(const BrauerClass& c) const {
  auto it = counts_.find(c);
  return it == counts_.end() ? 0 : it->second;
}

std::vector<BrauerClass> MotiveSum::support() const {
  std::vector<BrauerClass> out;
  for (const auto& [c, k] : counts_) out.push_back(c);
  return out;
}

std::vector<BrauerClass> MotiveSum::elements() const {
  std::vector<BrauerClass> out;
  for (const auto& [c, k] : counts_) out.insert(out.end(), static_cast<std::size_t>(k), c);
  return out;
}

std::vector<std::int64_t> MotiveSum::primes() const {
  std::set<std::int64_t> ps;
  for (const auto& [c, k] : counts_) {
    for (std::int64_t p : prime_divisors(order(c))) ps.insert(p);
  }
  return {ps.begin(), ps.end()};
}

namespace {

void require_same(const MotiveSum& x, const MotiveSum& y) {
  if (!same_model(x.model(), y.model())) throw ArgumentError("motive sums belong to different group models");
}

}  // namespace

MotiveSum direct_sum(const MotiveSum& x, const MotiveSum& y) {
  require_same(x, y);
  MotiveSum out = x;
  for (const auto& [c, k] : y.counts()) out.add(c, k);
  return out;
}

MotiveSum tensor(const MotiveSum& x, const MotiveSum& y) {
  require_same(x, y);
  MotiveSum out(x.model());
  for (const auto& [a, i] : x.counts()) {
    for (const auto& [b, j] : y.counts()) out.add(a + b, checked_mul(i, j));
  }
  return out;
}

MotiveSum p_primary(const MotiveSum& x, std::int64_t p) {
  MotiveSum out(x.model());
  for (const auto& [c, k] : x.counts()) out.add(p_part(c, p), k);
  return out;
}

bool is_isomorphic(const MotiveSum& x, const MotiveSum& y) {
  require_same(x, y);
  if (x.cardinality() != y.cardinality()) return false;
  // Primes dividing no member's order give all-identity multisets of equal size.
  std::set<std::int64_t> ps;
  for (std::int64_t p : x.primes()) ps.insert(p);
  for (std::int64_t p : y.primes()) ps.insert(p);
  for (std::int64_t p : ps) {
    if (!(p_primary(x, p) == p_primary(y, p))) return false;
  }
  return true;
}

bool cancel_common(const MotiveSum& x, const MotiveSum& y, const MotiveSum& n) {
  bool reduced = is_isomorphic(x, y);
  bool padded = is_isomorphic(direct_sum(x, n), direct_sum(y, n));
  if (reduced != padded) throw std::logic_error("direct-sum cancellation failed");
  return reduced;
}

}  // namespace tits
