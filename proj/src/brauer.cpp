#include "tits/brauer.hpp"

#include "tits/errors.hpp"
#include "tits/numeric.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace tits {

namespace {

// Order of a coordinate tuple without needing a BrauerClass wrapper.
std::int64_t coords_order(const BrauerGroupModel& model, const Coords& coords) {
  if (const auto* r = std::get_if<Residues>(&coords)) {
    std::int64_t out = 1;
    for (std::size_t i = 0; i < r->size(); ++i) {
      std::int64_t n = model.orders()[i];
      out = lcm64(out, n / gcd64((*r)[i], n));
    }
    return out;
  }
  return std::get<RationalBrauerClass>(coords).order();
}

}  // namespace

ModelPtr BrauerGroupModel::abstract(std::vector<std::int64_t> orders) {
  for (std::int64_t n : orders) {
    if (n < 2) throw ArgumentError("abstract group orders must be >= 2, got " + std::to_string(n));
  }
  auto m = std::shared_ptr<BrauerGroupModel>(new BrauerGroupModel());
  m->kind_ = Kind::Abstract;
  m->orders_ = std::move(orders);
  return m;
}

ModelPtr BrauerGroupModel::rational() {
  auto m = std::shared_ptr<BrauerGroupModel>(new BrauerGroupModel());
  m->kind_ = Kind::RationalField;
  return m;
}

ModelPtr BrauerGroupModel::with_index_oracle(const std::map<Coords, std::int64_t>& table) const {
  auto m = std::shared_ptr<BrauerGroupModel>(new BrauerGroupModel(*this));
  m->policy_ = IndexPolicy::Oracle;
  m->index_table_.clear();
  for (const auto& [coords, idx] : table) {
    Coords c = normalize_coords(coords);
    std::int64_t per = coords_order(*this, c);
    if (idx < 1 || idx % per != 0 || prime_divisors(idx) != prime_divisors(per)) {
      throw ArgumentError("index oracle entry violates period | index with equal prime support (period " +
                          std::to_string(per) + ", index " + std::to_string(idx) + ")");
    }
    m->index_table_[c] = idx;
  }
  return m;
}

std::int64_t BrauerGroupModel::cardinality() const {
  if (kind_ != Kind::Abstract) throw DomainError("Br(Q) is infinite");
  std::int64_t out = 1;
  for (std::int64_t n : orders_) out = checked_mul(out, n);
  return out;
}

std::int64_t BrauerGroupModel::exponent() const {
  if (kind_ != Kind::Abstract) throw DomainError("Br(Q) has unbounded exponent");
  std::int64_t out = 1;
  for (std::int64_t n : orders_) out = lcm64(out, n);
  return out;
}

Coords BrauerGroupModel::normalize_coords(Coords coords) const {
  if (kind_ == Kind::Abstract) {
    auto* r = std::get_if<Residues>(&coords);
    if (r == nullptr) throw ArgumentError("abstract model expects residue coordinates");
    if (r->size() != orders_.size()) {
      throw ArgumentError("expected " + std::to_string(orders_.size()) + " residues, got " +
                          std::to_string(r->size()));
    }
    for (std::size_t i = 0; i < r->size(); ++i) (*r)[i] = mod_floor((*r)[i], orders_[i]);
    return coords;
  }
  if (!std::holds_alternative<RationalBrauerClass>(coords)) {
    throw ArgumentError("rational model expects local-invariant coordinates");
  }
  return coords;
}

Coords BrauerGroupModel::zero() const {
  if (kind_ == Kind::Abstract) return Residues(orders_.size(), 0);
  return RationalBrauerClass();
}

std::string BrauerGroupModel::describe() const {
  if (kind_ == Kind::RationalField) return "Br(Q)";
  if (orders_.empty()) return "trivial";
  std::ostringstream os;
  for (std::size_t i = 0; i < orders_.size(); ++i) os << (i ? " + " : "") << "Z/" << orders_[i];
  return os.str();
}

bool same_model(const ModelPtr& a, const ModelPtr& b) {
  return a == b || (a && b && *a == *b);
}

BrauerClass::BrauerClass(ModelPtr model, Coords coords) : model_(std::move(model)) {
  if (!model_) throw ArgumentError("Brauer class needs a group model");
  coords_ = model_->normalize_coords(std::move(coords));
}

BrauerClass BrauerClass::identity(ModelPtr model) {
  Coords z = model->zero();
  return BrauerClass(std::move(model), std::move(z));
}

bool BrauerClass::is_identity() const {
  if (const auto* r = std::get_if<Residues>(&coords_)) {
    return std::all_of(r->begin(), r->end(), [](std::int64_t x) { return x == 0; });
  }
  return std::get<RationalBrauerClass>(coords_).is_trivial();
}

BrauerClass BrauerClass::operator+(const BrauerClass& other) const {
  if (!same_model(model_, other.model_)) throw ArgumentError("classes belong to different group models");
  if (const auto* r = std::get_if<Residues>(&coords_)) {
    const auto& s = std::get<Residues>(other.coords_);
    Residues sum(r->size());
    for (std::size_t i = 0; i < r->size(); ++i) sum[i] = ((*r)[i] + s[i]) % model_->orders()[i];
    return BrauerClass(model_, std::move(sum));
  }
  return BrauerClass(model_, std::get<RationalBrauerClass>(coords_) + std::get<RationalBrauerClass>(other.coords_));
}

BrauerClass BrauerClass::operator-() const {
  if (const auto* r = std::get_if<Residues>(&coords_)) {
    Residues neg(r->size());
    for (std::size_t i = 0; i < r->size(); ++i) neg[i] = mod_floor(-(*r)[i], model_->orders()[i]);
    return BrauerClass(model_, std::move(neg));
  }
  return BrauerClass(model_, -std::get<RationalBrauerClass>(coords_));
}

BrauerClass BrauerClass::times(std::int64_t k) const {
  if (const auto* r = std::get_if<Residues>(&coords_)) {
    Residues out(r->size());
    for (std::size_t i = 0; i < r->size(); ++i) {
      std::int64_t n = model_->orders()[i];
      __int128 v = static_cast<__int128>((*r)[i]) * mod_floor(k, n) % n;
      out[i] = static_cast<std::int64_t>(v);
    }
    return BrauerClass(model_, std::move(out));
  }
  // Double-and-add keeps this cheap for large k.
  BrauerClass acc = identity(model_);
  BrauerClass base = k < 0 ? -*this : *this;
  std::int64_t e = mod_floor(k, order(*this));
  while (e > 0) {
    if (e & 1) acc = acc + base;
    base = base + base;
    e >>= 1;
  }
  return acc;
}

std::string BrauerClass::to_string() const {
  std::ostringstream os;
  if (const auto* r = std::get_if<Residues>(&coords_)) {
    os << "(";
    for (std::size_t i = 0; i < r->size(); ++i) os << (i ? "," : "") << (*r)[i];
    os << ")";
    return os.str();
  }
  const auto& rc = std::get<RationalBrauerClass>(coords_);
  if (rc.is_trivial()) return "0";
  os << "{";
  bool first = true;
  for (const auto& [place, inv] : rc.invariants()) {
    os << (first ? "" : ", ") << place.to_string() << ": " << inv.to_string();
    first = false;
  }
  os << "}";
  return os.str();
}

void require_model(const ModelPtr& model, std::span<const BrauerClass> classes) {
  for (const auto& c : classes) {
    if (!same_model(model, c.model())) throw ArgumentError("classes belong to different group models");
  }
}

std::int64_t order(const BrauerClass& c) { return coords_order(*c.model(), c.coords()); }

BrauerClass p_part(const BrauerClass& c, std::int64_t p) {
  if (!is_prime(p)) throw ArgumentError("p_part needs a prime, got " + std::to_string(p));
  if (const auto* rc = std::get_if<RationalBrauerClass>(&c.coords())) {
    return BrauerClass(c.model(), rc->p_part(p));
  }
  // With ord(c) = p^k * r, gcd(p, r) = 1: the p-part is (r * r^{-1} mod p^k) * c,
  // i.e. the multiple e*c with e = 1 mod p^k and e = 0 mod r.
  std::int64_t n = order(c);
  std::int64_t pk = p_power_part(n, p);
  if (pk == 1) return BrauerClass::identity(c.model());
  std::int64_t r = n / pk;
  if (r == 1) return c;
  std::int64_t inv = inverse_mod(r, pk);
  return c.times(r * inv % n);
}

std::int64_t index(const BrauerClass& c) {
  const auto& model = *c.model();
  if (model.index_policy() == BrauerGroupModel::IndexPolicy::Oracle) {
    auto it = model.index_table().find(c.coords());
    if (it != model.index_table().end()) return it->second;
  }
  return order(c);
}

std::vector<BrauerClass> generated_subgroup(const ModelPtr& model, std::span<const BrauerClass> cs) {
  require_model(model, cs);
  std::set<BrauerClass> seen{BrauerClass::identity(model)};
  std::vector<BrauerClass> frontier(seen.begin(), seen.end());
  while (!frontier.empty()) {
    std::vector<BrauerClass> next;
    for (const auto& x : frontier) {
      for (const auto& g : cs) {
        BrauerClass y = x + g;
        if (seen.insert(y).second) next.push_back(y);
      }
    }
    frontier = std::move(next);
  }
  // Finite-order generators: closure under + already contains inverses.
  return {seen.begin(), seen.end()};
}

std::vector<BrauerClass> all_elements(const ModelPtr& model) {
  if (!model->is_finite()) throw DomainError("cannot enumerate Br(Q)");
  std::int64_t card = model->cardinality();
  const auto& orders = model->orders();
  std::vector<BrauerClass> out;
  out.reserve(static_cast<std::size_t>(card));
  Residues r(orders.size(), 0);
  for (std::int64_t k = 0; k < card; ++k) {
    out.emplace_back(model, r);
    for (std::size_t i = orders.size(); i-- > 0;) {
      if (++r[i] < orders[i]) break;
      r[i] = 0;
    }
  }
  return out;
}

CSAlgebra::CSAlgebra(BrauerClass c, std::int64_t degree) : class_(std::move(c)), degree_(degree) {
  if (degree_ < 1) throw ArgumentError("degree must be positive");
  if (degree_ % tits::index(class_) != 0) {
    throw ArgumentError("index " + std::to_string(tits::index(class_)) + " does not divide degree " +
                        std::to_string(degree_));
  }
}

bool coprime_indexes(const CSAlgebra& a, const CSAlgebra& b) {
  if (!same_model(a.brauer_class().model(), b.brauer_class().model())) {
    throw ArgumentError("algebras belong to different group models");
  }
  return gcd64(a.index(), b.index()) == 1;
}

}  // namespace tits
