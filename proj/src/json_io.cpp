#include "tits/json_io.hpp"

#include "tits/errors.hpp"
#include "tits/rational_backend.hpp"

#include <initializer_list>
#include <string>

namespace tits {

namespace {

void only_keys(const Json& j, std::initializer_list<const char*> allowed, const std::string& what) {
  if (!j.is_object()) throw ArgumentError(what + " must be a JSON object");
  for (const auto& [key, value] : j.items()) {
    bool ok = false;
    for (const char* a : allowed) ok = ok || key == a;
    if (!ok) throw ArgumentError("unexpected key '" + key + "' in " + what);
  }
}

const Json& need(const Json& j, const char* key, const std::string& what) {
  auto it = j.find(key);
  if (it == j.end()) throw ArgumentError(what + " is missing '" + key + "'");
  return *it;
}

std::int64_t need_int(const Json& j, const char* key, const std::string& what) {
  const Json& v = need(j, key, what);
  if (!v.is_number_integer()) throw ArgumentError("'" + std::string(key) + "' in " + what + " must be an integer");
  return v.get<std::int64_t>();
}

bool opt_bool(const Json& j, const char* key, const std::string& what) {
  auto it = j.find(key);
  if (it == j.end()) return false;
  if (!it->is_boolean()) throw ArgumentError("'" + std::string(key) + "' in " + what + " must be a boolean");
  return it->get<bool>();
}

std::string rational_text(const Json& v, const std::string& what) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_number_integer()) return std::to_string(v.get<std::int64_t>());
  throw ArgumentError(what + " must be an exact rational string");
}

Residues residues_from_json(const Json& v) {
  if (!v.is_array()) throw ArgumentError("'coords' must be an array of integers");
  Residues r;
  for (const auto& x : v) {
    if (!x.is_number_integer()) throw ArgumentError("'coords' must be an array of integers");
    r.push_back(x.get<std::int64_t>());
  }
  return r;
}

RationalBrauerClass invariants_from_json(const Json& v) {
  if (!v.is_array()) throw ArgumentError("'invariants' must be an array");
  std::map<Place, QZ> inv;
  for (const auto& e : v) {
    only_keys(e, {"place", "inv"}, "invariant entry");
    const Json& p = need(e, "place", "invariant entry");
    Place place = Place::real();
    if (p.is_string() && p.get<std::string>() == "real") {
      place = Place::real();
    } else if (p.is_number_integer()) {
      place = Place::finite(p.get<std::int64_t>());
    } else {
      throw ArgumentError("place must be \"real\" or a prime");
    }
    if (inv.count(place)) throw ArgumentError("duplicate place " + place.to_string());
    inv[place] = QZ::parse(rational_text(need(e, "inv", "invariant entry"), "'inv'"));
  }
  return RationalBrauerClass(inv);
}

Json invariants_to_json(const RationalBrauerClass& c) {
  Json arr = Json::array();
  for (const auto& [place, inv] : c.invariants()) {
    Json p = place.is_real() ? Json("real") : Json(place.prime());
    arr.push_back({{"place", p}, {"inv", inv.to_string()}});
  }
  return arr;
}

// Reads the class part of `j`, ignoring other keys (the caller checks those).
BrauerClass class_part(const ModelPtr& model, const Json& j) {
  int given = static_cast<int>(j.contains("coords")) + static_cast<int>(j.contains("invariants")) +
              static_cast<int>(j.contains("quaternion"));
  if (given != 1) throw ArgumentError("a class needs exactly one of 'coords', 'invariants', 'quaternion'");
  if (j.contains("coords")) return BrauerClass(model, residues_from_json(j["coords"]));
  if (j.contains("invariants")) return BrauerClass(model, invariants_from_json(j["invariants"]));
  const Json& q = j["quaternion"];
  if (!q.is_array() || q.size() != 2) throw ArgumentError("'quaternion' must be a pair [a, b]");
  if (model->kind() != BrauerGroupModel::Kind::RationalField) {
    throw ArgumentError("'quaternion' classes need the rational model");
  }
  BigRational a = parse_rational(rational_text(q[0], "quaternion entry"));
  BigRational b = parse_rational(rational_text(q[1], "quaternion entry"));
  return BrauerClass(model, quaternion_class(a, b));
}

}  // namespace

ModelPtr model_from_json(const Json& j) {
  only_keys(j, {"kind", "orders", "index_oracle"}, "group");
  const Json& kind = need(j, "kind", "group");
  ModelPtr model;
  if (kind == "abstract") {
    const Json& orders = need(j, "orders", "group");
    if (!orders.is_array()) throw ArgumentError("'orders' must be an array");
    std::vector<std::int64_t> o;
    for (const auto& x : orders) {
      if (!x.is_number_integer()) throw ArgumentError("'orders' must hold integers");
      o.push_back(x.get<std::int64_t>());
    }
    model = BrauerGroupModel::abstract(std::move(o));
  } else if (kind == "rational") {
    if (j.contains("orders")) throw ArgumentError("rational model takes no 'orders'");
    model = BrauerGroupModel::rational();
  } else {
    throw ArgumentError("group kind must be \"abstract\" or \"rational\"");
  }
  if (j.contains("index_oracle")) {
    const Json& table = j["index_oracle"];
    if (!table.is_array()) throw ArgumentError("'index_oracle' must be an array");
    std::map<Coords, std::int64_t> entries;
    for (const auto& e : table) {
      only_keys(e, {"coords", "invariants", "quaternion", "index"}, "index oracle entry");
      BrauerClass c = class_part(model, e);
      entries[c.coords()] = need_int(e, "index", "index oracle entry");
    }
    model = model->with_index_oracle(entries);
  }
  return model;
}

Json to_json(const BrauerGroupModel& m) {
  Json j;
  if (m.kind() == BrauerGroupModel::Kind::RationalField) {
    j["kind"] = "rational";
  } else {
    j["kind"] = "abstract";
    j["orders"] = m.orders();
  }
  if (m.index_policy() == BrauerGroupModel::IndexPolicy::Oracle) {
    Json arr = Json::array();
    for (const auto& [coords, idx] : m.index_table()) {
      Json e;
      if (const auto* r = std::get_if<Residues>(&coords)) {
        e["coords"] = *r;
      } else {
        e["invariants"] = invariants_to_json(std::get<RationalBrauerClass>(coords));
      }
      e["index"] = idx;
      arr.push_back(e);
    }
    j["index_oracle"] = arr;
  }
  return j;
}

BrauerClass class_from_json(const ModelPtr& model, const Json& j) {
  only_keys(j, {"coords", "invariants", "quaternion"}, "class");
  return class_part(model, j);
}

Json class_to_json(const BrauerClass& c) {
  if (const auto* r = std::get_if<Residues>(&c.coords())) return Json{{"coords", *r}};
  return Json{{"invariants", invariants_to_json(std::get<RationalBrauerClass>(c.coords()))}};
}

BrauerClass standalone_class_from_json(const Json& j) {
  only_keys(j, {"group", "coords", "invariants", "quaternion"}, "class");
  ModelPtr model = model_from_json(need(j, "group", "class"));
  return class_part(model, j);
}

MotiveSum motive_from_json(const Json& j) {
  only_keys(j, {"group", "classes"}, "motive sum");
  ModelPtr model = model_from_json(need(j, "group", "motive sum"));
  MotiveSum out(model);
  const Json& classes = need(j, "classes", "motive sum");
  if (!classes.is_array()) throw ArgumentError("'classes' must be an array");
  for (const auto& e : classes) {
    only_keys(e, {"coords", "invariants", "quaternion", "mult"}, "motive entry");
    std::int64_t mult = e.contains("mult") ? need_int(e, "mult", "motive entry") : 1;
    if (mult < 1) throw ArgumentError("'mult' must be >= 1");
    out.add(class_part(model, e), mult);
  }
  return out;
}

Json to_json(const MotiveSum& x) {
  Json classes = Json::array();
  for (const auto& [c, k] : x.counts()) {
    Json e = class_to_json(c);
    e["mult"] = k;
    classes.push_back(e);
  }
  return Json{{"group", to_json(*x.model())}, {"classes", classes}};
}

RBElement rb_from_json(const Json& j) {
  only_keys(j, {"group", "terms"}, "R_B element");
  ModelPtr model = model_from_json(need(j, "group", "R_B element"));
  const Json& terms = need(j, "terms", "R_B element");
  if (!terms.is_array()) throw ArgumentError("'terms' must be an array");
  RawCombination raw;
  for (const auto& t : terms) {
    only_keys(t, {"class", "coeff"}, "term");
    BrauerClass c = class_from_json(model, need(t, "class", "term"));
    raw[c] = checked_add(raw.count(c) ? raw[c] : 0, need_int(t, "coeff", "term"));
  }
  return normalize(model, raw);
}

Json to_json(const RBElement& x) {
  Json terms = Json::array();
  for (const auto& [c, k] : x.terms()) terms.push_back({{"class", class_to_json(c)}, {"coeff", k}});
  return Json{{"group", to_json(*x.model())}, {"terms", terms}};
}

namespace {

VarietyDescriptor node_from_json(const ModelPtr& model, const Json& j) {
  if (!j.is_object()) throw ArgumentError("descriptor node must be an object");
  const Json& fam = need(j, "family", "descriptor");
  if (!fam.is_string()) throw ArgumentError("'family' must be a string");
  std::string family = fam.get<std::string>();
  if (family == "severi_brauer") {
    only_keys(j, {"group", "family", "degree", "class"}, "severi_brauer node");
    CSAlgebra a(class_from_json(model, need(j, "class", family)), need_int(j, "degree", family));
    return VarietyDescriptor::severi_brauer(a);
  }
  if (family == "grassmannian") {
    only_keys(j, {"group", "family", "d", "degree", "class"}, "grassmannian node");
    CSAlgebra a(class_from_json(model, need(j, "class", family)), need_int(j, "degree", family));
    return VarietyDescriptor::grassmannian(need_int(j, "d", family), a);
  }
  if (family == "quadric") {
    only_keys(j, {"group", "family", "form", "shadow"}, "quadric node");
    if (j.contains("form") == j.contains("shadow")) throw ArgumentError("quadric needs exactly one of 'form', 'shadow'");
    if (j.contains("form")) {
      const Json& f = j["form"];
      if (!f.is_array()) throw ArgumentError("'form' must be an array of rational strings");
      std::vector<std::string> entries;
      for (const auto& e : f) entries.push_back(rational_text(e, "form entry"));
      if (model->kind() != BrauerGroupModel::Kind::RationalField) {
        throw ArgumentError("concrete forms need the rational model");
      }
      return VarietyDescriptor::quadric(QuadraticForm::parse(entries), model);
    }
    const Json& s = j["shadow"];
    only_keys(s, {"dim", "class", "i3_zero"}, "quadric shadow");
    FormShadow shadow(need_int(s, "dim", "shadow"), class_from_json(model, need(s, "class", "shadow")),
                      opt_bool(s, "i3_zero", "shadow"));
    return VarietyDescriptor::quadric(shadow);
  }
  if (family == "involution") {
    only_keys(j, {"group", "family", "degree", "class", "cplus", "cminus", "i3_zero"}, "involution node");
    return VarietyDescriptor::involution(
        need_int(j, "degree", family), class_from_json(model, need(j, "class", family)),
        class_from_json(model, need(j, "cplus", family)), class_from_json(model, need(j, "cminus", family)),
        opt_bool(j, "i3_zero", family));
  }
  if (family == "product") {
    only_keys(j, {"group", "family", "children"}, "product node");
    const Json& ch = need(j, "children", family);
    if (!ch.is_array()) throw ArgumentError("'children' must be an array");
    std::vector<VarietyDescriptor> children;
    for (const auto& c : ch) {
      if (c.contains("group") && !same_model(model_from_json(c["group"]), model)) {
        throw DescriptorError("product factors belong to different group models");
      }
      children.push_back(node_from_json(model, c));
    }
    return VarietyDescriptor::product(std::move(children));
  }
  throw ArgumentError("unknown family '" + family + "'");
}

Json node_to_json(const VarietyDescriptor& v) {
  return std::visit(
      [](const auto& node) -> Json {
        using T = std::decay_t<decltype(node)>;
        if constexpr (std::is_same_v<T, SeveriBrauer>) {
          return {{"family", "severi_brauer"},
                  {"degree", node.algebra.degree()},
                  {"class", class_to_json(node.algebra.brauer_class())}};
        } else if constexpr (std::is_same_v<T, Grassmannian>) {
          return {{"family", "grassmannian"},
                  {"d", node.d},
                  {"degree", node.algebra.degree()},
                  {"class", class_to_json(node.algebra.brauer_class())}};
        } else if constexpr (std::is_same_v<T, Quadric>) {
          if (node.form) return {{"family", "quadric"}, {"form", node.form->to_strings()}};
          return {{"family", "quadric"},
                  {"shadow",
                   {{"dim", node.shadow.dim},
                    {"class", class_to_json(node.shadow.clifford_class)},
                    {"i3_zero", node.shadow.i3_zero}}}};
        } else if constexpr (std::is_same_v<T, Involution>) {
          return {{"family", "involution"},
                  {"degree", node.degree},
                  {"class", class_to_json(node.algebra_class)},
                  {"cplus", class_to_json(node.cplus)},
                  {"cminus", class_to_json(node.cminus)},
                  {"i3_zero", node.i3_zero}};
        } else {
          Json ch = Json::array();
          for (const auto& c : node.children) ch.push_back(node_to_json(c));
          return {{"family", "product"}, {"children", ch}};
        }
      },
      v.node());
}

}  // namespace

VarietyDescriptor descriptor_from_json(const Json& j) {
  if (!j.is_object()) throw ArgumentError("descriptor must be a JSON object");
  ModelPtr model = model_from_json(need(j, "group", "descriptor"));
  return node_from_json(model, j);
}

Json to_json(const VarietyDescriptor& v) {
  Json j = node_to_json(v);
  j["group"] = to_json(*v.model());
  return j;
}

Json to_json(const MeasureReport& r) {
  Json classes = Json::array();
  for (const auto& [c, k] : r.jt_effective.counts()) {
    Json e = class_to_json(c);
    e["mult"] = k;
    classes.push_back(e);
  }
  Json terms = Json::array();
  for (const auto& [c, k] : r.jt.terms()) terms.push_back({{"class", class_to_json(c)}, {"coeff", k}});
  return Json{{"group", to_json(*r.jt.model())},
              {"rho", r.rho},
              {"dim", r.dim},
              {"jt_effective", classes},
              {"jt", terms}};
}

Json to_json(const ComparisonVerdict& v) {
  return Json{{"measures_equal", v.measures_equal},
              {"normal_forms_equal", v.normal_forms_equal},
              {"rho_equal", v.rho_equal},
              {"dims_equal", v.dims_equal},
              {"subgroups_equal", v.subgroups_equal}};
}

Json to_json(const DeductionReport& r) {
  Json ded = Json::array();
  for (const auto& d : r.deductions) {
    ded.push_back({{"conclusion", d.conclusion}, {"rule", d.rule}, {"citation", d.citation}});
  }
  return Json{{"shape", r.shape},
              {"assumed_equal", r.assumed_equal},
              {"measures_equal", r.measures_equal},
              {"deductions", ded}};
}

Json rational_to_json(const BigRational& q) {
  if (boost::multiprecision::denominator(q) == 1) {
    const BigInt& n = boost::multiprecision::numerator(q);
    if (n <= INT64_MAX && n >= INT64_MIN) return Json(static_cast<std::int64_t>(n));
  }
  return Json(format_rational(q));
}

}  // namespace tits
