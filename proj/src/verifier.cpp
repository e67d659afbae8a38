#include "tits/verifier.hpp"

#include "tits/errors.hpp"
#include "tits/grothendieck_ring.hpp"
#include "tits/motives.hpp"
#include "tits/numeric.hpp"
#include "tits/sigma.hpp"
#include "tits/varieties.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <stdexcept>
#include <unordered_map>

namespace tits {

// ---------------------------------------------------------------------------
// Config and certificates

VerifierConfig VerifierConfig::from_json(const Json& j) {
  VerifierConfig c;
  if (!j.is_object()) throw ArgumentError("config must be a JSON object");
  for (const auto& [key, value] : j.items()) {
    if (!value.is_number_integer() || value.get<std::int64_t>() < 0) {
      throw ArgumentError("config value '" + key + "' must be a non-negative integer");
    }
    auto v = value.get<std::int64_t>();
    if (key == "seed") {
      c.seed = static_cast<std::uint64_t>(v);
    } else if (key == "max_group_order") {
      c.max_group_order = v;
    } else if (key == "exhaustive_limit") {
      c.exhaustive_limit = v;
    } else if (key == "random_trials") {
      c.random_trials = v;
    } else if (key == "cross_check_stride") {
      c.cross_check_stride = std::max<std::int64_t>(v, 1);
    } else {
      throw ArgumentError("unknown config key '" + key + "'");
    }
  }
  return c;
}

Json VerifierConfig::to_json() const {
  return Json{{"seed", seed},
              {"max_group_order", max_group_order},
              {"exhaustive_limit", exhaustive_limit},
              {"random_trials", random_trials},
              {"cross_check_stride", cross_check_stride}};
}

Json VerificationRun::certificate() const {
  const char* out = outcome == Outcome::Pass ? "pass" : outcome == Outcome::Probe ? "probe" : "counterexample";
  Json j{{"version", kToolVersion}, {"suite", suite}, {"model", model}, {"bounds", bounds},
         {"seed", seed},            {"outcome", out},  {"stats", stats}};
  j["witness"] = witness ? *witness : Json(nullptr);
  return j;
}

namespace {

// ---------------------------------------------------------------------------
// Index-based view of a finite model. Element i is the i-th entry of
// all_elements(model); tables are built once through the library operations.

struct GroupTable {
  ModelPtr model;
  std::vector<BrauerClass> elems;
  std::map<BrauerClass, int> index_of;
  std::vector<std::vector<int>> add;
  std::vector<int> ord;
  std::vector<std::int64_t> ind;
  std::vector<std::int64_t> primes;
  std::vector<std::vector<int>> ppart;  // [prime index][element]
  int zero = 0;

  int size() const { return static_cast<int>(elems.size()); }
  int sub(int a, int b) const { return index_of.at(elems[a] - elems[b]); }

  explicit GroupTable(const ModelPtr& m) : model(m), elems(all_elements(m)) {
    int n = size();
    for (int i = 0; i < n; ++i) index_of.emplace(elems[i], i);
    zero = index_of.at(BrauerClass::identity(m));
    add.assign(n, std::vector<int>(n));
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) add[i][j] = index_of.at(elems[i] + elems[j]);
    }
    for (int i = 0; i < n; ++i) {
      ord.push_back(static_cast<int>(order(elems[i])));
      ind.push_back(index(elems[i]));
    }
    primes = prime_divisors(m->exponent());
    for (std::int64_t p : primes) {
      std::vector<int> row(n);
      for (int i = 0; i < n; ++i) row[i] = index_of.at(p_part(elems[i], p));
      ppart.push_back(std::move(row));
    }
  }
};

using Multiset = std::vector<int>;

// All sorted size-k multisets over {0..n-1}.
std::vector<Multiset> multisets(int n, int k) {
  std::vector<Multiset> out;
  if (k == 0) return {Multiset{}};
  if (n == 0) return out;
  Multiset cur(k, 0);
  while (true) {
    out.push_back(cur);
    int i = k - 1;
    while (i >= 0 && cur[i] == n - 1) --i;
    if (i < 0) break;
    ++cur[i];
    for (int j = i + 1; j < k; ++j) cur[j] = cur[i];
  }
  return out;
}

std::uint64_t encode(const Multiset& x, int n) {
  std::uint64_t key = 0;
  for (int v : x) key = key * static_cast<std::uint64_t>(n) + static_cast<std::uint64_t>(v);
  return key;
}

MotiveSum to_motive(const GroupTable& g, const Multiset& x) {
  MotiveSum out(g.model);
  for (int v : x) out.add(g.elems[v]);
  return out;
}

Json multiset_json(const GroupTable& g, const Multiset& x) {
  Json arr = Json::array();
  for (int v : x) arr.push_back(class_to_json(g.elems[v]));
  return arr;
}

// Per-prime count vectors, laid out [prime][element].
std::vector<int> prime_signature(const GroupTable& g, const Multiset& x) {
  int n = g.size();
  std::vector<int> sig(g.primes.size() * n, 0);
  for (std::size_t p = 0; p < g.primes.size(); ++p) {
    for (int v : x) ++sig[p * n + g.ppart[p][v]];
  }
  return sig;
}

// Coefficient vector of the normal form.
std::vector<int> normal_form_vector(const GroupTable& g, const Multiset& x) {
  std::vector<int> coeff(g.size(), 0);
  for (int v : x) {
    int nu = 0;
    for (std::size_t p = 0; p < g.primes.size(); ++p) {
      int part = g.ppart[p][v];
      if (part != g.zero) {
        ++coeff[part];
        ++nu;
      }
    }
    coeff[g.zero] += nu == 0 ? 1 : -(nu - 1);
  }
  return coeff;
}

std::vector<int> library_normal_form_vector(const GroupTable& g, const Multiset& x) {
  RawCombination raw;
  for (int v : x) raw[g.elems[v]] += 1;
  RBElement nf = normalize(g.model, raw);
  std::vector<int> coeff(g.size(), 0);
  for (const auto& [c, k] : nf.terms()) coeff[g.index_of.at(c)] = static_cast<int>(k);
  return coeff;
}

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  }
  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
};

GroupTable finite_table(const ModelPtr& model, const char* suite) {
  if (!model->is_finite()) throw DomainError(std::string(suite) + " needs a finite abstract model");
  return GroupTable(model);
}

VerificationRun start(const char* suite, const ModelPtr& model, Json bounds, const VerifierConfig& config) {
  VerificationRun run;
  run.suite = suite;
  run.model = model ? to_json(*model) : Json(nullptr);
  run.bounds = std::move(bounds);
  run.bounds["config"] = config.to_json();
  run.seed = config.seed;
  return run;
}

void fail(VerificationRun& run, Json witness) {
  if (run.outcome != VerificationRun::Outcome::Counterexample) {
    run.outcome = VerificationRun::Outcome::Counterexample;
    run.witness = std::move(witness);
  }
}

}  // namespace

// ---------------------------------------------------------------------------
// Relation sets: per-prime identifications versus coprime splittings

VerificationRun verify_relation_equivalence(const ModelPtr& model, std::int64_t m_max, const VerifierConfig& config) {
  if (!model->is_finite()) throw DomainError("relation-equivalence needs a finite abstract model");
  if (model->cardinality() > config.max_group_order) {
    throw ResourceError("group order " + std::to_string(model->cardinality()) + " exceeds the limit " +
                        std::to_string(config.max_group_order));
  }
  if (m_max < 1) throw ArgumentError("m_max must be >= 1");
  VerificationRun run = start("relation-equivalence", model, Json{{"m_max", m_max}}, config);
  GroupTable g(model);
  int n = g.size();

  // One application of [A''] + [A+A'+A''] <-> [A+A''] + [A'+A''] with coprime
  // indexes of A and A', as a map on unordered pairs.
  auto coprime = [&](int a, int b) { return gcd64(g.ind[a], g.ind[b]) == 1; };
  std::vector<std::vector<std::pair<int, int>>> moves(static_cast<std::size_t>(n) * n);
  std::int64_t move_count = 0;
  for (int u = 0; u < n; ++u) {
    for (int v = u; v < n; ++v) {
      auto& out = moves[static_cast<std::size_t>(u) * n + v];
      auto push = [&](int a, int b) { out.emplace_back(std::min(a, b), std::max(a, b)); };
      // {u, v} as the left side, either element playing A''.
      for (auto [base, top] : {std::pair{u, v}, std::pair{v, u}}) {
        int w = g.sub(top, base);
        for (int a = 0; a < n; ++a) {
          int a2 = g.sub(w, a);
          if (coprime(a, a2)) push(g.add[a][base], g.add[a2][base]);
        }
      }
      // {u, v} as the right side.
      for (int c = 0; c < n; ++c) {
        int a = g.sub(u, c), a2 = g.sub(v, c);
        if (coprime(a, a2)) push(c, g.add[g.add[a][a2]][c]);
      }
      std::sort(out.begin(), out.end());
      out.erase(std::unique(out.begin(), out.end()), out.end());
      move_count += static_cast<std::int64_t>(out.size());
    }
  }

  Json per_card = Json::array();
  std::int64_t checked = 0;
  for (int k = 1; k <= m_max; ++k) {
    std::vector<Multiset> sums = multisets(n, k);
    std::unordered_map<std::uint64_t, int> id;
    for (std::size_t i = 0; i < sums.size(); ++i) id.emplace(encode(sums[i], n), static_cast<int>(i));
    UnionFind uf(sums.size());
    for (std::size_t i = 0; i < sums.size(); ++i) {
      const Multiset& x = sums[i];
      for (int s = 0; s < k; ++s) {
        for (int t = s + 1; t < k; ++t) {
          if (t > s + 1 && x[t] == x[t - 1]) continue;
          if (s > 0 && x[s] == x[s - 1]) continue;
          for (auto [a, b] : moves[static_cast<std::size_t>(x[s]) * n + x[t]]) {
            Multiset y;
            y.reserve(k);
            for (int r = 0; r < k; ++r) {
              if (r != s && r != t) y.push_back(x[r]);
            }
            y.push_back(a);
            y.push_back(b);
            std::sort(y.begin(), y.end());
            uf.unite(static_cast<int>(i), id.at(encode(y, n)));
          }
        }
      }
    }
    // Three partitions: closure classes, per-prime keys, normal forms.
    std::map<int, std::size_t> root_rep;
    std::map<std::vector<int>, std::size_t> key_rep, nf_rep;
    std::size_t classes = 0;
    for (std::size_t i = 0; i < sums.size(); ++i) {
      const Multiset& x = sums[i];
      int root = uf.find(static_cast<int>(i));
      std::vector<int> key = prime_signature(g, x);
      std::vector<int> nf = normal_form_vector(g, x);
      if (static_cast<std::int64_t>(i) % config.cross_check_stride == 0) {
        if (nf != library_normal_form_vector(g, x)) throw std::logic_error("normal-form table disagrees with library");
      }
      auto [r_it, r_new] = root_rep.emplace(root, i);
      auto [k_it, k_new] = key_rep.emplace(key, i);
      auto [n_it, n_new] = nf_rep.emplace(nf, i);
      classes += r_new ? 1 : 0;
      // Each partition must pick the same representative as the closure.
      if (r_new != k_new || r_it->second != k_it->second) {
        std::size_t j = r_new ? k_it->second : r_it->second;
        fail(run, Json{{"cardinality", k},
                       {"x", multiset_json(g, x)},
                       {"y", multiset_json(g, sums[j])},
                       {"closure_equal", uf.find(static_cast<int>(j)) == root},
                       {"per_prime_equal", prime_signature(g, sums[j]) == key}});
      }
      if (r_new != n_new || r_it->second != n_it->second) {
        std::size_t j = r_new ? n_it->second : r_it->second;
        fail(run, Json{{"cardinality", k},
                       {"x", multiset_json(g, x)},
                       {"y", multiset_json(g, sums[j])},
                       {"closure_equal", uf.find(static_cast<int>(j)) == root},
                       {"normal_form_equal", normal_form_vector(g, sums[j]) == nf}});
      }
      ++checked;
    }
    per_card.push_back({{"cardinality", k}, {"sums", sums.size()}, {"classes", classes}});
  }
  run.stats = Json{{"sums_checked", checked}, {"relation_moves", move_count}, {"per_cardinality", per_card}};
  return run;
}

// ---------------------------------------------------------------------------
// Direct-sum cancellation

VerificationRun verify_sum_cancellation(const ModelPtr& model, std::int64_t card_max, const VerifierConfig& config) {
  if (card_max < 0) throw ArgumentError("cardinality bound must be >= 0");
  GroupTable g = finite_table(model, "sum-cancellation");
  std::vector<Multiset> all;
  for (int k = 0; k <= card_max; ++k) {
    auto part = multisets(g.size(), k);
    all.insert(all.end(), part.begin(), part.end());
  }
  std::vector<std::vector<int>> sig;
  for (const auto& x : all) sig.push_back(prime_signature(g, x));
  const std::int64_t count = static_cast<std::int64_t>(all.size());
  const bool exhaustive = count <= 2000000 && count * count * count <= config.exhaustive_limit;
  VerificationRun run = start("sum-cancellation", model,
                              Json{{"card_max", card_max}, {"mode", exhaustive ? "exhaustive" : "random"}}, config);

  auto iso = [&](std::size_t a, std::size_t b) { return all[a].size() == all[b].size() && sig[a] == sig[b]; };
  auto iso_padded = [&](std::size_t a, std::size_t b, std::size_t c) {
    if (all[a].size() + all[c].size() != all[b].size() + all[c].size()) return false;
    for (std::size_t i = 0; i < sig[a].size(); ++i) {
      if (sig[a][i] + sig[c][i] != sig[b][i] + sig[c][i]) return false;
    }
    return true;
  };
  std::int64_t cases = 0, library_checks = 0;
  auto check = [&](std::size_t a, std::size_t b, std::size_t c) {
    bool lhs = iso_padded(a, b, c);
    bool rhs = iso(a, b);
    if (cases % config.cross_check_stride == 0) {
      ++library_checks;
      MotiveSum x = to_motive(g, all[a]), y = to_motive(g, all[b]), z = to_motive(g, all[c]);
      bool lib_padded = is_isomorphic(direct_sum(x, z), direct_sum(y, z));
      if (lib_padded != lhs || is_isomorphic(x, y) != rhs) throw std::logic_error("fast path disagrees with library");
    }
    ++cases;
    if (lhs != rhs) {
      fail(run, Json{{"x", multiset_json(g, all[a])},
                     {"y", multiset_json(g, all[b])},
                     {"n", multiset_json(g, all[c])},
                     {"padded_isomorphic", lhs},
                     {"isomorphic", rhs}});
    }
  };
  if (exhaustive) {
    for (std::size_t a = 0; a < all.size(); ++a) {
      for (std::size_t b = 0; b < all.size(); ++b) {
        for (std::size_t c = 0; c < all.size(); ++c) check(a, b, c);
      }
    }
  } else {
    std::mt19937_64 rng(config.seed);
    std::uniform_int_distribution<std::size_t> pick(0, all.size() - 1);
    for (std::int64_t t = 0; t < config.random_trials; ++t) check(pick(rng), pick(rng), pick(rng));
  }
  run.stats = Json{{"sums", count}, {"cases", cases}, {"library_cross_checks", library_checks}};
  return run;
}

// ---------------------------------------------------------------------------
// Tensor cancellation against a quadric factor

VerificationRun verify_tensor_cancellation(const ModelPtr& model, std::int64_t n_dim, std::int64_t card_max,
                                           bool probe, const VerifierConfig& config) {
  if (!probe && n_dim < 5) throw DomainError("tensor cancellation is asserted only for n >= 5; use probe mode");
  if (n_dim < 3) throw ArgumentError("quadric dimension must be >= 3");
  if (card_max < 0) throw ArgumentError("cardinality bound must be >= 0");
  GroupTable g = finite_table(model, "tensor-cancellation");
  VerificationRun run = start("tensor-cancellation", model,
                              Json{{"n", n_dim}, {"card_max", card_max}, {"mode", probe ? "probe" : "assert"}}, config);
  int n = g.size();
  const int c_mult = n_dim % 2 == 0 ? 2 : 1;
  std::vector<Multiset> all;
  for (int k = 0; k <= card_max; ++k) {
    auto part = multisets(n, k);
    all.insert(all.end(), part.begin(), part.end());
  }
  std::vector<std::vector<int>> plain;
  for (const auto& x : all) plain.push_back(prime_signature(g, x));

  std::int64_t pairs = 0, library_checks = 0, tested_classes = 0;
  std::optional<Json> first_failure;
  for (int c = 0; c < n; ++c) {
    if (g.add[c][c] != g.zero) continue;
    ++tested_classes;
    MotiveSum qc(model);
    qc.add(g.elems[g.zero], n_dim - 2);
    qc.add(g.elems[c], c_mult);
    std::map<std::pair<std::size_t, std::vector<std::int64_t>>, std::size_t> bucket;
    for (std::size_t i = 0; i < all.size(); ++i) {
      // Count vector of x (x) Q_c, then its per-prime signature.
      std::vector<std::int64_t> t(n, 0);
      for (int v : all[i]) {
        t[v] += n_dim - 2;
        t[g.add[v][c]] += c_mult;
      }
      std::vector<std::int64_t> key(g.primes.size() * n, 0);
      for (std::size_t p = 0; p < g.primes.size(); ++p) {
        for (int z = 0; z < n; ++z) key[p * n + g.ppart[p][z]] += t[z];
      }
      if (static_cast<std::int64_t>(i) % config.cross_check_stride == 0) {
        ++library_checks;
        MotiveSum lib = tensor(to_motive(g, all[i]), qc);
        for (int z = 0; z < n; ++z) {
          if (lib.multiplicity(g.elems[z]) != t[z]) throw std::logic_error("tensor table disagrees with library");
        }
      }
      auto [it, fresh] = bucket.emplace(std::make_pair(all[i].size(), std::move(key)), i);
      if (fresh) continue;
      ++pairs;
      std::size_t j = it->second;
      if (plain[i] != plain[j]) {
        Json w{{"c", class_to_json(g.elems[c])},
               {"x", multiset_json(g, all[j])},
               {"y", multiset_json(g, all[i])},
               {"tensor_isomorphic", true},
               {"isomorphic", false}};
        if (!first_failure) first_failure = w;
        if (!probe) fail(run, w);
      }
    }
  }
  if (probe) {
    run.outcome = VerificationRun::Outcome::Probe;
    run.witness = first_failure;
  }
  run.stats = Json{{"sums", all.size()},
                   {"two_torsion_classes", tested_classes},
                   {"colliding_pairs", pairs},
                   {"implication_survives", !first_failure.has_value()},
                   {"library_cross_checks", library_checks}};
  return run;
}

// ---------------------------------------------------------------------------
// Products of quadrics: subset decomposition determines the Clifford classes

namespace {

std::int64_t rank_f2(std::vector<int> vs) {
  std::int64_t rank = 0;
  for (std::size_t i = 0; i < vs.size(); ++i) {
    if (vs[i] == 0) continue;
    ++rank;
    int pivot = vs[i] & -vs[i];
    for (std::size_t j = i + 1; j < vs.size(); ++j) {
      if (vs[j] & pivot) vs[j] ^= vs[i];
    }
  }
  return rank;
}

}  // namespace

VerificationRun verify_quadric_product_matching(std::int64_t d, std::int64_t m, std::int64_t n_dim, bool reduced,
                                                const VerifierConfig& config) {
  if (n_dim < 5) throw DomainError("product matching needs form dimension n >= 5");
  if (m < 1 || d < 0) throw ArgumentError("need m >= 1 and d >= 0");
  if (d > 16 || m > 20) throw ResourceError("enumeration bounds too large");
  if (m >= 6 && !extra_condition(m, n_dim).holds) {
    throw DomainError("m >= 6 is only in range when the extra sum condition holds");
  }
  ModelPtr model = BrauerGroupModel::abstract(std::vector<std::int64_t>(static_cast<std::size_t>(d), 2));
  VerificationRun run = start("quadric-product-matching", model,
                              Json{{"d", d}, {"m", m}, {"n", n_dim}, {"reduced", reduced}}, config);

  // Copy weight of a subset S: 2^|S| (n-2)^(m-|S|) for even n, (n-2)^(m-|S|) for odd n.
  std::vector<std::int64_t> weight(static_cast<std::size_t>(m) + 1);
  for (std::int64_t s = 0; s <= m; ++s) {
    std::int64_t w = 1;
    for (std::int64_t i = 0; i < m - s; ++i) w = checked_mul(w, n_dim - 2);
    if (n_dim % 2 == 0) {
      for (std::int64_t i = 0; i < s; ++i) w = checked_mul(w, 2);
    }
    weight[s] = w;
  }

  std::int64_t families = 0, library_checks = 0;
  std::vector<std::int64_t> ranks;
  if (reduced) {
    for (std::int64_t r = 0; r <= std::min(d, m); ++r) ranks.push_back(r);
  } else {
    ranks.push_back(d);
  }
  for (std::int64_t r : ranks) {
    int space = 1 << r;
    std::map<std::vector<std::int64_t>, Multiset> seen;
    for (const Multiset& fam : multisets(space, static_cast<int>(m))) {
      if (reduced && rank_f2(fam) != r) continue;
      std::vector<std::int64_t> sig(space, 0);
      for (std::uint32_t s = 0; s < (1u << m); ++s) {
        int sum = 0;
        for (std::int64_t j = 0; j < m; ++j) {
          if (s >> j & 1u) sum ^= fam[j];
        }
        sig[sum] = checked_add(sig[sum], weight[__builtin_popcount(s)]);
      }
      if (families % config.cross_check_stride == 0 && r == d) {
        // Replay through the descriptor pipeline: product of quadric shadows.
        ++library_checks;
        std::vector<VarietyDescriptor> factors;
        for (int v : fam) {
          Residues res(static_cast<std::size_t>(d));
          for (std::int64_t b = 0; b < d; ++b) res[b] = v >> (d - 1 - b) & 1;
          factors.push_back(VarietyDescriptor::quadric(FormShadow(n_dim, BrauerClass(model, res), true)));
        }
        MotiveSum eff = tits_measure(VarietyDescriptor::product(std::move(factors))).jt_effective;
        for (int v = 0; v < space; ++v) {
          Residues res(static_cast<std::size_t>(d));
          for (std::int64_t b = 0; b < d; ++b) res[b] = v >> (d - 1 - b) & 1;
          if (eff.multiplicity(BrauerClass(model, res)) != sig[v]) {
            throw std::logic_error("subset decomposition disagrees with the tensor measure");
          }
        }
      }
      ++families;
      auto [it, fresh] = seen.emplace(std::move(sig), fam);
      if (!fresh && it->second != fam) {
        auto as_json = [&](const Multiset& f) {
          Json arr = Json::array();
          for (int v : f) arr.push_back(v);
          return arr;
        };
        fail(run, Json{{"rank", r}, {"family_a", as_json(it->second)}, {"family_b", as_json(fam)},
                       {"encoding", "classes as bitmasks of F_2^rank"}});
      }
    }
  }
  run.stats = Json{{"families", families}, {"library_cross_checks", library_checks}};
  return run;
}

// ---------------------------------------------------------------------------
// Confluence of random rewrite orders

VerificationRun verify_normal_form_confluence(const ModelPtr& model, std::int64_t trials, const VerifierConfig& config) {
  if (trials < 0) throw ArgumentError("trials must be >= 0");
  GroupTable g = finite_table(model, "normal-form-confluence");
  VerificationRun run = start("normal-form-confluence", model, Json{{"trials", trials}}, config);
  std::mt19937_64 rng(config.seed);
  auto uniform = [&](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); };
  const int n = g.size();
  const BrauerClass zero = g.elems[g.zero];

  auto primes_of = [&](int v) {
    std::vector<std::size_t> ps;
    for (std::size_t p = 0; p < g.primes.size(); ++p) {
      if (g.ppart[p][v] != g.zero) ps.push_back(p);
    }
    return ps;
  };
  // Coprime pairs (a, b), both nontrivial, for the reverse scrambling step.
  std::vector<std::pair<int, int>> coprime_pairs;
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      if (a != g.zero && b != g.zero && gcd64(g.ind[a], g.ind[b]) == 1) coprime_pairs.emplace_back(a, b);
    }
  }

  std::int64_t rewrites = 0;
  for (std::int64_t t = 0; t < trials; ++t) {
    RawCombination raw;
    int terms = uniform(1, 6);
    for (int i = 0; i < terms; ++i) {
      int k = uniform(-3, 3);
      if (k == 0) k = 1;
      raw[g.elems[uniform(0, n - 1)]] += k;
    }
    RBElement expected = normalize(model, raw);
    std::int64_t aug = augmentation(raw);

    // Reverse steps add multiples of [0] + [a+b] - [a] - [b].
    RawCombination work = raw;
    int scrambles = coprime_pairs.empty() ? 0 : uniform(0, 4);
    for (int s = 0; s < scrambles; ++s) {
      auto [a, b] = coprime_pairs[uniform(0, static_cast<int>(coprime_pairs.size()) - 1)];
      int k = uniform(1, 2);
      work[zero] += k;
      work[g.elems[g.add[a][b]]] += k;
      work[g.elems[a]] -= k;
      work[g.elems[b]] -= k;
    }
    // Forward steps: split a random multi-prime term along a random prime subset.
    while (true) {
      std::vector<BrauerClass> candidates;
      for (const auto& [c, k] : work) {
        if (k != 0 && primes_of(g.index_of.at(c)).size() >= 2) candidates.push_back(c);
      }
      if (candidates.empty()) break;
      const BrauerClass c = candidates[uniform(0, static_cast<int>(candidates.size()) - 1)];
      int v = g.index_of.at(c);
      auto ps = primes_of(v);
      std::uint32_t mask = static_cast<std::uint32_t>(uniform(1, (1 << ps.size()) - 2));
      int a = g.zero;
      for (std::size_t i = 0; i < ps.size(); ++i) {
        if (mask >> i & 1u) a = g.add[a][g.ppart[ps[i]][v]];
      }
      int b = g.sub(v, a);
      std::int64_t k = work[c];
      work[c] = 0;
      work[g.elems[a]] += k;
      work[g.elems[b]] += k;
      work[zero] -= k;
      ++rewrites;
    }
    RawCombination reached;
    for (const auto& [c, k] : work) {
      if (k != 0) reached.emplace(c, k);
    }
    if (!(reached == expected.terms()) || augmentation(reached) != aug || !is_normal_form(reached)) {
      Json input = Json::array();
      for (const auto& [c, k] : raw) input.push_back({{"class", class_to_json(c)}, {"coeff", k}});
      fail(run, Json{{"trial", t}, {"input", input}, {"expected", to_json(expected)["terms"]}});
    }
  }
  run.stats = Json{{"trials", trials}, {"rewrites", rewrites}};
  return run;
}

}  // namespace tits
