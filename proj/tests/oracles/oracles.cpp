#include "oracles.hpp"

#include "tits/rational_backend.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <optional>
#include <set>
#include <stdexcept>

namespace tits::oracle {

// Primitive solutions of a x^2 + b y^2 = z^2 modulo p^3 (odd p) or 2^6 decide
// solvability over Q_p for square-free a, b. At p = 2 with a, b both even, mod 8
// is too coarse: (-10, 2)_2 = -1 although (1, 1, 0) solves it mod 8.
int hilbert_by_search(std::int64_t a, std::int64_t b, std::int64_t p) {
  if (p == 0) return (a > 0 || b > 0) ? 1 : -1;
  const std::int64_t mod = p == 2 ? 64 : p * p * p;
  auto reduce = [&](std::int64_t v) { return ((v % mod) + mod) % mod; };
  std::vector<char> any_square(mod, 0), unit_square(mod, 0);
  for (std::int64_t z = 0; z < mod; ++z) {
    std::int64_t s = z * z % mod;
    any_square[s] = 1;
    if (z % p != 0) unit_square[s] = 1;
  }
  const std::int64_t ar = reduce(a), br = reduce(b);
  for (std::int64_t x = 0; x < mod; ++x) {
    std::int64_t ax = ar * (x * x % mod) % mod;
    for (std::int64_t y = 0; y < mod; ++y) {
      std::int64_t v = (ax + br * (y * y % mod)) % mod;
      bool primitive_xy = x % p != 0 || y % p != 0;
      if (primitive_xy ? any_square[v] : unit_square[v]) return 1;
    }
  }
  return -1;
}

namespace {

struct Term {
  BigRational coef;
  unsigned mask;
};

// Product of basis monomials e_S e_T by rewriting the generator word.
Term multiply_words(unsigned s, unsigned t, const std::vector<BigRational>& squares) {
  std::vector<int> word;
  for (int i = 0; i < static_cast<int>(squares.size()); ++i) {
    if (s >> i & 1u) word.push_back(i);
  }
  for (int i = 0; i < static_cast<int>(squares.size()); ++i) {
    if (t >> i & 1u) word.push_back(i);
  }
  BigRational coef = 1;
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i + 1 < word.size(); ++i) {
      if (word[i] > word[i + 1]) {
        std::swap(word[i], word[i + 1]);
        coef = -coef;
        changed = true;
      } else if (word[i] == word[i + 1]) {
        coef *= squares[word[i]];
        word.erase(word.begin() + static_cast<long>(i), word.begin() + static_cast<long>(i) + 2);
        changed = true;
        break;
      }
    }
  }
  unsigned mask = 0;
  for (int g : word) mask |= 1u << g;
  return {coef, mask};
}

// Dimension of the null space of a rational matrix (rows of equal length).
std::size_t nullity(std::vector<std::vector<BigRational>> rows, std::size_t cols) {
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows.size(); ++c) {
    std::size_t pivot = rank;
    while (pivot < rows.size() && rows[pivot][c] == 0) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[pivot], rows[rank]);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == rank || rows[r][c] == 0) continue;
      BigRational f = rows[r][c] / rows[rank][c];
      for (std::size_t k = c; k < cols; ++k) rows[r][k] -= f * rows[rank][k];
    }
    ++rank;
  }
  return cols - rank;
}

bool is_rational_square(const BigRational& q) {
  if (q < 0) return false;
  auto perfect = [](const BigInt& v) {
    BigInt r = boost::multiprecision::sqrt(v);
    return r * r == v;
  };
  return perfect(numerator(q)) && perfect(denominator(q));
}

}  // namespace

CliffordResult even_clifford_by_structure(const std::vector<BigRational>& diagonal) {
  const int n = static_cast<int>(diagonal.size());
  if (n < 2 || n > 10) throw std::invalid_argument("oracle handles dimensions 2..10");
  std::vector<unsigned> basis;
  for (unsigned s = 0; s < (1u << n); ++s) {
    if (__builtin_popcount(s) % 2 == 0) basis.push_back(s);
  }
  const std::size_t dim = basis.size();
  std::map<unsigned, std::size_t> pos;
  for (std::size_t i = 0; i < dim; ++i) pos[basis[i]] = i;
  std::vector<std::vector<Term>> table(dim, std::vector<Term>(dim));
  for (std::size_t i = 0; i < dim; ++i) {
    for (std::size_t j = 0; j < dim; ++j) table[i][j] = multiply_words(basis[i], basis[j], diagonal);
  }

  // Centraliser of `elems` inside span(subset): unknown coefficients on subset.
  auto centraliser_dim = [&](const std::vector<std::size_t>& subset, const std::vector<std::size_t>& elems) {
    std::vector<std::vector<BigRational>> rows;
    for (std::size_t e : elems) {
      std::vector<std::vector<BigRational>> eq(dim, std::vector<BigRational>(subset.size(), 0));
      for (std::size_t c = 0; c < subset.size(); ++c) {
        const Term& left = table[subset[c]][e];
        const Term& right = table[e][subset[c]];
        eq[pos.at(left.mask)][c] += left.coef;
        eq[pos.at(right.mask)][c] -= right.coef;
      }
      for (auto& r : eq) {
        if (std::any_of(r.begin(), r.end(), [](const BigRational& v) { return v != 0; })) rows.push_back(r);
      }
    }
    return nullity(rows, subset.size());
  };

  std::vector<std::size_t> all(dim);
  for (std::size_t i = 0; i < dim; ++i) all[i] = i;
  CliffordResult out;
  out.center_dim = static_cast<int>(centraliser_dim(all, all));
  if (n % 2 == 0) {
    std::size_t top = pos.at((1u << n) - 1);
    const Term& zz = table[top][top];
    if (zz.mask != 0 || !is_rational_square(zz.coef)) throw std::domain_error("centre is not split");
  }

  // Peel off quaternion subalgebras generated by anticommuting monomials.
  std::vector<std::size_t> current = all;
  while (true) {
    std::optional<std::pair<std::size_t, std::size_t>> pair;
    for (std::size_t u : current) {
      for (std::size_t v : current) {
        if (table[u][v].mask == table[v][u].mask && table[u][v].coef == -table[v][u].coef && table[u][v].coef != 0) {
          pair = {u, v};
          break;
        }
      }
      if (pair) break;
    }
    if (!pair) break;
    auto [u, v] = *pair;
    const Term& uu = table[u][u];
    const Term& vv = table[v][v];
    if (uu.mask != 0 || vv.mask != 0) throw std::logic_error("monomial square is not scalar");
    out.cls = out.cls + quaternion_class(uu.coef, vv.coef);
    ++out.quaternion_factors;
    std::vector<std::size_t> next;
    for (std::size_t w : current) {
      bool cu = table[w][u].mask == table[u][w].mask && table[w][u].coef == table[u][w].coef;
      bool cv = table[w][v].mask == table[v][w].mask && table[w][v].coef == table[v][w].coef;
      if (cu && cv) next.push_back(w);
    }
    if (next.size() * 4 != current.size() || centraliser_dim(current, {u, v}) != next.size()) {
      throw std::logic_error("centraliser does not have the expected dimension");
    }
    current = std::move(next);
  }
  if (static_cast<int>(current.size()) != out.center_dim) throw std::logic_error("commutative remainder is not the centre");
  return out;
}

std::map<std::vector<BrauerClass>, int> relation_components(const ModelPtr& model, int k) {
  const std::vector<BrauerClass> elems = all_elements(model);
  auto coprime = [](const BrauerClass& a, const BrauerClass& b) { return gcd64(index(a), index(b)) == 1; };

  // Every multiset reachable from x by one application of
  // [A''] + [A+A'+A''] <-> [A+A''] + [A'+A''].
  auto neighbours = [&](const std::vector<BrauerClass>& x) {
    std::vector<std::vector<BrauerClass>> out;
    auto replace = [&](std::size_t i, std::size_t j, const BrauerClass& p, const BrauerClass& q) {
      std::vector<BrauerClass> y;
      for (std::size_t r = 0; r < x.size(); ++r) {
        if (r != i && r != j) y.push_back(x[r]);
      }
      y.push_back(p);
      y.push_back(q);
      std::sort(y.begin(), y.end());
      out.push_back(std::move(y));
    };
    for (std::size_t i = 0; i < x.size(); ++i) {
      for (std::size_t j = 0; j < x.size(); ++j) {
        if (i == j) continue;
        for (const BrauerClass& a : elems) {
          // x[i] = A'', x[j] = A + A' + A''.
          BrauerClass a2 = x[j] - x[i] - a;
          if (coprime(a, a2)) replace(i, j, a + x[i], a2 + x[i]);
          // x[i] = A + A'', x[j] = A' + A''.
          BrauerClass c = x[i] - a;
          BrauerClass b2 = x[j] - c;
          if (coprime(a, b2)) replace(i, j, c, a + b2 + c);
        }
      }
    }
    return out;
  };

  std::map<std::vector<BrauerClass>, int> component;
  std::function<void(std::vector<BrauerClass>&, std::size_t, std::size_t)> enumerate =
      [&](std::vector<BrauerClass>& cur, std::size_t start, std::size_t left) {
        if (left == 0) {
          component.emplace(cur, -1);
          return;
        }
        for (std::size_t i = start; i < elems.size(); ++i) {
          cur.push_back(elems[i]);
          enumerate(cur, i, left - 1);
          cur.pop_back();
        }
      };
  std::vector<BrauerClass> cur;
  enumerate(cur, 0, static_cast<std::size_t>(k));

  int next_id = 0;
  for (auto& [start, id] : component) {
    if (id >= 0) continue;
    id = next_id;
    std::deque<std::vector<BrauerClass>> queue{start};
    while (!queue.empty()) {
      auto x = std::move(queue.front());
      queue.pop_front();
      for (auto& y : neighbours(x)) {
        int& slot = component.at(y);
        if (slot < 0) {
          slot = next_id;
          queue.push_back(std::move(y));
        }
      }
    }
    ++next_id;
  }
  return component;
}

std::vector<std::int64_t> young_diagram_sizes(std::int64_t n, std::int64_t d) {
  std::vector<std::int64_t> sizes;
  std::vector<std::int64_t> rows;
  std::function<void(std::int64_t, std::int64_t)> build = [&](std::int64_t max_len, std::int64_t total) {
    if (static_cast<std::int64_t>(rows.size()) == d) {
      sizes.push_back(total);
      return;
    }
    for (std::int64_t len = 0; len <= max_len; ++len) {
      rows.push_back(len);
      build(len, total + len);
      rows.pop_back();
    }
  };
  build(n - d, 0);
  std::sort(sizes.begin(), sizes.end());
  return sizes;
}

}  // namespace tits::oracle
