#include "../oracles/oracles.hpp"
#include "helpers.hpp"

#include "tits/errors.hpp"
#include "tits/grothendieck_ring.hpp"

#include <random>

using namespace tits;
using tits::test::cls;
using tits::test::sum_of;

namespace {

RBElement gen(const ModelPtr& m, std::initializer_list<std::int64_t> r) { return RBElement::generator(cls(m, r)); }

RawCombination random_raw(const ModelPtr& m, std::mt19937_64& rng) {
  auto elems = all_elements(m);
  std::uniform_int_distribution<std::size_t> pick(0, elems.size() - 1);
  std::uniform_int_distribution<int> coef(-3, 3), terms(0, 5);
  RawCombination raw;
  for (int i = terms(rng); i > 0; --i) raw[elems[pick(rng)]] += coef(rng);
  return raw;
}

}  // namespace

TEST_SUITE("grothendieck_ring") {
  TEST_CASE("normalize examples") {
    auto z6 = BrauerGroupModel::abstract({6});
    CHECK(gen(z6, {0}).terms() == RawCombination{{cls(z6, {0}), 1}});
    CHECK(gen(z6, {5}).terms() == RawCombination{{cls(z6, {3}), 1}, {cls(z6, {2}), 1}, {cls(z6, {0}), -1}});
    auto e8 = BrauerGroupModel::abstract({2, 2, 2});
    for (const auto& c : all_elements(e8)) CHECK(RBElement::generator(c).terms() == RawCombination{{c, 1}});
    CHECK_THROWS_AS(normalize(z6, {{cls(e8, {1, 0, 0}), 1}}), ArgumentError);
  }

  TEST_CASE("ring operation examples") {
    auto z6 = BrauerGroupModel::abstract({6});
    RBElement zero(z6);
    auto x = gen(z6, {1}) + gen(z6, {4}).scaled(2);
    CHECK(x + zero == x);
    CHECK(x * gen(z6, {0}) == x);
    CHECK(gen(z6, {3}) * gen(z6, {2}) == gen(z6, {5}));
    CHECK((gen(z6, {3}) * gen(z6, {2})).terms() ==
          RawCombination{{cls(z6, {3}), 1}, {cls(z6, {2}), 1}, {cls(z6, {0}), -1}});
    auto ab = gen(z6, {3}) + gen(z6, {4});
    CHECK(ab * gen(z6, {0}) == ab);
    CHECK((x - x).is_zero());
  }

  TEST_CASE("augmentation examples") {
    auto z6 = BrauerGroupModel::abstract({6});
    CHECK(augmentation(RBElement(z6)) == 0);
    CHECK(augmentation(gen(z6, {3}) + gen(z6, {2}) - gen(z6, {0})) == 1);
  }

  TEST_CASE("equality examples") {
    auto z6 = BrauerGroupModel::abstract({6});
    auto x = gen(z6, {1}) + gen(z6, {2});
    CHECK(equal(x, x));
    CHECK(equal(gen(z6, {0}) + gen(z6, {5}), gen(z6, {3}) + gen(z6, {2})));
    auto v4 = BrauerGroupModel::abstract({2, 2});
    CHECK_FALSE(equal(gen(v4, {1, 0}), gen(v4, {0, 1})));
  }

  TEST_CASE("property: idempotent, homomorphic, augmentation preserving") {
    std::mt19937_64 rng(17);
    for (auto orders : {std::vector<std::int64_t>{30}, {2, 6}, {210}}) {
      auto m = BrauerGroupModel::abstract(orders);
      for (int t = 0; t < 200; ++t) {
        auto r1 = random_raw(m, rng), r2 = random_raw(m, rng);
        auto n1 = normalize(m, r1), n2 = normalize(m, r2);
        CHECK(is_normal_form(n1.terms()));
        CHECK(normalize(m, n1.terms()) == n1);
        CHECK(augmentation(n1) == augmentation(r1));
        RawCombination sum = r1;
        for (const auto& [c, k] : r2) sum[c] += k;
        CHECK(normalize(m, sum) == n1 + n2);
        RawCombination conv;
        for (const auto& [a, i] : r1)
          for (const auto& [b, j] : r2) conv[a + b] += i * j;
        CHECK(normalize(m, conv) == n1 * n2);
        CHECK(n1 * n2 == n2 * n1);
        CHECK(augmentation(n1 * n2) == augmentation(n1) * augmentation(n2));
      }
    }
  }

  TEST_CASE("normal-form equality matches isomorphism on effective sums") {
    std::mt19937_64 rng(19);
    auto m = BrauerGroupModel::abstract({12});
    auto elems = all_elements(m);
    std::uniform_int_distribution<std::size_t> pick(0, elems.size() - 1);
    for (int t = 0; t < 2000; ++t) {
      MotiveSum x(m), y(m);
      for (int i = 0; i < 3; ++i) x.add(elems[pick(rng)]);
      for (int i = 0; i < 3; ++i) y.add(elems[pick(rng)]);
      CHECK(equal(from_motive(x), from_motive(y)) == is_isomorphic(x, y));
    }
  }

  TEST_CASE("completeness against the closure oracle") {
    for (auto orders : {std::vector<std::int64_t>{6}, {12}, {2, 6}, {36}}) {
      auto m = BrauerGroupModel::abstract(orders);
      for (int k = 1; k <= (m->cardinality() <= 12 ? 4 : 3); ++k) {
        auto comps = oracle::relation_components(m, k);
        std::map<int, RBElement> seen;
        std::map<std::vector<std::pair<BrauerClass, std::int64_t>>, int> by_form;
        for (const auto& [sum, comp] : comps) {
          MotiveSum x(m, sum);
          RBElement nf = from_motive(x);
          std::vector<std::pair<BrauerClass, std::int64_t>> key(nf.terms().begin(), nf.terms().end());
          auto [it, fresh] = by_form.emplace(key, comp);
          CHECK(it->second == comp);
          auto [jt, jfresh] = seen.emplace(comp, nf);
          CHECK(jt->second == nf);
        }
      }
    }
  }
}
