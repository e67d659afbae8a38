#include "../oracles/oracles.hpp"
#include "helpers.hpp"

#include "tits/errors.hpp"
#include "tits/grothendieck_ring.hpp"
#include "tits/quadratic_forms.hpp"
#include "tits/varieties.hpp"

#include <random>

using namespace tits;
using tits::test::cls;

namespace {

using VD = VarietyDescriptor;

VD sb(const BrauerClass& c, std::int64_t deg) { return VD::severi_brauer(CSAlgebra(c, deg)); }

VD quad(const BrauerClass& c, std::int64_t n, bool i3 = false) { return VD::quadric(FormShadow(n, c, i3)); }

bool has_rule(const DeductionReport& r, const std::string& rule, const std::string& prefix) {
  for (const auto& d : r.deductions) {
    if (d.rule == rule && d.conclusion.rfind(prefix, 0) == 0) return true;
  }
  return false;
}

bool has_contradiction(const DeductionReport& r) {
  for (const auto& d : r.deductions) {
    if (d.conclusion.rfind("contradiction", 0) == 0) return true;
  }
  return false;
}

// Random descriptor over Z/2 x Z/12 drawn from all families.
VD random_descriptor(const ModelPtr& m, std::mt19937_64& rng, int depth) {
  auto elems = all_elements(m);
  std::uniform_int_distribution<std::size_t> pick(0, elems.size() - 1);
  std::uniform_int_distribution<int> family(0, depth > 0 ? 4 : 3);
  auto any = [&] { return elems[pick(rng)]; };
  auto two_torsion = [&] {
    while (true) {
      auto c = any();
      if (order(c) <= 2) return c;
    }
  };
  switch (family(rng)) {
    case 0: {
      auto c = any();
      std::int64_t deg = order(c) * std::uniform_int_distribution<std::int64_t>(1, 3)(rng);
      if (deg < 2) deg = 2;
      return sb(c, deg);
    }
    case 1: {
      auto c = any();
      std::int64_t deg = std::max<std::int64_t>(2, order(c) * std::uniform_int_distribution<std::int64_t>(1, 2)(rng));
      std::int64_t d = std::uniform_int_distribution<std::int64_t>(1, deg - 1)(rng);
      return VD::grassmannian(d, CSAlgebra(c, deg));
    }
    case 2:
      return quad(two_torsion(), std::uniform_int_distribution<std::int64_t>(3, 9)(rng));
    case 3: {
      // deg = 0 mod 4 pattern inside the 2-torsion subgroup.
      auto cp = two_torsion(), cm = two_torsion();
      return VD::involution(8, cp + cm, cp, cm, false);
    }
    default: {
      std::vector<VD> kids;
      for (int i = std::uniform_int_distribution<int>(1, 3)(rng); i > 0; --i) {
        kids.push_back(random_descriptor(m, rng, depth - 1));
      }
      return VD::product(std::move(kids));
    }
  }
}

}  // namespace

TEST_SUITE("varieties") {
  TEST_CASE("severi-brauer measure over Q") {
    auto q = BrauerGroupModel::rational();
    BrauerClass a(q, quaternion_class(BigRational(-1), BigRational(3)));
    auto rep = tits_measure(sb(a, 2));
    CHECK(rep.rho == 2);
    CHECK(rep.dim == 1);
    CHECK(rep.jt_effective == MotiveSum(q, {BrauerClass::identity(q), a}));
    CHECK(augmentation(rep.jt) == 2);
  }

  TEST_CASE("descriptor validation") {
    auto z6 = BrauerGroupModel::abstract({6});
    CHECK_THROWS_AS(VD::severi_brauer(CSAlgebra(cls(z6, {0}), 1)), DescriptorError);
    CHECK_THROWS_AS(VD::grassmannian(0, CSAlgebra(cls(z6, {1}), 6)), DescriptorError);
    CHECK_THROWS_AS(VD::grassmannian(6, CSAlgebra(cls(z6, {1}), 6)), DescriptorError);
    auto z4 = BrauerGroupModel::abstract({4});
    CHECK_NOTHROW(VD::involution(6, cls(z4, {2}), cls(z4, {1}), cls(z4, {3}), false));
    CHECK_THROWS_AS(VD::involution(6, cls(z4, {2}), cls(z4, {1}), cls(z4, {1}), false), DescriptorError);
    CHECK_THROWS_AS(VD::involution(4, cls(z4, {2}), cls(z4, {1}), cls(z4, {3}), false), DescriptorError);
    auto v4 = BrauerGroupModel::abstract({2, 2});
    CHECK_NOTHROW(VD::involution(8, cls(v4, {1, 1}), cls(v4, {1, 0}), cls(v4, {0, 1}), false));
    CHECK_THROWS_AS(VD::involution(8, cls(v4, {1, 0}), cls(v4, {1, 0}), cls(v4, {0, 1}), false), DescriptorError);
    CHECK_THROWS_AS(VD::product({}), DescriptorError);
    CHECK_THROWS_AS(VD::product({sb(cls(z6, {1}), 6), sb(cls(v4, {1, 0}), 2)}), DescriptorError);
    auto q = BrauerGroupModel::rational();
    CHECK_THROWS_AS(VD::quadric(QuadraticForm({1, 1, 1, 2}), q), DescriptorError);
    CHECK_THROWS_AS(VD::quadric(QuadraticForm({1, 1}), q), DescriptorError);
  }

  TEST_CASE("grassmannian example and Young diagram oracle") {
    auto z4 = BrauerGroupModel::abstract({4});
    auto rep = tits_measure(VD::grassmannian(2, CSAlgebra(cls(z4, {1}), 4)));
    CHECK(rep.rho == 6);
    CHECK(rep.dim == 4);
    MotiveSum expected(z4);
    for (std::int64_t s : {0, 1, 2, 2, 3, 4}) expected.add(cls(z4, {s}));
    CHECK(rep.jt_effective == expected);
    CHECK(oracle::young_diagram_sizes(4, 2) == std::vector<std::int64_t>{0, 1, 2, 2, 3, 4});
  }

  TEST_CASE("family tables against direct cardinalities, degrees up to 12") {
    for (std::int64_t deg = 2; deg <= 12; ++deg) {
      auto m = BrauerGroupModel::abstract({deg});
      auto a = cls(m, {1});
      CHECK(rank_measure(sb(a, deg)) == deg);
      CHECK(tits_measure(sb(a, deg)).jt_effective.cardinality() == deg);
      for (std::int64_t d = 1; d < deg; ++d) {
        auto v = VD::grassmannian(d, CSAlgebra(a, deg));
        auto rep = tits_measure(v);
        CHECK(rank_measure(v) == static_cast<std::int64_t>(binomial(deg, d)));
        CHECK(rep.rho == static_cast<std::int64_t>(binomial(deg, d)));
        MotiveSum expected(m);
        for (auto s : oracle::young_diagram_sizes(deg, d)) expected.add(a.times(s));
        CHECK(rep.jt_effective == expected);
        CHECK(rep.dim == d * (deg - d));
      }
    }
    auto v4 = BrauerGroupModel::abstract({2, 2});
    for (std::int64_t n = 3; n <= 12; ++n) {
      auto v = quad(cls(v4, {1, 0}), n);
      CHECK(rank_measure(v) == (n % 2 == 0 ? n : n - 1));
      CHECK(tits_measure(v).jt_effective.cardinality() == rank_measure(v));
      CHECK(dimension(v) == n - 2);
    }
    for (std::int64_t deg = 6; deg <= 12; deg += 2) {
      VD v = deg % 4 == 0 ? VD::involution(deg, cls(v4, {1, 1}), cls(v4, {1, 0}), cls(v4, {0, 1}), false)
                          : VD::involution(deg, BrauerClass::identity(v4), cls(v4, {1, 0}), cls(v4, {1, 0}), false);
      CHECK(rank_measure(v) == deg);
      CHECK(tits_measure(v).jt_effective.cardinality() == deg);
      CHECK(dimension(v) == deg);
    }
  }

  TEST_CASE("quadric and involution tables") {
    auto v4 = BrauerGroupModel::abstract({2, 2});
    auto c = cls(v4, {0, 1});
    auto six = tits_measure(quad(c, 6));
    MotiveSum expected(v4);
    expected.add(BrauerClass::identity(v4), 4);
    expected.add(c, 2);
    CHECK(six.jt_effective == expected);
    CHECK(six.rho == 6);
    CHECK(rank_measure(quad(c, 7)) == 6);
    auto z4 = BrauerGroupModel::abstract({4});
    auto iv = tits_measure(VD::involution(6, cls(z4, {2}), cls(z4, {1}), cls(z4, {3}), false));
    MotiveSum iv_expected(z4);
    iv_expected.add(cls(z4, {0}), 2);
    iv_expected.add(cls(z4, {2}), 2);
    iv_expected.add(cls(z4, {1}));
    iv_expected.add(cls(z4, {3}));
    CHECK(iv.jt_effective == iv_expected);
    auto q = BrauerGroupModel::rational();
    auto concrete = VD::quadric(QuadraticForm({1, 1, -1, -1, -1, 1}), q);
    CHECK(tits_measure(concrete).jt_effective.multiplicity(BrauerClass::identity(q)) == 6);
  }

  TEST_CASE("products: multiplicativity and the subset decomposition") {
    auto v4 = BrauerGroupModel::abstract({2, 2});
    auto prod = VD::product({quad(cls(v4, {1, 0}), 6), quad(cls(v4, {0, 1}), 6)});
    CHECK(rank_measure(prod) == 36);
    CHECK(dimension(prod) == 8);
    for (std::int64_t n : {5, 6, 7, 8}) {
      auto e8 = BrauerGroupModel::abstract({2, 2, 2});
      auto elems = all_elements(e8);
      std::mt19937_64 rng(static_cast<std::uint64_t>(n));
      std::uniform_int_distribution<std::size_t> pick(0, elems.size() - 1);
      for (int m = 1; m <= 4; ++m) {
        for (int t = 0; t < 10; ++t) {
          std::vector<BrauerClass> cs;
          std::vector<VD> kids;
          for (int j = 0; j < m; ++j) {
            cs.push_back(elems[pick(rng)]);
            kids.push_back(quad(cs.back(), n));
          }
          auto rep = tits_measure(VD::product(kids));
          MotiveSum by_tensor(e8, {BrauerClass::identity(e8)});
          for (const auto& k : kids) by_tensor = tensor(by_tensor, tits_measure(k).jt_effective);
          CHECK(rep.jt_effective == by_tensor);
          MotiveSum by_subsets(e8);
          for (unsigned s = 0; s < (1u << m); ++s) {
            auto c = BrauerClass::identity(e8);
            std::int64_t w = 1;
            for (int j = 0; j < m; ++j) {
              if (s >> j & 1u) {
                c = c + cs[j];
                w *= n % 2 == 0 ? 2 : 1;
              } else {
                w *= n - 2;
              }
            }
            by_subsets.add(c, w);
          }
          CHECK(rep.jt_effective == by_subsets);
        }
      }
    }
  }

  TEST_CASE("property: augmentation of the Tits measure is the rank measure") {
    std::mt19937_64 rng(23);
    auto m = BrauerGroupModel::abstract({2, 12});
    for (int t = 0; t < 300; ++t) {
      auto v = random_descriptor(m, rng, 2);
      auto rep = tits_measure(v);
      CHECK(augmentation(rep.jt) == rep.rho);
      CHECK(rep.rho == rank_measure(v));
      CHECK(rep.rho == rep.jt_effective.cardinality());
      CHECK(rep.jt == from_motive(rep.jt_effective));
    }
  }

  TEST_CASE("compare examples") {
    auto z6 = BrauerGroupModel::abstract({6});
    auto x = sb(cls(z6, {3}), 2);
    auto verdict = compare(x, x);
    CHECK(verdict.measures_equal);
    CHECK(verdict.normal_forms_equal);
    CHECK(verdict.rho_equal);
    CHECK(verdict.dims_equal);
    CHECK(verdict.subgroups_equal);
    auto y = sb(cls(z6, {2}), 3);
    auto v2 = compare(x, y);
    CHECK_FALSE(v2.measures_equal);
    CHECK_FALSE(v2.rho_equal);
    auto v4 = BrauerGroupModel::abstract({2, 2});
    CHECK(compare(quad(cls(v4, {1, 0}), 6), quad(cls(v4, {1, 0}), 6)).measures_equal);
    CHECK_FALSE(compare(quad(cls(v4, {1, 0}), 6), quad(cls(v4, {0, 1}), 6)).measures_equal);
  }

  TEST_CASE("conic distinctness over Q") {
    auto q = BrauerGroupModel::rational();
    auto family = distinct_conic_family({3, 7, 11, 19, 23});
    for (std::size_t i = 0; i < family.size(); ++i) {
      for (std::size_t j = 0; j < family.size(); ++j) {
        auto v = compare(sb(BrauerClass(q, family[i]), 2), sb(BrauerClass(q, family[j]), 2));
        CHECK(v.measures_equal == (i == j));
      }
    }
  }

  TEST_CASE("deduce: Severi-Brauer varieties") {
    auto z2 = BrauerGroupModel::abstract({2});
    auto r = deduce(sb(cls(z2, {1}), 4), sb(cls(z2, {1}), 4), true);
    CHECK(r.shape == "grassmannian");
    CHECK(has_rule(r, "two-torsion-rigidity", "A ~= A'"));
    CHECK_FALSE(has_contradiction(r));
    auto z3 = BrauerGroupModel::abstract({3});
    auto birational = deduce(sb(cls(z3, {1}), 3), sb(cls(z3, {1}), 3), false);
    CHECK(has_rule(birational, "small-period-birational", "annotation"));
    // {0, a, 2a} and {0, 2a, a} coincide, so A and its opposite are not separated.
    CHECK(deduce(sb(cls(z3, {1}), 3), sb(cls(z3, {2}), 3), false).measures_equal);
    auto differ = deduce(sb(cls(z3, {1}), 3), sb(cls(z3, {0}), 3), false);
    CHECK(has_rule(differ, "measure-separates", "[X] != [Y]"));
    auto forced = deduce(sb(cls(z3, {1}), 3), sb(cls(z3, {0}), 3), true);
    CHECK(has_contradiction(forced));
  }

  TEST_CASE("deduce: conic products") {
    auto v4 = BrauerGroupModel::abstract({2, 2});
    auto unlinked = v4->with_index_oracle({{Coords(Residues{1, 1}), 4}});
    auto a = cls(unlinked, {1, 0}), b = cls(unlinked, {0, 1});
    auto x = VD::product({sb(a, 2), sb(b, 2)});
    auto y = VD::product({sb(b, 2), sb(a, 2)});
    auto r = deduce(x, y, true);
    CHECK(r.shape == "conic-product");
    CHECK(has_rule(r, "conic-products-unlinked", "C x C'"));
    CHECK_FALSE(has_contradiction(r));
    auto linked = deduce(VD::product({sb(cls(v4, {1, 0}), 2), sb(cls(v4, {0, 1}), 2)}),
                         VD::product({sb(cls(v4, {0, 1}), 2), sb(cls(v4, {1, 0}), 2)}), true);
    CHECK(has_rule(linked, "conic-products-unlinked", "no isomorphism conclusion"));
  }

  TEST_CASE("deduce: quadrics and their products") {
    auto v4 = BrauerGroupModel::abstract({2, 2});
    auto c = cls(v4, {1, 0});
    auto r = deduce(quad(c, 6), quad(c, 6), true);
    CHECK(has_rule(r, "quadric-dim6", "Q_q ~= Q_q'"));
    auto no_rule = deduce(quad(c, 7), quad(c, 7), true);
    CHECK(has_rule(no_rule, "quadric-classification", "no isomorphism conclusion"));
    CHECK(has_rule(deduce(quad(c, 7, true), quad(c, 7, true), true), "quadric-i3", "Q_q ~= Q_q'"));

    auto e8 = BrauerGroupModel::abstract({2, 2, 2});
    auto family = [&](std::int64_t n, bool i3, int m) {
      auto elems = all_elements(e8);
      std::vector<VD> kids;
      for (int j = 0; j < m; ++j) kids.push_back(quad(elems[(j * 3 + 1) % 8], n, i3));
      return VD::product(kids);
    };
    auto p6 = deduce(family(6, false, 4), family(6, false, 4), true);
    CHECK(p6.shape == "quadric-product");
    CHECK(has_rule(p6, "quadric-products-dim6", "the products are isomorphic"));
    auto holds = deduce(family(6, true, 6), family(6, true, 6), true);
    CHECK(has_rule(holds, "quadric-products-extra-condition", "the products are isomorphic"));
    auto fails = deduce(family(5, true, 6), family(5, true, 6), true);
    CHECK(has_rule(fails, "quadric-products-extra-condition", "no conclusion; the extra sum condition fails at l = 3"));
    auto small = deduce(family(4, true, 2), family(4, true, 2), true);
    CHECK(has_rule(small, "tensor-cancellation", "no isomorphism conclusion"));
    CHECK_THROWS_AS(deduce(quad(c, 6), sb(c, 2), true), DomainError);
  }

  TEST_CASE("deduce: involution varieties") {
    auto z4 = BrauerGroupModel::abstract({4});
    auto x = VD::involution(6, cls(z4, {2}), cls(z4, {1}), cls(z4, {3}), false);
    auto y = VD::involution(6, cls(z4, {2}), cls(z4, {3}), cls(z4, {1}), false);
    auto r = deduce(x, y, true);
    CHECK(r.shape == "involution");
    CHECK(has_rule(r, "involution-deg6", "Iv(A) ~= Iv(A')"));
    CHECK_FALSE(has_contradiction(r));
  }
}
