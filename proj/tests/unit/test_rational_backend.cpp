#include "../oracles/oracles.hpp"

#include "tits/errors.hpp"
#include "tits/rational_backend.hpp"

#include <doctest.h>

#include <random>

using namespace tits;

namespace {

std::vector<std::int64_t> squarefree_corpus(std::int64_t bound) {
  std::vector<std::int64_t> out;
  for (std::int64_t v = 1; v <= bound; ++v) {
    bool sf = true;
    for (std::int64_t p = 2; p * p <= v; ++p) {
      if (v % (p * p) == 0) sf = false;
    }
    if (sf) {
      out.push_back(v);
      out.push_back(-v);
    }
  }
  return out;
}

std::set<Place> places_of(const RationalBrauerClass& c) {
  auto v = c.ramified_places();
  return {v.begin(), v.end()};
}

}  // namespace

TEST_SUITE("rational_backend") {
  TEST_CASE("hilbert symbol examples") {
    for (auto v : {Place::real(), Place::finite(2), Place::finite(3), Place::finite(5), Place::finite(7)}) {
      CHECK(hilbert_symbol(BigRational(1), BigRational(5), v) == 1);
    }
    CHECK(hilbert_symbol(BigRational(-1), BigRational(-1), Place::real()) == -1);
    CHECK(hilbert_symbol(BigRational(-1), BigRational(3), Place::finite(3)) == -1);
    CHECK(hilbert_symbol(BigRational(-1), BigRational(3), Place::finite(2)) == -1);
    CHECK_THROWS_AS(hilbert_symbol(BigRational(0), BigRational(3), Place::finite(2)), ArgumentError);
  }

  TEST_CASE("hilbert symbol examples against the search oracle") {
    CHECK(oracle::hilbert_by_search(-1, 3, 3) == -1);
    CHECK(oracle::hilbert_by_search(-1, 3, 2) == -1);
    CHECK(oracle::hilbert_by_search(1, 5, 5) == 1);
    CHECK(oracle::hilbert_by_search(-1, -1, 0) == -1);
  }

  TEST_CASE("closed forms agree with local solvability search") {
    // Kept smaller than the acceptance corpus so the unit run stays quick.
    auto corpus = squarefree_corpus(15);
    for (std::int64_t p : {0, 2, 3, 5, 7}) {
      Place v = p == 0 ? Place::real() : Place::finite(p);
      for (auto a : corpus) {
        for (auto b : corpus) {
          INFO("a=" << a << " b=" << b << " p=" << p);
          CHECK(hilbert_symbol(BigRational(a), BigRational(b), v) == oracle::hilbert_by_search(a, b, p));
        }
      }
    }
  }

  TEST_CASE("symbols depend on square classes only") {
    CHECK(hilbert_symbol(BigRational(-4), BigRational(12), Place::finite(3)) ==
          hilbert_symbol(BigRational(-1), BigRational(3), Place::finite(3)));
    CHECK(hilbert_symbol(BigRational(-1, 9), BigRational(3, 4), Place::finite(2)) ==
          hilbert_symbol(BigRational(-1), BigRational(3), Place::finite(2)));
    CHECK(SquareClass(BigRational(18, 5)) == SquareClass(BigRational(10)));
  }

  TEST_CASE("property: product formula, symmetry, Steinberg, bimultiplicativity") {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<int> num(-50, 50), den(1, 50);
    auto draw = [&] {
      int n = 0;
      while (n == 0) n = num(rng);
      return BigRational(n, den(rng));
    };
    for (int t = 0; t < 400; ++t) {
      BigRational a = draw(), b = draw(), c = draw();
      int prod = 1;
      for (const Place& v : relevant_places(SquareClass(a), SquareClass(b))) {
        int s = hilbert_symbol(a, b, v);
        prod *= s;
        CHECK(s == hilbert_symbol(b, a, v));
        CHECK(hilbert_symbol(a, -a, v) == 1);
        if (a != 1) CHECK(hilbert_symbol(a, 1 - a, v) == 1);
        CHECK(hilbert_symbol(a, b * c, v) == hilbert_symbol(a, b, v) * hilbert_symbol(a, c, v));
      }
      CHECK(prod == 1);
      CHECK(quaternion_class(a, b) + quaternion_class(a, c) == quaternion_class(a, b * c));
      auto q = quaternion_class(a, b);
      CHECK(q.order() <= 2);
      CHECK(q.ramified_places().size() % 2 == 0);
    }
  }

  TEST_CASE("quaternion class examples") {
    CHECK(quaternion_class(BigRational(1), BigRational(7)).is_trivial());
    CHECK(places_of(quaternion_class(BigRational(-1), BigRational(-1))) ==
          std::set<Place>{Place::real(), Place::finite(2)});
    for (std::int64_t p : {3, 7, 11, 19, 23, 31, 43}) {
      CHECK(places_of(quaternion_class(BigRational(-1), BigRational(p))) ==
            std::set<Place>{Place::finite(2), Place::finite(p)});
    }
    CHECK_THROWS_AS(quaternion_class(BigRational(0), BigRational(1)), ArgumentError);
  }

  TEST_CASE("distinct conic family") {
    CHECK(distinct_conic_family({}).empty());
    auto one = distinct_conic_family({3});
    REQUIRE(one.size() == 1);
    CHECK(places_of(one[0]) == std::set<Place>{Place::finite(2), Place::finite(3)});
    auto two = distinct_conic_family({3, 7});
    CHECK_FALSE(two[0] == two[1]);
    CHECK_THROWS_AS(distinct_conic_family({5}), ArgumentError);
    CHECK_THROWS_AS(distinct_conic_family({15}), ArgumentError);
  }
}
