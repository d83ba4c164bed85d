#include "doctest.h"

#include <numeric>

#include "qtw/circle.hpp"
#include "qtw/error.hpp"
#include "qtw/fin_ab_group.hpp"
#include "qtw/int_matrix.hpp"
#include "qtw/util.hpp"

using namespace qtw;

TEST_CASE("circle arithmetic basics") {
  CHECK(circle_pow(CircleValue::fraction(1, 2), 2).is_zero());
  CHECK(circle_mul(CircleValue::fraction(1, 3), CircleValue::fraction(1, 3)) ==
        CircleValue::fraction(2, 3));
  for (std::int64_t n : {2, 5, 97, 1000, 1000000})
    CHECK(circle_pow(CircleValue::fraction(1, n), n).is_zero());
  CHECK(CircleValue::fraction(-1, 3) == CircleValue::fraction(2, 3));
  CHECK(CircleValue::fraction(7, 14) == CircleValue::fraction(1, 2));
  CHECK(CircleValue::parse("3/4").str() == "3/4");
}

TEST_CASE("circle group laws and torsion property") {
  Rng rng(12345);
  for (int trial = 0; trial < 500; ++trial) {
    std::int64_t k = rng.range(1, 24);
    CircleValue a = CircleValue::fraction(rng.range(0, 100), k);
    CircleValue b = CircleValue::fraction(rng.range(0, 100), k);
    CircleValue c = CircleValue::fraction(rng.range(0, 100), k);
    CHECK((a + b) + c == a + (b + c));
    CHECK(a + b == b + a);
    CHECK((a + (-a)).is_zero());
    // n-fold sums of k-torsion values stay k-torsion.
    CircleValue s;
    std::int64_t folds = rng.range(1, 9);
    for (std::int64_t i = 0; i < folds; ++i) s += a;
    CHECK(k % s.den() == 0);
  }
}

TEST_CASE("smith normal form on spec examples") {
  SUBCASE("identity") {
    auto s = smith_normal_form(IntMatrix::identity(2));
    CHECK(s.d == IntMatrix::identity(2));
  }
  SUBCASE("already diagonal") {
    auto s = smith_normal_form(IntMatrix{{2, 0}, {0, 2}});
    CHECK(s.diagonal() == std::vector<std::int64_t>{2, 2});
  }
  SUBCASE("[[2,1],[0,2]] -> diag(1,4)") {
    // Oracle: gcd row/column reduction by hand.  The minimal entry 1 becomes
    // the first pivot; the remaining 2x2 block has determinant 4, so the
    // second invariant factor is 4.
    IntMatrix m{{2, 1}, {0, 2}};
    auto s = smith_normal_form(m);
    CHECK(s.diagonal() == std::vector<std::int64_t>{1, 4});
    CHECK(s.u * m * s.v == s.d);
    CHECK(s.u.is_unimodular());
    CHECK(s.v.is_unimodular());
  }
  SUBCASE("empty matrix") {
    auto s = smith_normal_form(IntMatrix(0, 0));
    CHECK(s.d.rows() == 0);
  }
}

TEST_CASE("smith normal form round trip on random matrices") {
  Rng rng(777);
  for (int trial = 0; trial < 60; ++trial) {
    std::size_t r = 1 + rng.below(8), c = 1 + rng.below(8);
    IntMatrix m(r, c);
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < c; ++j) m.at(i, j) = rng.range(-10000, 10000);
    auto s = smith_normal_form(m);
    CHECK(s.u * m * s.v == s.d);
    CHECK(s.u.is_unimodular());
    CHECK(s.v.is_unimodular());
    CHECK(s.u * s.u_inv == IntMatrix::identity(r));
    CHECK(s.v * s.v_inv == IntMatrix::identity(c));
    auto diag = s.diagonal();
    for (std::size_t i = 0; i + 1 < diag.size(); ++i)
      if (diag[i] != 0) CHECK(diag[i + 1] % diag[i] == 0);
  }
}

TEST_CASE("quotient groups") {
  SUBCASE("Z/n") {
    auto g = FinAbGroup::quotient(1, IntMatrix{{5}});
    CHECK(g.factors() == std::vector<std::int64_t>{5});
  }
  SUBCASE("diag(2,2)") {
    auto g = FinAbGroup::quotient(2, IntMatrix{{2, 0}, {0, 2}});
    CHECK(g.factors() == std::vector<std::int64_t>{2, 2});
  }
  SUBCASE("[[2,1],[0,2]] -> Z/4") {
    auto g = FinAbGroup::quotient(2, IntMatrix{{2, 1}, {0, 2}});
    CHECK(g.factors() == std::vector<std::int64_t>{4});
    CHECK(g.order() == 4);
  }
  SUBCASE("infinite quotient rejected") {
    CHECK_THROWS_AS(FinAbGroup::quotient(2, IntMatrix{{2}, {0}}), InfiniteQuotientError);
  }
  SUBCASE("order equals |det|") {
    Rng rng(42);
    for (int t = 0; t < 40; ++t) {
      std::size_t n = 1 + rng.below(4);
      IntMatrix m(n, n);
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) m.at(i, j) = rng.range(-6, 6);
      BigInt det = m.determinant();
      if (det == 0) continue;
      auto g = FinAbGroup::quotient(static_cast<std::int64_t>(n), m);
      CHECK(g.order() == (det < 0 ? BigInt(-det) : det));
    }
  }
  SUBCASE("projection and lift compose to identity") {
    auto g = FinAbGroup::quotient(2, IntMatrix{{2, 1}, {0, 2}});
    for (auto& e : g.elements()) {
      auto x = g.lift(e);
      CHECK(g.project(x) == e);
    }
  }
}

TEST_CASE("tensor, Tor and exterior powers") {
  auto z2 = FinAbGroup::from_factors({2});
  auto z3 = FinAbGroup::from_factors({3});
  auto z4 = FinAbGroup::from_factors({4});
  auto z6 = FinAbGroup::from_factors({6});
  CHECK(tensor_product(z2, z3).group.is_trivial());
  CHECK(tensor_product(z4, z6).group.factors() == std::vector<std::int64_t>{2});
  CHECK(tensor_product(z4, FinAbGroup::trivial()).group.is_trivial());
  for (std::int64_t n : {2, 3, 5, 8})
    CHECK(tor_group(FinAbGroup::from_factors({n}), FinAbGroup::from_factors({n})).group.factors() ==
          std::vector<std::int64_t>{n});
  CHECK(tor_group(z2, z3).group.is_trivial());
  auto g24 = FinAbGroup::from_factors({2, 4});
  auto t = tor_group(g24, z4);
  CHECK(t.group.invariant_factors() == std::vector<std::int64_t>{2, 4});

  // Exhaustive agreement of tensor and Tor invariant factors.
  std::vector<std::vector<std::int64_t>> groups;
  for (std::int64_t a = 2; a <= 12; ++a) {
    groups.push_back({a});
    for (std::int64_t b = a; b <= 12; ++b) {
      groups.push_back({a, b});
      for (std::int64_t c = b; c <= 12; ++c) groups.push_back({a, b, c});
    }
  }
  for (const auto& fa : groups)
    for (const auto& fb : groups) {
      auto ga = FinAbGroup::from_factors(fa);
      auto gb = FinAbGroup::from_factors(fb);
      CHECK(tensor_product(ga, gb).group.invariant_factors() ==
            tor_group(ga, gb).group.invariant_factors());
    }

  SUBCASE("exterior power closed forms") {
    CHECK(exterior_power(FinAbGroup::from_factors({7}), 3).group.is_trivial());
    CHECK(exterior_power(g24, 2).group.factors() == std::vector<std::int64_t>{2});
    CHECK(exterior_power(FinAbGroup::from_factors({2, 2, 2}), 3).group.factors() ==
          std::vector<std::int64_t>{2});
    CHECK_THROWS_AS(exterior_power(g24, 4), UnsupportedDegreeError);
    // Exhaustive gcd-list check, <= 4 factors each <= 8.
    std::vector<std::vector<std::int64_t>> gs;
    for (std::int64_t a = 2; a <= 8; ++a)
      for (std::int64_t b = a; b <= 8; ++b)
        for (std::int64_t c = b; c <= 8; ++c)
          for (std::int64_t d = c; d <= 8; ++d) gs.push_back({a, b, c, d});
    for (const auto& fs : gs) {
      auto g = FinAbGroup::from_factors(fs);
      std::vector<std::int64_t> w2, w3;
      for (std::size_t i = 0; i < fs.size(); ++i)
        for (std::size_t j = i + 1; j < fs.size(); ++j) {
          if (std::int64_t d2 = std::gcd(fs[i], fs[j]); d2 > 1) w2.push_back(d2);
          for (std::size_t k = j + 1; k < fs.size(); ++k)
            if (std::int64_t d3 = std::gcd(std::gcd(fs[i], fs[j]), fs[k]); d3 > 1) w3.push_back(d3);
        }
      CHECK(exterior_power(g, 2).group.factors() == w2);
      CHECK(exterior_power(g, 3).group.factors() == w3);
    }
  }
}

TEST_CASE("tor kernel embedding") {
  SUBCASE("needs a presentation") {
    // from_factors attaches the canonical one, so strip via a copy without:
    // quotient groups always carry one; the error path is exercised through
    // the default-constructed trivial group.
    CHECK_THROWS_AS(tor_group(FinAbGroup(), FinAbGroup::from_factors({2}), true),
                    NoPresentationError);
  }
  SUBCASE("Z/n presented as Z/nZ") {
    auto g = FinAbGroup::from_factors({4});
    auto t = tor_group(g, g, true);
    REQUIRE(t.kernel_generators.size() == 1);
    // ker(4Z (x) Z/4 -> Z (x) Z/4) is generated by 4e (x) u with 4 | 4:
    // the torsion generator is (4/ gcd(4,4)) u = u.
    CHECK(t.kernel_generators[0][0] == g.generator(0));
  }
}

TEST_CASE("group element basics and enumeration") {
  auto g = FinAbGroup::from_factors({2, 2});
  CHECK(g.elements().size() == 4);
  CHECK(FinAbGroup::trivial().elements().size() == 1);
  auto z3 = FinAbGroup::from_factors({3});
  std::vector<std::int64_t> seen;
  for (auto& e : z3.elements()) seen.push_back(e.c[0]);
  CHECK(seen == std::vector<std::int64_t>{0, 1, 2});
  // 1-factors normalized away, user order preserved otherwise
  auto h = FinAbGroup::from_factors({1, 4, 1, 2});
  CHECK(h.factors() == std::vector<std::int64_t>{4, 2});
  CHECK(h.invariant_factors() == std::vector<std::int64_t>{2, 4});
  CHECK(h.element_order(h.make({1, 1})) == 4);
  CHECK(h.pairing(h.make({1, 0}), h.make({1, 0})) == CircleValue::fraction(1, 4));
}

TEST_CASE("AbHom well-definedness") {
  auto z4 = FinAbGroup::from_factors({4});
  auto z2 = FinAbGroup::from_factors({2});
  AbHom red(z4, z2, IntMatrix{{1}});
  CHECK(red.apply(z4.make({3})) == z2.make({1}));
  CHECK_THROWS(AbHom(z2, z4, IntMatrix{{1}}));  // 2*1 != 0 in Z/4
}
