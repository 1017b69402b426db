#include <optional>
#include <vector>

#include "doctest.h"
#include "mopoly/error.hpp"
#include "mopoly/multi_index.hpp"
#include "mopoly/numbers.hpp"
#include "mopoly/poly.hpp"
#include "mopoly/rational.hpp"
#include "mopoly/roots.hpp"

using namespace mopoly;

namespace {

// Ascending coefficient order: make_poly({c0, c1, c2}) = c2 x^2 + c1 x + c0.
Poly make_poly(std::vector<Rational> c) { return Poly(std::move(c)); }

}  // namespace

TEST_CASE("rational construction and parsing") {
  CHECK(make_rational(2, -4) == Rational(-1, 2));
  CHECK(make_rational(6, 3) == 2);
  CHECK_THROWS_AS(make_rational(1, 0), ContractError);

  CHECK(parse_rational("3/4") == Rational(3, 4));
  CHECK(parse_rational("-7") == Rational(-7));
  CHECK(parse_rational("2/4") == Rational(1, 2));
  CHECK(parse_rational("-3/6") == Rational(-1, 2));
  CHECK_FALSE(parse_rational("5/0").has_value());
  CHECK_FALSE(parse_rational("1.5").has_value());
  CHECK_FALSE(parse_rational("").has_value());
  CHECK_FALSE(parse_rational("1/").has_value());
  CHECK_FALSE(parse_rational("a/b").has_value());

  CHECK(to_string(Rational(-1, 2)) == "-1/2");
  CHECK(to_string(Rational(5)) == "5");
}

TEST_CASE("decimal approximation stays within the width") {
  CHECK(decimal_approx(Rational(1, 3), Rational(1, 1000)) == "0.333");
  CHECK(decimal_approx(Rational(-3, 4), Rational(1, 100)) == "-0.75");
  CHECK(decimal_approx(Rational(2), Rational(1, 10)) == "2.0");
  CHECK(decimal_approx(Rational(7), Rational(1)) == "7");
  // 2/3 at width 1/100 rounds up.
  CHECK(decimal_approx(Rational(2, 3), Rational(1, 100)) == "0.67");
}

TEST_CASE("poly basics") {
  Poly z;
  CHECK(z.is_zero());
  CHECK(z.degree() == -1);
  CHECK(z.coeff(3) == 0);
  CHECK_THROWS_AS(z.leading(), ContractError);

  Poly p = make_poly({Rational(-3, 4), 0, 1});  // x^2 - 3/4
  CHECK(p.degree() == 2);
  CHECK(p.is_monic());
  CHECK(p.coeff(0) == Rational(-3, 4));
  CHECK(p.coeff(1) == 0);
  CHECK(p.leading() == 1);
  CHECK(p(Rational(1, 2)) == Rational(-1, 2));
  CHECK(p(Rational(2)) == Rational(13, 4));

  // Trailing zero coefficients trim away.
  Poly q = make_poly({1, 1, 0, 0});
  CHECK(q.degree() == 1);

  Poly x = Poly::x();
  Poly prod = (x - Poly::constant(1)) * (x - Poly::constant(2));
  CHECK(prod == make_poly({2, -3, 1}));
  CHECK((-prod).coeff(2) == -1);
  CHECK(prod.times_x() == make_poly({0, 2, -3, 1}));
  CHECK(Poly::monomial(3, 1).derivative() == make_poly({0, 0, 3}));

  Poly diff = prod - prod;
  CHECK(diff.is_zero());

  CHECK(to_string(p) == "x^2 - 3/4");
  CHECK(to_string(make_poly({0, 0, Rational(3, 8)})) == "3/8*x^2");
  CHECK(to_string(z) == "0");
  CHECK(to_string(make_poly({-1, 0, 0, 1})) == "x^3 - 1");
}

TEST_CASE("division gcd squarefree") {
  Poly p = make_poly({Rational(-3, 4), 0, 1});
  Poly d = make_poly({Rational(-1, 2), 1});
  DivRem dr = divrem(p, d);
  CHECK(dr.quot == make_poly({Rational(1, 2), 1}));
  CHECK(dr.rem == Poly::constant(Rational(-1, 2)));
  CHECK(dr.quot * d + dr.rem == p);
  CHECK_THROWS_AS(divrem(p, Poly()), ContractError);

  Poly x = Poly::x();
  Poly f = (x - Poly::constant(1)) * (x - Poly::constant(2));
  Poly g = (x - Poly::constant(2)) * (x - Poly::constant(3));
  CHECK(gcd(f, g) == x - Poly::constant(2));
  CHECK(gcd(f, Poly()) == f);
  // gcd is monic regardless of input scaling.
  CHECK(gcd(f * Rational(3), g * Rational(-5, 7)) == x - Poly::constant(2));

  Poly sq = (x - Poly::constant(1)) * (x - Poly::constant(1)) * (x + Poly::constant(1));
  CHECK(squarefree_part(sq) == make_poly({-1, 0, 1}));
  CHECK(squarefree_part(f) == f);
}

TEST_CASE("sturm chains count real roots exactly") {
  Poly two_roots = make_poly({Rational(-3, 4), 0, 1});
  CHECK(count_roots(two_roots) == 2);
  CHECK(count_roots(make_poly({1, 0, 1})) == 0);
  CHECK(count_roots(two_roots, Interval(0, 1)) == 1);
  CHECK(count_roots(two_roots, Interval(-1, 1)) == 2);

  // A repeated root counts once: the chain works on the squarefree part.
  Poly x = Poly::x();
  Poly rep = (x - Poly::constant(1)) * (x - Poly::constant(1));
  CHECK(count_roots(rep) == 1);

  // Endpoint hitting a root is a contract violation, not a silent miscount.
  Poly pm1 = make_poly({-1, 0, 1});
  CHECK_THROWS_AS(count_roots(pm1, Interval(1, 2)), ContractError);

  CHECK(root_bound(two_roots) == 2);
  CHECK_THROWS_AS(sturm_chain(Poly()), ContractError);
}

TEST_CASE("root isolation and refinement") {
  Poly x = Poly::x();
  Poly cubic = (x - Poly::constant(1)) * (x - Poly::constant(2)) * (x - Poly::constant(3));
  std::vector<Interval> ivs = isolate_roots(cubic);
  REQUIRE(ivs.size() == 3);
  CHECK(ivs[0].contains(1));
  CHECK(ivs[1].contains(2));
  CHECK(ivs[2].contains(3));
  CHECK(ivs[0].hi <= ivs[1].lo);
  CHECK(ivs[1].hi <= ivs[2].lo);

  CHECK(isolate_roots(make_poly({1, 0, 1})).empty());

  Poly p = make_poly({-3, 0, 1});  // roots at +-sqrt(3)
  Interval iv = refine_root(p, Interval(1, 2), Rational(1, 10000));
  CHECK(iv.width() <= Rational(1, 10000));
  CHECK(p(iv.lo) < 0);
  CHECK(p(iv.hi) > 0);

  // Midpoint of (0,2) is the root itself; refinement must sidestep it.
  Poly pm1 = make_poly({-1, 0, 1});
  Interval hit = refine_root(pm1, Interval(0, 2), Rational(1, 100));
  CHECK(hit.width() <= Rational(1, 100));
  CHECK(hit.contains(1));
  CHECK(pm1(hit.lo) != 0);
  CHECK(pm1(hit.hi) != 0);
}

TEST_CASE("multi-index lattice") {
  MultiIndex n({2, 1});
  CHECK(n.r() == 2);
  CHECK(n.length() == 3);
  CHECK(n[0] == 2);
  CHECK(n.plus(1) == MultiIndex({2, 2}));
  REQUIRE(n.minus(1).has_value());
  CHECK(*n.minus(1) == MultiIndex({2, 0}));
  CHECK_FALSE(MultiIndex({2, 0}).minus(1).has_value());
  CHECK(to_string(n) == "(2,1)");
  CHECK(MultiIndex::zeros(3).length() == 0);

  CHECK_THROWS_AS(MultiIndex({1, -1}), ContractError);
  CHECK_THROWS_AS(MultiIndex(std::vector<long>{}), ContractError);

  std::vector<MultiIndex> below = lattice_below(2, 2);
  REQUIRE(below.size() == 6);
  CHECK(below[0] == MultiIndex({0, 0}));
  CHECK(below[1] == MultiIndex({1, 0}));
  CHECK(below[2] == MultiIndex({0, 1}));
  CHECK(below[3] == MultiIndex({2, 0}));
  CHECK(below[4] == MultiIndex({1, 1}));
  CHECK(below[5] == MultiIndex({0, 2}));
}

TEST_CASE("combinatorial numbers") {
  CHECK(factorial(5) == 120);
  CHECK(factorial(0) == 1);
  CHECK(binomial(5L, 2L) == 10);
  CHECK(binomial(3L, 5L) == 0);
  CHECK(binomial(5L, -1L) == 0);
  CHECK(binomial(Rational(1, 2), 2) == Rational(-1, 8));
  CHECK(binomial(Rational(1, 2), 0) == 1);
  CHECK(pochhammer(Rational(1, 2), 3) == Rational(15, 8));
  CHECK(pochhammer(Rational(5), 0) == 1);
  CHECK(falling(Rational(4), 2) == 12);
  CHECK(falling(Rational(4), 5) == 0);
  CHECK(rational_pow(Rational(2, 3), 3) == Rational(8, 27));
  CHECK(rational_pow(Rational(0), 0) == 1);

  auto s2 = stirling2_table(4);
  REQUIRE(s2.size() == 5);
  CHECK(s2[4] == std::vector<Integer>{0, 1, 7, 6, 1});
  CHECK(s2[0] == std::vector<Integer>{1});

  CHECK(hermite_classical(0) == Poly::constant(1));
  CHECK(hermite_classical(3) == Poly(std::vector<Rational>{0, -12, 0, 8}));
  CHECK(pochhammer_poly(Rational(1), 2) == Poly(std::vector<Rational>{2, 3, 1}));
  CHECK(pochhammer_poly(Rational(0), 0) == Poly::constant(1));
  CHECK(neg_x_pochhammer(2) == Poly(std::vector<Rational>{0, -1, 1}));
}
