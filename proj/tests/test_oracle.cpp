#include <vector>

#include "doctest.h"
#include "family_fixtures.hpp"
#include "mopoly/error.hpp"
#include "mopoly/families.hpp"
#include "mopoly/lattice.hpp"
#include "mopoly/multi_index.hpp"
#include "mopoly/oracle.hpp"

using namespace mopoly;

TEST_CASE("moment integrals") {
  std::vector<Rational> poisson2 = {1, 2, 6, 22};  // rate-2 moments
  Poly p(std::vector<Rational>{-1, 1});            // x - 1
  CHECK(moment_integral(p, poisson2) == 1);
  CHECK(moment_integral(p, poisson2, 1) == 4);
  CHECK(moment_integral(Poly(), poisson2) == 0);
  // The table must reach deg P + shift.
  CHECK_THROWS_AS(moment_integral(p, poisson2, 3), ContractError);
}

TEST_CASE("moment solve reproduces the recurrence polynomials") {
  CHECK(solve_from_moments(fixtures::hermite(), MultiIndex({1, 1})) ==
        Poly(std::vector<Rational>{Rational(-3, 4), 0, 1}));
  CHECK(solve_from_moments(fixtures::charlier(), MultiIndex({1, 0})) ==
        Poly(std::vector<Rational>{-1, 1}));
  CHECK(solve_from_moments(fixtures::hermite(), MultiIndex({0, 0})) ==
        Poly::constant(1));
  // A single condition pins the linear polynomial at x - m_1.
  CHECK(solve_from_moments(fixtures::laguerre_second(), MultiIndex({0, 1})) ==
        Poly(std::vector<Rational>{Rational(-3, 4), 1}));

  MomentMatrix system = moment_matrix(fixtures::hermite(), MultiIndex({1, 1}));
  REQUIRE(system.rows.size() == 2);
  CHECK(system.rows[0].size() == 2);
  CHECK(system.rhs.size() == 2);

  for (const FamilySpec& spec : fixtures::all_families()) {
    FamilyCoefficients fam(spec);
    LatticeCache cache(fam);
    for (const MultiIndex& n : lattice_below(2, 3)) {
      INFO(family_name(spec), " at ", to_string(n));
      CHECK(solve_from_moments(spec, n) == cache.at(n));
    }
  }
}

TEST_CASE("orthogonality verdict is exact") {
  FamilySpec spec = fixtures::hermite();
  MultiIndex n({1, 1});
  Poly P = solve_from_moments(spec, n);
  CHECK(verify_orthogonality(spec, n, P));
  CHECK_FALSE(verify_orthogonality(spec, n, P + Poly::constant(Rational(1, 5))));
  // Same polynomial, stronger condition in one direction: fails.
  CHECK_FALSE(verify_orthogonality(spec, MultiIndex({2, 1}), P.times_x()));
}

TEST_CASE("recurrence coefficients recovered from the polynomials") {
  // b as a leading-coefficient difference.
  CHECK(b_from_polynomials(Poly::constant(1),
                           Poly(std::vector<Rational>{Rational(-1, 2), 1})) ==
        Rational(1, 2));
  Poly p(std::vector<Rational>{Rational(-3, 4), 0, 1});
  Poly shifted = (Poly::x() - Poly::constant(5)) * p;
  CHECK(b_from_polynomials(p, shifted) == 5);
  CHECK_THROWS_AS(b_from_polynomials(p, p), ContractError);
  CHECK_THROWS_AS(b_from_polynomials(p * Rational(2), shifted), ContractError);

  // a as a ratio of bordering integrals; must match the closed forms.
  for (const FamilySpec& spec : fixtures::all_families()) {
    FamilyCoefficients fam(spec);
    LatticeCache cache(fam);
    for (const MultiIndex& n : lattice_below(2, 3)) {
      if (n.length() == 0) continue;
      NNCoefficients c = nn_coefficients(spec, n, 0);
      for (int j = 0; j < 2; ++j) {
        auto below = n.minus(j);
        if (!below) continue;
        INFO(family_name(spec), " at ", to_string(n), " j=", j);
        CHECK(a_from_integrals(spec, n, j, cache.at(n), cache.at(*below)) ==
              c.a[static_cast<size_t>(j)]);
      }
      for (int k = 0; k < 2; ++k) {
        INFO(family_name(spec), " at ", to_string(n), " k=", k);
        CHECK(b_from_polynomials(cache.at(n), cache.at(n.plus(k))) ==
              nn_coefficients(spec, n, k).b);
      }
    }
  }

  CHECK_THROWS_AS(a_from_integrals(fixtures::hermite(), MultiIndex({0, 1}), 0,
                                   Poly(std::vector<Rational>{Rational(1, 2), 1}),
                                   Poly::constant(1)),
                  ContractError);
}

TEST_CASE("normality detection on a finite measure") {
  // Three-atom binomial measure: a 4x4 Hankel system is singular, the 3x3 is not.
  FamilySpec small = Krawtchouk{{Rational(1, 3), Rational(2, 3)}, 2};
  CHECK(check_normality(small, MultiIndex({3, 0})));
  CHECK_FALSE(check_normality(small, MultiIndex({4, 0})));
  CHECK_THROWS_AS(solve_from_moments(small, MultiIndex({4, 0})), NotNormalError);

  for (const FamilySpec& spec : fixtures::all_families())
    for (const MultiIndex& n : lattice_below(2, 3))
      CHECK(check_normality(spec, n));
}
