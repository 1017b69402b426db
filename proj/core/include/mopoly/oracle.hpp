#pragma once

#include <vector>

#include "mopoly/families.hpp"
#include "mopoly/multi_index.hpp"
#include "mopoly/poly.hpp"
#include "mopoly/rational.hpp"

namespace mopoly {

// Normalized integral of x^shift * P against the measure whose power moments
// are given: sum_i coeff_i(P) * moments[i + shift]. The table must reach
// deg P + shift.
Rational moment_integral(const Poly& P, const std::vector<Rational>& moments,
                         long shift = 0);

// Linear system expressing the orthogonality conditions on the |n| unknown
// non-leading coefficients of monic P_n: row (j, k) for k = 0..n_j-1 reads
// sum_i u_i m^{(j)}_{k+i} = -m^{(j)}_{k+|n|}.
struct MomentMatrix {
  std::vector<std::vector<Rational>> rows;
  std::vector<Rational> rhs;
};

MomentMatrix moment_matrix(const FamilySpec& spec, const MultiIndex& n);

// Independent construction of P_n by exact Gaussian elimination on the
// moment system. Singular system raises NotNormalError.
Poly solve_from_moments(const FamilySpec& spec, const MultiIndex& n);

// True iff the integral of x^k P against measure j vanishes exactly for
// every j and every k = 0..n_j-1.
bool verify_orthogonality(const FamilySpec& spec, const MultiIndex& n,
                          const Poly& P);

// Recovers a_{n,j} as the quotient of the two bordering integrals:
// (integral of x^{n_j} P_n dmu_j) / (integral of x^{n_j - 1} P_{n-e_j} dmu_j).
// Requires n_j >= 1; a zero denominator raises NotNormalError.
Rational a_from_integrals(const FamilySpec& spec, const MultiIndex& n, int j,
                          const Poly& P_n, const Poly& P_n_minus_ej);

// Recovers b_{n,k} as the coefficient of x^{|n|} in x P_n - P_{n+e_k}; both
// inputs must be monic with degrees d and d + 1.
Rational b_from_polynomials(const Poly& P_n, const Poly& P_n_plus_ek);

// True iff the moment system at n is nonsingular.
bool check_normality(const FamilySpec& spec, const MultiIndex& n);

}  // namespace mopoly
