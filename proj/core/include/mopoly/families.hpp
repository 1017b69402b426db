#pragma once

#include <string>
#include <variant>
#include <vector>

#include "mopoly/lattice.hpp"
#include "mopoly/multi_index.hpp"
#include "mopoly/poly.hpp"
#include "mopoly/rational.hpp"

namespace mopoly {

// The seven classical weight families. Parameters are rationals so the whole
// pipeline stays exact; the number of measures r is the parameter list size.

// Gaussian weights e^{-x^2 + c_j x}; c_j distinct.
struct Hermite {
  std::vector<Rational> c;
};

// Poisson weights with rates a_j; a_j distinct, > 0.
struct Charlier {
  std::vector<Rational> a;
};

// Negative-binomial weights, shared shape beta, ratios c_j;
// beta > 0, c_j distinct in (0,1).
struct MeixnerFirst {
  Rational beta;
  std::vector<Rational> c;
};

// Binomial weights on {0, ..., N}; p_j distinct in (0,1), N >= 1.
struct Krawtchouk {
  std::vector<Rational> p;
  long N = 0;
};

// Gamma weights x^alpha e^{-c_j x}; alpha > -1, c_j distinct > 0.
struct LaguerreSecond {
  Rational alpha;
  std::vector<Rational> c;
};

// Gamma weights x^{alpha_j} e^{-x}; alpha_j > -1, pairwise differences
// non-integer.
struct LaguerreFirst {
  std::vector<Rational> alpha;
};

// Negative-binomial weights, shared ratio c, shapes beta_j; 0 < c < 1,
// beta_j > 0, pairwise differences non-integer.
struct MeixnerSecond {
  Rational c;
  std::vector<Rational> beta;
};

using FamilySpec = std::variant<Hermite, Charlier, MeixnerFirst, Krawtchouk,
                                LaguerreSecond, LaguerreFirst, MeixnerSecond>;

int num_measures(const FamilySpec& spec);

// Stable CLI tag: hermite, charlier, meixner1, krawtchouk, laguerre2,
// laguerre1, meixner2.
std::string family_name(const FamilySpec& spec);

// Compact parameter rendering, e.g. "c=1,-1" or "beta=1 c=1/2,1/3".
std::string params_string(const FamilySpec& spec);

// Every violated parameter constraint, in words; empty means valid.
std::vector<std::string> validate(const FamilySpec& spec);

// Closed-form recurrence coefficients at index n, direction k (0-based).
// Requires a valid spec; Krawtchouk additionally requires |n| + 1 <= N since
// the recurrence advances to degree |n| + 1.
NNCoefficients nn_coefficients(const FamilySpec& spec, const MultiIndex& n, int k);

// The explicit finite-sum expansion of P_n, evaluated with symbolic x in
// exact arithmetic. Krawtchouk requires |n| <= N.
Poly explicit_polynomial(const FamilySpec& spec, const MultiIndex& n);

// Normalized power moments m_0, ..., m_K (m_0 = 1) of measure j (0-based).
std::vector<Rational> normalized_moments(const FamilySpec& spec, int j, long K);

// Row j holds normalized_moments(spec, j, K).
using MomentTable = std::vector<std::vector<Rational>>;
MomentTable moment_table(const FamilySpec& spec, long K);

// NNProvider view over a family; construction validates and throws
// DomainError listing every violation.
class FamilyCoefficients : public NNProvider {
 public:
  explicit FamilyCoefficients(FamilySpec spec);

  int r() const override;
  NNCoefficients nn(const MultiIndex& m, int k) const override;
  const FamilySpec& spec() const { return spec_; }

 private:
  FamilySpec spec_;
};

}  // namespace mopoly
