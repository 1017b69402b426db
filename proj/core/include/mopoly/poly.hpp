#ifndef MOPOLY_POLY_HPP
#define MOPOLY_POLY_HPP

#include <string>
#include <vector>

#include "mopoly/rational.hpp"

namespace mopoly {

// Dense univariate polynomial with exact rational coefficients.
// coeff(i) is the coefficient of x^i. The zero polynomial stores no
// coefficients; otherwise the highest-index coefficient is nonzero.
class Poly {
 public:
  Poly() = default;
  explicit Poly(std::vector<Rational> coeffs);

  static Poly constant(Rational value);
  static Poly x();
  static Poly monomial(int degree, Rational coeff);

  // degree() is -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  bool is_monic() const;

  // Zero outside the stored range.
  Rational coeff(int i) const;
  const std::vector<Rational>& coeffs() const { return coeffs_; }
  Rational leading() const;  // nonzero polynomial only

  Rational operator()(const Rational& x) const;  // Horner

  Poly& operator+=(const Poly& rhs);
  Poly& operator-=(const Poly& rhs);
  Poly& operator*=(const Poly& rhs);
  Poly& operator*=(const Rational& s);
  Poly operator-() const;

  Poly times_x() const;  // multiply by x
  Poly derivative() const;

  friend Poly operator*(const Poly& lhs, const Poly& rhs);

  friend bool operator==(const Poly& lhs, const Poly& rhs) {
    return lhs.coeffs_ == rhs.coeffs_;
  }
  friend bool operator!=(const Poly& lhs, const Poly& rhs) {
    return !(lhs == rhs);
  }

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

Poly operator+(Poly lhs, const Poly& rhs);
Poly operator-(Poly lhs, const Poly& rhs);
Poly operator*(const Rational& c, Poly p);
Poly operator*(Poly p, const Rational& c);

struct DivRem {
  Poly quot;
  Poly rem;
};

// Exact long division: p == quot * q + rem with deg(rem) < deg(q).
// Throws ContractError when q is zero.
DivRem divrem(const Poly& p, const Poly& q);

// Monic gcd via the Euclidean algorithm; gcd(p, 0) is p made monic.
Poly gcd(const Poly& p, const Poly& q);

// p with repeated roots collapsed: p / gcd(p, p').
Poly squarefree_part(const Poly& p);

// "x^2 - 3/4" style rendering, highest degree first.
std::string to_string(const Poly& p);

}  // namespace mopoly

#endif
