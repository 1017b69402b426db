#pragma once

#include <vector>

#include "mopoly/poly.hpp"
#include "mopoly/rational.hpp"

namespace mopoly {

Integer factorial(long n);

// Binomial coefficient with integer top; zero when m < 0 or m > n.
Integer binomial(long n, long m);

// Generalized binomial C(y, m) = y (y-1) ... (y-m+1) / m! for rational y.
Rational binomial(const Rational& y, long m);

// Rising factorial (y)_m = y (y+1) ... (y+m-1); empty product is 1.
Rational pochhammer(const Rational& y, long m);

// Falling factorial y (y-1) ... (y-m+1); empty product is 1.
Rational falling(const Rational& y, long m);

// q^e for e >= 0; 0^0 = 1.
Rational rational_pow(const Rational& q, long e);

// Stirling numbers of the second kind S(n, k) for 0 <= k <= n <= max_n.
// table[n][k] counts partitions of an n-set into k blocks.
std::vector<std::vector<Integer>> stirling2_table(long max_n);

// Physicists' Hermite polynomial H_m.
Poly hermite_classical(long m);

// Rising factorial in x shifted by a constant: (x + shift)_m as a polynomial.
Poly pochhammer_poly(const Rational& shift, long m);

// (-x)_m = (-x)(-x+1)...(-x+m-1) as a polynomial in x.
Poly neg_x_pochhammer(long m);

}  // namespace mopoly
