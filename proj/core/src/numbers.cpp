#include "mopoly/numbers.hpp"

#include "mopoly/error.hpp"

namespace mopoly {

Integer factorial(long n) {
  if (n < 0) throw ContractError("factorial: negative argument");
  Integer f;
  mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(n));
  return f;
}

Integer binomial(long n, long m) {
  if (m < 0 || m > n) return 0;
  Integer b;
  mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(n),
               static_cast<unsigned long>(m));
  return b;
}

Rational binomial(const Rational& y, long m) {
  if (m < 0) return Rational(0);
  Rational num(1);
  for (long i = 0; i < m; ++i) num *= y - i;
  return num / Rational(factorial(m));
}

Rational pochhammer(const Rational& y, long m) {
  if (m < 0) throw ContractError("pochhammer: negative length");
  Rational p(1);
  for (long i = 0; i < m; ++i) p *= y + i;
  return p;
}

Rational falling(const Rational& y, long m) {
  if (m < 0) throw ContractError("falling: negative length");
  Rational p(1);
  for (long i = 0; i < m; ++i) p *= y - i;
  return p;
}

Rational rational_pow(const Rational& q, long e) {
  if (e < 0) throw ContractError("rational_pow: negative exponent");
  Rational acc(1);
  Rational base = q;
  long n = e;
  while (n > 0) {
    if (n & 1) acc *= base;
    base *= base;
    n >>= 1;
  }
  return acc;
}

std::vector<std::vector<Integer>> stirling2_table(long max_n) {
  if (max_n < 0) throw ContractError("stirling2_table: negative bound");
  std::vector<std::vector<Integer>> s(static_cast<size_t>(max_n) + 1);
  s[0] = {Integer(1)};
  for (long n = 1; n <= max_n; ++n) {
    auto& row = s[static_cast<size_t>(n)];
    row.assign(static_cast<size_t>(n) + 1, Integer(0));
    const auto& prev = s[static_cast<size_t>(n - 1)];
    for (long k = 1; k <= n; ++k) {
      Integer val = prev[static_cast<size_t>(k - 1)];
      // prev has entries 0..n-1 only.
      if (k <= n - 1) val += k * prev[static_cast<size_t>(k)];
      row[static_cast<size_t>(k)] = val;
    }
  }
  return s;
}

Poly hermite_classical(long m) {
  if (m < 0) throw ContractError("hermite_classical: negative degree");
  Poly h_prev = Poly::constant(1);
  if (m == 0) return h_prev;
  Poly h = Poly::monomial(1, 2);
  for (long i = 1; i < m; ++i) {
    Poly next = Rational(2) * h.times_x() - Rational(2 * i) * h_prev;
    h_prev = std::move(h);
    h = std::move(next);
  }
  return h;
}

Poly pochhammer_poly(const Rational& shift, long m) {
  if (m < 0) throw ContractError("pochhammer_poly: negative length");
  Poly p = Poly::constant(1);
  for (long i = 0; i < m; ++i)
    p *= Poly({shift + i, Rational(1)});
  return p;
}

Poly neg_x_pochhammer(long m) {
  if (m < 0) throw ContractError("neg_x_pochhammer: negative length");
  Poly p = Poly::constant(1);
  for (long i = 0; i < m; ++i)
    p *= Poly({Rational(i), Rational(-1)});
  return p;
}

}  // namespace mopoly
