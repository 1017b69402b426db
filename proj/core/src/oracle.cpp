#include "mopoly/oracle.hpp"

#include "mopoly/error.hpp"

namespace mopoly {

Rational moment_integral(const Poly& P, const std::vector<Rational>& moments,
                         long shift) {
  if (shift < 0) throw ContractError("moment_integral: negative power shift");
  if (P.is_zero()) return Rational(0);
  if (static_cast<long>(moments.size()) <= P.degree() + shift)
    throw ContractError("moment_integral: moment table too short");
  Rational acc(0);
  for (int i = 0; i <= P.degree(); ++i)
    acc += P.coeff(i) * moments[static_cast<size_t>(i + shift)];
  return acc;
}

MomentMatrix moment_matrix(const FamilySpec& spec, const MultiIndex& n) {
  const long d = n.length();
  MomentMatrix out;
  for (int j = 0; j < n.r(); ++j) {
    if (n[j] == 0) continue;
    auto moments = normalized_moments(spec, j, n[j] - 1 + d);
    for (long k = 0; k < n[j]; ++k) {
      std::vector<Rational> row(static_cast<size_t>(d));
      for (long i = 0; i < d; ++i)
        row[static_cast<size_t>(i)] = moments[static_cast<size_t>(k + i)];
      out.rows.push_back(std::move(row));
      out.rhs.push_back(-moments[static_cast<size_t>(k + d)]);
    }
  }
  return out;
}

namespace {

// Exact Gaussian elimination; returns false when the matrix is singular.
bool eliminate(std::vector<std::vector<Rational>>& m, std::vector<Rational>& rhs,
               std::vector<Rational>* solution) {
  const size_t dim = m.size();
  for (size_t col = 0; col < dim; ++col) {
    size_t pivot = col;
    while (pivot < dim && m[pivot][col] == 0) ++pivot;
    if (pivot == dim) return false;
    std::swap(m[pivot], m[col]);
    std::swap(rhs[pivot], rhs[col]);
    for (size_t row = 0; row < dim; ++row) {
      if (row == col || m[row][col] == 0) continue;
      Rational factor = m[row][col] / m[col][col];
      for (size_t i = col; i < dim; ++i) m[row][i] -= factor * m[col][i];
      rhs[row] -= factor * rhs[col];
    }
  }
  if (solution) {
    solution->resize(dim);
    for (size_t i = 0; i < dim; ++i) (*solution)[i] = rhs[i] / m[i][i];
  }
  return true;
}

}  // namespace

Poly solve_from_moments(const FamilySpec& spec, const MultiIndex& n) {
  const long d = n.length();
  if (d == 0) return Poly::constant(1);
  MomentMatrix system = moment_matrix(spec, n);
  std::vector<Rational> coeffs;
  if (!eliminate(system.rows, system.rhs, &coeffs))
    throw NotNormalError("index " + to_string(n) +
                         " is not normal: moment system is singular");
  coeffs.push_back(Rational(1));
  return Poly(std::move(coeffs));
}

bool verify_orthogonality(const FamilySpec& spec, const MultiIndex& n,
                          const Poly& P) {
  for (int j = 0; j < n.r(); ++j) {
    if (n[j] == 0) continue;
    auto moments = normalized_moments(spec, j, n[j] - 1 + std::max(P.degree(), 0));
    for (long k = 0; k < n[j]; ++k)
      if (moment_integral(P, moments, k) != 0) return false;
  }
  return true;
}

Rational a_from_integrals(const FamilySpec& spec, const MultiIndex& n, int j,
                          const Poly& P_n, const Poly& P_n_minus_ej) {
  if (j < 0 || j >= n.r()) throw ContractError("a_from_integrals: bad direction");
  if (n[j] < 1) throw ContractError("a_from_integrals: requires n_j >= 1");
  auto moments =
      normalized_moments(spec, j, n[j] + std::max(P_n.degree(), 0));
  Rational numerator = moment_integral(P_n, moments, n[j]);
  Rational denominator = moment_integral(P_n_minus_ej, moments, n[j] - 1);
  if (denominator == 0)
    throw NotNormalError("a_from_integrals: vanishing integral at " +
                         to_string(n) + " (normality failure)");
  return numerator / denominator;
}

Rational b_from_polynomials(const Poly& P_n, const Poly& P_n_plus_ek) {
  if (P_n.is_zero() || !P_n.is_monic() || !P_n_plus_ek.is_monic())
    throw ContractError("b_from_polynomials: inputs must be monic");
  const int d = P_n.degree();
  if (P_n_plus_ek.degree() != d + 1)
    throw ContractError("b_from_polynomials: degrees must differ by one");
  // Coefficient of x^d in x P_n - P_{n+e_k}.
  return P_n.coeff(d - 1) - P_n_plus_ek.coeff(d);
}

bool check_normality(const FamilySpec& spec, const MultiIndex& n) {
  if (n.length() == 0) return true;
  MomentMatrix system = moment_matrix(spec, n);
  return eliminate(system.rows, system.rhs, nullptr);
}

}  // namespace mopoly
