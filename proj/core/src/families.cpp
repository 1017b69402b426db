#include "mopoly/families.hpp"

#include <sstream>

#include "mopoly/error.hpp"
#include "mopoly/numbers.hpp"

namespace mopoly {

namespace {

bool is_integer(const Rational& q) { return q.get_den() == 1; }

std::string join(const std::vector<Rational>& values) {
  std::ostringstream out;
  for (size_t i = 0; i < values.size(); ++i) {
    if (i) out << ",";
    out << to_string(values[i]);
  }
  return out.str();
}

void check_distinct(const std::vector<Rational>& values, const std::string& name,
                    std::vector<std::string>& out) {
  for (size_t i = 0; i < values.size(); ++i)
    for (size_t j = i + 1; j < values.size(); ++j)
      if (values[i] == values[j])
        out.push_back(name + " must be pairwise distinct: entries " +
                      std::to_string(i + 1) + " and " + std::to_string(j + 1) +
                      " are both " + to_string(values[i]));
}

void check_noninteger_diffs(const std::vector<Rational>& values,
                            const std::string& name,
                            std::vector<std::string>& out) {
  for (size_t i = 0; i < values.size(); ++i)
    for (size_t j = i + 1; j < values.size(); ++j)
      if (is_integer(values[i] - values[j]))
        out.push_back(name + " differences must not be integers: entries " +
                      std::to_string(i + 1) + " and " + std::to_string(j + 1) +
                      " differ by " + to_string(values[i] - values[j]));
}

// Iterates every vector k with 0 <= k_j <= n_j.
template <typename F>
void for_each_sub(const MultiIndex& n, F&& f) {
  std::vector<long> k(static_cast<size_t>(n.r()), 0);
  while (true) {
    f(k);
    int j = 0;
    while (j < n.r() && k[static_cast<size_t>(j)] == n[j]) {
      k[static_cast<size_t>(j)] = 0;
      ++j;
    }
    if (j == n.r()) break;
    ++k[static_cast<size_t>(j)];
  }
}

long sum_of(const std::vector<long>& k) {
  long s = 0;
  for (long v : k) s += v;
  return s;
}

int parity_sign(long e) { return (e % 2 == 0) ? 1 : -1; }

// Shared by the first-kind Meixner family and the Krawtchouk reduction to it
// (beta = -N, c_i = p_i/(p_i - 1)); no parameter validation here.
NNCoefficients meixner_first_nn_raw(const Rational& beta,
                                    const std::vector<Rational>& c,
                                    const MultiIndex& n, int k) {
  const int r = n.r();
  for (const Rational& ci : c)
    if (ci == 1)
      throw DomainError("first-kind Meixner coefficients: c_i = 1 divides by zero");
  NNCoefficients out;
  Rational b = (Rational(n.length()) + beta) * c[static_cast<size_t>(k)] /
               (1 - c[static_cast<size_t>(k)]);
  for (int i = 0; i < r; ++i)
    b += Rational(n[i]) / (1 - c[static_cast<size_t>(i)]);
  out.b = b;
  out.a.assign(static_cast<size_t>(r), Rational(0));
  for (int j = 0; j < r; ++j) {
    if (n[j] == 0) continue;
    const Rational& cj = c[static_cast<size_t>(j)];
    out.a[static_cast<size_t>(j)] = cj * Rational(n[j]) *
                                    (beta + Rational(n.length()) - 1) /
                                    rational_pow(1 - cj, 2);
  }
  return out;
}

Poly meixner_first_explicit_raw(const Rational& beta,
                                const std::vector<Rational>& c,
                                const MultiIndex& n) {
  for (const Rational& ci : c)
    if (ci == 1)
      throw DomainError("first-kind Meixner expansion: c_i = 1 divides by zero");
  const long d = n.length();
  Poly sum;
  for_each_sub(n, [&](const std::vector<long>& k) {
    const long kl = sum_of(k);
    Rational scalar(1);
    for (int j = 0; j < n.r(); ++j) {
      const Rational& cj = c[static_cast<size_t>(j)];
      scalar *= Rational(binomial(n[j], k[static_cast<size_t>(j)]));
      scalar *= rational_pow(cj, n[j] - k[static_cast<size_t>(j)]) /
                rational_pow(cj - 1, n[j]);
    }
    sum += scalar * (neg_x_pochhammer(kl) * pochhammer_poly(beta, d - kl));
  });
  return sum;
}

std::vector<Rational> meixner_kind_moments(const Rational& beta,
                                           const Rational& c, long K) {
  // Factorial moments (beta)_k (c/(1-c))^k of the negative binomial weight,
  // converted to power moments by second-kind Stirling numbers.
  if (c == 1) throw DomainError("negative binomial moments: c = 1 divides by zero");
  auto stirling = stirling2_table(K);
  Rational ratio = c / (1 - c);
  std::vector<Rational> factorial_moments(static_cast<size_t>(K) + 1);
  for (long i = 0; i <= K; ++i)
    factorial_moments[static_cast<size_t>(i)] =
        pochhammer(beta, i) * rational_pow(ratio, i);
  std::vector<Rational> m(static_cast<size_t>(K) + 1, Rational(0));
  for (long t = 0; t <= K; ++t)
    for (long i = 0; i <= t; ++i)
      m[static_cast<size_t>(t)] +=
          Rational(stirling[static_cast<size_t>(t)][static_cast<size_t>(i)]) *
          factorial_moments[static_cast<size_t>(i)];
  return m;
}

std::vector<Rational> krawtchouk_meixner_params(const Krawtchouk& f) {
  std::vector<Rational> c;
  c.reserve(f.p.size());
  for (const Rational& p : f.p) c.push_back(p / (p - 1));
  return c;
}

void require_direction(const MultiIndex& n, int k) {
  if (k < 0 || k >= n.r())
    throw DomainError("direction index out of range for r = " +
                      std::to_string(n.r()));
}

void require_arity(const FamilySpec& spec, const MultiIndex& n) {
  if (n.r() != num_measures(spec))
    throw DomainError("multi-index has " + std::to_string(n.r()) +
                      " components, family has " +
                      std::to_string(num_measures(spec)));
}

}  // namespace

int num_measures(const FamilySpec& spec) {
  return std::visit(
      [](const auto& f) -> int {
        using T = std::decay_t<decltype(f)>;
        if constexpr (std::is_same_v<T, Hermite>)
          return static_cast<int>(f.c.size());
        else if constexpr (std::is_same_v<T, Charlier>)
          return static_cast<int>(f.a.size());
        else if constexpr (std::is_same_v<T, MeixnerFirst>)
          return static_cast<int>(f.c.size());
        else if constexpr (std::is_same_v<T, Krawtchouk>)
          return static_cast<int>(f.p.size());
        else if constexpr (std::is_same_v<T, LaguerreSecond>)
          return static_cast<int>(f.c.size());
        else if constexpr (std::is_same_v<T, LaguerreFirst>)
          return static_cast<int>(f.alpha.size());
        else
          return static_cast<int>(f.beta.size());
      },
      spec);
}

std::string family_name(const FamilySpec& spec) {
  return std::visit(
      [](const auto& f) -> std::string {
        using T = std::decay_t<decltype(f)>;
        if constexpr (std::is_same_v<T, Hermite>) return "hermite";
        else if constexpr (std::is_same_v<T, Charlier>) return "charlier";
        else if constexpr (std::is_same_v<T, MeixnerFirst>) return "meixner1";
        else if constexpr (std::is_same_v<T, Krawtchouk>) return "krawtchouk";
        else if constexpr (std::is_same_v<T, LaguerreSecond>) return "laguerre2";
        else if constexpr (std::is_same_v<T, LaguerreFirst>) return "laguerre1";
        else return "meixner2";
      },
      spec);
}

std::string params_string(const FamilySpec& spec) {
  return std::visit(
      [](const auto& f) -> std::string {
        using T = std::decay_t<decltype(f)>;
        if constexpr (std::is_same_v<T, Hermite>) {
          return "c=" + join(f.c);
        } else if constexpr (std::is_same_v<T, Charlier>) {
          return "a=" + join(f.a);
        } else if constexpr (std::is_same_v<T, MeixnerFirst>) {
          return "beta=" + to_string(f.beta) + " c=" + join(f.c);
        } else if constexpr (std::is_same_v<T, Krawtchouk>) {
          return "p=" + join(f.p) + " N=" + std::to_string(f.N);
        } else if constexpr (std::is_same_v<T, LaguerreSecond>) {
          return "alpha=" + to_string(f.alpha) + " c=" + join(f.c);
        } else if constexpr (std::is_same_v<T, LaguerreFirst>) {
          return "alpha=" + join(f.alpha);
        } else {
          return "c=" + to_string(f.c) + " beta=" + join(f.beta);
        }
      },
      spec);
}

std::vector<std::string> validate(const FamilySpec& spec) {
  std::vector<std::string> out;
  std::visit(
      [&out](const auto& f) {
        using T = std::decay_t<decltype(f)>;
        if constexpr (std::is_same_v<T, Hermite>) {
          if (f.c.empty()) out.push_back("c must have at least one entry");
          check_distinct(f.c, "c", out);
        } else if constexpr (std::is_same_v<T, Charlier>) {
          if (f.a.empty()) out.push_back("a must have at least one entry");
          for (size_t i = 0; i < f.a.size(); ++i)
            if (f.a[i] <= 0)
              out.push_back("a must be positive: entry " + std::to_string(i + 1) +
                            " is " + to_string(f.a[i]));
          check_distinct(f.a, "a", out);
        } else if constexpr (std::is_same_v<T, MeixnerFirst>) {
          if (f.c.empty()) out.push_back("c must have at least one entry");
          if (f.beta <= 0)
            out.push_back("beta must be positive, got " + to_string(f.beta));
          for (size_t i = 0; i < f.c.size(); ++i)
            if (f.c[i] <= 0 || f.c[i] >= 1)
              out.push_back("c must lie in (0,1): entry " + std::to_string(i + 1) +
                            " is " + to_string(f.c[i]));
          check_distinct(f.c, "c", out);
        } else if constexpr (std::is_same_v<T, Krawtchouk>) {
          if (f.p.empty()) out.push_back("p must have at least one entry");
          if (f.N < 1)
            out.push_back("N must be a positive integer, got " +
                          std::to_string(f.N));
          for (size_t i = 0; i < f.p.size(); ++i)
            if (f.p[i] <= 0 || f.p[i] >= 1)
              out.push_back("p must lie in (0,1): entry " + std::to_string(i + 1) +
                            " is " + to_string(f.p[i]));
          check_distinct(f.p, "p", out);
        } else if constexpr (std::is_same_v<T, LaguerreSecond>) {
          if (f.c.empty()) out.push_back("c must have at least one entry");
          if (f.alpha <= -1)
            out.push_back("alpha must exceed -1, got " + to_string(f.alpha));
          for (size_t i = 0; i < f.c.size(); ++i)
            if (f.c[i] <= 0)
              out.push_back("c must be positive: entry " + std::to_string(i + 1) +
                            " is " + to_string(f.c[i]));
          check_distinct(f.c, "c", out);
        } else if constexpr (std::is_same_v<T, LaguerreFirst>) {
          if (f.alpha.empty()) out.push_back("alpha must have at least one entry");
          for (size_t i = 0; i < f.alpha.size(); ++i)
            if (f.alpha[i] <= -1)
              out.push_back("alpha must exceed -1: entry " + std::to_string(i + 1) +
                            " is " + to_string(f.alpha[i]));
          check_noninteger_diffs(f.alpha, "alpha", out);
        } else {
          if (f.beta.empty()) out.push_back("beta must have at least one entry");
          if (f.c <= 0 || f.c >= 1)
            out.push_back("c must lie in (0,1), got " + to_string(f.c));
          for (size_t i = 0; i < f.beta.size(); ++i)
            if (f.beta[i] <= 0)
              out.push_back("beta must be positive: entry " +
                            std::to_string(i + 1) + " is " + to_string(f.beta[i]));
          check_noninteger_diffs(f.beta, "beta", out);
        }
      },
      spec);
  return out;
}

NNCoefficients nn_coefficients(const FamilySpec& spec, const MultiIndex& n, int k) {
  require_arity(spec, n);
  require_direction(n, k);
  const int r = n.r();
  const long len = n.length();
  NNCoefficients out;
  out.a.assign(static_cast<size_t>(r), Rational(0));

  if (const auto* f = std::get_if<Hermite>(&spec)) {
    out.b = f->c[static_cast<size_t>(k)] / 2;
    for (int j = 0; j < r; ++j) out.a[static_cast<size_t>(j)] = Rational(n[j]) / 2;
    return out;
  }
  if (const auto* f = std::get_if<Charlier>(&spec)) {
    out.b = f->a[static_cast<size_t>(k)] + len;
    for (int j = 0; j < r; ++j)
      out.a[static_cast<size_t>(j)] = f->a[static_cast<size_t>(j)] * Rational(n[j]);
    return out;
  }
  if (const auto* f = std::get_if<MeixnerFirst>(&spec)) {
    return meixner_first_nn_raw(f->beta, f->c, n, k);
  }
  if (const auto* f = std::get_if<Krawtchouk>(&spec)) {
    // The recurrence advances to degree |n| + 1, which must stay within the
    // finite binomial weight's range.
    if (len + 1 > f->N)
      throw DomainError("Krawtchouk recurrence at |n| = " + std::to_string(len) +
                        " would exceed N = " + std::to_string(f->N));
    Rational b = (Rational(f->N) - len) * f->p[static_cast<size_t>(k)];
    for (int i = 0; i < r; ++i)
      b += Rational(n[i]) * (1 - f->p[static_cast<size_t>(i)]);
    out.b = b;
    for (int j = 0; j < r; ++j) {
      if (n[j] == 0) continue;
      const Rational& pj = f->p[static_cast<size_t>(j)];
      if (pj == 1) throw DomainError("Krawtchouk coefficients: p_j = 1 divides by zero");
      out.a[static_cast<size_t>(j)] =
          (pj / (pj - 1)) * Rational(n[j]) * (Rational(len) - f->N - 1) /
          rational_pow(Rational(-1) / (pj - 1), 2);
    }
    return out;
  }
  if (const auto* f = std::get_if<LaguerreSecond>(&spec)) {
    for (const Rational& c : f->c)
      if (c == 0)
        throw DomainError("second-kind Laguerre coefficients: c_j = 0 divides by zero");
    Rational b = (Rational(len) + 1 + f->alpha) / f->c[static_cast<size_t>(k)];
    for (int j = 0; j < r; ++j)
      b += Rational(n[j]) / f->c[static_cast<size_t>(j)];
    out.b = b;
    for (int j = 0; j < r; ++j)
      out.a[static_cast<size_t>(j)] =
          Rational(n[j]) / rational_pow(f->c[static_cast<size_t>(j)], 2) *
          (Rational(len) + f->alpha);
    return out;
  }
  if (const auto* f = std::get_if<LaguerreFirst>(&spec)) {
    out.b = Rational(len) + 1 + n[k] + f->alpha[static_cast<size_t>(k)];
    for (int j = 0; j < r; ++j) {
      if (n[j] == 0) continue;
      const Rational& aj = f->alpha[static_cast<size_t>(j)];
      Rational prod = Rational(n[j]) * (Rational(n[j]) + aj);
      for (int i = 0; i < r; ++i) {
        if (i == j) continue;
        const Rational& ai = f->alpha[static_cast<size_t>(i)];
        Rational den = Rational(n[i]) + ai - n[j] - aj;
        if (den == 0)
          throw DomainError(
              "first-kind Laguerre coefficients: zero denominator n_i + alpha_i "
              "- n_j - alpha_j (parameters must have non-integer differences)");
        prod *= (ai - n[j] - aj) / den;
      }
      out.a[static_cast<size_t>(j)] = prod;
    }
    return out;
  }
  const auto& f = std::get<MeixnerSecond>(spec);
  if (f.c == 1)
    throw DomainError("second-kind Meixner coefficients: c = 1 divides by zero");
  out.b = Rational(len) / (1 - f.c) +
          (Rational(n[k]) + f.beta[static_cast<size_t>(k)]) * f.c / (1 - f.c);
  for (int j = 0; j < r; ++j) {
    if (n[j] == 0) continue;
    const Rational& bj = f.beta[static_cast<size_t>(j)];
    Rational prod = f.c * Rational(n[j]) * (bj + n[j] - 1) / rational_pow(1 - f.c, 2);
    for (int i = 0; i < r; ++i) {
      if (i == j) continue;
      const Rational& bi = f.beta[static_cast<size_t>(i)];
      Rational den = Rational(n[i]) + bi - n[j] - bj;
      if (den == 0)
        throw DomainError(
            "second-kind Meixner coefficients: zero denominator n_i + beta_i "
            "- n_j - beta_j (parameters must have non-integer differences)");
      prod *= (bi - n[j] - bj) / den;
    }
    out.a[static_cast<size_t>(j)] = prod;
  }
  return out;
}

Poly explicit_polynomial(const FamilySpec& spec, const MultiIndex& n) {
  require_arity(spec, n);
  const long d = n.length();

  if (const auto* f = std::get_if<Hermite>(&spec)) {
    std::vector<Poly> hermite(static_cast<size_t>(d) + 1);
    for (long m = 0; m <= d; ++m) hermite[static_cast<size_t>(m)] = hermite_classical(m);
    Poly sum;
    for_each_sub(n, [&](const std::vector<long>& k) {
      const long kl = sum_of(k);
      Rational scalar(1);
      for (int j = 0; j < n.r(); ++j) {
        scalar *= Rational(binomial(n[j], k[static_cast<size_t>(j)]));
        scalar *= rational_pow(f->c[static_cast<size_t>(j)],
                               n[j] - k[static_cast<size_t>(j)]);
      }
      scalar *= parity_sign(kl);
      sum += scalar * hermite[static_cast<size_t>(kl)];
    });
    Rational prefactor = Rational(parity_sign(d)) / rational_pow(Rational(2), d);
    return prefactor * sum;
  }

  if (const auto* f = std::get_if<Charlier>(&spec)) {
    Poly sum;
    for_each_sub(n, [&](const std::vector<long>& k) {
      const long kl = sum_of(k);
      Rational scalar(1);
      for (int j = 0; j < n.r(); ++j) {
        scalar *= Rational(binomial(n[j], k[static_cast<size_t>(j)]));
        scalar *= rational_pow(-f->a[static_cast<size_t>(j)],
                               n[j] - k[static_cast<size_t>(j)]);
      }
      scalar *= parity_sign(kl);
      sum += scalar * neg_x_pochhammer(kl);
    });
    return sum;
  }

  if (const auto* f = std::get_if<MeixnerFirst>(&spec)) {
    return meixner_first_explicit_raw(f->beta, f->c, n);
  }

  if (const auto* f = std::get_if<Krawtchouk>(&spec)) {
    if (d > f->N)
      throw DomainError("Krawtchouk expansion at |n| = " + std::to_string(d) +
                        " exceeds N = " + std::to_string(f->N));
    return meixner_first_explicit_raw(Rational(-f->N),
                                      krawtchouk_meixner_params(*f), n);
  }

  if (const auto* f = std::get_if<LaguerreSecond>(&spec)) {
    for (const Rational& c : f->c)
      if (c == 0)
        throw DomainError("second-kind Laguerre expansion: c_j = 0 divides by zero");
    Poly sum;
    for_each_sub(n, [&](const std::vector<long>& k) {
      const long kl = sum_of(k);
      Rational scalar(1);
      for (int j = 0; j < n.r(); ++j) {
        scalar *= Rational(binomial(n[j], k[static_cast<size_t>(j)]));
        scalar /= rational_pow(f->c[static_cast<size_t>(j)],
                               k[static_cast<size_t>(j)]);
      }
      scalar *= binomial(Rational(d) + f->alpha, kl);
      scalar *= Rational(factorial(kl));
      scalar *= parity_sign(kl);
      sum += Poly::monomial(static_cast<int>(d - kl), scalar);
    });
    return sum;
  }

  if (const auto* f = std::get_if<LaguerreFirst>(&spec)) {
    // The j-th generalized binomial's top argument couples suffix sums of n
    // and k: (sum_{i >= j} n_i) - (sum_{i > j} k_i) + alpha_j, matching the
    // printed pattern from C(n_r + alpha_r, k_r) down to
    // C(|n| - |k| + k_1 + alpha_1, k_1).
    Poly sum;
    for_each_sub(n, [&](const std::vector<long>& k) {
      const long kl = sum_of(k);
      Rational scalar(1);
      long n_suffix = 0;
      long k_suffix = 0;
      for (int j = n.r() - 1; j >= 0; --j) {
        n_suffix += n[j];
        scalar *= Rational(binomial(n[j], k[static_cast<size_t>(j)]));
        scalar *= binomial(Rational(n_suffix - k_suffix) +
                               f->alpha[static_cast<size_t>(j)],
                           k[static_cast<size_t>(j)]);
        scalar *= Rational(factorial(k[static_cast<size_t>(j)]));
        k_suffix += k[static_cast<size_t>(j)];
      }
      scalar *= parity_sign(kl);
      sum += Poly::monomial(static_cast<int>(d - kl), scalar);
    });
    return sum;
  }

  const auto& f = std::get<MeixnerSecond>(spec);
  if (f.c == 1)
    throw DomainError("second-kind Meixner expansion: c = 1 divides by zero");
  Poly sum;
  for_each_sub(n, [&](const std::vector<long>& k) {
    const long kl = sum_of(k);
    Rational scalar(1);
    for (int j = 0; j < n.r(); ++j)
      scalar *= Rational(binomial(n[j], k[static_cast<size_t>(j)]));
    scalar *= rational_pow(f.c, d - kl) / rational_pow(f.c - 1, d);
    Poly term = Poly::constant(scalar);
    long k_prefix = 0;
    for (int j = 0; j < n.r(); ++j) {
      term *= pochhammer_poly(f.beta[static_cast<size_t>(j)] - k_prefix,
                              n[j] - k[static_cast<size_t>(j)]);
      k_prefix += k[static_cast<size_t>(j)];
    }
    term *= neg_x_pochhammer(kl);
    sum += term;
  });
  return sum;
}

std::vector<Rational> normalized_moments(const FamilySpec& spec, int j, long K) {
  if (j < 0 || j >= num_measures(spec))
    throw DomainError("measure index out of range");
  if (K < 0) throw ContractError("normalized_moments: negative bound");

  if (const auto* f = std::get_if<Hermite>(&spec)) {
    // Gaussian with mean c_j/2 and variance 1/2.
    const Rational mean = f->c[static_cast<size_t>(j)] / 2;
    std::vector<Rational> m(static_cast<size_t>(K) + 1);
    m[0] = 1;
    if (K >= 1) m[1] = mean;
    for (long t = 1; t < K; ++t)
      m[static_cast<size_t>(t) + 1] =
          mean * m[static_cast<size_t>(t)] +
          Rational(t) / 2 * m[static_cast<size_t>(t) - 1];
    return m;
  }

  if (const auto* f = std::get_if<Charlier>(&spec)) {
    // Poisson factorial moments are plain powers of the rate.
    auto stirling = stirling2_table(K);
    const Rational& rate = f->a[static_cast<size_t>(j)];
    std::vector<Rational> m(static_cast<size_t>(K) + 1, Rational(0));
    for (long t = 0; t <= K; ++t)
      for (long i = 0; i <= t; ++i)
        m[static_cast<size_t>(t)] +=
            Rational(stirling[static_cast<size_t>(t)][static_cast<size_t>(i)]) *
            rational_pow(rate, i);
    return m;
  }

  if (const auto* f = std::get_if<MeixnerFirst>(&spec)) {
    return meixner_kind_moments(f->beta, f->c[static_cast<size_t>(j)], K);
  }

  if (const auto* f = std::get_if<Krawtchouk>(&spec)) {
    // Binomial factorial moments are falling factorials of N times powers
    // of p.
    auto stirling = stirling2_table(K);
    const Rational& p = f->p[static_cast<size_t>(j)];
    std::vector<Rational> m(static_cast<size_t>(K) + 1, Rational(0));
    for (long t = 0; t <= K; ++t)
      for (long i = 0; i <= t; ++i)
        m[static_cast<size_t>(t)] +=
            Rational(stirling[static_cast<size_t>(t)][static_cast<size_t>(i)]) *
            falling(Rational(f->N), i) * rational_pow(p, i);
    return m;
  }

  if (const auto* f = std::get_if<LaguerreSecond>(&spec)) {
    const Rational& c = f->c[static_cast<size_t>(j)];
    if (c == 0) throw DomainError("second-kind Laguerre moments: c_j = 0");
    std::vector<Rational> m(static_cast<size_t>(K) + 1);
    for (long t = 0; t <= K; ++t)
      m[static_cast<size_t>(t)] = pochhammer(f->alpha + 1, t) / rational_pow(c, t);
    return m;
  }

  if (const auto* f = std::get_if<LaguerreFirst>(&spec)) {
    std::vector<Rational> m(static_cast<size_t>(K) + 1);
    for (long t = 0; t <= K; ++t)
      m[static_cast<size_t>(t)] =
          pochhammer(f->alpha[static_cast<size_t>(j)] + 1, t);
    return m;
  }

  const auto& f = std::get<MeixnerSecond>(spec);
  return meixner_kind_moments(f.beta[static_cast<size_t>(j)], f.c, K);
}

MomentTable moment_table(const FamilySpec& spec, long K) {
  MomentTable table;
  const int r = num_measures(spec);
  table.reserve(static_cast<size_t>(r));
  for (int j = 0; j < r; ++j) table.push_back(normalized_moments(spec, j, K));
  return table;
}

FamilyCoefficients::FamilyCoefficients(FamilySpec spec) : spec_(std::move(spec)) {
  auto violations = validate(spec_);
  if (!violations.empty()) {
    std::string msg = "invalid " + family_name(spec_) + " parameters:";
    for (const auto& v : violations) msg += "\n  " + v;
    throw DomainError(msg);
  }
}

int FamilyCoefficients::r() const { return num_measures(spec_); }

NNCoefficients FamilyCoefficients::nn(const MultiIndex& m, int k) const {
  return nn_coefficients(spec_, m, k);
}

}  // namespace mopoly
